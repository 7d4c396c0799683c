//! The signed part-sum statistic by four independent routes: brute-force
//! enumeration, the product-times-Lambert generating function, the closed
//! theta form, and the divisor convolution.
//!
//! ```bash
//! cargo run -p qsome --example some_bar_routes
//! ```

use num_bigint::BigInt;
use qsome::partitions;

fn main() {
    let max_n = 24;
    let product = partitions::some_bar_series(max_n);
    let closed = partitions::some_bar_series_closed(max_n);
    let convolution = partitions::some_bar_convolution(max_n);

    println!(
        "{:>2} {:>10} {:>10} {:>10} {:>10}",
        "n", "enum", "product", "closed", "convolution"
    );
    let mut all_agree = true;
    for n in 0..=max_n {
        let oracle = BigInt::from(partitions::some_bar_oracle(n as u64));
        let agree = product.coeff(n) == &oracle
            && closed.coeff(n) == &oracle
            && convolution.coeff(n) == &oracle;
        all_agree &= agree;
        println!(
            "{n:>2} {oracle:>10} {:>10} {:>10} {:>10}{}",
            product.coeff(n),
            closed.coeff(n),
            convolution.coeff(n),
            if agree { "" } else { "   <-- MISMATCH" }
        );
    }
    println!("\nall four routes agree for n <= {max_n}: {all_agree}");

    // far beyond enumeration reach, the series routes still agree exactly
    let order = 1500;
    let a = partitions::some_bar_series(order);
    let b = partitions::some_bar_series_closed(order);
    println!(
        "product route = closed route to order {order}: {}",
        a.equal_upto(&b, order)
    );

    // and every value is nonnegative and even, as the closed form shows
    let ok = (0..=order).all(|n| {
        let c = b.coeff(n);
        c >= &BigInt::from(0) && (c % 2u8) == BigInt::from(0)
    });
    println!("all values nonnegative and even to order {order}: {ok}");
}
