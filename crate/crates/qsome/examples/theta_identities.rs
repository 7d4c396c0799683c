//! The classical series constructors and a live check of the identities the
//! verification suite relies on.
//!
//! ```bash
//! cargo run -p qsome --example theta_identities
//! ```

use qsome::theta::{self, Sign, ThetaSpec};

fn main() {
    let n = 24;
    println!("phi(q)   = {}", theta::phi(Sign::Plus, n));
    println!("phi(-q)  = {}", theta::phi(Sign::Minus, n));
    println!("psi(q)   = {}", theta::psi(n));
    println!("f(-q)    = {}", theta::euler(1, n));
    println!("lambert  = {}", theta::lambert_odd(n));
    println!();

    let n = 400;

    // phi(-q^2)^2 = phi(q) phi(-q)
    let lhs = theta::phi_power(Sign::Minus, 2, n).pow(2);
    let rhs = theta::phi(Sign::Plus, n).mul(&theta::phi(Sign::Minus, n));
    println!(
        "phi(-q^2)^2 = phi(q) phi(-q)        to order {n}: {}",
        lhs.equal_upto(&rhs, n)
    );

    // phi(q) = phi(q^4) + 2q psi(q^8)
    let shift = qsome::Series::monomial(2, 1, n).unwrap();
    let rhs = &theta::phi_power(Sign::Plus, 4, n) + &shift.mul(&theta::psi_power(8, n));
    println!(
        "phi(q) = phi(q^4) + 2q psi(q^8)     to order {n}: {}",
        theta::phi(Sign::Plus, n).equal_upto(&rhs, n)
    );

    // Jacobi triple product, five instances
    for (sa, a, sb, b, label) in [
        (Sign::Plus, 1, Sign::Plus, 3, "f(q, q^3)"),
        (Sign::Plus, 1, Sign::Plus, 1, "f(q, q)"),
        (Sign::Minus, 1, Sign::Minus, 2, "f(-q, -q^2)"),
        (Sign::Plus, 3, Sign::Plus, 15, "f(q^3, q^15)"),
        (Sign::Minus, 6, Sign::Minus, 30, "f(-q^6, -q^30)"),
    ] {
        let spec = ThetaSpec::new(sa, a, sb, b).unwrap();
        let ok = theta::theta_f(spec, n).equal_upto(&theta::jacobi_triple_product(spec, n), n);
        println!("triple product for {label:<15}    to order {n}: {ok}");
    }

    // the log-derivative lemma, all three expressions
    let ld = theta::phi(Sign::Plus, n).log_derivative().unwrap();
    let lambert = theta::lambert_odd(n).scale(2);
    let quotient = theta::sum_k2_qk2(n)
        .scale(2)
        .div(&theta::phi(Sign::Plus, n))
        .unwrap();
    println!(
        "q dlog phi = 2*lambert = 2*sum/phi  to order {n}: {}",
        ld.equal_upto(&lambert, n) && ld.equal_upto(&quotient, n)
    );

    // psi(q)^2 = psi(q^2) mod 2
    let ok = theta::psi(n)
        .pow(2)
        .congruent_upto(&theta::psi_power(2, n), 2, n);
    println!("psi(q)^2 = psi(q^2) (mod 2)         to order {n}: {ok}");
}
