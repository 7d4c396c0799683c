//! Tour of the exact series ring: construction, inversion, dissection, and
//! the logarithmic derivative.
//!
//! ```bash
//! cargo run -p qsome --example series_arithmetic
//! ```

use qsome::Series;

fn main() {
    let order = 12;

    // 1/(1-q) expands to the geometric series
    let one_minus_q = &Series::one(order) - &Series::monomial(1, 1, order).unwrap();
    let geometric = one_minus_q.inverse().unwrap();
    println!("1/(1-q)            = {geometric}");

    // the inverse of 1 - 2q + 2q^4 starts with the overpartition counts
    let mut f = Series::one(order);
    f = &f - &Series::monomial(2, 1, order).unwrap();
    f = &f + &Series::monomial(2, 4, order).unwrap();
    println!("1/(1-2q+2q^4)      = {}", f.inverse().unwrap());

    // dissection splits a series along residue classes and renumbers
    let n_qn = Series::from_coeffs((0..=order).map(Into::into).collect());
    println!("sum n q^n          = {n_qn}");
    println!("  even part        = {}", n_qn.dissect(2, 0).unwrap());
    println!("  odd part         = {}", n_qn.dissect(2, 1).unwrap());

    // q d/dq log turns products into sums
    let g = geometric.substitute_power(1).unwrap();
    let product = f.inverse().unwrap().mul(&g);
    let lhs = product.log_derivative().unwrap();
    let rhs = &f.inverse().unwrap().log_derivative().unwrap() + &g.log_derivative().unwrap();
    println!(
        "log-derivative additivity holds: {}",
        lhs.equal_upto(&rhs, order)
    );

    // residue arithmetic mirrors the exact ring
    let reduced = f.inverse().unwrap().reduce_mod(8);
    println!("inverse mod 8      = {:?}", reduced.coeffs());
}
