//! Overpartition enumeration and the partition statistics built on it.
//!
//! An overpartition is a partition in which the first occurrence of each
//! distinct part size may be overlined. The depth-first enumeration here is
//! the independent oracle for everything else in the crate: it visits every
//! overpartition of `n` exactly once and the statistic oracles simply sum
//! over the visits. The series routes (generating function, closed theta
//! form, divisor convolution) compute the same numbers at orders far beyond
//! enumeration reach, and the test suite pins the two worlds together.

use crate::series::{ResidueSeries, Series};
use crate::theta::{self, PochSpec, Sign};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Practical bound for the enumeration oracles: the number of overpartitions
/// roughly quadruples every five steps and passes 10^6 near `n = 40`, so
/// callers (and the CLI) stay at or below this.
pub const ENUMERATION_CAP: u64 = 45;

/// A maximal run of equal parts inside an overpartition: `multiplicity`
/// copies of `size`, with the first copy optionally overlined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartGroup {
    pub size: u64,
    pub multiplicity: u64,
    pub overlined: bool,
}

/// An overpartition, stored as part groups with strictly decreasing sizes.
/// At most one part per distinct size carries an overline, so a single flag
/// per group encodes the overline set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overpartition {
    groups: Vec<PartGroup>,
}

impl Overpartition {
    pub fn groups(&self) -> &[PartGroup] {
        &self.groups
    }

    /// The number being partitioned.
    pub fn total(&self) -> u64 {
        self.groups.iter().map(|g| g.size * g.multiplicity).sum()
    }

    pub fn distinct_sizes(&self) -> usize {
        self.groups.len()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for g in &self.groups {
            for i in 0..g.multiplicity {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                if i == 0 && g.overlined {
                    // combining overline on the first occurrence
                    write!(f, "{}\u{0305}", g.size)?;
                } else {
                    write!(f, "{}", g.size)?;
                }
            }
        }
        write!(f, ")")
    }
}

/// Visit every overpartition of `n` exactly once (each underlying partition
/// appears with all `2^(distinct sizes)` overline subsets) and return the
/// total count, i.e. the overpartition number of `n`.
pub fn enumerate_overpartitions<F: FnMut(&Overpartition)>(n: u64, mut visitor: F) -> u64 {
    let mut scratch = Overpartition { groups: Vec::new() };
    let mut count = 0u64;
    descend(n, n, &mut scratch, &mut visitor, &mut count);
    count
}

fn descend<F: FnMut(&Overpartition)>(
    remaining: u64,
    max_size: u64,
    scratch: &mut Overpartition,
    visitor: &mut F,
    count: &mut u64,
) {
    if remaining == 0 {
        *count += 1;
        visitor(scratch);
        return;
    }
    for size in (1..=max_size.min(remaining)).rev() {
        for multiplicity in 1..=remaining / size {
            for overlined in [false, true] {
                scratch.groups.push(PartGroup {
                    size,
                    multiplicity,
                    overlined,
                });
                descend(
                    remaining - size * multiplicity,
                    size - 1,
                    scratch,
                    visitor,
                    count,
                );
                scratch.groups.pop();
            }
        }
    }
}

/// Visit every ordinary partition of `n` (as slices of `(size, multiplicity)`
/// groups with strictly decreasing sizes) and return the partition count.
pub fn enumerate_partitions<F: FnMut(&[(u64, u64)])>(n: u64, mut visitor: F) -> u64 {
    fn walk<F: FnMut(&[(u64, u64)])>(
        remaining: u64,
        max_size: u64,
        acc: &mut Vec<(u64, u64)>,
        visitor: &mut F,
        count: &mut u64,
    ) {
        if remaining == 0 {
            *count += 1;
            visitor(acc);
            return;
        }
        for size in (1..=max_size.min(remaining)).rev() {
            for multiplicity in 1..=remaining / size {
                acc.push((size, multiplicity));
                walk(
                    remaining - size * multiplicity,
                    size - 1,
                    acc,
                    visitor,
                    count,
                );
                acc.pop();
            }
        }
    }
    let mut acc = Vec::new();
    let mut count = 0u64;
    walk(n, n, &mut acc, &mut visitor, &mut count);
    count
}

/// Number of overpartitions of `n`, by enumeration.
pub fn pbar_oracle(n: u64) -> u64 {
    enumerate_overpartitions(n, |_| {})
}

/// Sum of all odd parts minus sum of all even parts over every overpartition
/// of `n`, by enumeration. Overlined and plain parts weigh the same.
pub fn some_bar_oracle(n: u64) -> i64 {
    let mut total = 0i64;
    enumerate_overpartitions(n, |op| {
        for g in op.groups() {
            let w = (g.size * g.multiplicity) as i64;
            total += if g.size % 2 == 1 { w } else { -w };
        }
    });
    total
}

/// `(sum of odd parts, sum of even parts)` over every overpartition of `n`,
/// by enumeration.
pub fn sums_oracle(n: u64) -> (u64, u64) {
    let mut odd = 0u64;
    let mut even = 0u64;
    enumerate_overpartitions(n, |op| {
        for g in op.groups() {
            let w = g.size * g.multiplicity;
            if g.size % 2 == 1 {
                odd += w;
            } else {
                even += w;
            }
        }
    });
    (odd, even)
}

/// Sum of all parts equal to `b` over every overpartition of `n`, by
/// enumeration.
pub fn s_b_oracle(b: u64, n: u64) -> u64 {
    let mut total = 0u64;
    enumerate_overpartitions(n, |op| {
        for g in op.groups() {
            if g.size == b {
                total += g.size * g.multiplicity;
            }
        }
    });
    total
}

/// Sum of all odd parts minus sum of all even parts over the ordinary
/// partitions of `n`, by enumeration.
pub fn some_oracle(n: u64) -> i64 {
    let mut total = 0i64;
    enumerate_partitions(n, |groups| {
        for &(size, multiplicity) in groups {
            let w = (size * multiplicity) as i64;
            total += if size % 2 == 1 { w } else { -w };
        }
    });
    total
}

/// The signed divisor sum: over the divisors `d` of `a` with odd cofactor
/// `a/d`, odd `d` count positively and even `d` negatively. Zero at `a = 0`
/// (empty divisor set), which makes the convolution below well-defined at
/// the `k = n` term.
pub fn sigma_oe(a: u64) -> i64 {
    let mut total = 0i64;
    for d in 1..=a {
        if a.is_multiple_of(d) && (a / d) % 2 == 1 {
            total += if d % 2 == 1 { d as i64 } else { -(d as i64) };
        }
    }
    total
}

/// Generating function of overpartition counts,
/// `(-q; q)_inf / (q; q)_inf`, truncated at `order`.
pub fn overline_p_series(order: usize) -> Series {
    let numerator = theta::pochhammer(poch(Sign::Minus), order);
    let denominator = theta::pochhammer(poch(Sign::Plus), order);
    numerator.div(&denominator).expect("unit constant term")
}

/// [`overline_p_series`] mod `modulus`.
pub fn overline_p_series_mod(order: usize, modulus: u64) -> ResidueSeries {
    let numerator = theta::pochhammer_mod(poch(Sign::Minus), order, modulus);
    let denominator = theta::pochhammer_mod(poch(Sign::Plus), order, modulus);
    numerator.div(&denominator).expect("unit constant term")
}

fn poch(sign: Sign) -> PochSpec {
    PochSpec::new(sign, 1, 1).expect("valid spec")
}

/// The SOME-bar generating function by its product-times-Lambert form:
/// `2 * (-q;q)_inf/(q;q)_inf * sum_{m>=1} q^(2m-1)/(1+q^(2m-1))^2`.
pub fn some_bar_series(order: usize) -> Series {
    overline_p_series(order)
        .mul(&theta::lambert_odd(order))
        .scale(2)
}

/// [`some_bar_series`] mod `modulus`.
pub fn some_bar_series_mod(order: usize, modulus: u64) -> ResidueSeries {
    overline_p_series_mod(order, modulus)
        .mul(&theta::lambert_odd(order).reduce_mod(modulus))
        .scale(2)
}

/// The SOME-bar generating function by its closed theta form:
/// `2 / phi(-q^2)^2 * sum_{k>=1} k^2 q^(k^2)`.
pub fn some_bar_series_closed(order: usize) -> Series {
    let phi2 = theta::phi_power(Sign::Minus, 2, order);
    phi2.mul(&phi2)
        .inverse()
        .expect("unit constant term")
        .mul(&theta::sum_k2_qk2(order))
        .scale(2)
}

/// [`some_bar_series_closed`] mod `modulus`.
pub fn some_bar_series_closed_mod(order: usize, modulus: u64) -> ResidueSeries {
    let phi2 = theta::phi_power(Sign::Minus, 2, order).reduce_mod(modulus);
    phi2.mul(&phi2)
        .inverse()
        .expect("unit constant term")
        .mul(&theta::sum_k2_qk2(order).reduce_mod(modulus))
        .scale(2)
}

/// The SOME-bar values by the divisor convolution:
/// coefficient `n` is `2 * sum_{k=0..n} pbar(k) * sigma_oe(n-k)`.
pub fn some_bar_convolution(order: usize) -> Series {
    let pbar = overline_p_series(order);
    let sigma: Vec<BigInt> = (0..=order as u64)
        .map(|a| BigInt::from(sigma_oe(a)))
        .collect();
    let coeffs = (0..=order)
        .map(|n| {
            let mut acc = BigInt::zero();
            for k in 0..=n {
                if !sigma[n - k].is_zero() {
                    acc += pbar.coeff(k) * &sigma[n - k];
                }
            }
            acc * 2
        })
        .collect();
    Series::from_coeffs(coeffs)
}

/// Sum of all parts equal to `b` over the overpartitions of `n`, evaluated
/// by the finite formula `2b * sum_k pbar(n - (2k+1) b)` over
/// `0 <= k <= (n-b)/(2b)`; the empty sum (when `n < b`) is 0.
pub fn s_b_formula(b: u64, n: u64) -> BigInt {
    s_b_formula_with(b, n, &overline_p_series(n as usize))
}

/// [`s_b_formula`] against a precomputed overpartition-count series of order
/// at least `n` (the bulk interface: one series, many `(b, n)` queries).
pub fn s_b_formula_with(b: u64, n: u64, pbar: &Series) -> BigInt {
    assert!(b >= 1 && n >= 1, "defined for b >= 1, n >= 1");
    assert!(pbar.order() as u64 >= n, "pbar series too short");
    let mut acc = BigInt::zero();
    if n >= b {
        for k in 0..=(n - b) / (2 * b) {
            acc += pbar.coeff((n - (2 * k + 1) * b) as usize);
        }
    }
    acc * BigInt::from(2 * b)
}

/// Generating function of the ordinary-partition statistic:
/// `1/(q;q)_inf * sum_{m>=1} q^m/(1+q^m)^2`.
pub fn some_series(order: usize) -> Series {
    theta::euler(1, order)
        .inverse()
        .expect("unit constant term")
        .mul(&theta::lambert_all(order))
}

/// [`some_series`] mod `modulus`.
pub fn some_series_mod(order: usize, modulus: u64) -> ResidueSeries {
    theta::euler_mod(1, order, modulus)
        .inverse()
        .expect("unit constant term")
        .mul(&theta::lambert_all(order).reduce_mod(modulus))
}

/// One row of the statistics table. `s_odd`/`s_even` are derived from the
/// add/subtract identities `s_odd + s_even = n * pbar(n)` and
/// `s_odd - s_even = some_bar(n)`, which reach far beyond enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub n: u64,
    pub pbar: BigInt,
    pub some_bar: BigInt,
    pub s_odd: BigInt,
    pub s_even: BigInt,
}

/// Statistics rows for `n = 0..=max_n`, series-derived.
pub fn stat_records(max_n: usize) -> Vec<StatRecord> {
    let pbar = overline_p_series(max_n);
    let some_bar = some_bar_series_closed(max_n);
    (0..=max_n)
        .map(|n| {
            let weighted = BigInt::from(n as u64) * pbar.coeff(n);
            let total = &weighted + some_bar.coeff(n);
            let diff = &weighted - some_bar.coeff(n);
            assert!(
                (&total % 2u8).is_zero(),
                "n*pbar(n) and some_bar(n) must share parity"
            );
            StatRecord {
                n: n as u64,
                pbar: pbar.coeff(n).clone(),
                some_bar: some_bar.coeff(n).clone(),
                s_odd: total / 2,
                s_even: diff / 2,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn enumeration_counts() {
        assert_eq!(pbar_oracle(0), 1);
        assert_eq!(pbar_oracle(2), 4);
        assert_eq!(pbar_oracle(4), 14);
        let expected = [1u64, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(pbar_oracle(n as u64), want, "pbar({n})");
        }
    }

    #[test]
    fn enumeration_lists_n2_exactly() {
        let mut seen = BTreeSet::new();
        enumerate_overpartitions(2, |op| {
            seen.insert(op.to_string());
        });
        let want: BTreeSet<String> = ["(2)", "(2\u{305})", "(1, 1)", "(1\u{305}, 1)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(seen, want);
    }

    #[test]
    fn enumeration_visits_each_once() {
        // 2^(distinct sizes) overline variants per underlying partition
        let mut all = Vec::new();
        enumerate_overpartitions(4, |op| all.push(op.clone()));
        assert_eq!(all.len(), 14);
        let unique: BTreeSet<String> = all.iter().map(|op| op.to_string()).collect();
        assert_eq!(unique.len(), 14);
        assert!(all.iter().all(|op| op.total() == 4));
    }

    #[test]
    fn some_bar_oracle_values() {
        assert_eq!(some_bar_oracle(1), 2);
        assert_eq!(some_bar_oracle(2), 0);
        assert_eq!(some_bar_oracle(3), 8);
        assert_eq!(some_bar_oracle(4), 8);
        let expected = [0i64, 2, 0, 8, 8, 24, 32, 64, 96, 170, 256, 408, 608];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(some_bar_oracle(n as u64), want, "some_bar({n})");
        }
    }

    #[test]
    fn sums_oracle_values() {
        assert_eq!(sums_oracle(0), (0, 0));
        assert_eq!(sums_oracle(2), (4, 4));
        assert_eq!(sums_oracle(3), (16, 8));
        for n in 0..=12u64 {
            let (odd, even) = sums_oracle(n);
            assert_eq!(odd as i64 - even as i64, some_bar_oracle(n));
            assert_eq!(odd + even, n * pbar_oracle(n));
        }
    }

    #[test]
    fn overline_p_series_matches_enumeration() {
        let f = overline_p_series(12);
        assert_eq!(f.coeff(0), &BigInt::from(1));
        for n in 0..=12u64 {
            assert_eq!(
                f.coeff(n as usize),
                &BigInt::from(pbar_oracle(n)),
                "pbar({n})"
            );
        }
        // the classical overpartition congruence at its first instance
        assert_eq!(f.coeff(3) % 8, BigInt::from(0));
    }

    #[test]
    fn some_bar_routes_match_oracle() {
        let n = 14;
        let gf = some_bar_series(n);
        let closed = some_bar_series_closed(n);
        let conv = some_bar_convolution(n);
        for k in 0..=n {
            let want = BigInt::from(some_bar_oracle(k as u64));
            assert_eq!(gf.coeff(k), &want, "product route at {k}");
            assert_eq!(closed.coeff(k), &want, "closed route at {k}");
            assert_eq!(conv.coeff(k), &want, "convolution route at {k}");
        }
    }

    #[test]
    fn some_bar_nonnegative_and_even() {
        let f = some_bar_series_closed(300);
        for k in 0..=300 {
            assert!(f.coeff(k) >= &BigInt::from(0), "negative at {k}");
            assert!((f.coeff(k) % 2u8).is_zero(), "odd at {k}");
        }
    }

    #[test]
    fn sigma_oe_values() {
        assert_eq!(sigma_oe(0), 0);
        assert_eq!(sigma_oe(1), 1);
        assert_eq!(sigma_oe(2), -2);
        assert_eq!(sigma_oe(6), -8);
        let expected = [0, 1, -2, 4, -4, 6, -8, 8, -8, 13, -12, 12, -16];
        for (a, &want) in expected.iter().enumerate() {
            assert_eq!(sigma_oe(a as u64), want, "sigma_oe({a})");
        }
    }

    #[test]
    fn convolution_first_terms() {
        let f = some_bar_convolution(3);
        assert_eq!(f.coeff(1), &BigInt::from(2));
        assert_eq!(f.coeff(2), &BigInt::from(0));
        assert_eq!(f.coeff(3), &BigInt::from(8));
    }

    #[test]
    fn s_b_examples() {
        assert_eq!(s_b_oracle(1, 2), 4);
        assert_eq!(s_b_oracle(2, 4), 16);
        assert_eq!(s_b_oracle(5, 3), 0);
        assert_eq!(s_b_formula(1, 2), BigInt::from(4));
        assert_eq!(s_b_formula(2, 4), BigInt::from(16));
        assert_eq!(s_b_formula(5, 3), BigInt::from(0));
    }

    #[test]
    fn s_b_formula_matches_oracle_and_divisibility() {
        let pbar = overline_p_series(12);
        for b in 1..=5u64 {
            for n in 1..=12u64 {
                let formula = s_b_formula_with(b, n, &pbar);
                assert_eq!(formula, BigInt::from(s_b_oracle(b, n)), "S_{b}({n})");
                assert!((formula % BigInt::from(2 * b)).is_zero(), "2b | S_{b}({n})");
            }
        }
    }

    #[test]
    fn parts_partition_all_of_n() {
        // summing S_b over b = 1..n counts every part once by its size
        for n in 1..=10u64 {
            let total: u64 = (1..=n).map(|b| s_b_oracle(b, n)).sum();
            assert_eq!(total, n * pbar_oracle(n));
        }
    }

    #[test]
    fn some_values_and_congruence() {
        assert_eq!(some_oracle(1), 1);
        assert_eq!(some_oracle(2), 0);
        assert_eq!(some_oracle(3), 5);
        let f = some_series(60);
        let expected = [0i64, 1, 0, 5, 0, 11, 6, 25, 12, 50, 40, 96, 80];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(f.coeff(n), &BigInt::from(want), "SOME({n})");
            if n <= 10 {
                assert_eq!(some_oracle(n as u64), want);
            }
        }
        let mut n = 4;
        while n <= 60 {
            assert!((f.coeff(n) % 5u8).is_zero(), "SOME({n}) mod 5");
            n += 5;
        }
    }

    #[test]
    fn residue_routes_match_exact() {
        let order = 80;
        for &m in &[8u64, 3, 5, 8192] {
            assert_eq!(
                some_bar_series_closed_mod(order, m),
                some_bar_series_closed(order).reduce_mod(m)
            );
            assert_eq!(
                some_bar_series_mod(order, m),
                some_bar_series(order).reduce_mod(m)
            );
            assert_eq!(
                overline_p_series_mod(order, m),
                overline_p_series(order).reduce_mod(m)
            );
            assert_eq!(some_series_mod(order, m), some_series(order).reduce_mod(m));
        }
    }

    #[test]
    fn stat_records_match_enumeration() {
        let records = stat_records(10);
        assert_eq!(records[0].pbar, BigInt::from(1));
        assert_eq!(records[0].s_odd, BigInt::from(0));
        assert_eq!(records[3].s_odd, BigInt::from(16));
        assert_eq!(records[3].s_even, BigInt::from(8));
        for r in &records {
            let (odd, even) = sums_oracle(r.n);
            assert_eq!(r.pbar, BigInt::from(pbar_oracle(r.n)));
            assert_eq!(r.some_bar, BigInt::from(some_bar_oracle(r.n)));
            assert_eq!(r.s_odd, BigInt::from(odd));
            assert_eq!(r.s_even, BigInt::from(even));
        }
    }
}
