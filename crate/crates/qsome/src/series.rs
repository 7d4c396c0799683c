//! Exact truncated formal power series over arbitrary-precision integers.
//!
//! A [`Series`] is a dense coefficient vector for a power series in `q`,
//! truncated at an explicit order `N`: index `i` holds the coefficient of
//! `q^i`. All arithmetic is exact, and binary operations truncate to the
//! smaller operand order, so a result never claims precision that was not
//! actually computed.
//!
//! [`ResidueSeries`] is the same structure with coefficients reduced into
//! `[0, M)` for a fixed modulus `M >= 2`. Reduction is a ring homomorphism,
//! which is what makes large-order congruence scans both sound and fast
//! (word-size coefficients instead of big integers).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Errors from the partial series operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exponent {exponent} exceeds the series order {order}")]
    ExponentBeyondOrder { exponent: usize, order: usize },
    #[error("constant term {found} is not a unit (must be 1 or -1)")]
    NonUnitConstant { found: BigInt },
    #[error("constant term {found} must be 1 to take a logarithmic derivative")]
    NonUnitLogConstant { found: BigInt },
    #[error("substitution step must be at least 1")]
    ZeroStep,
    #[error("residue {residue} must be smaller than the dissection step {step}")]
    ResidueOutOfRange { residue: usize, step: usize },
    #[error("dissection residue {residue} exceeds the series order {order}; coefficient q^{residue} was never computed")]
    DissectBeyondOrder { residue: usize, order: usize },
    #[error("constant term {found} is not +-1 modulo {modulus}, cannot invert")]
    NonUnitConstantMod { found: u64, modulus: u64 },
}

/// A power series truncated at an explicit order, with exact integer
/// coefficients. Index `i` of the backing vector is the coefficient of `q^i`;
/// the vector always has length `order + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The single term `c * q^exponent` at the given order.
    pub fn monomial(
        coefficient: impl Into<BigInt>,
        exponent: usize,
        order: usize,
    ) -> Result<Self, SeriesError> {
        if exponent > order {
            return Err(SeriesError::ExponentBeyondOrder { exponent, order });
        }
        let mut s = Self::zero(order);
        s.coeffs[exponent] = coefficient.into();
        Ok(s)
    }

    /// Wrap an explicit coefficient vector; `coeffs[i]` is the coefficient of
    /// `q^i` and the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        Series { coeffs }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^i`. Panics if `i` exceeds the order: that
    /// coefficient was never computed.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// All coefficients, from `q^0` up to `q^order`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Copy of the series truncated down to `order`.
    pub fn truncated(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot truncate upward");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn negate(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: impl Into<BigInt>) -> Series {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Truncated product; the result order is the minimum of the two operand
    /// orders. Schoolbook convolution, skipping zero coefficients.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, fi) in self.coeffs.iter().enumerate().take(order + 1) {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !gj.is_zero() {
                    out[i + j] += fi * gj;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse up to the series order. The constant term must
    /// be 1 or -1 so that all inverse coefficients stay integral.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && *c0 != BigInt::from(-1) {
            return Err(SeriesError::NonUnitConstant { found: c0.clone() });
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone();
        // c0 * inv[k] = -sum_{i=1..k} f[i] * inv[k-i], and 1/c0 = c0.
        for k in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !inv[k - i].is_zero() {
                    acc += &self.coeffs[i] * &inv[k - i];
                }
            }
            inv[k] = -(c0 * acc);
        }
        Ok(Series { coeffs: inv })
    }

    /// `self / other`, requiring `other` to have unit constant term.
    pub fn div(&self, other: &Series) -> Result<Series, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power by repeated squaring; `pow(f, 0)` is 1 at the same order.
    pub fn pow(&self, exponent: u32) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The substitution `q -> q^step`: coefficient `i` moves to exponent
    /// `step * i`. The result order is `step * order`, exactly the precision
    /// the input determines.
    pub fn substitute_power(&self, step: usize) -> Result<Series, SeriesError> {
        if step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        if step == 1 {
            return Ok(self.clone());
        }
        let order = self.order() * step;
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[step * i] = c.clone();
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Extract the arithmetic progression `step*n + residue` of coefficients
    /// and renumber (the substitution `q^step -> q`): coefficient `n` of the
    /// result is coefficient `step*n + residue` of `self`.
    pub fn dissect(&self, step: usize, residue: usize) -> Result<Series, SeriesError> {
        if residue >= step {
            return Err(SeriesError::ResidueOutOfRange { residue, step });
        }
        if residue > self.order() {
            return Err(SeriesError::DissectBeyondOrder {
                residue,
                order: self.order(),
            });
        }
        let len = (self.order() - residue) / step + 1;
        let coeffs = (0..len)
            .map(|n| self.coeffs[step * n + residue].clone())
            .collect();
        Ok(Series { coeffs })
    }

    /// The theta operator `q d/dq`: coefficient `i` becomes `i * f_i`.
    pub fn derivative_q(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| BigInt::from(i) * c)
                .collect(),
        }
    }

    /// `q d/dq log f = q f' / f`, defined for constant term exactly 1.
    /// Additive over products: `log_derivative(fg) = log_derivative(f) +
    /// log_derivative(g)`.
    pub fn log_derivative(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitLogConstant {
                found: self.coeffs[0].clone(),
            });
        }
        Ok(self.derivative_q().mul(&self.inverse()?))
    }

    /// Reduce every coefficient into `[0, modulus)`.
    pub fn reduce_mod(&self, modulus: u64) -> ResidueSeries {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = BigInt::from(modulus);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().expect("residue fits in u64"))
            .collect();
        ResidueSeries { coeffs, modulus }
    }

    /// Coefficientwise equality of the prefixes up to and including `upto`.
    pub fn equal_upto(&self, other: &Series, upto: usize) -> bool {
        assert!(
            upto <= self.order() && upto <= other.order(),
            "comparison order exceeds a series order"
        );
        self.coeffs[..=upto] == other.coeffs[..=upto]
    }

    /// Coefficientwise congruence mod `modulus` up to and including `upto`.
    pub fn congruent_upto(&self, other: &Series, modulus: u64, upto: usize) -> bool {
        assert!(
            upto <= self.order() && upto <= other.order(),
            "comparison order exceeds a series order"
        );
        let m = BigInt::from(modulus);
        (0..=upto).all(|i| (&self.coeffs[i] - &other.coeffs[i]).mod_floor(&m).is_zero())
    }

    /// In-place multiplication by the binomial `1 - sign * q^exponent`.
    /// A no-op when the exponent is beyond the order (the factor only
    /// contributes above the truncation).
    pub(crate) fn mul_binomial(&mut self, sign: i64, exponent: usize) {
        debug_assert!(sign == 1 || sign == -1);
        let order = self.order();
        if exponent > order || exponent == 0 {
            return;
        }
        for i in (0..=order - exponent).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i + exponent);
            if sign == 1 {
                hi[0] -= &lo[i];
            } else {
                hi[0] += &lo[i];
            }
        }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}]({})", self.order(), self)
    }
}

/// A truncated power series with coefficients in `Z/M`, stored in `[0, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSeries {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl ResidueSeries {
    pub fn zero(order: usize, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        ResidueSeries {
            coeffs: vec![0; order + 1],
            modulus,
        }
    }

    pub fn one(order: usize, modulus: u64) -> Self {
        let mut s = Self::zero(order, modulus);
        s.coeffs[0] = 1 % modulus;
        s
    }

    /// Wrap residues already reduced into `[0, modulus)`.
    pub fn from_coeffs(coeffs: Vec<u64>, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        assert!(
            coeffs.iter().all(|&c| c < modulus),
            "coefficient out of range"
        );
        ResidueSeries { coeffs, modulus }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn assert_compatible(&self, other: &ResidueSeries) {
        assert_eq!(self.modulus, other.modulus, "mismatched moduli");
    }

    pub fn add(&self, other: &ResidueSeries) -> ResidueSeries {
        self.assert_compatible(other);
        let order = self.order().min(other.order());
        let m = self.modulus;
        ResidueSeries {
            coeffs: (0..=order)
                .map(|i| add_mod(self.coeffs[i], other.coeffs[i], m))
                .collect(),
            modulus: m,
        }
    }

    pub fn sub(&self, other: &ResidueSeries) -> ResidueSeries {
        self.assert_compatible(other);
        let order = self.order().min(other.order());
        let m = self.modulus;
        ResidueSeries {
            coeffs: (0..=order)
                .map(|i| add_mod(self.coeffs[i], m - other.coeffs[i], m))
                .collect(),
            modulus: m,
        }
    }

    /// Multiply by an integer scalar (reduced into the ring first).
    pub fn scale(&self, c: i64) -> ResidueSeries {
        let m = self.modulus as i128;
        let c = (((c as i128) % m + m) % m) as u64;
        ResidueSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|&x| mul_mod(x, c, self.modulus))
                .collect(),
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: &ResidueSeries) -> ResidueSeries {
        self.assert_compatible(other);
        let order = self.order().min(other.order());
        let m = self.modulus;
        let mut out = vec![0u64; order + 1];
        if m <= u32::MAX as u64 {
            // Products fit in u64 and at most order+1 <= 2^32 of them fit in
            // a u128 accumulator without intermediate reduction.
            for (i, &fi) in self.coeffs.iter().enumerate().take(order + 1) {
                if fi == 0 {
                    continue;
                }
                for (j, &gj) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                    if gj != 0 {
                        out[i + j] =
                            ((out[i + j] as u128 + fi as u128 * gj as u128) % m as u128) as u64;
                    }
                }
            }
        } else {
            for (i, &fi) in self.coeffs.iter().enumerate().take(order + 1) {
                if fi == 0 {
                    continue;
                }
                for (j, &gj) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                    if gj != 0 {
                        out[i + j] = add_mod(out[i + j], mul_mod(fi, gj, m), m);
                    }
                }
            }
        }
        ResidueSeries {
            coeffs: out,
            modulus: m,
        }
    }

    /// Inverse up to the series order; the constant term must be +-1 mod M
    /// (it is its own inverse in that case).
    pub fn inverse(&self) -> Result<ResidueSeries, SeriesError> {
        let m = self.modulus;
        let c0 = self.coeffs[0];
        if c0 != 1 % m && c0 != m - 1 {
            return Err(SeriesError::NonUnitConstantMod {
                found: c0,
                modulus: m,
            });
        }
        let order = self.order();
        let mut inv = vec![0u64; order + 1];
        inv[0] = c0;
        for k in 1..=order {
            let mut acc = 0u64;
            for i in 1..=k {
                if self.coeffs[i] != 0 && inv[k - i] != 0 {
                    acc = add_mod(acc, mul_mod(self.coeffs[i], inv[k - i], m), m);
                }
            }
            // inv[k] = -c0 * acc
            inv[k] = mul_mod(c0, m - acc, m) % m;
        }
        Ok(ResidueSeries {
            coeffs: inv,
            modulus: m,
        })
    }

    pub fn div(&self, other: &ResidueSeries) -> Result<ResidueSeries, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, exponent: u32) -> ResidueSeries {
        let mut result = Self::one(self.order(), self.modulus);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn substitute_power(&self, step: usize) -> Result<ResidueSeries, SeriesError> {
        if step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        if step == 1 {
            return Ok(self.clone());
        }
        let order = self.order() * step;
        let mut out = vec![0u64; order + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[step * i] = c;
        }
        Ok(ResidueSeries {
            coeffs: out,
            modulus: self.modulus,
        })
    }

    pub fn dissect(&self, step: usize, residue: usize) -> Result<ResidueSeries, SeriesError> {
        if residue >= step {
            return Err(SeriesError::ResidueOutOfRange { residue, step });
        }
        if residue > self.order() {
            return Err(SeriesError::DissectBeyondOrder {
                residue,
                order: self.order(),
            });
        }
        let len = (self.order() - residue) / step + 1;
        Ok(ResidueSeries {
            coeffs: (0..len).map(|n| self.coeffs[step * n + residue]).collect(),
            modulus: self.modulus,
        })
    }

    pub fn equal_upto(&self, other: &ResidueSeries, upto: usize) -> bool {
        self.assert_compatible(other);
        assert!(
            upto <= self.order() && upto <= other.order(),
            "comparison order exceeds a series order"
        );
        self.coeffs[..=upto] == other.coeffs[..=upto]
    }

    /// In-place multiplication by `1 - sign * q^exponent`.
    pub(crate) fn mul_binomial(&mut self, sign: i64, exponent: usize) {
        debug_assert!(sign == 1 || sign == -1);
        let order = self.order();
        if exponent > order || exponent == 0 {
            return;
        }
        let m = self.modulus;
        for i in (0..=order - exponent).rev() {
            let v = self.coeffs[i];
            let dst = &mut self.coeffs[i + exponent];
            *dst = if sign == 1 {
                add_mod(*dst, m - v, m)
            } else {
                add_mod(*dst, v, m)
            };
        }
    }
}

fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < m && b <= m);
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(coeffs: &[i64]) -> Series {
        Series::from_i64(coeffs)
    }

    #[test]
    fn constructors() {
        assert_eq!(Series::zero(0), s(&[0]));
        assert_eq!(Series::one(3), s(&[1, 0, 0, 0]));
        assert_eq!(Series::monomial(2, 1, 4).unwrap(), s(&[0, 2, 0, 0, 0]));
        assert_eq!(
            Series::monomial(1, 5, 4),
            Err(SeriesError::ExponentBeyondOrder {
                exponent: 5,
                order: 4
            })
        );
    }

    #[test]
    fn linear_ops() {
        let f = s(&[1, 1]);
        let g = s(&[1, -1]);
        assert_eq!(&f + &g, s(&[2, 0]));
        assert_eq!(s(&[0, 1, 1]).scale(2), s(&[0, 2, 2]));
        assert_eq!(&f - &f, Series::zero(1));
        assert!((&f - &f).is_zero());
        assert_eq!(-&g, g.scale(-1));
        assert_eq!(g.negate(), s(&[-1, 1]));
        // mixed orders truncate to the shorter operand
        assert_eq!(&s(&[1, 2, 3]) + &s(&[1, 1]), s(&[2, 3]));
    }

    #[test]
    fn multiplication() {
        assert_eq!(s(&[1, 1]).mul(&s(&[1, -1])), s(&[1, 0]));
        let f = s(&[1, 1, 1, 0, 0]);
        assert_eq!(f.mul(&f), s(&[1, 2, 3, 2, 1]));
        let g = s(&[3, -1, 4, 1, -5]);
        assert_eq!(g.mul(&Series::one(4)), g);
    }

    #[test]
    fn inverse_examples() {
        // 1/(1-q) is the geometric series
        let inv = s(&[1, -1, 0, 0, 0, 0]).inverse().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(Series::one(4).inverse().unwrap(), Series::one(4));
        // 1/(1-2q+2q^4) starts like the overpartition counts
        let f = s(&[1, -2, 0, 0, 2]);
        assert_eq!(f.inverse().unwrap(), s(&[1, 2, 4, 8, 14]));
        assert!(matches!(
            s(&[2, 1]).inverse(),
            Err(SeriesError::NonUnitConstant { .. })
        ));
        // constant term -1 works too
        let g = s(&[-1, 1, 0, 5]);
        assert_eq!(g.mul(&g.inverse().unwrap()), Series::one(3));
    }

    #[test]
    fn div_and_pow() {
        let f = s(&[1, 3, -2, 1]);
        assert_eq!(f.div(&f).unwrap(), Series::one(3));
        assert_eq!(s(&[1, 1, 0]).pow(2), s(&[1, 2, 1]));
        assert_eq!(f.pow(1), f);
        assert_eq!(f.pow(0), Series::one(3));
    }

    #[test]
    fn substitution_and_dissection() {
        assert_eq!(s(&[1, 1]).substitute_power(2).unwrap(), s(&[1, 0, 1]));
        let f = s(&[2, 0, -1, 7]);
        assert_eq!(f.substitute_power(1).unwrap(), f);
        assert_eq!(
            s(&[0, 1, 0, 1]).substitute_power(3).unwrap(),
            s(&[0, 0, 0, 1, 0, 0, 0, 0, 0, 1])
        );
        assert_eq!(f.substitute_power(0), Err(SeriesError::ZeroStep));

        // dissect(sum n q^n, 2, 1) = 1 + 3q + 5q^2 + ...
        let n_qn = Series::from_coeffs((0..=9).map(BigInt::from).collect());
        assert_eq!(n_qn.dissect(2, 1).unwrap(), s(&[1, 3, 5, 7, 9]));
        assert_eq!(f.dissect(1, 0).unwrap(), f);
        assert_eq!(
            f.dissect(2, 2),
            Err(SeriesError::ResidueOutOfRange {
                residue: 2,
                step: 2
            })
        );
        assert_eq!(
            f.dissect(10, 5),
            Err(SeriesError::DissectBeyondOrder {
                residue: 5,
                order: 3
            })
        );
    }

    #[test]
    fn derivatives() {
        assert_eq!(s(&[1, 1, 1]).derivative_q(), s(&[0, 1, 2]));
        assert_eq!(s(&[7]).derivative_q(), s(&[0]));
        assert_eq!(
            Series::monomial(1, 5, 5).unwrap().derivative_q(),
            Series::monomial(5, 5, 5).unwrap()
        );

        // q d/dq log(1/(1-q)) = q + q^2 + q^3 + ...
        let f = s(&[1, -1, 0, 0, 0, 0]).inverse().unwrap();
        assert_eq!(f.log_derivative().unwrap(), s(&[0, 1, 1, 1, 1, 1]));
        assert_eq!(Series::one(5).log_derivative().unwrap(), Series::zero(5));
        assert!(matches!(
            s(&[-1, 1]).log_derivative(),
            Err(SeriesError::NonUnitLogConstant { .. })
        ));
    }

    #[test]
    fn reduction_and_congruence() {
        assert_eq!(s(&[0, -1]).reduce_mod(3).coeffs(), &[0, 2]);
        let f = s(&[5, -3, 11]);
        assert!(f.congruent_upto(&f, 7, 2));
        assert!(s(&[1, 8]).congruent_upto(&Series::one(1), 8, 1));
        assert!(!s(&[1, 4]).congruent_upto(&Series::one(1), 8, 1));
        assert!(f.equal_upto(&f, 2));
        assert!(!s(&[1, 2]).equal_upto(&s(&[1, 3]), 1));
    }

    #[test]
    fn residue_ring_basics() {
        let f = s(&[1, -2, 3, -4]).reduce_mod(5);
        assert_eq!(f.coeffs(), &[1, 3, 3, 1]);
        let g = s(&[1, 1, 0, 2]).reduce_mod(5);
        assert_eq!(f.add(&g).coeffs(), &[2, 4, 3, 3]);
        assert_eq!(f.sub(&f).coeffs(), &[0, 0, 0, 0]);
        assert_eq!(f.scale(-1).coeffs(), &[4, 2, 2, 4]);
        // constant term -1 mod m inverts
        let h = s(&[-1, 1, 1, 0]).reduce_mod(9);
        assert!(h
            .mul(&h.inverse().unwrap())
            .equal_upto(&ResidueSeries::one(3, 9), 3));
        assert!(matches!(
            s(&[2, 1]).reduce_mod(5).inverse(),
            Err(SeriesError::NonUnitConstantMod {
                found: 2,
                modulus: 5
            })
        ));
        assert_eq!(f.pow(0), ResidueSeries::one(3, 5));
        assert_eq!(f.dissect(2, 0).unwrap().coeffs(), &[1, 3]);
        assert_eq!(
            f.substitute_power(2).unwrap().coeffs(),
            &[1, 0, 3, 0, 3, 0, 1]
        );
    }

    #[test]
    fn display_formats_terms() {
        let f = s(&[1, -1, 0, 2]);
        assert_eq!(format!("{f}"), "1 - q + 2q^3 + O(q^4)");
        assert_eq!(format!("{}", Series::zero(2)), "0 + O(q^3)");
        assert_eq!(format!("{}", s(&[-3, 0, 1])), "-3 + q^2 + O(q^3)");
    }

    fn small_series() -> impl Strategy<Value = Series> {
        proptest::collection::vec(-6i64..=6, 1..=12).prop_map(|v| Series::from_i64(&v))
    }

    fn unit_series() -> impl Strategy<Value = Series> {
        (
            proptest::collection::vec(-6i64..=6, 1..=12),
            proptest::bool::ANY,
        )
            .prop_map(|(mut v, neg)| {
                v[0] = if neg { -1 } else { 1 };
                Series::from_i64(&v)
            })
    }

    fn monic_series() -> impl Strategy<Value = Series> {
        proptest::collection::vec(-6i64..=6, 1..=12).prop_map(|mut v| {
            v[0] = 1;
            Series::from_i64(&v)
        })
    }

    proptest! {
        #[test]
        fn mul_commutes(f in small_series(), g in small_series()) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
        }

        #[test]
        fn mul_associates(f in small_series(), g in small_series(), h in small_series()) {
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        }

        #[test]
        fn mul_distributes(f in small_series(), g in small_series(), h in small_series()) {
            let order = f.order().min(g.order()).min(h.order());
            let lhs = f.mul(&(&g + &h));
            let rhs = &f.mul(&g) + &f.mul(&h);
            prop_assert!(lhs.equal_upto(&rhs, order));
        }

        #[test]
        fn inverse_is_right_inverse(f in unit_series()) {
            let inv = f.inverse().unwrap();
            prop_assert_eq!(f.mul(&inv), Series::one(f.order()));
        }

        #[test]
        fn dissect_reassembles(f in small_series(), step in 1usize..=8) {
            // every coefficient lands in exactly one residue class
            let mut seen = vec![false; f.order() + 1];
            for residue in 0..step.min(f.order() + 1) {
                let part = f.dissect(step, residue).unwrap();
                for n in 0..=part.order() {
                    prop_assert_eq!(part.coeff(n), f.coeff(step * n + residue));
                    seen[step * n + residue] = true;
                }
            }
            prop_assert!(seen.iter().all(|&x| x));
        }

        #[test]
        fn dissect_substitute_identity(f in small_series()) {
            prop_assert_eq!(
                f.dissect(1, 0).unwrap().substitute_power(1).unwrap(),
                f.clone()
            );
        }

        #[test]
        fn log_derivative_additive(f in monic_series(), g in monic_series()) {
            let order = f.order().min(g.order());
            let lhs = f.mul(&g).log_derivative().unwrap();
            let rhs = &f.log_derivative().unwrap() + &g.log_derivative().unwrap();
            prop_assert!(lhs.equal_upto(&rhs.truncated(order), order));
        }

        #[test]
        fn reduction_is_ring_homomorphism(
            f in small_series(),
            g in small_series(),
            m in 2u64..=97,
        ) {
            prop_assert_eq!(f.mul(&g).reduce_mod(m), f.reduce_mod(m).mul(&g.reduce_mod(m)));
            prop_assert_eq!((&f + &g).reduce_mod(m), f.reduce_mod(m).add(&g.reduce_mod(m)));
            prop_assert_eq!((&f - &g).reduce_mod(m), f.reduce_mod(m).sub(&g.reduce_mod(m)));
        }

        #[test]
        fn residue_inverse_matches_exact(f in monic_series(), m in 2u64..=64) {
            let exact = f.inverse().unwrap().reduce_mod(m);
            let modular = f.reduce_mod(m).inverse().unwrap();
            prop_assert_eq!(exact, modular);
        }
    }
}
