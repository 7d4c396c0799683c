//! Constructors for the classical q-series everything else is built from:
//! q-Pochhammer products, Ramanujan's theta function `f(a, b)` and its
//! special cases `phi`, `psi` and `f(-q)`, square- and triangular-indexed
//! sums, and the Lambert-type sums that encode weighted divisor counts.
//!
//! All constructors take an explicit truncation order and return exact
//! [`Series`] values; a few also come in a residue flavour for large-order
//! congruence work.

use crate::series::{ResidueSeries, Series};
use num_bigint::BigInt;
use std::ops::Mul;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThetaError {
    #[error(
        "pochhammer start exponent must be at least 1 (the factor 1 - sign*q^0 is not a unit)"
    )]
    ZeroStartExponent,
    #[error("pochhammer exponent step must be at least 1")]
    ZeroStep,
    #[error("theta exponents must not both be zero")]
    DegenerateTheta,
}

/// The sign of a monomial argument, `+q^k` or `-q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign as a machine integer, `+1` or `-1`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `sign^exponent`.
    pub fn pow(self, exponent: u64) -> Sign {
        if self == Sign::Minus && exponent % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `(sign * q^start; q^step)_inf`, the infinite product over `j >= 0` of
/// `(1 - sign * q^(start + j*step))`. `start >= 1` guarantees a unit
/// constant term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochSpec {
    sign: Sign,
    start: u32,
    step: u32,
}

impl PochSpec {
    pub fn new(sign: Sign, start: u32, step: u32) -> Result<Self, ThetaError> {
        if start == 0 {
            return Err(ThetaError::ZeroStartExponent);
        }
        if step == 0 {
            return Err(ThetaError::ZeroStep);
        }
        Ok(PochSpec { sign, start, step })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn step(&self) -> u32 {
        self.step
    }
}

/// `f(sign_a * q^a, sign_b * q^b)`, Ramanujan's bilateral theta series
/// `sum over n in Z of x^(n(n+1)/2) * y^(n(n-1)/2)` for monomial arguments.
/// Requires `a + b >= 1` (the formal analogue of `|xy| < 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    a_sign: Sign,
    a_exp: u32,
    b_sign: Sign,
    b_exp: u32,
}

impl ThetaSpec {
    pub fn new(a_sign: Sign, a_exp: u32, b_sign: Sign, b_exp: u32) -> Result<Self, ThetaError> {
        if a_exp == 0 && b_exp == 0 {
            return Err(ThetaError::DegenerateTheta);
        }
        Ok(ThetaSpec {
            a_sign,
            a_exp,
            b_sign,
            b_exp,
        })
    }
}

/// Expand the q-Pochhammer product described by `spec`, truncated at `order`.
/// Exactly the factors with leading exponent `start + j*step <= order` are
/// multiplied in; later factors only contribute above the truncation.
pub fn pochhammer(spec: PochSpec, order: usize) -> Series {
    let mut f = Series::one(order);
    let mut e = spec.start as usize;
    while e <= order {
        f.mul_binomial(spec.sign.unit(), e);
        e += spec.step as usize;
    }
    f
}

/// [`pochhammer`] with coefficients reduced mod `modulus` throughout.
pub fn pochhammer_mod(spec: PochSpec, order: usize, modulus: u64) -> ResidueSeries {
    let mut f = ResidueSeries::one(order, modulus);
    let mut e = spec.start as usize;
    while e <= order {
        f.mul_binomial(spec.sign.unit(), e);
        e += spec.step as usize;
    }
    f
}

/// Expand the bilateral theta sum described by `spec`: the term for index
/// `n` has exponent `a*n(n+1)/2 + b*n(n-1)/2` and sign
/// `sign_a^(n(n+1)/2) * sign_b^(n(n-1)/2)`; both directions of `n` are
/// summed until the exponent passes `order`.
pub fn theta_f(spec: ThetaSpec, order: usize) -> Series {
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let a = spec.a_exp as u64;
    let b = spec.b_exp as u64;
    // n >= 0, then n = -m < 0; exponents are eventually strictly increasing
    // in each direction, so stop once past the order with |n| >= 2.
    let mut n = 0u64;
    loop {
        let ta = n * (n + 1) / 2;
        let tb = if n == 0 { 0 } else { n * (n - 1) / 2 };
        let e = a * ta + b * tb;
        if e > order as u64 {
            if n >= 2 {
                break;
            }
        } else {
            let sign = spec.a_sign.pow(ta) * spec.b_sign.pow(tb);
            coeffs[e as usize] += sign.unit();
        }
        n += 1;
    }
    let mut m = 1u64;
    loop {
        let ta = m * (m - 1) / 2;
        let tb = m * (m + 1) / 2;
        let e = a * ta + b * tb;
        if e > order as u64 {
            if m >= 2 {
                break;
            }
        } else {
            let sign = spec.a_sign.pow(ta) * spec.b_sign.pow(tb);
            coeffs[e as usize] += sign.unit();
        }
        m += 1;
    }
    Series::from_coeffs(coeffs)
}

/// The Jacobi triple product form of [`theta_f`]:
/// `f(x, y) = (-x; xy)_inf (-y; xy)_inf (xy; xy)_inf`.
/// Only defined here when the product `xy` is a positive monomial with both
/// exponents at least 1 (all instances this crate checks qualify).
pub fn jacobi_triple_product(spec: ThetaSpec, order: usize) -> Series {
    assert_eq!(
        spec.a_sign * spec.b_sign,
        Sign::Plus,
        "triple product base xy must be a positive monomial"
    );
    assert!(
        spec.a_exp >= 1 && spec.b_exp >= 1,
        "triple product helper expects positive exponents"
    );
    let base = spec.a_exp + spec.b_exp;
    let pa = PochSpec::new(spec.a_sign * Sign::Minus, spec.a_exp, base)
        .expect("valid pochhammer factor");
    let pb = PochSpec::new(spec.b_sign * Sign::Minus, spec.b_exp, base)
        .expect("valid pochhammer factor");
    let pab = PochSpec::new(Sign::Plus, base, base).expect("valid pochhammer factor");
    pochhammer(pa, order)
        .mul(&pochhammer(pb, order))
        .mul(&pochhammer(pab, order))
}

/// `phi(sign q) = 1 + 2 sum_{m>=1} sign^m q^(m^2)`.
pub fn phi(sign: Sign, order: usize) -> Series {
    phi_power(sign, 1, order)
}

/// `phi(sign q^step) = 1 + 2 sum_{m>=1} sign^m q^(step m^2)`.
pub fn phi_power(sign: Sign, step: usize, order: usize) -> Series {
    assert!(step >= 1, "step must be positive");
    let mut coeffs = vec![BigInt::from(0); order + 1];
    coeffs[0] = BigInt::from(1);
    let mut m = 1usize;
    while step * m * m <= order {
        coeffs[step * m * m] = BigInt::from(2 * sign.pow(m as u64).unit());
        m += 1;
    }
    Series::from_coeffs(coeffs)
}

/// `psi(q) = sum_{m>=0} q^(m(m+1)/2)`, the triangular-number theta series.
pub fn psi(order: usize) -> Series {
    psi_power(1, order)
}

/// `psi(q^step) = sum_{m>=0} q^(step m(m+1)/2)`.
pub fn psi_power(step: usize, order: usize) -> Series {
    assert!(step >= 1, "step must be positive");
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let mut m = 0usize;
    while step * m * (m + 1) / 2 <= order {
        coeffs[step * m * (m + 1) / 2] += 1;
        m += 1;
    }
    Series::from_coeffs(coeffs)
}

/// Euler's function `f(-q^step) = (q^step; q^step)_inf`.
pub fn euler(step: u32, order: usize) -> Series {
    pochhammer(
        PochSpec::new(Sign::Plus, step, step).expect("positive step"),
        order,
    )
}

/// [`euler`] mod `modulus`.
pub fn euler_mod(step: u32, order: usize, modulus: u64) -> ResidueSeries {
    pochhammer_mod(
        PochSpec::new(Sign::Plus, step, step).expect("positive step"),
        order,
        modulus,
    )
}

/// `sum_{k>=1} k^2 q^(k^2)`.
pub fn sum_k2_qk2(order: usize) -> Series {
    sum_k2_qk2_step(1, order)
}

/// `sum_{k>=1} k^2 q^(step k^2)`.
pub fn sum_k2_qk2_step(step: usize, order: usize) -> Series {
    assert!(step >= 1, "step must be positive");
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let mut k = 1usize;
    while step * k * k <= order {
        coeffs[step * k * k] = BigInt::from((k * k) as u64);
        k += 1;
    }
    Series::from_coeffs(coeffs)
}

/// `sum_{m>=0} (2m+1)^2 q^(step m(m+1)/2)`.
pub fn odd_square_triangular(step: usize, order: usize) -> Series {
    assert!(step >= 1, "step must be positive");
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let mut m = 0usize;
    while step * m * (m + 1) / 2 <= order {
        coeffs[step * m * (m + 1) / 2] += BigInt::from(((2 * m + 1) * (2 * m + 1)) as u64);
        m += 1;
    }
    Series::from_coeffs(coeffs)
}

/// `sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2)`, the cube of Euler's function.
pub fn signed_odd_triangular(order: usize) -> Series {
    let mut coeffs = vec![BigInt::from(0); order + 1];
    let mut k = 0usize;
    while k * (k + 1) / 2 <= order {
        let term = (2 * k + 1) as i64 * if k.is_multiple_of(2) { 1 } else { -1 };
        coeffs[k * (k + 1) / 2] += term;
        k += 1;
    }
    Series::from_coeffs(coeffs)
}

/// The odd-index Lambert sum `sum_{m>=1} q^(2m-1) / (1 + q^(2m-1))^2`,
/// expanded by the geometric series of the denominator:
/// `sum_{m>=1} sum_{n>=1} (-1)^(n-1) n q^((2m-1)n)`.
pub fn lambert_odd(order: usize) -> Series {
    lambert(order, 2)
}

/// The full Lambert sum `sum_{m>=1} q^m / (1 + q^m)^2`, expanded the same
/// way over every period `m >= 1`. Its coefficient of `q^k` is the signed
/// divisor sum `sum_{d|k} (-1)^(d-1) d`.
pub fn lambert_all(order: usize) -> Series {
    lambert(order, 1)
}

fn lambert(order: usize, period_step: usize) -> Series {
    let mut coeffs = vec![0i64; order + 1];
    let mut period = 1usize;
    while period <= order {
        for n in 1..=order / period {
            let term = if n % 2 == 1 { n as i64 } else { -(n as i64) };
            coeffs[period * n] += term;
        }
        period += period_step;
    }
    Series::from_i64(&coeffs)
}
