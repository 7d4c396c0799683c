//! A registry of machine-checkable claims about the computed series and the
//! engine that verifies them.
//!
//! Claims come in five kinds: congruences on an arithmetic progression of
//! coefficients, relations between two progressions, congruences at
//! non-square indices, coefficientwise identities between two independently
//! built series (exact or modulo M), and informational claims that are
//! scanned and reported but never asserted. Every check covers a finite
//! prefix and each [`Report`] says exactly how many instances it covered.
//!
//! Large-order congruence scans run in residue arithmetic: the statistic
//! series are computed once per modulus family (a power of two covering all
//! 2-adic claims, 3, and 5) and shared across claims. Soundness comes from
//! reduction being a ring homomorphism, which the series module property-tests.

use crate::partitions;
use crate::series::{ResidueSeries, Series};
use crate::theta::{self, Sign, ThetaSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::borrow::Cow;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Default truncation order for claim verification: at least 8 instances of
/// the sparsest registered progression (512n + 320).
pub const DEFAULT_ORDER: usize = 4096;

/// Exact identity claims are compared to this order.
const IDENTITY_ORDER: usize = 500;
/// Congruence-lemma identity claims are compared to this order.
const CONGRUENCE_ORDER: usize = 1000;
/// The two generating-function routes are compared exactly to this order.
const ROUTE_ORDER: usize = 2000;
/// The divisor-convolution route is compared to the product route to here.
const CONVOLUTION_ORDER: usize = 1000;
/// The statistic series needed to dissect out 8n+7 at identity order.
const EXACT_STATISTIC_ORDER: usize = 8 * IDENTITY_ORDER + 7;

/// One power of two covers every 2-adic claim (largest modulus 2^9) with
/// headroom to halve for the derived odd/even part sums.
const TWO_ADIC_MODULUS: u64 = 1 << 13;
const SUM_MODULUS: u64 = TWO_ADIC_MODULUS / 2;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
}

/// Which statistic a progression-style claim scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subject {
    /// Signed part-sum statistic over overpartitions.
    SomeBar,
    /// Overpartition counts.
    OverlineP,
    /// Signed part-sum statistic over ordinary partitions.
    SomeOrdinary,
    /// Sum of odd parts over overpartitions (derived).
    SumOdd,
    /// Sum of even parts over overpartitions (derived).
    SumEven,
}

/// Builder for the two sides of an exact identity claim, at a given order.
type ExactSides = fn(&VerifyContext, usize) -> (Series, Series);
/// Builder for the two sides of a congruence identity, at order and modulus.
type ResidueSides = fn(usize, u64) -> (ResidueSeries, ResidueSeries);

#[derive(Clone)]
pub enum ClaimKind {
    /// `subject(step*n + residue) == 0 (mod modulus)` for all n in range.
    Progression {
        subject: Subject,
        step: u64,
        residue: u64,
        modulus: u64,
    },
    /// `subject(outer) - factor * subject(inner) == 0 (mod modulus)`.
    Relation {
        subject: Subject,
        outer_step: u64,
        outer_residue: u64,
        inner_step: u64,
        inner_residue: u64,
        factor: u64,
        modulus: u64,
    },
    /// `SOME-bar(4^(level-1) * n) == 0 (mod modulus)` for non-square n.
    NonSquare { level: u32, modulus: u64 },
    /// Two independently built series agree coefficientwise up to `order`.
    ExactIdentity { order: usize, sides: ExactSides },
    /// Two independently built residue series agree up to `order`.
    CongruentIdentity {
        order: usize,
        modulus: u64,
        sides: ResidueSides,
    },
    /// Progression scan whose outcome is reported but never asserted.
    Informational {
        subject: Subject,
        step: u64,
        residue: u64,
        modulus: u64,
    },
}

/// A checkable assertion with a stable id and its source anchor.
#[derive(Clone)]
pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: &'static str,
    pub kind: ClaimKind,
}

impl Claim {
    pub fn kind_tag(&self) -> ClaimKindTag {
        match self.kind {
            ClaimKind::Progression { .. } => ClaimKindTag::Progression,
            ClaimKind::Relation { .. } => ClaimKindTag::Relation,
            ClaimKind::NonSquare { .. } => ClaimKindTag::Nonsquare,
            ClaimKind::ExactIdentity { .. } | ClaimKind::CongruentIdentity { .. } => {
                ClaimKindTag::ExactIdentity
            }
            ClaimKind::Informational { .. } => ClaimKindTag::Informational,
        }
    }
}

/// Claim kind as it appears in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKindTag {
    Progression,
    Relation,
    ExactIdentity,
    Nonsquare,
    Informational,
}

impl ClaimKindTag {
    /// The kind string used in reports.
    pub fn name(self) -> &'static str {
        match self {
            ClaimKindTag::Progression => "progression",
            ClaimKindTag::Relation => "relation",
            ClaimKindTag::ExactIdentity => "exact-identity",
            ClaimKindTag::Nonsquare => "nonsquare",
            ClaimKindTag::Informational => "informational",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Informational => write!(f, "INFO"),
        }
    }
}

/// A single offending instance: the progression index (or coefficient index
/// for identities) and the observed value, rendered in full decimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub n: u64,
    pub value: String,
}

/// Outcome of checking one claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claim_id: String,
    pub anchor: String,
    pub kind: ClaimKindTag,
    pub order: u64,
    pub instances: u64,
    pub status: Status,
    pub violations: Vec<Violation>,
}

fn settle(
    instances: u64,
    violations: Vec<Violation>,
    informational: bool,
) -> (Status, Vec<Violation>) {
    let status = if informational || instances == 0 {
        // a scan that covered nothing must never read as a silent pass
        Status::Informational
    } else if violations.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    (status, violations)
}

// ---------------------------------------------------------------------------
// Shared context: statistic series computed once per modulus family
// ---------------------------------------------------------------------------

/// Lazily computed series shared by every claim in one verification run.
pub struct VerifyContext {
    order: usize,
    some_bar_2adic: OnceLock<ResidueSeries>,
    pbar_2adic: OnceLock<ResidueSeries>,
    some_bar_mod3: OnceLock<ResidueSeries>,
    some_bar_mod5: OnceLock<ResidueSeries>,
    some_ordinary_mod5: OnceLock<ResidueSeries>,
    sums_2adic: OnceLock<(ResidueSeries, ResidueSeries)>,
    some_bar_exact: OnceLock<Series>,
}

impl VerifyContext {
    pub fn new(order: usize) -> Self {
        VerifyContext {
            order,
            some_bar_2adic: OnceLock::new(),
            pbar_2adic: OnceLock::new(),
            some_bar_mod3: OnceLock::new(),
            some_bar_mod5: OnceLock::new(),
            some_ordinary_mod5: OnceLock::new(),
            sums_2adic: OnceLock::new(),
            some_bar_exact: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn some_bar_2adic(&self) -> &ResidueSeries {
        self.some_bar_2adic
            .get_or_init(|| partitions::some_bar_series_closed_mod(self.order, TWO_ADIC_MODULUS))
    }

    pub fn pbar_2adic(&self) -> &ResidueSeries {
        self.pbar_2adic
            .get_or_init(|| partitions::overline_p_series_mod(self.order, TWO_ADIC_MODULUS))
    }

    pub fn some_bar_mod3(&self) -> &ResidueSeries {
        self.some_bar_mod3
            .get_or_init(|| partitions::some_bar_series_closed_mod(self.order, 3))
    }

    pub fn some_bar_mod5(&self) -> &ResidueSeries {
        self.some_bar_mod5
            .get_or_init(|| partitions::some_bar_series_closed_mod(self.order, 5))
    }

    pub fn some_ordinary_mod5(&self) -> &ResidueSeries {
        self.some_ordinary_mod5
            .get_or_init(|| partitions::some_series_mod(self.order, 5))
    }

    /// Odd and even part sums mod 2^12, derived from the counts
    /// and the statistic via the add/subtract identities.
    pub fn sums_2adic(&self) -> &(ResidueSeries, ResidueSeries) {
        self.sums_2adic
            .get_or_init(|| sums_mod(self.order, SUM_MODULUS))
    }

    /// The statistic series exact to order 4007, enough to dissect every
    /// registered progression residue at identity order.
    pub fn some_bar_exact(&self) -> &Series {
        self.some_bar_exact
            .get_or_init(|| partitions::some_bar_series_closed(EXACT_STATISTIC_ORDER))
    }

    fn subject_series(&self, subject: Subject, modulus: u64) -> Cow<'_, ResidueSeries> {
        let two_adic = modulus.is_power_of_two();
        match subject {
            Subject::SomeBar if two_adic && modulus <= TWO_ADIC_MODULUS => {
                Cow::Borrowed(self.some_bar_2adic())
            }
            Subject::SomeBar if modulus == 3 => Cow::Borrowed(self.some_bar_mod3()),
            Subject::SomeBar if modulus == 5 => Cow::Borrowed(self.some_bar_mod5()),
            Subject::SomeBar => {
                Cow::Owned(partitions::some_bar_series_closed_mod(self.order, modulus))
            }
            Subject::OverlineP if two_adic && modulus <= TWO_ADIC_MODULUS => {
                Cow::Borrowed(self.pbar_2adic())
            }
            Subject::OverlineP => {
                Cow::Owned(partitions::overline_p_series_mod(self.order, modulus))
            }
            Subject::SomeOrdinary if modulus == 5 => Cow::Borrowed(self.some_ordinary_mod5()),
            Subject::SomeOrdinary => Cow::Owned(partitions::some_series_mod(self.order, modulus)),
            Subject::SumOdd if two_adic && modulus <= SUM_MODULUS => {
                Cow::Borrowed(&self.sums_2adic().0)
            }
            Subject::SumEven if two_adic && modulus <= SUM_MODULUS => {
                Cow::Borrowed(&self.sums_2adic().1)
            }
            Subject::SumOdd => Cow::Owned(sums_mod(self.order, modulus).0),
            Subject::SumEven => Cow::Owned(sums_mod(self.order, modulus).1),
        }
    }
}

/// Odd and even part-sum series mod `modulus`, via the identities
/// `s_odd + s_even = n * pbar(n)` and `s_odd - s_even = some_bar(n)`:
/// compute both inputs mod `2 * modulus`, then halve. The halves are exact
/// because the sums are integers; the parity assertion checks just that.
fn sums_mod(order: usize, modulus: u64) -> (ResidueSeries, ResidueSeries) {
    let double = modulus.checked_mul(2).expect("modulus fits in u64");
    let pbar = partitions::overline_p_series_mod(order, double);
    let some_bar = partitions::some_bar_series_closed_mod(order, double);
    let d = double as u128;
    let mut odd = Vec::with_capacity(order + 1);
    let mut even = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let weighted = (n as u128 % d) * pbar.coeff(n) as u128 % d;
        let total = (weighted + some_bar.coeff(n) as u128) % d;
        let diff = (weighted + d - some_bar.coeff(n) as u128) % d;
        assert!(
            total.is_multiple_of(2) && diff.is_multiple_of(2),
            "n*pbar(n) and some_bar(n) must share parity"
        );
        odd.push((total / 2) as u64);
        even.push((diff / 2) as u64);
    }
    (
        ResidueSeries::from_coeffs(odd, modulus),
        ResidueSeries::from_coeffs(even, modulus),
    )
}

// ---------------------------------------------------------------------------
// Scans
// ---------------------------------------------------------------------------

fn scan_progression_res(
    series: &ResidueSeries,
    step: u64,
    residue: u64,
    modulus: u64,
) -> (u64, Vec<Violation>) {
    assert!(step >= 1 && modulus >= 1);
    assert!(
        series.modulus().is_multiple_of(modulus),
        "series modulus must be a multiple of the claim modulus"
    );
    let max = series.order() as u64;
    let mut instances = 0;
    let mut violations = Vec::new();
    let mut n = 0u64;
    while step * n + residue <= max {
        instances += 1;
        let value = series.coeff((step * n + residue) as usize) % modulus;
        if value != 0 {
            violations.push(Violation {
                n,
                value: value.to_string(),
            });
        }
        n += 1;
    }
    (instances, violations)
}

fn scan_progression_big(
    series: &Series,
    step: u64,
    residue: u64,
    modulus: u64,
) -> (u64, Vec<Violation>) {
    assert!(step >= 1 && modulus >= 1);
    let m = BigInt::from(modulus);
    let max = series.order() as u64;
    let mut instances = 0;
    let mut violations = Vec::new();
    let mut n = 0u64;
    while step * n + residue <= max {
        instances += 1;
        let value = series.coeff((step * n + residue) as usize).mod_floor(&m);
        if !value.is_zero() {
            violations.push(Violation {
                n,
                value: value.to_string(),
            });
        }
        n += 1;
    }
    (instances, violations)
}

fn scan_relation_res(
    series: &ResidueSeries,
    outer: (u64, u64),
    inner: (u64, u64),
    factor: u64,
    modulus: u64,
) -> (u64, Vec<Violation>) {
    assert!(outer.0 >= 1 && inner.0 >= 1 && modulus >= 1);
    assert!(series.modulus().is_multiple_of(modulus));
    let max = series.order() as u64;
    let m = modulus as u128;
    let mut instances = 0;
    let mut violations = Vec::new();
    let mut n = 0u64;
    while outer.0 * n + outer.1 <= max && inner.0 * n + inner.1 <= max {
        instances += 1;
        let a = series.coeff((outer.0 * n + outer.1) as usize) as u128 % m;
        let b = series.coeff((inner.0 * n + inner.1) as usize) as u128;
        let scaled = factor as u128 % m * (b % m) % m;
        let value = (a + m - scaled) % m;
        if value != 0 {
            violations.push(Violation {
                n,
                value: value.to_string(),
            });
        }
        n += 1;
    }
    (instances, violations)
}

fn scan_relation_big(
    series: &Series,
    outer: (u64, u64),
    inner: (u64, u64),
    factor: u64,
    modulus: u64,
) -> (u64, Vec<Violation>) {
    assert!(outer.0 >= 1 && inner.0 >= 1 && modulus >= 1);
    let m = BigInt::from(modulus);
    let max = series.order() as u64;
    let mut instances = 0;
    let mut violations = Vec::new();
    let mut n = 0u64;
    while outer.0 * n + outer.1 <= max && inner.0 * n + inner.1 <= max {
        instances += 1;
        let a = series.coeff((outer.0 * n + outer.1) as usize);
        let b = series.coeff((inner.0 * n + inner.1) as usize);
        let value = (a - b * BigInt::from(factor)).mod_floor(&m);
        if !value.is_zero() {
            violations.push(Violation {
                n,
                value: value.to_string(),
            });
        }
        n += 1;
    }
    (instances, violations)
}

fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

fn scan_nonsquare_res(series: &ResidueSeries, level: u32, modulus: u64) -> (u64, Vec<Violation>) {
    assert!((1..=4).contains(&level));
    assert!(series.modulus().is_multiple_of(modulus));
    let scale = 4u64.pow(level - 1);
    let max = series.order() as u64;
    let mut instances = 0;
    let mut violations = Vec::new();
    let mut n = 0u64;
    while scale * n <= max {
        if !is_square(n) {
            instances += 1;
            let value = series.coeff((scale * n) as usize) % modulus;
            if value != 0 {
                violations.push(Violation {
                    n,
                    value: value.to_string(),
                });
            }
        }
        n += 1;
    }
    (instances, violations)
}

fn scan_nonsquare_big(series: &Series, level: u32, modulus: u64) -> (u64, Vec<Violation>) {
    assert!((1..=4).contains(&level));
    let scale = 4u64.pow(level - 1);
    let m = BigInt::from(modulus);
    let max = series.order() as u64;
    let mut instances = 0;
    let mut violations = Vec::new();
    let mut n = 0u64;
    while scale * n <= max {
        if !is_square(n) {
            instances += 1;
            let value = series.coeff((scale * n) as usize).mod_floor(&m);
            if !value.is_zero() {
                violations.push(Violation {
                    n,
                    value: value.to_string(),
                });
            }
        }
        n += 1;
    }
    (instances, violations)
}

/// Compare two exact series coefficientwise; report the first divergence.
fn scan_exact(lhs: &Series, rhs: &Series, upto: usize) -> (u64, Vec<Violation>) {
    assert!(
        lhs.order() >= upto && rhs.order() >= upto,
        "sides too short"
    );
    for i in 0..=upto {
        if lhs.coeff(i) != rhs.coeff(i) {
            let diff = lhs.coeff(i) - rhs.coeff(i);
            return (
                (upto + 1) as u64,
                vec![Violation {
                    n: i as u64,
                    value: diff.to_string(),
                }],
            );
        }
    }
    ((upto + 1) as u64, Vec::new())
}

fn scan_congruent_big(
    lhs: &Series,
    rhs: &Series,
    modulus: u64,
    upto: usize,
) -> (u64, Vec<Violation>) {
    assert!(
        lhs.order() >= upto && rhs.order() >= upto,
        "sides too short"
    );
    let m = BigInt::from(modulus);
    for i in 0..=upto {
        let diff = (lhs.coeff(i) - rhs.coeff(i)).mod_floor(&m);
        if !diff.is_zero() {
            return (
                (upto + 1) as u64,
                vec![Violation {
                    n: i as u64,
                    value: diff.to_string(),
                }],
            );
        }
    }
    ((upto + 1) as u64, Vec::new())
}

fn scan_congruent_res(
    lhs: &ResidueSeries,
    rhs: &ResidueSeries,
    upto: usize,
) -> (u64, Vec<Violation>) {
    assert_eq!(lhs.modulus(), rhs.modulus());
    assert!(
        lhs.order() >= upto && rhs.order() >= upto,
        "sides too short"
    );
    let m = lhs.modulus();
    for i in 0..=upto {
        if lhs.coeff(i) != rhs.coeff(i) {
            let diff = (lhs.coeff(i) + m - rhs.coeff(i)) % m;
            return (
                (upto + 1) as u64,
                vec![Violation {
                    n: i as u64,
                    value: diff.to_string(),
                }],
            );
        }
    }
    ((upto + 1) as u64, Vec::new())
}

// ---------------------------------------------------------------------------
// Standalone checkers over exact series
// ---------------------------------------------------------------------------

/// Check `f(step*n + residue) == 0 (mod modulus)` for every instance within
/// the order of `f`. An empty range is reported as informational, never as a
/// silent pass. Modulus 1 passes vacuously.
pub fn check_progression(series: &Series, step: u64, residue: u64, modulus: u64) -> Report {
    let (instances, violations) = scan_progression_big(series, step, residue, modulus);
    let (status, violations) = settle(instances, violations, false);
    Report {
        claim_id: format!("progression-{step}n+{residue}-mod-{modulus}"),
        anchor: String::new(),
        kind: ClaimKindTag::Progression,
        order: series.order() as u64,
        instances,
        status,
        violations,
    }
}

/// Check `f(outer) - factor * f(inner) == 0 (mod modulus)` over all `n` with
/// both indices within the order of `f`.
pub fn check_relation(
    series: &Series,
    outer: (u64, u64),
    inner: (u64, u64),
    factor: u64,
    modulus: u64,
) -> Report {
    let (instances, violations) = scan_relation_big(series, outer, inner, factor, modulus);
    let (status, violations) = settle(instances, violations, false);
    Report {
        claim_id: format!(
            "relation-{}n+{}-vs-{}x-{}n+{}-mod-{}",
            outer.0, outer.1, factor, inner.0, inner.1, modulus
        ),
        anchor: String::new(),
        kind: ClaimKindTag::Relation,
        order: series.order() as u64,
        instances,
        status,
        violations,
    }
}

/// Check `f(4^(level-1) * n) == 0 (mod modulus)` for every non-square `n`
/// in range (perfect squares are exempt, by exact integer square root).
pub fn check_nonsquare(series: &Series, level: u32, modulus: u64) -> Report {
    let (instances, violations) = scan_nonsquare_big(series, level, modulus);
    let (status, violations) = settle(instances, violations, false);
    Report {
        claim_id: format!("nonsquare-level-{level}-mod-{modulus}"),
        anchor: String::new(),
        kind: ClaimKindTag::Nonsquare,
        order: series.order() as u64,
        instances,
        status,
        violations,
    }
}

/// Check coefficientwise equality up to `upto`; the first divergent index is
/// reported with the coefficient difference.
pub fn check_exact(lhs: &Series, rhs: &Series, upto: usize) -> Report {
    let (instances, violations) = scan_exact(lhs, rhs, upto);
    let (status, violations) = settle(instances, violations, false);
    Report {
        claim_id: format!("exact-upto-{upto}"),
        anchor: String::new(),
        kind: ClaimKindTag::ExactIdentity,
        order: upto as u64,
        instances,
        status,
        violations,
    }
}

/// Check coefficientwise congruence mod `modulus` up to `upto`.
pub fn check_congruent(lhs: &Series, rhs: &Series, modulus: u64, upto: usize) -> Report {
    let (instances, violations) = scan_congruent_big(lhs, rhs, modulus, upto);
    let (status, violations) = settle(instances, violations, false);
    Report {
        claim_id: format!("congruent-mod-{modulus}-upto-{upto}"),
        anchor: String::new(),
        kind: ClaimKindTag::ExactIdentity,
        order: upto as u64,
        instances,
        status,
        violations,
    }
}

// ---------------------------------------------------------------------------
// Claim evaluation
// ---------------------------------------------------------------------------

/// Evaluate one claim against the shared context.
pub fn evaluate(claim: &Claim, ctx: &VerifyContext) -> Report {
    let (order, instances, status, violations) = match &claim.kind {
        ClaimKind::Progression {
            subject,
            step,
            residue,
            modulus,
        } => {
            let series = ctx.subject_series(*subject, *modulus);
            let (instances, violations) = scan_progression_res(&series, *step, *residue, *modulus);
            let (status, violations) = settle(instances, violations, false);
            (ctx.order() as u64, instances, status, violations)
        }
        ClaimKind::Relation {
            subject,
            outer_step,
            outer_residue,
            inner_step,
            inner_residue,
            factor,
            modulus,
        } => {
            let series = ctx.subject_series(*subject, *modulus);
            let (instances, violations) = scan_relation_res(
                &series,
                (*outer_step, *outer_residue),
                (*inner_step, *inner_residue),
                *factor,
                *modulus,
            );
            let (status, violations) = settle(instances, violations, false);
            (ctx.order() as u64, instances, status, violations)
        }
        ClaimKind::NonSquare { level, modulus } => {
            let series = ctx.subject_series(Subject::SomeBar, *modulus);
            let (instances, violations) = scan_nonsquare_res(&series, *level, *modulus);
            let (status, violations) = settle(instances, violations, false);
            (ctx.order() as u64, instances, status, violations)
        }
        ClaimKind::ExactIdentity { order, sides } => {
            let (lhs, rhs) = sides(ctx, *order);
            let (instances, violations) = scan_exact(&lhs, &rhs, *order);
            let (status, violations) = settle(instances, violations, false);
            (*order as u64, instances, status, violations)
        }
        ClaimKind::CongruentIdentity {
            order,
            modulus,
            sides,
        } => {
            let (lhs, rhs) = sides(*order, *modulus);
            let (instances, violations) = scan_congruent_res(&lhs, &rhs, *order);
            let (status, violations) = settle(instances, violations, false);
            (*order as u64, instances, status, violations)
        }
        ClaimKind::Informational {
            subject,
            step,
            residue,
            modulus,
        } => {
            let series = ctx.subject_series(*subject, *modulus);
            let (instances, violations) = scan_progression_res(&series, *step, *residue, *modulus);
            let (status, violations) = settle(instances, violations, true);
            (ctx.order() as u64, instances, status, violations)
        }
    };
    Report {
        claim_id: claim.id.to_string(),
        anchor: claim.anchor.to_string(),
        kind: claim.kind_tag(),
        order,
        instances,
        status,
        violations,
    }
}

/// Run claims against a fresh context at `order`. `selection` restricts to
/// the given ids (errors on an unknown id); claims always run and report in
/// registry order. `jobs > 1` evaluates claims in parallel.
pub fn run_all(
    order: usize,
    selection: Option<&[String]>,
    jobs: usize,
) -> Result<Vec<Report>, VerifyError> {
    let registry = builtin_claims();
    let selected: Vec<&Claim> = match selection {
        None => registry.iter().collect(),
        Some(ids) => {
            for id in ids {
                if !registry.iter().any(|c| c.id == id) {
                    return Err(VerifyError::UnknownClaim(id.clone()));
                }
            }
            registry
                .iter()
                .filter(|c| ids.iter().any(|id| id == c.id))
                .collect()
        }
    };
    let ctx = VerifyContext::new(order);
    let reports = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| selected.par_iter().map(|c| evaluate(c, &ctx)).collect())
    } else {
        selected.iter().map(|c| evaluate(c, &ctx)).collect()
    };
    Ok(reports)
}

// ---------------------------------------------------------------------------
// Identity side builders
// ---------------------------------------------------------------------------

fn q_times(series: &Series, factor: i64, power: usize, order: usize) -> Series {
    // factor * q^power * series, truncated at `order`
    let shifted = Series::monomial(factor, power, order).expect("power within order");
    shifted.mul(series)
}

fn sides_eq27(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi_power(Sign::Minus, 2, n).pow(2);
    let rhs = theta::phi(Sign::Plus, n).mul(&theta::phi(Sign::Minus, n));
    (lhs, rhs)
}

fn sides_eq28(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi(Sign::Plus, n);
    let rhs = &theta::phi_power(Sign::Plus, 4, n) + &q_times(&theta::psi_power(8, n), 2, 1, n);
    (lhs, rhs)
}

fn sides_eq29(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi(Sign::Plus, n).pow(2);
    let rhs = &theta::phi_power(Sign::Plus, 2, n).pow(2)
        + &q_times(&theta::psi_power(4, n).pow(2), 4, 1, n);
    (lhs, rhs)
}

fn sides_lemma_ep1(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi(Sign::Plus, n)
        .log_derivative()
        .expect("constant term 1");
    let rhs = theta::lambert_odd(n).scale(2);
    (lhs, rhs)
}

fn sides_lemma_ep2(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi(Sign::Plus, n)
        .log_derivative()
        .expect("constant term 1");
    let rhs = theta::sum_k2_qk2(n)
        .scale(2)
        .div(&theta::phi(Sign::Plus, n))
        .expect("unit constant term");
    (lhs, rhs)
}

fn sides_pf24(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi(Sign::Plus, n).pow(6);
    let phi2 = theta::phi_power(Sign::Plus, 2, n);
    let psi4 = theta::psi_power(4, n);
    let rhs = &(&phi2.pow(6) + &q_times(&psi4.pow(6), 64, 3, n))
        + &(&q_times(&phi2.pow(4).mul(&psi4.pow(2)), 12, 1, n)
            + &q_times(&phi2.pow(2).mul(&psi4.pow(4)), 48, 2, n));
    (lhs, rhs)
}

fn sides_f_cubed(_: &VerifyContext, n: usize) -> (Series, Series) {
    (theta::euler(1, n).pow(3), theta::signed_odd_triangular(n))
}

fn sides_phi_nine(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::phi(Sign::Plus, n);
    let f_3_15 = theta::theta_f(
        ThetaSpec::new(Sign::Plus, 3, Sign::Plus, 15).expect("valid spec"),
        n,
    );
    let rhs = &theta::phi_power(Sign::Plus, 9, n) + &q_times(&f_3_15, 2, 1, n);
    (lhs, rhs)
}

fn jtp_sides(a_sign: Sign, a_exp: u32, b_sign: Sign, b_exp: u32, n: usize) -> (Series, Series) {
    let spec = ThetaSpec::new(a_sign, a_exp, b_sign, b_exp).expect("valid spec");
    (
        theta::theta_f(spec, n),
        theta::jacobi_triple_product(spec, n),
    )
}

fn sides_jtp_psi(_: &VerifyContext, n: usize) -> (Series, Series) {
    jtp_sides(Sign::Plus, 1, Sign::Plus, 3, n)
}

fn sides_jtp_phi(_: &VerifyContext, n: usize) -> (Series, Series) {
    jtp_sides(Sign::Plus, 1, Sign::Plus, 1, n)
}

fn sides_jtp_euler(_: &VerifyContext, n: usize) -> (Series, Series) {
    jtp_sides(Sign::Minus, 1, Sign::Minus, 2, n)
}

fn sides_jtp_f_q3_q15(_: &VerifyContext, n: usize) -> (Series, Series) {
    jtp_sides(Sign::Plus, 3, Sign::Plus, 15, n)
}

fn sides_jtp_f_q6_q30(_: &VerifyContext, n: usize) -> (Series, Series) {
    jtp_sides(Sign::Minus, 6, Sign::Minus, 30, n)
}

fn sides_eta_mod5_exact(_: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = theta::psi(n)
        .pow(6)
        .div(&theta::phi(Sign::Minus, n).pow(8))
        .expect("unit constant term");
    let rhs = theta::euler(2, n)
        .pow(20)
        .div(&theta::euler(1, n).pow(22))
        .expect("unit constant term");
    (lhs, rhs)
}

fn sides_pf2(ctx: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = ctx
        .some_bar_exact()
        .dissect(4, 3)
        .expect("residue in range");
    let quotient = theta::psi_power(2, n)
        .pow(2)
        .div(&theta::phi(Sign::Minus, n).pow(4))
        .expect("unit constant term");
    let rhs = quotient.mul(&theta::odd_square_triangular(2, n)).scale(8);
    (lhs, rhs)
}

fn sides_pf3(ctx: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = ctx
        .some_bar_exact()
        .dissect(8, 7)
        .expect("residue in range");
    let quotient = theta::psi(n)
        .pow(6)
        .div(&theta::phi(Sign::Minus, n).pow(8))
        .expect("unit constant term");
    let rhs = quotient.mul(&theta::odd_square_triangular(1, n)).scale(64);
    (lhs, rhs)
}

fn sides_pf21(ctx: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = ctx
        .some_bar_exact()
        .dissect(2, 0)
        .expect("residue in range");
    let quotient = theta::phi(Sign::Plus, n)
        .pow(2)
        .div(&theta::phi_power(Sign::Minus, 2, n).pow(4))
        .expect("unit constant term");
    let rhs = quotient.mul(&theta::sum_k2_qk2_step(2, n)).scale(8);
    (lhs, rhs)
}

fn sides_pf22(ctx: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = ctx
        .some_bar_exact()
        .dissect(4, 2)
        .expect("residue in range");
    let quotient = theta::psi_power(2, n)
        .pow(2)
        .div(&theta::phi(Sign::Minus, n).pow(4))
        .expect("unit constant term");
    let rhs = quotient.mul(&theta::sum_k2_qk2(n)).scale(32);
    (lhs, rhs)
}

fn sides_pf23(ctx: &VerifyContext, n: usize) -> (Series, Series) {
    let lhs = ctx
        .some_bar_exact()
        .dissect(4, 0)
        .expect("residue in range");
    let quotient = theta::phi(Sign::Plus, n)
        .pow(2)
        .div(&theta::phi(Sign::Minus, n).pow(4))
        .expect("unit constant term");
    let rhs = quotient.mul(&theta::sum_k2_qk2(n)).scale(8);
    (lhs, rhs)
}

fn sides_pf23_alt(_: &VerifyContext, n: usize) -> (Series, Series) {
    // the two quotient forms of the 4n extraction agree
    let first = theta::phi(Sign::Plus, n)
        .pow(2)
        .div(&theta::phi(Sign::Minus, n).pow(4))
        .expect("unit constant term")
        .mul(&theta::sum_k2_qk2(n))
        .scale(8);
    let second = theta::phi(Sign::Plus, n)
        .pow(6)
        .div(&theta::phi_power(Sign::Minus, 2, n).pow(8))
        .expect("unit constant term")
        .mul(&theta::sum_k2_qk2(n))
        .scale(8);
    (first, second)
}

fn sides_gf_routes(_: &VerifyContext, n: usize) -> (Series, Series) {
    (
        partitions::some_bar_series(n),
        partitions::some_bar_series_closed(n),
    )
}

fn sides_gf_convolution(_: &VerifyContext, n: usize) -> (Series, Series) {
    (
        partitions::some_bar_convolution(n),
        partitions::some_bar_series(n),
    )
}

fn csides_pf25(n: usize, modulus: u64) -> (ResidueSeries, ResidueSeries) {
    let k = modulus.trailing_zeros() - 2;
    let e = 1u32 << k;
    let lhs = theta::phi(Sign::Plus, n)
        .reduce_mod(modulus)
        .pow(e)
        .div(&theta::phi(Sign::Minus, n).reduce_mod(modulus).pow(e))
        .expect("unit constant term");
    (lhs, ResidueSeries::one(n, modulus))
}

fn csides_psi_squared(n: usize, modulus: u64) -> (ResidueSeries, ResidueSeries) {
    let lhs = theta::psi(n).reduce_mod(modulus).pow(2);
    let rhs = theta::psi_power(2, n).reduce_mod(modulus);
    (lhs, rhs)
}

fn csides_eta_mod5(n: usize, modulus: u64) -> (ResidueSeries, ResidueSeries) {
    let lhs = theta::euler_mod(2, n, modulus)
        .pow(20)
        .div(&theta::euler_mod(1, n, modulus).pow(22))
        .expect("unit constant term");
    let rhs = theta::euler_mod(1, n, modulus)
        .pow(3)
        .mul(&theta::euler_mod(10, n, modulus).pow(4))
        .div(&theta::euler_mod(5, n, modulus).pow(5))
        .expect("unit constant term");
    (lhs, rhs)
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Every claim the crate knows how to check, in a fixed report order.
pub fn builtin_claims() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

#[rustfmt::skip]
fn build_registry() -> Vec<Claim> {
    fn prog(
        id: &'static str,
        title: &'static str,
        anchor: &'static str,
        subject: Subject,
        step: u64,
        residue: u64,
        modulus: u64,
    ) -> Claim {
        assert!(residue < step && modulus >= 2);
        Claim {
            id,
            title,
            anchor,
            kind: ClaimKind::Progression {
                subject,
                step,
                residue,
                modulus,
            },
        }
    }
    fn exact(
        id: &'static str,
        title: &'static str,
        anchor: &'static str,
        order: usize,
        sides: ExactSides,
    ) -> Claim {
        Claim {
            id,
            title,
            anchor,
            kind: ClaimKind::ExactIdentity { order, sides },
        }
    }
    fn cong(
        id: &'static str,
        title: &'static str,
        anchor: &'static str,
        order: usize,
        modulus: u64,
        sides: ResidueSides,
    ) -> Claim {
        Claim {
            id,
            title,
            anchor,
            kind: ClaimKind::CongruentIdentity {
                order,
                modulus,
                sides,
            },
        }
    }

    vec![
        // --- statistic congruences on progressions ---
        prog("eq2", "SOME-bar(4n+3) ≡ 0 (mod 8)", "Theorem 4, (2)", Subject::SomeBar, 4, 3, 8),
        prog("eq3", "SOME-bar(8n+7) ≡ 0 (mod 64)", "Theorem 4, (3)", Subject::SomeBar, 8, 7, 64),
        Claim {
            id: "eq4",
            title: "SOME-bar(16n) ≡ 4·SOME-bar(4n) (mod 2^7)",
            anchor: "Theorem 5, (4)",
            kind: ClaimKind::Relation {
                subject: Subject::SomeBar,
                outer_step: 16,
                outer_residue: 0,
                inner_step: 4,
                inner_residue: 0,
                factor: 4,
                modulus: 1 << 7,
            },
        },
        Claim {
            id: "eq5",
            title: "SOME-bar(32n) ≡ 4·SOME-bar(8n) (mod 2^9)",
            anchor: "Theorem 5, (5)",
            kind: ClaimKind::Relation {
                subject: Subject::SomeBar,
                outer_step: 32,
                outer_residue: 0,
                inner_step: 8,
                inner_residue: 0,
                factor: 4,
                modulus: 1 << 9,
            },
        },
        prog("eq6-k1", "SOME-bar(2n) ≡ 0 (mod 2^3)", "Theorem 6, (6) with k=1", Subject::SomeBar, 2, 0, 1 << 3),
        prog("eq6-k2", "SOME-bar(8n) ≡ 0 (mod 2^5)", "Theorem 6, (6) with k=2", Subject::SomeBar, 8, 0, 1 << 5),
        prog("eq6-k3", "SOME-bar(32n) ≡ 0 (mod 2^7)", "Theorem 6, (6) with k=3", Subject::SomeBar, 32, 0, 1 << 7),
        prog("eq6-k4", "SOME-bar(128n) ≡ 0 (mod 2^9)", "Theorem 6, (6) with k=4", Subject::SomeBar, 128, 0, 1 << 9),
        Claim {
            id: "eq7-k1",
            title: "SOME-bar(n) ≡ 0 (mod 2^3) for non-square n",
            anchor: "Theorem 7, (7) with k=1",
            kind: ClaimKind::NonSquare { level: 1, modulus: 1 << 3 },
        },
        Claim {
            id: "eq7-k2",
            title: "SOME-bar(4n) ≡ 0 (mod 2^5) for non-square n",
            anchor: "Theorem 7, (7) with k=2",
            kind: ClaimKind::NonSquare { level: 2, modulus: 1 << 5 },
        },
        Claim {
            id: "eq7-k3",
            title: "SOME-bar(16n) ≡ 0 (mod 2^7) for non-square n",
            anchor: "Theorem 7, (7) with k=3",
            kind: ClaimKind::NonSquare { level: 3, modulus: 1 << 7 },
        },
        Claim {
            id: "eq7-k4",
            title: "SOME-bar(64n) ≡ 0 (mod 2^9) for non-square n",
            anchor: "Theorem 7, (7) with k=4",
            kind: ClaimKind::NonSquare { level: 4, modulus: 1 << 9 },
        },
        prog("eq9", "SOME-bar(4n+2) ≡ 0 (mod 2^5)", "Theorem 8, (9)", Subject::SomeBar, 4, 2, 1 << 5),
        prog("eq10", "SOME-bar(8n+2) ≡ 0 (mod 2^7)", "Theorem 8, (10)", Subject::SomeBar, 8, 2, 1 << 7),
        prog("eq11", "SOME-bar(16n+10) ≡ 0 (mod 2^8)", "Theorem 8, (11)", Subject::SomeBar, 16, 10, 1 << 8),
        prog("eq12", "SOME-bar(16n+14) ≡ 0 (mod 2^6)", "Theorem 8, (12)", Subject::SomeBar, 16, 14, 1 << 6),
        prog("eq13", "SOME-bar(16n+12) ≡ 0 (mod 2^5)", "Theorem 8, (13)", Subject::SomeBar, 16, 12, 1 << 5),
        prog("eq14", "SOME-bar(32n+28) ≡ 0 (mod 2^7)", "Theorem 8, (14)", Subject::SomeBar, 32, 28, 1 << 7),
        prog("eq15", "SOME-bar(32n+20) ≡ 0 (mod 2^5)", "Theorem 8, (15)", Subject::SomeBar, 32, 20, 1 << 5),
        prog("eq16", "SOME-bar(32n+24) ≡ 0 (mod 2^6)", "Theorem 8, (16)", Subject::SomeBar, 32, 24, 1 << 6),
        prog("eq17", "SOME-bar(128n+80) ≡ 0 (mod 2^7)", "Theorem 8, (17)", Subject::SomeBar, 128, 80, 1 << 7),
        prog("eq18", "SOME-bar(64n+48) ≡ 0 (mod 2^7)", "Theorem 8, (18)", Subject::SomeBar, 64, 48, 1 << 7),
        prog("eq19", "SOME-bar(128n+112) ≡ 0 (mod 2^8)", "Theorem 8, (19)", Subject::SomeBar, 128, 112, 1 << 8),
        prog(
            "eq191",
            "SOME-bar(128n+96) ≡ 0 (mod 2^8)",
            "Theorem 8, (191); via the 64n+32 extraction (printed there as 64n+32n)",
            Subject::SomeBar,
            128,
            96,
            1 << 8,
        ),
        prog("eq192", "SOME-bar(256n+192) ≡ 0 (mod 2^9)", "Theorem 8, (192)", Subject::SomeBar, 256, 192, 1 << 9),
        prog("eq193", "SOME-bar(512n+320) ≡ 0 (mod 2^9)", "Theorem 8, (193)", Subject::SomeBar, 512, 320, 1 << 9),
        prog("eq20", "SOME-bar(40n+31) ≡ 0 (mod 5)", "Theorem 9, (20)", Subject::SomeBar, 40, 31, 5),
        prog("eq21", "SOME-bar(40n+39) ≡ 0 (mod 5)", "Theorem 9, (21)", Subject::SomeBar, 40, 39, 5),
        prog("eq22", "SOME-bar(3n+2) ≡ 0 (mod 3)", "Theorem 10, (22)", Subject::SomeBar, 3, 2, 3),
        prog(
            "thm10-24n19",
            "SOME-bar(24n+19) ≡ 0 (mod 3)",
            "Theorem 10 proof; the 12n+7 extraction yields 24n+19",
            Subject::SomeBar,
            24,
            19,
            3,
        ),
        Claim {
            id: "eq23-as-stated",
            title: "SOME-bar(29n+19) ≡ 0 (mod 3) — reported, not asserted",
            anchor: "Theorem 10, (23) as stated; the proof supports 24n+19 instead",
            kind: ClaimKind::Informational {
                subject: Subject::SomeBar,
                step: 29,
                residue: 19,
                modulus: 3,
            },
        },
        // --- auxiliary statistics ---
        prog(
            "some-5n4",
            "SOME(5n+4) ≡ 0 (mod 5)",
            "Introduction; ordinary-statistic congruence",
            Subject::SomeOrdinary,
            5,
            4,
            5,
        ),
        prog(
            "pbar-4n3",
            "p-bar(4n+3) ≡ 0 (mod 8)",
            "Introduction; overpartition count congruences",
            Subject::OverlineP,
            4,
            3,
            8,
        ),
        prog(
            "pbar-8n7",
            "p-bar(8n+7) ≡ 0 (mod 64)",
            "Introduction; overpartition count congruences",
            Subject::OverlineP,
            8,
            7,
            64,
        ),
        prog("eq02-odd", "S-odd(4n+3) ≡ 0 (mod 8)", "Corollary to Theorem 4, (02)", Subject::SumOdd, 4, 3, 8),
        prog("eq02-even", "S-even(4n+3) ≡ 0 (mod 8)", "Corollary to Theorem 4, (02)", Subject::SumEven, 4, 3, 8),
        prog("eq03-odd", "S-odd(8n+7) ≡ 0 (mod 64)", "Corollary to Theorem 4, (03)", Subject::SumOdd, 8, 7, 64),
        prog("eq03-even", "S-even(8n+7) ≡ 0 (mod 64)", "Corollary to Theorem 4, (03)", Subject::SumEven, 8, 7, 64),
        // --- route equalities for the statistic ---
        exact(
            "gf-closed-form",
            "product route = closed theta route, exactly",
            "Theorem 1 with (30)",
            ROUTE_ORDER,
            sides_gf_routes,
        ),
        exact(
            "gf-convolution",
            "divisor convolution = product route, exactly",
            "Theorem 2",
            CONVOLUTION_ORDER,
            sides_gf_convolution,
        ),
        // --- dissection identities for the statistic ---
        exact("pf2", "Σ SOME-bar(4n+3) qⁿ = 8 ψ(q²)²/φ(-q)⁴ Σ(2m+1)² q^(m²+m)", "Section 4, (pf2)", IDENTITY_ORDER, sides_pf2),
        exact("pf3", "Σ SOME-bar(8n+7) qⁿ = 64 ψ(q)⁶/φ(-q)⁸ Σ(2m+1)² q^(m(m+1)/2)", "Section 4, (pf3)", IDENTITY_ORDER, sides_pf3),
        exact("pf21", "Σ SOME-bar(2n) qⁿ = 8 φ(q)²/φ(-q²)⁴ Σk² q^(2k²)", "Section 5, (pf21)", IDENTITY_ORDER, sides_pf21),
        exact("pf22", "Σ SOME-bar(4n+2) qⁿ = 32 ψ(q²)²/φ(-q)⁴ Σk² q^(k²)", "Section 5, (pf22)", IDENTITY_ORDER, sides_pf22),
        exact("pf23", "Σ SOME-bar(4n) qⁿ = 8 φ(q)²/φ(-q)⁴ Σk² q^(k²)", "Section 5, (pf23)", IDENTITY_ORDER, sides_pf23),
        exact("pf23-alt", "8 φ(q)²/φ(-q)⁴ Σk² q^(k²) = 8 φ(q)⁶/φ(-q²)⁸ Σk² q^(k²)", "Section 5, (pf23), second form", IDENTITY_ORDER, sides_pf23_alt),
        // --- theta identity suite ---
        exact("eq27", "φ(-q²)² = φ(q)·φ(-q)", "Preliminaries, (27)", IDENTITY_ORDER, sides_eq27),
        exact("eq28", "φ(q) = φ(q⁴) + 2q ψ(q⁸)", "Preliminaries, (28)", IDENTITY_ORDER, sides_eq28),
        exact("eq29", "φ(q)² = φ(q²)² + 4q ψ(q⁴)²", "Preliminaries, (29)", IDENTITY_ORDER, sides_eq29),
        exact("lemma-ep1", "q dlog φ(q) = 2 Σ q^(2n-1)/(1+q^(2n-1))²", "Preliminaries lemma, (Ep1)", IDENTITY_ORDER, sides_lemma_ep1),
        exact("lemma-ep2", "q dlog φ(q) = 2 Σk² q^(k²) / φ(q)", "Preliminaries lemma, (Ep2)", IDENTITY_ORDER, sides_lemma_ep2),
        exact("pf24", "φ(q)⁶ expanded over φ(q²), ψ(q⁴)", "Section 5, (pf24)", IDENTITY_ORDER, sides_pf24),
        exact("f-cubed", "f(-q)³ = Σ (-1)^k (2k+1) q^(k(k+1)/2)", "Section 6; cube of Euler's product", IDENTITY_ORDER, sides_f_cubed),
        exact("phi-9-dissection", "φ(q) = φ(q⁹) + 2q f(q³, q¹⁵)", "Section 6; 9-dissection of φ", IDENTITY_ORDER, sides_phi_nine),
        exact("jtp-psi", "f(q, q³) by triple product", "Preliminaries; Jacobi triple product", IDENTITY_ORDER, sides_jtp_psi),
        exact("jtp-phi", "f(q, q) by triple product", "Preliminaries; Jacobi triple product", IDENTITY_ORDER, sides_jtp_phi),
        exact("jtp-euler", "f(-q, -q²) by triple product", "Preliminaries; Jacobi triple product", IDENTITY_ORDER, sides_jtp_euler),
        exact("jtp-f-q3-q15", "f(q³, q¹⁵) by triple product", "Section 6; Jacobi triple product", IDENTITY_ORDER, sides_jtp_f_q3_q15),
        exact("jtp-f-q6-q30", "f(-q⁶, -q³⁰) by triple product", "Section 6; Jacobi triple product", IDENTITY_ORDER, sides_jtp_f_q6_q30),
        exact(
            "eta-quotient-mod5-exact",
            "ψ(q)⁶/φ(-q)⁸ = f(-q²)²⁰/f(-q)²²",
            "Section 6; eta quotient form",
            IDENTITY_ORDER,
            sides_eta_mod5_exact,
        ),
        // --- congruence lemma suite ---
        cong("pf25-k1", "φ(q)²/φ(-q)² ≡ 1 (mod 2^3)", "Section 5, (pf25) with k=1", CONGRUENCE_ORDER, 1 << 3, csides_pf25),
        cong("pf25-k2", "φ(q)⁴/φ(-q)⁴ ≡ 1 (mod 2^4)", "Section 5, (pf25) with k=2", CONGRUENCE_ORDER, 1 << 4, csides_pf25),
        cong("pf25-k3", "φ(q)⁸/φ(-q)⁸ ≡ 1 (mod 2^5)", "Section 5, (pf25) with k=3", CONGRUENCE_ORDER, 1 << 5, csides_pf25),
        cong("psi-squared-mod2", "ψ(q)² ≡ ψ(q²) (mod 2)", "Section 5; parity of ψ²", CONGRUENCE_ORDER, 2, csides_psi_squared),
        cong(
            "eta-quotient-mod5",
            "f(-q²)²⁰/f(-q)²² ≡ f(-q)³ f(-q¹⁰)⁴/f(-q⁵)⁵ (mod 5)",
            "Section 6; eta quotient reduction",
            CONGRUENCE_ORDER,
            5,
            csides_eta_mod5,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_ids_unique_and_large_enough() {
        let claims = builtin_claims();
        assert!(claims.len() >= 30, "registry has {} claims", claims.len());
        let ids: BTreeSet<&str> = claims.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), claims.len(), "duplicate claim id");
    }

    #[test]
    fn progression_claims_pass_at_moderate_order() {
        let ids: Vec<String> = ["eq2", "eq3", "eq22", "eq20", "some-5n4", "pbar-4n3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let reports = run_all(512, Some(&ids), 1).unwrap();
        assert_eq!(reports.len(), ids.len());
        for r in &reports {
            assert_eq!(
                r.status,
                Status::Pass,
                "{} failed: {:?}",
                r.claim_id,
                r.violations
            );
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn selection_keeps_registry_order() {
        let ids: Vec<String> = ["eq3", "eq2"].iter().map(|s| s.to_string()).collect();
        let reports = run_all(128, Some(&ids), 1).unwrap();
        assert_eq!(reports[0].claim_id, "eq2");
        assert_eq!(reports[1].claim_id, "eq3");
    }

    #[test]
    fn unknown_claim_id_is_an_error() {
        let ids = vec!["no-such-claim".to_string()];
        assert!(matches!(
            run_all(128, Some(&ids), 1),
            Err(VerifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn negative_controls_fail() {
        // false claim: SOME-bar(4n+1) is NOT always 0 mod 8 (n=0 gives 2)
        let ctx = VerifyContext::new(128);
        let bogus = Claim {
            id: "control-false-1",
            title: "SOME-bar(4n+1) ≡ 0 (mod 8) — deliberately false",
            anchor: "negative control",
            kind: ClaimKind::Progression {
                subject: Subject::SomeBar,
                step: 4,
                residue: 1,
                modulus: 8,
            },
        };
        let report = evaluate(&bogus, &ctx);
        assert_eq!(report.status, Status::Fail);
        assert_eq!(report.violations[0].n, 0);
        assert_eq!(report.violations[0].value, "2");

        let bogus2 = Claim {
            id: "control-false-2",
            title: "SOME-bar(3n+1) ≡ 0 (mod 3) — deliberately false",
            anchor: "negative control",
            kind: ClaimKind::Progression {
                subject: Subject::SomeBar,
                step: 3,
                residue: 1,
                modulus: 3,
            },
        };
        let report = evaluate(&bogus2, &ctx);
        assert_eq!(report.status, Status::Fail);
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn modulus_one_passes_vacuously() {
        let f = partitions::some_bar_series(40);
        let report = check_progression(&f, 4, 1, 1);
        assert_eq!(report.status, Status::Pass);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn empty_range_is_informational() {
        let f = partitions::some_bar_series(40);
        let report = check_progression(&f, 512, 320, 8);
        assert_eq!(report.instances, 0);
        assert_eq!(report.status, Status::Informational);
    }

    #[test]
    fn trivial_relation_passes() {
        let f = partitions::some_bar_series(60);
        let report = check_relation(&f, (1, 0), (1, 0), 1, 97);
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.instances, 61);
    }

    #[test]
    fn nonsquare_square_exemption_matters() {
        let f = partitions::some_bar_series(64);
        let report = check_nonsquare(&f, 1, 8);
        assert_eq!(report.status, Status::Pass, "{:?}", report.violations);
        // the exempted index 1 really would violate: SOME-bar(1) = 2
        assert_eq!(f.coeff(1) % 8u8, BigInt::from(2));
    }

    #[test]
    fn exact_and_congruent_checkers() {
        let f = partitions::some_bar_series(50);
        let report = check_exact(&f, &f, 50);
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.instances, 51);

        let g = partitions::some_bar_series_closed(50);
        assert_eq!(check_exact(&f, &g, 50).status, Status::Pass);

        let shifted = &g + &Series::monomial(1, 7, 50).unwrap();
        let report = check_exact(&f, &shifted, 50);
        assert_eq!(report.status, Status::Fail);
        assert_eq!(report.violations.len(), 1, "first divergence only");
        assert_eq!(report.violations[0].n, 7);
        assert_eq!(report.violations[0].value, "-1");
        // off by 8 is invisible mod 8, visible mod 16
        let bump = &g + &Series::monomial(8, 7, 50).unwrap();
        assert_eq!(check_congruent(&f, &bump, 8, 50).status, Status::Pass);
        assert_eq!(check_congruent(&f, &bump, 16, 50).status, Status::Fail);
    }

    #[test]
    fn informational_claim_reports_without_asserting() {
        let ids = vec!["eq23-as-stated".to_string()];
        let reports = run_all(256, Some(&ids), 1).unwrap();
        assert_eq!(reports[0].status, Status::Informational);
        // as-stated form genuinely fails early (first at n=1, value 48 -> 48+? )
        assert!(
            !reports[0].violations.is_empty(),
            "the 29n+19 scan is expected to produce counterexamples"
        );
        assert_eq!(reports[0].violations[0].n, 1);
    }

    #[test]
    fn derived_sums_match_enumeration() {
        let (odd, even) = sums_mod(24, 1 << 8);
        for n in 0..=24u64 {
            let (o, e) = partitions::sums_oracle(n);
            assert_eq!(odd.coeff(n as usize), o % (1 << 8), "s_odd({n})");
            assert_eq!(even.coeff(n as usize), e % (1 << 8), "s_even({n})");
        }
    }

    #[test]
    fn residue_routes_agree_at_moderate_order() {
        // product route vs closed route, in residue arithmetic
        let order = 1024;
        let a = partitions::some_bar_series_mod(order, TWO_ADIC_MODULUS);
        let b = partitions::some_bar_series_closed_mod(order, TWO_ADIC_MODULUS);
        assert!(a.equal_upto(&b, order));
    }

    #[test]
    fn parallel_evaluation_is_deterministic() {
        let ids: Vec<String> = ["eq2", "eq3", "eq6-k1", "eq9", "eq22", "pbar-4n3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let serial = run_all(256, Some(&ids), 1).unwrap();
        let parallel = run_all(256, Some(&ids), 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn report_json_round_trips() {
        let f = partitions::some_bar_series(40);
        let report = check_progression(&f, 4, 1, 8);
        let text = serde_json::to_string(&report).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(text.contains("\"claim_id\""));
        assert!(text.contains("\"violations\""));
        assert!(text.contains("\"kind\":\"progression\""));
    }
}
