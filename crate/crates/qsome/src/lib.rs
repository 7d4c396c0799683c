//! Exact truncated q-series arithmetic and overpartition statistics.
//!
//! The crate computes the signed part-sum statistic of overpartitions (the
//! sum of all odd parts minus the sum of all even parts, written `SOME-bar`
//! below) by several independent routes and machine-checks a catalog of
//! identities and Ramanujan-type congruences against those series:
//!
//! - [`series`] — a dense, exact, truncated power series ring over big
//!   integers, with dissection and logarithmic-derivative operators, plus a
//!   word-size residue variant for large congruence scans.
//! - [`theta`] — q-Pochhammer products, Ramanujan theta functions `f(a, b)`,
//!   the special cases `phi`, `psi`, `f(-q)`, and Lambert-type sums.
//! - [`partitions`] — brute-force overpartition enumeration (the independent
//!   oracle) and the statistics built on it, with series routes for scale.
//! - [`verify`] — a registry of checkable claims (congruences on arithmetic
//!   progressions, relations, exact identities) and the engine that checks
//!   them, producing structured reports.
//! - [`cli`] — the `qsome` command line front end over all of the above.
//!
//! Every runnable capability has a corresponding example under `examples/`.

pub mod cli;
pub mod partitions;
pub mod series;
pub mod theta;
pub mod verify;

pub use series::{ResidueSeries, Series, SeriesError};
pub use theta::Sign;
pub use verify::{Claim, Report, Status};
