//! Exact arithmetic for truncated theta quotients and positivity thresholds.
//!
//! The library studies power series of the form
//!
//! ```text
//!   theta-tail(A, B; k)
//!   -------------------------------    (coefficients gamma_k(n))
//!   (1 - q^a)(1 - q^b)(1 - q^c)
//! ```
//!
//! where the numerator is the tail of an alternating theta series with
//! exponents `A j^2 + B j` and the denominator is a three-part partition
//! generating function with pairwise coprime parts. Everything is computed
//! in exact integer and rational arithmetic — no floating point anywhere.
//!
//! The main capabilities, bottom to top:
//!
//! - [`series`]: dense truncated integer series (`IntegerSeries`) with exact
//!   `BigInt` coefficients and sparse binomial multiply/divide helpers.
//! - [`theta`]: quadratic exponent forms (`ThetaForm`) and their full,
//!   central, and tail theta series.
//! - [`periodic`]: the quasi-polynomial structure of restricted partition
//!   counters — polynomial part, periodic remainder, and its bound `D`.
//! - [`bounds`]: closed-form threshold quadratics; solving them yields the
//!   global index `K` and per-`k` degree thresholds `N^k` beyond which
//!   coefficient nonnegativity is automatic.
//! - [`verifier`]: the nine-case lower-bound engine for individual
//!   coefficients, finite-range scans, and JSON positivity certificates.
//! - [`identities`]: classical series identities (pentagonal number theorem,
//!   Gauss square/triangular products, Jacobi-style quintuple quotients,
//!   Andrews–Merca and Guo–Zeng truncated forms) used as cross-checks.
//! - [`merca`]: the Merca exponent sequence, its infinite product, and the
//!   associated truncation conjectures.
//! - [`tables`]: embedded reference threshold tables and full reproduction.
//! - [`report`]: digest-based identity and positivity reports.
//!
//! # Example
//!
//! ```
//! use qpositivity::bounds::{compute_thresholds, FamilyParams};
//! use qpositivity::periodic::CoprimeTriple;
//! use qpositivity::theta::ThetaForm;
//!
//! let triple = CoprimeTriple::new(1, 2, 3).unwrap();
//! let params = FamilyParams::new(triple, ThetaForm::squares()).unwrap();
//! let thresholds = compute_thresholds(&params).unwrap();
//! assert_eq!(thresholds.k_min, 3);
//! assert_eq!(thresholds.per_k[0].n, 529);
//! ```

pub mod bounds;
pub mod error;
pub mod identities;
pub mod merca;
pub mod periodic;
pub mod rational;
pub mod report;
pub mod series;
pub mod tables;
pub mod theta;
pub mod verifier;

pub use error::{Error, Result};
