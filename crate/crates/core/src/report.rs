//! Machine-readable outcomes of series comparisons and positivity scans.
//!
//! Every check in the higher-level modules reduces to one of two primitive
//! questions about truncated series: "are these two equal?" and "are all
//! coefficients nonnegative?". The reports here answer those questions in a
//! form that can be logged, serialized, and diffed: each carries a content
//! digest of the series involved so that independent runs can be compared
//! without shipping the full coefficient lists around.

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::series::IntegerSeries;

/// Content digest of a series: SHA-256 over the truncation order and the
/// decimal coefficient list. Two series collide iff they have the same order
/// and identical coefficients, so digests from separate runs are comparable.
pub fn series_digest(series: &IntegerSeries) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("order:{}\n", series.order()));
    for c in series.coeffs() {
        hasher.update(c.to_string());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(2 * digest.len());
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Result of comparing two series that a theorem says are equal.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    /// Human-readable name of the identity under test.
    pub name: String,
    /// Truncation order both sides were expanded to.
    pub order: usize,
    pub lhs_digest: String,
    pub rhs_digest: String,
    pub equal: bool,
    /// Lowest degree at which the sides differ, if they do.
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    /// Compares two series coefficientwise. The sides must already share a
    /// truncation order; comparing across orders would silently weaken the
    /// check, so it is an error instead.
    pub fn compare(name: &str, lhs: &IntegerSeries, rhs: &IntegerSeries) -> Result<Self> {
        // Reuse subtraction's order check rather than duplicating it.
        let difference = lhs.sub(rhs)?;
        let first_mismatch = difference
            .coeffs()
            .iter()
            .position(|c| !num_traits::Zero::is_zero(c));
        Ok(IdentityReport {
            name: name.to_string(),
            order: lhs.order(),
            lhs_digest: series_digest(lhs),
            rhs_digest: series_digest(rhs),
            equal: first_mismatch.is_none(),
            first_mismatch,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "order": self.order,
            "lhs_digest": self.lhs_digest,
            "rhs_digest": self.rhs_digest,
            "equal": self.equal,
            "first_mismatch": self.first_mismatch,
        })
    }
}

/// Result of scanning a series for negative coefficients.
#[derive(Clone, Debug)]
pub struct PositivityReport {
    /// Human-readable name of the series under test.
    pub name: String,
    /// Truncation order of the scanned series.
    pub order: usize,
    /// Smallest coefficient found (ties broken by lowest degree).
    pub min_coefficient: BigInt,
    /// Degree at which the minimum occurs.
    pub min_at: usize,
    pub nonnegative: bool,
}

impl PositivityReport {
    /// Scans every coefficient and records the minimum.
    pub fn scan(name: &str, series: &IntegerSeries) -> Self {
        let (min_at, min_coefficient) = series.min_coefficient();
        PositivityReport {
            name: name.to_string(),
            order: series.order(),
            min_coefficient: min_coefficient.clone(),
            min_at,
            nonnegative: !min_coefficient.is_negative(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "order": self.order,
            // Stringified: the minimum can exceed any fixed-width integer,
            // and this crate never emits floats.
            "min_coefficient": self.min_coefficient.to_string(),
            "min_at": self.min_at,
            "nonnegative": self.nonnegative,
        })
    }
}
