//! Finite positivity verification and certificates.
//!
//! The threshold machinery in [`crate::bounds`] proves that the defect series
//!
//! ```text
//! gamma^k(q) = (tail of the theta series after removing 2k central terms)
//!              ---------------------------------------------------------
//!                        (1 - q^a)(1 - q^b)(1 - q^c)
//! ```
//!
//! has nonnegative coefficients once `k >= K`, and, for each `k < K`, from
//! degree `N^k` on. What remains is finite: expand `gamma^k` up to `N^k` and
//! look. This module does the expansion, locates every degree in the nine-case
//! analysis behind those proofs, evaluates the closed-form lower bound for its
//! case, and assembles the results into a machine-readable certificate.
//!
//! The case analysis splits `n` by where it falls relative to the exponents
//! `f(j) = A j^2 + B j` and `g(j) = A j^2 - B j`, which interleave as
//! `f(k) < g(k+1) <= f(k+1) < g(k+2) <= f(k+2) < ...` whenever `A > B >= 0`:
//!
//! | case | range                         | lower bound for `gamma^k(n)`     |
//! |------|-------------------------------|----------------------------------|
//! | 1    | `n < f(k)`                    | `0` (exactly zero)               |
//! | 2    | `[f(k), g(k+1))`              | `alpha(n - f(k))` (exact)        |
//! | 3    | `[g(k+1), f(k+1))`            | edge terms minus `2D`            |
//! | 4    | `[f(k+1), g(k+2))`            | edge terms minus `3D`            |
//! | 5    | `[g(k+2), f(k+2))`            | edge terms minus `4D`            |
//! | 6-9  | same cycle from `f(k+2l)` on  | `Phi_l(n)` + edges − `(4l+c) D`  |
//!
//! where `alpha` counts partitions into parts `{a, b, c}`, `F` is its
//! quadratic main term, `D` bounds its periodic remainder, the "edge terms"
//! are the alternating partial sums `F(n-f(k+2l)) - F(n-g(k+2l+1)) -
//! F(n-f(k+2l+1)) + F(n-g(k+2l+2))` truncated to the boundaries already
//! crossed, and `Phi_l` is the closed form of the first `l` full
//! four-term blocks ([`alternating_main_sum`]).

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::json;

use crate::bounds::{compute_thresholds, FamilyParams, Thresholds};
use crate::error::{Error, Result};
use crate::periodic::{decompose, main_term, main_term_rat, CoprimeTriple, PeriodicDecomposition};
use crate::rational::{format_rational, int, Rational};
use crate::series::IntegerSeries;
use crate::theta::{theta_tail, ThetaForm};

/// Recommended expansion order for the sanity sample at `k >= K`.
pub const DEFAULT_SAMPLE_ORDER: usize = 2000;
/// Recommended number of `k` values sampled at and beyond `K`.
pub const DEFAULT_SAMPLE_EXTRA: u64 = 3;

/// The defect series `gamma^k` for a part triple and theta form: the theta
/// tail divided by `(1 - q^a)(1 - q^b)(1 - q^c)`, truncated at `order`.
///
/// Every coefficient below `f(k) = A k^2 + B k` is zero; in particular, when
/// `order < f(k)` the result is the zero series.
pub fn gamma_series(
    triple: &CoprimeTriple,
    form: &ThetaForm,
    k: u64,
    order: usize,
) -> Result<IntegerSeries> {
    let k = i64::try_from(k)
        .map_err(|_| Error::InvalidArgument(format!("tail index k = {k} is out of range")))?;
    let mut series = theta_tail(form, k, order)?;
    for part in triple.parts() {
        series.div_one_minus_qm(part as usize);
    }
    Ok(series)
}

/// Which of the nine ranges a degree `n` falls into, and for cases 6-9 the
/// block index `l >= 1` (zero for cases 1-5).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseLocation {
    pub case: u8,
    pub l: u64,
}

/// Locates `n` in the nine-case split for tail index `k >= 1`.
///
/// Scans the interleaved boundaries `f(k), g(k+1), f(k+1), g(k+2), f(k+2),
/// ...` and keeps the last one at or below `n`, so empty ranges (which occur
/// whenever `B = 0` makes `g(j) = f(j)`) are skipped correctly.
pub fn classify_case(form: &ThetaForm, k: u64, n: u64) -> CaseLocation {
    debug_assert!(k >= 1, "case analysis needs k >= 1");
    let k = k as i64;
    let n = n as i64;
    let f = |j: i64| form.exponent(j);
    let g = |j: i64| form.exponent(-j);
    if n < f(k) {
        return CaseLocation { case: 1, l: 0 };
    }
    let mut found = CaseLocation { case: 2, l: 0 };
    for (case, boundary) in [(3, g(k + 1)), (4, f(k + 1)), (5, g(k + 2))] {
        if n >= boundary {
            found = CaseLocation { case, l: 0 };
        }
    }
    let mut l = 1;
    while n >= f(k + 2 * l) {
        found = CaseLocation { case: 6, l: l as u64 };
        for (case, boundary) in [(7, g(k + 2 * l + 1)), (8, f(k + 2 * l + 1)), (9, g(k + 2 * l + 2))] {
            if n >= boundary {
                found.case = case;
            }
        }
        l += 1;
    }
    found
}

/// Closed form of the alternating main-term sum over the first `l` complete
/// four-term blocks,
///
/// ```text
/// Phi_l(n) = sum_{j=0}^{l-1} [ F(n - f(k+2j)) - F(n - g(k+2j+1))
///                            - F(n - f(k+2j+1)) + F(n - g(k+2j+2)) ]
///          = l (A-B) (6Ak^2 + 12Akl + 8Al^2 - A - B - (a+b+c) - 2n) / (abc),
/// ```
///
/// where `F(x) = (x^2 + (a+b+c)x) / (2abc)` is the quadratic main term of the
/// partition counter. The massive cancellation (quadratics collapsing to a
/// single linear-in-`n` expression) is what makes the case bounds tractable;
/// a test checks the closed form against the literal sum term by term.
pub fn alternating_main_sum(
    triple: &CoprimeTriple,
    form: &ThetaForm,
    k: u64,
    l: u64,
    n: i64,
) -> Rational {
    if l == 0 {
        return int(0);
    }
    let a = form.quad();
    let b = form.lin();
    let kq = int(k as i64);
    let lq = int(l as i64);
    let inner = int(6) * a * &kq * &kq + int(12) * a * &kq * &lq + int(8) * a * &lq * &lq
        - a
        - b
        - int(triple.sum() as i64)
        - int(2 * n);
    (a - b) * lq * inner / int(triple.product() as i64)
}

/// The proven lower bound for `gamma^k(n)`, along with the case `n` falls in.
///
/// Cases 1 and 2 return the exact value (`0` and `alpha(n - f(k))`); the
/// remaining cases return the closed-form bound from the module table, which
/// may well be negative for small `n` — it is a valid lower bound for every
/// `k >= 1` and only guaranteed nonnegative past the thresholds.
pub fn case_lower_bound(
    decomp: &PeriodicDecomposition,
    form: &ThetaForm,
    k: u64,
    n: u64,
) -> Result<(CaseLocation, Rational)> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "case bounds need a tail index k >= 1, got {k}"
        )));
    }
    let location = classify_case(form, k, n);
    let triple = &decomp.triple;
    let ki = k as i64;
    let ni = n as i64;
    let f = |j: i64| form.exponent(j);
    let g = |j: i64| form.exponent(-j);
    let bound = match location.case {
        1 => int(0),
        2 => {
            let x = (ni - f(ki)) as u64;
            main_term(triple, x) + decomp.beta_at(x)
        }
        case => {
            // Cases 3-5 are the partial blocks at l = 0; cases 6-9 sit after
            // l >= 1 complete blocks. In both groups the bound is Phi_l plus
            // one signed edge term per boundary crossed inside the current
            // block, minus one remainder bound D per main term used so far
            // (4 per complete block plus the edges).
            let l = location.l as i64;
            let edge_count = match case {
                6 => 1,
                3 | 7 => 2,
                4 | 8 => 3,
                _ => 4,
            };
            let base = ki + 2 * l;
            let edges = [
                (1, f(base)),
                (-1, g(base + 1)),
                (-1, f(base + 1)),
                (1, g(base + 2)),
            ];
            let mut bound = alternating_main_sum(triple, form, k, location.l, ni);
            for &(sign, exponent) in edges.iter().take(edge_count) {
                let term = main_term_rat(triple, &int(ni - exponent));
                bound = if sign > 0 { bound + term } else { bound - term };
            }
            bound - int(4 * l + edge_count as i64) * &decomp.bound
        }
    };
    Ok((location, bound))
}

/// One checked degree: where it sits, what the bound says, what the series
/// actually has there.
#[derive(Clone, Debug)]
pub struct CaseProbe {
    pub n: u64,
    pub location: CaseLocation,
    /// Closed-form lower bound for this case (exact value in cases 1-2).
    pub bound: Rational,
    /// Actual coefficient of `q^n` in the defect series.
    pub gamma: BigInt,
    /// Whether `gamma >= bound` — a theorem, so `false` means a bug.
    pub holds: bool,
    /// Whether the bound is an exact prediction (cases 1-2).
    pub exact: bool,
}

/// Reusable probe context: the periodic decomposition and one expanded defect
/// series, so that many degrees can be checked without re-expanding.
pub struct CaseProber {
    decomp: PeriodicDecomposition,
    form: ThetaForm,
    k: u64,
    gamma: IntegerSeries,
}

impl CaseProber {
    /// Expands `gamma^k` once up to `order` and caches the periodic data.
    pub fn new(params: &FamilyParams, k: u64, order: usize) -> Result<Self> {
        let decomp = decompose(&params.triple)?;
        let gamma = gamma_series(&params.triple, &params.form, k, order)?;
        Ok(CaseProber { decomp, form: params.form.clone(), k, gamma })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.gamma.order()
    }

    /// Checks one degree against its case bound.
    pub fn probe(&self, n: u64) -> Result<CaseProbe> {
        if n as usize > self.gamma.order() {
            return Err(Error::InvalidArgument(format!(
                "probe degree {n} exceeds the expanded order {}",
                self.gamma.order()
            )));
        }
        let (location, bound) = case_lower_bound(&self.decomp, &self.form, self.k, n)?;
        let gamma = self.gamma.coeff(n as usize).clone();
        let holds = Rational::from_integer(gamma.clone()) >= bound;
        let exact = location.case <= 2;
        Ok(CaseProbe { n, location, bound, gamma, holds, exact })
    }
}

/// One-shot convenience wrapper: classify `n`, evaluate its case bound, and
/// compare with the actual coefficient. For many probes against the same
/// `(family, k)`, build a [`CaseProber`] once instead.
pub fn case_bound_probe(params: &FamilyParams, k: u64, n: u64) -> Result<CaseProbe> {
    CaseProber::new(params, k, n as usize)?.probe(n)
}

/// Finite verification record for one `k < K`: the thresholds and the minimum
/// coefficient over the unproven range `0 <= n < N`.
#[derive(Clone, Debug)]
pub struct KCertificate {
    pub k: u64,
    /// Block threshold `L` for this `k`.
    pub l: u64,
    /// Degree threshold `N = f(k + 2L)`: nonnegativity is proven from here on.
    pub n: i64,
    /// Minimum coefficient over `0 <= n < N` (nonnegative iff the family
    /// passes at this `k`).
    pub min_coefficient: BigInt,
    /// Degree attaining the minimum.
    pub min_at: usize,
}

/// Machine-checkable positivity certificate for one `(a, b, c, A, B)` family:
/// the computed thresholds plus the exhaustive finite check below them.
#[derive(Clone, Debug)]
pub struct PositivityCertificate {
    pub params: FamilyParams,
    pub thresholds: Thresholds,
    pub per_k: Vec<KCertificate>,
    /// The sanity sample covered `K <= k < sample_k_end` ...
    pub sample_k_end: u64,
    /// ... each expanded to this order.
    pub sample_order: usize,
    /// True iff every finite range `k < K` was coefficientwise nonnegative.
    pub pass: bool,
}

impl PositivityCertificate {
    pub fn verdict(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }

    /// Serializes the certificate. All rationals are `"p/q"` strings and the
    /// minima are decimal strings; nothing is ever rendered as a float.
    pub fn to_json(&self) -> serde_json::Value {
        let per_k: Vec<_> = self
            .per_k
            .iter()
            .map(|c| {
                json!({
                    "k": c.k,
                    "L": c.l,
                    "N": c.n,
                    "min_coeff": c.min_coefficient.to_string(),
                    "min_at": c.min_at,
                })
            })
            .collect();
        json!({
            "family": {
                "a": self.params.triple.a(),
                "b": self.params.triple.b(),
                "c": self.params.triple.c(),
                "A": format_rational(self.params.form.quad()),
                "B": format_rational(self.params.form.lin()),
            },
            "D": format_rational(&self.params.beta_bound),
            "K": self.thresholds.k_min,
            "per_k": per_k,
            // A failing sample aborts certification with an error, so an
            // emitted certificate always records a passing sample.
            "sample": {
                "k_range": [self.thresholds.k_min, self.sample_k_end],
                "T": self.sample_order,
                "pass": true,
            },
            "verdict": self.verdict(),
        })
    }
}

/// Runs the full verification for one family.
///
/// Computes `K` and the per-`k` thresholds `N`, expands each `gamma^k` with
/// `k < K` to order `N - 1` (the degrees the theorems do not cover), and
/// records the minimum coefficient found. A negative minimum there makes the
/// verdict `fail` — that is a legitimate outcome for an arbitrary family, not
/// an error. As a guard against bugs in the threshold machinery itself, the
/// proven region is then sampled: `gamma^k` for `K <= k < K + sample_extra`
/// is expanded to `sample_order`, and a negative coefficient **there**
/// contradicts a theorem, so it aborts with
/// [`Error::InternalConsistency`] rather than producing a certificate.
pub fn certify_family(
    params: &FamilyParams,
    sample_order: usize,
    sample_extra: u64,
) -> Result<PositivityCertificate> {
    let thresholds = compute_thresholds(params)?;
    let mut per_k = Vec::with_capacity(thresholds.per_k.len());
    let mut pass = true;
    for threshold in &thresholds.per_k {
        debug_assert!(threshold.n >= 1);
        let order = (threshold.n - 1) as usize;
        let gamma = gamma_series(&params.triple, &params.form, threshold.k, order)?;
        let (min_at, min_coefficient) = gamma.min_coefficient();
        if min_coefficient.is_negative() {
            pass = false;
        }
        per_k.push(KCertificate {
            k: threshold.k,
            l: threshold.l,
            n: threshold.n,
            min_coefficient: min_coefficient.clone(),
            min_at,
        });
    }
    let sample_k_end = thresholds.k_min + sample_extra;
    for k in thresholds.k_min..sample_k_end {
        let gamma = gamma_series(&params.triple, &params.form, k, sample_order)?;
        if let Some(at) = gamma.first_negative() {
            return Err(Error::InternalConsistency(format!(
                "defect series for k = {k} >= K = {} has a negative coefficient at degree {at}, \
                 contradicting the proven threshold",
                thresholds.k_min
            )));
        }
    }
    Ok(PositivityCertificate {
        params: params.clone(),
        thresholds,
        per_k,
        sample_k_end,
        sample_order,
        pass,
    })
}
