//! Closed-form positivity thresholds for truncated theta quotients.
//!
//! For a family given by a theta form (`A`, `B`) over a coprime triple
//! `(a, b, c)` with remainder bound `D`, the coefficients of the truncation
//! defect are eventually controlled by a finite list of quadratics: thirteen
//! quadratics in the truncation index `k` whose joint nonnegativity threshold
//! is the global index `K`, and five quadratics in an auxiliary index `l`
//! (with `k` fixed) whose threshold `L` converts into an explicit starting
//! degree `N = e(k + 2L)` for coefficient nonnegativity at that `k`.
//!
//! Everything here is exact: quadratics carry rational coefficients and the
//! integer ceiling of the largest real root is found by monotone predicate
//! search, never by floating point.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::periodic::{decompose, CoprimeTriple};
use crate::rational::{int, Rational};
use crate::theta::ThetaForm;

/// Number of quadratics in `k` that jointly determine the global threshold.
pub const K_CASE_COUNT: usize = 13;

/// Number of quadratics in `l` that determine the per-`k` threshold.
pub const L_CASE_COUNT: usize = 5;

/// `lead * x^2 + linear * x + constant` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalQuadratic {
    pub lead: Rational,
    pub linear: Rational,
    pub constant: Rational,
}

impl RationalQuadratic {
    pub fn new(lead: Rational, linear: Rational, constant: Rational) -> Self {
        RationalQuadratic { lead, linear, constant }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.lead * x + &self.linear) * x + &self.constant
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    /// `linear^2 - 4 * lead * constant`.
    pub fn discriminant(&self) -> Rational {
        &self.linear * &self.linear - int(4) * &self.lead * &self.constant
    }

    /// For an upward-opening quadratic: does `x >= m` imply `q(x) >= 0` for
    /// all real `x`? Equivalent to `m` lying at or beyond the larger root,
    /// i.e. `2*lead*m + linear >= 0` and `(2*lead*m + linear)^2 >= disc`.
    fn nonnegative_from(&self, m: u64, disc: &Rational) -> bool {
        let slope = int(2) * &self.lead * int(m as i64) + &self.linear;
        if slope.is_negative() {
            return false;
        }
        &slope * &slope >= *disc
    }
}

impl std::fmt::Display for RationalQuadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})*x^2 + ({})*x + ({})",
            self.lead, self.linear, self.constant
        )
    }
}

/// Smallest integer `m >= 1` such that `q(x) >= 0` for every real `x >= m`.
///
/// Requires `lead > 0`. If the discriminant is negative the quadratic is
/// positive everywhere and the answer is 1; otherwise this is the ceiling of
/// the larger root clamped below by 1, located by exponential plus binary
/// search on the exact monotone predicate.
pub fn ceil_root(q: &RationalQuadratic) -> Result<u64> {
    if !q.lead.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "ceil_root needs a positive leading coefficient, got {}",
            q.lead
        )));
    }
    let disc = q.discriminant();
    if disc.is_negative() || q.nonnegative_from(1, &disc) {
        return Ok(1);
    }
    let mut hi = 2u64;
    while !q.nonnegative_from(hi, &disc) {
        hi = hi
            .checked_mul(2)
            .ok_or_else(|| Error::InvalidArgument("root exceeds u64 range".into()))?;
    }
    let mut lo = hi / 2; // predicate known false here
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if q.nonnegative_from(mid, &disc) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `max` of [`ceil_root`] over a family of quadratics.
pub fn ceil_root_max(qs: &[RationalQuadratic]) -> Result<u64> {
    let mut best = 1;
    for q in qs {
        best = best.max(ceil_root(q)?);
    }
    Ok(best)
}

/// Everything the threshold quadratics depend on: the coprime triple, the
/// theta form, and the sup `D` of the periodic remainder of the partition
/// counter for the triple.
#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub triple: CoprimeTriple,
    pub form: ThetaForm,
    pub beta_bound: Rational,
}

impl FamilyParams {
    /// Builds the parameters, computing `D` from the periodic decomposition.
    pub fn new(triple: CoprimeTriple, form: ThetaForm) -> Result<Self> {
        let beta_bound = decompose(&triple)?.bound;
        Ok(FamilyParams { triple, form, beta_bound })
    }
}

struct Ctx {
    a: Rational, // quadratic coefficient A of the theta exponent
    b: Rational, // linear coefficient B
    d: Rational, // A - B
    s: Rational, // a + b + c
    m: Rational, // a * b * c
    dd: Rational, // remainder bound D
}

impl Ctx {
    fn new(p: &FamilyParams) -> Self {
        let a = p.form.quad().clone();
        let b = p.form.lin().clone();
        let d = &a - &b;
        Ctx {
            a,
            b,
            d,
            s: int(p.triple.sum() as i64),
            m: int(p.triple.product() as i64),
            dd: p.beta_bound.clone(),
        }
    }
}

/// The `index`-th (1-based, `1..=13`) quadratic in `k` whose nonnegativity
/// threshold contributes to the global index `K`.
pub fn k_case_quadratic(params: &FamilyParams, index: usize) -> Result<RationalQuadratic> {
    let c = Ctx::new(params);
    let (a, b, d, s, m, dd) = (&c.a, &c.b, &c.d, &c.s, &c.m, &c.dd);
    let (u, v, w) = match index {
        1 => (
            int(2) * d * d / m,
            d * (int(2) * a - int(2) * b + s) / m,
            d * (a - b + s) / (int(2) * m) - int(2) * dd,
        ),
        2 => (
            int(2) * d * (a + b) / m,
            d * (int(2) * a + int(4) * b + s) / m,
            d * (a + int(3) * b + s) / (int(2) * m) - int(3) * dd,
        ),
        3 => (
            int(4) * a * d / m,
            int(2) * (int(2) * a + b) * d / m,
            -(d * (a - int(3) * b + s)) / m - int(3) * dd,
        ),
        4 => (
            int(4) * a * d / m,
            int(2) * d * (int(2) * a - b) / m,
            -(d * (a + int(5) * b + s)) / m - int(4) * dd,
        ),
        5 => (
            int(4) * a * d / m,
            int(2) * d * (int(2) * a - b) / m,
            -(int(24) * d * (a + b) + s * s) / (int(8) * m) - int(5) * dd,
        ),
        6 => (
            int(4) * a * d / m,
            int(6) * d * (int(2) * a - b) / m,
            d * (a - int(11) * b + s) / m - int(4) * dd,
        ),
        7 => (
            int(2) * d * (int(3) * a - b) / m,
            d * (int(10) * a - int(8) * b + s) / m,
            int(3) * d * (a - int(5) * b + s) / (int(2) * m) - int(6) * dd,
        ),
        8 => (
            int(4) * a * d / m,
            int(6) * d * (int(2) * a + b) / m,
            d * (a + int(13) * b + s) / m - int(4) * dd,
        ),
        9 => (
            int(2) * d * (int(3) * a + b) / m,
            d * (int(10) * a + s + int(10) * b) / m,
            int(3) * d * (a + int(7) * b + s) / (int(2) * m) - int(7) * dd,
        ),
        10 => (
            int(4) * a * d / m,
            int(2) * d * (int(8) * a + b) / m,
            d * (a - int(15) * b + s) / m - int(4) * dd,
        ),
        11 => (
            int(8) * a * d / m,
            int(4) * d * (int(4) * a + b) / m,
            -(int(2) * d * (a - int(7) * b + s)) / m - int(7) * dd,
        ),
        12 => (
            int(4) * a * d / m,
            int(2) * d * (int(8) * a - b) / m,
            -(d * (a + int(17) * b + s)) / m - int(4) * dd,
        ),
        13 => (
            int(8) * a * d / m,
            int(4) * d * (int(4) * a - b) / m,
            -(int(2) * d * (a + int(9) * b + s)) / m - int(8) * dd,
        ),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "k-case index must lie in 1..={K_CASE_COUNT}, got {index}"
            )))
        }
    };
    Ok(RationalQuadratic::new(u, v, w))
}

/// The `index`-th (1-based, `1..=5`) quadratic in `l` for a fixed truncation
/// index `k >= 1`; its threshold contributes to `L` and hence to
/// `N = e(k + 2L)`.
pub fn l_case_quadratic(
    params: &FamilyParams,
    index: usize,
    k: u64,
) -> Result<RationalQuadratic> {
    if k == 0 {
        return Err(Error::InvalidArgument("l-case quadratics need k >= 1".into()));
    }
    let c = Ctx::new(params);
    let (a, b, d, s, m, dd) = (&c.a, &c.b, &c.d, &c.s, &c.m, &c.dd);
    let kk = &int(k as i64);
    let (u, v, w) = match index {
        1 => (
            int(2) * d * (int(2) * a * kk - a - b) / m,
            (int(2) * kk + int(1)) * d * (int(2) * a * kk - a - b) / m - int(4) * dd,
            -(s * s) / (int(8) * m) - dd.clone(),
        ),
        2 => (
            int(4) * d * (a * kk - b) / m,
            d * (int(4) * a * kk * kk + int(4) * a * kk - int(6) * b * kk + a - int(3) * b + s)
                / m
                - int(4) * dd,
            (int(2) * kk + int(1)) * d * (int(2) * a * kk - int(2) * b * kk + a - b + s)
                / (int(2) * m)
                - int(2) * dd,
        ),
        3 => (
            int(4) * d * (a * kk + b) / m,
            d * (int(4) * a * kk * kk + int(4) * a * kk + int(6) * b * kk + a + int(5) * b + s)
                / m
                - int(4) * dd,
            (int(2) * kk + int(1)) * d * (int(2) * a * kk + int(2) * b * kk + a + int(3) * b + s)
                / (int(2) * m)
                - int(3) * dd,
        ),
        4 => (
            int(4) * d * (a * kk + b) / m,
            d * (int(4) * a * kk * kk + int(8) * a * kk + int(2) * b * kk - a + int(7) * b - s)
                / m
                - int(4) * dd,
            d * (int(4) * a * kk * kk + int(4) * a * kk + int(2) * b * kk - a + int(3) * b - s)
                / m
                - int(3) * dd,
        ),
        5 => (
            int(4) * d * (a * kk - b) / m,
            d * (int(4) * a * kk * kk + int(8) * a * kk - int(2) * b * kk - a - int(9) * b - s)
                / m
                - int(4) * dd,
            d * (int(4) * a * kk * kk + int(4) * a * kk - int(2) * b * kk - a - int(5) * b - s)
                / m
                - int(4) * dd,
        ),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "l-case index must lie in 1..={L_CASE_COUNT}, got {index}"
            )))
        }
    };
    if !u.is_positive() {
        return Err(Error::InternalConsistency(format!(
            "l-case {index} lead {u} is not positive for k={k}"
        )));
    }
    Ok(RationalQuadratic::new(u, v, w))
}

/// Per-`k` threshold: coefficients of the defect series at this `k` are
/// nonnegative from degree `n = e(k + 2l)` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KThreshold {
    pub k: u64,
    pub l: u64,
    pub n: i64,
}

/// Output of [`compute_thresholds`]: the global index `k_min = K` (all
/// coefficients nonnegative for every `k >= K`) and, for each `k < K`, the
/// explicit degree from which they are nonnegative.
#[derive(Clone, Debug)]
pub struct Thresholds {
    pub k_min: u64,
    pub per_k: Vec<KThreshold>,
}

/// Computes `K` as the joint threshold of the thirteen `k`-case quadratics,
/// then for each `k = 1, ..., K-1` the threshold `L` of the five `l`-case
/// quadratics and the degree `N = e(k + 2L)`.
pub fn compute_thresholds(params: &FamilyParams) -> Result<Thresholds> {
    let mut hs = Vec::with_capacity(K_CASE_COUNT);
    for i in 1..=K_CASE_COUNT {
        hs.push(k_case_quadratic(params, i)?);
    }
    let k_min = ceil_root_max(&hs)?;
    let mut per_k = Vec::new();
    for k in 1..k_min {
        let mut gs = Vec::with_capacity(L_CASE_COUNT);
        for i in 1..=L_CASE_COUNT {
            gs.push(l_case_quadratic(params, i, k)?);
        }
        let l = ceil_root_max(&gs)?;
        let n = params.form.exponent((k + 2 * l) as i64);
        per_k.push(KThreshold { k, l, n });
    }
    Ok(Thresholds { k_min, per_k })
}
