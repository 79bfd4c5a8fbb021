//! The truncated-product positivity conjectures of Merca.
//!
//! The objects here revolve around the special exponent sequence
//! `N_n = n (1 + v(n)/2)`, where `v` is the 2-adic valuation, and the product
//! `prod_{n >= 1} (1 - q^{N_{2n}})` over its even-index values. Two sign
//! patterns are claimed: multiplying that product by the alternating
//! truncations of Euler's product (over an asymmetric window of `2k` terms
//! and a symmetric one of `2k + 1` terms) always lands in `N[[q]]`.
//!
//! The proofs, reproduced here as checks, reduce both claims to
//!
//! * a factorization lemma: the product divided by `(q;q)_inf` equals
//!   `P(q) / ((1-q)(1-q^4)(1-q^5))` with `P` coefficientwise nonnegative
//!   ([`special_factor_series`]) — this works because the even-index `N`
//!   values fall into five residue classes, each a multiple of a
//!   corresponding class partitioning the positive integers; and
//! * tail positivity: the asymmetric-window case is the `(1, 4, 5)` defect
//!   family, and the symmetric-window case needs only the elementary
//!   staircase `gamma'` = (symmetric tail)/(1 - q), whose values are 0, 1,
//!   and 2 in a predictable interval pattern ([`predicted_gamma_prime`]).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::report::{IdentityReport, PositivityReport};
use crate::series::IntegerSeries;
use crate::theta::{theta_central, theta_tail, theta_tail_outside, ThetaForm};

/// One value of the special exponent sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MercaExponent {
    /// The index `n >= 1`.
    pub index: u64,
    /// The 2-adic valuation `v(n)`.
    pub two_adic: u32,
    /// `N_n = n (1 + v(n)/2) = n (2 + v(n)) / 2`.
    pub exponent: u64,
}

/// Computes `N_n = n (1 + v(n)/2)`. This is always an integer: odd `n` has
/// `v(n) = 0` (so the half cancels against the 2), and even `n` absorbs the
/// halving itself.
pub fn merca_exponent(n: u64) -> Result<MercaExponent> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "special exponent index must be positive".into(),
        ));
    }
    let two_adic = n.trailing_zeros();
    let doubled = n as u128 * (2 + two_adic as u128);
    if !doubled.is_multiple_of(2) {
        // n odd forces the factor (2 + v) = 2; n even is itself divisible by
        // 2, so this cannot happen. Kept as a guard on the integrality claim.
        return Err(Error::InternalConsistency(format!(
            "special exponent N_{n} is not an integer"
        )));
    }
    let exponent = u64::try_from(doubled / 2).map_err(|_| {
        Error::InvalidArgument(format!("special exponent N_{n} overflows"))
    })?;
    Ok(MercaExponent { index: n, two_adic, exponent })
}

/// The truncated product `prod_{n >= 1} (1 - q^{N_{2n}})`.
///
/// The exponents are not monotone in `n` (e.g. `N_20 = 40 < N_16 = 48`), but
/// `N_{2n} >= 3n` always, which bounds how far the loop must look.
pub fn merca_product(order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::one(order);
    let mut n = 1u64;
    while 3 * n <= order as u64 {
        let e = merca_exponent(2 * n).expect("positive index").exponent;
        if e <= order as u64 {
            s.mul_one_minus_qm(e as usize);
        }
        n += 1;
    }
    s
}

/// The series `P(q)` in the factorization
///
/// ```text
/// prod_{n>=1} (1 - q^{N_{2n}}) / (q;q)_inf = P(q) / ((1-q)(1-q^4)(1-q^5)).
/// ```
///
/// computed as the left-hand quotient times the three sparse factors. The
/// factorization lemma asserts `P` has nonnegative coefficients.
pub fn special_factor_series(order: usize) -> IntegerSeries {
    let mut s = merca_product(order);
    for m in 1..=order {
        s.div_one_minus_qm(m);
    }
    for m in [1, 4, 5] {
        s.mul_one_minus_qm(m);
    }
    s
}

/// Scans `P(q)` for negative coefficients.
pub fn check_special_factor(order: usize) -> PositivityReport {
    PositivityReport::scan(
        "special factor of the even-index truncated product",
        &special_factor_series(order),
    )
}

fn require_positive_k(k: u64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "truncation index k must be at least 1, got {k}"
        )));
    }
    Ok(())
}

/// The staircase series: the symmetric-window pentagonal tail
/// `sum_{j not in [-k, k]} (-1)^{j+k-1} q^{j(3j+1)/2}` divided by `(1 - q)`.
pub fn gamma_prime_series(k: u64, order: usize) -> Result<IntegerSeries> {
    require_positive_k(k)?;
    let ki = k as i64;
    let mut s = theta_tail_outside(&ThetaForm::pentagonal(), -ki, ki, ki + 1, order);
    s.div_one_minus_qm(1);
    Ok(s)
}

/// The predicted staircase value: with `f(j) = j(3j+1)/2` and
/// `g(j) = j(3j-1)/2`, the value is 0 below `g(k+1)`, then cycles
/// 1 on `[g(k+2l+1), f(k+2l+1))`, 2 on `[f(k+2l+1), g(k+2l+2))`,
/// 1 on `[g(k+2l+2), f(k+2l+2))`, 0 on `[f(k+2l+2), g(k+2l+3))`
/// for `l = 0, 1, 2, ...` — running sums of the tail's `+1/-1` pattern.
pub fn predicted_gamma_prime(k: u64, n: u64) -> u8 {
    let form = ThetaForm::pentagonal();
    let ki = k as i64;
    let n = n as i64;
    let f = |j: i64| form.exponent(j);
    let g = |j: i64| form.exponent(-j);
    let mut value = 0u8;
    let mut l = 0i64;
    while n >= g(ki + 2 * l + 1) {
        value = 1;
        for (next, boundary) in [(2, f(ki + 2 * l + 1)), (1, g(ki + 2 * l + 2)), (0, f(ki + 2 * l + 2))]
        {
            if n >= boundary {
                value = next;
            }
        }
        l += 1;
    }
    value
}

/// Compares the staircase series against its predicted pattern, degree by
/// degree.
pub fn check_gamma_prime(k: u64, order: usize) -> Result<IdentityReport> {
    let actual = gamma_prime_series(k, order)?;
    let mut predicted = IntegerSeries::zero(order);
    for n in 0..=order {
        predicted.set_coeff(n, BigInt::from(predicted_gamma_prime(k, n as u64)));
    }
    IdentityReport::compare(
        &format!("staircase pattern of the symmetric-window tail (k = {k})"),
        &actual,
        &predicted,
    )
}

/// Shared state for the conjecture checks: the truncated product and its
/// quotient by Euler's product, both expensive enough to cache across `k`.
pub struct MercaSuite {
    order: usize,
    product: IntegerSeries,
    quotient: IntegerSeries,
}

impl MercaSuite {
    pub fn new(order: usize) -> Self {
        let product = merca_product(order);
        let mut quotient = product.clone();
        for m in 1..=order {
            quotient.div_one_minus_qm(m);
        }
        MercaSuite { order, product, quotient }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `prod (1 - q^{N_{2n}})`.
    pub fn product(&self) -> &IntegerSeries {
        &self.product
    }

    /// `prod (1 - q^{N_{2n}}) / (q;q)_inf`.
    pub fn quotient(&self) -> &IntegerSeries {
        &self.quotient
    }
}

/// The two sign-pattern conjectures over the truncated product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MercaConjecture {
    /// Asymmetric window: `(-1)^k (1 - (1/(q;q)_inf) * [2k central terms])`
    /// times the product.
    First,
    /// Symmetric window: `(-1)^{k-1} (1 - (1/(q;q)_inf) * [2k+1 central
    /// terms])` times the product.
    Second,
}

/// Outcome of one conjecture at one `k`: the display form must equal the
/// quotient-times-tail route, and the shared series must be nonnegative.
#[derive(Clone, Debug)]
pub struct ConjectureCheck {
    pub identity: IdentityReport,
    pub positivity: PositivityReport,
}

/// Builds the display form and the tail route for one conjecture and
/// compares them.
///
/// Both displays rewrite, via Euler's pentagonal number theorem, to the
/// quotient times a two-sided pentagonal tail: the asymmetric window leaves
/// the standard tail outside `[-k, k-1]`, the symmetric window the tail
/// outside `[-k, k]` with the opposite parity.
pub fn check_merca_conjecture(
    suite: &MercaSuite,
    which: MercaConjecture,
    k: u64,
) -> Result<ConjectureCheck> {
    require_positive_k(k)?;
    let ki = k as i64;
    let order = suite.order;
    let form = ThetaForm::pentagonal();
    let (name, central, tail, display_sign) = match which {
        MercaConjecture::First => (
            format!("truncated-product positivity, asymmetric window (k = {k})"),
            theta_central(&form, -ki, ki - 1, order),
            theta_tail(&form, ki, order)?,
            if k.is_multiple_of(2) { 1 } else { -1 },
        ),
        MercaConjecture::Second => (
            format!("truncated-product positivity, symmetric window (k = {k})"),
            theta_central(&form, -ki, ki, order),
            theta_tail_outside(&form, -ki, ki, ki + 1, order),
            if k % 2 == 1 { 1 } else { -1 },
        ),
    };
    let display = suite
        .product
        .sub(&suite.quotient.mul(&central)?)?
        .scaled(display_sign);
    let tail_route = suite.quotient.mul(&tail)?;
    let identity = IdentityReport::compare(&name, &display, &tail_route)?;
    let positivity = PositivityReport::scan(&name, &tail_route);
    Ok(ConjectureCheck { identity, positivity })
}
