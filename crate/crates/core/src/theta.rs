//! Alternating theta sums with quadratic exponents.
//!
//! A `ThetaForm` is the exponent pattern `e(j) = A*j^2 + B*j` with rational
//! `A > B >= 0` constrained so that `2A` and `A + B` are integers; those two
//! conditions make `e(j)` an integer for every integer `j` (first differences
//! are `2Aj + (B - A)`, both parts integral, and `e(0) = 0`). The full series
//! is `sum_{j in Z} (-1)^j q^{e(j)}`; the tail drops the `2k` central indices
//! `j in [-k, k-1]` and flips signs by `(-1)^{j+k}` so that its leading term
//! is `+q^{e(k)}`.

use crate::error::{Error, Result};
use crate::rational::{int, ratio, Rational};
use crate::series::IntegerSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaForm {
    quad: Rational,
    lin: Rational,
}

impl ThetaForm {
    /// Validates `A > B >= 0`, `2A` integral, `A + B` integral.
    pub fn new(quad: Rational, lin: Rational) -> Result<Self> {
        if quad <= lin {
            return Err(Error::InvalidArgument(format!(
                "theta form needs A > B, got A={quad}, B={lin}"
            )));
        }
        if lin < int(0) {
            return Err(Error::InvalidArgument(format!(
                "theta form needs B >= 0, got B={lin}"
            )));
        }
        if !(&quad + &quad).is_integer() {
            return Err(Error::InvalidArgument(format!(
                "theta form needs 2A integral, got A={quad}"
            )));
        }
        if !(&quad + &lin).is_integer() {
            return Err(Error::InvalidArgument(format!(
                "theta form needs A+B integral, got A={quad}, B={lin}"
            )));
        }
        Ok(ThetaForm { quad, lin })
    }

    /// Exponents `j(3j+1)/2`: the pentagonal-number form.
    pub fn pentagonal() -> Self {
        ThetaForm::new(ratio(3, 2), ratio(1, 2)).expect("valid form")
    }

    /// Exponents `j^2`.
    pub fn squares() -> Self {
        ThetaForm::new(int(1), int(0)).expect("valid form")
    }

    /// Exponents `2j^2 + j`; over all of Z these run through the triangular
    /// numbers.
    pub fn triangular() -> Self {
        ThetaForm::new(int(2), int(1)).expect("valid form")
    }

    /// Coefficient of `j^2` (the `A` parameter).
    pub fn quad(&self) -> &Rational {
        &self.quad
    }

    /// Coefficient of `j` (the `B` parameter).
    pub fn lin(&self) -> &Rational {
        &self.lin
    }

    /// Exact integer exponent `A j^2 + B j`. The form invariants make this
    /// provably integral, which is asserted rather than trusted.
    pub fn exponent(&self, j: i64) -> i64 {
        let jr = int(j);
        let e = &self.quad * &jr * &jr + &self.lin * &jr;
        assert!(e.is_integer(), "quadratic exponent must be integral");
        let n = e.to_integer();
        i64::try_from(n).expect("exponent fits a machine integer")
    }
}

impl std::fmt::Display for ThetaForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "A={}, B={}", self.quad, self.lin)
    }
}

fn sign_of(j: i64, parity_shift: i64) -> i64 {
    if (j + parity_shift).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `sum_{j in Z} (-1)^j q^{A j^2 + B j}` truncated at `order`.
pub fn theta_full(form: &ThetaForm, order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::zero(order);
    let order = order as i64;
    let mut j = 0i64;
    loop {
        let e = form.exponent(j);
        if e > order {
            break;
        }
        s.add_to_coeff(e as usize, sign_of(j, 0));
        j += 1;
    }
    let mut j = -1i64;
    loop {
        let e = form.exponent(j);
        if e > order {
            break;
        }
        s.add_to_coeff(e as usize, sign_of(j, 0));
        j -= 1;
    }
    s
}

/// Tail over `j < low` and `j > high`, signed by `(-1)^{j + parity_shift}`.
/// The excluded window must contain zero so the exponents grow monotonically
/// away from it in both directions.
pub fn theta_tail_outside(
    form: &ThetaForm,
    low: i64,
    high: i64,
    parity_shift: i64,
    order: usize,
) -> IntegerSeries {
    assert!(low <= 0 && high >= 0, "excluded window must contain 0");
    let mut s = IntegerSeries::zero(order);
    let order_i = order as i64;
    let mut j = high + 1;
    loop {
        let e = form.exponent(j);
        if e > order_i {
            break;
        }
        s.add_to_coeff(e as usize, sign_of(j, parity_shift));
        j += 1;
    }
    let mut j = low - 1;
    loop {
        let e = form.exponent(j);
        if e > order_i {
            break;
        }
        s.add_to_coeff(e as usize, sign_of(j, parity_shift));
        j -= 1;
    }
    s
}

/// Truncation tail `sum_{j not in [-k, k-1]} (-1)^{j+k} q^{A j^2 + B j}`.
/// Needs `k >= 1`; the sign shift makes the lowest term `+q^{e(k)}`.
pub fn theta_tail(form: &ThetaForm, k: i64, order: usize) -> Result<IntegerSeries> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "tail index k must be at least 1, got {k}"
        )));
    }
    Ok(theta_tail_outside(form, -k, k - 1, k, order))
}

/// Central strip `sum_{j=low..=high} (-1)^j q^{A j^2 + B j}` as a series;
/// exponents past the order are dropped.
pub fn theta_central(form: &ThetaForm, low: i64, high: i64, order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::zero(order);
    for j in low..=high {
        let e = form.exponent(j);
        if e <= order as i64 {
            s.add_to_coeff(e as usize, sign_of(j, 0));
        }
    }
    s
}
