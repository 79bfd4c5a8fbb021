//! Dense truncated formal power series with exact integer coefficients.
//!
//! A series is a coefficient vector `c[0..=T]` representing
//! `c[0] + c[1]*q + ... + c[T]*q^T + O(q^{T+1})`. The truncation order `T` is
//! fixed when a series is constructed; combining series of different orders is
//! an error, never an implicit re-truncation. Coefficients are
//! arbitrary-precision integers, so no overflow reasoning is ever trusted.
//!
//! Multiplication and division by the sparse factors `(1 - q^m)` and
//! `(1 + q^m)` run in O(T) as in-place recurrences; general products use
//! schoolbook convolution (skipping zero terms, which makes products against
//! theta-style sparse series cheap); inversion uses the standard recurrence
//! `t_0 = 1/s_0`, `t_n = -(1/s_0) * sum_{i=1..n} s_i * t_{n-i}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl IntegerSeries {
    /// The zero series truncated at `order` (inclusive).
    pub fn zero(order: usize) -> Self {
        IntegerSeries {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `coeff * q^exponent`, or zero if the exponent is beyond the order.
    pub fn monomial(order: usize, exponent: usize, coeff: i64) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigInt::from(coeff);
        }
        s
    }

    /// Wrap an explicit coefficient vector; the order is `len - 1`.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        IntegerSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, value: BigInt) {
        self.coeffs[n] = value;
    }

    pub fn add_to_coeff(&mut self, n: usize, delta: i64) {
        self.coeffs[n] += delta;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(IntegerSeries { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntegerSeries { order: self.order, coeffs })
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    pub fn scaled(&self, factor: i64) -> Self {
        let f = BigInt::from(factor);
        IntegerSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * &f).collect(),
        }
    }

    /// The series shifted up by `q^shift` (coefficients past the order drop off).
    pub fn shifted_up(&self, shift: usize) -> Self {
        let mut out = Self::zero(self.order);
        for n in shift..=self.order {
            out.coeffs[n] = self.coeffs[n - shift].clone();
        }
        out
    }

    /// `self += scale * q^shift * other`, used to accumulate sparse sums of
    /// shifted series in O(T) per term.
    pub fn add_assign_shifted(&mut self, other: &Self, shift: usize, scale: i64) {
        assert_eq!(self.order, other.order, "shift-accumulate needs equal orders");
        let f = BigInt::from(scale);
        for n in shift..=self.order {
            self.coeffs[n] += &other.coeffs[n - shift] * &f;
        }
    }

    fn count_nonzero(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        // Put the sparser operand in the outer loop: against theta-style
        // series with O(sqrt T) nonzero terms the product costs O(T^{3/2}).
        let (outer, inner) = if self.count_nonzero() <= other.count_nonzero() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (i, ci) in outer.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in inner.coeffs.iter().take(self.order + 1 - i).enumerate() {
                if !cj.is_zero() {
                    coeffs[i + j] += ci * cj;
                }
            }
        }
        Ok(IntegerSeries { order: self.order, coeffs })
    }

    /// Multiplicative inverse, defined when the constant term is 1 or -1
    /// (the only constant terms that keep checks exact over the integers).
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && !(-c0).is_one() {
            return Err(Error::NonUnitConstant);
        }
        // 1/c0 == c0 for a unit, so t_n = -c0 * sum_{i>=1} s_i t_{n-i}.
        let support: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv = vec![BigInt::zero(); self.order + 1];
        inv[0] = c0.clone();
        for n in 1..=self.order {
            let mut acc = BigInt::zero();
            for (i, si) in &support {
                if *i > n {
                    break;
                }
                acc += *si * &inv[n - i];
            }
            inv[n] = -(c0 * acc);
        }
        Ok(IntegerSeries { order: self.order, coeffs: inv })
    }

    /// Multiply in place by `(1 - q^m)`: descending update `c[n] -= c[n-m]`.
    pub fn mul_one_minus_qm(&mut self, m: usize) {
        assert!(m >= 1, "factor exponent must be positive");
        if m > self.order {
            return;
        }
        for n in (m..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - m];
        }
    }

    /// Multiply in place by `(1 + q^m)`.
    pub fn mul_one_plus_qm(&mut self, m: usize) {
        assert!(m >= 1, "factor exponent must be positive");
        if m > self.order {
            return;
        }
        for n in (m..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - m];
        }
    }

    /// Divide in place by `(1 - q^m)`: prefix recurrence `c[n] += c[n-m]`.
    pub fn div_one_minus_qm(&mut self, m: usize) {
        assert!(m >= 1, "factor exponent must be positive");
        if m > self.order {
            return;
        }
        for n in m..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - m];
        }
    }

    /// Divide in place by `(1 + q^m)`: `c[n] -= c[n-m]`, ascending.
    pub fn div_one_plus_qm(&mut self, m: usize) {
        assert!(m >= 1, "factor exponent must be positive");
        if m > self.order {
            return;
        }
        for n in m..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - m];
        }
    }

    /// Index of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    /// Smallest coefficient and the first index where it occurs.
    pub fn min_coefficient(&self) -> (usize, &BigInt) {
        let mut at = 0usize;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c < &self.coeffs[at] {
                at = n;
            }
        }
        (at, &self.coeffs[at])
    }

    /// Sum of all stored coefficients (the value at q = 1 of the truncation).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl std::fmt::Display for IntegerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if !wrote {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if n == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                if n == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{n}")?;
                }
            } else if n == 1 {
                write!(f, "{mag}*q")?;
            } else {
                write!(f, "{mag}*q^{n}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Product of `(1 - q^e)` over the given exponents, truncated at `order`.
/// Factors with `e > order` contribute nothing and are skipped; the result is
/// independent of the order the exponents arrive in. A zero exponent is a
/// domain error.
pub fn product_one_minus<I>(exponents: I, order: usize) -> Result<IntegerSeries>
where
    I: IntoIterator<Item = u64>,
{
    let mut s = IntegerSeries::one(order);
    for e in exponents {
        if e == 0 {
            return Err(Error::InvalidArgument(
                "product factor exponent must be positive".into(),
            ));
        }
        if e <= order as u64 {
            s.mul_one_minus_qm(e as usize);
        }
    }
    Ok(s)
}

/// Product of `(1 + q^e)` over the given exponents, truncated at `order`.
pub fn product_one_plus<I>(exponents: I, order: usize) -> Result<IntegerSeries>
where
    I: IntoIterator<Item = u64>,
{
    let mut s = IntegerSeries::one(order);
    for e in exponents {
        if e == 0 {
            return Err(Error::InvalidArgument(
                "product factor exponent must be positive".into(),
            ));
        }
        if e <= order as u64 {
            s.mul_one_plus_qm(e as usize);
        }
    }
    Ok(s)
}

/// Euler's product `(1-q)(1-q^2)...(1-q^order)`, i.e. `(q; q)_inf` truncated.
pub fn euler_product(order: usize) -> IntegerSeries {
    product_one_minus(1..=order as u64, order).expect("positive exponents")
}

/// Gaussian binomial coefficient `[n choose k]_q` as a truncated series.
/// Zero when `k < 0` or `k > n`; otherwise the polynomial
/// `prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i)`, whose coefficients count
/// partitions into at most `k` parts each at most `n - k`.
pub fn q_binomial(n: u64, k: i64, order: usize) -> IntegerSeries {
    q_binomial_stride(n, k, 1, order)
}

/// Gaussian binomial in base `q^stride` (stride 2 gives the base-q^2
/// coefficient `[n choose k]_{q^2}` laid out in the same array, so odd
/// positions stay zero).
pub fn q_binomial_stride(n: u64, k: i64, stride: u64, order: usize) -> IntegerSeries {
    assert!(stride >= 1);
    if k < 0 || k as u64 > n {
        return IntegerSeries::zero(order);
    }
    let k = k as u64;
    let mut s = IntegerSeries::one(order);
    for i in 1..=k {
        let num = stride * (n - k + i);
        let den = stride * i;
        if num <= order as u64 {
            s.mul_one_minus_qm(num as usize);
        }
        if den <= order as u64 {
            s.div_one_minus_qm(den as usize);
        }
    }
    s
}
