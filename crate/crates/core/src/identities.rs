//! Classical identity checks and the five truncated-theta tail families.
//!
//! Two kinds of checks live here. First, the underlying product identities
//! that everything else leans on: Euler's pentagonal number theorem, the two
//! Gauss alternating-sum identities, and the two mod-5 Jacobi triple-product
//! specializations. Second, the truncated versions: the Andrews–Merca
//! truncated pentagonal theorem and the two Guo–Zeng truncations, whose
//! right-hand sides are built incrementally term by term, plus the five
//! "tail families" — pairs of a truncated display (partial theta sum times a
//! generating function, with sign corrections) and the equivalent clean form
//! (generating function times the two-sided theta tail) whose coefficients
//! are the nonnegative quantities of interest.
//!
//! Every check returns a report rather than a bare bool so callers can log
//! digests, orders, and first-mismatch positions.

use crate::error::{Error, Result};
use crate::rational::ratio;
use crate::report::{IdentityReport, PositivityReport};
use crate::series::{euler_product, product_one_minus, IntegerSeries};
use crate::theta::{theta_central, theta_full, theta_tail, ThetaForm};

fn require_positive_k(k: u64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!(
            "truncation index k must be at least 1, got {k}"
        )));
    }
    Ok(())
}

/// `1 / (q; q)_inf` truncated: the partition generating function.
pub fn inverse_euler(order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::one(order);
    for m in 1..=order {
        s.div_one_minus_qm(m);
    }
    s
}

/// `(-q; q)_inf / (q; q)_inf` truncated: the overpartition generating
/// function.
pub fn overpartition_series(order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::one(order);
    for m in 1..=order {
        s.mul_one_plus_qm(m);
        s.div_one_minus_qm(m);
    }
    s
}

/// `(-q; q^2)_inf / (q^2; q^2)_inf` truncated: the generating function for
/// partitions with odd parts distinct.
pub fn pod_series(order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::one(order);
    for m in 1..=order {
        if m % 2 == 1 {
            s.mul_one_plus_qm(m);
        } else {
            s.div_one_minus_qm(m);
        }
    }
    s
}

/// Inverse of the product of `(1 - q^e)` over exponents congruent to 0 or to
/// one of the two given nonzero residues mod 5.
fn mod5_inverse_product(residues: [usize; 2], order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::one(order);
    for e in 1..=order {
        let r = e % 5;
        if r == 0 || r == residues[0] || r == residues[1] {
            s.div_one_minus_qm(e);
        }
    }
    s
}

/// `1 + (-1)^{k-1} * tail`, the shape shared by all three truncated
/// right-hand sides.
fn plus_one_signed(tail: IntegerSeries, k: u64) -> IntegerSeries {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let mut rhs = tail.scaled(sign);
    rhs.add_to_coeff(0, 1);
    rhs
}

/// Euler's pentagonal number theorem: the literal product
/// `(1-q)(1-q^2)...` equals the alternating theta series with exponents
/// `j(3j+1)/2`.
pub fn check_pentagonal(order: usize) -> Result<IdentityReport> {
    let product = euler_product(order);
    let theta = theta_full(&ThetaForm::pentagonal(), order);
    IdentityReport::compare("pentagonal number theorem", &theta, &product)
}

/// The two Gauss identities: the alternating square-exponent series equals
/// `(q;q)_inf / (-q;q)_inf`, and the alternating series with exponents
/// `2j^2 + j` equals `(q^2;q^2)_inf / (-q;q^2)_inf`.
pub fn check_gauss(order: usize) -> Result<(IdentityReport, IdentityReport)> {
    let mut quotient = euler_product(order);
    for m in 1..=order {
        quotient.div_one_plus_qm(m);
    }
    let squares = IdentityReport::compare(
        "gauss alternating squares",
        &theta_full(&ThetaForm::squares(), order),
        &quotient,
    )?;

    let mut quotient = IntegerSeries::one(order);
    for m in 1..=order {
        if m % 2 == 0 {
            quotient.mul_one_minus_qm(m);
        } else {
            quotient.div_one_plus_qm(m);
        }
    }
    let triangular = IdentityReport::compare(
        "gauss alternating triangular",
        &theta_full(&ThetaForm::triangular(), order),
        &quotient,
    )?;
    Ok((squares, triangular))
}

/// The two mod-5 Jacobi triple-product specializations: the products of
/// `(1 - q^e)` over `e = 0, 1, 4 (mod 5)` and over `e = 0, 2, 3 (mod 5)`
/// equal the alternating theta series with exponents `j(5j+3)/2` and
/// `j(5j+1)/2` respectively.
pub fn check_jacobi_products(order: usize) -> Result<(IdentityReport, IdentityReport)> {
    let one_four = product_one_minus(
        (1..=order as u64).filter(|e| matches!(e % 5, 0 | 1 | 4)),
        order,
    )?;
    let first = IdentityReport::compare(
        "jacobi mod-5 product (residues 1, 4)",
        &theta_full(&TailFamily::JacobiOneFour.form(), order),
        &one_four,
    )?;

    let two_three = product_one_minus(
        (1..=order as u64).filter(|e| matches!(e % 5, 0 | 2 | 3)),
        order,
    )?;
    let second = IdentityReport::compare(
        "jacobi mod-5 product (residues 2, 3)",
        &theta_full(&TailFamily::JacobiTwoThree.form(), order),
        &two_three,
    )?;
    Ok((first, second))
}

/// The tail of the truncated pentagonal number theorem:
/// `sum_{j >= k} q^{k(k-1)/2 + (k+1)j} [j-1 choose k-1]_q / (q;q)_j`,
/// built incrementally (each term is its predecessor times a rational
/// function with three sparse factors).
fn andrews_merca_tail(k: u64, order: usize) -> IntegerSeries {
    let mut tail = IntegerSeries::zero(order);
    let mut term = IntegerSeries::one(order);
    for m in 1..=k {
        term.div_one_minus_qm(m as usize);
    }
    let mut j = k;
    loop {
        let shift = k * (k - 1) / 2 + (k + 1) * j;
        if shift > order as u64 {
            return tail;
        }
        tail.add_assign_shifted(&term, shift as usize, 1);
        term.mul_one_minus_qm(j as usize);
        term.div_one_minus_qm((j + 1) as usize);
        term.div_one_minus_qm((j - k + 1) as usize);
        j += 1;
    }
}

/// Andrews–Merca truncated pentagonal number theorem: for `k >= 1`,
///
/// ```text
/// (1/(q;q)_inf) sum_{j=-k}^{k-1} (-1)^j q^{j(3j+1)/2}
///     = 1 + (-1)^{k-1} sum_{j=k}^inf q^{k(k-1)/2+(k+1)j}
///                                    [j-1 choose k-1]_q / (q;q)_j .
/// ```
///
/// The manifestly-nonnegative right-hand tail is what makes the truncated
/// partition sums alternate in sign.
pub fn check_andrews_merca(k: u64, order: usize) -> Result<IdentityReport> {
    require_positive_k(k)?;
    let ki = k as i64;
    let lhs = inverse_euler(order)
        .mul(&theta_central(&ThetaForm::pentagonal(), -ki, ki - 1, order))?;
    let rhs = plus_one_signed(andrews_merca_tail(k, order), k);
    IdentityReport::compare(&format!("truncated pentagonal theorem (k = {k})"), &lhs, &rhs)
}

/// Which of the two Guo–Zeng truncated Gauss identities to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GuoZengVariant {
    /// Truncation of the alternating-squares identity, stated via the
    /// overpartition generating function.
    Overpartition,
    /// Truncation of the alternating-triangular identity, stated via the
    /// generating function for partitions with odd parts distinct.
    OddDistinct,
}

/// Tail of the overpartition variant, without the `(-q;q)_{k-1}` prefactor:
/// `sum_{j >= k} q^{jk} (-1;q)_{j-k+1} [j-1 choose k-1]_q / (q;q)_j`.
fn guo_zeng_overpartition_tail(k: u64, order: usize) -> IntegerSeries {
    let mut tail = IntegerSeries::zero(order);
    // At j = k the factor (-1;q)_1 = 2 and the binomial is 1.
    let mut term = IntegerSeries::one(order).scaled(2);
    for m in 1..=k {
        term.div_one_minus_qm(m as usize);
    }
    let mut j = k;
    loop {
        let shift = j * k;
        if shift > order as u64 {
            return tail;
        }
        tail.add_assign_shifted(&term, shift as usize, 1);
        term.mul_one_plus_qm((j - k + 1) as usize);
        term.mul_one_minus_qm(j as usize);
        term.div_one_minus_qm((j - k + 1) as usize);
        term.div_one_minus_qm((j + 1) as usize);
        j += 1;
    }
}

/// Tail of the odd-parts-distinct variant, without the `(-q;q^2)_k`
/// prefactor: `sum_{j >= k} q^{2(k+1)j-k} (-q;q^2)_{j-k}
/// [j-1 choose k-1]_{q^2} / (q^2;q^2)_j`.
fn guo_zeng_pod_tail(k: u64, order: usize) -> IntegerSeries {
    let mut tail = IntegerSeries::zero(order);
    let mut term = IntegerSeries::one(order);
    for m in 1..=k {
        term.div_one_minus_qm(2 * m as usize);
    }
    let mut j = k;
    loop {
        let shift = 2 * (k + 1) * j - k;
        if shift > order as u64 {
            return tail;
        }
        tail.add_assign_shifted(&term, shift as usize, 1);
        term.mul_one_plus_qm((2 * (j - k) + 1) as usize);
        term.mul_one_minus_qm(2 * j as usize);
        term.div_one_minus_qm(2 * (j - k + 1) as usize);
        term.div_one_minus_qm(2 * (j + 1) as usize);
        j += 1;
    }
}

/// Guo–Zeng truncated Gauss identities: for `k >= 1`,
///
/// ```text
/// GF(q) * (central strip of the Gauss theta series)
///     = 1 + (-1)^{k-1} * prefactor * (manifestly nonnegative tail),
/// ```
///
/// where for [`GuoZengVariant::Overpartition`] the strip is
/// `sum_{j=1-k}^{k-1} (-1)^j q^{j^2}` and the prefactor `(-q;q)_{k-1}`, and
/// for [`GuoZengVariant::OddDistinct`] the strip is
/// `sum_{j=-k}^{k-1} (-1)^j q^{2j^2+j}` and the prefactor `(-q;q^2)_k`.
pub fn check_guo_zeng(variant: GuoZengVariant, k: u64, order: usize) -> Result<IdentityReport> {
    require_positive_k(k)?;
    let ki = k as i64;
    match variant {
        GuoZengVariant::Overpartition => {
            let lhs = overpartition_series(order)
                .mul(&theta_central(&ThetaForm::squares(), 1 - ki, ki - 1, order))?;
            let mut tail = guo_zeng_overpartition_tail(k, order);
            for e in 1..k {
                tail.mul_one_plus_qm(e as usize);
            }
            let rhs = plus_one_signed(tail, k);
            IdentityReport::compare(
                &format!("truncated alternating squares (overpartitions, k = {k})"),
                &lhs,
                &rhs,
            )
        }
        GuoZengVariant::OddDistinct => {
            let lhs = pod_series(order)
                .mul(&theta_central(&ThetaForm::triangular(), -ki, ki - 1, order))?;
            let mut tail = guo_zeng_pod_tail(k, order);
            for e in 1..=k {
                tail.mul_one_plus_qm((2 * e - 1) as usize);
            }
            let rhs = plus_one_signed(tail, k);
            IdentityReport::compare(
                &format!("truncated alternating triangular (odd parts distinct, k = {k})"),
                &lhs,
                &rhs,
            )
        }
    }
}

/// The five families whose truncated-theta tails have nonnegative
/// coefficients: each pairs a generating function with the theta form whose
/// full alternating series is exactly the reciprocal of that generating
/// function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailFamily {
    /// Partitions against the pentagonal form `j(3j+1)/2`.
    Partition,
    /// Overpartitions against the squares form `j^2`.
    Overpartition,
    /// Odd-parts-distinct partitions against the form `2j^2 + j`.
    OddDistinct,
    /// Inverse mod-5 product (residues 1, 4) against the form `j(5j+3)/2`.
    JacobiOneFour,
    /// Inverse mod-5 product (residues 2, 3) against the form `j(5j+1)/2`.
    JacobiTwoThree,
}

impl TailFamily {
    pub const ALL: [TailFamily; 5] = [
        TailFamily::Partition,
        TailFamily::Overpartition,
        TailFamily::OddDistinct,
        TailFamily::JacobiOneFour,
        TailFamily::JacobiTwoThree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TailFamily::Partition => "partition",
            TailFamily::Overpartition => "overpartition",
            TailFamily::OddDistinct => "odd-distinct",
            TailFamily::JacobiOneFour => "jacobi-mod5-14",
            TailFamily::JacobiTwoThree => "jacobi-mod5-23",
        }
    }

    /// The theta form whose full series is the reciprocal of
    /// [`TailFamily::base_series`].
    pub fn form(self) -> ThetaForm {
        match self {
            TailFamily::Partition => ThetaForm::pentagonal(),
            TailFamily::Overpartition => ThetaForm::squares(),
            TailFamily::OddDistinct => ThetaForm::triangular(),
            TailFamily::JacobiOneFour => {
                ThetaForm::new(ratio(5, 2), ratio(3, 2)).expect("valid form")
            }
            TailFamily::JacobiTwoThree => {
                ThetaForm::new(ratio(5, 2), ratio(1, 2)).expect("valid form")
            }
        }
    }

    /// The family's generating function, truncated.
    pub fn base_series(self, order: usize) -> IntegerSeries {
        match self {
            TailFamily::Partition => inverse_euler(order),
            TailFamily::Overpartition => overpartition_series(order),
            TailFamily::OddDistinct => pod_series(order),
            TailFamily::JacobiOneFour => mod5_inverse_product([1, 4], order),
            TailFamily::JacobiTwoThree => mod5_inverse_product([2, 3], order),
        }
    }
}

/// The clean route: generating function times the two-sided theta tail. Its
/// coefficients are the quantities proven nonnegative.
pub fn tail_series(family: TailFamily, k: u64, order: usize) -> Result<IntegerSeries> {
    require_positive_k(k)?;
    let tail = theta_tail(&family.form(), k as i64, order)?;
    tail.mul(&family.base_series(order))
}

/// The display route: `(-1)^{k-1}` times the generating function times the
/// central strip, plus sign corrections — `(-1)^k` at degree zero for all
/// families, and additionally `-GF * q^{k^2}` for overpartitions, whose
/// truncation cuts the strip one term short of symmetric.
pub fn truncated_series(family: TailFamily, k: u64, order: usize) -> Result<IntegerSeries> {
    require_positive_k(k)?;
    let ki = k as i64;
    let gf = family.base_series(order);
    let low = if family == TailFamily::Overpartition { 1 - ki } else { -ki };
    let central = theta_central(&family.form(), low, ki - 1, order);
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let mut s = gf.mul(&central)?.scaled(sign);
    if family == TailFamily::Overpartition {
        s.add_assign_shifted(&gf, (k * k) as usize, -1);
    }
    s.add_to_coeff(0, -sign);
    Ok(s)
}

/// Result of checking one family at one truncation index: the display and
/// tail routes must agree coefficientwise, and the shared series must be
/// nonnegative.
#[derive(Clone, Debug)]
pub struct EquivalenceCheck {
    pub identity: IdentityReport,
    pub positivity: PositivityReport,
}

/// Builds both routes, compares them, and scans for negativity.
pub fn check_equivalence(family: TailFamily, k: u64, order: usize) -> Result<EquivalenceCheck> {
    let display = truncated_series(family, k, order)?;
    let tail = tail_series(family, k, order)?;
    let identity = IdentityReport::compare(
        &format!("{} display vs tail (k = {k})", family.name()),
        &display,
        &tail,
    )?;
    let positivity = PositivityReport::scan(&format!("{} tail (k = {k})", family.name()), &tail);
    Ok(EquivalenceCheck { identity, positivity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q_binomial, q_binomial_stride};
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn inverse_euler_counts_partitions() {
        let s = inverse_euler(10);
        let expected = [1i64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n), &BigInt::from(p), "p({n})");
        }
        let product = s.mul(&euler_product(10)).unwrap();
        assert_eq!(product, IntegerSeries::one(10));
    }

    /// Independent overpartition counter: every partition contributes
    /// `2^(number of distinct parts)` (overline the first occurrence of each
    /// part or not). Recursion over the largest part.
    fn brute_overpartitions(n: u64, max: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        if max == 0 {
            return 0;
        }
        let mut total = brute_overpartitions(n, max - 1);
        let mut used = max;
        while used <= n {
            total += 2 * brute_overpartitions(n - used, max - 1);
            used += max;
        }
        total
    }

    #[test]
    fn overpartition_series_counts_overpartitions() {
        let s = overpartition_series(30);
        for (n, &expected) in [1i64, 2, 4, 8, 14, 24].iter().enumerate() {
            assert_eq!(s.coeff(n), &BigInt::from(expected), "small value at {n}");
        }
        for n in 0..=30u64 {
            assert_eq!(
                s.coeff(n as usize),
                &BigInt::from(brute_overpartitions(n, n)),
                "overpartitions of {n}"
            );
        }
    }

    /// Independent counter for partitions with odd parts distinct: parts are
    /// chosen in non-increasing order; reusing an odd part is forbidden by
    /// capping the next part below it.
    fn brute_pod(n: u64, max: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for part in 1..=max.min(n) {
            let cap = if part % 2 == 1 { part - 1 } else { part };
            total += brute_pod(n - part, cap);
        }
        total
    }

    #[test]
    fn pod_series_counts_odd_distinct_partitions() {
        let s = pod_series(25);
        for n in 0..=25u64 {
            assert_eq!(
                s.coeff(n as usize),
                &BigInt::from(brute_pod(n, n)),
                "odd-distinct partitions of {n}"
            );
        }
    }

    #[test]
    fn product_identities_hold() {
        let order = 300;
        assert!(check_pentagonal(order).unwrap().equal);
        let (squares, triangular) = check_gauss(order).unwrap();
        assert!(squares.equal);
        assert!(triangular.equal);
        let (one_four, two_three) = check_jacobi_products(order).unwrap();
        assert!(one_four.equal);
        assert!(two_three.equal);
    }

    #[test]
    fn generating_functions_invert_their_theta_series() {
        let order = 200;
        for family in TailFamily::ALL {
            let product = family
                .base_series(order)
                .mul(&theta_full(&family.form(), order))
                .unwrap();
            assert_eq!(product, IntegerSeries::one(order), "{}", family.name());
        }
    }

    #[test]
    fn truncated_pentagonal_holds_for_small_k() {
        for k in 1..=5 {
            let report = check_andrews_merca(k, 200).unwrap();
            assert!(report.equal, "k = {k}: first mismatch {:?}", report.first_mismatch);
        }
        assert!(check_andrews_merca(0, 50).is_err());
    }

    #[test]
    fn incremental_pentagonal_tail_matches_direct_terms() {
        // Rebuild each tail term from scratch via the Gaussian binomial and
        // explicit divisions, instead of the incremental three-factor update.
        let order = 120;
        for k in 1..=3u64 {
            let mut direct = IntegerSeries::zero(order);
            for j in k.. {
                let shift = k * (k - 1) / 2 + (k + 1) * j;
                if shift > order as u64 {
                    break;
                }
                let mut term = q_binomial(j - 1, k as i64 - 1, order);
                for m in 1..=j {
                    term.div_one_minus_qm(m as usize);
                }
                direct.add_assign_shifted(&term, shift as usize, 1);
            }
            assert_eq!(andrews_merca_tail(k, order), direct, "k = {k}");
        }
    }

    #[test]
    fn truncated_gauss_identities_hold_for_small_k() {
        for k in 1..=4 {
            for variant in [GuoZengVariant::Overpartition, GuoZengVariant::OddDistinct] {
                let report = check_guo_zeng(variant, k, 200).unwrap();
                assert!(
                    report.equal,
                    "{variant:?} k = {k}: first mismatch {:?}",
                    report.first_mismatch
                );
            }
        }
        assert!(check_guo_zeng(GuoZengVariant::Overpartition, 0, 50).is_err());
    }

    #[test]
    fn incremental_overpartition_tail_matches_direct_terms() {
        let order = 100;
        for k in 1..=3u64 {
            let mut direct = IntegerSeries::zero(order);
            for j in k.. {
                let shift = j * k;
                if shift > order as u64 {
                    break;
                }
                // (-1;q)_{j-k+1} = 2 * (1+q)(1+q^2)...(1+q^{j-k}).
                let mut term = q_binomial(j - 1, k as i64 - 1, order).scaled(2);
                for e in 1..=(j - k) {
                    term.mul_one_plus_qm(e as usize);
                }
                for m in 1..=j {
                    term.div_one_minus_qm(m as usize);
                }
                direct.add_assign_shifted(&term, shift as usize, 1);
            }
            assert_eq!(guo_zeng_overpartition_tail(k, order), direct, "k = {k}");
        }
    }

    #[test]
    fn incremental_pod_tail_matches_direct_terms() {
        let order = 100;
        for k in 1..=3u64 {
            let mut direct = IntegerSeries::zero(order);
            for j in k.. {
                let shift = 2 * (k + 1) * j - k;
                if shift > order as u64 {
                    break;
                }
                let mut term = q_binomial_stride(j - 1, k as i64 - 1, 2, order);
                for e in 0..(j - k) {
                    term.mul_one_plus_qm((2 * e + 1) as usize);
                }
                for m in 1..=j {
                    term.div_one_minus_qm(2 * m as usize);
                }
                direct.add_assign_shifted(&term, shift as usize, 1);
            }
            assert_eq!(guo_zeng_pod_tail(k, order), direct, "k = {k}");
        }
    }

    #[test]
    fn truncation_below_first_tail_term_reduces_to_one() {
        // For k = 5 the pentagonal tail starts at degree 40; truncating at 30
        // leaves an empty right-hand side, and the identity then asserts the
        // left side is exactly 1 — a sharp check of the central strip.
        let k = 5;
        let order = 30;
        assert!(andrews_merca_tail(k, order).is_zero());
        let report = check_andrews_merca(k, order).unwrap();
        assert!(report.equal);
    }

    #[test]
    fn display_route_equals_tail_route() {
        let order = 300;
        for family in TailFamily::ALL {
            for k in 1..=4 {
                let check = check_equivalence(family, k, order).unwrap();
                assert!(
                    check.identity.equal,
                    "{} k = {k}: first mismatch {:?}",
                    family.name(),
                    check.identity.first_mismatch
                );
                assert!(
                    check.positivity.nonnegative,
                    "{} k = {k}: negative at {}",
                    family.name(),
                    check.positivity.min_at
                );
            }
        }
    }

    #[test]
    fn tail_series_starts_at_lowest_tail_exponent() {
        for family in TailFamily::ALL {
            for k in 1..=3u64 {
                let low = family.form().exponent(k as i64) as usize;
                let s = tail_series(family, k, low + 40).unwrap();
                assert!(
                    s.coeffs()[..low].iter().all(Zero::is_zero),
                    "{} k = {k}",
                    family.name()
                );
                assert_eq!(s.coeff(low), &BigInt::from(1), "{} k = {k}", family.name());
            }
        }
    }
}
