//! Partition counters for pairwise coprime parts and their periodic remainder.
//!
//! With three distinct pairwise coprime parts `a < b < c`, the number of
//! partitions of `n` into parts from `{a, b, c}` splits as
//! `alpha(n) = F(n) + beta(n)` where `F(n) = (n^2 + (a+b+c) n) / (2abc)` and
//! `beta` is periodic with period `abc`. The largest `|beta(n)|` over a period
//! is the constant `D` that every closed-form coefficient bound in this crate
//! leans on. Four- and five-part analogues exist with cubic and quartic main
//! terms and periods equal to the product of the parts; those are exposed as a
//! periodicity check rather than a full decomposition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::IntegerSeries;

/// Three distinct, pairwise coprime, positive parts in canonical order
/// `a < b < c`. Construction sorts its inputs and rejects anything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoprimeTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl CoprimeTriple {
    pub fn new(x: u64, y: u64, z: u64) -> Result<Self> {
        let mut parts = [x, y, z];
        parts.sort_unstable();
        let [a, b, c] = parts;
        if a == 0 {
            return Err(Error::InvalidArgument("parts must be positive".into()));
        }
        if a == b || b == c {
            return Err(Error::InvalidArgument(format!(
                "parts must be distinct, got ({x}, {y}, {z})"
            )));
        }
        for (p, r) in [(a, b), (a, c), (b, c)] {
            if p.gcd(&r) != 1 {
                return Err(Error::InvalidArgument(format!(
                    "parts must be pairwise coprime, got gcd({p}, {r}) > 1"
                )));
            }
        }
        Ok(CoprimeTriple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn parts(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn sum(&self) -> u64 {
        self.a + self.b + self.c
    }

    pub fn product(&self) -> u64 {
        self.a * self.b * self.c
    }
}

impl std::fmt::Display for CoprimeTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Counting series `1 / ((1-q^a)(1-q^b)(1-q^c))`: coefficient `n` counts
/// partitions of `n` into parts `a`, `b`, `c`. Three prefix recurrences, so
/// O(order) per part.
pub fn alpha_series(triple: &CoprimeTriple, order: usize) -> IntegerSeries {
    let mut s = IntegerSeries::one(order);
    for p in triple.parts() {
        s.div_one_minus_qm(p as usize);
    }
    s
}

/// Quadratic main term `F(n) = (n^2 + (a+b+c) n) / (2abc)`, exact.
pub fn main_term(triple: &CoprimeTriple, n: u64) -> Rational {
    main_term_rat(triple, &Rational::from_integer(BigInt::from(n)))
}

/// `F` evaluated at an arbitrary rational point (the threshold quadratics are
/// built from differences of such values).
pub fn main_term_rat(triple: &CoprimeTriple, x: &Rational) -> Rational {
    let s = BigInt::from(triple.sum());
    let denom = BigInt::from(2 * triple.product());
    (x * x + x * Rational::from_integer(s)) / Rational::from_integer(denom)
}

/// One period of `beta(n) = alpha(n) - F(n)` together with its sup `D`.
#[derive(Clone, Debug)]
pub struct PeriodicDecomposition {
    pub triple: CoprimeTriple,
    pub period: u64,
    /// `beta(0), ..., beta(period - 1)`.
    pub beta: Vec<Rational>,
    /// `D = max_n |beta(n)|`, always >= 1 since `beta(0) = 1`.
    pub bound: Rational,
}

impl PeriodicDecomposition {
    pub fn beta_at(&self, n: u64) -> &Rational {
        &self.beta[(n % self.period) as usize]
    }
}

/// Computes `beta` over two periods, re-verifies `beta(n) = beta(n + abc)` on
/// the second, and returns the table plus `D`. A periodicity failure is a bug
/// in this crate, not a property of the triple.
pub fn decompose(triple: &CoprimeTriple) -> Result<PeriodicDecomposition> {
    let period = triple.product();
    let window = 2 * period as usize;
    let alpha = alpha_series(triple, window - 1);
    let beta: Vec<Rational> = (0..window as u64)
        .map(|n| {
            Rational::from_integer(alpha.coeff(n as usize).clone()) - main_term(triple, n)
        })
        .collect();
    for n in 0..period as usize {
        if beta[n] != beta[n + period as usize] {
            return Err(Error::InternalConsistency(format!(
                "remainder of {triple} is not {period}-periodic at n={n}"
            )));
        }
    }
    let mut bound = Rational::from_integer(BigInt::zero());
    for b in &beta[..period as usize] {
        let abs = b.abs();
        if abs > bound {
            bound = abs;
        }
    }
    Ok(PeriodicDecomposition {
        triple: *triple,
        period,
        beta: beta[..period as usize].to_vec(),
        bound,
    })
}

/// Four or five distinct pairwise coprime positive parts, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeTuple45 {
    parts: Vec<u64>,
}

impl CoprimeTuple45 {
    pub fn new(parts: &[u64]) -> Result<Self> {
        if parts.len() != 4 && parts.len() != 5 {
            return Err(Error::InvalidArgument(format!(
                "expected 4 or 5 parts, got {}",
                parts.len()
            )));
        }
        let mut parts = parts.to_vec();
        parts.sort_unstable();
        if parts[0] == 0 {
            return Err(Error::InvalidArgument("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("parts must be distinct".into()));
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i].gcd(&parts[j]) != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "parts must be pairwise coprime, got gcd({}, {}) > 1",
                        parts[i], parts[j]
                    )));
                }
            }
        }
        Ok(CoprimeTuple45 { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn product(&self) -> u64 {
        self.parts.iter().product()
    }
}

#[derive(Clone, Debug)]
pub struct RemainderPeriodicity {
    pub period: u64,
    /// `t(0), ..., t(period - 1)` where `t = alpha - (polynomial main term)`.
    pub table: Vec<Rational>,
    pub max_abs: Rational,
}

/// Verifies that subtracting the cubic (4 parts) or quartic (5 parts) main
/// term from the counting function leaves a remainder with period equal to
/// the product of the parts, checked over two periods. For parts
/// `a < b < ... ` with elementary symmetric sums `e1`, `e2` and power sum
/// `p2 = sum of squares`, the main terms are
/// `(2n^3 + 3 e1 n^2 + (p2 + 3 e2) n) / (12 abcd)` and
/// `(n^4 + 2 e1 n^3 + (p2 + 3 e2) n^2 + e1 e2 n) / (24 abcde)`.
pub fn remainder_periodicity(tuple: &CoprimeTuple45) -> Result<RemainderPeriodicity> {
    let period = tuple.product();
    let window = 2 * period as usize;
    let mut alpha = IntegerSeries::one(window - 1);
    for &p in tuple.parts() {
        alpha.div_one_minus_qm(p as usize);
    }

    let e1: u64 = tuple.parts().iter().sum();
    let p2: u64 = tuple.parts().iter().map(|&p| p * p).sum();
    let mut e2: u64 = 0;
    for i in 0..tuple.parts().len() {
        for j in i + 1..tuple.parts().len() {
            e2 += tuple.parts()[i] * tuple.parts()[j];
        }
    }
    let big = |v: u64| Rational::from_integer(BigInt::from(v));
    let main = |n: u64| -> Rational {
        let x = big(n);
        if tuple.parts().len() == 4 {
            let numer = big(2) * &x * &x * &x
                + big(3) * big(e1) * &x * &x
                + (big(p2) + big(3) * big(e2)) * &x;
            numer / (big(12) * big(period))
        } else {
            let numer = &x * &x * &x * &x
                + big(2) * big(e1) * &x * &x * &x
                + (big(p2) + big(3) * big(e2)) * &x * &x
                + big(e1) * big(e2) * &x;
            numer / (big(24) * big(period))
        }
    };

    let remainder: Vec<Rational> = (0..window as u64)
        .map(|n| Rational::from_integer(alpha.coeff(n as usize).clone()) - main(n))
        .collect();
    for n in 0..period as usize {
        if remainder[n] != remainder[n + period as usize] {
            return Err(Error::InternalConsistency(format!(
                "remainder of {:?} is not {period}-periodic at n={n}",
                tuple.parts()
            )));
        }
    }
    let mut max_abs = Rational::from_integer(BigInt::zero());
    for r in &remainder[..period as usize] {
        let abs = r.abs();
        if abs > max_abs {
            max_abs = abs;
        }
    }
    Ok(RemainderPeriodicity {
        period,
        table: remainder[..period as usize].to_vec(),
        max_abs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use num_traits::ToPrimitive;

    /// Independent counter: partitions of `n` into parts drawn from `parts`.
    fn brute_alpha(parts: &[u64], n: u64) -> u64 {
        fn go(parts: &[u64], n: i64) -> u64 {
            if n == 0 {
                return 1;
            }
            if n < 0 || parts.is_empty() {
                return 0;
            }
            go(parts, n - parts[0] as i64) + go(&parts[1..], n)
        }
        go(parts, n as i64)
    }

    #[test]
    fn construction_sorts_and_validates() {
        let t = CoprimeTriple::new(3, 1, 2).unwrap();
        assert_eq!(t.parts(), [1, 2, 3]);
        assert!(CoprimeTriple::new(2, 4, 6).is_err());
        assert!(CoprimeTriple::new(1, 2, 2).is_err());
        assert!(CoprimeTriple::new(0, 1, 2).is_err());
        assert!(CoprimeTriple::new(3, 6, 1).is_err());
    }

    #[test]
    fn alpha_counts_partitions() {
        let t = CoprimeTriple::new(1, 2, 3).unwrap();
        let s = alpha_series(&t, 20);
        assert_eq!(s.coeff(0).to_u64(), Some(1));
        assert_eq!(s.coeff(6).to_u64(), Some(7));
        for n in 0..=20 {
            assert_eq!(s.coeff(n).to_u64(), Some(brute_alpha(&[1, 2, 3], n as u64)));
        }
        let t = CoprimeTriple::new(1, 4, 5).unwrap();
        let s = alpha_series(&t, 12);
        assert_eq!(s.coeff(3).to_u64(), Some(1));
        for n in 0..=12 {
            assert_eq!(s.coeff(n).to_u64(), Some(brute_alpha(&[1, 4, 5], n as u64)));
        }
    }

    #[test]
    fn main_term_values() {
        let t = CoprimeTriple::new(1, 2, 3).unwrap();
        assert_eq!(main_term(&t, 0), int(0));
        assert_eq!(main_term(&t, 6), ratio(72, 12));
        let t = CoprimeTriple::new(1, 2, 5).unwrap();
        assert_eq!(main_term(&t, 5), ratio(65, 20));
    }

    #[test]
    fn decompose_reference_bounds() {
        for (parts, expect) in [
            ([1u64, 2, 3], int(1)),
            ([1, 2, 7], ratio(8, 7)),
            ([1, 3, 8], ratio(17, 16)),
            ([1, 4, 5], ratio(9, 8)),
        ] {
            let t = CoprimeTriple::new(parts[0], parts[1], parts[2]).unwrap();
            let d = decompose(&t).unwrap();
            assert_eq!(d.period, t.product());
            assert_eq!(d.bound, expect, "D mismatch for {t}");
            assert_eq!(d.beta[0], int(1), "beta(0) = alpha(0) - F(0) = 1");
        }
    }

    #[test]
    fn beta_denominators_divide_twice_product() {
        let t = CoprimeTriple::new(1, 3, 8).unwrap();
        let d = decompose(&t).unwrap();
        let m = BigInt::from(2 * t.product());
        for b in &d.beta {
            assert!((&m % b.denom()).is_zero(), "denominator {} of beta", b.denom());
        }
    }

    #[test]
    fn beta_wraps_around_many_periods() {
        let t = CoprimeTriple::new(1, 2, 5).unwrap();
        let d = decompose(&t).unwrap();
        let alpha = alpha_series(&t, 45);
        for n in 0..=45u64 {
            let direct = Rational::from_integer(alpha.coeff(n as usize).clone())
                - main_term(&t, n);
            assert_eq!(&direct, d.beta_at(n));
        }
    }

    #[test]
    fn random_triples_decompose_cleanly() {
        // A light deterministic sweep; the acceptance suite runs the big one.
        let mut found = 0;
        for c in 4u64..=30 {
            for b in 2..c {
                for a in 1..b {
                    if a * b * c > 400 {
                        continue;
                    }
                    let Ok(t) = CoprimeTriple::new(a, b, c) else { continue };
                    let d = decompose(&t).unwrap();
                    assert!(d.bound >= int(1));
                    found += 1;
                }
            }
        }
        assert!(found > 20);
    }

    #[test]
    fn four_and_five_part_remainders_are_periodic() {
        let t4 = CoprimeTuple45::new(&[1, 2, 3, 5]).unwrap();
        let r4 = remainder_periodicity(&t4).unwrap();
        assert_eq!(r4.period, 30);
        assert_eq!(r4.table[0], int(1));
        assert!(r4.max_abs >= int(1));

        let t5 = CoprimeTuple45::new(&[1, 2, 3, 5, 7]).unwrap();
        let r5 = remainder_periodicity(&t5).unwrap();
        assert_eq!(r5.period, 210);
        assert_eq!(r5.table[0], int(1));
    }

    #[test]
    fn tuple_validation() {
        assert!(CoprimeTuple45::new(&[1, 2, 3]).is_err());
        assert!(CoprimeTuple45::new(&[1, 2, 3, 4]).is_err()); // gcd(2,4)
        assert!(CoprimeTuple45::new(&[1, 2, 3, 5, 7, 11]).is_err());
        let t = CoprimeTuple45::new(&[5, 3, 2, 1]).unwrap();
        assert_eq!(t.parts(), &[1, 2, 3, 5]);
    }

    #[test]
    fn four_part_remainder_matches_brute_counts() {
        let t = CoprimeTuple45::new(&[1, 2, 3, 5]).unwrap();
        let r = remainder_periodicity(&t).unwrap();
        // Reconstruct alpha from main term + table and compare to brute force.
        let e1 = 11u64;
        let p2 = 39u64;
        let e2 = 2 + 3 + 5 + 6 + 10 + 15u64;
        for n in 0..60u64 {
            let x = Rational::from_integer(BigInt::from(n));
            let main = (Rational::from_integer(BigInt::from(2u64)) * &x * &x * &x
                + Rational::from_integer(BigInt::from(3 * e1)) * &x * &x
                + Rational::from_integer(BigInt::from(p2 + 3 * e2)) * &x)
                / Rational::from_integer(BigInt::from(12 * 30u64));
            let alpha = main + &r.table[(n % 30) as usize];
            assert_eq!(
                alpha,
                Rational::from_integer(BigInt::from(brute_alpha(&[1, 2, 3, 5], n)))
            );
        }
    }
}
