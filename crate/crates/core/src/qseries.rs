//! Power series in `q` with big-integer coefficients, truncated at a fixed order.
//!
//! A series of order `L` stores the coefficients of `q^0 .. q^(L-1)`, i.e. it
//! is an element of `Z[[q]] / (q^L)`. Binary operations between series of
//! different orders truncate to the smaller order, and equality compares the
//! common prefix.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `coeff * q^exponent`, or zero if the exponent is past the truncation.
    pub fn monomial(coeff: impl Into<BigInt>, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent < order {
            s.coeffs[exponent] = coeff.into();
        }
        s
    }

    /// Takes the first `order` coefficients, padding with zeros.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>, order: usize) -> Self {
        let mut out: Vec<BigInt> = coeffs.into_iter().take(order).map(Into::into).collect();
        out.resize(order, BigInt::zero());
        QSeries { coeffs: out }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        QSeries { coeffs: self.coeffs.iter().take(order).cloned().collect() }
    }

    /// Multiplies by `q^k`, dropping whatever falls past the truncation.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for e in 0..order.saturating_sub(k) {
            out.coeffs[e + k] = self.coeffs[e].clone();
        }
        out
    }

    /// `self += q^k * other`, at `self`'s order.
    pub fn add_shifted(&mut self, other: &QSeries, k: usize) {
        let order = self.order();
        for e in 0..other.order().min(order.saturating_sub(k)) {
            if !other.coeffs[e].is_zero() {
                self.coeffs[e + k] += &other.coeffs[e];
            }
        }
    }

    /// Multiplies in place by `1 / (1 - q^k)` for `k >= 1`.
    pub fn div_one_minus_q_pow(&mut self, k: usize) {
        assert!(k >= 1, "1/(1 - q^0) is undefined");
        for e in k..self.order() {
            let prev = self.coeffs[e - k].clone();
            self.coeffs[e] += prev;
        }
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    ///
    /// `g_0 = 1/f_0`, `g_e = -f_0^{-1} * sum_{j=1..e} f_j g_{e-j}`.
    pub fn inverse(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let f0 = &self.coeffs[0];
        if f0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(f0.to_string()));
        }
        // f0 is its own inverse
        let mut g = Self::zero(order);
        g.coeffs[0] = f0.clone();
        for e in 1..order {
            let mut acc = BigInt::zero();
            for j in 1..=e {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g.coeffs[e - j];
                }
            }
            g.coeffs[e] = -(f0 * acc);
        }
        Ok(g)
    }

    /// Coefficients as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl Default for QSeries {
    fn default() -> Self {
        Self::zero(0)
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}

impl AddAssign<&QSeries> for QSeries {
    fn add_assign(&mut self, rhs: &QSeries) {
        self.coeffs.truncate(rhs.order());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let mut out = QSeries::zero(order);
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = e == 0 || !mag.is_one();
            match (e, show_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}q")?,
                (1, false) => write!(f, "q")?,
                (_, true) => write!(f, "{mag}q^{e}")?,
                (_, false) => write!(f, "q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order())
    }
}

/// `prod_{n>=1} (1 - q^n)^(-n)` modulo `q^order`.
pub fn macmahon_product(order: usize) -> QSeries {
    let mut z = QSeries::one(order);
    for n in 1..order {
        for _ in 0..n {
            z.div_one_minus_q_pow(n);
        }
    }
    z
}

/// `prod_{n=1..side} prod_{m=0..side-1} (1 - q^(n+m))^(-1)` modulo `q^order`.
///
/// Exponent `k` occurs `min(k, side, 2*side - k)` times, so once `side >= order`
/// this agrees with [`macmahon_product`].
pub fn finite_grid_product(side: usize, order: usize) -> QSeries {
    let mut z = QSeries::one(order);
    for n in 1..=side {
        for m in 0..side {
            let k = n + m;
            if k < order {
                z.div_one_minus_q_pow(k);
            }
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64], order: usize) -> QSeries {
        QSeries::from_coeffs(c.iter().copied(), order)
    }

    #[test]
    fn ring_examples() {
        let prod = &s(&[1, -1], 4) * &s(&[1, 1, 1, 1], 4);
        assert_eq!(prod.coeffs(), s(&[1], 4).coeffs());
        let f = s(&[3, -2, 7], 3);
        assert!((&f + &-&f).is_zero());
        assert_eq!((&s(&[1, 1], 3) * &s(&[1, 1], 3)).coeffs(), s(&[1, 2, 1], 3).coeffs());
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = s(&[1, 1, 1, 1, 1], 5);
        let b = s(&[1, 1], 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(a, a.truncate(3));
    }

    #[test]
    fn inverses() {
        assert_eq!(s(&[1, -1], 5).inverse().unwrap().coeffs(), s(&[1, 1, 1, 1, 1], 5).coeffs());
        assert_eq!(QSeries::one(3).inverse().unwrap().coeffs(), QSeries::one(3).coeffs());
        let sq = s(&[1, -2, 1], 4).inverse().unwrap();
        assert_eq!(sq.coeffs(), s(&[1, 2, 3, 4], 4).coeffs());
        assert_eq!((&sq * &s(&[1, -2, 1], 4)).coeffs(), QSeries::one(4).coeffs());
        let neg = s(&[-1, 1], 4).inverse().unwrap();
        assert_eq!(neg.coeffs(), s(&[-1, -1, -1, -1], 4).coeffs());
        assert_eq!(s(&[2, 1], 3).inverse(), Err(Error::NotInvertible("2".into())));
        assert!(s(&[0, 1], 3).inverse().is_err());
    }

    #[test]
    fn shifting() {
        let f = s(&[1, 2, 3], 4);
        assert_eq!(f.shift(2).coeffs(), s(&[0, 0, 1, 2], 4).coeffs());
        assert!(s(&[0, 0, 0, 5], 4).shift(1).is_zero());
        assert_eq!(f.valuation(), Some(0));
        assert_eq!(QSeries::zero(3).valuation(), None);
    }

    #[test]
    fn macmahon_values() {
        assert_eq!(macmahon_product(4).to_decimal_strings(), ["1", "1", "3", "6"]);
        assert_eq!(macmahon_product(1).to_decimal_strings(), ["1"]);
        assert_eq!(macmahon_product(5).to_decimal_strings(), ["1", "1", "3", "6", "13"]);
    }

    #[test]
    fn macmahon_exceeds_64_bits_without_loss() {
        let z = macmahon_product(200);
        assert!(z.coeff(199) > BigInt::from(u64::MAX));
        // recomputing through the general inverse takes a different path
        let mut denom = QSeries::one(200);
        for n in 1..200 {
            for _ in 0..n {
                // multiply by (1 - q^n)
                for e in (n..200).rev() {
                    let lower = denom.coeffs[e - n].clone();
                    denom.coeffs[e] -= lower;
                }
            }
        }
        assert_eq!(denom.inverse().unwrap(), z);
    }

    #[test]
    fn grid_products() {
        assert_eq!(finite_grid_product(1, 4).coeffs(), s(&[1, 1, 1, 1], 4).coeffs());
        assert_eq!(finite_grid_product(2, 3).coeffs(), s(&[1, 1, 3], 3).coeffs());
        assert_eq!(finite_grid_product(10, 10), macmahon_product(10));
        // (1-q)^-1 (1-q^2)^-2 (1-q^3)^-1 expanded through q^5 by hand
        assert_eq!(finite_grid_product(2, 6).coeffs(), s(&[1, 1, 3, 4, 7, 9], 6).coeffs());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 1, 3, -6], 4).to_string(), "1 + q + 3q^2 - 6q^3 + O(q^4)");
        assert_eq!(QSeries::zero(2).to_string(), "0 + O(q^2)");
    }

    fn series(order: usize) -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-1000i64..1000, order).prop_map(move |c| s(&c, order))
    }

    fn unit(order: usize) -> impl Strategy<Value = QSeries> {
        (series(order), prop::bool::ANY).prop_map(|(mut f, neg)| {
            f.coeffs[0] = if neg { BigInt::from(-1) } else { BigInt::one() };
            f
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn ring_axioms(a in series(32), b in series(32), c in series(32)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &QSeries::zero(32), a.clone());
            prop_assert_eq!(&a * &QSeries::one(32), a.clone());
        }

        #[test]
        fn inverse_is_two_sided(f in unit(32)) {
            let g = f.inverse().unwrap();
            prop_assert_eq!(&f * &g, QSeries::one(32));
            prop_assert_eq!(g.inverse().unwrap(), f);
        }

        #[test]
        fn macmahon_truncation_coherent(big in 1usize..40, small in 1usize..40) {
            let (lo, hi) = if small <= big { (small, big) } else { (big, small) };
            let (long, short) = (macmahon_product(hi).truncate(lo), macmahon_product(lo));
            prop_assert_eq!(long.coeffs(), short.coeffs());
        }
    }

    #[test]
    fn grid_stabilises() {
        for order in 1..=12 {
            let base = finite_grid_product(order, order);
            for side in order..order + 4 {
                assert_eq!(finite_grid_product(side, order), base, "side {side} order {order}");
            }
        }
    }

    #[test]
    fn macmahon_coefficients_count_objects() {
        let z = macmahon_product(60);
        assert!(z.coeffs().iter().all(|c| !c.is_negative()));
        assert!(z.coeffs()[1..].windows(2).all(|w| w[0] <= w[1]));
    }
}
