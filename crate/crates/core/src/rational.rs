//! Exact rational scalars, kept in lowest terms with a positive denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut acc = BigRational::one();
        let mut sq = base.0;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(Rational(acc))
    }

    /// `sum_{v=lo..=hi} self^v`, zero when the range is empty.
    pub fn geometric_sum(&self, lo: u64, hi: u64) -> Self {
        if lo > hi {
            return Rational::zero();
        }
        let mut term = self.pow(lo as i64).expect("nonnegative exponent");
        let mut acc = Rational::zero();
        for _ in lo..=hi {
            acc = &acc + &term;
            term = &term * self;
        }
        acc
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        match s.trim().split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::integer(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

pub fn rat_add(x: &Rational, y: &Rational) -> Rational {
    x + y
}

pub fn rat_sub(x: &Rational, y: &Rational) -> Rational {
    x - y
}

pub fn rat_mul(x: &Rational, y: &Rational) -> Rational {
    x * y
}

pub fn rat_div(x: &Rational, y: &Rational) -> Result<Rational> {
    x.checked_div(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(rat_add(&r(1, 2), &r(1, 3)), r(5, 6));
        assert_eq!(r(2, 4).numer(), &BigInt::from(1));
        assert_eq!(r(2, 4).denom(), &BigInt::from(2));
        assert_eq!(rat_mul(&r(1, 2), &r(1, 3)), r(1, 6));
        assert_eq!(rat_sub(&r(1, 2), &r(1, 3)), r(1, 6));
        assert_eq!(rat_div(&r(1, 2), &r(1, 3)).unwrap(), r(3, 2));
        assert_eq!(rat_div(&r(1, 2), &Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_sign_and_zero() {
        let x = r(3, -6);
        assert_eq!(x.numer(), &BigInt::from(-1));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = r(0, -5);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn powers() {
        assert_eq!(r(2, 3).pow(3).unwrap(), r(8, 27));
        assert_eq!(r(2, 3).pow(-2).unwrap(), r(9, 4));
        assert_eq!(r(2, 3).pow(0).unwrap(), Rational::one());
        assert!(Rational::zero().pow(-1).is_err());
        assert_eq!(r(1, 2).geometric_sum(1, 3), r(7, 8));
        assert_eq!(r(1, 2).geometric_sum(3, 2), Rational::zero());
    }

    #[test]
    fn parsing() {
        assert_eq!("1/2".parse::<Rational>().unwrap(), r(1, 2));
        assert_eq!("-2/4".parse::<Rational>().unwrap(), r(-1, 2));
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::integer(3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }
}
