use std::fmt;

use num_traits::Zero;

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};

/// Univariate rational function kept in the unique normal form: numerator and
/// denominator coprime, denominator monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().recip();
        RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_polynomial(Polynomial::x())
    }

    /// `x^e` for any integer `e`.
    pub fn power(e: i64) -> Self {
        let m = Polynomial::monomial(e.unsigned_abs() as usize, exact::one());
        if e >= 0 {
            Self::from_polynomial(m)
        } else {
            Self::normalized(Polynomial::one(), m)
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Recomputes the normal form; idempotent on values of this type.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().div(self)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Cross-multiplication test, valid for any representatives.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn evaluate(&self, t: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(t);
        if d.is_zero() {
            return Err(Error::Pole(exact::to_string(t)));
        }
        Ok(self.num.evaluate(t) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn p_minus(c: i64) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::from_ints(&[-c, 1]))
    }

    #[test]
    fn cancellation() {
        let x = RationalFunction::x();
        let a = x.div(&p_minus(1)).unwrap();
        let b = p_minus(1).div(&x).unwrap();
        assert_eq!(a.mul(&b), RationalFunction::one());
    }

    #[test]
    fn pole_is_an_error() {
        let f = RationalFunction::one().div(&p_minus(1)).unwrap();
        assert!(matches!(f.evaluate(&int(1)), Err(Error::Pole(_))));
        assert_eq!(f.evaluate(&int(3)).unwrap(), ratio(1, 2));
        assert_eq!(
            RationalFunction::one().div(&RationalFunction::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn class_two_mass_at_two() {
        // p^2 (2p^4 - 1) / ((p-1)^5 (p+1)^3 (p^2+1)) at p = 2.
        let p = RationalFunction::x();
        let num = p.pow(2).mul(&p.pow(4).mul(&RationalFunction::constant(int(2))).sub(&RationalFunction::one()));
        let den = p_minus(1)
            .pow(5)
            .mul(&p_minus(-1).pow(3))
            .mul(&p.pow(2).add(&RationalFunction::one()));
        let f = num.div(&den).unwrap();
        assert_eq!(f.evaluate(&int(2)).unwrap(), ratio(124, 135));
        assert_eq!(f.normalize(), f);
    }

    #[test]
    fn negative_powers() {
        let f = RationalFunction::power(-2);
        assert_eq!(f.evaluate(&int(2)).unwrap(), ratio(1, 4));
        assert_eq!(f.mul(&RationalFunction::power(2)), RationalFunction::one());
    }
}
