//! Exact rational helpers and the `"num/den"` string form used in reports.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// `base^exp` for a possibly negative exponent.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

pub fn big_pow(base: u64, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Always `num/den`, including integers (`"3/1"`).
pub fn to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("rational `{s}`: {e}")))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("rational `{s}`: {e}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("rational `{s}` has zero denominator")));
    }
    Ok(Rational::new(n, d))
}

/// Integer value of `q`, or `None` when `q` has a nontrivial denominator.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Integer value of a positive integral rational.
pub fn as_natural(q: &Rational) -> Option<BigUint> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_biguint()
    } else {
        None
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `q = p^e` with `p` prime and `e ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form_round_trips() {
        assert_eq!(to_string(&ratio(124, 135)), "124/135");
        assert_eq!(to_string(&int(3)), "3/1");
        assert_eq!(to_string(&ratio(-2, 4)), "-1/2");
        assert_eq!(parse("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(5) && !is_prime(9) && !is_prime(1));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(pow(&int(2), -3), ratio(1, 8));
    }
}
