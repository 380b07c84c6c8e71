//! Orders of classical groups and of the automorphism groups that appear in
//! the mass formulae, as exact integers and as reciprocal series forms.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::abelian::{aut_form, aut_order_of};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::partitions::Partition;
use crate::qseries::{PochhammerFactor, SeriesForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    GL,
    AGL,
    GU,
    Sp,
    GSp,
    #[serde(rename = "O_odd")]
    OOdd,
    #[serde(rename = "O_even_plus")]
    OEvenPlus,
    #[serde(rename = "O_even_minus")]
    OEvenMinus,
    #[serde(rename = "Aut_A_d")]
    AutA,
    #[serde(rename = "Aut_H_d")]
    AutH,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::GL,
        Family::AGL,
        Family::GU,
        Family::Sp,
        Family::GSp,
        Family::OOdd,
        Family::OEvenPlus,
        Family::OEvenMinus,
        Family::AutA,
        Family::AutH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GL => "GL",
            Family::AGL => "AGL",
            Family::GU => "GU",
            Family::Sp => "Sp",
            Family::GSp => "GSp",
            Family::OOdd => "O_odd",
            Family::OEvenPlus => "O_even_plus",
            Family::OEvenMinus => "O_even_minus",
            Family::AutA => "Aut_A_d",
            Family::AutH => "Aut_H_d",
        }
    }

    /// Families parameterised by a prime rather than a prime power.
    fn needs_prime(self) -> bool {
        matches!(self, Family::GSp | Family::AutA | Family::AutH)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A group order request. `dim` is the dimension of the natural module
/// (`2r` for `Sp`/`GSp`, `2k+1` and `2k` for the orthogonal families) and
/// `d` for `Aut(A_d)`, `Aut(H_d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupOrderSpec {
    pub family: Family,
    pub dim: usize,
    pub q: u64,
}

impl GroupOrderSpec {
    pub fn new(family: Family, dim: usize, q: u64) -> Result<Self> {
        let spec = GroupOrderSpec { family, dim, q };
        spec.validate()?;
        Ok(spec)
    }

    pub fn gl(k: usize, q: u64) -> Result<Self> {
        Self::new(Family::GL, k, q)
    }

    pub fn agl(k: usize, q: u64) -> Result<Self> {
        Self::new(Family::AGL, k, q)
    }

    pub fn gu(k: usize, q: u64) -> Result<Self> {
        Self::new(Family::GU, k, q)
    }

    pub fn sp(k: usize, q: u64) -> Result<Self> {
        Self::new(Family::Sp, 2 * k, q)
    }

    pub fn gsp(r: usize, p: u64) -> Result<Self> {
        Self::new(Family::GSp, 2 * r, p)
    }

    pub fn o_odd(k: usize, q: u64) -> Result<Self> {
        Self::new(Family::OOdd, 2 * k + 1, q)
    }

    pub fn o_even(k: usize, q: u64, plus: bool) -> Result<Self> {
        let family = if plus { Family::OEvenPlus } else { Family::OEvenMinus };
        Self::new(family, 2 * k, q)
    }

    pub fn aut_a(d: usize, p: u64) -> Result<Self> {
        Self::new(Family::AutA, d, p)
    }

    pub fn aut_h(d: usize, p: u64) -> Result<Self> {
        Self::new(Family::AutH, d, p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.dim == 0 {
            return bad(format!("{}: dimension must be at least 1", self.family));
        }
        if self.family.needs_prime() {
            if !exact::is_prime(self.q) {
                return bad(format!("{}: {} is not prime", self.family, self.q));
            }
        } else if exact::prime_power(self.q).is_none() {
            return bad(format!("{}: {} is not a prime power", self.family, self.q));
        }
        let parity_ok = match self.family {
            Family::Sp | Family::GSp | Family::OEvenPlus | Family::OEvenMinus => self.dim.is_multiple_of(2),
            Family::OOdd => self.dim % 2 == 1 && self.dim >= 3,
            _ => true,
        };
        if !parity_ok {
            return bad(format!("{}: dimension {} has the wrong parity", self.family, self.dim));
        }
        Ok(())
    }

    /// Rank-like parameter: `k` for `GL(k)`, `r` for `GSp(2r)`, `k` for
    /// `O(2k+1)` and `O^±(2k)`.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::Sp | Family::GSp | Family::OEvenPlus | Family::OEvenMinus => self.dim / 2,
            Family::OOdd => (self.dim - 1) / 2,
            _ => self.dim,
        }
    }

    pub fn order(&self) -> Result<BigUint> {
        self.validate()?;
        let q = self.q;
        let k = self.rank();
        let qi = |e: usize| BigInt::from(exact::big_pow(q, e as u32));
        let prod = |range: std::ops::RangeInclusive<usize>, f: &dyn Fn(usize) -> BigInt| {
            range.fold(BigInt::one(), |acc, i| acc * f(i))
        };
        let gl = |k: usize| qi(k * (k.saturating_sub(1)) / 2) * prod(1..=k, &|i| qi(i) - 1);
        let sp = |k: usize| qi(k * k) * prod(1..=k, &|i| qi(2 * i) - 1);
        let n: BigInt = match self.family {
            Family::GL => gl(k),
            Family::AGL => qi(k) * gl(k),
            Family::GU => {
                qi(k * (k - 1) / 2) * prod(1..=k, &|i| qi(i) - if i % 2 == 0 { 1 } else { -1 })
            }
            Family::Sp => sp(k),
            Family::GSp => BigInt::from(q - 1) * sp(k),
            Family::OOdd => {
                if q.is_multiple_of(2) {
                    sp(k)
                } else {
                    BigInt::from(2) * sp(k)
                }
            }
            Family::OEvenPlus | Family::OEvenMinus => {
                let eps = if self.family == Family::OEvenPlus { 1 } else { -1 };
                BigInt::from(2)
                    * qi(k * (k - 1))
                    * (qi(k) - eps)
                    * prod(1..=k - 1, &|i| qi(2 * i) - 1)
            }
            Family::AutA | Family::AutH => BigInt::from(aut_order_of(q, &self.abelian_lambda())),
        };
        if !n.is_positive() {
            return Err(Error::InvalidParameter(format!("{self} has no positive order")));
        }
        Ok(n.to_biguint().expect("positive"))
    }

    /// `λ = (2,1^{d−1})` for `A_d` and `λ = (2^d)` for `H_d`.
    fn abelian_lambda(&self) -> Partition {
        let d = self.dim;
        match self.family {
            Family::AutA => {
                let mut parts = vec![1; d];
                parts[0] = 2;
                Partition::from_parts(parts)
            }
            Family::AutH => Partition::rectangle(2, d),
            _ => unreachable!("only the abelian families carry a partition"),
        }
    }

    /// Closed form `F` with `F(1/q) = 1/|order|`.
    pub fn reciprocal_form(&self) -> SeriesForm {
        let k = self.rank();
        let kk = (k * k) as i64;
        let ki = k as i64;
        let f = PochhammerFactor::plain;
        let half = exact::ratio(1, 2);
        match self.family {
            Family::GL => SeriesForm::monomial(kk).over(f(k)),
            Family::AGL => SeriesForm::monomial(kk + ki).over(f(k)),
            Family::GU => SeriesForm::monomial(kk).over(PochhammerFactor { k, m: 1, sigma: -1 }),
            Family::Sp => SeriesForm::monomial(2 * kk + ki).over(PochhammerFactor::at_power(k, 2)),
            Family::GSp => SeriesForm::monomial(2 * kk + ki + 1)
                .over(f(1))
                .over(PochhammerFactor::at_power(k, 2)),
            Family::OOdd => {
                let form =
                    SeriesForm::monomial(2 * kk + ki).over(PochhammerFactor::at_power(k, 2));
                if self.q.is_multiple_of(2) {
                    form
                } else {
                    form.scaled(half)
                }
            }
            Family::OEvenPlus | Family::OEvenMinus => {
                let sigma = if self.family == Family::OEvenPlus { 1 } else { -1 };
                SeriesForm::monomial(2 * kk - ki)
                    .over(PochhammerFactor { k: 1, m: k, sigma })
                    .over(PochhammerFactor::at_power(k - 1, 2))
                    .scaled(half)
            }
            Family::AutA | Family::AutH => aut_form(&self.abelian_lambda()),
        }
    }

    /// `1/|order|` read off the series form at `x = 1/q`.
    pub fn reciprocal_from_form(&self) -> Result<Rational> {
        self.reciprocal_form().evaluate(&exact::ratio(1, self.q as i64))
    }
}

impl fmt::Display for GroupOrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::AutA => write!(f, "Aut(A_{}) at p={}", self.dim, self.q),
            Family::AutH => write!(f, "Aut(H_{}) at p={}", self.dim, self.q),
            Family::OEvenPlus => write!(f, "O+({},{})", self.dim, self.q),
            Family::OEvenMinus => write!(f, "O-({},{})", self.dim, self.q),
            Family::OOdd => write!(f, "O({},{})", self.dim, self.q),
            fam => write!(f, "{}({},{})", fam, self.dim, self.q),
        }
    }
}

/// The product `p^{d(d+1)/2}(p−1)Π_{i=1}^{d−1}(p^i−1)` for `|Aut(A_d)|`.
pub fn aut_a_closed_form(d: usize, p: u64) -> BigUint {
    let mut n = exact::big_pow(p, (d * (d + 1) / 2) as u32) * BigUint::from(p - 1);
    for i in 1..d {
        n *= exact::big_pow(p, i as u32) - BigUint::one();
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_orders() {
        assert_eq!(GroupOrderSpec::gl(2, 2).unwrap().order().unwrap(), BigUint::from(6u32));
        assert_eq!(GroupOrderSpec::gsp(1, 3).unwrap().order().unwrap(), BigUint::from(48u32));
        assert_eq!(GroupOrderSpec::aut_a(2, 2).unwrap().order().unwrap(), BigUint::from(8u32));
        assert_eq!(GroupOrderSpec::gl(1, 7).unwrap().order().unwrap(), BigUint::from(6u32));
        assert_eq!(GroupOrderSpec::gl(2, 4).unwrap().order().unwrap(), BigUint::from(180u32));
    }

    #[test]
    fn standard_small_groups() {
        let ord = |s: Result<GroupOrderSpec>| s.unwrap().order().unwrap();
        // SL(2,3) has order 24 and GU(2,2) ≅ order 18.
        assert_eq!(ord(GroupOrderSpec::sp(1, 3)), BigUint::from(24u32));
        assert_eq!(ord(GroupOrderSpec::gu(2, 2)), BigUint::from(18u32));
        assert_eq!(ord(GroupOrderSpec::gu(1, 5)), BigUint::from(6u32));
        // O(3,3) ≅ C2 × S4, O+(2,q) dihedral of order 2(q−1), O−(2,q) of order 2(q+1).
        assert_eq!(ord(GroupOrderSpec::o_odd(1, 3)), BigUint::from(48u32));
        assert_eq!(ord(GroupOrderSpec::o_even(1, 5, true)), BigUint::from(8u32));
        assert_eq!(ord(GroupOrderSpec::o_even(1, 5, false)), BigUint::from(12u32));
        // O+(4,2) ≅ S3 wr C2 of order 72.
        assert_eq!(ord(GroupOrderSpec::o_even(2, 2, true)), BigUint::from(72u32));
        assert_eq!(ord(GroupOrderSpec::aut_h(1, 3)), BigUint::from(6u32));
    }

    #[test]
    fn invalid_specs() {
        assert!(GroupOrderSpec::gl(0, 2).is_err());
        assert!(GroupOrderSpec::gl(2, 6).is_err());
        assert!(GroupOrderSpec::gsp(1, 4).is_err());
        assert!(GroupOrderSpec::new(Family::Sp, 3, 2).is_err());
        assert!(GroupOrderSpec::new(Family::OOdd, 1, 3).is_err());
    }

    #[test]
    fn forms_match_orders() {
        for fam in Family::ALL {
            for p in [2u64, 3, 5] {
                for r in 1..=4usize {
                    let spec = match fam {
                        Family::Sp | Family::GSp | Family::OEvenPlus | Family::OEvenMinus => {
                            GroupOrderSpec::new(fam, 2 * r, p)
                        }
                        Family::OOdd => GroupOrderSpec::new(fam, 2 * r + 1, p),
                        _ => GroupOrderSpec::new(fam, r, p),
                    }
                    .unwrap();
                    let order = exact::from_biguint(&spec.order().unwrap());
                    assert_eq!(spec.reciprocal_from_form().unwrap(), order.recip(), "{spec}");
                }
            }
        }
    }

    #[test]
    fn aut_a_product() {
        for p in [2u64, 3] {
            for d in 1..=5 {
                let spec = GroupOrderSpec::aut_a(d, p).unwrap();
                assert_eq!(spec.order().unwrap(), aut_a_closed_form(d, p), "d={d} p={p}");
            }
        }
    }

    #[test]
    fn spec_json() {
        let s = GroupOrderSpec::gl(2, 2).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"family":"GL","dim":2,"q":2}"#);
        let back: GroupOrderSpec =
            serde_json::from_str(r#"{"family":"Aut_A_d","dim":3,"q":2}"#).unwrap();
        assert_eq!(back, GroupOrderSpec::aut_a(3, 2).unwrap());
    }
}
