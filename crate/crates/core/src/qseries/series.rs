use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};

/// Formal power series in one indeterminate `x`, known exactly up to and
/// including `x^N`.
///
/// Binary operations on operands of different truncation use the smaller
/// degree; when that happens the larger one is remembered in
/// [`narrowed_from`](Self::narrowed_from).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
    narrowed_from: Option<usize>,
}

impl TruncatedSeries {
    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); n + 1],
            narrowed_from: None,
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, Rational::one())
    }

    /// `c·x^e`, which is the zero series when `e > n`.
    pub fn monomial(n: usize, e: usize, c: Rational) -> Self {
        let mut s = Self::zero(n);
        if e <= n {
            s.coeffs[e] = c;
        }
        s
    }

    /// Coefficients beyond degree `n` are dropped; missing ones are zero.
    pub fn from_coeffs(n: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(n);
        for (i, c) in coeffs.into_iter().take(n + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn from_ints(n: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(n, coeffs.iter().map(|&c| exact::int(c)))
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn narrowed_from(&self) -> Option<usize> {
        self.narrowed_from
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, i: usize, c: Rational) {
        if i < self.coeffs.len() {
            self.coeffs[i] = c;
        }
    }

    pub fn add_to_coeff(&mut self, i: usize, c: &Rational) {
        if i < self.coeffs.len() {
            self.coeffs[i] += c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degree of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Drops every coefficient above `n` (no-op when `n` is not smaller).
    pub fn truncate(&self, n: usize) -> Self {
        let n_self = self.truncation();
        if n >= n_self {
            return self.clone();
        }
        TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
            narrowed_from: Some(self.narrowed_from.unwrap_or(n_self).max(n_self)),
        }
    }

    fn aligned(&self, other: &Self) -> (usize, Option<usize>) {
        let (a, b) = (self.truncation(), other.truncation());
        let n = a.min(b);
        let dropped = [(a != b).then_some(a.max(b)), self.narrowed_from, other.narrowed_from]
            .into_iter()
            .flatten()
            .max();
        (n, dropped)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (n, narrowed_from) = self.aligned(other);
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncatedSeries { coeffs, narrowed_from }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (n, narrowed_from) = self.aligned(other);
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        TruncatedSeries { coeffs, narrowed_from }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n, narrowed_from) = self.aligned(other);
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs, narrowed_from }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            narrowed_from: self.narrowed_from,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let inv0 = c0.recip();
        let n = self.truncation();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncatedSeries {
            coeffs: out,
            narrowed_from: self.narrowed_from,
        })
    }

    /// Coefficient-exact comparison up to `n` (clamped to both truncations).
    pub fn equals_up_to(&self, other: &Self, n: usize) -> bool {
        let n = n.min(self.truncation()).min(other.truncation());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// First degree `≤ n` at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.truncation().min(other.truncation());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Multiplies by `x^e` in place, dropping what falls beyond the truncation.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.truncation();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for i in 0..=n.saturating_sub(e) {
            if i + e <= n {
                coeffs[i + e] = self.coeffs[i].clone();
            }
        }
        TruncatedSeries {
            coeffs,
            narrowed_from: self.narrowed_from,
        }
    }

    /// Divides by `x^e`. The low coefficients must vanish; the result keeps
    /// the original degree bound minus `e`.
    pub fn unshift(&self, e: usize) -> Result<Self> {
        if let Some(v) = self.valuation() {
            if v < e {
                return Err(Error::InvalidParameter(format!(
                    "cannot divide by x^{e}: valuation is {v}"
                )));
            }
        }
        let n = self.truncation();
        if e > n {
            return Err(Error::InvalidParameter(format!("shift {e} exceeds truncation {n}")));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[e..].to_vec(),
            narrowed_from: Some(n),
        })
    }

    /// In-place multiplication by `1 − σ·x^a` for `a ≥ 1`.
    pub fn mul_one_minus(&mut self, a: usize, sigma: &Rational) {
        let n = self.truncation();
        if a == 0 || a > n {
            return;
        }
        for i in (a..=n).rev() {
            if !self.coeffs[i - a].is_zero() {
                let t = sigma * &self.coeffs[i - a];
                self.coeffs[i] -= t;
            }
        }
    }

    /// In-place division by `1 − σ·x^a` for `a ≥ 1` (multiplication by the
    /// geometric series `Σ σ^j x^{ja}`).
    pub fn div_one_minus(&mut self, a: usize, sigma: &Rational) {
        let n = self.truncation();
        assert!(a >= 1, "division by 1 - σ is not a power-series operation");
        if a > n {
            return;
        }
        let unit = sigma.is_one();
        for i in a..=n {
            if !self.coeffs[i - a].is_zero() {
                let t = if unit {
                    self.coeffs[i - a].clone()
                } else {
                    sigma * &self.coeffs[i - a]
                };
                self.coeffs[i] += t;
            }
        }
    }

    /// `s(x^m)`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1);
        let n = self.truncation();
        let mut out = Self::zero(n);
        out.narrowed_from = self.narrowed_from;
        for i in 0..=n / m {
            out.coeffs[i * m] = self.coeffs[i].clone();
        }
        out
    }

    /// `s(c·x)`.
    pub fn scale_variable(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a *= &pow;
            pow *= c;
        }
        out
    }

    /// Exact partial sum `Σ_{n ≤ N} c_n·t^n`.
    pub fn evaluate_partial(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            truncation: self.truncation(),
            coefficients: self.coeffs.iter().map(exact::to_string).collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self> {
        if json.coefficients.len() != json.truncation + 1 {
            return Err(Error::Parse(format!(
                "series JSON: {} coefficients for truncation {}",
                json.coefficients.len(),
                json.truncation
            )));
        }
        let coeffs = json
            .coefficients
            .iter()
            .map(|c| exact::parse(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries {
            coeffs,
            narrowed_from: None,
        })
    }
}

/// Wire form: `{"truncation": N, "coefficients": ["num/den", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub truncation: usize,
    pub coefficients: Vec<String>,
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.truncation() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn geometric_inverse() {
        let s = TruncatedSeries::from_ints(10, &[1, -1]);
        let inv = s.invert_unit().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == int(1)));
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncatedSeries::from_ints(5, &[1, -1]);
        let b = TruncatedSeries::from_ints(5, &[1, 1]);
        assert_eq!(a.mul(&b), TruncatedSeries::from_ints(5, &[1, 0, -1]));
    }

    #[test]
    fn non_unit_inverse_fails() {
        let s = TruncatedSeries::from_ints(5, &[0, 1]);
        assert_eq!(s.invert_unit(), Err(Error::NonUnitSeries));
    }

    #[test]
    fn substitution_examples() {
        let s = TruncatedSeries::from_ints(6, &[1, 1]);
        assert_eq!(s.substitute_power(2), TruncatedSeries::from_ints(6, &[1, 0, 1]));
        assert_eq!(s.substitute_power(1), s);
        let geo = TruncatedSeries::from_ints(6, &[1, -1]).invert_unit().unwrap();
        assert_eq!(
            geo.substitute_power(2),
            TruncatedSeries::from_ints(6, &[1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn narrowing_is_recorded() {
        let a = TruncatedSeries::one(10);
        let b = TruncatedSeries::one(4);
        let c = a.mul(&b);
        assert_eq!(c.truncation(), 4);
        assert_eq!(c.narrowed_from(), Some(10));
        assert_eq!(a.mul(&a).narrowed_from(), None);
    }

    #[test]
    fn in_place_factors() {
        let mut s = TruncatedSeries::one(8);
        s.div_one_minus(2, &int(1));
        s.mul_one_minus(2, &int(1));
        assert_eq!(s, TruncatedSeries::one(8));
        let mut t = TruncatedSeries::one(4);
        t.div_one_minus(1, &int(-1));
        assert_eq!(t, TruncatedSeries::from_ints(4, &[1, -1, 1, -1, 1]));
    }

    #[test]
    fn partial_evaluation() {
        let s = TruncatedSeries::from_ints(3, &[1, 1]);
        assert_eq!(s.evaluate_partial(&ratio(1, 2)), ratio(3, 2));
        assert!(TruncatedSeries::zero(5).evaluate_partial(&ratio(1, 2)).is_zero());
    }

    #[test]
    fn json_shape() {
        let s = TruncatedSeries::from_coeffs(2, vec![int(1), ratio(-1, 2)]);
        let json = serde_json::to_string(&s.to_json()).unwrap();
        assert_eq!(json, r#"{"truncation":2,"coefficients":["1/1","-1/2","0/1"]}"#);
        let back: SeriesJson = serde_json::from_str(&json).unwrap();
        assert_eq!(TruncatedSeries::from_json(&back).unwrap(), s);
    }
}
