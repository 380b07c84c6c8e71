use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::product::divide_by_pochhammer;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};

/// `f_k(σ·x^m) = Π_{i=1}^{k} (1 − σ^i x^{mi})` with `σ = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PochhammerFactor {
    pub k: usize,
    pub m: usize,
    pub sigma: i8,
}

impl PochhammerFactor {
    pub fn plain(k: usize) -> Self {
        PochhammerFactor { k, m: 1, sigma: 1 }
    }

    pub fn at_power(k: usize, m: usize) -> Self {
        PochhammerFactor { k, m, sigma: 1 }
    }

    fn evaluate(&self, x: &Rational) -> Rational {
        let sigma = exact::int(self.sigma as i64);
        let xm = exact::pow(x, self.m as i64);
        let mut acc = Rational::one();
        let mut t = Rational::one();
        for _ in 0..self.k {
            t = t * &sigma * &xm;
            acc *= Rational::one() - &t;
        }
        acc
    }
}

/// Closed form `scale · x^exponent / Π f_{k_j}(σ_j x^{m_j})`.
///
/// Reciprocal group orders are carried in this shape so they can be read both
/// as exact rationals at `x = 1/q` and as formal series in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesForm {
    pub scale: Rational,
    pub exponent: i64,
    pub factors: Vec<PochhammerFactor>,
}

impl SeriesForm {
    pub fn monomial(exponent: i64) -> Self {
        SeriesForm {
            scale: Rational::one(),
            exponent,
            factors: Vec::new(),
        }
    }

    pub fn over(mut self, factor: PochhammerFactor) -> Self {
        if factor.k > 0 {
            self.factors.push(factor);
        }
        self
    }

    pub fn scaled(mut self, c: Rational) -> Self {
        self.scale *= c;
        self
    }

    /// Multiplies by `x^delta`.
    pub fn shifted(mut self, delta: i64) -> Self {
        self.exponent += delta;
        self
    }

    pub fn times(&self, other: &SeriesForm) -> SeriesForm {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        SeriesForm {
            scale: &self.scale * &other.scale,
            exponent: self.exponent + other.exponent,
            factors,
        }
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        let mut den = Rational::one();
        for f in &self.factors {
            den *= f.evaluate(x);
        }
        if den.is_zero() || (x.is_zero() && self.exponent < 0) {
            return Err(Error::Pole(exact::to_string(x)));
        }
        Ok(&self.scale * exact::pow(x, self.exponent) / den)
    }

    /// Formal expansion through `x^n`; the exponent must be nonnegative.
    pub fn to_series(&self, n: usize) -> Result<TruncatedSeries> {
        if self.exponent < 0 {
            return Err(Error::InvalidParameter(format!(
                "series form has negative exponent {}",
                self.exponent
            )));
        }
        let mut s = TruncatedSeries::monomial(n, self.exponent as usize, self.scale.clone());
        for f in &self.factors {
            divide_by_pochhammer(&mut s, f.k, f.m, &exact::int(f.sigma as i64));
        }
        Ok(s)
    }
}

impl fmt::Display for SeriesForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scale.is_one() {
            write!(f, "{}·", self.scale)?;
        }
        write!(f, "x^{}", self.exponent)?;
        for fac in &self.factors {
            let arg = match (fac.sigma, fac.m) {
                (1, 1) => "x".to_string(),
                (1, m) => format!("x^{m}"),
                (_, 1) => "-x".to_string(),
                (_, m) => format!("-x^{m}"),
            };
            write!(f, " / f_{}({})", fac.k, arg)?;
        }
        Ok(())
    }
}
