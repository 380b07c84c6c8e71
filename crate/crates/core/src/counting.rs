//! Subgroup counts of elementary abelian groups and of `Z^d`, the associated
//! zeta functions, and the bridge between normal zeta values and mass sums.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::qseries::{Polynomial, RationalFunction, TruncatedSeries};

/// Gaussian binomial `[n, k]_p` as a polynomial in `p`.
pub fn gaussian_binomial_poly(n: usize, k: usize) -> Result<Polynomial> {
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    // Row-by-row Pascal recurrence [m, j] = [m−1, j−1] + p^j [m−1, j].
    let mut row = vec![Polynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 { row[j - 1].clone() } else { Polynomial::zero() };
            let right = if j < m {
                row[j].mul(&Polynomial::monomial(j, exact::one()))
            } else {
                Polynomial::zero()
            };
            next.push(left.add(&right));
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= exact::big_pow(p, (n - i) as u32) - 1u32;
        den *= exact::big_pow(p, (i + 1) as u32) - 1u32;
    }
    Ok(num / den)
}

/// `s(n)`: number of subgroups of an elementary abelian group of order `p^n`.
pub fn elementary_subgroup_count(n: usize, p: u64) -> BigUint {
    (0..=n)
        .map(|k| gaussian_binomial(n, k, p).expect("k ≤ n"))
        .sum()
}

/// `s(n)` as a polynomial in `p`.
pub fn elementary_subgroup_poly(n: usize) -> Polynomial {
    (0..=n).fold(Polynomial::zero(), |acc, k| {
        acc.add(&gaussian_binomial_poly(n, k).expect("k ≤ n"))
    })
}

/// Number of sublattices of index `p^n` in `Z^d`: the coefficient of `t^n`
/// in `Π_{i=0}^{d−1} 1/(1 − p^i t)`.
pub fn sublattice_count(d: usize, p: u64, n: usize) -> BigUint {
    let mut coeffs = vec![BigUint::zero(); n + 1];
    coeffs[0] = BigUint::one();
    for i in 0..d {
        let w = exact::big_pow(p, i as u32);
        for m in 1..=n {
            let add = &coeffs[m - 1] * &w;
            coeffs[m] += add;
        }
    }
    coeffs.swap_remove(n)
}

/// `a_n(Z^d)` as a polynomial in `p` (the complete homogeneous symmetric
/// polynomial `h_n(1, p, …, p^{d−1})`).
pub fn sublattice_poly(d: usize, n: usize) -> Polynomial {
    sublattice_polys(d, n).swap_remove(n)
}

/// `a_0(Z^d), …, a_n(Z^d)` as polynomials in `p`.
pub fn sublattice_polys(d: usize, n: usize) -> Vec<Polynomial> {
    let mut coeffs = vec![Polynomial::zero(); n + 1];
    coeffs[0] = Polynomial::one();
    for i in 0..d {
        for m in 1..=n {
            let add = coeffs[m - 1].shift(i);
            coeffs[m] = coeffs[m].add(&add);
        }
    }
    coeffs
}

/// `Σ_n a_n(Z^d)·p^{−dn}` as a formal series in `x = 1/p`, assembled from
/// the sublattice polynomials. Each `a_n` has degree `n(d−1)`, so only
/// `n ≤ N` contributes through `x^N`.
pub fn lattice_zeta_series(d: usize, n_max: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(n_max);
    for (n, poly) in sublattice_polys(d, n_max).iter().enumerate() {
        for (j, c) in poly.coeffs().iter().enumerate() {
            let e = d * n - j;
            if e <= n_max {
                s.add_to_coeff(e, c);
            }
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaKind {
    /// Subgroups of finite index in `Z^d`.
    Lattice,
    /// Normal subgroups of the free nilpotent class-2 group on two
    /// generators.
    NormalF2Class2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaSpec {
    pub kind: ZetaKind,
    pub d: usize,
    pub p: u64,
    pub z: i64,
}

impl ZetaSpec {
    pub fn lattice(d: usize, p: u64, z: i64) -> Self {
        ZetaSpec {
            kind: ZetaKind::Lattice,
            d,
            p,
            z,
        }
    }

    pub fn normal_class2(p: u64, z: i64) -> Self {
        ZetaSpec {
            kind: ZetaKind::NormalF2Class2,
            d: 2,
            p,
            z,
        }
    }

    fn check(&self) -> Result<()> {
        if !exact::is_prime(self.p) {
            return Err(Error::InvalidParameter(format!("{} is not prime", self.p)));
        }
        match self.kind {
            ZetaKind::Lattice => {
                if self.d == 0 {
                    return Err(Error::InvalidParameter("lattice rank must be ≥ 1".into()));
                }
                if self.z < self.d as i64 {
                    return Err(Error::Divergent(format!(
                        "lattice zeta of rank {} diverges at z = {}",
                        self.d, self.z
                    )));
                }
            }
            ZetaKind::NormalF2Class2 => {
                if self.d != 2 {
                    return Err(Error::InvalidParameter(
                        "the class-2 normal zeta function is only known for rank 2".into(),
                    ));
                }
                if self.z <= 1 {
                    return Err(Error::Divergent(format!(
                        "class-2 normal zeta diverges at z = {}",
                        self.z
                    )));
                }
            }
        }
        Ok(())
    }

    /// Exponents `(a, b)` such that the zeta function is `Π 1/(1 − p^{a − b·z})`.
    fn factors(&self) -> Vec<(i64, i64)> {
        match self.kind {
            ZetaKind::Lattice => (0..self.d as i64).map(|i| (i, 1)).collect(),
            ZetaKind::NormalF2Class2 => vec![(0, 1), (1, 1), (2, 3)],
        }
    }

    pub fn value(&self) -> Result<Rational> {
        self.check()?;
        let p = exact::int(self.p as i64);
        let mut acc = Rational::one();
        for (a, b) in self.factors() {
            acc /= Rational::one() - exact::pow(&p, a - b * self.z);
        }
        Ok(acc)
    }

    /// The same value as a rational function of a symbolic prime `p`.
    pub fn symbolic(&self) -> Result<RationalFunction> {
        self.check()?;
        let mut acc = RationalFunction::one();
        for (a, b) in self.factors() {
            let t = RationalFunction::power(a - b * self.z);
            acc = acc.div(&RationalFunction::one().sub(&t))?;
        }
        Ok(acc)
    }
}

pub fn zeta_value(spec: &ZetaSpec) -> Result<Rational> {
    spec.value()
}

/// `Π_{j<k}(p^d − p^j)·p^{−dk}`, the proportion of `k`-tuples in `F_p^d`
/// that are linearly independent.
fn bridge_weight(d: usize, k: usize) -> RationalFunction {
    let p = RationalFunction::x();
    let pd = p.pow(d);
    let mut w = RationalFunction::one();
    for j in 0..k {
        w = w.mul(&pd.sub(&p.pow(j)));
    }
    w.mul(&RationalFunction::power(-((d * k) as i64)))
}

fn bridge_weight_at(d: usize, k: usize, p: u64) -> Rational {
    bridge_weight(d, k)
        .evaluate(&exact::int(p as i64))
        .expect("polynomial in p")
}

fn check_bridge_len(d: usize, len: usize) -> Result<()> {
    if d == 0 || len != d {
        return Err(Error::InvalidParameter(format!(
            "bridge of rank {d} needs {d} mass sums, got {len}"
        )));
    }
    Ok(())
}

/// `1 + Σ_{k=1}^{d} Π_{j<k}(p^d − p^j)·p^{−dk}·mass_sums[k−1]`.
pub fn prop13_mass_bridge(d: usize, p: u64, mass_sums: &[Rational]) -> Result<Rational> {
    check_bridge_len(d, mass_sums.len())?;
    let mut acc = Rational::one();
    for (i, m) in mass_sums.iter().enumerate() {
        acc += bridge_weight_at(d, i + 1, p) * m;
    }
    Ok(acc)
}

/// Symbolic form of [`prop13_mass_bridge`].
pub fn prop13_mass_bridge_symbolic(d: usize, mass_sums: &[RationalFunction]) -> Result<RationalFunction> {
    check_bridge_len(d, mass_sums.len())?;
    let mut acc = RationalFunction::one();
    for (i, m) in mass_sums.iter().enumerate() {
        acc = acc.add(&bridge_weight(d, i + 1).mul(m));
    }
    Ok(acc)
}

/// Solves the bridge for the rank-`d` mass sum given the zeta value and the
/// lower-rank mass sums.
pub fn solve_top_mass(d: usize, p: u64, zeta: &Rational, lower: &[Rational]) -> Result<Rational> {
    check_bridge_len(d, lower.len() + 1)?;
    let mut rest = zeta - Rational::one();
    for (i, m) in lower.iter().enumerate() {
        rest -= bridge_weight_at(d, i + 1, p) * m;
    }
    Ok(rest / bridge_weight_at(d, d, p))
}

pub fn solve_top_mass_symbolic(
    d: usize,
    zeta: &RationalFunction,
    lower: &[RationalFunction],
) -> Result<RationalFunction> {
    check_bridge_len(d, lower.len() + 1)?;
    let mut rest = zeta.sub(&RationalFunction::one());
    for (i, m) in lower.iter().enumerate() {
        rest = rest.sub(&bridge_weight(d, i + 1).mul(m));
    }
    rest.div(&bridge_weight(d, d))
}

/// Mass of the cyclic `p`-groups: `Σ_{n≥1} 1/(p^{n−1}(p−1)) = p/(p−1)²`.
pub fn cyclic_mass_symbolic() -> RationalFunction {
    let p = RationalFunction::x();
    let pm1 = p.sub(&RationalFunction::one());
    p.div(&pm1.pow(2)).expect("nonzero")
}

/// Mass of the abelian `p`-groups of rank `k`: `p^k/Π_{i=1}^{k}(p^i − 1)²`.
pub fn abelian_rank_mass_symbolic(k: usize) -> RationalFunction {
    let p = RationalFunction::x();
    let mut den = RationalFunction::one();
    for i in 1..=k {
        den = den.mul(&p.pow(i).sub(&RationalFunction::one()).pow(2));
    }
    p.pow(k).div(&den).expect("nonzero")
}

/// The closed form `p²(2p⁴−1)/((p−1)⁵(p+1)³(p²+1))` for the rank-2 mass of
/// class-2 `p`-groups.
pub fn class2_rank2_mass_closed_form() -> RationalFunction {
    let p = RationalFunction::x();
    let one = RationalFunction::one();
    let num = p.pow(2).mul(&p.pow(4).mul(&RationalFunction::constant(exact::int(2))).sub(&one));
    let den = p
        .sub(&one)
        .pow(5)
        .mul(&p.add(&one).pow(3))
        .mul(&p.pow(2).add(&one));
    num.div(&den).expect("nonzero")
}

/// The rank-2 class-2 mass obtained by solving the bridge against the
/// normal zeta function at `z = 2`.
pub fn class2_rank2_mass_from_zeta() -> Result<RationalFunction> {
    let zeta = ZetaSpec::normal_class2(2, 2).symbolic()?;
    solve_top_mass_symbolic(2, &zeta, &[cyclic_mass_symbolic()])
}

/// Rank-`d` mass of class-2 groups with central `p`-th powers via
/// subgroup counting: `s(C(d,2))·ζ_{Z^d}(d) / Π_{i<d}(p^d − p^i)`.
pub fn class2_exponent_p_mass(d: usize, p: u64) -> Result<Rational> {
    let pairs = d * d.saturating_sub(1) / 2;
    let s = exact::from_biguint(&elementary_subgroup_count(pairs, p));
    let zeta = ZetaSpec::lattice(d, p, d as i64).value()?;
    Ok(s * zeta / bridge_weight_at(d, d, p) * exact::pow(&exact::int(p as i64), -((d * d) as i64)))
}

pub fn class2_exponent_p_mass_symbolic(d: usize) -> Result<RationalFunction> {
    let pairs = d * d.saturating_sub(1) / 2;
    let s = RationalFunction::from_polynomial(elementary_subgroup_poly(pairs));
    let zeta = lattice_zeta_symbolic_at_rank(d)?;
    s.mul(&zeta)
        .div(&bridge_weight(d, d).mul(&RationalFunction::power((d * d) as i64)))
}

fn lattice_zeta_symbolic_at_rank(d: usize) -> Result<RationalFunction> {
    let mut acc = RationalFunction::one();
    for i in 0..d as i64 {
        acc = acc.div(&RationalFunction::one().sub(&RationalFunction::power(i - d as i64)))?;
    }
    Ok(acc)
}

/// `s(C(d,2))·p^d / Π_{i=1}^{d}(p^i − 1)²` at a symbolic prime.
pub fn class2_exponent_p_mass_closed_form(d: usize) -> RationalFunction {
    let pairs = d * d.saturating_sub(1) / 2;
    RationalFunction::from_polynomial(elementary_subgroup_poly(pairs)).mul(&abelian_rank_mass_symbolic(d))
}
