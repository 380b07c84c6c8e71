//! Subgroup counting, lattice zeta functions and the class-2 masses derived
//! from them.

use super::sums::{count_series, form};
use super::{Ctx, Outcome};
use crate::counting::{
    abelian_rank_mass_symbolic, class2_exponent_p_mass, class2_exponent_p_mass_closed_form,
    class2_exponent_p_mass_symbolic, class2_rank2_mass_closed_form, class2_rank2_mass_from_zeta,
    cyclic_mass_symbolic, elementary_subgroup_count, elementary_subgroup_poly, lattice_zeta_series,
    prop13_mass_bridge, prop13_mass_bridge_symbolic, solve_top_mass, sublattice_count, ZetaSpec,
};
use crate::error::Result;
use crate::exact::{self, Rational};
use crate::oracles::{oracle_hnf_sublattice_count, oracle_subspace_count};
use crate::partitions::count_more_parts;
use crate::qseries::{inverse_pochhammer_f, partition_series, TruncatedSeries};

fn at(p: u64) -> Rational {
    exact::int(p as i64)
}

/// `Z_{Z^d}(x)·x^{d²}/f_d`, the rank-`d` class-2 mass with the subgroup
/// factor `s(C(d,2))` removed.
fn class2_series(d: usize, n: usize) -> Result<TruncatedSeries> {
    Ok(lattice_zeta_series(d, n).mul(&form(d * d, &[(d, 1)]).to_series(n)?))
}

pub fn thm7_14(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for d in ctx.ints("d") {
        let closed = class2_exponent_p_mass_closed_form(d);
        for &p in ctx.primes() {
            out.exact(
                format!("d={d}, p={p}: counting pipeline = s(C(d,2))·p^d/Π(p^i−1)²"),
                class2_exponent_p_mass(d, p)?,
                closed.evaluate(&at(p))?,
            );
        }
        out.symbolic(
            format!("d={d}: symbolic pipeline = closed form"),
            class2_exponent_p_mass_symbolic(d)?,
            closed,
        );
        out.series(
            format!("d={d}: Z_d·x^(d²)/f_d = x^(d²)/f_d²"),
            class2_series(d, n)?,
            form(d * d, &[(d, 1), (d, 1)]).to_series(n)?,
        );
    }
    out.note("formal comparisons omit the common factor s(C(d,2)), a polynomial in p");
    Ok(out)
}

/// `Σ_d Z_{Z^d}·x^{d²}/f_d = Σπ(n)xⁿ = 1 + Σ π^(0)(n)xⁿ`.
pub fn thm7_15(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let mut lhs = TruncatedSeries::zero(n);
    let mut d = 0;
    while d * d <= n {
        lhs = lhs.add(&class2_series(d, n)?);
        d += 1;
    }
    let via_19 = count_series(n, |m| count_more_parts(m, 0)).add(&TruncatedSeries::one(n));
    out.numeric(&lhs, &partition_series(n));
    out.series("Σ_d Z_d·x^(d²)/f_d = Σπ(n)xⁿ", lhs.clone(), partition_series(n));
    out.series("Σ_d Z_d·x^(d²)/f_d = 1 + Σ π^(0)(n)xⁿ", lhs, via_19);
    Ok(out)
}

/// The rank-2 class-2 mass from the normal zeta function of the free
/// class-2 group against its closed form.
pub fn cor9_18(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    let closed = class2_rank2_mass_closed_form();
    out.symbolic("bridge solved against ζ at z=2 = closed form", class2_rank2_mass_from_zeta()?, closed.clone());
    for &p in ctx.primes() {
        let zeta = ZetaSpec::normal_class2(p, 2).value()?;
        let cyclic = cyclic_mass_symbolic().evaluate(&at(p))?;
        out.exact(
            format!("p={p}: solved mass = closed form"),
            solve_top_mass(2, p, &zeta, &[cyclic])?,
            closed.evaluate(&at(p))?,
        );
    }
    out.exact("closed form at p=2 = 124/135", closed.evaluate(&at(2))?, exact::ratio(124, 135));
    Ok(out)
}

/// Abelian masses by rank through the bridge give the lattice zeta at `z = d`.
pub fn prop13_abelian(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    for d in ctx.ints("d") {
        let masses: Vec<_> = (1..=d).map(abelian_rank_mass_symbolic).collect();
        out.symbolic(
            format!("d={d}: bridge = ζ_(Z^d)(d)"),
            prop13_mass_bridge_symbolic(d, &masses)?,
            ZetaSpec::lattice(d, 2, d as i64).symbolic()?,
        );
        for &p in ctx.primes() {
            let values = masses.iter().map(|m| m.evaluate(&at(p))).collect::<Result<Vec<_>>>()?;
            out.exact(
                format!("d={d}, p={p}"),
                prop13_mass_bridge(d, p, &values)?,
                ZetaSpec::lattice(d, p, d as i64).value()?,
            );
        }
    }
    Ok(out)
}

/// Sublattice counts against Hermite normal forms, and `Σ a_n p^{−dn} = 1/f_d`.
pub fn zeta_20(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for d in ctx.ints("d") {
        if d <= 3 {
            for &p in ctx.primes() {
                for k in 0..=4 {
                    let oracle = oracle_hnf_sublattice_count(d, p, k)?;
                    out.exact(
                        format!("a_(p^{k})(Z^{d}) at p={p}"),
                        exact::from_biguint(&sublattice_count(d, p, k)),
                        Rational::from_integer(oracle.into()),
                    );
                }
            }
        }
        out.series(format!("d={d}: Σ a_n x^(dn) = 1/f_d"), lattice_zeta_series(d, n), inverse_pochhammer_f(d, n));
    }
    out.note("the stated zeta product is the reciprocal of the sublattice generating function checked here");
    Ok(out)
}

/// `s(n)` against counted subspaces, and `deg s(n) = ⌊n²/4⌋`.
pub fn s_degree(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    for m in ctx.ints("n") {
        let degree = elementary_subgroup_poly(m).degree().unwrap_or(0);
        out.exact(
            format!("deg s({m}) = ⌊n²/4⌋"),
            exact::int(degree as i64),
            exact::int((m * m / 4) as i64),
        );
        if m <= 4 {
            for &p in ctx.primes() {
                out.exact(
                    format!("s({m}) at p={p} = subspace count"),
                    exact::from_biguint(&elementary_subgroup_count(m, p)),
                    Rational::from_integer(oracle_subspace_count(m, p)?.into()),
                );
            }
        }
    }
    Ok(out)
}
