//! Sums over isoclinism families: each family contributes a reciprocal
//! classical order times the abelian mass `A = Σ 1/|Aut(G)|`, and the total
//! reduces to a Rogers–Ramanujan product at `x` or `x²`.
//!
//! Left-hand sides take `A` from Hall's automorphism sweep, right-hand
//! sides from the partition product.

use super::sums::{aut_sweep, form, geometric, one, reciprocal, rr_product};
use super::{Ctx, Outcome};
use crate::counting::lattice_zeta_series;
use crate::error::Result;
use crate::exact;
use crate::orders::GroupOrderSpec;
use crate::qseries::{partition_series, SeriesForm, TruncatedSeries};

fn abelian_mass(n: usize) -> (TruncatedSeries, TruncatedSeries) {
    (aut_sweep(n, 0, |_| true), partition_series(n))
}

/// `Z_{Z^d}·x^{rs}/|GL(s)|` with `d = r + s`: the lattice zeta series
/// times the shifted general linear form.
fn lattice_piece(r: usize, s: usize, n: usize) -> Result<TruncatedSeries> {
    let gl = if s == 0 {
        SeriesForm::monomial(0)
    } else {
        GroupOrderSpec::gl(s, 2)?.reciprocal_form()
    };
    Ok(lattice_zeta_series(r + s, n).mul(&gl.shifted((r * s) as i64).to_series(n)?))
}

pub fn thm5_36_37(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for d in ctx.ints("d") {
        for s in ctx.ints_within("s", 0..=d) {
            let lhs = lattice_piece(d - s, s, n)?;
            let rhs = form(d * s, &[(d, 1), (s, 1)]).to_series(n)?;
            out.series(format!("d={d}, s={s}"), lhs, rhs);
        }
    }
    Ok(out)
}

/// `Σ_{s≥0} Z_{Z^{r+s}}·x^{rs}/|GL(s)| = Σ π(n)xⁿ` for each fixed `r`.
pub fn thm5_13_sum(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for r in ctx.ints("r") {
        let mut lhs = TruncatedSeries::zero(n);
        let mut s = 0;
        while s * (s + r) <= n {
            lhs = lhs.add(&lattice_piece(r, s, n)?);
            s += 1;
        }
        let rhs = partition_series(n);
        out.numeric(&lhs, &rhs);
        out.series(format!("r={r}"), lhs, rhs);
    }
    Ok(out)
}

/// `(x/(1 − x))·x^{2r²}/f_r(x²)`, the stated form of `p^r/|GSp(2r,p)|`.
fn gsp_stated(r: usize) -> SeriesForm {
    form(2 * r * r + 1, &[(1, 1), (r, 2)])
}

pub fn thm14_38(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for r in ctx.ints("r") {
        for &p in ctx.primes() {
            let spec = GroupOrderSpec::gsp(r, p)?;
            let lhs = exact::from_biguint(&exact::big_pow(p, r as u32)) * reciprocal(&spec.order()?);
            let rhs = gsp_stated(r).evaluate(&exact::ratio(1, p as i64))?;
            out.exact(format!("p^r/|GSp({},{p})|", 2 * r), lhs, rhs);
        }
        let lhs = GroupOrderSpec::gsp(r, 2)?.reciprocal_form().shifted(-(r as i64)).to_series(n)?;
        out.series(format!("r={r}: x^-r·GSp form = stated form"), lhs, gsp_stated(r).to_series(n)?);
    }
    Ok(out)
}

/// `Σ_{r≥1} x^{±r}/|GSp(2r)|`; `sign = −1` gives the `|G:Z|^{1/2}` weights.
fn gsp_sum(n: usize, sign: i64) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(n);
    let mut r = 1usize;
    while (2 * r * r + 1) as i64 + (1 + sign) * r as i64 <= n as i64 {
        let f = GroupOrderSpec::gsp(r, 2)?.reciprocal_form().shifted(sign * r as i64);
        s = s.add(&f.to_series(n)?);
        r += 1;
    }
    Ok(s)
}

/// `A·Σ_r p^r/|GSp(2r,p)| = A·(x/(1 − x))·(Π_{±1 mod 5}(x²) − 1)`.
pub fn thm14_28(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let (a_lhs, a_rhs) = abelian_mass(n);
    let lhs = a_lhs.mul(&gsp_sum(n, -1)?);
    let rhs = a_rhs.mul(&geometric(n, 1)).mul(&rr_product(n, 1, 2).sub(&one(n)));
    out.numeric(&lhs, &rhs);
    out.series("A·Σ p^r/|GSp(2r,p)| = A·x/(1−x)·(Π_{±1}(x²) − 1)", lhs, rhs);
    Ok(out)
}

/// `A·Σ_r p^{−r}/|GSp(2r,p)| = A·(x/(1 − x))·(Π_{±2 mod 5}(x²) − 1)`.
pub fn thm14_29(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let (a_lhs, a_rhs) = abelian_mass(n);
    let lhs = a_lhs.mul(&gsp_sum(n, 1)?);
    let rhs = a_rhs.mul(&geometric(n, 1)).mul(&rr_product(n, 2, 2).sub(&one(n)));
    out.numeric(&lhs, &rhs);
    out.series("A·Σ p^-r/|GSp(2r,p)| = A·x/(1−x)·(Π_{±2}(x²) − 1)", lhs, rhs);
    Ok(out)
}

/// `Σ_{d≥lo} x^{d² + c·d}/f_d`.
fn gl_tail(n: usize, lo: usize, c: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(n);
    let mut d = lo;
    while d * d + c * d <= n {
        s = s.add(&form(d * d + c * d, &[(d, 1)]).to_series(n).expect("nonnegative exponent"));
        d += 1;
    }
    s
}

/// Per-term check `num(d, p)/|G(d, p)| = x^{e}/… at 1/p`.
fn per_family(
    out: &mut Outcome,
    ctx: &Ctx,
    ds: std::ops::RangeInclusive<usize>,
    label: &str,
    spec: fn(usize, u64) -> Result<GroupOrderSpec>,
    weight: fn(usize) -> i64,
    stated: fn(usize) -> SeriesForm,
) -> Result<()> {
    for d in ds {
        for &p in ctx.primes() {
            let x = exact::ratio(1, p as i64);
            let lhs = exact::pow(&x, -weight(d)) * reciprocal(&spec(d, p)?.order()?);
            out.exact(format!("{label}, d={d}, p={p}"), lhs, stated(d).evaluate(&x)?);
        }
    }
    Ok(())
}

/// `A + A·Σ_{d≥2} 1/|GL(d,p)| = A·(Π_{±1 mod 5} − x/(1 − x))`.
pub fn thm15_30(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    per_family(&mut out, ctx, 2..=4, "1/|GL(d,p)| = x^{d²}/f_d", GroupOrderSpec::gl, |_| 0, |d| form(d * d, &[(d, 1)]))?;
    let (a_lhs, a_rhs) = abelian_mass(n);
    let lhs = a_lhs.add(&a_lhs.mul(&gl_tail(n, 2, 0)));
    let rhs = a_rhs.mul(&rr_product(n, 1, 1).sub(&geometric(n, 1)));
    out.numeric(&lhs, &rhs);
    out.series("A(1 + Σ_{d≥2} x^{d²}/f_d) = A(Π_{±1} − x/(1−x))", lhs, rhs);
    Ok(out)
}

/// `p^{d+1}/|Aut(A_d)| = x^{d²−d}/((1 − x)f_{d−1})`.
fn aut_a_term(d: usize) -> SeriesForm {
    form(d * d - d, &[(1, 1), (d - 1, 1)])
}

/// `Σ_{d≥1} x^{d²−d}/((1 − x)f_{d−1})` through degree `n`.
fn aut_a_sum(n: usize, from: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(n);
    let mut d = from;
    while d * d - d <= n {
        s = s.add(&aut_a_term(d).to_series(n)?);
        d += 1;
    }
    Ok(s)
}

/// Families `T^d` with `G/Z(G) ≅ A_d`, weighted by `1/|Out(G)|`. The
/// stated right-hand side holds when the `d = 1` family uses the same
/// per-family term as `d ≥ 2`; counting it as the abelian groups it is
/// gives a different sum.
pub fn thm16_31(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for d in 1..=4 {
        for &p in ctx.primes() {
            let x = exact::ratio(1, p as i64);
            let lhs = exact::pow(&x, -((d + 1) as i64)) * reciprocal(&GroupOrderSpec::aut_a(d, p)?.order()?);
            out.finding_exact(
                "per-family",
                format!("p^(d+1)/|Aut(A_{d})| = x^(d²−d)/((1−x)f_(d−1)) at p={p}"),
                lhs,
                aut_a_term(d).evaluate(&x)?,
                "",
            );
        }
    }
    let (a_lhs, a_rhs) = abelian_mass(n);
    let stated = a_rhs.mul(&rr_product(n, 2, 1)).mul(&geometric(n, 0));
    let uniform = a_lhs.mul(&aut_a_sum(n, 1)?);
    out.finding_series(
        "uniform",
        "A·Σ_{d≥1} p^(d+1)/|Aut(A_d)| = stated A·Π_{±2}/(1−x)",
        uniform,
        stated.clone(),
        "the d = 1 term is p²/|Aut(C_p²)| = 1/(1−x)",
    );
    let abelian = a_lhs.add(&a_lhs.mul(&aut_a_sum(n, 2)?));
    out.finding_series(
        "abelian",
        "A + A·Σ_{d≥2} p^(d+1)/|Aut(A_d)| = stated A·Π_{±2}/(1−x)",
        abelian.clone(),
        stated.clone(),
        "the d = 1 family is the abelian groups, contributing A",
    );
    out.finding_series(
        "abelian",
        "A + A·Σ_{d≥2} p^(d+1)/|Aut(A_d)| = A·(Π_{±2} − x)/(1−x)",
        abelian,
        a_rhs.mul(&rr_product(n, 2, 1).sub(&TruncatedSeries::monomial(n, 1, exact::one()))).mul(&geometric(n, 0)),
        "the gap to the stated form is exactly A·x/(1−x)",
    );
    Ok(out)
}

/// `x^{e²}/((1 − x)f_e)` for `e = d − 1`: the family term of the
/// `|G:Z(G)|/|Out(G)|` sum multiplied by `x²`.
fn aut_a_weighted_term(e: usize) -> SeriesForm {
    form(e * e, &[(1, 1), (e, 1)])
}

/// As [`thm16_31`] with weights `|G:Z(G)|`; both sides are multiplied by
/// `x²` so every term is a power series.
pub fn thm16_32(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for d in 1..=4 {
        for &p in ctx.primes() {
            let x = exact::ratio(1, p as i64);
            let lhs = exact::pow(&x, -(2 * (d + 1) as i64)) * reciprocal(&GroupOrderSpec::aut_a(d, p)?.order()?);
            let e = d - 1;
            let rhs = aut_a_weighted_term(e).shifted(-2).evaluate(&x)?;
            out.finding_exact(
                "per-family",
                format!("p^(2d+2)/|Aut(A_{d})| = x^((d−1)²−2)/((1−x)f_(d−1)) at p={p}"),
                lhs,
                rhs,
                "",
            );
        }
    }
    let (a_lhs, a_rhs) = abelian_mass(n);
    let sum_from = |lo: usize| -> Result<TruncatedSeries> {
        let mut s = TruncatedSeries::zero(n);
        let mut e = lo;
        while e * e <= n {
            s = s.add(&aut_a_weighted_term(e).to_series(n)?);
            e += 1;
        }
        Ok(s)
    };
    let stated = a_rhs.mul(&rr_product(n, 1, 1)).mul(&geometric(n, 0));
    out.finding_series(
        "uniform",
        "x²·A·Σ_{d≥1} p^(2d+2)/|Aut(A_d)| = x²·stated A·p³/(p−1)·Π_{±1}",
        a_lhs.mul(&sum_from(0)?),
        stated.clone(),
        "the d = 1 term is p⁴/|Aut(C_p²)|",
    );
    let abelian = a_lhs.shift(2).add(&a_lhs.mul(&sum_from(1)?));
    out.finding_series(
        "abelian",
        "x²·(A + A·Σ_{d≥2} p^(2d+2)/|Aut(A_d)|) = x²·stated A·p³/(p−1)·Π_{±1}",
        abelian.clone(),
        stated,
        "the d = 1 family is the abelian groups, contributing A",
    );
    out.finding_series(
        "abelian",
        "x²·(A + A·Σ_{d≥2} …) = A·x² + A·(Π_{±1} − 1)/(1−x)",
        abelian,
        a_rhs.shift(2).add(&a_rhs.mul(&rr_product(n, 1, 1).sub(&one(n))).mul(&geometric(n, 0))),
        "",
    );
    Ok(out)
}

/// `p^{d²−d}/|Aut(H_d)| = x^{d²+d}/f_d` and `|Aut(H_d)| = p^{d²}|GL(d,p)|`.
fn aut_h_checks(out: &mut Outcome, ctx: &Ctx) -> Result<()> {
    for d in 1..=4 {
        for &p in ctx.primes() {
            let aut_h = GroupOrderSpec::aut_h(d, p)?.order()?;
            let gl = GroupOrderSpec::gl(d, p)?.order()?;
            out.exact(
                format!("|Aut(H_{d})| = p^(d²)|GL({d},{p})|"),
                exact::from_biguint(&aut_h),
                exact::from_biguint(&(exact::big_pow(p, (d * d) as u32) * gl)),
            );
        }
    }
    Ok(())
}

/// `A(1 + Σ_{d≥2} |G'|/|Aut|) = A(Π_{±2 mod 5} − x²/(1 − x))`.
pub fn thm17_33(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    aut_h_checks(&mut out, ctx)?;
    per_family(
        &mut out,
        ctx,
        1..=4,
        "p^(d²−d)/|Aut(H_d)| = x^(d²+d)/f_d",
        GroupOrderSpec::aut_h,
        |d| (d * d - d) as i64,
        |d| form(d * d + d, &[(d, 1)]),
    )?;
    let (a_lhs, a_rhs) = abelian_mass(n);
    let lhs = a_lhs.add(&a_lhs.mul(&gl_tail(n, 2, 1)));
    let rhs = a_rhs.mul(&rr_product(n, 2, 1).sub(&geometric(n, 2)));
    out.numeric(&lhs, &rhs);
    out.series("A(1 + Σ_{d≥2} x^{d²+d}/f_d) = A(Π_{±2} − x²/(1−x))", lhs, rhs);
    Ok(out)
}

/// `A(1 + Σ_{d≥2} |G'||G:Z|^{1/2}/|Aut|) = A(Π_{±1 mod 5} − x/(1 − x))`.
pub fn thm17_34(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    aut_h_checks(&mut out, ctx)?;
    per_family(
        &mut out,
        ctx,
        1..=4,
        "p^(d²)/|Aut(H_d)| = x^(d²)/f_d",
        GroupOrderSpec::aut_h,
        |d| (d * d) as i64,
        |d| form(d * d, &[(d, 1)]),
    )?;
    let (a_lhs, a_rhs) = abelian_mass(n);
    let lhs = a_lhs.add(&a_lhs.mul(&gl_tail(n, 2, 0)));
    let rhs = a_rhs.mul(&rr_product(n, 1, 1).sub(&geometric(n, 1)));
    out.numeric(&lhs, &rhs);
    out.series("A(1 + Σ_{d≥2} x^{d²}/f_d) = A(Π_{±1} − x/(1−x))", lhs, rhs);
    Ok(out)
}
