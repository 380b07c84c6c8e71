//! Hall's identity and its refinements by rank, Durfee square, capability
//! and rectangle families.

use super::sums::{aut_sweep, count_series, form, group_series, nominal, weight_series};
use super::{Ctx, Outcome};
use crate::abelian::{aut_form, aut_reciprocal_series, hall_family_series, rect_family_series};
use crate::error::Result;
use crate::exact::Rational;
use crate::oracles::oracle_partition_counts;
use crate::partitions::{count_exact_parts, enumerate_partitions, partition_counts};
use crate::qseries::{partition_series, pochhammer_f, TruncatedSeries};

/// `Σ_G 1/|G| = Σ_G 1/|Aut(G)|`, with the group side counted by the
/// enumeration oracle.
pub fn hall_5(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let counts = oracle_partition_counts(n)?;
    let lhs = TruncatedSeries::from_coeffs(n, counts.iter().map(|&c| Rational::from_integer(c.into())));
    let rhs = aut_sweep(n, 0, |_| true);
    out.numeric(&lhs, &rhs);
    out.series("Σ x^|G| = Σ 1/|Aut G|", lhs, rhs);
    Ok(out)
}

/// `Σ_G 1/|Aut(G)| = Σ π(n)xⁿ`, against both the product and the
/// partition-count recurrence.
pub fn hall_6(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let lhs = aut_sweep(n, 0, |_| true);
    let rhs = partition_series(n);
    out.numeric(&lhs, &rhs);
    out.series("Σ 1/|Aut G| = Π 1/(1 − x^j)", lhs.clone(), rhs);
    out.series("Σ 1/|Aut G| = Σ π(n)xⁿ", lhs, count_series(n, |m| partition_counts(m).swap_remove(m)));
    Ok(out)
}

/// For each `m`: partitions with largest part `m`, partitions into exactly
/// `m` parts, and `Σ_{|G| = p^m} 1/|Aut(G)|` agree.
pub fn hall_7(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for m in ctx.ints("n") {
        let largest = weight_series(n, |l| l.largest() == m);
        let exact_parts = count_series(n, |k| count_exact_parts(k, m));
        let aut = enumerate_partitions(m)
            .iter()
            .fold(TruncatedSeries::zero(n), |acc, l| acc.add(&aut_reciprocal_series(l, n)));
        out.series(format!("n={m}: largest part n = exactly n parts"), largest.clone(), exact_parts);
        out.series(format!("n={m}: largest part n = Σ_{{|G|=p^n}} 1/|Aut G|"), largest, aut);
    }
    Ok(out)
}

/// `Σ_{H ∈ S_G} 1/|H| = 1/|Aut(G)|`, the family swept by enumeration.
pub fn hall_8(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for lambda in ctx.partitions("lambda") {
        let lhs = hall_family_series(&lambda, n);
        let rhs = aut_reciprocal_series(&lambda, n);
        out.numeric(&lhs, &rhs);
        out.series(format!("λ=({lambda})"), lhs, rhs);
    }
    Ok(out)
}

/// `Σ_{rank G = r} 1/|Aut(G)| = x^{r²}/f_r²`.
pub fn eq9(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for r in ctx.ints("n") {
        let lhs = aut_sweep(n, 0, |l| l.len() == r);
        let rhs = form(r * r, &[(r, 1), (r, 1)]).to_series(n)?;
        out.series(format!("rank {r}"), lhs, rhs);
    }
    Ok(out)
}

/// `Σ_{G ∈ Y_{p,r}} 1/|G| = x^{r²}/f_r² = Σ_{rank G = r} 1/|Aut(G)|`.
pub fn eq9_y(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for r in ctx.ints("n") {
        let y = group_series(n, |g| g.in_y(r));
        let closed = form(r * r, &[(r, 1), (r, 1)]).to_series(n)?;
        let rank = aut_sweep(n, 0, |l| l.len() == r);
        out.series(format!("Y_{r}: Σ 1/|G| = x^{{r²}}/f_r²"), y.clone(), closed);
        out.series(format!("Y_{r}: Σ 1/|G| = Σ_{{rank r}} 1/|Aut G|"), y, rank);
    }
    Ok(out)
}

/// Capable groups: `Σ 1/|G| = (1 − x)Σπ(n)xⁿ = Σ 1/|Hol(G)|`.
pub fn thm3_10(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let capable = group_series(n, |g| g.is_capable());
    let middle = partition_series(n).mul(&pochhammer_f(1, n));
    let hol = aut_sweep(n, 1, |_| true);
    out.numeric(&capable, &middle);
    out.series("Σ_capable 1/|G| = (1 − x)Σπ(n)xⁿ", capable, middle.clone());
    out.series("(1 − x)Σπ(n)xⁿ = Σ 1/|Hol G|", middle, hol);
    Ok(out)
}

/// `Σ_{A_{k+1}} 1/|G| = Σ_{B_{k+1}} 1/|G| = Σ |G|^{−k}/|Aut G| = f_k·Σπ(n)xⁿ`.
pub fn thm4_11(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for k in ctx.ints("k") {
        let a = group_series(n, |g| g.in_a(k + 1));
        let b = group_series(n, |g| g.in_b(k + 1));
        let weighted = aut_sweep(n, k, |_| true);
        let product = partition_series(n).mul(&pochhammer_f(k, n));
        out.series(format!("k={k}: A_{{k+1}} = B_{{k+1}}"), a.clone(), b);
        out.series(format!("k={k}: A_{{k+1}} = Σ |G|^-k/|Aut G|"), a.clone(), weighted);
        out.series(format!("k={k}: A_{{k+1}} = f_k·Σπ(n)xⁿ"), a, product);
    }
    Ok(out)
}

/// `Σ_{G ∈ A_{k+1}, λ_1 = m} 1/|G| = Σ_{|G| = p^m} |G|^{−k}/|Aut(G)|`.
pub fn eq12(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for k in ctx.ints("k") {
        for m in ctx.ints("n") {
            let lhs = group_series(n, |g| g.in_a(k + 1) && g.lambda().largest() == m);
            let rhs = aut_sweep(n, k, |l| l.weight() == m);
            out.series(format!("k={k}, n={m}"), lhs, rhs);
        }
    }
    Ok(out)
}

/// `|G|^k/|Aut(G)| = Σ_{H ∈ S^G} 1/|H|` for `G ∈ A_{k+1}`.
pub fn sg_rect(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let mut skipped = 0usize;
    for k in ctx.ints("k") {
        for lambda in ctx.partitions("lambda") {
            if !nominal(&lambda).in_a(k + 1) {
                skipped += 1;
                continue;
            }
            let lhs = rect_family_series(&lambda, k, n);
            let shift = (k * lambda.weight()) as i64;
            let rhs = aut_form(&lambda).shifted(-shift).to_series(n)?;
            out.series(format!("k={k}, λ=({lambda})"), lhs, rhs);
        }
    }
    if skipped > 0 {
        out.note(format!("{skipped} (k, λ) pairs outside A_{{k+1}} skipped"));
    }
    Ok(out)
}
