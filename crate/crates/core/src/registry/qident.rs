//! Rogers–Ramanujan, Andrews–Gordon and the partition counts `π_r`, `π^(r)`.

use super::sums::{count_series, form, rr_product, rr_sum};
use super::{Ctx, Outcome};
use crate::error::Result;
use crate::oracles::oracle_partitions;
use crate::partitions::{count_at_most_parts, count_more_parts};
use crate::qseries::{inverse_pochhammer_f, product_over_exponents, PochhammerFactor, SeriesForm, TruncatedSeries};

/// `Σ_{s≥1} x^{s(s+r)}/(f_{s+r} f_s) = Σ π^(r)(n)xⁿ`.
pub fn prop12_19(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for r in ctx.ints("r") {
        let mut lhs = TruncatedSeries::zero(n);
        let mut s = 1;
        while s * (s + r) <= n {
            lhs = lhs.add(&form(s * (s + r), &[(s + r, 1), (s, 1)]).to_series(n)?);
            s += 1;
        }
        let rhs = count_series(n, |m| count_more_parts(m, r));
        out.numeric(&lhs, &rhs);
        out.series(format!("r={r}"), lhs, rhs);
    }
    Ok(out)
}

/// `Σ π_r(n)xⁿ = 1/f_r`, with `π_r` both from the recurrence and from
/// enumerating partitions.
pub fn pi_r_gf(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    let enumerated: Vec<Vec<Vec<usize>>> = (0..=n).map(oracle_partitions).collect::<Result<_>>()?;
    for r in ctx.ints("r") {
        let rhs = inverse_pochhammer_f(r, n);
        let counted = count_series(n, |m| count_at_most_parts(m, r));
        let listed = count_series(n, |m| enumerated[m].iter().filter(|l| l.len() <= r).count().into());
        out.series(format!("r={r}: recurrence"), counted, rhs.clone());
        out.series(format!("r={r}: enumeration"), listed, rhs);
    }
    Ok(out)
}

pub fn rr_21(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    let lhs = rr_sum(ctx.n, 0, 1);
    let rhs = rr_product(ctx.n, 1, 1);
    out.numeric(&lhs, &rhs);
    out.series("Σ x^{k²}/f_k = Π_{j≡±1 (5)} 1/(1 − x^j)", lhs, rhs);
    Ok(out)
}

pub fn rr_22(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    let lhs = rr_sum(ctx.n, 1, 1);
    let rhs = rr_product(ctx.n, 2, 1);
    out.numeric(&lhs, &rhs);
    out.series("Σ x^{k²+k}/f_k = Π_{j≡±2 (5)} 1/(1 − x^j)", lhs, rhs);
    Ok(out)
}

/// Visits `k_1 ≥ … ≥ k_r ≥ 0` whose exponent `Σ k_j² + k_i + … + k_r`
/// is at most `n`. Every term is bounded below by its partial exponent, so
/// branches are cut as soon as that exceeds `n`.
fn for_each_ag_tuple(r: usize, i: usize, n: usize, visit: &mut dyn FnMut(&[usize], usize)) {
    fn go(r: usize, i: usize, n: usize, ks: &mut Vec<usize>, e: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        let j = ks.len();
        if j == r {
            visit(ks, e);
            return;
        }
        let cap = ks.last().copied().unwrap_or(n);
        for k in 0..=cap {
            let cost = k * k + if j + 1 >= i { k } else { 0 };
            if e + cost > n {
                break;
            }
            ks.push(k);
            go(r, i, n, ks, e + cost, visit);
            ks.pop();
        }
    }
    go(r, i, n, &mut Vec::with_capacity(r), 0, visit);
}

/// Andrews–Gordon with modulus `2r + 3`.
pub fn ag_23(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let mut out = Outcome::default();
    for r in ctx.ints("r") {
        let all_i = ctx.ints_within("i", 1..=r + 1);
        for i in all_i {
            let mut lhs = TruncatedSeries::zero(n);
            let mut err = None;
            for_each_ag_tuple(r, i, n, &mut |ks, e| {
                let mut f = SeriesForm::monomial(e as i64);
                for j in 0..r {
                    let next = ks.get(j + 1).copied().unwrap_or(0);
                    f = f.over(PochhammerFactor::plain(ks[j] - next));
                }
                match f.to_series(n) {
                    Ok(t) => lhs = lhs.add(&t),
                    Err(e) => err = Some(e),
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            let modulus = 2 * r + 3;
            let rhs = product_over_exponents(
                (1..).filter(move |j| {
                    let m = j % modulus;
                    m != 0 && m != i && m != modulus - i
                }),
                n,
            );
            out.numeric(&lhs, &rhs);
            out.series(format!("r={r}, i={i}"), lhs, rhs);
        }
    }
    out.note("product over j ≢ 0, ±i mod 2r+3");
    Ok(out)
}
