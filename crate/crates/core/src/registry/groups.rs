//! Checks against groups built from their multiplication tables.

use super::sums::reciprocal;
use super::{Ctx, Outcome};
use crate::abelian::{aut_order_of, AbelianPGroup};
use crate::error::Result;
use crate::exact;
use crate::oracles::{check_cover, covering_registry, oracle_aut_order_abelian, oracle_cayley_aut_count};
use crate::partitions::{enumerate_partitions, Partition};

/// Names accepted by the `case` parameter, in registry order.
pub const COVERING_CASES: &[&str] = &["klein_four", "c3xc3", "c4", "c9"];

/// `Σ 1/|Aut(H_i)| = 1/|Aut(G)|` over the covering groups `H_i`, with every
/// automorphism group counted from the tables.
pub fn thm1_covering(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    let wanted = ctx.choices("case");
    for case in covering_registry()? {
        if !wanted.contains(&case.name) {
            continue;
        }
        let mut lhs = exact::int(0);
        for cover in &case.covers {
            let check = check_cover(&case.base, cover)?;
            out.holds(format!("{}: {} covers {} with central kernel in H'", case.name, cover.name, case.base_name), check.holds());
            lhs += exact::int(oracle_cayley_aut_count(&cover.group)? as i64).recip();
        }
        let base = exact::int(oracle_cayley_aut_count(&case.base)? as i64).recip();
        out.exact(format!("{}: Σ 1/|Aut(H_i)| = 1/|Aut({})|", case.name, case.base_name), lhs, base.clone());
        if let Some((p, parts)) = case.abelian {
            let lambda = Partition::new(parts.to_vec())?;
            out.exact(
                format!("{}: table count = Pochhammer form", case.name),
                base,
                reciprocal(&aut_order_of(p, &lambda)),
            );
        }
        out.note(format!("{}: {}", case.name, case.note));
    }
    Ok(out)
}

/// Largest `|G|` swept per prime.
pub const AUT35_ORDER_LIMIT: u64 = 81;

/// The closed automorphism count against the endomorphism oracle for every
/// abelian `p`-group of order at most [`AUT35_ORDER_LIMIT`].
pub fn aut_35(ctx: &Ctx) -> Result<Outcome> {
    let mut out = Outcome::default();
    for &p in ctx.primes() {
        let mut w = 0;
        while p.pow(w as u32 + 1) <= AUT35_ORDER_LIMIT {
            w += 1;
        }
        for weight in 0..=w {
            for lambda in enumerate_partitions(weight) {
                let g = AbelianPGroup::new(p, lambda.clone())?;
                out.exact(
                    format!("p={p}, λ=({lambda})"),
                    exact::from_biguint(&aut_order_of(p, &lambda)),
                    exact::from_biguint(&oracle_aut_order_abelian(&g)?),
                );
            }
        }
    }
    Ok(out)
}
