//! Automorphism counts of `⊕ Z/p^{λ_i}` from the group law alone.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::abelian::AbelianPGroup;
use crate::error::{Error, Result};

/// Largest `|G|` the abelian oracles accept.
pub const ABELIAN_ORDER_BUDGET: u64 = 256;
/// Largest number of homomorphisms the direct enumeration will try.
pub const DIRECT_TUPLE_BUDGET: u64 = 1 << 22;

type Bits = [u64; 4];

/// Elements are mixed-radix indices over the moduli `p^{λ_i}`.
struct Model {
    moduli: Vec<usize>,
    size: usize,
    add: Vec<Vec<u16>>,
    order: Vec<usize>,
}

impl Model {
    fn new(g: &AbelianPGroup) -> Result<Self> {
        let size = g.order();
        if size > BigUint::from(ABELIAN_ORDER_BUDGET) {
            return Err(Error::BudgetExceeded(format!(
                "|G| = {size} exceeds the oracle budget {ABELIAN_ORDER_BUDGET}"
            )));
        }
        let size: usize = size.try_into().expect("within budget");
        let moduli: Vec<usize> = g
            .lambda()
            .parts()
            .iter()
            .map(|&l| (g.prime() as usize).pow(l as u32))
            .collect();
        let coords: Vec<Vec<usize>> = (0..size).map(|i| Self::decode(&moduli, i)).collect();
        let encode = |c: &[usize]| c.iter().zip(&moduli).rev().fold(0, |acc, (&x, &m)| acc * m + x);
        let add = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let sum: Vec<usize> = coords[a]
                            .iter()
                            .zip(&coords[b])
                            .zip(&moduli)
                            .map(|((x, y), m)| (x + y) % m)
                            .collect();
                        encode(&sum) as u16
                    })
                    .collect()
            })
            .collect();
        let mut model = Model {
            moduli,
            size,
            add,
            order: Vec::new(),
        };
        model.order = (0..size).map(|a| model.element_order(a)).collect();
        Ok(model)
    }

    fn decode(moduli: &[usize], mut i: usize) -> Vec<usize> {
        moduli
            .iter()
            .map(|&m| {
                let c = i % m;
                i /= m;
                c
            })
            .collect()
    }

    fn element_order(&self, a: usize) -> usize {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = self.add[x][a] as usize;
            k += 1;
        }
        k
    }
}

fn insert(bits: &mut Bits, a: usize) {
    bits[a / 64] |= 1 << (a % 64);
}

fn members(bits: &Bits, size: usize) -> impl Iterator<Item = usize> + '_ {
    (0..size).filter(move |&a| bits[a / 64] >> (a % 64) & 1 == 1)
}

fn count_ones(bits: &Bits) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

/// `|Aut(G)|`, counting tuples of generator images `(h_1, …, h_r)` with
/// `ord(h_j) | p^{λ_j}` whose span is all of `G`. Such a tuple defines an
/// endomorphism, and it is bijective exactly when each `h_j` enlarges the
/// span by the full factor `p^{λ_j}`. Partial spans are memoised per level.
pub fn oracle_aut_order_abelian(g: &AbelianPGroup) -> Result<BigUint> {
    let model = Model::new(g)?;
    let mut memo: HashMap<(usize, Bits), u128> = HashMap::new();
    let mut start = [0u64; 4];
    insert(&mut start, 0);
    Ok(BigUint::from(count_from(&model, 0, start, &mut memo)))
}

fn count_from(model: &Model, level: usize, span: Bits, memo: &mut HashMap<(usize, Bits), u128>) -> u128 {
    if level == model.moduli.len() {
        return 1;
    }
    if let Some(&c) = memo.get(&(level, span)) {
        return c;
    }
    let m = model.moduli[level];
    let target = count_ones(&span) * m;
    let mut total = 0u128;
    for h in 0..model.size {
        if !m.is_multiple_of(model.order[h]) {
            continue;
        }
        let mut next = span;
        for s in members(&span, model.size) {
            let mut x = s;
            for _ in 1..model.order[h] {
                x = model.add[x][h] as usize;
                insert(&mut next, x);
            }
        }
        if count_ones(&next) == target {
            total += count_from(model, level + 1, next, memo);
        }
    }
    memo.insert((level, span), total);
    total
}

/// `|Aut(G)|` by enumerating every homomorphism given by generator images
/// and applying it to all elements to test bijectivity.
pub fn oracle_aut_order_abelian_direct(g: &AbelianPGroup) -> Result<u64> {
    let model = Model::new(g)?;
    let choices: Vec<Vec<usize>> = model
        .moduli
        .iter()
        .map(|&m| (0..model.size).filter(|&h| m % model.order[h] == 0).collect())
        .collect();
    let tuples: u64 = choices.iter().map(|c| c.len() as u64).product();
    if tuples > DIRECT_TUPLE_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{tuples} homomorphisms exceed the direct budget {DIRECT_TUPLE_BUDGET}"
        )));
    }
    let coords: Vec<Vec<usize>> = (0..model.size).map(|i| Model::decode(&model.moduli, i)).collect();
    let r = model.moduli.len();
    let mut pick = vec![0usize; r];
    let mut count = 0u64;
    let mut hit = vec![false; model.size];
    'tuples: loop {
        hit.iter_mut().for_each(|b| *b = false);
        let mut bijective = true;
        for c in &coords {
            let mut v = 0usize;
            for (j, &cj) in c.iter().enumerate() {
                let h = choices[j][pick[j]];
                for _ in 0..cj {
                    v = model.add[v][h] as usize;
                }
            }
            if hit[v] {
                bijective = false;
                break;
            }
            hit[v] = true;
        }
        if bijective {
            count += 1;
        }
        for j in 0..r {
            pick[j] += 1;
            if pick[j] < choices[j].len() {
                continue 'tuples;
            }
            pick[j] = 0;
        }
        break;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn g(p: u64, parts: &[usize]) -> AbelianPGroup {
        AbelianPGroup::new(p, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(oracle_aut_order_abelian(&g(2, &[1, 1])).unwrap(), BigUint::from(6u32));
        assert_eq!(oracle_aut_order_abelian(&g(3, &[2])).unwrap(), BigUint::from(6u32));
        assert_eq!(oracle_aut_order_abelian(&g(2, &[2, 1])).unwrap(), BigUint::from(8u32));
        assert_eq!(oracle_aut_order_abelian(&g(5, &[])).unwrap(), BigUint::from(1u32));
        assert_eq!(
            oracle_aut_order_abelian(&g(2, &[3, 3])).unwrap(),
            g(2, &[3, 3]).aut_order()
        );
    }

    #[test]
    fn direct_agrees_on_small_groups() {
        for parts in [&[1usize, 1][..], &[2, 1], &[1, 1, 1], &[3, 1], &[2, 2]] {
            let grp = g(2, parts);
            assert_eq!(
                BigUint::from(oracle_aut_order_abelian_direct(&grp).unwrap()),
                oracle_aut_order_abelian(&grp).unwrap(),
                "{parts:?}"
            );
        }
        assert_eq!(oracle_aut_order_abelian_direct(&g(3, &[1, 1])).unwrap(), 48);
    }

    #[test]
    fn budgets() {
        assert!(matches!(oracle_aut_order_abelian(&g(2, &[9, 9])), Err(Error::BudgetExceeded(_))));
        assert!(matches!(
            oracle_aut_order_abelian_direct(&g(2, &[1; 6])),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
