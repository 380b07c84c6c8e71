//! Exhaustive counts over small vector spaces and lattices.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exact;

/// Largest ambient space `p^n` the subspace oracle will enumerate.
pub const SUBSPACE_BUDGET: u64 = 10_000;
/// Largest index `p^k` the HNF oracle will enumerate.
pub const HNF_INDEX_BUDGET: u64 = 1_000;
pub const HNF_MAX_RANK: usize = 3;
/// Largest number of matrices the invertible-matrix count will visit.
pub const MATRIX_BUDGET: u64 = 1 << 20;

fn checked_power(p: u64, n: usize, budget: u64, what: &str) -> Result<u64> {
    if !exact::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let mut size = 1u64;
    for _ in 0..n {
        size = size.saturating_mul(p);
        if size > budget {
            return Err(Error::BudgetExceeded(format!("{what}: {p}^{n} exceeds {budget}")));
        }
    }
    Ok(size)
}

/// Number of subspaces of `F_p^n`, found by closing spans one vector at a
/// time and deduplicating the resulting element sets.
pub fn oracle_subspace_count(n: usize, p: u64) -> Result<u64> {
    let size = checked_power(p, n, SUBSPACE_BUDGET, "subspace oracle")? as usize;
    let p = p as usize;
    let digits = |mut v: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let vectors: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let add = |a: usize, b: usize| -> usize {
        vectors[a]
            .iter()
            .zip(&vectors[b])
            .rev()
            .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    };
    let words = size.div_ceil(64);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut zero = vec![0u64; words];
    zero[0] = 1;
    let mut frontier = vec![zero.clone()];
    seen.insert(zero);
    while let Some(span) = frontier.pop() {
        let inside = |bits: &[u64], a: usize| bits[a / 64] >> (a % 64) & 1 == 1;
        let elems: Vec<usize> = (0..size).filter(|&a| inside(&span, a)).collect();
        for v in 0..size {
            if inside(&span, v) {
                continue;
            }
            let mut next = span.clone();
            let mut multiple = 0usize;
            for _ in 1..p {
                multiple = add(multiple, v);
                for &s in &elems {
                    let t = add(s, multiple);
                    next[t / 64] |= 1 << (t % 64);
                }
            }
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Number of sublattices of index `p^k` in `Z^d`, by listing every upper
/// triangular Hermite normal form with determinant `p^k`: positive diagonal
/// `(p^{e_1}, …, p^{e_d})` and entries above the diagonal in column `j`
/// reduced modulo the diagonal entry of that column.
pub fn oracle_hnf_sublattice_count(d: usize, p: u64, k: usize) -> Result<u64> {
    if d == 0 || d > HNF_MAX_RANK {
        return Err(Error::BudgetExceeded(format!(
            "HNF oracle supports ranks 1..={HNF_MAX_RANK}, got {d}"
        )));
    }
    checked_power(p, k, HNF_INDEX_BUDGET, "HNF oracle")?;
    let mut count = 0u64;
    for_each_exponent_split(d, k, &mut |exps| {
        let diag: Vec<u64> = exps.iter().map(|&e| p.pow(e as u32)).collect();
        let mut slots = Vec::new();
        for (j, &dj) in diag.iter().enumerate() {
            slots.extend(std::iter::repeat_n(dj, j));
        }
        let mut entries = vec![0u64; slots.len()];
        'matrices: loop {
            count += 1;
            for (e, &m) in entries.iter_mut().zip(&slots) {
                *e += 1;
                if *e < m {
                    continue 'matrices;
                }
                *e = 0;
            }
            break;
        }
    });
    Ok(count)
}

fn for_each_exponent_split(d: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(d: usize, left: usize, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if acc.len() + 1 == d {
            acc.push(left);
            visit(acc);
            acc.pop();
            return;
        }
        for e in 0..=left {
            acc.push(e);
            rec(d, left - e, acc, visit);
            acc.pop();
        }
    }
    rec(d, k, &mut Vec::with_capacity(d), visit);
}

/// Number of invertible `k × k` matrices over `F_p`, by row reduction of
/// every matrix.
pub fn oracle_invertible_matrix_count(k: usize, p: u64) -> Result<u64> {
    let total = checked_power(p, k * k, MATRIX_BUDGET, "matrix oracle")?;
    let mut count = 0u64;
    for code in 0..total {
        let mut c = code;
        let mut m: Vec<Vec<u64>> = (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| {
                        let v = c % p;
                        c /= p;
                        v
                    })
                    .collect()
            })
            .collect();
        if full_rank(&mut m, p) {
            count += 1;
        }
    }
    Ok(count)
}

fn full_rank(m: &mut [Vec<u64>], p: u64) -> bool {
    let k = m.len();
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| m[r][col] != 0) else {
            return false;
        };
        m.swap(col, pivot);
        let inv = mod_inverse(m[col][col], p);
        for r in col + 1..k {
            let f = m[r][col] * inv % p;
            let pivot_row = m[col].clone();
            for (x, y) in m[r][col..k].iter_mut().zip(&pivot_row[col..k]) {
                *x = (*x + p * p - f * y % p) % p;
            }
        }
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue mod a prime")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspaces() {
        assert_eq!(oracle_subspace_count(2, 2).unwrap(), 5);
        assert_eq!(oracle_subspace_count(0, 3).unwrap(), 1);
        assert_eq!(oracle_subspace_count(3, 2).unwrap(), 16);
        assert!(oracle_subspace_count(14, 2).is_err());
    }

    #[test]
    fn sublattices() {
        assert_eq!(oracle_hnf_sublattice_count(2, 2, 1).unwrap(), 3);
        assert_eq!(oracle_hnf_sublattice_count(2, 3, 2).unwrap(), 13);
        for k in 0..5 {
            assert_eq!(oracle_hnf_sublattice_count(1, 3, k).unwrap(), 1);
        }
        assert!(oracle_hnf_sublattice_count(4, 2, 1).is_err());
        assert!(oracle_hnf_sublattice_count(2, 2, 10).is_err());
    }

    #[test]
    fn invertible_matrices() {
        assert_eq!(oracle_invertible_matrix_count(1, 5).unwrap(), 4);
        assert_eq!(oracle_invertible_matrix_count(2, 2).unwrap(), 6);
        assert_eq!(oracle_invertible_matrix_count(3, 2).unwrap(), 168);
        assert_eq!(oracle_invertible_matrix_count(2, 3).unwrap(), 48);
    }
}
