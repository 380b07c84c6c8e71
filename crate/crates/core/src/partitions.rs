//! Integer partitions and the Young-diagram operations built on them.
//!
//! A [`Partition`] indexes both the finite abelian p-groups (via the exponents
//! of their cyclic factors) and the terms of every q-series sum in this crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts. The empty partition is the
/// unique partition of zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from arbitrary parts: zeros are dropped and the rest
    /// sorted into decreasing order.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Checked constructor: parts must already be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("parts not decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// `(m, m, ..., m)` with `count` parts.
    pub fn rectangle(m: usize, count: usize) -> Self {
        if m == 0 {
            return Partition::empty();
        }
        Partition(vec![m; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols {
            out.push(self.0.iter().take_while(|&&p| p >= c).count());
        }
        Partition(out)
    }

    /// Sum of squared parts.
    pub fn square_sum(&self) -> usize {
        self.0.iter().map(|p| p * p).sum()
    }

    /// Side of the Durfee square: the largest `s` with `λ_s ≥ s`.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Number of parts that are at least `m`.
    pub fn parts_at_least(&self, m: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= m).count()
    }

    /// Removes the first `cols` columns of the diagram.
    pub fn drop_columns(&self, cols: usize) -> Partition {
        Partition(
            self.0
                .iter()
                .filter(|&&p| p > cols)
                .map(|&p| p - cols)
                .collect(),
        )
    }

    /// Hall's associated partition: repeatedly record the side of the largest
    /// square in the upper-left corner and delete that many columns.
    pub fn square_decomposition(&self) -> Partition {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let side = rest.durfee();
            debug_assert!(side >= 1);
            out.push(side);
            rest = rest.drop_columns(side);
        }
        debug_assert!(out.windows(2).all(|w| w[0] >= w[1]));
        Partition(out)
    }

    /// Rectangle variant of [`square_decomposition`](Self::square_decomposition).
    ///
    /// At each stage the largest `n ≥ 1` is chosen such that a rectangle of
    /// width `n` and height `n + k` ([`Orientation::Tall`]) or width `n + k`
    /// and height `n` ([`Orientation::Wide`]) fits in the upper-left corner.
    /// The rectangle's width is recorded and its columns deleted. `None` means
    /// a nonempty remainder admitted no rectangle.
    pub fn rectangle_decomposition(&self, k: usize, orientation: Orientation) -> Option<Partition> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let fits = |n: usize| match orientation {
                Orientation::Tall => rest.part(n + k - 1) >= n,
                Orientation::Wide => rest.part(n - 1) >= n + k,
            };
            let mut best = 0;
            let mut n = 1;
            while fits(n) {
                best = n;
                n += 1;
            }
            if best == 0 {
                return None;
            }
            let width = match orientation {
                Orientation::Tall => best,
                Orientation::Wide => best + k,
            };
            out.push(width);
            rest = rest.drop_columns(width);
        }
        Some(Partition(out))
    }
}

/// Shape of the rectangles used by [`Partition::rectangle_decomposition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Tall,
    Wide,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, lexicographically decreasing by parts.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition_bounded(n, n, |p| out.push(Partition(p.to_vec())));
    out
}

/// Visits every partition of `n` with all parts `≤ max_part`, in
/// lexicographically decreasing order, without allocating per partition.
pub fn for_each_partition_bounded<F: FnMut(&[usize])>(n: usize, max_part: usize, mut visit: F) {
    fn go<F: FnMut(&[usize])>(rem: usize, max: usize, stack: &mut Vec<usize>, visit: &mut F) {
        if rem == 0 {
            visit(stack);
            return;
        }
        for part in (1..=max.min(rem)).rev() {
            stack.push(part);
            go(rem - part, part, stack, visit);
            stack.pop();
        }
    }
    let mut stack = Vec::new();
    go(n, max_part, &mut stack, &mut visit);
}

/// Visits every partition `μ` whose square sum plus `linear` times its weight
/// is at most `bound`. Used to sweep terms `x^{Σμ²+k|μ|}` that reach a
/// truncation degree.
pub fn for_each_by_square_sum<F: FnMut(&Partition)>(bound: usize, linear: usize, mut visit: F) {
    fn go<F: FnMut(&Partition)>(
        budget: usize,
        max: usize,
        linear: usize,
        stack: &mut Vec<usize>,
        visit: &mut F,
    ) {
        visit(&Partition(stack.clone()));
        for part in 1..=max {
            let cost = part * part + linear * part;
            if cost > budget {
                break;
            }
            stack.push(part);
            go(budget - cost, part, linear, stack, visit);
            stack.pop();
        }
    }
    let mut stack = Vec::new();
    go(bound, bound, linear, &mut stack, &mut visit);
}

/// π(n) for every n ≤ `max`, from the (n, largest-part) dynamic program.
pub fn partition_counts(max: usize) -> Vec<BigUint> {
    at_most_parts_counts(max, max)
}

/// π_r(n) for every n ≤ `max`: partitions of n into at most `r` parts, which
/// by conjugation equals partitions into parts of size at most `r`.
pub fn at_most_parts_counts(max: usize, r: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); max + 1];
    table[0] = BigUint::one();
    for part in 1..=r.min(max) {
        for n in part..=max {
            let add = table[n - part].clone();
            table[n] += add;
        }
    }
    table
}

pub fn count_partitions(n: usize) -> BigUint {
    partition_counts(n).pop().unwrap_or_else(BigUint::one)
}

pub fn count_at_most_parts(n: usize, r: usize) -> BigUint {
    at_most_parts_counts(n, r).pop().unwrap_or_else(BigUint::one)
}

/// π^(r)(n) = π(n) − π_r(n).
pub fn count_more_parts(n: usize, r: usize) -> BigUint {
    count_partitions(n) - count_at_most_parts(n, r)
}

/// Partitions of `n` into exactly `k` parts, by the recurrence
/// p(n, k) = p(n − 1, k − 1) + p(n − k, k).
pub fn count_exact_parts(n: usize, k: usize) -> BigUint {
    let mut table = vec![vec![BigUint::zero(); k + 1]; n + 1];
    table[0][0] = BigUint::one();
    for m in 1..=n {
        for j in 1..=k.min(m) {
            let v = &table[m - 1][j - 1] + &table[m - j][j];
            table[m][j] = v;
        }
    }
    table[n][k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_partitions(10), BigUint::from(42u32));
        assert_eq!(count_at_most_parts(4, 2), BigUint::from(3u32));
        for r in 0..5 {
            assert!(count_more_parts(0, r).is_zero());
        }
        assert_eq!(count_exact_parts(7, 3), BigUint::from(4u32));
    }

    #[test]
    fn square_decomposition_examples() {
        assert_eq!(p(&[4, 3, 1]).square_decomposition(), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).square_decomposition(), p(&[1]));
        assert_eq!(p(&[2, 2]).square_decomposition(), p(&[2]));
        assert_eq!(Partition::empty().square_decomposition(), Partition::empty());
    }

    #[test]
    fn rectangle_decomposition_examples() {
        assert_eq!(p(&[2, 2]).rectangle_decomposition(1, Orientation::Tall), Some(p(&[1, 1])));
        assert_eq!(p(&[2, 1]).rectangle_decomposition(1, Orientation::Tall), None);
        let lam = p(&[5, 3, 3, 1]);
        for o in [Orientation::Tall, Orientation::Wide] {
            assert_eq!(lam.rectangle_decomposition(0, o), Some(lam.square_decomposition()));
        }
        // (3) with k = 2 wide: one 3×1 block.
        assert_eq!(p(&[3, 3]).rectangle_decomposition(2, Orientation::Wide), Some(p(&[3])));
        assert_eq!(p(&[2]).rectangle_decomposition(2, Orientation::Wide), None);
    }

    #[test]
    fn serialization() {
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p(&[2, 2, 1])).unwrap();
        assert_eq!(json, "\"2,2,1\"");
    }

    #[test]
    fn square_sum_sweep_is_complete() {
        let mut seen = Vec::new();
        for_each_by_square_sum(6, 0, |mu| seen.push(mu.clone()));
        let mut expected: Vec<Partition> = (0..=6)
            .flat_map(enumerate_partitions)
            .filter(|mu| mu.square_sum() <= 6)
            .collect();
        seen.sort();
        expected.sort();
        assert_eq!(seen, expected);
    }
}
