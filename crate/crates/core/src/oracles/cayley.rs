//! Finite groups given by multiplication tables, with a backtracking
//! automorphism counter and isomorphism search.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Largest group the backtracking searches accept.
pub const CAYLEY_ORDER_BUDGET: usize = 64;
/// Cap on partial assignments explored by one search.
pub const SEARCH_NODE_BUDGET: u64 = 5_000_000;

/// A group on `0..n` with identity `0`; `table[a][b]` is `a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl CayleyGroup {
    /// Validates the table: Latin square, identity at 0, associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has {} entries, expected {n}", row.len()));
            }
            let mut seen = vec![false; n];
            for &c in row {
                if c >= n || seen[c] {
                    return bad(format!("row {a} is not a permutation of 0..{n}"));
                }
                seen[c] = true;
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return bad("index 0 is not the identity".into());
            }
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[a]] {
                    return bad(format!("column {a} is not a permutation of 0..{n}"));
                }
                seen[row[a]] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == 0).expect("Latin square"))
            .collect();
        Ok(CayleyGroup { table, inverse })
    }

    /// Parses the text format: the order `n` on the first line, then `n`
    /// rows of `n` whitespace-separated zero-based indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("missing order line".into()))?
            .parse()
            .map_err(|e| Error::InvalidTable(format!("order line: {e}")))?;
        let mut table = Vec::with_capacity(n);
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidTable(format!("row {}: {e}", table.len())))?;
            table.push(row);
        }
        if table.len() != n {
            return Err(Error::InvalidTable(format!("expected {n} rows, found {}", table.len())));
        }
        Self::new(table)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(table).expect("cyclic table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    queue.push_back(b);
                }
            }
        }
        (0..self.order()).filter(|&a| member[a]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &a in set {
            if a >= self.order() {
                return false;
            }
            member[a] = true;
        }
        member[0] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, self.inv(b))]))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &a in set {
            member[a] = true;
        }
        self.is_subgroup(set)
            && (0..self.order()).all(|g| {
                set.iter()
                    .all(|&a| member[self.mul(self.mul(g, a), self.inv(g))])
            })
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut comms: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        comms.sort_unstable();
        comms.dedup();
        self.generated(&comms)
    }

    /// `G/N` with cosets numbered by their least element; the coset of the
    /// identity comes first.
    pub fn quotient(&self, normal: &[usize]) -> Result<CayleyGroup> {
        if !self.is_normal(normal) {
            return Err(Error::InvalidTable("quotient by a non-normal subset".into()));
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if coset_of[a] == usize::MAX {
                let id = reps.len();
                reps.push(a);
                for &m in normal {
                    coset_of[self.mul(a, m)] = id;
                }
            }
        }
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        CayleyGroup::new(table)
    }

    /// Greedy generating set: repeatedly adds an element of largest order
    /// outside the current subgroup.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        while current.len() < self.order() {
            let mut inside = vec![false; self.order()];
            for &a in &current {
                inside[a] = true;
            }
            let next = (0..self.order())
                .filter(|&a| !inside[a])
                .max_by_key(|&a| (self.element_order(a), std::cmp::Reverse(a)))
                .expect("proper subgroup has an outside element");
            gens.push(next);
            current = self.generated(&gens);
        }
        gens
    }
}

fn check_budget(g: &CayleyGroup) -> Result<()> {
    if g.order() > CAYLEY_ORDER_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "group of order {} exceeds the Cayley budget {CAYLEY_ORDER_BUDGET}",
            g.order()
        )));
    }
    Ok(())
}

/// Backtracking search for injective homomorphisms `src → tgt` sending the
/// generators `gens` of `src` to elements of equal order. `visit` sees each
/// complete map and returns `false` to stop the search.
struct HomSearch<'a, F: FnMut(&[usize]) -> bool> {
    src: &'a CayleyGroup,
    tgt: &'a CayleyGroup,
    gens: &'a [usize],
    visit: F,
    nodes: u64,
    stopped: bool,
}

impl<'a, F: FnMut(&[usize]) -> bool> HomSearch<'a, F> {
    fn run(&mut self) -> Result<()> {
        let mut img = vec![usize::MAX; self.src.order()];
        let mut used = vec![false; self.tgt.order()];
        img[0] = 0;
        used[0] = true;
        let mut images = Vec::with_capacity(self.gens.len());
        self.extend(&mut img, &mut used, &mut images)
    }

    fn extend(&mut self, img: &mut [usize], used: &mut [bool], images: &mut Vec<usize>) -> Result<()> {
        if self.stopped {
            return Ok(());
        }
        let level = images.len();
        if level == self.gens.len() {
            if img.iter().all(|&v| v != usize::MAX) && self.is_hom(img) {
                self.stopped = !(self.visit)(img);
            }
            return Ok(());
        }
        let g = self.gens[level];
        let want = self.src.element_order(g);
        for h in 0..self.tgt.order() {
            if self.tgt.element_order(h) != want {
                continue;
            }
            self.nodes += 1;
            if self.nodes > SEARCH_NODE_BUDGET {
                return Err(Error::BudgetExceeded(format!(
                    "automorphism search exceeded {SEARCH_NODE_BUDGET} nodes"
                )));
            }
            images.push(h);
            let (mut img2, mut used2) = (img.to_vec(), used.to_vec());
            if self.close(&mut img2, &mut used2, images) {
                self.extend(&mut img2, &mut used2, images)?;
            }
            images.pop();
            if self.stopped {
                break;
            }
        }
        Ok(())
    }

    /// Propagates `φ(a·g_j) = φ(a)·φ(g_j)` over the subgroup generated so
    /// far; fails on an inconsistency or a repeated image.
    fn close(&self, img: &mut [usize], used: &mut [bool], images: &[usize]) -> bool {
        let mut queue: VecDeque<usize> = (0..self.src.order()).filter(|&a| img[a] != usize::MAX).collect();
        while let Some(a) = queue.pop_front() {
            for (j, &g) in self.gens[..images.len()].iter().enumerate() {
                let b = self.src.mul(a, g);
                let v = self.tgt.mul(img[a], images[j]);
                if img[b] == usize::MAX {
                    if used[v] {
                        return false;
                    }
                    img[b] = v;
                    used[v] = true;
                    queue.push_back(b);
                } else if img[b] != v {
                    return false;
                }
            }
        }
        true
    }

    fn is_hom(&self, img: &[usize]) -> bool {
        let n = self.src.order();
        (0..n).all(|a| (0..n).all(|b| img[self.src.mul(a, b)] == self.tgt.mul(img[a], img[b])))
    }
}

/// `|Aut(H)|` by backtracking over images of a greedy generating set.
pub fn oracle_cayley_aut_count(h: &CayleyGroup) -> Result<u64> {
    aut_count_with_generators(h, &h.generating_set())
}

/// `|Aut(H)|` using a caller-chosen generating set.
pub fn aut_count_with_generators(h: &CayleyGroup, gens: &[usize]) -> Result<u64> {
    check_budget(h)?;
    if h.generated(gens).len() != h.order() {
        return Err(Error::InvalidParameter("elements do not generate the group".into()));
    }
    let mut count = 0u64;
    let mut search = HomSearch {
        src: h,
        tgt: h,
        gens,
        visit: |_: &[usize]| {
            count += 1;
            true
        },
        nodes: 0,
        stopped: false,
    };
    search.run()?;
    Ok(count)
}

/// An isomorphism `a → b` as an image vector, if one exists.
pub fn find_isomorphism(a: &CayleyGroup, b: &CayleyGroup) -> Result<Option<Vec<usize>>> {
    check_budget(a)?;
    check_budget(b)?;
    if a.order() != b.order() {
        return Ok(None);
    }
    let gens = a.generating_set();
    let mut found = None;
    let mut search = HomSearch {
        src: a,
        tgt: b,
        gens: &gens,
        visit: |img: &[usize]| {
            found = Some(img.to_vec());
            false
        },
        nodes: 0,
        stopped: false,
    };
    search.run()?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        assert_eq!(oracle_cayley_aut_count(&CayleyGroup::cyclic(4)).unwrap(), 2);
        assert_eq!(oracle_cayley_aut_count(&CayleyGroup::cyclic(9)).unwrap(), 6);
        assert_eq!(oracle_cayley_aut_count(&CayleyGroup::cyclic(1)).unwrap(), 1);
        assert_eq!(CayleyGroup::cyclic(6).element_order(2), 3);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(CayleyGroup::parse("2\n0 1\n1 1\n").is_err());
        assert!(CayleyGroup::parse("2\n1 0\n0 1\n").is_err());
        assert!(CayleyGroup::parse("2\n0 1\n").is_err());
        // A Latin square with identity that is not associative.
        let loop5 = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        assert!(matches!(CayleyGroup::parse(loop5), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn text_round_trip() {
        let g = CayleyGroup::cyclic(5);
        assert_eq!(CayleyGroup::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn quotient_and_isomorphism() {
        let c4 = CayleyGroup::cyclic(4);
        let q = c4.quotient(&[0, 2]).unwrap();
        assert!(find_isomorphism(&q, &CayleyGroup::cyclic(2)).unwrap().is_some());
        assert!(find_isomorphism(&c4, &CayleyGroup::cyclic(2)).unwrap().is_none());
        assert!(c4.quotient(&[0, 1]).is_err());
    }

    #[test]
    fn budget() {
        let big = CayleyGroup::cyclic(65);
        assert!(matches!(oracle_cayley_aut_count(&big), Err(Error::BudgetExceeded(_))));
    }
}
