//! Partition enumeration by multiplicity vectors, independent of the
//! part-by-part generator used by the library.

use crate::error::{Error, Result};

/// Largest `n` the enumeration oracle will visit.
pub const PARTITION_BUDGET: usize = 60;

/// All partitions of `n`, each listed in nonincreasing order, produced by
/// choosing how many parts of each size `n, n−1, …, 1` to use.
pub fn oracle_partitions(n: usize) -> Result<Vec<Vec<usize>>> {
    if n > PARTITION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "partition enumeration capped at n = {PARTITION_BUDGET}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    by_multiplicity(n, n, &mut current, &mut out);
    Ok(out)
}

fn by_multiplicity(left: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        out.push(current.clone());
        return;
    }
    if size == 0 {
        return;
    }
    for mult in (0..=left / size).rev() {
        current.extend(std::iter::repeat_n(size, mult));
        by_multiplicity(left - mult * size, size - 1, current, out);
        current.truncate(current.len() - mult);
    }
}

/// `π(0), …, π(n)` by counting the enumerated partitions.
pub fn oracle_partition_counts(n: usize) -> Result<Vec<u64>> {
    (0..=n).map(|m| oracle_partitions(m).map(|v| v.len() as u64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(oracle_partition_counts(10).unwrap(), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(oracle_partitions(3).unwrap(), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert!(oracle_partitions(61).is_err());
    }
}
