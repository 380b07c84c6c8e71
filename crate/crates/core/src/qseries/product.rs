//! Pochhammer products, infinite products over exponent streams, and
//! numeric readings of series at `x = 1/p`.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::series::TruncatedSeries;
use crate::exact::{self, Rational};
use crate::partitions::partition_counts;

/// `f_k(x) = (1 − x)(1 − x²)···(1 − x^k)` truncated at `n`; `f_0 = 1`.
pub fn pochhammer_f(k: usize, n: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(n);
    let one = Rational::one();
    for i in 1..=k {
        s.mul_one_minus(i, &one);
    }
    s
}

/// `1/f_k(x)` truncated at `n`.
pub fn inverse_pochhammer_f(k: usize, n: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(n);
    divide_by_pochhammer(&mut s, k, 1, &Rational::one());
    s
}

/// Divides `s` in place by `f_k(σ·x^m) = Π_{i=1}^{k} (1 − σ^i x^{mi})`.
pub fn divide_by_pochhammer(s: &mut TruncatedSeries, k: usize, m: usize, sigma: &Rational) {
    let mut sp = Rational::one();
    for i in 1..=k {
        sp *= sigma;
        s.div_one_minus(i * m, &sp);
    }
}

/// `Π 1/(1 − x^{a_j})` over a nondecreasing, unbounded stream of positive
/// exponents. Factors with `a_j > n` contribute `1 + O(x^{n+1})`, so the
/// stream is consumed only up to the first such exponent and the result is
/// exact through degree `n`.
pub fn product_over_exponents<I>(exponents: I, n: usize) -> TruncatedSeries
where
    I: IntoIterator<Item = usize>,
{
    let mut s = TruncatedSeries::one(n);
    let one = Rational::one();
    for a in exponents {
        assert!(a >= 1, "exponent stream must be positive");
        if a > n {
            break;
        }
        s.div_one_minus(a, &one);
    }
    s
}

/// `Σ π(n) x^n`.
pub fn partition_series(n: usize) -> TruncatedSeries {
    product_over_exponents(1.., n)
}

/// Exponents `j ≥ 1` whose residue mod `modulus` is in `residues`.
pub fn residue_stream(modulus: usize, residues: Vec<usize>) -> impl Iterator<Item = usize> {
    (1..).filter(move |j| residues.contains(&(j % modulus)))
}

/// Exact partial sum of a series at `x = 1/p`, with a heuristic tail note.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSum {
    pub prime: u64,
    pub truncation: usize,
    pub value: Rational,
    /// Heuristic, not certified: assumes `|c_n| ≤ C·π(n)` beyond the
    /// truncation with `C = max_{n ≤ N} |c_n|/π(n)`, and bounds the tail by
    /// `C·π(N+1)·p^{-(N+1)}·p/(p−1)`.
    pub tail_estimate: Rational,
}

impl PartialSum {
    pub fn note(&self) -> String {
        format!(
            "partial sum through x^{} at x=1/{}; heuristic tail ≈ {} (not certified)",
            self.truncation,
            self.prime,
            exact::to_string(&self.tail_estimate)
        )
    }
}

pub fn evaluate_at_inverse_prime(s: &TruncatedSeries, p: u64) -> PartialSum {
    assert!(p >= 2);
    let n = s.truncation();
    let x = exact::ratio(1, p as i64);
    let value = s.evaluate_partial(&x);
    let counts = partition_counts(n + 1);
    let mut c = Rational::zero();
    for (i, a) in s.coeffs().iter().enumerate() {
        let ratio = a.abs() / exact::from_biguint(&counts[i]);
        if ratio > c {
            c = ratio;
        }
    }
    let next: &BigUint = &counts[n + 1];
    let tail_estimate = c
        * exact::from_biguint(next)
        * exact::pow(&x, (n + 1) as i64)
        * exact::ratio(p as i64, p as i64 - 1);
    PartialSum {
        prime: p,
        truncation: n,
        value,
        tail_estimate,
    }
}
