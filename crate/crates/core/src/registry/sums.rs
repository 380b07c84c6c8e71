//! Series builders shared by several entries.

use num_bigint::BigUint;
use num_traits::One;

use crate::abelian::{aut_reciprocal_series, AbelianPGroup};
use crate::exact::{self, Rational};
use crate::partitions::{for_each_by_square_sum, for_each_partition_bounded, Partition};
use crate::qseries::{product_over_exponents, residue_stream, PochhammerFactor, SeriesForm, TruncatedSeries};

/// `Σ x^{k|G|}/|Aut(G)|` over the groups `G = G_λ` accepted by `keep`.
/// With `μ = λ'` the term starts at `x^{Σμ² + k|μ|}`, so the sweep stops
/// there.
pub fn aut_sweep(n: usize, k: usize, mut keep: impl FnMut(&Partition) -> bool) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(n);
    for_each_by_square_sum(n, k, |mu| {
        let lambda = mu.conjugate();
        if keep(&lambda) {
            s = s.add(&aut_reciprocal_series(&lambda, n).shift(k * lambda.weight()));
        }
    });
    s
}

/// `Σ x^{|λ|}` over the partitions `|λ| ≤ n` accepted by `keep`.
pub fn weight_series(n: usize, mut keep: impl FnMut(&Partition) -> bool) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(n);
    let one = Rational::one();
    for w in 0..=n {
        for_each_partition_bounded(w, w, |parts| {
            if keep(&Partition::from_parts(parts.to_vec())) {
                s.add_to_coeff(w, &one);
            }
        });
    }
    s
}

/// `Σ x^{|G|}` over abelian groups `G` satisfying a predicate that does not
/// depend on the prime.
pub fn group_series(n: usize, mut keep: impl FnMut(&AbelianPGroup) -> bool) -> TruncatedSeries {
    weight_series(n, |lambda| keep(&nominal(lambda)))
}

/// The group of type `λ` at `p = 2`, for prime-free predicates.
pub fn nominal(lambda: &Partition) -> AbelianPGroup {
    AbelianPGroup::new(2, lambda.clone()).expect("2 is prime")
}

pub fn count_series(n: usize, count: impl Fn(usize) -> BigUint) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(n, (0..=n).map(|m| exact::from_biguint(&count(m))))
}

/// `x^e/Π f_{k_j}(x^{m_j})` with factors given as `(k, m)`.
pub fn form(e: usize, factors: &[(usize, usize)]) -> SeriesForm {
    factors
        .iter()
        .fold(SeriesForm::monomial(e as i64), |f, &(k, m)| f.over(PochhammerFactor::at_power(k, m)))
}

/// `Π 1/(1 − x^{mj})` over `j ≡ ±r (mod 5)`; `r = 1` for the first
/// Rogers–Ramanujan product, `r = 2` for the second.
pub fn rr_product(n: usize, r: usize, m: usize) -> TruncatedSeries {
    product_over_exponents(residue_stream(5, vec![r, 5 - r]).map(|j| j * m), n)
}

/// `Σ_k x^{m(k² + ck)}/f_k(x^m)`.
pub fn rr_sum(n: usize, c: usize, m: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(n);
    let mut k = 0;
    while m * (k * k + c * k) <= n {
        let term = form(m * (k * k + c * k), &[(k, m)]).to_series(n).expect("nonnegative exponent");
        s = s.add(&term);
        k += 1;
    }
    s
}

/// `x^a/(1 − x)`.
pub fn geometric(n: usize, a: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::monomial(n, a, Rational::one());
    s.div_one_minus(1, &Rational::one());
    s
}

pub fn one(n: usize) -> TruncatedSeries {
    TruncatedSeries::one(n)
}

pub fn reciprocal(n: &BigUint) -> Rational {
    exact::from_biguint(n).recip()
}
