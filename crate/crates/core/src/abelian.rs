//! Finite abelian p-groups `⊕ Z/p^{λ_i}` and their automorphism orders.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::partitions::{Orientation, Partition};
use crate::qseries::{PochhammerFactor, SeriesForm, TruncatedSeries};

/// `G ≅ ⊕_i Z/p^{λ_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianPGroup {
    #[serde(rename = "p")]
    prime: u64,
    lambda: Partition,
}

impl AbelianPGroup {
    pub fn new(prime: u64, lambda: Partition) -> Result<Self> {
        if !exact::is_prime(prime) {
            return Err(Error::InvalidParameter(format!("{prime} is not prime")));
        }
        Ok(AbelianPGroup { prime, lambda })
    }

    pub fn trivial(prime: u64) -> Result<Self> {
        Self::new(prime, Partition::empty())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// `log_p |G|`.
    pub fn weight(&self) -> usize {
        self.lambda.weight()
    }

    pub fn order(&self) -> BigUint {
        exact::big_pow(self.prime, self.weight() as u32)
    }

    pub fn exponent(&self) -> BigUint {
        exact::big_pow(self.prime, self.lambda.largest() as u32)
    }

    /// Minimal number of generators; the trivial group has rank 0.
    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn aut_order(&self) -> BigUint {
        aut_order_of(self.prime, &self.lambda)
    }

    /// `|Hol(G)| = |G|·|Aut(G)|`.
    pub fn hol_order(&self) -> BigUint {
        self.order() * self.aut_order()
    }

    /// Capable iff the two largest cyclic factors coincide. The trivial group
    /// counts as capable.
    pub fn is_capable(&self) -> bool {
        self.in_a(2)
    }

    /// `A_{p,k}`: the first `k` cyclic factors are isomorphic. The trivial
    /// group belongs to every `A_{p,k}`.
    pub fn in_a(&self, k: usize) -> bool {
        let parts = self.lambda.parts();
        if parts.is_empty() {
            return true;
        }
        parts.len() >= k && parts[..k.max(1)].iter().all(|&p| p == parts[0])
    }

    /// `B_{p,k}`: every cyclic factor has order at least `p^k`.
    pub fn in_b(&self, k: usize) -> bool {
        self.lambda.parts().iter().all(|&p| p >= k)
    }

    /// `Y_{p,n}`: at least `n` factors of order `≥ p^n` and at most `n`
    /// factors of order `≥ p^{n+1}`; equivalently the Durfee square of `λ`
    /// has side exactly `n`.
    pub fn in_y(&self, n: usize) -> bool {
        self.lambda.parts_at_least(n) >= n && self.lambda.parts_at_least(n + 1) <= n
    }

    /// Membership in Hall's family `S_G`: the square decomposition of `H`
    /// equals the conjugate partition of `G`.
    pub fn in_hall_family(h: &AbelianPGroup, g: &AbelianPGroup) -> Result<bool> {
        same_prime(h, g)?;
        Ok(h.lambda.square_decomposition() == g.lambda.conjugate())
    }

    /// Membership in the rectangle family `S^G` (wide rectangles with offset
    /// `k`); requires `G ∈ A_{p,k+1}`.
    pub fn in_rect_family(h: &AbelianPGroup, g: &AbelianPGroup, k: usize) -> Result<bool> {
        same_prime(h, g)?;
        if !g.in_a(k + 1) {
            return Err(Error::InvalidParameter(format!(
                "group {} is not in A_{{p,{}}}",
                g.lambda,
                k + 1
            )));
        }
        Ok(h.lambda.rectangle_decomposition(k, Orientation::Wide) == Some(g.lambda.conjugate()))
    }

    /// Largest quotient lying in `A_{p,k+1}`: the first `k` parts are
    /// replaced by `λ_{k+1}` (zero when absent).
    pub fn largest_quotient_in_a(&self, k: usize) -> AbelianPGroup {
        let parts = self.lambda.parts();
        let pivot = self.lambda.part(k);
        let mut out: Vec<usize> = vec![pivot; k.min(parts.len())];
        out.extend(parts.iter().skip(k).copied());
        AbelianPGroup {
            prime: self.prime,
            lambda: Partition::from_parts(out),
        }
    }
}

fn same_prime(a: &AbelianPGroup, b: &AbelianPGroup) -> Result<()> {
    if a.prime != b.prime {
        return Err(Error::PrimeMismatch(a.prime, b.prime));
    }
    Ok(())
}

/// `1/|Aut(G)|` as `x^{Σμ_i²} / Π_i f_{μ_i − μ_{i+1}}(x)` with `μ` the
/// conjugate of `λ`, read at `x = 1/p`.
pub fn aut_form(lambda: &Partition) -> SeriesForm {
    let mu = lambda.conjugate();
    let mut form = SeriesForm::monomial(mu.square_sum() as i64);
    for i in 0..mu.len() {
        let gap = mu.part(i) - mu.part(i + 1);
        form = form.over(PochhammerFactor::plain(gap));
    }
    form
}

/// `|Aut(⊕ Z/p^{λ_i})|` from the Pochhammer form, checked to be integral.
pub fn aut_order_of(p: u64, lambda: &Partition) -> BigUint {
    let x = exact::ratio(1, p as i64);
    let recip: Rational = aut_form(lambda)
        .evaluate(&x)
        .expect("f_k(1/p) never vanishes");
    exact::as_natural(&recip.recip())
        .unwrap_or_else(|| panic!("non-integral automorphism order for λ = ({lambda}), p = {p}"))
}

/// Formal series whose value at `x = 1/p` is `1/|Aut(G)|`.
pub fn aut_reciprocal_series(lambda: &Partition, n: usize) -> TruncatedSeries {
    aut_form(lambda)
        .to_series(n)
        .expect("automorphism forms have nonnegative exponent")
}

/// `Σ x^{|H|}` over the members `H` of `S_G` with `|H| ≤ p^n`.
pub fn hall_family_series(lambda_g: &Partition, n: usize) -> TruncatedSeries {
    family_series(n, lambda_g.weight(), |h| {
        h.square_decomposition() == lambda_g.conjugate()
    })
}

/// `Σ x^{|H|}` over `H ∈ S^G` (wide rectangles, offset `k`) with `|H| ≤ p^n`.
pub fn rect_family_series(lambda_g: &Partition, k: usize, n: usize) -> TruncatedSeries {
    let target = lambda_g.conjugate();
    family_series(n, lambda_g.weight(), |h| {
        h.rectangle_decomposition(k, Orientation::Wide).as_ref() == Some(&target)
    })
}

/// Members of either family have largest part `|G|` (the decomposition is a
/// partition of `λ_{H,1}`), so only those partitions are swept.
fn family_series<F: Fn(&Partition) -> bool>(n: usize, largest: usize, member: F) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(n);
    let one = Rational::one();
    if largest == 0 {
        if member(&Partition::empty()) {
            s.add_to_coeff(0, &one);
        }
        return s;
    }
    for w in largest..=n {
        crate::partitions::for_each_partition_bounded(w - largest, largest, |rest| {
            let mut parts = Vec::with_capacity(rest.len() + 1);
            parts.push(largest);
            parts.extend_from_slice(rest);
            if member(&Partition::from_parts(parts)) {
                s.add_to_coeff(w, &one);
            }
        });
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{inverse_pochhammer_f, TruncatedSeries};

    fn g(p: u64, parts: &[usize]) -> AbelianPGroup {
        AbelianPGroup::new(p, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn aut_order_examples() {
        assert_eq!(g(2, &[1]).aut_order(), BigUint::one());
        assert_eq!(g(2, &[1, 1]).aut_order(), BigUint::from(6u32));
        assert_eq!(g(2, &[2, 1]).aut_order(), BigUint::from(8u32));
        assert_eq!(g(3, &[]).aut_order(), BigUint::one());
        assert_eq!(g(2, &[1, 1]).hol_order(), BigUint::from(24u32));
    }

    #[test]
    fn basic_invariants() {
        let h = g(3, &[3, 1]);
        assert_eq!(h.order(), BigUint::from(81u32));
        assert_eq!(h.exponent(), BigUint::from(27u32));
        assert_eq!(h.rank(), 2);
        assert_eq!(g(5, &[]).rank(), 0);
        assert_eq!(g(5, &[]).exponent(), BigUint::one());
        assert!(AbelianPGroup::new(4, Partition::empty()).is_err());
    }

    #[test]
    fn reciprocal_series_examples() {
        let s = aut_reciprocal_series(&Partition::new(vec![1]).unwrap(), 6);
        assert_eq!(s, TruncatedSeries::from_ints(6, &[0, 1, 1, 1, 1, 1, 1]));
        assert_eq!(aut_reciprocal_series(&Partition::empty(), 6), TruncatedSeries::one(6));
        let s = aut_reciprocal_series(&Partition::new(vec![1, 1]).unwrap(), 12);
        let mut expected = TruncatedSeries::monomial(12, 4, exact::one());
        expected.div_one_minus(1, &exact::one());
        expected.div_one_minus(2, &exact::one());
        assert_eq!(s, expected);
    }

    #[test]
    fn class_predicates() {
        assert!(g(3, &[2, 2]).is_capable());
        assert!(!g(3, &[2, 1]).is_capable());
        assert!(!g(3, &[2]).is_capable());
        assert!(g(3, &[]).is_capable());
        assert!(g(2, &[3, 2]).in_b(2));
        assert!(!g(2, &[3, 1]).in_b(2));
        assert!(g(2, &[]).in_b(7));
        assert!(g(2, &[2, 2, 2, 1]).in_a(3));
        assert!(!g(2, &[2, 2]).in_a(3));
        assert!(g(2, &[3, 2, 1]).in_y(2));
        assert!(!g(2, &[3, 3, 3]).in_y(2));
        assert!(g(2, &[]).in_y(0));
    }

    #[test]
    fn hall_family_examples() {
        let cp = g(2, &[1]);
        for m in 1..6 {
            assert!(AbelianPGroup::in_hall_family(&g(2, &vec![1; m]), &cp).unwrap());
        }
        assert!(!AbelianPGroup::in_hall_family(&g(2, &[2]), &cp).unwrap());
        let v4 = g(2, &[1, 1]);
        assert!(AbelianPGroup::in_hall_family(&g(2, &[2, 2, 1]), &v4).unwrap());
        assert!(!AbelianPGroup::in_hall_family(&g(2, &[2, 1, 1]), &v4).unwrap());
        assert_eq!(
            AbelianPGroup::in_hall_family(&g(3, &[1]), &cp),
            Err(Error::PrimeMismatch(3, 2))
        );
        // Σ x^{2a+b} over a ≥ 2, b ≥ 0 is x^4 / ((1 − x²)(1 − x)).
        let s = hall_family_series(v4.lambda(), 20);
        assert_eq!(s, aut_reciprocal_series(v4.lambda(), 20));
    }

    #[test]
    fn largest_quotient_examples() {
        assert_eq!(g(2, &[3, 2, 2]).largest_quotient_in_a(1), g(2, &[2, 2, 2]));
        assert_eq!(g(2, &[2, 2]).largest_quotient_in_a(1), g(2, &[2, 2]));
        assert_eq!(g(2, &[1]).largest_quotient_in_a(1), g(2, &[]));
        assert!(g(2, &[5, 3, 1]).largest_quotient_in_a(2).in_a(3));
    }

    #[test]
    fn elementary_rect_family_is_exponent_class() {
        // G = (1^{k+1}): S^G is the set of groups of exponent p^{k+1},
        // whose generating function is x^{k+1}/f_{k+1}.
        for k in 0..3 {
            let lam = Partition::rectangle(1, k + 1);
            let s = rect_family_series(&lam, k, 20);
            let expected = inverse_pochhammer_f(k + 1, 20).shift(k + 1);
            assert_eq!(s, expected, "k = {k}");
        }
    }

    #[test]
    fn group_json() {
        let json = serde_json::to_string(&g(3, &[3, 1])).unwrap();
        assert_eq!(json, r#"{"p":3,"lambda":"3,1"}"#);
        let back: AbelianPGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g(3, &[3, 1]));
    }
}
