use massform::abelian::{aut_form, aut_order_of};
use massform::counting::{gaussian_binomial, gaussian_binomial_poly, ZetaSpec};
use massform::exact::{self, Rational};
use massform::oracles::{
    aut_count_with_generators, covering_registry, oracle_cayley_aut_count, oracle_partitions, CayleyGroup,
};
use massform::partitions::{
    count_at_most_parts, count_exact_parts, count_more_parts, count_partitions, enumerate_partitions,
};
use massform::qseries::{partition_series, product_over_exponents, Polynomial, RationalFunction, TruncatedSeries};
use massform::{Orientation, Partition};
use num_integer::Integer;
use proptest::prelude::*;

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=12, 0..=12).prop_filter_map("weight bound", move |parts| {
        let p = Partition::from_parts(parts);
        (p.weight() <= max_weight).then_some(p)
    })
}

fn series(n: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-9i64..=9, n + 1).prop_map(move |c| TruncatedSeries::from_ints(n, &c))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 1..=4).prop_map(|c| Polynomial::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (polynomial(), polynomial()).prop_filter_map("nonzero denominator", |(n, d)| RationalFunction::new(n, d).ok())
}

proptest! {
    #[test]
    fn conjugation_is_a_weight_preserving_involution(l in partition(30)) {
        let c = l.conjugate();
        prop_assert_eq!(c.weight(), l.weight());
        prop_assert_eq!(c.conjugate(), l);
    }

    #[test]
    fn parts_are_weakly_decreasing(l in partition(30)) {
        prop_assert!(l.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(l.parts().iter().all(|&p| p >= 1));
    }

    #[test]
    fn square_decomposition_partitions_the_largest_part(l in partition(30)) {
        prop_assert_eq!(l.square_decomposition().weight(), l.largest());
    }

    #[test]
    fn tall_rectangles_need_equal_leading_rows(l in partition(25), k in 1usize..=4) {
        let expected = l.is_empty() || (l.len() > k && l.parts()[..=k].iter().all(|&p| p == l.largest()));
        prop_assert_eq!(l.rectangle_decomposition(k, Orientation::Tall).is_some(), expected);
    }

    #[test]
    fn more_parts_and_at_most_parts_split_the_count(n in 0usize..=40, r in 0usize..=10) {
        prop_assert_eq!(count_at_most_parts(n, r) + count_more_parts(n, r), count_partitions(n));
    }

    #[test]
    fn series_ring_axioms(a in series(50), b in series(50), c in series(50)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn unit_inverse(mut a in series(40), c0 in prop::sample::select(vec![-3i64, -1, 1, 2, 7])) {
        a.set_coeff(0, exact::int(c0));
        let inv = a.invert_unit().unwrap();
        prop_assert_eq!(inv.mul(&a), TruncatedSeries::one(40));
    }

    #[test]
    fn ratfunc_normal_form(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.normalize(), a.normalize().normalize());
        let cross = a.numerator().mul(b.denominator()) == b.numerator().mul(a.denominator());
        prop_assert_eq!(a.equals(&b), cross);
        prop_assert!(a.equals(&a.mul(&b).div(&b).unwrap_or_else(|_| a.clone())));
    }

    #[test]
    fn aut_form_at_inverse_prime(l in partition(8), p in prop::sample::select(vec![2u64, 3, 5])) {
        let value = aut_form(&l).evaluate(&exact::ratio(1, p as i64)).unwrap();
        prop_assert_eq!(value, exact::from_biguint(&aut_order_of(p, &l)).recip());
    }

    #[test]
    fn cyclic_aut_count_ignores_the_generator(n in 1usize..=30, g in 1usize..=30) {
        let g = g % n;
        prop_assume!(g.gcd(&n) == 1 || n == 1);
        let h = CayleyGroup::cyclic(n);
        let phi = (1..=n).filter(|i| i.gcd(&n) == 1).count() as u64;
        prop_assert_eq!(aut_count_with_generators(&h, &[g]).unwrap(), phi);
    }
}

#[test]
fn partition_counts_match_enumeration() {
    for n in 0..=25 {
        let all = oracle_partitions(n).unwrap();
        assert_eq!(exact::from_biguint(&count_partitions(n)), exact::int(all.len() as i64), "n = {n}");
        for r in 0..=10 {
            let at_most = all.iter().filter(|l| l.len() <= r).count();
            assert_eq!(exact::from_biguint(&count_at_most_parts(n, r)), exact::int(at_most as i64));
        }
    }
}

#[test]
fn largest_part_count_equals_exact_parts_count() {
    for n in 0..=25 {
        let all = enumerate_partitions(n);
        for m in 0..=n {
            let largest = all.iter().filter(|l| l.largest() == m).count();
            let exactly = all.iter().filter(|l| l.len() == m).count();
            assert_eq!(largest, exactly, "n = {n}, m = {m}");
            assert_eq!(exact::from_biguint(&count_exact_parts(n, m)), exact::int(exactly as i64));
        }
    }
}

#[test]
fn full_product_is_the_partition_series() {
    for n in [0, 1, 7, 40] {
        let from_counts = TruncatedSeries::from_coeffs(n, (0..=n).map(|m| exact::from_biguint(&count_partitions(m))));
        assert_eq!(product_over_exponents(1.., n), from_counts);
        assert_eq!(partition_series(n), from_counts);
    }
}

#[test]
fn gaussian_binomial_symmetry_and_pascal() {
    for p in [2u64, 3, 5] {
        let pr = exact::int(p as i64);
        for n in 1..=8 {
            for k in 0..=n {
                assert_eq!(gaussian_binomial(n, k, p).unwrap(), gaussian_binomial(n, n - k, p).unwrap());
                let at = gaussian_binomial_poly(n, k).unwrap().evaluate(&pr);
                assert_eq!(at, exact::from_biguint(&gaussian_binomial(n, k, p).unwrap()));
                if k >= 1 && k < n {
                    let left = gaussian_binomial(n - 1, k - 1, p).unwrap();
                    let right = gaussian_binomial(n - 1, k, p).unwrap() * exact::big_pow(p, k as u32);
                    assert_eq!(gaussian_binomial(n, k, p).unwrap(), left + right);
                }
            }
        }
    }
}

#[test]
fn lattice_zeta_at_its_rank() {
    for p in [2u64, 3, 5] {
        for d in 1..=4 {
            let expected = (1..=d as u32).fold(Rational::from_integer(1.into()), |acc, i| {
                acc / (exact::int(1) - exact::from_biguint(&exact::big_pow(p, i)).recip())
            });
            assert_eq!(ZetaSpec::lattice(d, p, d as i64).value().unwrap(), expected);
        }
    }
}

#[test]
fn cover_aut_counts_ignore_the_generating_set() {
    for case in covering_registry().unwrap() {
        for h in case.covers.iter().map(|c| &c.group).chain([&case.base]) {
            let mut gens = h.generating_set();
            gens.reverse();
            gens.push(h.mul(gens[0], gens[gens.len() - 1]));
            assert_eq!(aut_count_with_generators(h, &gens).unwrap(), oracle_cayley_aut_count(h).unwrap());
        }
    }
}
