use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use scalext_core::exactla::{image_basis, inverse, kernel, rank, CoeffVector, ExactScalar, LinMap};

fn scalar() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![
        (-30i64..30, 1i64..12).prop_map(|(p, q)| ExactScalar::new(p, q).unwrap()),
        // big enough to leave the machine-word fast path
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(p, q)| ExactScalar::new(p, q).unwrap()),
    ]
}

fn ratio(x: &ExactScalar) -> BigRational {
    x.into()
}

fn small() -> impl Strategy<Value = ExactScalar> {
    (-3i64..4).prop_map(ExactScalar::from_int)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
    proptest::collection::vec(small(), rows * cols).prop_map(move |v| {
        let t: Vec<_> = v.into_iter().enumerate().map(|(k, c)| (k / cols, k % cols, c)).collect();
        LinMap::from_triples(cols, rows, &t).unwrap()
    })
}

fn vector(dim: usize) -> impl Strategy<Value = CoeffVector> {
    proptest::collection::vec(small(), dim).prop_map(|v| CoeffVector::from_dense(&v))
}

/// Unit lower triangular times unit upper triangular: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = LinMap> {
    (matrix(n, n), matrix(n, n)).prop_map(move |(a, b)| {
        let tri = |m: &LinMap, lower: bool| {
            let t: Vec<_> = m
                .triples()
                .into_iter()
                .filter(|(r, c, _)| if lower { r > c } else { r < c })
                .chain((0..n).map(|i| (i, i, ExactScalar::one())))
                .collect();
            LinMap::from_triples(n, n, &t).unwrap()
        };
        tri(&a, true).compose(&tri(&b, false))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_operations_match_big_rationals(a in scalar(), b in scalar()) {
        prop_assert_eq!(ratio(&(&a + &b)), ratio(&a) + ratio(&b));
        prop_assert_eq!(ratio(&(&a - &b)), ratio(&a) - ratio(&b));
        prop_assert_eq!(ratio(&(&a * &b)), ratio(&a) * ratio(&b));
        prop_assert_eq!(ratio(&-a.clone()), -ratio(&a));
        if !b.is_zero() {
            prop_assert_eq!(ratio(&(&a / &b)), ratio(&a) / ratio(&b));
        }
        prop_assert_eq!(a == b, ratio(&a) == ratio(&b));
    }

    #[test]
    fn canonical_form_after_arithmetic(a in scalar(), b in scalar()) {
        let c = &a * &b - &a;
        let r = ratio(&c);
        prop_assert_eq!(c.numer(), r.numer().clone());
        prop_assert_eq!(c.denom(), r.denom().clone());
        prop_assert!(c.denom() > BigInt::from(0));
        prop_assert_eq!(c.to_string().parse::<ExactScalar>().unwrap(), c);
    }

    #[test]
    fn composition_is_associative(a in matrix(3, 4), b in matrix(4, 2), c in matrix(2, 5)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn composition_applies_in_order(a in matrix(3, 4), b in matrix(4, 2), v in vector(2)) {
        prop_assert_eq!(a.compose(&b).apply(&v), a.apply(&b.apply(&v)));
    }

    #[test]
    fn kronecker_acts_factorwise(a in matrix(2, 3), b in matrix(3, 2), u in vector(3), v in vector(2)) {
        prop_assert_eq!(a.tensor(&b).apply(&u.tensor(&v)), a.apply(&u).tensor(&b.apply(&v)));
    }

    #[test]
    fn kernel_is_annihilated_and_rank_nullity_holds(f in matrix(3, 5)) {
        let ker = kernel(&f);
        for k in &ker {
            prop_assert!(f.apply(k).is_zero());
        }
        prop_assert_eq!(rank(5, &ker), ker.len());
        prop_assert_eq!(image_basis(&f).len() + ker.len(), 5);
        prop_assert_eq!(rank(3, &f.columns().to_vec()), image_basis(&f).len());
    }

    #[test]
    fn inverse_of_invertible(f in invertible(4)) {
        let g = inverse(&f).expect("unit triangular product is invertible");
        prop_assert!(f.compose(&g).is_identity());
        prop_assert!(g.compose(&f).is_identity());
        prop_assert!(kernel(&f).is_empty());
    }

    #[test]
    fn singular_matrices_have_no_inverse(f in matrix(4, 3), g in matrix(3, 4)) {
        // factors through a 3-dimensional space
        let h = f.compose(&g);
        prop_assert!(inverse(&h).is_none());
        prop_assert!(!kernel(&h).is_empty());
    }

    #[test]
    fn transpose_reverses_composition(a in matrix(3, 4), b in matrix(4, 2)) {
        prop_assert_eq!(a.compose(&b).transpose(), b.transpose().compose(&a.transpose()));
        prop_assert_eq!(a.transpose().transpose(), a);
    }
}
