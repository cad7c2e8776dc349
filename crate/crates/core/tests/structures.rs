use proptest::prelude::*;

use scalext_core::catalog::{adjoint_group_yd, instance, sweedler_yd, FiniteGroup};
use scalext_core::check::CheckOptions;
use scalext_core::exactla::{CoeffVector, ExactScalar, LinMap};
use scalext_core::scalarext::{
    bm_tau, build_maps_phi, left_scalar_ext, paired_yd_from_left, right_scalar_ext, symmetric_hopf_via_phi, tau_inverse, tau_prime, PairingIso, PhiCompatPair,
};
use scalext_core::ydstruct::LeftRightYD;

fn pair(yd: &LeftRightYD) -> PhiCompatPair {
    let id = LinMap::identity(yd.adim());
    let right = paired_yd_from_left(yd, &PairingIso::Phi(id.clone())).unwrap();
    PhiCompatPair::new(yd.clone(), right, id).unwrap()
}

fn combo(dim: usize) -> impl Strategy<Value = CoeffVector> {
    proptest::collection::vec(-2i64..3, dim).prop_map(|v| CoeffVector::from_ints(&v))
}

#[test]
fn sweedler_tau_on_y() {
    let yd = sweedler_yd();
    let ext = left_scalar_ext(&yd).unwrap();
    let s = &ext.smash;
    let tau = bm_tau(&yd, s);
    // ρ(y) = y⊗g, so τ(y♯1) = S²(g)·y = g·y = (g▷y)♯g = −y♯g
    let got = tau.apply(&s.basis(s.index(1, 0)));
    assert_eq!(got, s.basis(s.index(1, 1)).scale(&ExactScalar::from_int(-1)));
    // τ(1♯x) = S(x) = −gx
    assert_eq!(tau.apply(&s.basis(s.index(0, 2))), s.basis(s.index(0, 3)).scale(&ExactScalar::from_int(-1)));
}

#[test]
fn dimensions_of_the_smash_algebras() {
    for (name, n, m) in [("c2", 2, 2), ("h4", 4, 2), ("s3", 6, 6), ("s3-dual", 6, 6), ("trivial-h4", 4, 1)] {
        let d = instance(name).unwrap();
        let l = left_scalar_ext(&d.left_yd).unwrap();
        let r = right_scalar_ext(&d.right_yd).unwrap();
        assert_eq!((l.smash.hdim(), l.smash.adim(), l.smash.dim()), (n, m, n * m), "{name}");
        assert_eq!(r.smash.dim(), n * m, "{name}");
        // L♯H ⊗_L L♯H has the normal forms x♯f ⊗ 1♯g as a basis
        assert_eq!(l.bialgebroid.tensor.dim(), n * n * m, "{name}");
    }
}

#[test]
fn c2_psi_values() {
    let yd = adjoint_group_yd(&FiniteGroup::cyclic(2));
    let maps = build_maps_phi(&pair(&yd)).unwrap();
    let (lh, hr) = (&maps.lh, &maps.hr);
    // abelian, so Ψ(x♯f) = x⁻¹f♯x, and x⁻¹ = x in C₂
    for x in 0..2 {
        for f in 0..2 {
            let want = hr.basis(hr.index(x, (x + f) % 2));
            assert_eq!(maps.psi.apply(&lh.basis(lh.index(x, f))), want, "x={x} f={f}");
        }
    }
    assert!(maps.psi.compose(&maps.psi_inv).is_identity());
}

#[test]
fn tau_inverse_matches_both_sides() {
    for name in ["h4", "s3"] {
        let d = instance(name).unwrap();
        let l = left_scalar_ext(&d.left_yd).unwrap();
        let t = bm_tau(&d.left_yd, &l.smash);
        let ti = tau_inverse(&d.left_yd, &l.smash).unwrap();
        assert!(t.compose(&ti).is_identity() && ti.compose(&t).is_identity(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tau_reverses_products_of_combinations(p in combo(8), q in combo(8)) {
        let yd = sweedler_yd();
        let s = left_scalar_ext(&yd).unwrap().smash;
        let tau = bm_tau(&yd, &s);
        prop_assert_eq!(tau.apply(&s.mul(&p, &q)), s.mul(&tau.apply(&q), &tau.apply(&p)));
    }

    #[test]
    fn tau_prime_reverses_products_on_s3(p in combo(36), q in combo(36)) {
        let d = instance("s3").unwrap();
        let s = right_scalar_ext(&d.right_yd).unwrap().smash;
        let tau = tau_prime(&d.right_yd, &s);
        prop_assert_eq!(tau.apply(&s.mul(&p, &q)), s.mul(&tau.apply(&q), &tau.apply(&p)));
    }

    #[test]
    fn psi_is_multiplicative(p in combo(8), q in combo(8)) {
        let maps = build_maps_phi(&pair(&sweedler_yd())).unwrap();
        let psi = &maps.psi;
        prop_assert_eq!(psi.apply(&maps.lh.mul(&p, &q)), maps.hr.mul(&psi.apply(&p), &psi.apply(&q)));
        prop_assert_eq!(maps.psi_inv.apply(&psi.apply(&p)), p);
    }

    #[test]
    fn big_phi_reverses_products(p in combo(8), q in combo(8)) {
        let maps = build_maps_phi(&pair(&sweedler_yd())).unwrap();
        let f = &maps.big_phi;
        prop_assert_eq!(f.apply(&maps.lh.mul(&p, &q)), maps.hr.mul(&f.apply(&q), &f.apply(&p)));
    }

    #[test]
    fn bundle_iso_carries_tau(p in combo(8)) {
        let b = symmetric_hopf_via_phi(&pair(&sweedler_yd())).unwrap();
        prop_assert_eq!(b.iso.apply(&b.on_lh.tau.apply(&p)), b.on_hr.tau.apply(&b.iso.apply(&p)));
    }
}

#[test]
fn every_catalog_yd_passes_its_axioms() {
    let o = CheckOptions::default();
    for d in scalext_core::catalog::all_instances() {
        let l = d.left_yd.verify_all(&o);
        let r = d.right_yd.verify_all(&o);
        assert!(l.passed() && r.passed(), "{}: {:?} {:?}", d.name, l.failing(), r.failing());
    }
}
