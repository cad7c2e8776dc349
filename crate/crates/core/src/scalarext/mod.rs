//! Scalar-extension bialgebroids and Hopf algebroids built from YD module algebras.

pub mod compat;
pub mod converse;
pub mod ext;
pub mod haha;
pub mod maps;
pub mod paired;

pub use compat::{phi_from_theta, theta_from_phi, verify_phi_compat, verify_theta_compat, PhiCompatPair, ThetaCompatPair};
pub use converse::converse_diagnostic;
pub use ext::{bm_tau, left_scalar_ext, left_scalar_ext_unchecked, right_scalar_ext, right_scalar_ext_unchecked, tau_prime, verify_tau_antihom, verify_tau_prime_antihom, ScalarExtension};
pub use haha::{compare_bundles, cross_checks, phi_identities, symmetric_hopf_via_phi, symmetric_hopf_via_theta, theta_identities, SymmetricBundle};
pub use maps::{build_maps_phi, build_maps_theta, verify_maps_phi, verify_maps_theta, PhiMaps, ThetaMaps};
pub use paired::{paired_yd_from_left, paired_yd_from_right, tau_inverse, tau_prime_inverse, PairingIso};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{adjoint_group_yd, dual_group_yd, sweedler_yd, FiniteGroup};
    use crate::check::CheckOptions;
    use crate::exactla::LinMap;
    use crate::ydstruct::LeftRightYD;
    use std::time::Instant;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    fn pair(yd: &LeftRightYD) -> PhiCompatPair {
        let id = LinMap::identity(yd.adim());
        let right = paired_yd_from_left(yd, &PairingIso::Phi(id.clone())).unwrap();
        PhiCompatPair::new(yd.clone(), right, id).unwrap()
    }

    fn full_check(name: &str, yd: LeftRightYD) {
        let t0 = Instant::now();
        let p = pair(&yd);
        assert!(verify_phi_compat(&p, &opts()).passed());
        let maps = build_maps_phi(&p).unwrap();
        let m = verify_maps_phi(&p.left, &p.right, &maps, &opts());
        assert!(m.passed(), "{name}: {:?}", m.failing());
        let a = symmetric_hopf_via_phi(&p).unwrap();
        let t1 = Instant::now();
        for h in [&a.on_lh, &a.on_hr] {
            let v = h.verify(&opts());
            assert!(v.passed(), "{name}: {:?}", v.failing());
        }
        let t2 = Instant::now();
        let q = theta_from_phi(&p).unwrap();
        let tm = build_maps_theta(&q).unwrap();
        let t = verify_maps_theta(&q.left, &q.right, &tm, &opts());
        assert!(t.passed(), "{name}: {:?}", t.failing());
        assert_eq!(phi_from_theta(&q).unwrap().phi, p.phi);
        let b = symmetric_hopf_via_theta(&q).unwrap();
        let cmp = compare_bundles(&a, &b, &opts());
        assert!(cmp.passed(), "{name}: {:?}", cmp.failing());
        let c = converse_diagnostic(&p.left, &p.right, &maps.psi, &opts()).unwrap();
        assert!(c.passed(), "{name}: {:?}", c.failing());
        let c = converse_diagnostic(&q.left, &q.right, &tm.psi_bar_inv, &opts()).unwrap();
        assert!(c.passed(), "{name}: {:?}", c.failing());
        // the partner derivations invert each other
        let back = paired_yd_from_right(&p.right, &PairingIso::Phi(p.phi.clone())).unwrap();
        assert_eq!(back, yd);
        let r2 = paired_yd_from_left(&yd, &PairingIso::Theta(q.theta.clone())).unwrap();
        assert_eq!(r2, p.right);
        assert_eq!(paired_yd_from_right(&r2, &PairingIso::Theta(q.theta.clone())).unwrap(), yd);
        let ti = tau_inverse(&yd, &a.lh).unwrap();
        assert!(a.on_lh.tau.compose(&ti).is_identity());
        let tpi = tau_prime_inverse(&p.right, &a.hr).unwrap();
        assert!(a.on_hr.tau.compose(&tpi).is_identity());
        eprintln!("{name}: build {:?} verify {:?} rest {:?}", t1 - t0, t2 - t1, t2.elapsed());
    }

    #[test]
    fn c2_everything() {
        full_check("c2", adjoint_group_yd(&FiniteGroup::cyclic(2)));
    }

    #[test]
    fn sweedler_everything() {
        full_check("h4", sweedler_yd());
    }

    #[test]
    fn s3_everything() {
        let g = FiniteGroup::s3();
        full_check("s3", adjoint_group_yd(&g));
        full_check("s3-dual", dual_group_yd(&g));
    }

    #[test]
    fn c2_values() {
        let yd = adjoint_group_yd(&FiniteGroup::cyclic(2));
        let p = pair(&yd);
        let maps = build_maps_phi(&p).unwrap();
        let (lh, hr) = (&maps.lh, &maps.hr);
        // Ψ(u♯e) = u♯u, Φ(1♯u) = u♯1
        assert_eq!(maps.psi.column(lh.index(1, 0)), &hr.basis(hr.index(1, 1)));
        assert_eq!(maps.big_phi.column(lh.index(0, 1)), &hr.basis(hr.index(0, 1)));
        // λ(u) = u⊗u
        assert_eq!(p.right.coact_basis(1), &hr.basis(hr.index(1, 1)));
        assert!(theta_from_phi(&p).unwrap().theta.is_identity());
    }

    #[test]
    fn sweedler_partner_values() {
        let yd = sweedler_yd();
        let p = pair(&yd);
        // y◁x = 0, λ(y) = g⊗y
        assert!(p.right.act_basis(1, 2).is_zero());
        assert_eq!(p.right.coact_basis(1), &crate::CoeffVector::unit(8, 3));
    }

    #[test]
    fn wrong_partner_fails_coaction_compat() {
        let yd = adjoint_group_yd(&FiniteGroup::cyclic(2));
        let p = pair(&yd);
        // λ(u) = e⊗u
        let mut right = p.right.clone();
        right.coaction = LinMap::from_fn(2, 4, |y| crate::CoeffVector::unit(4, y));
        let bad = PhiCompatPair::new(yd, right, p.phi.clone()).unwrap();
        assert_eq!(verify_phi_compat(&bad, &opts()).failing(), vec!["phi.coaction"]);
    }

    #[test]
    fn theta_scaling_is_harmless_but_conjugation_is_not() {
        // y ↦ −y commutes with every structure map of the H₄ instance
        let yd = sweedler_yd();
        let q = theta_from_phi(&pair(&yd)).unwrap();
        let flip = LinMap::from_fn(2, 2, |i| if i == 1 { crate::CoeffVector::unit(2, 1).neg() } else { crate::CoeffVector::unit(2, 0) });
        let flipped = ThetaCompatPair::new(q.left.clone(), q.right.clone(), q.theta.compose(&flip)).unwrap();
        assert!(verify_theta_compat(&flipped, &opts()).passed());
        // conjugation by (12) on kS₃ does not commute with the conjugation action
        let g = FiniteGroup::s3();
        let q = theta_from_phi(&pair(&adjoint_group_yd(&g))).unwrap();
        let conj = LinMap::from_fn(6, 6, |x| crate::CoeffVector::unit(6, g.conj(1, x)));
        let bad = ThetaCompatPair::new(q.left.clone(), q.right.clone(), q.theta.compose(&conj)).unwrap();
        let f = verify_theta_compat(&bad, &opts());
        assert!(f.get("theta.antihom").unwrap().passed);
        assert!(!f.get("theta.action").unwrap().passed);
    }

    #[test]
    fn converse_rejects_moved_h() {
        let g = FiniteGroup::s3();
        let p = pair(&adjoint_group_yd(&g));
        let maps = build_maps_phi(&p).unwrap();
        let hr = &maps.hr;
        // conjugation by (12)♯1 is an automorphism of H♯R that moves H
        let t = hr.embed_first.column(1).clone();
        let conj = LinMap::from_fn(hr.dim(), hr.dim(), |k| hr.mul(&hr.mul(&t, &hr.basis(k)), &t));
        let e = converse_diagnostic(&p.left, &p.right, &conj.compose(&maps.psi), &opts()).unwrap_err();
        assert_eq!(e, crate::Error::InvalidHypothesis("Psi(f♯1) = 1♯f".into()));
    }
}
