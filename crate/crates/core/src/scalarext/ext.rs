//! L♯H as a left bialgebroid over L, H♯R as a right bialgebroid over R, and the antipodes τ, τ′.

use crate::algebroid::{Bialgebroid, Side};
use crate::check::{sweep, CheckOptions, CheckSuite};
use crate::error::Result;
use crate::exactla::{Accumulator, CoeffVector, LinMap};
use crate::hopfcore::check_antihomomorphism;
use crate::smash::{build_smash_hr, build_smash_lh, SmashAlgebra};
use crate::ydstruct::{LeftRightYD, RightLeftYD};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarExtension {
    pub smash: SmashAlgebra,
    pub bialgebroid: Bialgebroid,
}

type Parts = (SmashAlgebra, LinMap, LinMap, LinMap, LinMap);

fn left_parts(yd: &LeftRightYD) -> Parts {
    let s = build_smash_lh(yd);
    let (n, m) = (yd.hdim(), yd.adim());
    let d = s.dim();
    let h = &yd.hopf;
    let source = s.embed_first.clone();
    let target = yd.coaction.clone();
    // x♯f ↦ Σ x♯f₁ ⊗ 1♯f₂
    let lift = LinMap::from_fn(d, d * d, |k| {
        let (x, f) = (k / n, k % n);
        let mut acc = Accumulator::new(d * d);
        for (f1, f2, c) in h.delta_terms(f) {
            acc.add_outer(&c, &s.basis(s.index(x, f1)), s.embed_second.column(f2));
        }
        acc.take()
    });
    let counit = LinMap::from_fn(d, m, |k| CoeffVector::unit(m, k / n).scale(&h.eps_basis(k % n)));
    (s, source, target, lift, counit)
}

/// α(x) = x♯1, β(x) = ρ(x), Δ(x♯f) = x♯f₁ ⊗ 1♯f₂, ε(x♯f) = ε(f)x.
pub fn left_scalar_ext(yd: &LeftRightYD) -> Result<ScalarExtension> {
    let (smash, a, b, lift, eps) = left_parts(yd);
    let bialgebroid = Bialgebroid::new(Side::Left, smash.total.clone(), yd.alg.clone(), a, b, lift, eps)?;
    Ok(ScalarExtension { smash, bialgebroid })
}

pub fn left_scalar_ext_unchecked(yd: &LeftRightYD) -> ScalarExtension {
    let (smash, a, b, lift, eps) = left_parts(yd);
    let bialgebroid = Bialgebroid::new_unchecked(Side::Left, smash.total.clone(), yd.alg.clone(), a, b, lift, eps).expect("shapes");
    ScalarExtension { smash, bialgebroid }
}

fn right_parts(yd: &RightLeftYD) -> Parts {
    let s = build_smash_hr(yd);
    let (n, m) = (yd.hdim(), yd.adim());
    let d = s.dim();
    let h = &yd.hopf;
    let source = s.embed_second.clone();
    let target = yd.coaction.clone();
    // f♯y ↦ Σ f₁♯1 ⊗ f₂♯y
    let lift = LinMap::from_fn(d, d * d, |k| {
        let (f, y) = (k / m, k % m);
        let mut acc = Accumulator::new(d * d);
        for (f1, f2, c) in h.delta_terms(f) {
            acc.add_outer(&c, s.embed_first.column(f1), &s.basis(s.index(y, f2)));
        }
        acc.take()
    });
    let counit = LinMap::from_fn(d, m, |k| CoeffVector::unit(m, k % m).scale(&h.eps_basis(k / m)));
    let _ = n;
    (s, source, target, lift, counit)
}

/// α′(y) = 1♯y, β′(y) = λ(y), Δ′(f♯y) = f₁♯1 ⊗ f₂♯y, ε′(f♯y) = ε(f)y.
pub fn right_scalar_ext(yd: &RightLeftYD) -> Result<ScalarExtension> {
    let (smash, a, b, lift, eps) = right_parts(yd);
    let bialgebroid = Bialgebroid::new(Side::Right, smash.total.clone(), yd.alg.clone(), a, b, lift, eps)?;
    Ok(ScalarExtension { smash, bialgebroid })
}

pub fn right_scalar_ext_unchecked(yd: &RightLeftYD) -> ScalarExtension {
    let (smash, a, b, lift, eps) = right_parts(yd);
    let bialgebroid = Bialgebroid::new_unchecked(Side::Right, smash.total.clone(), yd.alg.clone(), a, b, lift, eps).expect("shapes");
    ScalarExtension { smash, bialgebroid }
}

/// τ(a♯h) = S(h)S²(a₁) · a₀ in L♯H.
pub fn bm_tau(yd: &LeftRightYD, s: &SmashAlgebra) -> LinMap {
    let h = &yd.hopf;
    let n = yd.hdim();
    LinMap::from_fn(s.dim(), s.dim(), |k| {
        let (a, hb) = (k / n, k % n);
        let mut acc = Accumulator::new(s.dim());
        for (a0, a1, c) in yd.coact_terms(a) {
            let f = h.mul(h.s_basis(hb), h.s2_basis(a1));
            acc.add_scaled(&c, &s.mul(&s.from_hopf(&f), s.embed_first.column(a0)));
        }
        acc.take()
    })
}

/// τ′(f♯y) = y₀ · S²(y₋₁)S(f) in H♯R.
pub fn tau_prime(yd: &RightLeftYD, s: &SmashAlgebra) -> LinMap {
    let h = &yd.hopf;
    let m = yd.adim();
    LinMap::from_fn(s.dim(), s.dim(), |k| {
        let (f, y) = (k / m, k % m);
        let mut acc = Accumulator::new(s.dim());
        for (ym, y0, c) in yd.coact_terms(y) {
            let g = h.mul(h.s2_basis(ym), h.s_basis(f));
            acc.add_scaled(&c, &s.mul(s.embed_second.column(y0), &s.from_hopf(&g)));
        }
        acc.take()
    })
}

/// τ(pq) = τ(q)τ(p) on all basis pairs, and τ(a♯1) commutes with c♯1.
pub fn verify_tau_antihom(yd: &LeftRightYD, s: &SmashAlgebra, tau: &LinMap, opts: &CheckOptions) -> CheckSuite {
    let m = yd.adim();
    let mut out = CheckSuite::new();
    out.push(check_antihomomorphism("tau.antihom", opts, tau, &s.total, &s.total));
    out.push(sweep("tau.aux", opts, &[m, m], |ix| {
        let ta = tau.apply(s.embed_first.column(ix[0]));
        let c = s.embed_first.column(ix[1]);
        Some((s.mul(&ta, c), s.mul(c, &ta)))
    }));
    out
}

/// τ′ antihomomorphism sweep, and τ′(1♯y) commutes with 1♯c.
pub fn verify_tau_prime_antihom(yd: &RightLeftYD, s: &SmashAlgebra, tau: &LinMap, opts: &CheckOptions) -> CheckSuite {
    let m = yd.adim();
    let mut out = CheckSuite::new();
    out.push(check_antihomomorphism("tau_prime.antihom", opts, tau, &s.total, &s.total));
    out.push(sweep("tau_prime.aux", opts, &[m, m], |ix| {
        let ta = tau.apply(s.embed_second.column(ix[0]));
        let c = s.embed_second.column(ix[1]);
        Some((s.mul(&ta, c), s.mul(c, &ta)))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{canonical_smash_section, LuHopfAlgebroid};
    use crate::catalog::{adjoint_group_yd, adjoint_group_yd_with, dual_group_yd, sweedler_yd, FiniteGroup};
    use std::time::Instant;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn sweedler_tau_value() {
        let yd = sweedler_yd();
        let e = left_scalar_ext(&yd).unwrap();
        let s = &e.smash;
        let tau = bm_tau(&yd, s);
        // τ(y♯1) = −y♯g
        assert_eq!(tau.column(s.index(1, 0)), &s.basis(s.index(1, 1)).neg());
        assert!(verify_tau_antihom(&yd, s, &tau, &opts()).passed());
    }

    #[test]
    fn c2_values() {
        let yd = adjoint_group_yd(&FiniteGroup::cyclic(2));
        let e = left_scalar_ext(&yd).unwrap();
        let s = &e.smash;
        let tau = bm_tau(&yd, s);
        // τ(u♯e) = u♯u, and τβ(u) = α(u)
        assert_eq!(tau.column(s.index(1, 0)), &s.basis(s.index(1, 1)));
        assert_eq!(tau.apply(e.bialgebroid.target.column(1)), s.basis(s.index(1, 0)));
        assert_eq!(e.bialgebroid.tensor.dim(), 8);
        let gamma = canonical_smash_section(&e.bialgebroid, s).unwrap();
        // γ(π(u♯e ⊗ u♯e)) = e♯u ⊗ 1♯e
        let v = s.basis(s.index(1, 0)).tensor(&s.basis(s.index(1, 0)));
        let expect = s.basis(s.index(0, 1)).tensor(&s.basis(s.index(0, 0)));
        assert_eq!(gamma.apply(&e.bialgebroid.tensor.project(&v)), expect);
    }

    #[test]
    fn s3_left_bialgebroid_and_lu() {
        let g = FiniteGroup::s3();
        for yd in [adjoint_group_yd(&g), dual_group_yd(&g)] {
            let t0 = Instant::now();
            let e = left_scalar_ext(&yd).unwrap();
            assert_eq!(e.bialgebroid.tensor.dim(), 6 * 36);
            let t1 = Instant::now();
            let s = e.bialgebroid.verify(&opts());
            let t2 = Instant::now();
            assert!(s.passed(), "{:?}", s.failing());
            let tau = bm_tau(&yd, &e.smash);
            let gamma = canonical_smash_section(&e.bialgebroid, &e.smash).unwrap();
            let lu = LuHopfAlgebroid::new(e.bialgebroid.clone(), tau, gamma).unwrap();
            let l = lu.verify(&opts());
            assert!(l.passed(), "{:?}", l.failing());
            eprintln!("build {:?} verify {:?} lu {:?}", t1 - t0, t2 - t1, t2.elapsed());
        }
    }

    #[test]
    fn twisted_coaction_fails_takeuchi() {
        let g = FiniteGroup::s3();
        let yd = adjoint_group_yd_with(&g, |x| g.conj(1, g.inverse[x]));
        assert!(left_scalar_ext(&yd).is_err());
        let e = left_scalar_ext_unchecked(&yd);
        let s = e.bialgebroid.verify(&CheckOptions::with_cap(1));
        assert!(s.failing().contains(&"takeuchi.factorizes"), "{:?}", s.failing());
    }
}
