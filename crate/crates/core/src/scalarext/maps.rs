//! The comparison maps between L♯H and H♯R.

use crate::check::{compare_maps, CheckOptions, CheckReport, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{inverse, span_equal, Accumulator, LinMap};
use crate::hopfcore::{check_antihomomorphism, check_homomorphism, check_inverse_pair};
use crate::scalarext::compat::{PhiCompatPair, ThetaCompatPair};
use crate::scalarext::ext::{bm_tau, tau_prime};
use crate::smash::{build_smash_hr, build_smash_lh, SmashAlgebra};
use crate::ydstruct::{LeftRightYD, RightLeftYD};

/// Φ, Ψ, Ψ⁻¹ together with the two smash algebras they connect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMaps {
    pub lh: SmashAlgebra,
    pub hr: SmashAlgebra,
    /// Φ(x♯f) = S(f)♯φ(x), an antihomomorphism L♯H → H♯R.
    pub big_phi: LinMap,
    pub psi: LinMap,
    pub psi_inv: LinMap,
}

/// Φ̄, Ψ̄, Ψ̄⁻¹ for a θ-compatible pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMaps {
    pub lh: SmashAlgebra,
    pub hr: SmashAlgebra,
    /// Φ̄(f♯y) = θ(y)♯S(f), an antihomomorphism H♯R → L♯H.
    pub big_phi_bar: LinMap,
    /// Ψ̄: H♯R → L♯H.
    pub psi_bar: LinMap,
    pub psi_bar_inv: LinMap,
}

fn mutually_inverse(f: &LinMap, g: &LinMap, what: &str) -> Result<()> {
    if f.compose(g).is_identity() && g.compose(f).is_identity() {
        Ok(())
    } else {
        Err(Error::NotMutuallyInverse(what.into()))
    }
}

/// Ψ(x♯f) = λ(φ(x))·f and Ψ⁻¹(f♯y) = fS(y₋₁)·φ⁻¹(y₀); fails when they are not inverse.
pub fn build_maps_phi(p: &PhiCompatPair) -> Result<PhiMaps> {
    let (l, r) = (&p.left, &p.right);
    let h = &l.hopf;
    let (n, m) = (l.hdim(), l.adim());
    let (lh, hr) = (build_smash_lh(l), build_smash_hr(r));
    let d = lh.dim();
    let big_phi = LinMap::from_fn(d, d, |k| h.s_basis(k % n).tensor(p.phi.column(k / n)));
    let psi = LinMap::from_fn(d, d, |k| hr.mul(&r.coact(p.phi.column(k / n)), hr.embed_first.column(k % n)));
    let psi_inv = LinMap::from_fn(d, d, |k| {
        let (f, y) = (k / m, k % m);
        let mut acc = Accumulator::new(d);
        for (ym, y0, c) in r.coact_terms(y) {
            let g = h.mul(&h.basis(f), h.s_basis(ym));
            acc.add_scaled(&c, &lh.mul(&lh.from_hopf(&g), &lh.from_alg(p.phi_inv.column(y0))));
        }
        acc.take()
    });
    mutually_inverse(&psi, &psi_inv, "Psi and Psi_inv")?;
    Ok(PhiMaps { lh, hr, big_phi, psi, psi_inv })
}

/// Ψ̄(f♯y) = f·θ(y)₀♯θ(y)₁ and Ψ̄⁻¹(x♯f) = θ⁻¹(x₀)·S(x₁)f.
pub fn build_maps_theta(q: &ThetaCompatPair) -> Result<ThetaMaps> {
    let (l, r) = (&q.left, &q.right);
    let h = &l.hopf;
    let (n, m) = (l.hdim(), l.adim());
    let (lh, hr) = (build_smash_lh(l), build_smash_hr(r));
    let d = lh.dim();
    let big_phi_bar = LinMap::from_fn(d, d, |k| q.theta.column(k % m).tensor(h.s_basis(k / m)));
    let psi_bar = LinMap::from_fn(d, d, |k| lh.mul(lh.embed_second.column(k / m), &l.coact(q.theta.column(k % m))));
    let psi_bar_inv = LinMap::from_fn(d, d, |k| {
        let (x, f) = (k / n, k % n);
        let mut acc = Accumulator::new(d);
        for (x0, x1, c) in l.coact_terms(x) {
            let g = h.mul(h.s_basis(x1), &h.basis(f));
            acc.add_scaled(&c, &hr.mul(&hr.from_alg(q.theta_inv.column(x0)), &hr.from_hopf(&g)));
        }
        acc.take()
    });
    mutually_inverse(&psi_bar, &psi_bar_inv, "PsiBar and PsiBar_inv")?;
    Ok(ThetaMaps { lh, hr, big_phi_bar, psi_bar, psi_bar_inv })
}

fn image_equal(name: &str, dim: usize, a: &LinMap, b: &LinMap) -> CheckReport {
    CheckReport::from_bool(name, span_equal(dim, a.columns(), b.columns()), "column spans differ")
}

fn invertible(name: &str, f: &LinMap) -> CheckReport {
    CheckReport::from_bool(name, inverse(f).is_some(), "matrix is singular")
}

/// Every identity about Φ, Ψ, τ, τ′ as separate reports.
pub fn verify_maps_phi(l: &LeftRightYD, r: &RightLeftYD, maps: &PhiMaps, opts: &CheckOptions) -> CheckSuite {
    let (lh, hr) = (&maps.lh, &maps.hr);
    let d = lh.dim();
    let tau = bm_tau(l, lh);
    let tau_p = tau_prime(r, hr);
    let mut s = CheckSuite::new();
    s.push(check_antihomomorphism("Phi.antihom", opts, &maps.big_phi, &lh.total, &hr.total));
    s.push(check_homomorphism("Psi.hom", opts, &maps.psi, &lh.total, &hr.total));
    s.push(check_homomorphism("Psi_inv.hom", opts, &maps.psi_inv, &hr.total, &lh.total));
    s.push(check_inverse_pair("Psi.inverse", opts, &maps.psi, &maps.psi_inv));
    s.push(image_equal("Psi.image_l", d, &maps.psi.compose(&lh.embed_first), &r.coaction));
    s.push(image_equal("Psi_inv.image_r", d, &maps.psi_inv.compose(&hr.embed_second), &l.coaction));
    s.push(compare_maps("Psi.tau", opts, &maps.psi.compose(&tau), &maps.big_phi));
    s.push(compare_maps("tau_prime.Psi", opts, &tau_p.compose(&maps.psi), &maps.big_phi));
    s.push(invertible("Phi.invertible", &maps.big_phi));
    s.push(invertible("tau.invertible", &tau));
    s.push(invertible("tau_prime.invertible", &tau_p));
    s
}

/// The θ-side identities: Ψ̄ an isomorphism with the right images, τ∘Ψ̄ = Ψ̄∘τ′ = Φ̄.
pub fn verify_maps_theta(l: &LeftRightYD, r: &RightLeftYD, maps: &ThetaMaps, opts: &CheckOptions) -> CheckSuite {
    let (lh, hr) = (&maps.lh, &maps.hr);
    let d = lh.dim();
    let tau = bm_tau(l, lh);
    let tau_p = tau_prime(r, hr);
    let mut s = CheckSuite::new();
    s.push(check_antihomomorphism("PhiBar.antihom", opts, &maps.big_phi_bar, &hr.total, &lh.total));
    s.push(check_homomorphism("PsiBar.hom", opts, &maps.psi_bar, &hr.total, &lh.total));
    s.push(check_homomorphism("PsiBar_inv.hom", opts, &maps.psi_bar_inv, &lh.total, &hr.total));
    s.push(check_inverse_pair("PsiBar.inverse", opts, &maps.psi_bar, &maps.psi_bar_inv));
    s.push(image_equal("PsiBar.image_r", d, &maps.psi_bar.compose(&hr.embed_second), &l.coaction));
    s.push(image_equal("PsiBar_inv.image_l", d, &maps.psi_bar_inv.compose(&lh.embed_first), &r.coaction));
    s.push(compare_maps("tau.PsiBar", opts, &tau.compose(&maps.psi_bar), &maps.big_phi_bar));
    s.push(compare_maps("PsiBar.tau_prime", opts, &maps.psi_bar.compose(&tau_p), &maps.big_phi_bar));
    s.push(invertible("PhiBar.invertible", &maps.big_phi_bar));
    s
}
