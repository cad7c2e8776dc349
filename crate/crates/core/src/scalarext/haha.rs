//! The symmetric Hopf algebroid on L♯H ≅ H♯R, in both smash presentations,
//! built from a φ-compatible or a θ-compatible pair.

use crate::algebroid::{Bialgebroid, Side, SymmetricHopfAlgebroid};
use crate::check::{compare_maps, sweep, CheckOptions, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{map_factor, Accumulator, CoeffVector, LinMap};
use crate::scalarext::compat::{verify_phi_compat, verify_theta_compat, PhiCompatPair, ThetaCompatPair};
use crate::scalarext::ext::{bm_tau, left_scalar_ext, right_scalar_ext, tau_prime};
use crate::scalarext::maps::{build_maps_phi, build_maps_theta};
use crate::smash::SmashAlgebra;
use crate::ydstruct::{LeftRightYD, RightLeftYD};

/// One symmetric Hopf algebroid written on L♯H and on H♯R, with the
/// isomorphism `iso: L♯H → H♯R` relating the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBundle {
    pub lh: SmashAlgebra,
    pub hr: SmashAlgebra,
    pub on_lh: SymmetricHopfAlgebroid,
    pub on_hr: SymmetricHopfAlgebroid,
    pub iso: LinMap,
    pub iso_inv: LinMap,
}

fn hypothesis(suite: CheckSuite, what: &str) -> Result<()> {
    if suite.passed() {
        Ok(())
    } else {
        Err(Error::InvalidHypothesis(format!("{what} ({})", suite.failing().join(", "))))
    }
}

fn postcondition(suite: CheckSuite) -> Result<()> {
    if suite.passed() {
        Ok(())
    } else {
        Err(Error::PostconditionFailed(suite.failing().join(", ")))
    }
}

fn check_yd(l: &LeftRightYD, r: &RightLeftYD, opts: &CheckOptions) -> Result<()> {
    hypothesis(l.verify_all(opts), "left module algebra is braided commutative YD")?;
    hypothesis(r.verify_all(opts), "right module algebra is braided commutative YD")
}

fn combine_terms(d: usize, terms: impl IntoIterator<Item = (crate::exactla::ExactScalar, CoeffVector)>) -> CoeffVector {
    let mut acc = Accumulator::new(d);
    for (c, v) in terms {
        acc.add_scaled(&c, &v);
    }
    acc.take()
}

/// The scalar-extension sides of both presentations, which do not depend on the route.
struct Sides {
    left_lh: Bialgebroid,
    right_hr: Bialgebroid,
    tau: LinMap,
    tau_p: LinMap,
}

fn sides(l: &LeftRightYD, r: &RightLeftYD, lh: &SmashAlgebra, hr: &SmashAlgebra) -> Result<Sides> {
    let left_lh = left_scalar_ext(l)?.bialgebroid;
    let right_hr = right_scalar_ext(r)?.bialgebroid;
    Ok(Sides { left_lh, right_hr, tau: bm_tau(l, lh), tau_p: tau_prime(r, hr) })
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    s: Sides,
    l: &LeftRightYD,
    r: &RightLeftYD,
    lh: SmashAlgebra,
    hr: SmashAlgebra,
    lh_right: (LinMap, LinMap, LinMap),
    hr_left: (LinMap, LinMap, LinMap),
    iso: LinMap,
    iso_inv: LinMap,
) -> Result<SymmetricBundle> {
    let (a_r, b_r, e_r) = lh_right;
    let right_lh = Bialgebroid::new(Side::Right, lh.total.clone(), r.alg.clone(), a_r, b_r, s.left_lh.coproduct_lift.clone(), e_r)?;
    let (a_l, b_l, e_l) = hr_left;
    let left_hr = Bialgebroid::new(Side::Left, hr.total.clone(), l.alg.clone(), a_l, b_l, s.right_hr.coproduct_lift.clone(), e_l)?;
    let on_lh = SymmetricHopfAlgebroid::new(s.left_lh, right_lh, s.tau)?;
    let on_hr = SymmetricHopfAlgebroid::new(left_hr, s.right_hr, s.tau_p)?;
    Ok(SymmetricBundle { lh, hr, on_lh, on_hr, iso, iso_inv })
}

/// Both presentations from a φ-compatible pair. Verifies the transport identities
/// and φ = ε_R∘α_L, φ⁻¹ = ε_L∘β_R before returning.
pub fn symmetric_hopf_via_phi(p: &PhiCompatPair) -> Result<SymmetricBundle> {
    let opts = CheckOptions::with_cap(1);
    let (l, r) = (&p.left, &p.right);
    check_yd(l, r, &opts)?;
    hypothesis(verify_phi_compat(p, &opts), "compatible via phi")?;
    let maps = build_maps_phi(p)?;
    let (lh, hr) = (maps.lh.clone(), maps.hr.clone());
    let h = &l.hopf;
    let (n, m) = (l.hdim(), l.adim());
    let d = lh.dim();
    let s = sides(l, r, &lh, &hr)?;

    // on L♯H: α_R(y) = S(y₋₁)·φ⁻¹(y₀), β_R(y) = φ⁻¹(y)♯1, ε_R(x♯f) = φ(x)◁f
    let alpha_r = maps.psi_inv.compose(&hr.embed_second);
    let beta_r = lh.embed_first.compose(&p.phi_inv);
    let eps_r = LinMap::from_fn(d, m, |k| r.act(p.phi.column(k / n), &h.basis(k % n)));
    // on H♯R: α′_L(x) = λ(φ(x)), β′_L(x) = φ(x₀)◁x₁, ε′_L(f♯y) = fS(y₋₁)▷φ⁻¹(y₀)
    let alpha_l = r.coaction.compose(&p.phi);
    let beta_l = LinMap::from_fn(m, d, |x| {
        let v = combine_terms(m, l.coact_terms(x).into_iter().map(|(x0, x1, c)| (c, r.act(p.phi.column(x0), &h.basis(x1)))));
        hr.from_alg(&v)
    });
    let eps_l = LinMap::from_fn(d, m, |k| {
        let (f, y) = (k / m, k % m);
        combine_terms(m, r.coact_terms(y).into_iter().map(|(ym, y0, c)| (c, l.act(&h.mul(&h.basis(f), h.s_basis(ym)), p.phi_inv.column(y0)))))
    });
    let b = assemble(s, l, r, lh, hr, (alpha_r, beta_r, eps_r), (alpha_l, beta_l, eps_l), maps.psi, maps.psi_inv)?;
    let mut post = cross_checks(&b, &opts);
    for c in phi_identities(&b, &p.phi, &p.phi_inv, &opts).checks {
        post.push(c);
    }
    postcondition(post)?;
    Ok(b)
}

/// Both presentations from a θ-compatible pair; the isomorphism is Ψ̄⁻¹.
pub fn symmetric_hopf_via_theta(q: &ThetaCompatPair) -> Result<SymmetricBundle> {
    let opts = CheckOptions::with_cap(1);
    let (l, r) = (&q.left, &q.right);
    check_yd(l, r, &opts)?;
    hypothesis(verify_theta_compat(q, &opts), "compatible via theta")?;
    let maps = build_maps_theta(q)?;
    let (lh, hr) = (maps.lh.clone(), maps.hr.clone());
    let h = &l.hopf;
    let (n, m) = (l.hdim(), l.adim());
    let d = lh.dim();
    let s = sides(l, r, &lh, &hr)?;

    // on L♯H: α_R(y) = ρ(θ(y)), β_R(y) = y₋₁▷θ(y₀), ε_R(x♯f) = θ⁻¹(x₀)◁S(x₁)f
    let alpha_r = l.coaction.compose(&q.theta);
    let beta_r = LinMap::from_fn(m, d, |y| {
        let v = combine_terms(m, r.coact_terms(y).into_iter().map(|(ym, y0, c)| (c, l.act(&h.basis(ym), q.theta.column(y0)))));
        lh.from_alg(&v)
    });
    let eps_r = LinMap::from_fn(d, m, |k| {
        let (x, f) = (k / n, k % n);
        combine_terms(m, l.coact_terms(x).into_iter().map(|(x0, x1, c)| (c, r.act(q.theta_inv.column(x0), &h.mul(h.s_basis(x1), &h.basis(f))))))
    });
    // on H♯R: α′_L(x) = θ⁻¹(x₀)·S(x₁), β′_L(x) = 1♯θ⁻¹(x), ε′_L(f♯y) = f▷θ(y)
    let alpha_l = maps.psi_bar_inv.compose(&lh.embed_first);
    let beta_l = hr.embed_second.compose(&q.theta_inv);
    let eps_l = LinMap::from_fn(d, m, |k| l.act(&h.basis(k / m), q.theta.column(k % m)));
    let b = assemble(s, l, r, lh, hr, (alpha_r, beta_r, eps_r), (alpha_l, beta_l, eps_l), maps.psi_bar_inv, maps.psi_bar)?;
    let mut post = cross_checks(&b, &opts);
    for c in theta_identities(&b, &q.theta, &q.theta_inv, &opts).checks {
        post.push(c);
    }
    postcondition(post)?;
    Ok(b)
}

/// The two presentations agree through `iso`: every structure map and both
/// coproducts are transported onto each other.
pub fn cross_checks(b: &SymmetricBundle, opts: &CheckOptions) -> CheckSuite {
    let (x, y) = (&b.on_lh, &b.on_hr);
    let psi = &b.iso;
    let d = b.lh.dim();
    let mut s = CheckSuite::new();
    s.push(compare_maps("cross.alpha_l", opts, &psi.compose(&x.left.source), &y.left.source));
    s.push(compare_maps("cross.beta_l", opts, &psi.compose(&x.left.target), &y.left.target));
    s.push(compare_maps("cross.alpha_r", opts, &psi.compose(&x.right.source), &y.right.source));
    s.push(compare_maps("cross.beta_r", opts, &psi.compose(&x.right.target), &y.right.target));
    s.push(compare_maps("cross.eps_l", opts, &y.left.counit.compose(psi), &x.left.counit));
    s.push(compare_maps("cross.eps_r", opts, &y.right.counit.compose(psi), &x.right.counit));
    s.push(compare_maps("cross.tau", opts, &psi.compose(&x.tau), &y.tau.compose(psi)));
    s.push(compare_maps("cross.iso_inverse", opts, &b.iso_inv.compose(psi), &LinMap::identity(d)));
    for (name, bx, by) in [("cross.delta_l", &x.left, &y.left), ("cross.delta_r", &x.right, &y.right)] {
        s.push(sweep(name, opts, &[d], |ix| {
            let moved = map_factor(&map_factor(bx.coproduct_lift.column(ix[0]), &[d, d], 0, psi), &[d, d], 1, psi);
            let direct = by.coproduct_lift.apply(psi.column(ix[0]));
            Some((by.tensor.project(&moved), by.tensor.project(&direct)))
        }));
    }
    s
}

/// φ = ε_R∘α_L and φ⁻¹ = ε_L∘β_R in both presentations.
pub fn phi_identities(b: &SymmetricBundle, phi: &LinMap, phi_inv: &LinMap, opts: &CheckOptions) -> CheckSuite {
    let mut s = CheckSuite::new();
    for (tag, h) in [("lh", &b.on_lh), ("hr", &b.on_hr)] {
        s.push(compare_maps(format!("phi.eps_r_alpha_l.{tag}"), opts, &h.right.counit.compose(&h.left.source), phi));
        s.push(compare_maps(format!("phi_inv.eps_l_beta_r.{tag}"), opts, &h.left.counit.compose(&h.right.target), phi_inv));
    }
    s
}

/// θ = ε_L∘α_R and θ⁻¹ = ε_R∘β_L in both presentations.
pub fn theta_identities(b: &SymmetricBundle, theta: &LinMap, theta_inv: &LinMap, opts: &CheckOptions) -> CheckSuite {
    let mut s = CheckSuite::new();
    for (tag, h) in [("lh", &b.on_lh), ("hr", &b.on_hr)] {
        s.push(compare_maps(format!("theta.eps_l_alpha_r.{tag}"), opts, &h.left.counit.compose(&h.right.source), theta));
        s.push(compare_maps(format!("theta_inv.eps_r_beta_l.{tag}"), opts, &h.right.counit.compose(&h.left.target), theta_inv));
    }
    s
}

/// Every structure map of two bundles compared matrix by matrix.
pub fn compare_bundles(a: &SymmetricBundle, b: &SymmetricBundle, opts: &CheckOptions) -> CheckSuite {
    let mut s = CheckSuite::new();
    for (tag, x, y) in [("lh", &a.on_lh, &b.on_lh), ("hr", &a.on_hr, &b.on_hr)] {
        for (side, p, q) in [("left", &x.left, &y.left), ("right", &x.right, &y.right)] {
            s.push(compare_maps(format!("{tag}.{side}.source"), opts, &p.source, &q.source));
            s.push(compare_maps(format!("{tag}.{side}.target"), opts, &p.target, &q.target));
            s.push(compare_maps(format!("{tag}.{side}.coproduct"), opts, &p.coproduct_lift, &q.coproduct_lift));
            s.push(compare_maps(format!("{tag}.{side}.counit"), opts, &p.counit, &q.counit));
        }
        s.push(compare_maps(format!("{tag}.tau"), opts, &x.tau, &y.tau));
    }
    s.push(compare_maps("iso", opts, &a.iso, &b.iso));
    s
}
