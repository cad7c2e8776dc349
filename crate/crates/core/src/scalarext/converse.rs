//! Starting from an isomorphism Ψ: L♯H → H♯R, recover φ and θ and confirm the
//! YD conditions and compatibilities they force.

use crate::check::{compare_maps, CheckOptions, CheckReport, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{inverse, span_equal, Accumulator, LinMap};
use crate::hopfcore::{check_antihomomorphism, check_homomorphism};
use crate::scalarext::compat::{verify_phi_compat, verify_theta_compat, PhiCompatPair, ThetaCompatPair};
use crate::scalarext::ext::{bm_tau, tau_prime};
use crate::scalarext::haha::{compare_bundles, symmetric_hopf_via_phi, symmetric_hopf_via_theta};
use crate::smash::{build_smash_hr, build_smash_lh};
use crate::ydstruct::{LeftRightYD, RightLeftYD};

fn hypothesis(s: &mut CheckSuite, r: CheckReport, what: &str) -> Result<()> {
    let ok = r.passed;
    s.push(r);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidHypothesis(what.into()))
    }
}

fn pick(suite: &CheckSuite, name: &str) -> CheckReport {
    suite.get(name).cloned().unwrap_or_else(|| CheckReport::fail(name, "not evaluated"))
}

/// Checks the hypotheses on Ψ (any failure is an error naming it), extracts
/// φ = (ε⊗id)Ψ(−♯1) and θ = (id⊗ε)Ψ⁻¹(1♯−), then reports each conclusion.
pub fn converse_diagnostic(l: &LeftRightYD, r: &RightLeftYD, psi: &LinMap, opts: &CheckOptions) -> Result<CheckSuite> {
    if l.hopf != r.hopf {
        return Err(Error::InvalidHypothesis("both module algebras are over the same Hopf algebra".into()));
    }
    let (n, m) = (l.hdim(), l.adim());
    let (lh, hr) = (build_smash_lh(l), build_smash_hr(r));
    let d = lh.dim();
    if r.adim() != m || psi.src_dim() != d || psi.dst_dim() != hr.dim() {
        return Err(Error::dims("Psi", d, psi.src_dim()));
    }
    let h = &l.hopf;
    let mut s = CheckSuite::new();
    hypothesis(&mut s, check_antihomomorphism("hyp.rho_antihom", opts, &l.coaction, &l.alg, &lh.total), "rho is an antihomomorphism")?;
    hypothesis(&mut s, check_antihomomorphism("hyp.lambda_antihom", opts, &r.coaction, &r.alg, &hr.total), "lambda is an antihomomorphism")?;
    let psi_inv = inverse(psi);
    hypothesis(&mut s, CheckReport::from_bool("hyp.psi_invertible", psi_inv.is_some(), "Ψ is singular"), "Psi is invertible")?;
    let psi_inv = psi_inv.expect("checked");
    hypothesis(&mut s, check_homomorphism("hyp.psi_hom", opts, psi, &lh.total, &hr.total), "Psi is an algebra homomorphism")?;
    hypothesis(&mut s, compare_maps("hyp.psi_fixes_h", opts, &psi.compose(&lh.embed_second), &hr.embed_first), "Psi(f♯1) = 1♯f")?;
    let psi_l = psi.compose(&lh.embed_first);
    let psi_inv_r = psi_inv.compose(&hr.embed_second);
    let im_l = span_equal(d, psi_l.columns(), r.coaction.columns());
    hypothesis(&mut s, CheckReport::from_bool("hyp.psi_image_l", im_l, "Ψ(L♯1) ≠ Im λ"), "Psi(L♯1) = Im lambda")?;
    let im_r = span_equal(d, psi_inv_r.columns(), l.coaction.columns());
    hypothesis(&mut s, CheckReport::from_bool("hyp.psi_inv_image_r", im_r, "Ψ⁻¹(1♯R) ≠ Im ρ"), "Psi^-1(1♯R) = Im rho")?;

    let phi = LinMap::from_fn(m, m, |x| {
        let mut acc = Accumulator::new(m);
        for (k, c) in psi_l.column(x).iter() {
            acc.add_at(k % m, &(c * &h.eps_basis(k / m)));
        }
        acc.take()
    });
    let theta = LinMap::from_fn(m, m, |y| {
        let mut acc = Accumulator::new(m);
        for (k, c) in psi_inv_r.column(y).iter() {
            acc.add_at(k / n, &(c * &h.eps_basis(k % n)));
        }
        acc.take()
    });
    s.push(compare_maps("square.phi", opts, &r.coaction.compose(&phi), &psi_l));
    s.push(compare_maps("square.theta", opts, &l.coaction.compose(&theta), &psi_inv_r));
    s.push(l.verify_yd_condition(opts).renamed("left.yd_condition"));
    s.push(r.verify_yd_condition(opts).renamed("right.yd_condition"));

    let pair_phi = PhiCompatPair::new(l.clone(), r.clone(), phi);
    let pair_theta = ThetaCompatPair::new(l.clone(), r.clone(), theta);
    let (pc, tc) = match (&pair_phi, &pair_theta) {
        (Ok(p), Ok(q)) => (verify_phi_compat(p, opts), verify_theta_compat(q, opts)),
        _ => {
            s.push(CheckReport::fail("phi.antiiso", "extracted φ or θ is singular"));
            return Ok(s);
        }
    };
    for name in ["phi.antihom", "phi.action"] {
        s.push(pick(&pc, name));
    }
    for name in ["theta.antihom", "theta.action"] {
        s.push(pick(&tc, name));
    }

    let agree = compare_maps("tau.agree", opts, &psi.compose(&bm_tau(l, &lh)), &tau_prime(r, &hr).compose(psi));
    let agreed = agree.passed;
    s.push(agree);
    if !agreed {
        s.push(CheckReport::fail("coaction.compat", "τ and τ′ do not agree through Ψ"));
        return Ok(s);
    }
    s.push(pick(&pc, "phi.coaction"));
    s.push(pick(&tc, "theta.coaction"));
    let (p, q) = (pair_phi.expect("checked"), pair_theta.expect("checked"));
    let bundles = match (symmetric_hopf_via_phi(&p), symmetric_hopf_via_theta(&q)) {
        (Ok(a), Ok(b)) => {
            let mut c = compare_bundles(&a, &b, opts).summarize("bundles.equal", opts);
            if c.passed && a.iso != *psi {
                c = CheckReport::fail("bundles.equal", "bundle isomorphism differs from Ψ");
            }
            c
        }
        (Err(e), _) | (_, Err(e)) => CheckReport::fail("bundles.equal", e.to_string()),
    };
    s.push(bundles);
    Ok(s)
}
