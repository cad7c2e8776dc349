//! Verification suites over an instance. Every constituent failure, including a
//! builder error, becomes a failed check; nothing here returns early.

use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use scalext_core::algebroid::{canonical_smash_section, LuHopfAlgebroid, SymmetricHopfAlgebroid};
use scalext_core::catalog::InstanceDescriptor;
use scalext_core::check::{compare_maps, CheckOptions, CheckReport, CheckSuite};
use scalext_core::hopfcore::validate_hopf;
use scalext_core::scalarext::{
    build_maps_phi, build_maps_theta, compare_bundles, converse_diagnostic, cross_checks, left_scalar_ext_unchecked, paired_yd_from_left, paired_yd_from_right,
    phi_from_theta, phi_identities, right_scalar_ext_unchecked, symmetric_hopf_via_phi, symmetric_hopf_via_theta, tau_inverse, tau_prime, tau_prime_inverse,
    theta_from_phi, theta_identities, verify_maps_phi, verify_maps_theta, verify_phi_compat, verify_tau_antihom, verify_tau_prime_antihom, verify_theta_compat,
    PairingIso, SymmetricBundle,
};
use scalext_core::smash::{build_smash_hr, build_smash_lh, smash_yd_condition_hr, smash_yd_condition_lh};
use scalext_core::{ExactScalar, LinMap};

pub const SUITES: [&str; 7] = ["hopf", "yd", "bialgebroid", "lu", "symmetric", "theorems", "all"];

/// The suites `all` expands to, in order.
const PARTS: [&str; 6] = ["hopf", "yd", "bialgebroid", "lu", "symmetric", "theorems"];

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub checks: CheckSuite,
    /// Wall time of each stage, in run order. Not part of the deterministic report.
    pub stages: Vec<(String, Duration)>,
}

fn failed(name: &str, e: impl Display) -> CheckSuite {
    let mut s = CheckSuite::new();
    s.push(CheckReport::fail(name, e.to_string()));
    s
}

struct Runner<'a> {
    d: &'a InstanceDescriptor,
    opts: CheckOptions,
    out: CheckSuite,
    stages: Vec<(String, Duration)>,
}

impl Runner<'_> {
    fn stage(&mut self, name: &str, f: impl FnOnce(&InstanceDescriptor, &CheckOptions) -> CheckSuite) {
        let t = Instant::now();
        let s = match catch_unwind(AssertUnwindSafe(|| f(self.d, &self.opts))) {
            Ok(s) => s,
            Err(p) => {
                let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
                failed("internal", format!("verifier aborted: {msg}"))
            }
        };
        self.stages.push((name.to_string(), t.elapsed()));
        self.out.extend_prefixed(name, s);
    }
}

/// Runs `suite` on `d`; unknown suite names are the caller's problem and yield an empty run.
pub fn run_suite(d: &InstanceDescriptor, suite: &str, opts: &CheckOptions) -> SuiteRun {
    let mut r = Runner { d, opts: *opts, out: CheckSuite::new(), stages: Vec::new() };
    let parts: Vec<&str> = if suite == "all" { PARTS.to_vec() } else { vec![suite] };
    for p in parts {
        match p {
            "hopf" => r.stage("hopf", hopf_suite),
            "yd" => r.stage("yd", yd_suite),
            "bialgebroid" => {
                r.stage("bialgebroid.left", left_bialgebroid);
                r.stage("bialgebroid.right", right_bialgebroid);
            }
            "lu" => r.stage("lu", lu_suite),
            "symmetric" => r.stage("symmetric", symmetric_suite),
            "theorems" => {
                r.stage("theorems.antihom", antihom_sweep);
                r.stage("theorems.phi", theorem_phi);
                r.stage("theorems.haha", theorem_haha);
                r.stage("theorems.barphi", theorem_barphi);
                r.stage("theorems.compa", theorem_compa);
                r.stage("theorems.obrat", theorem_obrat);
                r.stage("theorems.paired", theorem_paired);
            }
            _ => {}
        }
    }
    SuiteRun { checks: r.out, stages: r.stages }
}

fn hopf_suite(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    CheckSuite { checks: validate_hopf(&d.hopf, o) }
}

fn yd_suite(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let (l, r) = (&d.left_yd, &d.right_yd);
    let mut s = CheckSuite::new();
    s.extend_prefixed("left", l.verify_all(o));
    s.push(smash_yd_condition_lh(&build_smash_lh(l), l, o).renamed("left.smash_yd_condition"));
    s.extend_prefixed("right", r.verify_all(o));
    s.push(smash_yd_condition_hr(&build_smash_hr(r), r, o).renamed("right.smash_yd_condition"));
    s
}

/// The bialgebroid axioms next to the YD data they are equivalent to.
fn bialgebroid_checks(yd: CheckSuite, axioms: CheckSuite, quotient: (usize, usize)) -> CheckSuite {
    let mut s = CheckSuite::new();
    for name in ["yd_condition", "braided_commutativity"] {
        s.push(yd.get(name).cloned().unwrap_or_else(|| CheckReport::fail(name, "not evaluated")));
    }
    let (got, want) = quotient;
    s.push(CheckReport::from_bool("quotient_dim", got == want, format!("balanced tensor has dimension {got}, expected {want}")));
    let iff = yd.passed() == axioms.passed();
    s.checks.extend(axioms.checks);
    s.push(CheckReport::from_bool("iff", iff, "YD verdict and bialgebroid verdict disagree"));
    s
}

fn left_bialgebroid(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let l = &d.left_yd;
    let b = left_scalar_ext_unchecked(l).bialgebroid;
    let want = l.adim() * l.hdim() * l.hdim();
    bialgebroid_checks(l.verify_all(o), b.verify(o), (b.tensor.dim(), want))
}

fn right_bialgebroid(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let r = &d.right_yd;
    let b = right_scalar_ext_unchecked(r).bialgebroid;
    let want = r.adim() * r.hdim() * r.hdim();
    bialgebroid_checks(r.verify_all(o), b.verify(o), (b.tensor.dim(), want))
}

fn lu_suite(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let ext = left_scalar_ext_unchecked(&d.left_yd);
    let gamma = match canonical_smash_section(&ext.bialgebroid, &ext.smash) {
        Ok(g) => g,
        Err(e) => return failed("section", e),
    };
    let tau = d.tau(&ext.smash);
    match LuHopfAlgebroid::new(ext.bialgebroid, tau, gamma) {
        Ok(h) => h.verify(o),
        Err(e) => failed("build", e),
    }
}

/// The φ-route bundle with τ replaced by the override, transported to H♯R through the iso.
fn bundle_with_tau(d: &InstanceDescriptor) -> Result<SymmetricBundle, scalext_core::Error> {
    let mut b = symmetric_hopf_via_phi(&d.phi_pair()?)?;
    if let Some(t) = &d.tau_override {
        b.on_lh = SymmetricHopfAlgebroid::new(b.on_lh.left.clone(), b.on_lh.right.clone(), t.clone())?;
        let t_hr = b.iso.compose(t).compose(&b.iso_inv);
        b.on_hr = SymmetricHopfAlgebroid::new(b.on_hr.left.clone(), b.on_hr.right.clone(), t_hr)?;
    }
    Ok(b)
}

fn symmetric_suite(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    match bundle_with_tau(d) {
        Ok(b) => {
            let mut s = CheckSuite::new();
            s.extend_prefixed("lh", b.on_lh.verify(o));
            s.extend_prefixed("hr", b.on_hr.verify(o));
            s
        }
        Err(e) => failed("build", e),
    }
}

fn antihom_sweep(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let (lh, hr) = (build_smash_lh(&d.left_yd), build_smash_hr(&d.right_yd));
    let mut s = verify_tau_antihom(&d.left_yd, &lh, &d.tau(&lh), o);
    s.checks.extend(verify_tau_prime_antihom(&d.right_yd, &hr, &tau_prime(&d.right_yd, &hr), o).checks);
    s
}

fn theorem_phi(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let p = match d.phi_pair() {
        Ok(p) => p,
        Err(e) => return failed("compat", e),
    };
    let mut s = CheckSuite::new();
    s.extend_prefixed("compat", verify_phi_compat(&p, o));
    match build_maps_phi(&p) {
        Ok(m) => s.extend_prefixed("maps", verify_maps_phi(&p.left, &p.right, &m, o)),
        Err(e) => s.push(CheckReport::fail("maps", e.to_string())),
    }
    s
}

fn theorem_haha(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let p = match d.phi_pair() {
        Ok(p) => p,
        Err(e) => return failed("build", e),
    };
    match symmetric_hopf_via_phi(&p) {
        Ok(b) => {
            let mut s = cross_checks(&b, o);
            s.checks.extend(phi_identities(&b, &p.phi, &p.phi_inv, o).checks);
            s
        }
        Err(e) => failed("build", e),
    }
}

fn theorem_barphi(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let q = match d.phi_pair().and_then(|p| theta_from_phi(&p)) {
        Ok(q) => q,
        Err(e) => return failed("theta_from_phi", e),
    };
    let mut s = CheckSuite::new();
    s.extend_prefixed("compat", verify_theta_compat(&q, o));
    match build_maps_theta(&q) {
        Ok(m) => s.extend_prefixed("maps", verify_maps_theta(&q.left, &q.right, &m, o)),
        Err(e) => s.push(CheckReport::fail("maps", e.to_string())),
    }
    match symmetric_hopf_via_theta(&q) {
        Ok(b) => {
            let mut t = cross_checks(&b, o);
            t.checks.extend(theta_identities(&b, &q.theta, &q.theta_inv, o).checks);
            s.extend_prefixed("bundle", t);
        }
        Err(e) => s.push(CheckReport::fail("bundle", e.to_string())),
    }
    s
}

fn theorem_compa(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let p = match d.phi_pair() {
        Ok(p) => p,
        Err(e) => return failed("build", e),
    };
    let mut s = CheckSuite::new();
    let q = match theta_from_phi(&p) {
        Ok(q) => q,
        Err(e) => return failed("theta_from_phi", e),
    };
    match phi_from_theta(&q) {
        Ok(p2) => s.push(compare_maps("phi_roundtrip", o, &p2.phi, &p.phi)),
        Err(e) => s.push(CheckReport::fail("phi_roundtrip", e.to_string())),
    }
    match phi_from_theta(&q).and_then(|p2| theta_from_phi(&p2)) {
        Ok(q2) => s.push(compare_maps("theta_roundtrip", o, &q2.theta, &q.theta)),
        Err(e) => s.push(CheckReport::fail("theta_roundtrip", e.to_string())),
    }
    match (symmetric_hopf_via_phi(&p), symmetric_hopf_via_theta(&q)) {
        (Ok(a), Ok(b)) => s.extend_prefixed("bundles", compare_bundles(&a, &b, o)),
        (Err(e), _) | (_, Err(e)) => s.push(CheckReport::fail("bundles", e.to_string())),
    }
    s
}

/// Rejection of a bad Ψ, as a check: passes when the diagnostic refuses it naming `hypothesis`.
fn rejects(name: &str, d: &InstanceDescriptor, psi: &LinMap, hypothesis: &str, o: &CheckOptions) -> CheckReport {
    match converse_diagnostic(&d.left_yd, &d.right_yd, psi, o) {
        Err(scalext_core::Error::InvalidHypothesis(h)) if h == hypothesis => CheckReport::pass(name, 1),
        Err(e) => CheckReport::fail(name, format!("rejected for another reason: {e}")),
        Ok(_) => CheckReport::fail(name, "accepted"),
    }
}

fn theorem_obrat(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let maps = match d.phi_pair().and_then(|p| build_maps_phi(&p)) {
        Ok(m) => m,
        Err(e) => return failed("maps", e),
    };
    let mut s = match converse_diagnostic(&d.left_yd, &d.right_yd, &maps.psi, o) {
        Ok(s) => s,
        Err(e) => failed("hypotheses", e),
    };
    let dim = maps.psi.src_dim();
    s.push(rejects("rejects_singular", d, &LinMap::zero(dim, dim), "Psi is invertible", o));
    s.push(rejects("rejects_scaled", d, &maps.psi.scale(&ExactScalar::from_int(2)), "Psi is an algebra homomorphism", o));
    s
}

fn theorem_paired(d: &InstanceDescriptor, o: &CheckOptions) -> CheckSuite {
    let (l, r) = (&d.left_yd, &d.right_yd);
    let mut s = CheckSuite::new();
    let theta = scalext_core::exactla::inverse(&d.phi);
    let mut isos = vec![("phi", PairingIso::Phi(d.phi.clone()))];
    if let Some(t) = theta {
        isos.push(("theta", PairingIso::Theta(t)));
    }
    for (tag, iso) in &isos {
        s.push(match paired_yd_from_left(l, iso).and_then(|r2| paired_yd_from_right(&r2, iso)) {
            Ok(l2) => CheckReport::from_bool(format!("{tag}.left_right_left"), l2 == *l, "recovered action or coaction differs"),
            Err(e) => CheckReport::fail(format!("{tag}.left_right_left"), e.to_string()),
        });
        s.push(match paired_yd_from_right(r, iso).and_then(|l2| paired_yd_from_left(&l2, iso)) {
            Ok(r2) => CheckReport::from_bool(format!("{tag}.right_left_right"), r2 == *r, "recovered action or coaction differs"),
            Err(e) => CheckReport::fail(format!("{tag}.right_left_right"), e.to_string()),
        });
    }
    if isos.len() == 1 {
        s.push(CheckReport::fail("theta", "phi is singular"));
    }
    let (lh, hr) = (build_smash_lh(l), build_smash_hr(r));
    let tau = d.tau(&lh);
    s.push(match tau_inverse(l, &lh) {
        Ok(ti) => {
            let id = LinMap::identity(lh.dim());
            CheckReport::combine("tau_inverse", o, vec![compare_maps("tau_inverse", o, &tau.compose(&ti), &id), compare_maps("tau_inverse", o, &ti.compose(&tau), &id)])
        }
        Err(e) => CheckReport::fail("tau_inverse", e.to_string()),
    });
    let tp = tau_prime(r, &hr);
    s.push(match tau_prime_inverse(r, &hr) {
        Ok(ti) => {
            let id = LinMap::identity(hr.dim());
            CheckReport::combine("tau_prime_inverse", o, vec![compare_maps("tau_prime_inverse", o, &tp.compose(&ti), &id), compare_maps("tau_prime_inverse", o, &ti.compose(&tp), &id)])
        }
        Err(e) => CheckReport::fail("tau_prime_inverse", e.to_string()),
    });
    s
}
