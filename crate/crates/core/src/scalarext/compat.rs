//! Compatibility of a left-right and a right-left YD module algebra through an
//! antiisomorphism φ: L → R or θ: R → L, and the conversions between the two.

use crate::check::{sweep, CheckOptions, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{inverse, Accumulator, LinMap};
use crate::hopfcore::{check_antihomomorphism, check_inverse_pair};
use crate::ydstruct::{LeftRightYD, RightLeftYD};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiCompatPair {
    pub left: LeftRightYD,
    pub right: RightLeftYD,
    pub phi: LinMap,
    pub phi_inv: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCompatPair {
    pub left: LeftRightYD,
    pub right: RightLeftYD,
    pub theta: LinMap,
    pub theta_inv: LinMap,
}

fn pair_shapes(left: &LeftRightYD, right: &RightLeftYD, iso: &LinMap) -> Result<LinMap> {
    if left.hopf != right.hopf {
        return Err(Error::InvalidHypothesis("both module algebras are over the same Hopf algebra".into()));
    }
    let m = left.adim();
    if right.adim() != m || iso.src_dim() != m || iso.dst_dim() != m {
        return Err(Error::dims("antiisomorphism", m, iso.src_dim()));
    }
    inverse(iso).ok_or_else(|| Error::NotInvertible("antiisomorphism".into()))
}

impl PhiCompatPair {
    /// Shape checks and the inverse of φ; the compatibility itself is left to `verify_phi_compat`.
    pub fn new(left: LeftRightYD, right: RightLeftYD, phi: LinMap) -> Result<Self> {
        let phi_inv = pair_shapes(&left, &right, &phi)?;
        Ok(PhiCompatPair { left, right, phi, phi_inv })
    }
}

impl ThetaCompatPair {
    pub fn new(left: LeftRightYD, right: RightLeftYD, theta: LinMap) -> Result<Self> {
        let theta_inv = pair_shapes(&left, &right, &theta)?;
        Ok(ThetaCompatPair { left, right, theta, theta_inv })
    }
}

/// φ(f▷x) = φ(x)◁S(f) and φ(x)₋₁ ⊗ φ(x)₀ = S(x₁) ⊗ φ(x₀), plus φ being an antiisomorphism.
pub fn verify_phi_compat(p: &PhiCompatPair, opts: &CheckOptions) -> CheckSuite {
    let (l, r) = (&p.left, &p.right);
    let h = &l.hopf;
    let (n, m) = (l.hdim(), l.adim());
    let mut s = CheckSuite::new();
    s.push(check_antihomomorphism("phi.antihom", opts, &p.phi, &l.alg, &r.alg));
    s.push(check_inverse_pair("phi.inverse", opts, &p.phi, &p.phi_inv));
    s.push(sweep("phi.action", opts, &[n, m], |ix| {
        let lhs = p.phi.apply(l.act_basis(ix[0], ix[1]));
        let rhs = r.act(p.phi.column(ix[1]), h.s_basis(ix[0]));
        Some((lhs, rhs))
    }));
    s.push(sweep("phi.coaction", opts, &[m], |ix| {
        let lhs = r.coact(p.phi.column(ix[0]));
        let mut acc = Accumulator::new(n * m);
        for (x0, x1, c) in l.coact_terms(ix[0]) {
            acc.add_outer(&c, h.s_basis(x1), p.phi.column(x0));
        }
        Some((lhs, acc.take()))
    }));
    s
}

/// θ(y◁f) = S(f)▷θ(y) and θ(y)₀ ⊗ θ(y)₁ = θ(y₀) ⊗ S(y₋₁), plus θ being an antiisomorphism.
pub fn verify_theta_compat(p: &ThetaCompatPair, opts: &CheckOptions) -> CheckSuite {
    let (l, r) = (&p.left, &p.right);
    let h = &l.hopf;
    let (n, m) = (l.hdim(), l.adim());
    let mut s = CheckSuite::new();
    s.push(check_antihomomorphism("theta.antihom", opts, &p.theta, &r.alg, &l.alg));
    s.push(check_inverse_pair("theta.inverse", opts, &p.theta, &p.theta_inv));
    s.push(sweep("theta.action", opts, &[m, n], |ix| {
        let lhs = p.theta.apply(r.act_basis(ix[0], ix[1]));
        let rhs = l.act(h.s_basis(ix[1]), p.theta.column(ix[0]));
        Some((lhs, rhs))
    }));
    s.push(sweep("theta.coaction", opts, &[m], |ix| {
        let lhs = l.coact(p.theta.column(ix[0]));
        let mut acc = Accumulator::new(m * n);
        for (ym, y0, c) in r.coact_terms(ix[0]) {
            acc.add_outer(&c, p.theta.column(y0), h.s_basis(ym));
        }
        Some((lhs, acc.take()))
    }));
    s
}

fn require(suite: CheckSuite, what: &str) -> Result<()> {
    if suite.passed() {
        Ok(())
    } else {
        Err(Error::PostconditionFailed(format!("{what}: {}", suite.failing().join(", "))))
    }
}

/// θ(y) = S(y₋₁)▷φ⁻¹(y₀).
pub fn theta_from_phi(p: &PhiCompatPair) -> Result<ThetaCompatPair> {
    let (l, r) = (&p.left, &p.right);
    let m = l.adim();
    let theta = LinMap::from_fn(m, m, |y| {
        let mut acc = Accumulator::new(m);
        for (ym, y0, c) in r.coact_terms(y) {
            acc.add_scaled(&c, &l.act(l.hopf.s_basis(ym), p.phi_inv.column(y0)));
        }
        acc.take()
    });
    let q = ThetaCompatPair::new(l.clone(), r.clone(), theta).map_err(|e| Error::PostconditionFailed(format!("theta: {e}")))?;
    require(verify_theta_compat(&q, &CheckOptions::with_cap(1)), "compatible via theta")?;
    Ok(q)
}

/// φ(x) = θ⁻¹(x₀)◁S(x₁).
pub fn phi_from_theta(q: &ThetaCompatPair) -> Result<PhiCompatPair> {
    let (l, r) = (&q.left, &q.right);
    let m = l.adim();
    let phi = LinMap::from_fn(m, m, |x| {
        let mut acc = Accumulator::new(m);
        for (x0, x1, c) in l.coact_terms(x) {
            acc.add_scaled(&c, &r.act(q.theta_inv.column(x0), l.hopf.s_basis(x1)));
        }
        acc.take()
    });
    let p = PhiCompatPair::new(l.clone(), r.clone(), phi).map_err(|e| Error::PostconditionFailed(format!("phi: {e}")))?;
    require(verify_phi_compat(&p, &CheckOptions::with_cap(1)), "compatible via phi")?;
    Ok(p)
}
