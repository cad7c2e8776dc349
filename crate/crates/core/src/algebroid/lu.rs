//! Lu Hopf algebroids: a left bialgebroid, an antiautomorphism τ and a section γ of π.

use crate::algebroid::bialgebroid::{Bialgebroid, Side};
use crate::check::{compare_maps, sweep, CheckOptions, CheckReport, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{inverse, Accumulator, CoeffVector, LinMap};
use crate::hopfcore::check_antihomomorphism;
use crate::smash::{SmashAlgebra, SmashKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LuHopfAlgebroid {
    pub left: Bialgebroid,
    pub tau: LinMap,
    /// Section `𝒦 ⊗_A 𝒦 → 𝒦 ⊗ 𝒦` of the projection.
    pub gamma: LinMap,
}

/// Sends each class to its unique representative `Σ x♯f ⊗ 1♯g`.
pub fn canonical_smash_section(b: &Bialgebroid, smash: &SmashAlgebra) -> Result<LinMap> {
    if smash.kind != SmashKind::LH || b.side != Side::Left || smash.dim() != b.dim() {
        return Err(Error::NormalFormFailure("expected a left bialgebroid on L♯H".into()));
    }
    let (d, n) = (b.dim(), smash.hdim());
    let q = b.tensor.dim();
    if q != d * n {
        return Err(Error::NormalFormFailure(format!("quotient has dimension {q}, normal forms span {}", d * n)));
    }
    // normal form basis (p, g) ↦ e_p ⊗ 1♯g
    let embed = LinMap::from_fn(d * n, d * d, |k| CoeffVector::unit(d, k / n).tensor(smash.embed_second.column(k % n)));
    let restricted = b.tensor.quotient.project().compose(&embed);
    let inv = inverse(&restricted).ok_or_else(|| Error::NormalFormFailure("normal forms are linearly dependent in the quotient".into()))?;
    Ok(embed.compose(&inv))
}

impl LuHopfAlgebroid {
    pub fn new(left: Bialgebroid, tau: LinMap, gamma: LinMap) -> Result<Self> {
        if left.side != Side::Left {
            return Err(Error::InvalidHypothesis("Lu Hopf algebroids use a left bialgebroid".into()));
        }
        let d = left.dim();
        if tau.src_dim() != d || tau.dst_dim() != d {
            return Err(Error::dims("tau", d, tau.src_dim()));
        }
        if gamma.src_dim() != left.tensor.dim() || gamma.dst_dim() != d * d {
            return Err(Error::dims("gamma", left.tensor.dim(), gamma.src_dim()));
        }
        Ok(LuHopfAlgebroid { left, tau, gamma })
    }

    /// Lu's axioms for the fixed τ and γ.
    pub fn verify(&self, opts: &CheckOptions) -> CheckSuite {
        let b = &self.left;
        let (d, m) = (b.dim(), b.base_dim());
        let t = &self.tau;
        let mut s = CheckSuite::new();
        s.push(compare_maps("section", opts, &b.tensor.quotient.project().compose(&self.gamma), &LinMap::identity(b.tensor.dim())));
        s.push(check_antihomomorphism("tau.antihom", opts, t, &b.total, &b.total));
        s.push(CheckReport::from_bool("tau.invertible", inverse(t).is_some(), "τ is singular"));
        s.push(compare_maps("tau.beta", opts, &t.compose(&b.target), &b.source));
        let alpha_eps = b.source.compose(&b.counit);
        s.push(sweep("antipode.gamma", opts, &[d], |ix| {
            let rep = self.gamma.apply(&b.coproduct(&b.total.basis(ix[0])));
            let mut acc = Accumulator::new(d);
            for (k, c) in rep.iter() {
                b.total.mul_into(&b.total.basis(k / d), t.column(k % d), c, &mut acc);
            }
            Some((acc.take(), alpha_eps.column(ix[0]).clone()))
        }));
        s.push(sweep("tau.balanced", opts, &[m, d, d], |ix| {
            let (k, k2) = (b.total.basis(ix[1]), b.total.basis(ix[2]));
            let lhs = b.total.mul(&t.apply(&b.total.mul(b.target.column(ix[0]), &k)), &k2);
            let rhs = b.total.mul3(&t.apply(&k), b.source.column(ix[0]), &k2);
            Some((lhs, rhs))
        }));
        let beta_eps_tau = b.target.compose(&b.counit).compose(t);
        s.push(sweep("antipode.balanced", opts, &[d], |ix| {
            let mut acc = Accumulator::new(d);
            for (k1, k2, c) in b.lift_terms(ix[0]) {
                b.total.mul_into(t.column(k1), &b.total.basis(k2), &c, &mut acc);
            }
            Some((acc.take(), beta_eps_tau.column(ix[0]).clone()))
        }));
        s
    }
}
