//! Symmetric Hopf algebroids: a left bialgebroid over L and a right bialgebroid
//! over R on the same total algebra, joined by an antiautomorphism τ.

use crate::algebroid::bialgebroid::{Bialgebroid, Side};
use crate::algebroid::tensor::DoubleQuotient;
use crate::check::{compare_maps, sweep, CheckOptions, CheckReport, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{inverse, map_factor, Accumulator, CoeffVector, LinMap};
use crate::hopfcore::check_antihomomorphism;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricHopfAlgebroid {
    pub left: Bialgebroid,
    pub right: Bialgebroid,
    pub tau: LinMap,
}

impl SymmetricHopfAlgebroid {
    pub fn new(left: Bialgebroid, right: Bialgebroid, tau: LinMap) -> Result<Self> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::InvalidHypothesis("expected a left and a right bialgebroid".into()));
        }
        if left.total != right.total {
            return Err(Error::InvalidHypothesis("left and right bialgebroids share the total algebra".into()));
        }
        let d = left.dim();
        if tau.src_dim() != d || tau.dst_dim() != d {
            return Err(Error::dims("tau", d, tau.src_dim()));
        }
        Ok(SymmetricHopfAlgebroid { left, right, tau })
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    /// Every axiom, both constituent bialgebroids included, as separate reports.
    pub fn verify(&self, opts: &CheckOptions) -> CheckSuite {
        let (l, r, t) = (&self.left, &self.right, &self.tau);
        let k = &l.total;
        let d = self.dim();
        let mut s = CheckSuite::new();
        s.extend_prefixed("left", l.verify(opts));
        s.extend_prefixed("right", r.verify(opts));

        s.push(check_antihomomorphism("tau.antihom", opts, t, k, k));
        s.push(CheckReport::from_bool("tau.invertible", inverse(t).is_some(), "τ is singular"));
        s.push(compare_maps("tau.beta_l", opts, &t.compose(&l.target), &l.source));
        s.push(compare_maps("tau.beta_r", opts, &t.compose(&r.target), &r.source));

        let (el, er) = (&l.counit, &r.counit);
        s.push(compare_maps("compat.alpha_l_eps_l_beta_r", opts, &l.source.compose(el).compose(&r.target), &r.target));
        s.push(compare_maps("compat.beta_l_eps_l_alpha_r", opts, &l.target.compose(el).compose(&r.source), &r.source));
        s.push(compare_maps("compat.alpha_r_eps_r_beta_l", opts, &r.source.compose(er).compose(&l.target), &l.target));
        s.push(compare_maps("compat.beta_r_eps_r_alpha_l", opts, &r.target.compose(er).compose(&l.source), &l.source));

        for c in mixed_coassociativity(l, r, "mixed_rl", opts).checks {
            s.push(c);
        }
        for c in mixed_coassociativity(r, l, "mixed_lr", opts).checks {
            s.push(c);
        }

        // Σ τ(k₁)k₂ over Δ_L, evaluated on the section representative
        let alpha_eps_r = r.source.compose(er);
        let left_rep = l.tensor.section().compose(&LinMap::from_fn(d, l.tensor.dim(), |i| l.coproduct(&k.basis(i))));
        let mu_tau_id = |v: &CoeffVector| {
            let mut acc = Accumulator::new(d);
            for (p, c) in v.iter() {
                k.mul_into(t.column(p / d), &k.basis(p % d), c, &mut acc);
            }
            acc.take()
        };
        s.push(sweep("antipode.left", opts, &[d], |ix| Some((mu_tau_id(left_rep.column(ix[0])), alpha_eps_r.column(ix[0]).clone()))));
        s.push(sweep("antipode.left.wd", opts, &[l.base_dim(), d, d], |ix| {
            Some((mu_tau_id(&l.tensor.generator(ix[0], ix[1], ix[2])), CoeffVector::zero(d)))
        }));

        // Σ k₁τ(k₂) over Δ_R
        let alpha_eps_l = l.source.compose(el);
        let right_rep = r.tensor.section().compose(&LinMap::from_fn(d, r.tensor.dim(), |i| r.coproduct(&k.basis(i))));
        let mu_id_tau = |v: &CoeffVector| {
            let mut acc = Accumulator::new(d);
            for (p, c) in v.iter() {
                k.mul_into(&k.basis(p / d), t.column(p % d), c, &mut acc);
            }
            acc.take()
        };
        s.push(sweep("antipode.right", opts, &[d], |ix| Some((mu_id_tau(right_rep.column(ix[0])), alpha_eps_l.column(ix[0]).clone()))));
        s.push(sweep("antipode.right.wd", opts, &[r.base_dim(), d, d], |ix| {
            Some((mu_id_tau(&r.tensor.generator(ix[0], ix[1], ix[2])), CoeffVector::zero(d)))
        }));
        s
    }
}

/// `(Δ_b ⊗ id)∘Δ_a = (id ⊗ Δ_a)∘Δ_b` in `𝒦 ⊗_b 𝒦 ⊗_a 𝒦`, plus independence of
/// both sides from the chosen representatives.
fn mixed_coassociativity(a: &Bialgebroid, b: &Bialgebroid, tag: &str, opts: &CheckOptions) -> CheckSuite {
    let d = a.dim();
    let mut s = CheckSuite::new();
    let name = format!("coassoc.{tag}");
    let dq = match DoubleQuotient::new(
        [d, d, d],
        &b.tensor.right_on_first,
        &b.tensor.left_on_second,
        &a.tensor.right_on_first,
        &a.tensor.left_on_second,
    ) {
        Ok(q) => q,
        Err(e) => {
            s.push(CheckReport::fail(name, e.to_string()));
            return s;
        }
    };
    let (la, lb) = (&a.coproduct_lift, &b.coproduct_lift);
    let zero = CoeffVector::zero(dq.dim());
    s.push(sweep(name.clone(), opts, &[d], |ix| {
        let lhs = map_factor(la.column(ix[0]), &[d, d], 0, lb);
        let rhs = map_factor(lb.column(ix[0]), &[d, d], 1, la);
        Some((dq.project(&lhs), dq.project(&rhs)))
    }));
    s.push(sweep(format!("{name}.wd_first"), opts, &[a.base_dim(), d, d], |ix| {
        let g = a.tensor.generator(ix[0], ix[1], ix[2]);
        Some((dq.project(&map_factor(&g, &[d, d], 0, lb)), zero.clone()))
    }));
    s.push(sweep(format!("{name}.wd_second"), opts, &[b.base_dim(), d, d], |ix| {
        let g = b.tensor.generator(ix[0], ix[1], ix[2]);
        Some((dq.project(&map_factor(&g, &[d, d], 1, la)), zero.clone()))
    }));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sweedler_hopf;
    use crate::hopfcore::FinAlgebra;

    /// H over 𝕜 as a symmetric Hopf algebroid with τ = S.
    fn hopf_over_ground(h: &crate::FinHopf) -> (Bialgebroid, Bialgebroid) {
        let n = h.dim();
        let unit = LinMap::from_columns(1, n, vec![h.unit().clone()]).unwrap();
        let k = FinAlgebra::ground();
        let left = Bialgebroid::new(Side::Left, h.algebra().clone(), k.clone(), unit.clone(), unit.clone(), h.coalgebra().comult().clone(), h.coalgebra().counit().clone()).unwrap();
        let right = Bialgebroid::new(Side::Right, h.algebra().clone(), k, unit.clone(), unit, h.coalgebra().comult().clone(), h.coalgebra().counit().clone()).unwrap();
        (left, right)
    }

    #[test]
    fn sweedler_over_ground() {
        let h = sweedler_hopf();
        let (l, r) = hopf_over_ground(&h);
        let sh = SymmetricHopfAlgebroid::new(l, r, h.antipode().clone()).unwrap();
        let s = sh.verify(&CheckOptions::default());
        assert!(s.passed(), "{:?}", s.failing());
        assert!(s.get("coassoc.mixed_rl").is_some() && s.get("antipode.right.wd").is_some());
    }

    #[test]
    fn identity_tau_fails_antipode_laws() {
        let h = sweedler_hopf();
        let (l, r) = hopf_over_ground(&h);
        let sh = SymmetricHopfAlgebroid::new(l, r, LinMap::identity(4)).unwrap();
        let f = sh.verify(&CheckOptions::default());
        let failing = f.failing();
        assert!(failing.contains(&"antipode.left") && failing.contains(&"antipode.right") && failing.contains(&"tau.antihom"), "{failing:?}");
        assert!(!failing.contains(&"coassoc.mixed_rl"));
    }
}
