//! Yetter–Drinfeld module algebras, left-right (L, ▷, ρ) and right-left (R, ◁, λ).
//!
//! Index conventions: the left-right action has column `h*m + a` and ρ lands in
//! `L ⊗ H` with index `a0*n + h1`. The right-left action has column `a*n + h` and
//! λ lands in `H ⊗ R` with index `h*m + a0`.

use crate::check::{sweep, CheckOptions, CheckReport, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{map_factor, Accumulator, CoeffVector, ExactScalar, LinMap};
use crate::hopfcore::{FinAlgebra, FinHopf};

pub const MODULE: &str = "module";
pub const COMODULE: &str = "comodule";
pub const YD_CONDITION: &str = "yd_condition";
pub const BRAIDED_COMMUTATIVITY: &str = "braided_commutativity";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftRightYD {
    pub hopf: FinHopf,
    pub alg: FinAlgebra,
    pub action: LinMap,
    pub coaction: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightLeftYD {
    pub hopf: FinHopf,
    pub alg: FinAlgebra,
    pub action: LinMap,
    pub coaction: LinMap,
}

fn check_shapes(hopf: &FinHopf, alg: &FinAlgebra, action: &LinMap, coaction: &LinMap) -> Result<()> {
    let (n, m) = (hopf.dim(), alg.dim());
    if action.src_dim() != n * m || action.dst_dim() != m {
        return Err(Error::dims("action", n * m, action.src_dim()));
    }
    if coaction.src_dim() != m || coaction.dst_dim() != n * m {
        return Err(Error::dims("coaction", n * m, coaction.dst_dim()));
    }
    Ok(())
}

impl LeftRightYD {
    pub fn new(hopf: FinHopf, alg: FinAlgebra, action: LinMap, coaction: LinMap) -> Result<Self> {
        check_shapes(&hopf, &alg, &action, &coaction)?;
        Ok(LeftRightYD { hopf, alg, action, coaction })
    }

    /// Builds the flat maps from per-basis closures `(h, a) ↦ h▷a` and `a ↦ ρ(a)`.
    pub fn from_fns(
        hopf: FinHopf,
        alg: FinAlgebra,
        act: impl Fn(usize, usize) -> CoeffVector + Sync,
        coact: impl Fn(usize) -> CoeffVector + Sync,
    ) -> Result<Self> {
        let (n, m) = (hopf.dim(), alg.dim());
        let action = LinMap::from_fn(n * m, m, |k| act(k / m, k % m));
        let coaction = LinMap::from_fn(m, m * n, coact);
        Self::new(hopf, alg, action, coaction)
    }

    pub fn hdim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn adim(&self) -> usize {
        self.alg.dim()
    }

    #[inline]
    pub fn act_basis(&self, h: usize, a: usize) -> &CoeffVector {
        self.action.column(h * self.adim() + a)
    }

    pub fn act(&self, h: &CoeffVector, a: &CoeffVector) -> CoeffVector {
        let mut acc = Accumulator::new(self.adim());
        for (i, x) in h.iter() {
            for (j, y) in a.iter() {
                acc.add_scaled(&(x * y), self.act_basis(i, j));
            }
        }
        acc.take()
    }

    /// Matrix of `a ↦ h▷a` for a basis element `h`.
    pub fn action_matrix(&self, h: usize) -> LinMap {
        LinMap::from_fn(self.adim(), self.adim(), |a| self.act_basis(h, a).clone())
    }

    #[inline]
    pub fn coact_basis(&self, a: usize) -> &CoeffVector {
        self.coaction.column(a)
    }

    /// ρ(e_a) as (a₀, a₁, coefficient) terms.
    pub fn coact_terms(&self, a: usize) -> Vec<(usize, usize, ExactScalar)> {
        let n = self.hdim();
        self.coact_basis(a).iter().map(|(k, c)| (k / n, k % n, c.clone())).collect()
    }

    pub fn coact(&self, a: &CoeffVector) -> CoeffVector {
        self.coaction.apply(a)
    }

    pub fn verify_module_structure(&self, opts: &CheckOptions) -> CheckReport {
        let (n, m) = (self.hdim(), self.adim());
        let (h, l) = (&self.hopf, &self.alg);
        let assoc = sweep("action_associative", opts, &[n, n, m], |ix| {
            let lhs = self.act(h.algebra().mul_basis(ix[0], ix[1]), &l.basis(ix[2]));
            let rhs = self.act(&h.basis(ix[0]), self.act_basis(ix[1], ix[2]));
            Some((lhs, rhs))
        });
        let unit = sweep("action_unital", opts, &[m], |ix| Some((self.act(h.unit(), &l.basis(ix[0])), l.basis(ix[0]))));
        let measuring = sweep("action_measuring", opts, &[n, m, m], |ix| {
            let lhs = self.act(&h.basis(ix[0]), l.mul_basis(ix[1], ix[2]));
            let mut acc = Accumulator::new(m);
            for (h1, h2, c) in h.delta_terms(ix[0]) {
                l.mul_into(self.act_basis(h1, ix[1]), self.act_basis(h2, ix[2]), &c, &mut acc);
            }
            Some((lhs, acc.take()))
        });
        let unit_measuring = sweep("action_on_unit", opts, &[n], |ix| {
            Some((self.act(&h.basis(ix[0]), l.unit()), l.unit().scale(&h.eps_basis(ix[0]))))
        });
        CheckReport::combine(MODULE, opts, vec![assoc, unit, measuring, unit_measuring])
    }

    pub fn verify_comodule_structure(&self, opts: &CheckOptions) -> CheckReport {
        let (n, m) = (self.hdim(), self.adim());
        let (h, l) = (&self.hopf, &self.alg);
        let coassoc = sweep("coaction_coassociative", opts, &[m], |ix| {
            let r = self.coact_basis(ix[0]);
            Some((map_factor(r, &[m, n], 0, &self.coaction), map_factor(r, &[m, n], 1, h.coalgebra().comult())))
        });
        let counit = sweep("coaction_counital", opts, &[m], |ix| {
            Some((map_factor(self.coact_basis(ix[0]), &[m, n], 1, h.coalgebra().counit()), l.basis(ix[0])))
        });
        let algebra = sweep("coaction_multiplicative", opts, &[m, m], |ix| {
            let lhs = self.coact(l.mul_basis(ix[0], ix[1]));
            let mut acc = Accumulator::new(m * n);
            for (a0, a1, c) in self.coact_terms(ix[0]) {
                for (b0, b1, d) in self.coact_terms(ix[1]) {
                    acc.add_outer(&(&c * &d), l.mul_basis(a0, b0), h.algebra().mul_basis(b1, a1));
                }
            }
            Some((lhs, acc.take()))
        });
        let unit = sweep("coaction_on_unit", opts, &[1], |_| Some((self.coact(l.unit()), l.unit().tensor(h.unit()))));
        CheckReport::combine(COMODULE, opts, vec![coassoc, counit, algebra, unit])
    }

    /// (h₁▷a₀) ⊗ h₂a₁ = (h₂▷a)₀ ⊗ (h₂▷a)₁h₁.
    pub fn verify_yd_condition(&self, opts: &CheckOptions) -> CheckReport {
        let (n, m) = (self.hdim(), self.adim());
        let ha = self.hopf.algebra();
        sweep(YD_CONDITION, opts, &[n, m], |ix| {
            let (hb, a) = (ix[0], ix[1]);
            let delta = self.hopf.delta_terms(hb);
            let mut lhs = Accumulator::new(m * n);
            for (h1, h2, c) in &delta {
                for (a0, a1, d) in self.coact_terms(a) {
                    lhs.add_outer(&(c * &d), self.act_basis(*h1, a0), ha.mul_basis(*h2, a1));
                }
            }
            let mut rhs = Accumulator::new(m * n);
            for (h1, h2, c) in &delta {
                let w = self.coact(self.act_basis(*h2, a));
                for (k, d) in w.iter() {
                    let cd = c * d;
                    for (t, e) in ha.mul_basis(k % n, *h1).iter() {
                        rhs.add_at((k / n) * n + t, &(&cd * e));
                    }
                }
            }
            Some((lhs.take(), rhs.take()))
        })
    }

    /// x₀(x₁▷a) = a x.
    pub fn verify_braided_commutativity(&self, opts: &CheckOptions) -> CheckReport {
        let m = self.adim();
        let l = &self.alg;
        sweep(BRAIDED_COMMUTATIVITY, opts, &[m, m], |ix| {
            let (x, a) = (ix[0], ix[1]);
            let mut acc = Accumulator::new(m);
            for (x0, x1, c) in self.coact_terms(x) {
                l.mul_into(&l.basis(x0), self.act_basis(x1, a), &c, &mut acc);
            }
            Some((acc.take(), l.mul_basis(a, x).clone()))
        })
    }

    pub fn verify_all(&self, opts: &CheckOptions) -> CheckSuite {
        let mut s = CheckSuite::new();
        s.push(self.verify_module_structure(opts));
        s.push(self.verify_comodule_structure(opts));
        s.push(self.verify_yd_condition(opts));
        s.push(self.verify_braided_commutativity(opts));
        s
    }
}

impl RightLeftYD {
    pub fn new(hopf: FinHopf, alg: FinAlgebra, action: LinMap, coaction: LinMap) -> Result<Self> {
        check_shapes(&hopf, &alg, &action, &coaction)?;
        Ok(RightLeftYD { hopf, alg, action, coaction })
    }

    /// Builds the flat maps from closures `(a, h) ↦ a◁h` and `a ↦ λ(a)`.
    pub fn from_fns(
        hopf: FinHopf,
        alg: FinAlgebra,
        act: impl Fn(usize, usize) -> CoeffVector + Sync,
        coact: impl Fn(usize) -> CoeffVector + Sync,
    ) -> Result<Self> {
        let (n, m) = (hopf.dim(), alg.dim());
        let action = LinMap::from_fn(m * n, m, |k| act(k / n, k % n));
        let coaction = LinMap::from_fn(m, n * m, coact);
        Self::new(hopf, alg, action, coaction)
    }

    pub fn hdim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn adim(&self) -> usize {
        self.alg.dim()
    }

    #[inline]
    pub fn act_basis(&self, a: usize, h: usize) -> &CoeffVector {
        self.action.column(a * self.hdim() + h)
    }

    pub fn act(&self, a: &CoeffVector, h: &CoeffVector) -> CoeffVector {
        let mut acc = Accumulator::new(self.adim());
        for (i, x) in a.iter() {
            for (j, y) in h.iter() {
                acc.add_scaled(&(x * y), self.act_basis(i, j));
            }
        }
        acc.take()
    }

    /// Matrix of `a ↦ a◁h` for a basis element `h`.
    pub fn action_matrix(&self, h: usize) -> LinMap {
        LinMap::from_fn(self.adim(), self.adim(), |a| self.act_basis(a, h).clone())
    }

    #[inline]
    pub fn coact_basis(&self, a: usize) -> &CoeffVector {
        self.coaction.column(a)
    }

    /// λ(e_a) as (a₋₁, a₀, coefficient) terms.
    pub fn coact_terms(&self, a: usize) -> Vec<(usize, usize, ExactScalar)> {
        let m = self.adim();
        self.coact_basis(a).iter().map(|(k, c)| (k / m, k % m, c.clone())).collect()
    }

    pub fn coact(&self, a: &CoeffVector) -> CoeffVector {
        self.coaction.apply(a)
    }

    pub fn verify_module_structure(&self, opts: &CheckOptions) -> CheckReport {
        let (n, m) = (self.hdim(), self.adim());
        let (h, r) = (&self.hopf, &self.alg);
        let assoc = sweep("action_associative", opts, &[m, n, n], |ix| {
            let lhs = self.act(&r.basis(ix[0]), h.algebra().mul_basis(ix[1], ix[2]));
            let rhs = self.act(self.act_basis(ix[0], ix[1]), &h.basis(ix[2]));
            Some((lhs, rhs))
        });
        let unit = sweep("action_unital", opts, &[m], |ix| Some((self.act(&r.basis(ix[0]), h.unit()), r.basis(ix[0]))));
        let measuring = sweep("action_measuring", opts, &[m, m, n], |ix| {
            let lhs = self.act(r.mul_basis(ix[0], ix[1]), &h.basis(ix[2]));
            let mut acc = Accumulator::new(m);
            for (h1, h2, c) in h.delta_terms(ix[2]) {
                r.mul_into(self.act_basis(ix[0], h1), self.act_basis(ix[1], h2), &c, &mut acc);
            }
            Some((lhs, acc.take()))
        });
        let unit_measuring = sweep("action_on_unit", opts, &[n], |ix| {
            Some((self.act(r.unit(), &h.basis(ix[0])), r.unit().scale(&h.eps_basis(ix[0]))))
        });
        CheckReport::combine(MODULE, opts, vec![assoc, unit, measuring, unit_measuring])
    }

    pub fn verify_comodule_structure(&self, opts: &CheckOptions) -> CheckReport {
        let (n, m) = (self.hdim(), self.adim());
        let (h, r) = (&self.hopf, &self.alg);
        let coassoc = sweep("coaction_coassociative", opts, &[m], |ix| {
            let l = self.coact_basis(ix[0]);
            Some((map_factor(l, &[n, m], 1, &self.coaction), map_factor(l, &[n, m], 0, h.coalgebra().comult())))
        });
        let counit = sweep("coaction_counital", opts, &[m], |ix| {
            Some((map_factor(self.coact_basis(ix[0]), &[n, m], 0, h.coalgebra().counit()), r.basis(ix[0])))
        });
        let algebra = sweep("coaction_multiplicative", opts, &[m, m], |ix| {
            let lhs = self.coact(r.mul_basis(ix[0], ix[1]));
            let mut acc = Accumulator::new(n * m);
            for (a1, a0, c) in self.coact_terms(ix[0]) {
                for (b1, b0, d) in self.coact_terms(ix[1]) {
                    acc.add_outer(&(&c * &d), h.algebra().mul_basis(b1, a1), r.mul_basis(a0, b0));
                }
            }
            Some((lhs, acc.take()))
        });
        let unit = sweep("coaction_on_unit", opts, &[1], |_| Some((self.coact(r.unit()), h.unit().tensor(r.unit()))));
        CheckReport::combine(COMODULE, opts, vec![coassoc, counit, algebra, unit])
    }

    /// a₋₁h₁ ⊗ (a₀◁h₂) = h₂(a◁h₁)₋₁ ⊗ (a◁h₁)₀.
    pub fn verify_yd_condition(&self, opts: &CheckOptions) -> CheckReport {
        let (n, m) = (self.hdim(), self.adim());
        let ha = self.hopf.algebra();
        sweep(YD_CONDITION, opts, &[m, n], |ix| {
            let (a, hb) = (ix[0], ix[1]);
            let delta = self.hopf.delta_terms(hb);
            let mut lhs = Accumulator::new(n * m);
            for (am, a0, c) in self.coact_terms(a) {
                for (h1, h2, d) in &delta {
                    lhs.add_outer(&(&c * d), ha.mul_basis(am, *h1), self.act_basis(a0, *h2));
                }
            }
            let mut rhs = Accumulator::new(n * m);
            for (h1, h2, c) in &delta {
                let w = self.coact(self.act_basis(a, *h1));
                for (k, d) in w.iter() {
                    let cd = c * d;
                    for (t, e) in ha.mul_basis(*h2, k / m).iter() {
                        rhs.add_at(t * m + k % m, &(&cd * e));
                    }
                }
            }
            Some((lhs.take(), rhs.take()))
        })
    }

    /// (a◁y₋₁)y₀ = y a.
    pub fn verify_braided_commutativity(&self, opts: &CheckOptions) -> CheckReport {
        let m = self.adim();
        let r = &self.alg;
        sweep(BRAIDED_COMMUTATIVITY, opts, &[m, m], |ix| {
            let (y, a) = (ix[0], ix[1]);
            let mut acc = Accumulator::new(m);
            for (ym, y0, c) in self.coact_terms(y) {
                r.mul_into(self.act_basis(a, ym), &r.basis(y0), &c, &mut acc);
            }
            Some((acc.take(), r.mul_basis(y, a).clone()))
        })
    }

    pub fn verify_all(&self, opts: &CheckOptions) -> CheckSuite {
        let mut s = CheckSuite::new();
        s.push(self.verify_module_structure(opts));
        s.push(self.verify_comodule_structure(opts));
        s.push(self.verify_yd_condition(opts));
        s.push(self.verify_braided_commutativity(opts));
        s
    }
}
