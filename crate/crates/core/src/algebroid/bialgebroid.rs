//! Left and right bialgebroids over a base algebra A.
//!
//! Left: bimodule `a.k.b = α(a)β(b)k`, balanced tensor relations `β(a)k ⊗ k′ − k ⊗ α(a)k′`.
//! Right: bimodule `b.k.a = kα(a)β(b)`, relations `kα(a) ⊗ k′ − k ⊗ k′β(a)`.

use crate::algebroid::tensor::{BalancedTensor, DoubleQuotient};
use crate::check::{sweep, CheckOptions, CheckReport, CheckSuite};
use crate::error::{Error, Result};
use crate::exactla::{map_factor, Accumulator, CoeffVector, LinMap};
use crate::hopfcore::{check_antihomomorphism, check_homomorphism, verify_algebra, FinAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebroid {
    pub side: Side,
    pub total: FinAlgebra,
    pub base: FinAlgebra,
    pub source: LinMap,
    pub target: LinMap,
    /// A lift of Δ to `𝒦 ⊗ 𝒦`; Δ itself is the projection of this lift.
    pub coproduct_lift: LinMap,
    pub tensor: BalancedTensor,
    pub counit: LinMap,
}

pub type LeftBialgebroid = Bialgebroid;
pub type RightBialgebroid = Bialgebroid;

/// Left and right A-actions on 𝒦 for each base basis element: `(a.k, k.a)`.
pub fn bimodule_actions(total: &FinAlgebra, base_dim: usize, source: &LinMap, target: &LinMap, side: Side) -> (Vec<LinMap>, Vec<LinMap>) {
    let per = |f: &dyn Fn(&CoeffVector) -> LinMap, m: &LinMap| -> Vec<LinMap> { (0..base_dim).map(|a| f(m.column(a))).collect() };
    match side {
        Side::Left => (per(&|z| total.left_mult(z), source), per(&|z| total.left_mult(z), target)),
        Side::Right => (per(&|z| total.right_mult(z), target), per(&|z| total.right_mult(z), source)),
    }
}

/// The three structural preconditions: α hom, β antihom, commuting images.
pub fn base_map_checks(total: &FinAlgebra, base: &FinAlgebra, source: &LinMap, target: &LinMap, opts: &CheckOptions) -> Vec<CheckReport> {
    let m = base.dim();
    let commute = if source.src_dim() == m && target.src_dim() == m && source.dst_dim() == total.dim() && target.dst_dim() == total.dim() {
        sweep("images.commute", opts, &[m, m], |ix| {
            let (x, y) = (source.column(ix[0]), target.column(ix[1]));
            Some((total.mul(x, y), total.mul(y, x)))
        })
    } else {
        CheckReport::fail("images.commute", "source or target has the wrong shape")
    };
    vec![
        check_homomorphism("source.hom", opts, source, base, total),
        check_antihomomorphism("target.antihom", opts, target, base, total),
        commute,
    ]
}

/// `𝒦 ⊗_A 𝒦` for the bimodule structure of `side`, after checking the preconditions.
pub fn tensor_over_base(total: &FinAlgebra, base: &FinAlgebra, source: &LinMap, target: &LinMap, side: Side) -> Result<BalancedTensor> {
    let opts = CheckOptions::with_cap(1);
    let [hom, anti, commute] = <[CheckReport; 3]>::try_from(base_map_checks(total, base, source, target, &opts)).expect("three checks");
    if !hom.passed {
        return Err(Error::InvalidHypothesis("source is a homomorphism".into()));
    }
    if !anti.passed {
        return Err(Error::InvalidHypothesis("target is an antihomomorphism".into()));
    }
    if !commute.passed {
        return Err(Error::NonCommutingImages { witnesses: commute.failures });
    }
    Ok(tensor_over_base_unchecked(total, base, source, target, side))
}

/// Same quotient without the precondition checks (for negative controls).
pub fn tensor_over_base_unchecked(total: &FinAlgebra, base: &FinAlgebra, source: &LinMap, target: &LinMap, side: Side) -> BalancedTensor {
    let (lact, ract) = bimodule_actions(total, base.dim(), source, target, side);
    let d = total.dim();
    BalancedTensor::new(d, d, ract, lact)
}

impl Bialgebroid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(side: Side, total: FinAlgebra, base: FinAlgebra, source: LinMap, target: LinMap, coproduct_lift: LinMap, counit: LinMap) -> Result<Self> {
        check_shapes(&total, &base, &source, &target, &coproduct_lift, &counit)?;
        let tensor = tensor_over_base(&total, &base, &source, &target, side)?;
        Ok(Bialgebroid { side, total, base, source, target, coproduct_lift, tensor, counit })
    }

    /// Builds the structure even when the images of α and β do not commute.
    pub fn new_unchecked(side: Side, total: FinAlgebra, base: FinAlgebra, source: LinMap, target: LinMap, coproduct_lift: LinMap, counit: LinMap) -> Result<Self> {
        check_shapes(&total, &base, &source, &target, &coproduct_lift, &counit)?;
        let tensor = tensor_over_base_unchecked(&total, &base, &source, &target, side);
        Ok(Bialgebroid { side, total, base, source, target, coproduct_lift, tensor, counit })
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    /// a.k
    pub fn left_act(&self, a: &CoeffVector, k: &CoeffVector) -> CoeffVector {
        match self.side {
            Side::Left => self.total.mul(&self.source.apply(a), k),
            Side::Right => self.total.mul(k, &self.target.apply(a)),
        }
    }

    /// k.a
    pub fn right_act(&self, k: &CoeffVector, a: &CoeffVector) -> CoeffVector {
        match self.side {
            Side::Left => self.total.mul(&self.target.apply(a), k),
            Side::Right => self.total.mul(k, &self.source.apply(a)),
        }
    }

    pub fn coproduct(&self, k: &CoeffVector) -> CoeffVector {
        self.tensor.project(&self.coproduct_lift.apply(k))
    }

    pub fn counit_of(&self, k: &CoeffVector) -> CoeffVector {
        self.counit.apply(k)
    }

    /// Δ̃(k) as (k₁, k₂, coefficient) terms.
    pub fn lift_terms(&self, k: usize) -> Vec<(usize, usize, crate::exactla::ExactScalar)> {
        let d = self.dim();
        self.coproduct_lift.column(k).iter().map(|(f, c)| (f / d, f % d, c.clone())).collect()
    }

    /// Δ̃(k)·X for the left side, X·Δ̃(k) for the right side, in `𝒦 ⊗ 𝒦`.
    fn takeuchi_product(&self, k: &CoeffVector, x: &CoeffVector) -> CoeffVector {
        let dk = self.coproduct_lift.apply(k);
        match self.side {
            Side::Left => self.total.mul_tensor2(&dk, x),
            Side::Right => self.total.mul_tensor2(x, &dk),
        }
    }

    /// Every axiom as its own report, in a fixed order.
    pub fn verify(&self, opts: &CheckOptions) -> CheckSuite {
        let mut s = CheckSuite::new();
        s.push(verify_algebra(&self.total, opts).renamed("algebra"));
        for r in base_map_checks(&self.total, &self.base, &self.source, &self.target, opts) {
            s.push(r);
        }
        let (d, m) = (self.dim(), self.base_dim());
        let t = &self.tensor;
        let ka = |k: usize| self.total.basis(k);
        let ba = |a: usize| self.base.basis(a);

        s.push(sweep("coproduct.bimodule", opts, &[m, d, 2], |ix| {
            let (a, k) = (ix[0], ix[1]);
            let lift = self.coproduct_lift.column(k);
            Some(if ix[2] == 0 {
                (self.coproduct(&self.left_act(&ba(a), &ka(k))), t.project(&map_factor(lift, &[d, d], 0, &t.left_on_second[a])))
            } else {
                (self.coproduct(&self.right_act(&ka(k), &ba(a))), t.project(&map_factor(lift, &[d, d], 1, &t.right_on_first[a])))
            })
        }));
        s.push(sweep("counit.bimodule", opts, &[m, d, 2], |ix| {
            let (a, k) = (ix[0], ix[1]);
            let e = self.counit.column(k);
            Some(if ix[2] == 0 {
                (self.counit_of(&self.left_act(&ba(a), &ka(k))), self.base.mul(&ba(a), e))
            } else {
                (self.counit_of(&self.right_act(&ka(k), &ba(a))), self.base.mul(e, &ba(a)))
            })
        }));
        s.push(match DoubleQuotient::new([d, d, d], &t.right_on_first, &t.left_on_second, &t.right_on_first, &t.left_on_second) {
            Ok(dq) => sweep("coassociativity", opts, &[d], |ix| {
                let lift = self.coproduct_lift.column(ix[0]);
                let l = map_factor(lift, &[d, d], 0, &self.coproduct_lift);
                let r = map_factor(lift, &[d, d], 1, &self.coproduct_lift);
                Some((dq.project(&l), dq.project(&r)))
            }),
            Err(e) => CheckReport::fail("coassociativity", e.to_string()),
        });
        s.push(sweep("counitality", opts, &[d, 2], |ix| {
            let mut acc = Accumulator::new(d);
            for (k1, k2, c) in self.lift_terms(ix[0]) {
                let v = if ix[1] == 0 {
                    self.left_act(self.counit.column(k1), &ka(k2))
                } else {
                    self.right_act(&ka(k1), self.counit.column(k2))
                };
                acc.add_scaled(&c, &v);
            }
            Some((acc.take(), ka(ix[0])))
        }));
        s.push(sweep("takeuchi.factorizes", opts, &[d, m, d, d], |ix| {
            let r = t.generator(ix[1], ix[2], ix[3]);
            let v = t.project(&self.takeuchi_product(&ka(ix[0]), &r));
            Some((v, CoeffVector::zero(t.dim())))
        }));
        let q = t.dim();
        let act = |k: &CoeffVector, x: &CoeffVector| t.project(&self.takeuchi_product(k, x));
        let assoc = sweep("takeuchi.action", opts, &[d, d, q], |ix| {
            let x = t.section().column(ix[2]);
            let (k, k2) = (ka(ix[0]), ka(ix[1]));
            Some(match self.side {
                Side::Left => (act(&self.total.mul(&k, &k2), x), act(&k, &t.section().apply(&act(&k2, x)))),
                Side::Right => (act(&self.total.mul(&k, &k2), x), act(&k2, &t.section().apply(&act(&k, x)))),
            })
        });
        let unit = sweep("takeuchi.action", opts, &[q], |ix| Some((act(self.total.unit(), t.section().column(ix[0])), CoeffVector::unit(q, ix[0]))));
        s.push(CheckReport::combine("takeuchi.action", opts, vec![assoc, unit]));
        s.push(self.counit_action(opts));
        s
    }

    /// Left: k ▷ a = ε(kα(a)). Right: a ◁ k = ε(α(a)k). Both must be unital actions.
    fn counit_action(&self, opts: &CheckOptions) -> CheckReport {
        let (d, m) = (self.dim(), self.base_dim());
        let act = |k: &CoeffVector, a: &CoeffVector| match self.side {
            Side::Left => self.counit_of(&self.total.mul(k, &self.source.apply(a))),
            Side::Right => self.counit_of(&self.total.mul(&self.source.apply(a), k)),
        };
        let assoc = sweep("counit.action", opts, &[d, d, m], |ix| {
            let (k, k2, a) = (self.total.basis(ix[0]), self.total.basis(ix[1]), self.base.basis(ix[2]));
            let kk = self.total.mul(&k, &k2);
            Some(match self.side {
                Side::Left => (act(&kk, &a), act(&k, &act(&k2, &a))),
                Side::Right => (act(&kk, &a), act(&k2, &act(&k, &a))),
            })
        });
        let unit = sweep("counit.action", opts, &[m], |ix| Some((act(self.total.unit(), &self.base.basis(ix[0])), self.base.basis(ix[0]))));
        CheckReport::combine("counit.action", opts, vec![assoc, unit])
    }
}

fn check_shapes(total: &FinAlgebra, base: &FinAlgebra, source: &LinMap, target: &LinMap, lift: &LinMap, counit: &LinMap) -> Result<()> {
    let (d, m) = (total.dim(), base.dim());
    for (name, f, s, t) in [("source", source, m, d), ("target", target, m, d), ("coproduct", lift, d, d * d), ("counit", counit, d, m)] {
        if f.src_dim() != s {
            return Err(Error::dims(name, s, f.src_dim()));
        }
        if f.dst_dim() != t {
            return Err(Error::dims(name, t, f.dst_dim()));
        }
    }
    Ok(())
}
