//! Smash product algebras L♯H and H♯R, materialized as full multiplication tables.

use crate::check::{sweep, CheckOptions, CheckReport};
use crate::exactla::{Accumulator, CoeffVector, LinMap};
use crate::hopfcore::FinAlgebra;
use crate::ydstruct::{LeftRightYD, RightLeftYD, MODULE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashKind {
    /// Basis `a*n + h` for a♯h.
    LH,
    /// Basis `h*m + a` for h♯a.
    HR,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashAlgebra {
    pub kind: SmashKind,
    pub total: FinAlgebra,
    /// L → L♯H or H → H♯R.
    pub embed_first: LinMap,
    /// H → L♯H or R → H♯R.
    pub embed_second: LinMap,
    hdim: usize,
    adim: usize,
    /// Whether the action passed the module checks when the table was built.
    pub module_ok: bool,
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn hdim(&self) -> usize {
        self.hdim
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    /// Flat index of the basis element pairing `a` in the module algebra with `h` in H.
    #[inline]
    pub fn index(&self, a: usize, h: usize) -> usize {
        match self.kind {
            SmashKind::LH => a * self.hdim + h,
            SmashKind::HR => h * self.adim + a,
        }
    }

    /// Inverse of `index`: returns `(a, h)`.
    #[inline]
    pub fn split(&self, k: usize) -> (usize, usize) {
        match self.kind {
            SmashKind::LH => (k / self.hdim, k % self.hdim),
            SmashKind::HR => (k % self.adim, k / self.adim),
        }
    }

    pub fn basis(&self, k: usize) -> CoeffVector {
        self.total.basis(k)
    }

    pub fn mul(&self, p: &CoeffVector, q: &CoeffVector) -> CoeffVector {
        self.total.mul(p, q)
    }

    /// The image of an element of the module algebra.
    pub fn from_alg(&self, a: &CoeffVector) -> CoeffVector {
        match self.kind {
            SmashKind::LH => self.embed_first.apply(a),
            SmashKind::HR => self.embed_second.apply(a),
        }
    }

    /// The image of an element of H.
    pub fn from_hopf(&self, h: &CoeffVector) -> CoeffVector {
        match self.kind {
            SmashKind::LH => self.embed_second.apply(h),
            SmashKind::HR => self.embed_first.apply(h),
        }
    }

    /// Labels `a♯h` / `h♯a` built from the factor labels.
    pub fn labels(alg: &[String], hopf: &[String], kind: SmashKind) -> Vec<String> {
        match kind {
            SmashKind::LH => alg.iter().flat_map(|a| hopf.iter().map(move |h| format!("{a}♯{h}"))).collect(),
            SmashKind::HR => hopf.iter().flat_map(|h| alg.iter().map(move |a| format!("{h}♯{a}"))).collect(),
        }
    }
}

/// (a♯h)(a′♯h′) = Σ a(h₁▷a′) ♯ h₂h′.
pub fn build_smash_lh(yd: &LeftRightYD) -> SmashAlgebra {
    let (n, m) = (yd.hdim(), yd.adim());
    let (h, l) = (&yd.hopf, &yd.alg);
    let d = n * m;
    let mult = LinMap::from_fn(d * d, d, |k| {
        let (p, q) = (k / d, k % d);
        let (a, hb) = (p / n, p % n);
        let (a2, h2b) = (q / n, q % n);
        let mut acc = Accumulator::new(d);
        for (h1, h2, c) in h.delta_terms(hb) {
            let left = l.mul(&l.basis(a), yd.act_basis(h1, a2));
            acc.add_outer(&c, &left, h.algebra().mul_basis(h2, h2b));
        }
        acc.take()
    });
    let unit = l.unit().tensor(h.unit());
    let labels = SmashAlgebra::labels(l.labels(), h.labels(), SmashKind::LH);
    let total = FinAlgebra::new(labels, mult, unit).expect("smash table shape");
    let embed_first = LinMap::from_fn(m, d, |a| l.basis(a).tensor(h.unit()));
    let embed_second = LinMap::from_fn(n, d, |x| l.unit().tensor(&h.basis(x)));
    SmashAlgebra {
        kind: SmashKind::LH,
        total,
        embed_first,
        embed_second,
        hdim: n,
        adim: m,
        module_ok: yd.verify_module_structure(&CheckOptions::with_cap(1)).passed,
    }
}

/// (h♯a)(h′♯a′) = Σ hh′₁ ♯ (a◁h′₂)a′.
pub fn build_smash_hr(yd: &RightLeftYD) -> SmashAlgebra {
    let (n, m) = (yd.hdim(), yd.adim());
    let (h, r) = (&yd.hopf, &yd.alg);
    let d = n * m;
    let mult = LinMap::from_fn(d * d, d, |k| {
        let (p, q) = (k / d, k % d);
        let (hb, a) = (p / m, p % m);
        let (h2b, a2) = (q / m, q % m);
        let mut acc = Accumulator::new(d);
        for (h1, h2, c) in h.delta_terms(h2b) {
            let right = r.mul(yd.act_basis(a, h2), &r.basis(a2));
            acc.add_outer(&c, h.algebra().mul_basis(hb, h1), &right);
        }
        acc.take()
    });
    let unit = h.unit().tensor(r.unit());
    let labels = SmashAlgebra::labels(r.labels(), h.labels(), SmashKind::HR);
    let total = FinAlgebra::new(labels, mult, unit).expect("smash table shape");
    let embed_first = LinMap::from_fn(n, d, |x| h.basis(x).tensor(r.unit()));
    let embed_second = LinMap::from_fn(m, d, |a| h.unit().tensor(&r.basis(a)));
    SmashAlgebra {
        kind: SmashKind::HR,
        total,
        embed_first,
        embed_second,
        hdim: n,
        adim: m,
        module_ok: yd.verify_module_structure(&CheckOptions::with_cap(1)).passed,
    }
}

/// h·ρ(a) = ρ(h₂▷a)·h₁ inside L♯H, swept over `[h, a]`.
pub fn smash_yd_condition_lh(s: &SmashAlgebra, yd: &LeftRightYD, opts: &CheckOptions) -> CheckReport {
    let (n, m) = (yd.hdim(), yd.adim());
    sweep(crate::ydstruct::YD_CONDITION, opts, &[n, m], |ix| {
        let (hb, a) = (ix[0], ix[1]);
        let lhs = s.mul(s.embed_second.column(hb), yd.coact_basis(a));
        let mut acc = Accumulator::new(s.dim());
        for (h1, h2, c) in yd.hopf.delta_terms(hb) {
            let w = yd.coact(yd.act_basis(h2, a));
            acc.add_scaled(&c, &s.mul(&w, s.embed_second.column(h1)));
        }
        Some((lhs, acc.take()))
    })
}

/// λ(a)·h = h₂·λ(a◁h₁) inside H♯R, swept over `[a, h]`.
pub fn smash_yd_condition_hr(s: &SmashAlgebra, yd: &RightLeftYD, opts: &CheckOptions) -> CheckReport {
    let (n, m) = (yd.hdim(), yd.adim());
    sweep(crate::ydstruct::YD_CONDITION, opts, &[m, n], |ix| {
        let (a, hb) = (ix[0], ix[1]);
        let lhs = s.mul(yd.coact_basis(a), s.embed_first.column(hb));
        let mut acc = Accumulator::new(s.dim());
        for (h1, h2, c) in yd.hopf.delta_terms(hb) {
            let w = yd.coact(yd.act_basis(a, h1));
            acc.add_scaled(&c, &s.mul(s.embed_first.column(h2), &w));
        }
        Some((lhs, acc.take()))
    })
}

/// Unvalidated smashes report the module failure instead of a table check.
pub fn smash_flag_report(s: &SmashAlgebra) -> CheckReport {
    CheckReport::from_bool(MODULE, s.module_ok, "smash built from an action that is not a module algebra action")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{adjoint_group_yd, adjoint_group_yd_with, dual_group_yd, sweedler_yd, sweedler_yd_with, FiniteGroup};
    use crate::hopfcore::verify_algebra;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn sweedler_smash_products() {
        let yd = sweedler_yd();
        let s = build_smash_lh(&yd);
        assert!(verify_algebra(&s.total, &opts()).passed);
        // (1♯x)(y♯1) = −y♯x
        let p = s.mul(&s.basis(s.index(0, 2)), &s.basis(s.index(1, 0)));
        assert_eq!(p, s.basis(s.index(1, 2)).neg());
        // (a♯1)(1♯h) = a♯h
        for a in 0..2 {
            for h in 0..4 {
                assert_eq!(s.mul(&s.basis(s.index(a, 0)), &s.basis(s.index(0, h))), s.basis(s.index(a, h)));
            }
        }
    }

    #[test]
    fn c2_smash_product() {
        let yd = adjoint_group_yd(&FiniteGroup::cyclic(2));
        let s = build_smash_lh(&yd);
        // (1♯u)(u♯e) = u♯u
        assert_eq!(s.mul(&s.basis(s.index(0, 1)), &s.basis(s.index(1, 0))), s.basis(s.index(1, 1)));
    }

    #[test]
    fn smash_form_matches_tensor_form() {
        let g = FiniteGroup::s3();
        let cases = vec![
            adjoint_group_yd(&g),
            dual_group_yd(&g),
            adjoint_group_yd_with(&g, |x| g.conj(1, g.inverse[x])),
            sweedler_yd(),
            sweedler_yd_with(|a| CoeffVector::unit(8, a * 4)),
        ];
        for yd in cases {
            let s = build_smash_lh(&yd);
            assert!(verify_algebra(&s.total, &CheckOptions::with_cap(1)).passed);
            let big = CheckOptions::with_cap(10_000);
            let a = yd.verify_yd_condition(&big);
            let b = smash_yd_condition_lh(&s, &yd, &big);
            assert_eq!(a.passed, b.passed);
            assert_eq!(a.witnesses, b.witnesses);
        }
    }
}
