//! Finite-dimensional algebras, coalgebras and Hopf algebras by structure constants.
//!
//! Constructors only check shapes. Axioms are checked by the `verify_*`
//! functions so that deliberately broken structures can be built and inspected.

use crate::check::{compare_maps, sweep, CheckOptions, CheckReport};
use crate::error::{Error, Result};
use crate::exactla::{inverse, map_factor, Accumulator, CoeffVector, ExactScalar, LinMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    labels: Vec<String>,
    mult: LinMap,
    unit: CoeffVector,
}

impl FinAlgebra {
    pub fn new(labels: Vec<String>, mult: LinMap, unit: CoeffVector) -> Result<Self> {
        let d = labels.len();
        if mult.src_dim() != d * d {
            return Err(Error::dims("multiplication source", d * d, mult.src_dim()));
        }
        if mult.dst_dim() != d {
            return Err(Error::dims("multiplication target", d, mult.dst_dim()));
        }
        if unit.dim() != d {
            return Err(Error::dims("unit", d, unit.dim()));
        }
        Ok(FinAlgebra { labels, mult, unit })
    }

    /// The one-dimensional algebra 𝕜.
    pub fn ground() -> Self {
        FinAlgebra {
            labels: vec!["1".into()],
            mult: LinMap::identity(1),
            unit: CoeffVector::unit(1, 0),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &CoeffVector {
        &self.unit
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &CoeffVector {
        self.mult.column(i * self.dim() + j)
    }

    pub fn mul(&self, a: &CoeffVector, b: &CoeffVector) -> CoeffVector {
        let mut acc = Accumulator::new(self.dim());
        self.mul_into(a, b, &ExactScalar::one(), &mut acc);
        acc.take()
    }

    /// Adds `c · a b` to `acc`.
    pub fn mul_into(&self, a: &CoeffVector, b: &CoeffVector, c: &ExactScalar, acc: &mut Accumulator) {
        for (i, x) in a.iter() {
            let cx = c * x;
            for (j, y) in b.iter() {
                acc.add_scaled(&(&cx * y), self.mul_basis(i, j));
            }
        }
    }

    pub fn mul3(&self, a: &CoeffVector, b: &CoeffVector, c: &CoeffVector) -> CoeffVector {
        self.mul(&self.mul(a, b), c)
    }

    pub fn basis(&self, i: usize) -> CoeffVector {
        CoeffVector::unit(self.dim(), i)
    }

    /// Same space with multiplication `a ∘ b = b a`.
    pub fn opposite(&self) -> FinAlgebra {
        let d = self.dim();
        let mult = LinMap::from_fn(d * d, d, |k| self.mult.column((k % d) * d + k / d).clone());
        FinAlgebra {
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
        }
    }

    /// Matrix of `x ↦ z x`.
    pub fn left_mult(&self, z: &CoeffVector) -> LinMap {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.mul(z, &self.basis(j)))
    }

    /// Matrix of `x ↦ x z`.
    pub fn right_mult(&self, z: &CoeffVector) -> LinMap {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.mul(&self.basis(j), z))
    }

    /// Product on `A ⊗ A` with componentwise multiplication.
    pub fn mul_tensor2(&self, u: &CoeffVector, v: &CoeffVector) -> CoeffVector {
        let d = self.dim();
        let mut acc = Accumulator::new(d * d);
        for (p, x) in u.iter() {
            let (a, b) = (p / d, p % d);
            for (q, y) in v.iter() {
                let (c, e) = (q / d, q % d);
                let xy = x * y;
                for (r, s) in self.mul_basis(a, c).iter() {
                    let xys = &xy * s;
                    for (t, w) in self.mul_basis(b, e).iter() {
                        acc.add_at(r * d + t, &(&xys * w));
                    }
                }
            }
        }
        acc.take()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCoalgebra {
    comult: LinMap,
    counit: LinMap,
}

impl FinCoalgebra {
    pub fn new(comult: LinMap, counit: LinMap) -> Result<Self> {
        let d = comult.src_dim();
        if comult.dst_dim() != d * d {
            return Err(Error::dims("comultiplication target", d * d, comult.dst_dim()));
        }
        if counit.src_dim() != d || counit.dst_dim() != 1 {
            return Err(Error::dims("counit", d, counit.src_dim()));
        }
        Ok(FinCoalgebra { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.comult.src_dim()
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopf {
    algebra: FinAlgebra,
    coalgebra: FinCoalgebra,
    antipode: LinMap,
    antipode_sq: LinMap,
}

impl FinHopf {
    pub fn new(algebra: FinAlgebra, coalgebra: FinCoalgebra, antipode: LinMap) -> Result<Self> {
        let d = algebra.dim();
        if coalgebra.dim() != d {
            return Err(Error::dims("coalgebra", d, coalgebra.dim()));
        }
        if antipode.src_dim() != d || antipode.dst_dim() != d {
            return Err(Error::dims("antipode", d, antipode.src_dim()));
        }
        let antipode_sq = antipode.compose(&antipode);
        Ok(FinHopf {
            algebra,
            coalgebra,
            antipode,
            antipode_sq,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FinCoalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_sq(&self) -> &LinMap {
        &self.antipode_sq
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn unit(&self) -> &CoeffVector {
        self.algebra.unit()
    }

    pub fn basis(&self, i: usize) -> CoeffVector {
        self.algebra.basis(i)
    }

    pub fn mul(&self, a: &CoeffVector, b: &CoeffVector) -> CoeffVector {
        self.algebra.mul(a, b)
    }

    /// Δ(e_i) as (i₁, i₂, coefficient) terms.
    pub fn delta_terms(&self, i: usize) -> Vec<(usize, usize, ExactScalar)> {
        let d = self.dim();
        self.coalgebra.comult.column(i).iter().map(|(f, c)| (f / d, f % d, c.clone())).collect()
    }

    pub fn delta(&self, v: &CoeffVector) -> CoeffVector {
        self.coalgebra.comult.apply(v)
    }

    pub fn eps_basis(&self, i: usize) -> ExactScalar {
        self.coalgebra.counit.column(i).get(0)
    }

    pub fn eps(&self, v: &CoeffVector) -> ExactScalar {
        let mut s = ExactScalar::zero();
        for (i, c) in v.iter() {
            s += &(c * &self.eps_basis(i));
        }
        s
    }

    pub fn s(&self, v: &CoeffVector) -> CoeffVector {
        self.antipode.apply(v)
    }

    pub fn s_basis(&self, i: usize) -> &CoeffVector {
        self.antipode.column(i)
    }

    pub fn s2_basis(&self, i: usize) -> &CoeffVector {
        self.antipode_sq.column(i)
    }

    /// Same structure with a replaced antipode (for negative controls).
    pub fn with_antipode(&self, antipode: LinMap) -> Result<Self> {
        FinHopf::new(self.algebra.clone(), self.coalgebra.clone(), antipode)
    }
}

fn eta_scaled(a: &FinAlgebra, c: ExactScalar) -> CoeffVector {
    a.unit().scale(&c)
}

pub fn verify_algebra(a: &FinAlgebra, opts: &CheckOptions) -> CheckReport {
    let d = a.dim();
    let assoc = sweep("associativity", opts, &[d, d, d], |ix| {
        let (x, y, z) = (a.basis(ix[0]), a.basis(ix[1]), a.basis(ix[2]));
        Some((a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z))))
    });
    let unit = sweep("unitality", opts, &[d, 2], |ix| {
        let x = a.basis(ix[0]);
        let p = if ix[1] == 0 { a.mul(a.unit(), &x) } else { a.mul(&x, a.unit()) };
        Some((p, x))
    });
    CheckReport::combine("algebra", opts, vec![assoc, unit])
}

pub fn verify_coalgebra(h: &FinHopf, opts: &CheckOptions) -> CheckReport {
    verify_coalgebra_parts(h.coalgebra(), opts)
}

pub fn verify_coalgebra_parts(c: &FinCoalgebra, opts: &CheckOptions) -> CheckReport {
    let d = c.dim();
    let coassoc = sweep("coassociativity", opts, &[d], |ix| {
        let dx = c.comult.column(ix[0]);
        Some((map_factor(dx, &[d, d], 0, &c.comult), map_factor(dx, &[d, d], 1, &c.comult)))
    });
    let counit = sweep("counitality", opts, &[d, 2], |ix| {
        let dx = c.comult.column(ix[0]);
        let side = map_factor(dx, &[d, d], ix[1], &c.counit);
        Some((side, CoeffVector::unit(d, ix[0])))
    });
    CheckReport::combine("coalgebra", opts, vec![coassoc, counit])
}

pub fn verify_bialgebra(h: &FinHopf, opts: &CheckOptions) -> CheckReport {
    let d = h.dim();
    let a = h.algebra();
    let mult = sweep("comultiplicative", opts, &[d, d], |ix| {
        let (x, y) = (h.basis(ix[0]), h.basis(ix[1]));
        Some((h.delta(&a.mul(&x, &y)), a.mul_tensor2(&h.delta(&x), &h.delta(&y))))
    });
    let counit = sweep("counit_multiplicative", opts, &[d, d], |ix| {
        let (x, y) = (h.basis(ix[0]), h.basis(ix[1]));
        let l = h.eps(&a.mul(&x, &y));
        let r = h.eps_basis(ix[0]) * h.eps_basis(ix[1]);
        Some((CoeffVector::from_dense(&[l]), CoeffVector::from_dense(&[r])))
    });
    let units = sweep("unit_preserved", opts, &[2], |ix| {
        if ix[0] == 0 {
            Some((h.delta(h.unit()), h.unit().tensor(h.unit())))
        } else {
            Some((CoeffVector::from_dense(&[h.eps(h.unit())]), CoeffVector::unit(1, 0)))
        }
    });
    CheckReport::combine("bialgebra", opts, vec![mult, counit, units])
}

pub fn verify_antipode(h: &FinHopf, opts: &CheckOptions) -> CheckReport {
    let d = h.dim();
    sweep("antipode", opts, &[d, 2], |ix| {
        let mut acc = Accumulator::new(d);
        for (a, b, c) in h.delta_terms(ix[0]) {
            let (l, r) = if ix[1] == 0 {
                (h.s_basis(a).clone(), h.basis(b))
            } else {
                (h.basis(a), h.s_basis(b).clone())
            };
            h.algebra().mul_into(&l, &r, &c, &mut acc);
        }
        Some((acc.take(), eta_scaled(h.algebra(), h.eps_basis(ix[0]))))
    })
}

/// `f(xy) = f(x) f(y)` on basis pairs and `f(1) = 1`.
pub fn check_homomorphism(name: &str, opts: &CheckOptions, f: &LinMap, src: &FinAlgebra, dst: &FinAlgebra) -> CheckReport {
    morphism_check(name, opts, f, src, dst, false)
}

/// `f(xy) = f(y) f(x)` on basis pairs and `f(1) = 1`.
pub fn check_antihomomorphism(name: &str, opts: &CheckOptions, f: &LinMap, src: &FinAlgebra, dst: &FinAlgebra) -> CheckReport {
    morphism_check(name, opts, f, src, dst, true)
}

fn morphism_check(name: &str, opts: &CheckOptions, f: &LinMap, src: &FinAlgebra, dst: &FinAlgebra, anti: bool) -> CheckReport {
    if f.src_dim() != src.dim() || f.dst_dim() != dst.dim() {
        return CheckReport::fail(name, "map shape does not match the algebras");
    }
    let d = src.dim();
    let pairs = sweep(name, opts, &[d, d], |ix| {
        let lhs = f.apply(src.mul_basis(ix[0], ix[1]));
        let (x, y) = (f.column(ix[0]), f.column(ix[1]));
        let rhs = if anti { dst.mul(y, x) } else { dst.mul(x, y) };
        Some((lhs, rhs))
    });
    let unit = sweep(name, opts, &[1], |_| Some((f.apply(src.unit()), dst.unit().clone())));
    CheckReport::combine(name, opts, vec![pairs, unit])
}

pub fn verify_antipode_antihom(h: &FinHopf, opts: &CheckOptions) -> CheckReport {
    check_antihomomorphism("antipode_antihom", opts, h.antipode(), h.algebra(), h.algebra())
}

pub fn antipode_inverse(h: &FinHopf) -> Result<LinMap> {
    inverse(h.antipode()).ok_or_else(|| Error::NotInvertible("antipode".into()))
}

/// Every Hopf-level verifier, in a fixed order.
pub fn validate_hopf(h: &FinHopf, opts: &CheckOptions) -> Vec<CheckReport> {
    let inv = match antipode_inverse(h) {
        Ok(si) => {
            let ok = h.antipode().compose(&si).is_identity() && si.compose(h.antipode()).is_identity();
            CheckReport::from_bool("antipode_invertible", ok, "S∘S⁻¹ ≠ id")
        }
        Err(e) => CheckReport::fail("antipode_invertible", e.to_string()),
    };
    vec![
        verify_algebra(h.algebra(), opts),
        verify_coalgebra(h, opts),
        verify_bialgebra(h, opts),
        verify_antipode(h, opts),
        verify_antipode_antihom(h, opts),
        inv,
    ]
}

/// Checks that `f` and `g` are mutually inverse.
pub fn check_inverse_pair(name: &str, opts: &CheckOptions, f: &LinMap, g: &LinMap) -> CheckReport {
    let n = f.src_dim();
    let m = f.dst_dim();
    if g.src_dim() != m || g.dst_dim() != n {
        return CheckReport::fail(name, "shapes are not transposed");
    }
    let a = compare_maps(name, opts, &g.compose(f), &LinMap::identity(n));
    let b = compare_maps(name, opts, &f.compose(g), &LinMap::identity(m));
    CheckReport::combine(name, opts, vec![a, b])
}

/// Group algebra 𝕜G from a multiplication table on `0..n`, identity `e`.
pub fn group_hopf(labels: Vec<String>, table: &[Vec<usize>], e: usize) -> Result<FinHopf> {
    let n = labels.len();
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table shape".into()));
    }
    let inv: Vec<usize> = (0..n)
        .map(|g| (0..n).find(|&h| table[g][h] == e && table[h][g] == e))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::NotAGroup("missing inverse".into()))?;
    let mult = LinMap::from_fn(n * n, n, |k| CoeffVector::unit(n, table[k / n][k % n]));
    let alg = FinAlgebra::new(labels, mult, CoeffVector::unit(n, e))?;
    let comult = LinMap::from_fn(n, n * n, |g| CoeffVector::unit(n * n, g * n + g));
    let counit = LinMap::from_fn(n, 1, |_| CoeffVector::unit(1, 0));
    let antipode = LinMap::from_fn(n, n, |g| CoeffVector::unit(n, inv[g]));
    FinHopf::new(alg, FinCoalgebra::new(comult, counit)?, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    fn c2() -> FinHopf {
        group_hopf(vec!["e".into(), "u".into()], &[vec![0, 1], vec![1, 0]], 0).unwrap()
    }

    fn s3_table() -> Vec<Vec<usize>> {
        // permutations of {0,1,2} as images
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect()
    }

    #[test]
    fn group_algebras_validate() {
        for h in [c2(), group_hopf((0..6).map(|i| i.to_string()).collect(), &s3_table(), 0).unwrap()] {
            for r in validate_hopf(&h, &opts()) {
                assert!(r.passed, "{}", r.name);
            }
        }
    }

    #[test]
    fn broken_table_fails_algebra() {
        let h = c2();
        let mut t = h.algebra().mult().triples();
        t.retain(|&(r, c, _)| !(r == 1 && c == 2));
        let mult = LinMap::from_triples(4, 2, &t).unwrap();
        let a = FinAlgebra::new(h.labels().to_vec(), mult, h.unit().clone()).unwrap();
        let r = verify_algebra(&a, &opts());
        assert!(!r.passed);
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn opposite_reverses() {
        let h = group_hopf((0..6).map(|i| i.to_string()).collect(), &s3_table(), 0).unwrap();
        let op = h.algebra().opposite();
        assert_eq!(op.mul_basis(1, 2), h.algebra().mul_basis(2, 1));
        assert_ne!(op.mul_basis(1, 2), op.mul_basis(2, 1));
    }

    #[test]
    fn non_group_rejected() {
        let r = group_hopf(vec!["a".into(), "b".into()], &[vec![0, 0], vec![0, 1]], 1);
        assert!(matches!(r, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn singular_antipode_reported() {
        let h = c2().with_antipode(LinMap::zero(2, 2)).unwrap();
        assert!(matches!(antipode_inverse(&h), Err(Error::NotInvertible(_))));
        assert!(!verify_antipode(&h, &opts()).passed);
    }
}
