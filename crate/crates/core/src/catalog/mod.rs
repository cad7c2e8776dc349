//! Built-in instances: group algebras, Sweedler's H₄, and YD module algebras over them.

use crate::error::{Error, Result};
use crate::exactla::{CoeffVector, ExactScalar, LinMap};
use crate::hopfcore::{group_hopf, FinAlgebra, FinCoalgebra, FinHopf};
use crate::ydstruct::LeftRightYD;

pub mod instances;
pub use instances::{all_instances, instance, InstanceDescriptor, Overrides, Perturbation, INSTANCE_NAMES};

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table must be n×n with entries below n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotAGroup("missing inverse".into()))?;
        Ok(FiniteGroup { labels, table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else if n == 2 { "u".to_string() } else { format!("c{k}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(labels, table).expect("cyclic group")
    }

    /// S₃ as permutations of {1,2,3}, composed right to left.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        FiniteGroup::new(labels, table).expect("S3")
    }

    pub fn hopf(&self) -> FinHopf {
        group_hopf(self.labels.clone(), &self.table, self.identity).expect("verified group")
    }
}

/// Group algebra 𝕜G from a Cayley table.
pub fn group_algebra(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<FinHopf> {
    Ok(FiniteGroup::new(labels, table)?.hopf())
}

fn q(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

/// g^a x^b has index a + 2b.
fn sweedler_word(k: usize) -> (usize, usize) {
    (k % 2, k / 2)
}

/// Sweedler's four-dimensional Hopf algebra with basis 1, g, x, gx.
pub fn sweedler_hopf() -> FinHopf {
    let labels: Vec<String> = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let mult = LinMap::from_fn(16, 4, |k| {
        let ((a, b), (c, d)) = (sweedler_word(k / 4), sweedler_word(k % 4));
        if b + d > 1 {
            return CoeffVector::zero(4);
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        CoeffVector::unit(4, (a + c) % 2 + 2 * (b + d)).scale(&q(sign))
    });
    let alg = FinAlgebra::new(labels, mult, CoeffVector::unit(4, 0)).expect("H4 algebra");
    let t = |i: usize, j: usize| CoeffVector::unit(16, i * 4 + j);
    let comult = LinMap::from_columns(4, 16, vec![t(0, 0), t(1, 1), t(2, 0).add(&t(1, 2)), t(3, 1).add(&t(0, 3))]).expect("H4 comult");
    let counit = LinMap::from_columns(4, 1, vec![CoeffVector::from_ints(&[1]), CoeffVector::from_ints(&[1]), CoeffVector::zero(1), CoeffVector::zero(1)])
        .expect("H4 counit");
    let antipode = LinMap::from_columns(4, 4, vec![CoeffVector::from_ints(&[1, 0, 0, 0]), CoeffVector::from_ints(&[0, 1, 0, 0]), CoeffVector::from_ints(&[0, 0, 0, -1]), CoeffVector::from_ints(&[0, 0, 1, 0])])
        .expect("H4 antipode");
    FinHopf::new(alg, FinCoalgebra::new(comult, counit).expect("H4 coalgebra"), antipode).expect("H4")
}

/// 𝕜[y]/(y²) with basis 1, y.
pub fn dual_numbers() -> FinAlgebra {
    let mult = LinMap::from_columns(4, 2, vec![CoeffVector::unit(2, 0), CoeffVector::unit(2, 1), CoeffVector::unit(2, 1), CoeffVector::zero(2)]).expect("dual numbers");
    FinAlgebra::new(vec!["1".into(), "y".into()], mult, CoeffVector::unit(2, 0)).expect("dual numbers")
}

/// H₄ acting on 𝕜[y]/(y²) by g▷y = −y, x▷y = 0, with ρ(y) = y⊗g.
pub fn sweedler_yd() -> LeftRightYD {
    sweedler_yd_with(|a| match a {
        0 => CoeffVector::unit(8, 0),
        _ => CoeffVector::unit(8, 4 + 1),
    })
}

/// Same action with a replaced coaction (perturbations).
pub fn sweedler_yd_with(coact: impl Fn(usize) -> CoeffVector + Sync) -> LeftRightYD {
    let h = sweedler_hopf();
    LeftRightYD::from_fns(
        h,
        dual_numbers(),
        |hb, a| {
            let (g, x) = sweedler_word(hb);
            match (a, x) {
                (0, _) if x == 0 => CoeffVector::unit(2, 0),
                (1, 0) => CoeffVector::unit(2, 1).scale(&q(if g == 1 { -1 } else { 1 })),
                _ => CoeffVector::zero(2),
            }
        },
        coact,
    )
    .expect("H4 YD shapes")
}

/// 𝕜G with the adjoint action h▷g = hgh⁻¹ and coaction ρ(g) = g⊗g⁻¹.
pub fn adjoint_group_yd(g: &FiniteGroup) -> LeftRightYD {
    adjoint_group_yd_with(g, |x| g.inverse[x])
}

/// Adjoint action with coaction ρ(x) = x⊗c(x) for a given map c on the group.
pub fn adjoint_group_yd_with(g: &FiniteGroup, c: impl Fn(usize) -> usize + Sync) -> LeftRightYD {
    let h = g.hopf();
    let n = g.order();
    LeftRightYD::from_fns(h.clone(), h.algebra().clone(), |hb, a| CoeffVector::unit(n, g.conj(hb, a)), |a| CoeffVector::unit(n * n, a * n + c(a)))
        .expect("adjoint YD shapes")
}

/// Functions 𝕜^G with basis δ_x, the group acting by conjugation g▷δ_x = δ_{gxg⁻¹}.
pub fn function_algebra(g: &FiniteGroup) -> FinAlgebra {
    let n = g.order();
    let labels = g.labels.iter().map(|l| format!("δ{l}")).collect();
    let mult = LinMap::from_fn(n * n, n, |k| if k / n == k % n { CoeffVector::unit(n, k / n) } else { CoeffVector::zero(n) });
    let unit = CoeffVector::from_entries(n, (0..n).map(|i| (i, ExactScalar::one())).collect());
    FinAlgebra::new(labels, mult, unit).expect("function algebra")
}

/// 𝕜^G under conjugation with coaction ρ(δ_x) = Σ δ_x ⊗ deg(δ_x) given on a basis by `coact`.
pub fn dual_group_yd_with(g: &FiniteGroup, coact: impl Fn(usize) -> CoeffVector + Sync) -> LeftRightYD {
    LeftRightYD::from_fns(g.hopf(), function_algebra(g), |hb, a| CoeffVector::unit(g.order(), g.conj(hb, a)), coact).expect("dual YD shapes")
}

/// 𝕜^G under conjugation with the trivial coaction ρ(δ_x) = δ_x⊗e.
pub fn dual_group_yd(g: &FiniteGroup) -> LeftRightYD {
    let n = g.order();
    dual_group_yd_with(g, |a| CoeffVector::unit(n * n, a * n + g.identity))
}

/// 𝕜 with h▷1 = ε(h) and ρ(1) = 1⊗1.
pub fn trivial_yd(h: &FinHopf) -> LeftRightYD {
    LeftRightYD::from_fns(h.clone(), FinAlgebra::ground(), |hb, _| CoeffVector::from_dense(&[h.eps_basis(hb)]), |_| h.unit().clone())
        .expect("trivial YD shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::CheckOptions;
    use crate::hopfcore::{antipode_inverse, validate_hopf, verify_antipode, verify_coalgebra_parts};

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn hopf_algebras_validate() {
        for h in [FiniteGroup::cyclic(2).hopf(), FiniteGroup::s3().hopf(), sweedler_hopf()] {
            for r in validate_hopf(&h, &opts()) {
                assert!(r.passed, "{} {:?}", r.name, r.witnesses.first());
            }
        }
    }

    #[test]
    fn sweedler_details() {
        let h = sweedler_hopf();
        // S²(x) = −x
        assert_eq!(h.s2_basis(2), &CoeffVector::from_ints(&[0, 0, -1, 0]));
        // S⁻¹ = S³
        let s3 = h.antipode().compose(h.antipode_sq());
        assert_eq!(antipode_inverse(&h).unwrap(), s3);
        let bad = h.with_antipode(LinMap::from_columns(4, 4, vec![CoeffVector::from_ints(&[1, 0, 0, 0]), CoeffVector::from_ints(&[0, 1, 0, 0]), CoeffVector::from_ints(&[0, 0, 0, 1]), CoeffVector::from_ints(&[0, 0, 1, 0])]).unwrap()).unwrap();
        let r = verify_antipode(&bad, &opts());
        assert!(!r.passed);
        assert!(r.witnesses.iter().any(|w| w.index[0] == 2));
    }

    #[test]
    fn truncated_coproduct_breaks_counit() {
        let h = sweedler_hopf();
        let mut cols = h.coalgebra().comult().columns().to_vec();
        cols[2] = CoeffVector::unit(16, 2 * 4);
        let c = FinCoalgebra::new(LinMap::from_columns(4, 16, cols).unwrap(), h.coalgebra().counit().clone()).unwrap();
        let r = verify_coalgebra_parts(&c, &opts());
        assert!(!r.passed);
    }

    #[test]
    fn broken_table_is_not_a_group() {
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(matches!(group_algebra(t, vec!["a".into(), "b".into(), "c".into()]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn positive_yd_instances() {
        let s3 = FiniteGroup::s3();
        for yd in [adjoint_group_yd(&FiniteGroup::cyclic(2)), adjoint_group_yd(&s3), dual_group_yd(&s3), sweedler_yd(), trivial_yd(&sweedler_hopf()), trivial_yd(&s3.hopf())] {
            let s = yd.verify_all(&opts());
            assert!(s.passed(), "{:?}", s.failing());
        }
    }

    #[test]
    fn sweedler_trivial_coaction_breaks_only_yd() {
        let yd = sweedler_yd_with(|a| CoeffVector::unit(8, a * 4));
        let s = yd.verify_all(&opts());
        assert_eq!(s.failing(), vec![crate::ydstruct::YD_CONDITION]);
        // h = x, a = y
        let r = s.get(crate::ydstruct::YD_CONDITION).unwrap();
        assert!(r.witnesses.iter().any(|w| w.index == vec![2, 1]));
    }

    #[test]
    fn s3_perturbations() {
        let g = FiniteGroup::s3();
        // ρ(x) = x⊗x⁻¹ conjugated by (12)
        let c = 1;
        let twisted = adjoint_group_yd_with(&g, |x| g.conj(c, g.inverse[x]));
        let f = twisted.verify_all(&opts());
        assert!(f.failing().contains(&crate::ydstruct::YD_CONDITION));
        assert!(f.failing().contains(&crate::ydstruct::BRAIDED_COMMUTATIVITY));
        let trivial = adjoint_group_yd_with(&g, |_| g.identity);
        assert_eq!(trivial.verify_all(&opts()).failing(), vec![crate::ydstruct::BRAIDED_COMMUTATIVITY]);
    }
}
