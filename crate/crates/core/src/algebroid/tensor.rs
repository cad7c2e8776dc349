//! Balanced tensor products M ⊗_A N and the iterated quotient of a triple tensor.

use crate::error::{Error, Result};
use crate::exactla::{map_factor, quotient_blocked, CoeffVector, LinMap, QuotientSpace, RelationBlock};

/// Connected components of `0..dim` under the supports of `maps`, each sorted,
/// ordered by smallest element.
pub fn components(dim: usize, maps: &[LinMap]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for f in maps {
        for j in 0..dim {
            for (i, _) in f.column(j).iter() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; dim];
    for x in 0..dim {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[slot[r]].push(x);
    }
    comps
}

fn max_len(c: &[Vec<usize>]) -> usize {
    c.iter().map(Vec::len).max().unwrap_or(0)
}

/// Quotient of `M ⊗ N` by `(r_a m) ⊗ n − m ⊗ (l_a n)` for all `a`, `m`, `n`.
///
/// The relations are split along the connected components of whichever factor
/// gives the smaller blocks.
pub fn balanced_quotient(dm: usize, dn: usize, ract: &[LinMap], lact: &[LinMap]) -> QuotientSpace {
    let cm = components(dm, ract);
    let cn = components(dn, lact);
    let blocks = if dm * max_len(&cn) <= max_len(&cm) * dn {
        cn.iter()
            .map(|comp| {
                let mut pos = vec![usize::MAX; dn];
                for (k, &p) in comp.iter().enumerate() {
                    pos[p] = k;
                }
                let w = comp.len();
                let indices = (0..dm).flat_map(|m| comp.iter().map(move |&p| m * dn + p)).collect();
                let mut relations = Vec::with_capacity(ract.len() * dm * w);
                for (r, l) in ract.iter().zip(lact) {
                    for m in 0..dm {
                        for &p in comp {
                            let mut e: Vec<_> = r.column(m).iter().map(|(m2, c)| (m2 * w + pos[p], c.clone())).collect();
                            e.extend(l.column(p).iter().map(|(p2, c)| (m * w + pos[p2], -c)));
                            relations.push(CoeffVector::from_entries(dm * w, e));
                        }
                    }
                }
                RelationBlock { indices, relations }
            })
            .collect()
    } else {
        cm.iter()
            .map(|comp| {
                let mut pos = vec![usize::MAX; dm];
                for (k, &m) in comp.iter().enumerate() {
                    pos[m] = k;
                }
                let w = comp.len();
                let indices = comp.iter().flat_map(|&m| (0..dn).map(move |p| m * dn + p)).collect();
                let mut relations = Vec::with_capacity(ract.len() * w * dn);
                for (r, l) in ract.iter().zip(lact) {
                    for &m in comp {
                        for p in 0..dn {
                            let mut e: Vec<_> = r.column(m).iter().map(|(m2, c)| (pos[m2] * dn + p, c.clone())).collect();
                            e.extend(l.column(p).iter().map(|(p2, c)| (pos[m] * dn + p2, -c)));
                            relations.push(CoeffVector::from_entries(w * dn, e));
                        }
                    }
                }
                RelationBlock { indices, relations }
            })
            .collect()
    };
    quotient_blocked(dm * dn, blocks)
}

/// `M ⊗_A N` together with the actions that define it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor {
    pub quotient: QuotientSpace,
    pub dims: (usize, usize),
    /// Right action of each base basis element on the first factor.
    pub right_on_first: Vec<LinMap>,
    /// Left action of each base basis element on the second factor.
    pub left_on_second: Vec<LinMap>,
}

impl BalancedTensor {
    pub fn new(dm: usize, dn: usize, right_on_first: Vec<LinMap>, left_on_second: Vec<LinMap>) -> Self {
        let quotient = balanced_quotient(dm, dn, &right_on_first, &left_on_second);
        BalancedTensor {
            quotient,
            dims: (dm, dn),
            right_on_first,
            left_on_second,
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient.quotient_dim()
    }

    pub fn project(&self, v: &CoeffVector) -> CoeffVector {
        self.quotient.project_vec(v)
    }

    pub fn section(&self) -> &LinMap {
        self.quotient.section()
    }

    /// The generator `(r_a e_m) ⊗ e_n − e_m ⊗ (l_a e_n)` in `M ⊗ N`.
    pub fn generator(&self, a: usize, m: usize, n: usize) -> CoeffVector {
        let (dm, dn) = self.dims;
        let left = self.right_on_first[a].column(m).tensor(&CoeffVector::unit(dn, n));
        let right = CoeffVector::unit(dm, m).tensor(self.left_on_second[a].column(n));
        left.sub(&right)
    }

    pub fn base_dim(&self) -> usize {
        self.right_on_first.len()
    }

    /// Action on the quotient induced by an operator on the second factor.
    fn induced_on_second(&self, f: &LinMap) -> LinMap {
        let (dm, dn) = self.dims;
        LinMap::from_fn(self.dim(), self.dim(), |q| {
            let v = self.quotient.section().column(q);
            self.project(&map_factor(v, &[dm, dn], 1, f))
        })
    }

    /// Action on the quotient induced by an operator on the first factor.
    fn induced_on_first(&self, f: &LinMap) -> LinMap {
        let (dm, dn) = self.dims;
        LinMap::from_fn(self.dim(), self.dim(), |q| {
            let v = self.quotient.section().column(q);
            self.project(&map_factor(v, &[dm, dn], 0, f))
        })
    }
}

fn commute_all(a: &[LinMap], b: &[LinMap]) -> bool {
    a.iter().all(|f| b.iter().all(|g| f.compose(g) == g.compose(f)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Staging {
    /// (M₁ ⊗ M₂) first, then ⊗ M₃.
    Left,
    /// (M₂ ⊗ M₃) first, then M₁ ⊗.
    Right,
}

/// `M₁ ⊗_A M₂ ⊗_B M₃`: the triple tensor modulo relations in both adjacent pairs.
#[derive(Clone, Debug)]
pub struct DoubleQuotient {
    dims: [usize; 3],
    staging: Staging,
    inner: QuotientSpace,
    outer: QuotientSpace,
}

impl DoubleQuotient {
    /// `r1`/`l2` balance the first pair over A, `r2`/`l3` the second pair over B.
    /// The two actions on the middle factor must commute.
    pub fn new(dims: [usize; 3], r1: &[LinMap], l2: &[LinMap], r2: &[LinMap], l3: &[LinMap]) -> Result<Self> {
        if !commute_all(l2, r2) {
            return Err(Error::PostconditionFailed("middle factor actions commute".into()));
        }
        let [d1, d2, d3] = dims;
        let first = BalancedTensor::new(d1, d2, r1.to_vec(), l2.to_vec());
        let second = BalancedTensor::new(d2, d3, r2.to_vec(), l3.to_vec());
        let (q1, q2) = (first.dim(), second.dim());
        let c1 = max_len(&components(d1, r1));
        let c3 = max_len(&components(d3, l3));
        let left_cost = q1 * c3;
        let right_cost = c1 * q2;
        if left_cost <= right_cost {
            let ract: Vec<LinMap> = r2.iter().map(|f| first.induced_on_second(f)).collect();
            let outer = balanced_quotient(q1, d3, &ract, l3);
            Ok(DoubleQuotient {
                dims,
                staging: Staging::Left,
                inner: first.quotient,
                outer,
            })
        } else {
            let lact: Vec<LinMap> = l2.iter().map(|f| second.induced_on_first(f)).collect();
            let outer = balanced_quotient(d1, q2, r1, &lact);
            Ok(DoubleQuotient {
                dims,
                staging: Staging::Right,
                inner: second.quotient,
                outer,
            })
        }
    }

    pub fn dim(&self) -> usize {
        self.outer.quotient_dim()
    }

    pub fn project(&self, v: &CoeffVector) -> CoeffVector {
        let [d1, d2, d3] = self.dims;
        let mid = match self.staging {
            Staging::Left => map_factor(v, &[d1 * d2, d3], 0, self.inner.project()),
            Staging::Right => map_factor(v, &[d1, d2 * d3], 1, self.inner.project()),
        };
        self.outer.project_vec(&mid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{quotient, ExactScalar};

    fn diag(d: usize, vals: &[i64]) -> LinMap {
        LinMap::from_fn(d, d, |j| CoeffVector::unit(d, j).scale(&ExactScalar::from_int(vals[j])))
    }

    /// Dense relations, reduced globally, as an independent oracle.
    fn oracle(dm: usize, dn: usize, r: &[LinMap], l: &[LinMap]) -> QuotientSpace {
        let mut rels = Vec::new();
        for (ra, la) in r.iter().zip(l) {
            for m in 0..dm {
                for n in 0..dn {
                    let x = ra.column(m).tensor(&CoeffVector::unit(dn, n));
                    let y = CoeffVector::unit(dm, m).tensor(la.column(n));
                    rels.push(x.sub(&y));
                }
            }
        }
        quotient(dm * dn, &rels)
    }

    #[test]
    fn blocked_matches_global() {
        // 𝕜² acting diagonally on both sides: M ⊗_{𝕜²} N keeps matching idempotents.
        let e = [diag(3, &[1, 1, 0]), diag(3, &[0, 0, 1])];
        let f = [diag(2, &[1, 0]), diag(2, &[0, 1])];
        let q = balanced_quotient(3, 2, &e, &f);
        assert_eq!(q, oracle(3, 2, &e, &f));
        assert_eq!(q.quotient_dim(), 2 + 1);
    }

    #[test]
    fn nonsemisimple_blocks() {
        // dual numbers acting by a nilpotent on both factors
        let nil = |d: usize| LinMap::from_fn(d, d, |j| if j + 1 < d { CoeffVector::unit(d, j + 1) } else { CoeffVector::zero(d) });
        let r = [LinMap::identity(3), nil(3)];
        let l = [LinMap::identity(2), nil(2)];
        let q = balanced_quotient(3, 2, &r, &l);
        assert_eq!(q, oracle(3, 2, &r, &l));
    }

    #[test]
    fn double_quotient_matches_global() {
        let nil = |d: usize| LinMap::from_fn(d, d, |j| if j + 1 < d { CoeffVector::unit(d, j + 1) } else { CoeffVector::zero(d) });
        let dims = [3, 2, 3];
        let r1 = [LinMap::identity(3), nil(3)];
        let l2 = [LinMap::identity(2), nil(2)];
        // second pair over 𝕜², acting diagonally
        let r2 = [diag(2, &[1, 1]), diag(2, &[0, 0])];
        let l3 = [diag(3, &[1, 1, 1]), diag(3, &[0, 1, 0])];
        let dq = DoubleQuotient::new(dims, &r1, &l2, &r2, &l3).unwrap();
        let a = oracle(3, 2, &r1, &l2).relation_basis();
        let b = oracle(2, 3, &r2, &l3).relation_basis();
        let mut rels = Vec::new();
        for x in &a {
            for k in 0..3 {
                rels.push(x.tensor(&CoeffVector::unit(3, k)));
            }
        }
        for x in &b {
            for k in 0..3 {
                rels.push(CoeffVector::unit(3, k).tensor(x));
            }
        }
        let global = quotient(18, &rels);
        assert_eq!(dq.dim(), global.quotient_dim());
        for r in &rels {
            assert!(dq.project(r).is_zero());
        }
    }

    #[test]
    fn components_merge() {
        let f = LinMap::from_fn(4, 4, |j| CoeffVector::unit(4, [1, 0, 2, 2][j]));
        assert_eq!(components(4, &[f]), vec![vec![0, 1], vec![2, 3]]);
    }
}
