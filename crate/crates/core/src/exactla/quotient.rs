use rayon::prelude::*;

use super::echelon::Echelon;
use super::linmap::LinMap;
use super::scalar::ExactScalar;
use super::vector::CoeffVector;

/// `V / span(relations)` with the projection and the pivot-complement section.
///
/// Quotient basis vector `j` is the class of the `j`-th non-pivot ambient
/// basis vector; the section lifts it back to that basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    pivots: Vec<usize>,
    free: Vec<usize>,
    project: LinMap,
    section: LinMap,
}

/// Relations supported on a subset of ambient coordinates.
///
/// `relations` are written in local coordinates: local index `k` stands for
/// ambient index `indices[k]`. Indices must be strictly increasing.
pub struct RelationBlock {
    pub indices: Vec<usize>,
    pub relations: Vec<CoeffVector>,
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quotient_dim(&self) -> usize {
        self.free.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn project(&self) -> &LinMap {
        &self.project
    }

    pub fn section(&self) -> &LinMap {
        &self.section
    }

    /// Ambient indices lifted by the section, in quotient-basis order.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn project_vec(&self, v: &CoeffVector) -> CoeffVector {
        self.project.apply(v)
    }

    /// The reduced echelon basis of the relation subspace, sorted by pivot.
    pub fn relation_basis(&self) -> Vec<CoeffVector> {
        self.pivots
            .iter()
            .map(|&p| {
                let e = CoeffVector::unit(self.ambient_dim, p);
                e.sub(&self.section.apply(self.project.column(p)))
            })
            .collect()
    }
}

/// Quotient of an `ambient_dim`-dimensional space by the span of `relations`.
pub fn quotient(ambient_dim: usize, relations: &[CoeffVector]) -> QuotientSpace {
    quotient_blocked(
        ambient_dim,
        vec![RelationBlock {
            indices: (0..ambient_dim).collect(),
            relations: relations.to_vec(),
        }],
    )
}

/// Quotient by relations that split into coordinate-disjoint blocks.
///
/// Reducing each block separately gives the same echelon form as reducing the
/// union, because rows of different blocks never share a column.
pub fn quotient_blocked(ambient_dim: usize, blocks: Vec<RelationBlock>) -> QuotientSpace {
    // Per block: reduced rows in ambient coordinates, plus pivot columns.
    let reduced: Vec<Vec<(usize, CoeffVector)>> = blocks
        .into_par_iter()
        .map(|b| {
            debug_assert!(b.indices.windows(2).all(|w| w[0] < w[1]));
            let n = b.indices.len();
            let mut e = Echelon::new(n);
            for r in &b.relations {
                e.insert(r);
            }
            let (rows, pivots) = e.into_rref();
            rows.into_iter()
                .zip(pivots)
                .map(|(r, p)| (b.indices[p], r.reindex(ambient_dim, |k| b.indices[k])))
                .collect()
        })
        .collect();

    let mut row_at: Vec<Option<CoeffVector>> = vec![None; ambient_dim];
    for block in reduced {
        for (p, r) in block {
            assert!(row_at[p].is_none(), "relation blocks overlap");
            row_at[p] = Some(r);
        }
    }
    let pivots: Vec<usize> = (0..ambient_dim).filter(|&i| row_at[i].is_some()).collect();
    let free: Vec<usize> = (0..ambient_dim).filter(|&i| row_at[i].is_none()).collect();
    let q = free.len();
    let mut qindex = vec![usize::MAX; ambient_dim];
    for (k, &i) in free.iter().enumerate() {
        qindex[i] = k;
    }

    let mut columns = Vec::with_capacity(ambient_dim);
    for (i, row) in row_at.into_iter().enumerate() {
        let col = match row {
            None => CoeffVector::unit(q, qindex[i]),
            Some(r) => {
                let entries: Vec<(usize, ExactScalar)> =
                    r.iter().filter(|(j, _)| *j != i).map(|(j, x)| (qindex[j], -x)).collect();
                CoeffVector::from_entries(q, entries)
            }
        };
        columns.push(col);
    }
    let project = LinMap::from_columns(ambient_dim, q, columns).expect("consistent");
    let section = LinMap::from_columns(
        q,
        ambient_dim,
        free.iter().map(|&i| CoeffVector::unit(ambient_dim, i)).collect(),
    )
    .expect("consistent");

    QuotientSpace {
        ambient_dim,
        pivots,
        free,
        project,
        section,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::echelon::rank;

    fn v(x: &[i64]) -> CoeffVector {
        CoeffVector::from_ints(x)
    }

    #[test]
    fn trivial_and_diagonal() {
        let q = quotient(2, &[]);
        assert_eq!(q.quotient_dim(), 2);
        assert!(q.project().is_identity());

        let q = quotient(2, &[v(&[1, -1])]);
        assert_eq!(q.quotient_dim(), 1);
        assert_eq!(q.project().column(0), q.project().column(1));
        assert!(q.project().compose(q.section()).is_identity());
        assert!(q.project_vec(&v(&[1, -1])).is_zero());
    }

    #[test]
    fn rank_three_in_four() {
        let rels = [v(&[1, 1, 0, 0]), v(&[0, 1, 1, 0]), v(&[1, 2, 1, 0]), v(&[0, 0, 1, 1]), v(&[2, 0, -4, -2])];
        let q = quotient(4, &rels);
        assert_eq!(rank(4, &rels), 3);
        assert_eq!(q.quotient_dim(), 1);
        for r in &rels {
            assert!(q.project_vec(r).is_zero());
        }
        assert_eq!(q.relation_basis().len(), 3);
    }

    #[test]
    fn blocked_matches_global() {
        let rels = [v(&[1, 0, 2, 0, 0]), v(&[0, 1, 0, 0, -1]), v(&[3, 0, 6, 0, 0])];
        let global = quotient(5, &rels);
        let blocked = quotient_blocked(
            5,
            vec![
                RelationBlock {
                    indices: vec![0, 2],
                    relations: vec![v(&[1, 2]), v(&[3, 6])],
                },
                RelationBlock {
                    indices: vec![1, 3, 4],
                    relations: vec![v(&[1, 0, -1])],
                },
            ],
        );
        assert_eq!(global.project(), blocked.project());
        assert_eq!(global.section(), blocked.section());
    }
}
