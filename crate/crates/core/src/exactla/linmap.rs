use rayon::prelude::*;

use super::scalar::ExactScalar;
use super::vector::{Accumulator, CoeffVector};
use crate::error::{Error, Result};

/// Linear map stored by columns: column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinMap {
    src_dim: usize,
    dst_dim: usize,
    columns: Vec<CoeffVector>,
}

impl LinMap {
    pub fn from_columns(src_dim: usize, dst_dim: usize, columns: Vec<CoeffVector>) -> Result<Self> {
        if columns.len() != src_dim {
            return Err(Error::dims("linear map columns", src_dim, columns.len()));
        }
        if let Some(c) = columns.iter().find(|c| c.dim() != dst_dim) {
            return Err(Error::dims("linear map column length", dst_dim, c.dim()));
        }
        Ok(LinMap {
            src_dim,
            dst_dim,
            columns,
        })
    }

    /// Column constructor that panics on inconsistent input; for internal builders.
    pub fn from_fn(src_dim: usize, dst_dim: usize, f: impl Fn(usize) -> CoeffVector + Sync) -> Self {
        let columns: Vec<CoeffVector> = (0..src_dim).into_par_iter().map(&f).collect();
        for c in &columns {
            assert_eq!(c.dim(), dst_dim, "column length mismatch");
        }
        LinMap {
            src_dim,
            dst_dim,
            columns,
        }
    }

    /// Builds from (row, col, value) triples; duplicates are summed.
    pub fn from_triples(src_dim: usize, dst_dim: usize, triples: &[(usize, usize, ExactScalar)]) -> Result<Self> {
        let mut cols: Vec<Vec<(usize, ExactScalar)>> = vec![Vec::new(); src_dim];
        for (r, c, v) in triples {
            if *c >= src_dim {
                return Err(Error::dims("triple column index", src_dim, *c));
            }
            if *r >= dst_dim {
                return Err(Error::dims("triple row index", dst_dim, *r));
            }
            cols[*c].push((*r, v.clone()));
        }
        let columns = cols.into_iter().map(|e| CoeffVector::from_entries(dst_dim, e)).collect();
        Ok(LinMap {
            src_dim,
            dst_dim,
            columns,
        })
    }

    /// Nonzero entries as (row, col, value), sorted by (row, col).
    pub fn triples(&self) -> Vec<(usize, usize, ExactScalar)> {
        let mut out: Vec<(usize, usize, ExactScalar)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v.clone())))
            .collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            src_dim: n,
            dst_dim: n,
            columns: (0..n).map(|i| CoeffVector::unit(n, i)).collect(),
        }
    }

    pub fn zero(src_dim: usize, dst_dim: usize) -> Self {
        LinMap {
            src_dim,
            dst_dim,
            columns: vec![CoeffVector::zero(dst_dim); src_dim],
        }
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn dst_dim(&self) -> usize {
        self.dst_dim
    }

    pub fn column(&self, j: usize) -> &CoeffVector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[CoeffVector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> ExactScalar {
        self.columns[col].get(row)
    }

    pub fn apply(&self, v: &CoeffVector) -> CoeffVector {
        assert_eq!(v.dim(), self.src_dim, "apply: dimension mismatch");
        let mut acc = Accumulator::new(self.dst_dim);
        self.apply_into(v, &mut acc);
        acc.take()
    }

    /// Adds `self(v)` into an accumulator of length `dst_dim`.
    pub fn apply_into(&self, v: &CoeffVector, acc: &mut Accumulator) {
        for (j, c) in v.iter() {
            acc.add_scaled(c, &self.columns[j]);
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(other.dst_dim, self.src_dim, "compose: inner dimension mismatch");
        let columns: Vec<CoeffVector> = other.columns.par_iter().map(|c| self.apply(c)).collect();
        LinMap {
            src_dim: other.src_dim,
            dst_dim: self.dst_dim,
            columns,
        }
    }

    pub fn try_compose(&self, other: &LinMap) -> Result<LinMap> {
        if other.dst_dim != self.src_dim {
            return Err(Error::dims("composition", self.src_dim, other.dst_dim));
        }
        Ok(self.compose(other))
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.src_dim, self.dst_dim), (other.src_dim, other.dst_dim));
        LinMap {
            src_dim: self.src_dim,
            dst_dim: self.dst_dim,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> LinMap {
        LinMap {
            src_dim: self.src_dim,
            dst_dim: self.dst_dim,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Kronecker product `self ⊗ other` in row-major flattening.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let src = self.src_dim * other.src_dim;
        let dst = self.dst_dim * other.dst_dim;
        let od = other.src_dim;
        LinMap::from_fn(src, dst, |j| self.columns[j / od].tensor(&other.columns[j % od]))
    }

    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<Vec<(usize, ExactScalar)>> = vec![Vec::new(); self.dst_dim];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                cols[r].push((c, v.clone()));
            }
        }
        LinMap {
            src_dim: self.dst_dim,
            dst_dim: self.src_dim,
            columns: cols
                .into_iter()
                .map(|e| CoeffVector::from_sorted_unchecked(self.src_dim, e))
                .collect(),
        }
    }

    /// Row vectors of the matrix (length `src_dim` each).
    pub fn rows(&self) -> Vec<CoeffVector> {
        self.transpose().columns
    }

    pub fn is_identity(&self) -> bool {
        self.src_dim == self.dst_dim && self.columns.iter().enumerate().all(|(j, c)| *c == CoeffVector::unit(self.dst_dim, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> LinMap {
        let r = rows.len();
        let c = rows[0].len();
        let mut t = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t.push((i, j, ExactScalar::from_int(*v)));
            }
        }
        LinMap::from_triples(c, r, &t).unwrap()
    }

    #[test]
    fn compose_matches_hand_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.compose(&b), m(&[&[2, 1], &[4, 3]]));
        assert!(a.try_compose(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn kronecker_is_row_major() {
        let a = m(&[&[1, 2]]);
        let b = m(&[&[1], &[10]]);
        // rows: (0,0),(0,1); cols: (0,0),(1,0)
        assert_eq!(a.tensor(&b), m(&[&[1, 2], &[10, 20]]));
    }

    #[test]
    fn triples_round_trip() {
        let a = m(&[&[0, 5], &[-1, 0], &[0, 0]]);
        let t = a.triples();
        assert_eq!(t.len(), 2);
        assert_eq!(LinMap::from_triples(2, 3, &t).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
    }
}
