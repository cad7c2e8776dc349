//! Row reduction over ℚ: incremental reduced echelon form, kernels, inverses.

use super::linmap::LinMap;
use super::scalar::ExactScalar;
use super::vector::{Accumulator, CoeffVector};

const NONE: usize = usize::MAX;

/// Reduced row echelon basis of a growing subspace.
///
/// Every stored row has a 1 in its pivot column and zeros in all other pivot
/// columns, so reducing a vector costs one pass over its pivot entries.
pub struct Echelon {
    rows: Vec<CoeffVector>,
    pivots: Vec<usize>,
    row_of: Vec<usize>,
    acc: Accumulator,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of: vec![NONE; dim],
            acc: Accumulator::new(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.row_of.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of[col] != NONE
    }

    /// Remainder of `v` modulo the current row space; supported on non-pivot columns.
    pub fn reduce(&mut self, v: &CoeffVector) -> CoeffVector {
        assert_eq!(v.dim(), self.dim(), "reduce: dimension mismatch");
        if v.iter().all(|(c, _)| self.row_of[c] == NONE) {
            return v.clone();
        }
        self.acc.add(v);
        for (c, x) in v.iter() {
            let r = self.row_of[c];
            if r != NONE {
                self.acc.add_scaled(&-x, &self.rows[r]);
            }
        }
        self.acc.take()
    }

    pub fn contains(&mut self, v: &CoeffVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set. Returns true when the rank grows.
    pub fn insert(&mut self, v: &CoeffVector) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero leading entry");
        let r = if inv.is_one() { r } else { r.scale(&inv) };
        for row in self.rows.iter_mut() {
            let x = row.get(p);
            if !x.is_zero() {
                *row = row.axpy(&-x, &r);
            }
        }
        self.row_of[p] = self.rows.len();
        self.pivots.push(p);
        self.rows.push(r);
        true
    }

    /// Rows sorted by pivot column, with the pivot list.
    pub fn into_rref(self) -> (Vec<CoeffVector>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Option<CoeffVector>> = self.rows.into_iter().map(Some).collect();
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        let rows = order.iter().map(|&i| rows[i].take().unwrap()).collect();
        (rows, pivots)
    }
}

/// Reduced row echelon form of the span of `rows`.
pub fn rref(dim: usize, rows: &[CoeffVector]) -> (Vec<CoeffVector>, Vec<usize>) {
    let mut e = Echelon::new(dim);
    for r in rows {
        e.insert(r);
    }
    e.into_rref()
}

pub fn rank(dim: usize, rows: &[CoeffVector]) -> usize {
    let mut e = Echelon::new(dim);
    rows.iter().filter(|r| e.insert(r)).count()
}

/// Equality of spans, compared through canonical echelon bases.
pub fn span_equal(dim: usize, a: &[CoeffVector], b: &[CoeffVector]) -> bool {
    rref(dim, a).0 == rref(dim, b).0
}

/// Basis of `{ v : f(v) = 0 }`, one vector per free column of the matrix.
pub fn kernel(f: &LinMap) -> Vec<CoeffVector> {
    let n = f.src_dim();
    let (rows, pivots) = rref(n, &f.rows());
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut entries = vec![(j, ExactScalar::one())];
            for (row, &p) in rows.iter().zip(&pivots) {
                let x = row.get(j);
                if !x.is_zero() {
                    entries.push((p, -x));
                }
            }
            CoeffVector::from_entries(n, entries)
        })
        .collect()
}

/// Two-sided inverse of a square map, if it exists.
pub fn inverse(f: &LinMap) -> Option<LinMap> {
    let n = f.src_dim();
    if f.dst_dim() != n {
        return None;
    }
    let mut e = Echelon::new(2 * n);
    for (i, row) in f.rows().iter().enumerate() {
        let mut entries: Vec<(usize, ExactScalar)> = row.iter().map(|(j, v)| (j, v.clone())).collect();
        entries.push((n + i, ExactScalar::one()));
        e.insert(&CoeffVector::from_entries(2 * n, entries));
    }
    let (rows, pivots) = e.into_rref();
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    let inv_rows: Vec<(usize, usize, ExactScalar)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().filter(|(j, _)| *j >= n).map(move |(j, v)| (i, j - n, v.clone())))
        .collect();
    Some(LinMap::from_triples(n, n, &inv_rows).expect("in range"))
}

/// Canonical basis of the column space of `f`.
pub fn image_basis(f: &LinMap) -> Vec<CoeffVector> {
    rref(f.dst_dim(), f.columns()).0
}
