use std::fmt;

use super::scalar::ExactScalar;

/// Sparse vector over a fixed basis. Entries are sorted by index and never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoeffVector {
    dim: usize,
    entries: Vec<(usize, ExactScalar)>,
}

impl CoeffVector {
    pub fn zero(dim: usize) -> Self {
        CoeffVector {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range {dim}");
        CoeffVector {
            dim,
            entries: vec![(i, ExactScalar::one())],
        }
    }

    /// Builds a vector from arbitrary (index, value) pairs; duplicates are summed.
    pub fn from_entries(dim: usize, mut raw: Vec<(usize, ExactScalar)>) -> Self {
        raw.sort_by_key(|e| e.0);
        let mut entries: Vec<(usize, ExactScalar)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            assert!(i < dim, "index {i} out of range {dim}");
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|e| !e.1.is_zero());
        CoeffVector { dim, entries }
    }

    /// Trusts the caller: entries must be sorted, in range and nonzero.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, ExactScalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| e.0 < dim && !e.1.is_zero()));
        CoeffVector { dim, entries }
    }

    pub fn from_dense(values: &[ExactScalar]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        CoeffVector {
            dim: values.len(),
            entries,
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let v: Vec<ExactScalar> = values.iter().map(|&x| ExactScalar::from_int(x)).collect();
        Self::from_dense(&v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, ExactScalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactScalar)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> ExactScalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => ExactScalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &ExactScalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self) -> Vec<ExactScalar> {
        let mut out = vec![ExactScalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        CoeffVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &ExactScalar, other: &CoeffVector) -> Self {
        assert_eq!(self.dim, other.dim, "axpy dimension mismatch");
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        CoeffVector {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn add(&self, other: &CoeffVector) -> Self {
        self.axpy(&ExactScalar::one(), other)
    }

    pub fn sub(&self, other: &CoeffVector) -> Self {
        self.axpy(&-ExactScalar::one(), other)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-ExactScalar::one())
    }

    /// Tensor product in the row-major flattening: index `i * other.dim + j`.
    pub fn tensor(&self, other: &CoeffVector) -> Self {
        let d = other.dim;
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * d + j, x * y));
            }
        }
        CoeffVector {
            dim: self.dim * d,
            entries,
        }
    }

    /// Re-embeds into a larger space through an index map (must be increasing).
    pub fn reindex(&self, dim: usize, map: impl Fn(usize) -> usize) -> Self {
        let entries: Vec<_> = self.entries.iter().map(|(i, v)| (map(*i), v.clone())).collect();
        Self::from_entries(dim, entries)
    }
}

impl fmt::Debug for CoeffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|", self.dim)?;
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {i}:{v}")?;
        }
        write!(f, " ]")
    }
}

/// Scratch space for summing many sparse contributions.
///
/// Terms are appended and periodically sorted and merged, so the cost follows
/// the number of contributions rather than the dimension.
pub struct Accumulator {
    dim: usize,
    buf: Vec<(usize, ExactScalar)>,
    compacted: usize,
}

impl Accumulator {
    pub fn new(dim: usize) -> Self {
        Accumulator {
            dim,
            buf: Vec::new(),
            compacted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, v: &ExactScalar) {
        debug_assert!(i < self.dim);
        if v.is_zero() {
            return;
        }
        self.buf.push((i, v.clone()));
        if self.buf.len() >= 2 * self.compacted + 256 {
            self.compact();
        }
    }

    fn compact(&mut self) {
        self.buf.sort_unstable_by_key(|e| e.0);
        let mut out: Vec<(usize, ExactScalar)> = Vec::with_capacity(self.buf.len());
        for (i, v) in self.buf.drain(..) {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => {
                    if out.last().is_some_and(|(_, w)| w.is_zero()) {
                        out.pop();
                    }
                    out.push((i, v));
                }
            }
        }
        if out.last().is_some_and(|(_, w)| w.is_zero()) {
            out.pop();
        }
        self.buf = out;
        self.compacted = self.buf.len();
    }

    pub fn add_scaled(&mut self, c: &ExactScalar, v: &CoeffVector) {
        debug_assert_eq!(v.dim(), self.dim());
        if c.is_one() {
            for (i, x) in v.entries() {
                self.add_at(*i, x);
            }
        } else {
            for (i, x) in v.entries() {
                self.add_at(*i, &(x * c));
            }
        }
    }

    pub fn add(&mut self, v: &CoeffVector) {
        self.add_scaled(&ExactScalar::one(), v)
    }

    /// Adds `c · u ⊗ v` (row-major, `u` outer).
    pub fn add_outer(&mut self, c: &ExactScalar, u: &CoeffVector, v: &CoeffVector) {
        debug_assert_eq!(u.dim() * v.dim(), self.dim());
        let w = v.dim();
        for (i, x) in u.iter() {
            let cx = c * x;
            for (j, y) in v.iter() {
                self.add_at(i * w + j, &(&cx * y));
            }
        }
    }

    /// Empties the accumulator into a sparse vector.
    pub fn take(&mut self) -> CoeffVector {
        self.compact();
        self.compacted = 0;
        CoeffVector::from_sorted_unchecked(self.dim, std::mem::take(&mut self.buf))
    }
}
