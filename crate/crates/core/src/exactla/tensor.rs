/// Row-major flattening of multi-indices: the leftmost factor varies slowest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(dims: &[usize]) -> Self {
        assert!(!dims.is_empty(), "tensor shape needs at least one factor");
        TensorShape { dims: dims.to_vec() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flat(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len(), "multi-index arity");
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "index {i} out of range {d}");
            acc * d + i
        })
    }

    pub fn unflat(&self, mut flat: usize) -> Vec<usize> {
        assert!(flat < self.size(), "flat index out of range");
        let mut out = vec![0; self.dims.len()];
        for (k, &d) in self.dims.iter().enumerate().rev() {
            out[k] = flat % d;
            flat /= d;
        }
        out
    }
}

pub fn tensor_index(dims: &[usize], idx: &[usize]) -> usize {
    TensorShape::new(dims).flat(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(tensor_index(&[2, 2], &[1, 0]), 2);
        assert_eq!(tensor_index(&[2, 3], &[1, 2]), 5);
        assert_eq!(tensor_index(&[2, 2, 2], &[1, 1, 1]), 7);
    }

    #[test]
    fn bijective() {
        let s = TensorShape::new(&[3, 1, 4, 2]);
        for f in 0..s.size() {
            assert_eq!(s.flat(&s.unflat(f)), f);
        }
    }
}

use super::linmap::LinMap;
use super::vector::{Accumulator, CoeffVector};

/// Applies `f` to factor `k` of a vector in `dims[0] ⊗ … ⊗ dims[n-1]`.
///
/// Factor `k` is replaced by a factor of size `f.dst_dim()`; a map into a
/// tensor square (a coproduct, say) therefore splits the factor in place and
/// a map out of a merged pair (a product) needs `dims` with the pair merged.
pub fn map_factor(v: &CoeffVector, dims: &[usize], k: usize, f: &LinMap) -> CoeffVector {
    let dk = dims[k];
    assert_eq!(f.src_dim(), dk, "map_factor: factor size");
    let post: usize = dims[k + 1..].iter().product();
    let pre_total: usize = dims[..k].iter().product();
    assert_eq!(v.dim(), pre_total * dk * post, "map_factor: vector size");
    let dout = f.dst_dim();
    let mut acc = Accumulator::new(pre_total * dout * post);
    for (flat, c) in v.iter() {
        let suf = flat % post;
        let rest = flat / post;
        let i = rest % dk;
        let pre = rest / dk;
        for (r, x) in f.column(i).iter() {
            acc.add_at((pre * dout + r) * post + suf, &(c * x));
        }
    }
    acc.take()
}

#[cfg(test)]
mod map_tests {
    use super::*;
    use crate::exactla::ExactScalar;

    #[test]
    fn map_middle_factor() {
        // swap map on a 2-dim middle factor of 2⊗2⊗3
        let swap = LinMap::from_columns(2, 2, vec![CoeffVector::unit(2, 1), CoeffVector::unit(2, 0)]).unwrap();
        let s = TensorShape::new(&[2, 2, 3]);
        let v = CoeffVector::unit(12, s.flat(&[1, 0, 2]));
        assert_eq!(map_factor(&v, &[2, 2, 3], 1, &swap), CoeffVector::unit(12, s.flat(&[1, 1, 2])));
        // a functional collapses the factor to size one
        let sum = LinMap::from_columns(2, 1, vec![CoeffVector::unit(1, 0), CoeffVector::unit(1, 0)]).unwrap();
        let w = map_factor(&v, &[2, 2, 3], 1, &sum);
        assert_eq!(w, CoeffVector::unit(6, 5));
        assert_eq!(w.get(5), ExactScalar::one());
    }
}
