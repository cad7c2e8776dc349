//! Exact linear algebra over the rationals.

pub mod echelon;
pub mod linmap;
pub mod quotient;
pub mod scalar;
pub mod tensor;
pub mod vector;

pub use echelon::{image_basis, inverse, kernel, rank, rref, span_equal, Echelon};
pub use linmap::LinMap;
pub use quotient::{quotient, quotient_blocked, QuotientSpace, RelationBlock};
pub use scalar::ExactScalar;
pub use tensor::{map_factor, tensor_index, TensorShape};
pub use vector::{Accumulator, CoeffVector};
