//! Exact structure-constant engine for scalar-extension bialgebroids.

pub mod error;
pub mod algebroid;
pub mod catalog;
pub mod check;
pub mod exactla;
pub mod hopfcore;
pub mod scalarext;
pub mod smash;
pub mod ydstruct;

pub use error::{Error, ParseScalarError, Result};
pub use exactla::{CoeffVector, ExactScalar, LinMap, QuotientSpace};
pub use hopfcore::{FinAlgebra, FinCoalgebra, FinHopf};
