//! Bialgebroids and Hopf algebroids given by structure constants.

pub mod bialgebroid;
pub mod lu;
pub mod symmetric;
pub mod tensor;

pub use bialgebroid::{base_map_checks, bimodule_actions, tensor_over_base, tensor_over_base_unchecked, Bialgebroid, LeftBialgebroid, RightBialgebroid, Side};
pub use lu::{canonical_smash_section, LuHopfAlgebroid};
pub use symmetric::SymmetricHopfAlgebroid;
pub use tensor::{balanced_quotient, components, BalancedTensor, DoubleQuotient};
