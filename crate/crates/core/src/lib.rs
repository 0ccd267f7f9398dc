//! Exhaustive verification tooling for finite topological spaces.
//!
//! A space on `n ≤ 128` labelled points is held by the minimal open
//! neighbourhood of each point; its open sets are exactly the up-sets of the
//! specialization preorder `x ⊑ y ⟺ y ∈ N(x)`.

pub mod compactness;
pub mod domains;
pub mod enumerate;
pub mod error;
pub mod function_space;
pub mod json;
pub mod maps;
pub mod pointset;
pub mod preorder;
pub mod space;
pub mod verify;

pub use error::{Error, Result};
pub use maps::ContinuousMap;
pub use pointset::PointSet;
pub use space::FiniteSpace;
