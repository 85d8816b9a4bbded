//! Equivariant Kazhdan-Lusztig and Z-polynomials of matroids under Young group actions.

pub mod cache;
pub mod closed;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod gamma;
pub mod group;
pub mod lr;
pub mod matroid;
pub mod partition;
pub mod rep;
pub mod verify;

/// Ground set elements are labelled by small integers.
pub type Label = u32;

pub use engine::{Engine, EquivariantMatroid};
pub use error::{Error, Result};
pub use group::{MultiPartition, YoungGroup};
pub use matroid::{Flat, Matroid};
pub use partition::Partition;
pub use rep::{GradedVirtualRep, VirtualRep};
