//! Finite-level computations for self-similar groups: level quotients,
//! congruence kernels and their abelian invariants.

pub mod catalog;
pub mod completions;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod perm;
pub mod permgrp;
pub mod tree;

pub use error::{Error, Result};
pub use limits::Limits;
pub use perm::Perm;
pub use tree::{Alphabet, GroupDef, Policy, Vertex, Word};
