//! Finite permutation groups: stabilizer chains and derived constructions.

mod chain;
mod enumerate;
mod ops;

pub use chain::{Bsgs, PermGroup};
pub use enumerate::{enumerate, Enumerated};
pub use ops::{
    abelian_invariants_finite, abelian_quotient_invariants, derived_subgroup, index,
    kernel_generators, normal_closure,
};
