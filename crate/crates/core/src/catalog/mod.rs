//! Builtin groups, relation suites and the group file format.

mod builtin;
mod format;
mod suite;

pub use builtin::{builtin, builtin_source, BUILTIN_NAMES};
pub use format::{parse_group_def, serialize};
pub use suite::{
    hanoi_relators, suite, Check, Side, Suite, HANOI_RELATORS, PERVOVA_KERNEL, SUITE_NAMES,
    TWIN_KERNEL,
};
