//! Finite truncations of the profinite, branch and congruence completions.

mod affine;
mod kernels;
mod presentation;
mod tower;
mod verify;
mod witnesses;

pub use affine::{
    abelian_image, act_on_vector, affine_generators, embed, embed_by_sections, point_vector,
    uniform_vector, AffineElement, A_RANK,
};
pub use kernels::{
    dependent_rows, functional_system, gamma_group, kernel_exact, kernel_span,
    lower_bound_elements, satisfies, KernelOptions, KernelReport, KLEIN_WORDS, X_WORDS,
};
pub use presentation::{
    connecting_matrix, hanoi_abbreviations, hanoi_presentation, k1_exponent_matrix,
    pervova_presentation, ConnectingReport, DERIVED_DEFS, DERIVED_NAMES, SECTION_IDENTITIES,
};
pub use tower::{
    contains_level_kernel, in_closure_of_derived, kernel_quotient_invariants, level_images,
    level_quotient, normal_index, projection_kernel_gens, stab_series, TowerReport,
};
pub use verify::{
    abelian_invariants_list, iterates, presentation_abelianization, verify_endomorphism,
    BoundSuite, CheckOutcome, CheckReport, EndoMode,
};
pub use witnesses::{
    conjugation_action_check, rigid_kernel_witnesses, ConjugationEntry, ConjugationReport, Coset,
};
