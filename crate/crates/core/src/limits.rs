/// Resource caps shared by every expensive computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest permutation degree (d^n) a level quotient may have.
    pub max_degree: usize,
    /// Largest group enumerated element by element.
    pub max_enum: usize,
    /// Largest BFS transversal over an image group.
    pub max_transversal: usize,
    /// Depth cap used by depth-capped word-problem calls.
    pub word_depth: usize,
    /// Memo table cap of a single word-problem call.
    pub memo_cap: usize,
    /// Largest abelian quotient enumerated by `abelian_invariants_*`.
    pub abelian_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 243,
            max_enum: 2_000_000,
            max_transversal: 1_000_000,
            word_depth: 20,
            memo_cap: 1_000_000,
            abelian_cap: 1 << 16,
        }
    }
}
