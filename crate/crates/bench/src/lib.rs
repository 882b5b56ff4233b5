//! Benchmark fixtures.

use branch_forge::catalog::builtin;
use branch_forge::completions::hanoi_abbreviations;
use branch_forge::linalg::IntMatrix;
use branch_forge::tree::parse_word;
use branch_forge::{GroupDef, Limits, Perm, Word};

/// Generator images of a builtin group at `level`.
pub fn level_generators(name: &str, level: usize) -> Vec<Perm> {
    builtin(name)
        .unwrap()
        .generator_level_perms(level, &Limits::default())
        .unwrap()
}

pub fn certified(name: &str) -> GroupDef {
    builtin(name).unwrap().certify(20, 64).unwrap()
}

/// A Hanoi relator and its images under `tau`, as words in `a, b, c`.
pub fn hanoi_relator_iterates(def: &GroupDef, depth: usize) -> Vec<Word> {
    let ab = hanoi_abbreviations(def).unwrap();
    let mut w = parse_word(&ab, "d-efi-ge-").unwrap();
    let tau = def.endomorphism("tau").unwrap().images.clone();
    let mut out = vec![w.clone()];
    for _ in 0..depth {
        w = w.substitute(&tau);
        out.push(w.clone());
    }
    out
}

/// Dense `n x n` integer matrix with small entries and no special structure.
pub fn dense_matrix(n: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ((i * 7 + j * 13 + i * j) % 19) as i64 - 9)
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows, n).unwrap()
}
