//! `M_m = ker(Γ_m -> G_m)` inside `A[X^m]`, exactly for small `m` and by
//! matching bounds beyond.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::limits::Limits;
use crate::linalg::{span_basis, F2Matrix, F2Vec};
use crate::perm::Perm;
use crate::permgrp::{derived_subgroup, kernel_generators, PermGroup};
use crate::tree::{parse_word, ElementExpr, GroupDef, Vertex};

use super::affine::{affine_generators, embed_by_sections, AffineElement, A_RANK};

fn level_size(m: usize) -> usize {
    3usize.pow(m as u32)
}

/// Vertex indices at level `m` below the vertex `prefix` (given as an
/// index at level `k`).
fn below(prefix: usize, k: usize, m: usize) -> std::ops::Range<usize> {
    let span = level_size(m - k);
    prefix * span..(prefix + 1) * span
}

/// Row summing coordinates `(u, s)` for `u` below `prefix.x`, `x` in
/// `letters`, and `s` in `gens`.
fn functional(m: usize, prefix: usize, k: usize, letters: &[usize], gens: &[usize]) -> F2Vec {
    let mut row = F2Vec::zeros(level_size(m) * A_RANK);
    for &x in letters {
        for u in below(prefix * 3 + x, k + 1, m) {
            for &s in gens {
                row.flip(u * A_RANK + s);
            }
        }
    }
    row
}

/// `Q_{1,2}, Q_{1,3}, Q_{2,1}, Q_{2,3}` restricted to `A[X^m]` as
/// `(letters, generators)`, 0-based.
const Q_FUNCTIONALS: [([usize; 2], [usize; 2]); 4] = [
    ([0, 2], [1, 2]),
    ([0, 1], [1, 2]),
    ([1, 2], [0, 2]),
    ([0, 1], [0, 2]),
];

/// The equations `w * Q` (`|w| <= m-1`) and `w * Σ` (`|w| = m-1`) on
/// `ker(W_m -> Aut X^m) = A[X^m]`, in that order.
pub fn functional_system(m: usize) -> F2Matrix {
    let cols = level_size(m) * A_RANK;
    let mut mat = F2Matrix::new(cols);
    if m == 0 {
        return mat;
    }
    for k in 0..m {
        for prefix in 0..level_size(k) {
            for (letters, gens) in Q_FUNCTIONALS {
                mat.push(functional(m, prefix, k, &letters, &gens))
                    .expect("row length");
            }
        }
    }
    for prefix in 0..level_size(m - 1) {
        mat.push(functional(m, prefix, m - 1, &[0, 1, 2], &[0, 1, 2]))
            .expect("row length");
    }
    mat
}

/// `P_i = (X \ {i}) * (sum of [s], s != gen_i)` at the root, `i = 1, 2, 3`.
pub fn dependent_rows(m: usize) -> Vec<F2Vec> {
    (0..3)
        .map(|i| {
            let letters: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let gens: Vec<usize> = (0..3).filter(|&s| s != i).collect();
            functional(m, 0, 0, &letters, &gens)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub level: usize,
    /// Whether `basis` is the whole of `M_m` (transversal mode).
    pub exact: bool,
    /// Reduced echelon basis: `M_m` in exact mode, the explicit lower-bound
    /// span otherwise.
    #[serde(serialize_with = "ser_vecs")]
    pub basis: Vec<F2Vec>,
    pub rank: usize,
    /// `3^(m+1) - rank(functional system)`.
    pub upper_bound: usize,
    #[serde(serialize_with = "ser_opt_vecs")]
    pub derived_basis: Option<Vec<F2Vec>>,
    pub derived_rank: Option<usize>,
    /// Lower-bound elements verified to lie in `Γ_m` by chain membership.
    pub lower_certified: Option<bool>,
    /// `log2(|Γ_m| / |G_m|)` from stabilizer chains, when computed.
    pub chain_rank: Option<usize>,
    pub bounds_meet: bool,
}

fn ser_vecs<S: serde::Serializer>(v: &[F2Vec], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_opt_vecs<S: serde::Serializer>(
    v: &Option<Vec<F2Vec>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_vecs(v, s),
        None => s.serialize_none(),
    }
}

/// `Γ_m` as a permutation group on `X^m x F2^3`.
pub fn gamma_group(def: &GroupDef, m: usize, limits: &Limits) -> Result<PermGroup> {
    let gens = affine_generators(def, m, limits)?;
    let perms: Vec<Perm> = gens.iter().map(AffineElement::to_perm).collect();
    PermGroup::generated(perms[0].degree(), &perms)
}

fn vectors_of_kernel(gens: &[Perm], limits: &Limits) -> Result<Vec<F2Vec>> {
    let ks = kernel_generators(
        gens,
        |p| {
            p.images()
                .iter()
                .step_by(8)
                .map(|&y| y / 8)
                .collect::<Vec<u32>>()
        },
        limits.max_transversal,
    )?;
    let vs = ks
        .iter()
        .map(|p| AffineElement::from_perm(p).map(|e| e.vector))
        .collect::<Result<Vec<_>>>()?;
    Ok(span_basis(&vs))
}

/// Exact `M_m` and `M_m ∩ Γ_m'` from Schreier generators.
pub fn kernel_exact(def: &GroupDef, m: usize, limits: &Limits) -> Result<(Vec<F2Vec>, Vec<F2Vec>)> {
    let gamma = gamma_group(def, m, limits)?;
    let basis = vectors_of_kernel(gamma.generators(), limits)?;
    let derived = derived_subgroup(&gamma)?;
    let dbasis = if derived.generators().is_empty() {
        Vec::new()
    } else {
        vectors_of_kernel(derived.generators(), limits)?
    };
    Ok((basis, dbasis))
}

pub const KLEIN_WORDS: [&str; 3] = ["[a,b][b,c]^a", "[b,c][c,a]^b", "[c,a][a,b]^c"];
pub const X_WORDS: [&str; 3] = ["b^ac", "c^ba", "a^cb"];

/// Explicit elements of `M_m` for `m >= 1`: `w * k` for `|w| = m-1` and
/// `k` a Klein element, and `X^(m-1) * x_s`.
pub fn lower_bound_elements(
    def: &GroupDef,
    m: usize,
    limits: &Limits,
) -> Result<Vec<AffineElement>> {
    assert!(m >= 1, "lower-bound elements start at level 1");
    let alphabet = def.alphabet();
    let mut out = Vec::new();
    for text in KLEIN_WORDS {
        let k = parse_word(def, text)?;
        for i in 0..level_size(m - 1) {
            let expr = ElementExpr::translate(
                Vertex::from_index(i, m - 1, 3),
                ElementExpr::Word(k.clone()),
            );
            let (ext, w) = expr.realize(def)?;
            out.push(embed_by_sections(&ext, &w, m, limits)?);
        }
    }
    for text in X_WORDS {
        let x = parse_word(def, text)?;
        let (ext, w) = ElementExpr::level_product(m - 1, x, alphabet).realize(def)?;
        out.push(embed_by_sections(&ext, &w, m, limits)?);
    }
    Ok(out)
}

/// Options for [`kernel_span`].
#[derive(Clone, Copy, Debug)]
pub struct KernelOptions {
    /// Use the transversal computation up to this level.
    pub exact_up_to: usize,
    /// Check the explicit elements against the `Γ_m` chain.
    pub certify: bool,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions {
            exact_up_to: 2,
            certify: true,
        }
    }
}

pub fn kernel_span(
    def: &GroupDef,
    m: usize,
    opts: KernelOptions,
    limits: &Limits,
) -> Result<KernelReport> {
    let cols = level_size(m) * A_RANK;
    let upper_bound = cols - functional_system(m).rank();
    if m <= opts.exact_up_to {
        let (basis, dbasis) = kernel_exact(def, m, limits)?;
        let rank = basis.len();
        return Ok(KernelReport {
            level: m,
            exact: true,
            rank,
            upper_bound,
            derived_rank: Some(dbasis.len()),
            derived_basis: Some(dbasis),
            lower_certified: None,
            chain_rank: None,
            bounds_meet: rank == upper_bound,
            basis,
        });
    }
    let elements = lower_bound_elements(def, m, limits)?;
    let vectors: Vec<F2Vec> = elements
        .iter()
        .filter(|e| e.perm.is_identity())
        .map(|e| e.vector.clone())
        .collect();
    let all_in_kernel = vectors.len() == elements.len();
    let basis = span_basis(&vectors);
    let (lower_certified, chain_rank) = if opts.certify {
        let gamma = gamma_group(def, m, limits)?;
        let inside = all_in_kernel && elements.iter().all(|e| gamma.contains(&e.to_perm()));
        let g_m = super::tower::level_quotient(def, m, limits)?;
        let quotient = gamma.order() / g_m.order();
        (Some(inside), log2_exact(&quotient))
    } else {
        (None, None)
    };
    let rank = basis.len();
    Ok(KernelReport {
        level: m,
        exact: false,
        rank,
        upper_bound,
        derived_basis: None,
        derived_rank: None,
        lower_certified,
        chain_rank,
        bounds_meet: all_in_kernel && rank == upper_bound,
        basis,
    })
}

fn log2_exact(n: &BigUint) -> Option<usize> {
    let bits = n.bits();
    if bits == 0 || *n != BigUint::one() << (bits - 1) {
        return None;
    }
    Some(bits as usize - 1)
}

/// Whether every vector satisfies every equation of the system.
pub fn satisfies(system: &F2Matrix, v: &F2Vec) -> bool {
    system.apply(v).is_zero()
}
