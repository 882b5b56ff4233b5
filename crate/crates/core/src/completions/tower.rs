//! Level quotients `G_n = G / stab(n)` and their towers.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Result;
use crate::limits::Limits;
use crate::perm::Perm;
use crate::permgrp::{
    abelian_invariants_finite, abelian_quotient_invariants, derived_subgroup, index,
    kernel_generators, normal_closure, PermGroup,
};
use crate::tree::{restrict_to_level, GroupDef, Word};

pub fn level_quotient(def: &GroupDef, n: usize, limits: &Limits) -> Result<PermGroup> {
    let gens = def.generator_level_perms(n, limits)?;
    let degree = gens.first().map_or(1, Perm::degree);
    PermGroup::generated(degree, &gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    /// `|G_n|` for `n = 0..=levels`.
    pub orders: Vec<BigUint>,
    /// `|stab(n) / stab(n+1)|` for `n = 0..levels`.
    pub quotients: Vec<BigUint>,
    /// Invariants of `G_n / G_n'` for `n = 0..=levels`.
    pub abelian: Vec<Vec<u64>>,
}

pub fn stab_series(def: &GroupDef, levels: usize, limits: &Limits) -> Result<TowerReport> {
    let mut orders = Vec::new();
    let mut abelian = Vec::new();
    for n in 0..=levels {
        let g = level_quotient(def, n, limits)?;
        orders.push(g.order());
        abelian.push(abelian_invariants_finite(&g, limits.abelian_cap)?);
    }
    let quotients = orders.windows(2).map(|w| &w[1] / &w[0]).collect();
    Ok(TowerReport {
        orders,
        quotients,
        abelian,
    })
}

/// Schreier generators of `ker(G_n -> G_k)` as level-`n` permutations.
pub fn projection_kernel_gens(
    def: &GroupDef,
    n: usize,
    k: usize,
    limits: &Limits,
) -> Result<Vec<Perm>> {
    assert!(k <= n, "projection from level {n} to level {k}");
    let gens = def.generator_level_perms(n, limits)?;
    let d = def.degree();
    kernel_generators(
        &gens,
        |p| restrict_to_level(p, d, n, k),
        limits.max_transversal,
    )
}

/// Images of `words` in `G_n`.
pub fn level_images(
    def: &GroupDef,
    words: &[Word],
    n: usize,
    limits: &Limits,
) -> Result<Vec<Perm>> {
    let map = def.level_map(n, limits)?;
    Ok(words.iter().map(|w| map.image(w)).collect())
}

/// Whether the normal closure of `k_gens` in `G_n` contains the kernel
/// of `G_n -> G_k`.
pub fn contains_level_kernel(
    def: &GroupDef,
    k_gens: &[Word],
    n: usize,
    k: usize,
    limits: &Limits,
) -> Result<bool> {
    let g = level_quotient(def, n, limits)?;
    let images = level_images(def, k_gens, n, limits)?;
    let closure = normal_closure(&g, &images)?;
    let kernel = projection_kernel_gens(def, n, k, limits)?;
    Ok(kernel.iter().all(|p| closure.contains(p)))
}

/// For `n = 1..=levels`, whether the image of `g` lies in `G_n'`.
pub fn in_closure_of_derived(
    def: &GroupDef,
    g: &Word,
    levels: usize,
    limits: &Limits,
) -> Result<Vec<bool>> {
    (1..=levels)
        .map(|n| {
            let q = level_quotient(def, n, limits)?;
            let d = derived_subgroup(&q)?;
            Ok(d.contains(&def.level_permutation(g, n, limits)?))
        })
        .collect()
}

/// `[G_n : N]` for the normal closure `N` of `words` in `G_n`.
pub fn normal_index(def: &GroupDef, words: &[Word], n: usize, limits: &Limits) -> Result<BigUint> {
    let g = level_quotient(def, n, limits)?;
    let closure = normal_closure(&g, &level_images(def, words, n, limits)?)?;
    index(&g, &closure)
}

/// Invariants of `K_n / [K_n, G_n]`, where `K` is the normal closure of
/// `k_words`.
pub fn kernel_quotient_invariants(
    def: &GroupDef,
    k_words: &[Word],
    n: usize,
    limits: &Limits,
) -> Result<Vec<u64>> {
    let g = level_quotient(def, n, limits)?;
    let k = normal_closure(&g, &level_images(def, k_words, n, limits)?)?;
    let mut comms = Vec::new();
    for x in k.generators() {
        for h in g.generators() {
            let c = Perm::commutator(x, h);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let kh = normal_closure(&g, &comms)?;
    abelian_quotient_invariants(k.generators(), &kh, limits.abelian_cap)
}
