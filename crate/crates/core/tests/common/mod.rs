//! Randomized properties, shared by the property and acceptance targets.

#![allow(dead_code)]

use std::collections::HashSet;

use branch_forge::catalog::builtin;
use branch_forge::completions::{affine_generators, embed, hanoi_presentation, AffineElement};
use branch_forge::linalg::{smith_normal_form, F2Matrix, F2Vec, IntMatrix};
use branch_forge::permgrp::{normal_closure, PermGroup};
use branch_forge::tree::{parse_word, GroupDef, Letter, Policy, Vertex, Word};
use branch_forge::{Limits, Perm};
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use proptest::prelude::*;
use proptest::test_runner::{RngSeed, TestRunner};

pub type Outcome = Result<(), String>;

pub const CASES: u32 = 1000;

fn config(seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
}

fn perm(n: u32) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn closure_size(n: usize, gens: &[Perm]) -> usize {
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g.images()[i as usize]).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

fn hanoi() -> GroupDef {
    builtin("hanoi3").unwrap().certify(20, 64).unwrap()
}

fn run<S: Strategy>(
    seed: u64,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    TestRunner::new(config(seed))
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn perm_group_axioms() -> Outcome {
    run(1, (perm(8), perm(8), perm(8)), |(p, q, r)| {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        prop_assert_eq!(p.then(&Perm::identity(8)), p.clone());
        prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
        prop_assert!(p.pow(p.order() as i64).is_identity());
        Ok(())
    })
}

pub fn chain_order_matches_closure() -> Outcome {
    run(
        2,
        (prop::collection::vec(perm(6), 1..=3), perm(6)),
        |(gens, x)| {
            let g = PermGroup::generated(6, &gens).unwrap();
            let n = closure_size(6, &gens);
            prop_assert_eq!(g.order(), BigUint::from(n));
            let mut with_x = gens.clone();
            with_x.push(x.clone());
            prop_assert_eq!(g.contains(&x), closure_size(6, &with_x) == n);
            Ok(())
        },
    )
}

pub fn normal_closure_is_normal() -> Outcome {
    run(
        3,
        (prop::collection::vec(perm(6), 1..=2), perm(6)),
        |(gens, s)| {
            let g = PermGroup::generated(6, &gens).unwrap();
            // any element of g works as a seed
            let seed = gens.iter().fold(s.clone(), |acc, h| acc.then(h));
            let seed = if g.contains(&seed) {
                seed
            } else {
                gens[0].clone()
            };
            let n = normal_closure(&g, std::slice::from_ref(&seed)).unwrap();
            prop_assert!(n.contains(&seed));
            for h in g.generators() {
                for k in n.generators() {
                    prop_assert!(n.contains(&k.conjugate(h)));
                }
            }
            Ok(())
        },
    )
}

pub fn section_cocycle() -> Outcome {
    run(
        4,
        (
            prop::sample::select(vec!["hanoi3", "pervova3", "twisted_twin"]),
            word(4, 8),
            word(4, 8),
            0usize..3,
        ),
        |(name, g, h, x)| {
            let def = builtin(name).unwrap();
            let k = def.generators().len();
            let d = def.degree();
            let clip = |w: &Word| {
                Word::from_letters(w.letters().iter().copied().filter(|l| l.generator() < k))
            };
            let (g, h, x) = (clip(&g), clip(&h), x % d);
            let v = Vertex::parse(def.alphabet(), &(x + 1).to_string()).unwrap();
            let lhs = def.section(&g.mul(&h), &v);
            let rhs = def.section(&g, &v).mul(&def.section(&h, &def.act(&g, &v)));
            let l = Limits::default();
            prop_assert_eq!(
                def.level_permutation(&lhs, 3, &l).unwrap(),
                def.level_permutation(&rhs, 3, &l).unwrap()
            );
            let gh = def.level_permutation(&g.mul(&h), 3, &l).unwrap();
            let gp = def.level_permutation(&g, 3, &l).unwrap();
            let hp = def.level_permutation(&h, 3, &l).unwrap();
            prop_assert_eq!(gh, gp.then(&hp));
            Ok(())
        },
    )
}

pub fn word_problem_consistent() -> Outcome {
    run(5, (word(3, 12), word(3, 6), 0usize..8), |(w, u, r)| {
        let def = hanoi();
        let l = Limits::default();
        let trivial = def.is_trivial(&w, Policy::NucleusCertified).unwrap();
        if !def.level_permutation(&w, 4, &l).unwrap().is_identity() {
            prop_assert!(!trivial);
        }
        if trivial {
            prop_assert!(def.level_permutation(&w, 5, &l).unwrap().is_identity());
        }
        let rels = hanoi_presentation(&def, 0).unwrap();
        let rel = &rels[r % rels.len()];
        let conj = u.inverse().mul(rel).mul(&u);
        prop_assert!(def.is_trivial(&conj, Policy::NucleusCertified).unwrap());
        prop_assert!(def
            .equal(&w.mul(&conj), &w, Policy::NucleusCertified)
            .unwrap());
        Ok(())
    })
}

pub fn words_round_trip() -> Outcome {
    run(6, (word(4, 16),), |(w,)| {
        let def = builtin("twisted_twin").unwrap();
        let text = def.format_word(&w);
        prop_assert_eq!(parse_word(&def, &text).unwrap(), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert_eq!(w.reversed().reversed(), w);
        Ok(())
    })
}

pub fn affine_homomorphism() -> Outcome {
    run(
        7,
        (0usize..=3, word(3, 8), word(3, 8), word(3, 8)),
        |(m, u, v, w)| {
            let def = builtin("hanoi3").unwrap();
            let l = Limits::default();
            let gens = affine_generators(&def, m, &l).unwrap();
            let (x, y, z) = (
                embed(&gens, &u).unwrap(),
                embed(&gens, &v).unwrap(),
                embed(&gens, &w).unwrap(),
            );
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(embed(&gens, &u.mul(&v)).unwrap(), x.mul(&y));
            prop_assert_eq!(x.perm.clone(), def.level_permutation(&u, m, &l).unwrap());
            prop_assert_eq!(x.mul(&y).to_perm(), x.to_perm().then(&y.to_perm()));
            prop_assert_eq!(AffineElement::from_perm(&x.to_perm()).unwrap(), x);
            Ok(())
        },
    )
}

pub fn smith_unimodular() -> Outcome {
    run(
        8,
        (1usize..=4, 1usize..=4, prop::collection::vec(-9i64..=9, 16)),
        |(rows, cols, entries)| {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| entries[i * 4..i * 4 + cols].to_vec())
                .collect();
            let a = IntMatrix::from_rows(&data, cols).unwrap();
            let s = smith_normal_form(&a);
            let d = s.u.mul(&a).unwrap().mul(&s.v).unwrap();
            for i in 0..rows {
                for j in 0..cols {
                    let want = if i == j && i < s.rank {
                        s.diagonal[i].clone()
                    } else {
                        BigInt::from(0)
                    };
                    prop_assert_eq!(d.get(i, j), &want);
                }
            }
            prop_assert_eq!(s.u.determinant().unwrap().abs(), BigInt::from(1));
            prop_assert_eq!(s.v.determinant().unwrap().abs(), BigInt::from(1));
            for w in s.invariant_factors().windows(2) {
                prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
            }
            prop_assert!(s.invariant_factors().iter().all(|x| x.is_positive()));
            if rows == cols {
                let product: BigInt = if s.rank == rows {
                    s.invariant_factors().iter().product()
                } else {
                    BigInt::from(0)
                };
                prop_assert_eq!(product, a.determinant().unwrap().abs());
            }
            Ok(())
        },
    )
}

pub fn f2_rank_matches_exhaustive_span() -> Outcome {
    run(
        9,
        (prop::collection::vec(
            prop::collection::vec(any::<bool>(), 10),
            0..=8,
        ),),
        |(rows,)| {
            let vecs: Vec<F2Vec> = rows.iter().map(|r| F2Vec::from_bits(r)).collect();
            let m = F2Matrix::from_rows(10, vecs.clone()).unwrap();
            let mut span = HashSet::new();
            for mask in 0u32..(1 << vecs.len()) {
                let mut v = F2Vec::zeros(10);
                for (i, r) in vecs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v.add_assign(r);
                    }
                }
                span.insert(v);
            }
            prop_assert_eq!(1usize << m.rank(), span.len());
            Ok(())
        },
    )
}

/// `|G_{n+1}| = |G_n| * |ker(G_{n+1} -> G_n)|`, the kernel order taken
/// from its own Schreier generators.
pub fn tower_product() -> Outcome {
    let l = Limits::default();
    for (name, top) in [
        ("hanoi3", 3),
        ("pervova3", 4),
        ("pervova3_d", 3),
        ("twisted_twin", 5),
        ("grigorchuk", 5),
    ] {
        let def = builtin(name).unwrap();
        for n in 0..top {
            let lower = branch_forge::completions::level_quotient(&def, n, &l)
                .map_err(|e| e.to_string())?;
            let upper = branch_forge::completions::level_quotient(&def, n + 1, &l)
                .map_err(|e| e.to_string())?;
            let k = branch_forge::completions::projection_kernel_gens(&def, n + 1, n, &l)
                .map_err(|e| e.to_string())?;
            let kernel = PermGroup::generated(upper.degree(), &k).map_err(|e| e.to_string())?;
            if upper.order() != lower.order() * kernel.order() {
                return Err(format!("{name} at level {n}"));
            }
        }
    }
    Ok(())
}

pub type Property = (&'static str, fn() -> Outcome);

pub const ALL: [Property; 10] = [
    ("group axioms", perm_group_axioms),
    ("chain order", chain_order_matches_closure),
    ("normal closure", normal_closure_is_normal),
    ("section cocycle", section_cocycle),
    ("word problem", word_problem_consistent),
    ("word round trip", words_round_trip),
    ("W_m homomorphism", affine_homomorphism),
    ("SNF unimodularity", smith_unimodular),
    ("F2 oracle", f2_rank_matches_exhaustive_span),
    ("tower product", tower_product),
];
