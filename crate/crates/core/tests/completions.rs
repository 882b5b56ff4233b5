use std::collections::HashSet;

use branch_forge::catalog::{builtin, suite, PERVOVA_KERNEL, TWIN_KERNEL};
use branch_forge::completions::*;
use branch_forge::linalg::{smith_normal_form, span_basis, F2Vec};
use branch_forge::permgrp::{derived_subgroup, PermGroup};
use branch_forge::tree::{parse_word, GroupDef, Policy, Word};
use branch_forge::{Limits, Perm};
use num_bigint::BigUint;

fn lim() -> Limits {
    Limits::default()
}

fn words(def: &GroupDef, texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| parse_word(def, t).unwrap()).collect()
}

fn big(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

// closure of raw image vectors; no chain code involved
fn closure(gens: &[Perm]) -> HashSet<Vec<u32>> {
    let n = gens[0].degree();
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
    seen
}

fn compose(x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().map(|&i| y[i as usize]).collect()
}

fn inv(x: &[u32]) -> Vec<u32> {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

fn subgroup_closure(seed: &HashSet<Vec<u32>>, n: usize) -> HashSet<Vec<u32>> {
    let gens: Vec<Perm> = seed
        .iter()
        .map(|x| Perm::from_images(x.clone()).unwrap())
        .collect();
    if gens.is_empty() {
        return HashSet::from([(0..n as u32).collect()]);
    }
    closure(&gens)
}

fn commutators(xs: &HashSet<Vec<u32>>, ys: &HashSet<Vec<u32>>) -> HashSet<Vec<u32>> {
    let mut out = HashSet::new();
    for x in xs {
        for y in ys {
            out.insert(compose(&compose(&inv(x), &inv(y)), &compose(x, y)));
        }
    }
    out
}

#[test]
fn hanoi_tower() {
    let def = builtin("hanoi3").unwrap();
    let t = stab_series(&def, 3, &lim()).unwrap();
    assert_eq!(t.orders, big(&[1, 6, 648, 816_293_376]));
    // 2^(2*3^(n-1)) * 3^(3^n) for n >= 1
    let formula = |n: u32| {
        BigUint::from(2u32).pow(2 * 3u32.pow(n - 1)) * BigUint::from(3u32).pow(3u32.pow(n))
    };
    assert_eq!(
        t.quotients,
        vec![BigUint::from(6u32), formula(1), formula(2)]
    );
    for n in 0..3 {
        assert_eq!(&t.orders[n] * &t.quotients[n], t.orders[n + 1]);
    }
    assert_eq!(t.abelian[1..], [vec![2], vec![2], vec![2]]);
    let g2 = def.generator_level_perms(2, &lim()).unwrap();
    assert_eq!(closure(&g2).len(), 648);
}

#[test]
fn hanoi_derived_and_kernels() {
    let def = builtin("hanoi3").unwrap();
    let g2 = level_quotient(&def, 2, &lim()).unwrap();
    let d = derived_subgroup(&g2).unwrap();
    assert_eq!(d.order(), BigUint::from(324u32));
    let all = closure(g2.generators());
    let gens: HashSet<Vec<u32>> = g2
        .generators()
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    let oracle = subgroup_closure(&commutators(&all, &gens), 9);
    assert_eq!(oracle.len(), 324);

    let k = projection_kernel_gens(&def, 2, 1, &lim()).unwrap();
    assert_eq!(
        PermGroup::generated(9, &k).unwrap().order(),
        BigUint::from(108u32)
    );
    assert!(projection_kernel_gens(&def, 2, 2, &lim())
        .unwrap()
        .is_empty());
    let k = projection_kernel_gens(&def, 3, 2, &lim()).unwrap();
    assert_eq!(
        PermGroup::generated(27, &k).unwrap().order(),
        BigUint::from(1_259_712u32)
    );

    let bc = parse_word(&def, "bc").unwrap();
    assert_eq!(
        in_closure_of_derived(&def, &bc, 4, &lim()).unwrap(),
        vec![true; 4]
    );
    let a = parse_word(&def, "a").unwrap();
    assert!(!in_closure_of_derived(&def, &a, 2, &lim()).unwrap()[0]);
}

#[test]
fn pervova_tower() {
    let def = builtin("pervova3").unwrap();
    let t = stab_series(&def, 4, &lim()).unwrap();
    assert_eq!(t.orders, big(&[1, 3, 27, 2187, 1_162_261_467]));
    assert_eq!(t.abelian[1], vec![3]);
    assert_eq!(t.abelian[2..], [vec![3, 3], vec![3, 3], vec![3, 3]]);
    for n in 1..=3 {
        let gens = def.generator_level_perms(n, &lim()).unwrap();
        assert_eq!(BigUint::from(closure(&gens).len()), t.orders[n]);
    }
    let k = words(&def, &PERVOVA_KERNEL);
    assert_eq!(
        normal_index(&def, &k, 2, &lim()).unwrap(),
        BigUint::from(9u32)
    );
    assert!(contains_level_kernel(&def, &k, 3, 2, &lim()).unwrap());
    let cb = parse_word(&def, "c-b").unwrap();
    assert_eq!(
        in_closure_of_derived(&def, &cb, 4, &lim()).unwrap(),
        vec![true; 4]
    );
    let g = words(&def, &["a", "b", "c"]);
    assert!(contains_level_kernel(&def, &g, 3, 1, &lim()).unwrap());
}

#[test]
fn twin_tower() {
    let def = builtin("twisted_twin").unwrap();
    let t = stab_series(&def, 4, &lim()).unwrap();
    for n in 0..4 {
        assert_eq!(&t.orders[n] * &t.quotients[n], t.orders[n + 1]);
    }
    for n in 1..=4 {
        let gens = def.generator_level_perms(n, &lim()).unwrap();
        assert_eq!(BigUint::from(closure(&gens).len()), t.orders[n]);
    }
    let k = words(&def, &TWIN_KERNEL);
    assert!(contains_level_kernel(&def, &k, 4, 3, &lim()).unwrap());
    assert!(contains_level_kernel(&def, &k, 5, 3, &lim()).unwrap());
}

fn twin_quotient_oracle(def: &GroupDef, n: usize) -> usize {
    let gens = def.generator_level_perms(n, &lim()).unwrap();
    let d = gens[0].degree();
    let h = closure(&gens);
    let seeds: HashSet<Vec<u32>> = level_images(def, &words(def, &TWIN_KERNEL), n, &lim())
        .unwrap()
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    let mut conj = HashSet::new();
    for s in &seeds {
        for g in &h {
            conj.insert(compose(&compose(&inv(g), s), g));
        }
    }
    let k = subgroup_closure(&conj, d);
    let hg: HashSet<Vec<u32>> = gens.iter().map(|p| p.images().to_vec()).collect();
    let mut kh = subgroup_closure(&commutators(&k, &hg), d);
    // normal closure in H
    loop {
        let mut conj = HashSet::new();
        for x in &kh {
            for g in &hg {
                conj.insert(compose(&compose(&inv(g), x), g));
            }
        }
        if conj.is_subset(&kh) {
            break;
        }
        conj.extend(kh.iter().cloned());
        kh = subgroup_closure(&conj, d);
    }
    k.len() / kh.len()
}

#[test]
fn twin_kernel_quotient_matches_enumeration() {
    let def = builtin("twisted_twin").unwrap();
    let k = words(&def, &TWIN_KERNEL);
    for n in 3..=4 {
        let inv = kernel_quotient_invariants(&def, &k, n, &lim()).unwrap();
        let order: u64 = inv.iter().product();
        assert_eq!(order as usize, twin_quotient_oracle(&def, n), "level {n}");
        assert_eq!(inv, vec![2], "level {n}");
    }
}

#[test]
fn affine_generators_and_products() {
    let def = builtin("hanoi3").unwrap();
    let [a, b, c] = affine_generators(&def, 1, &lim()).unwrap();
    assert_eq!(a.vector, F2Vec::from_indices(9, [0]));
    assert_eq!(a.perm.to_string(), "(2 3)");
    assert_eq!(b.vector, F2Vec::from_indices(9, [4]));
    assert_eq!(c.vector, F2Vec::from_indices(9, [8]));
    assert!(a.mul(&a).is_identity());
    let [a0, _, _] = affine_generators(&def, 0, &lim()).unwrap();
    assert_eq!(a0.vector, F2Vec::from_indices(3, [0]));
    assert!(a0.perm.is_identity());
    let x = a.mul(&b).mul(&c);
    assert!(x.mul(&x.inverse()).is_identity());
    assert_eq!(AffineElement::from_perm(&x.to_perm()).unwrap(), x);
    assert!(affine_generators(&builtin("grigorchuk").unwrap(), 1, &lim()).is_err());
}

#[test]
fn embeddings_agree_and_kill_relators() {
    let def = builtin("hanoi3").unwrap();
    for m in 0..=3 {
        let gens = affine_generators(&def, m, &lim()).unwrap();
        for t in ["abc", "[a,b]", "b^ac", "(ab)^5c"] {
            let w = parse_word(&def, t).unwrap();
            assert_eq!(
                embed(&gens, &w).unwrap(),
                embed_by_sections(&def, &w, m, &lim()).unwrap(),
                "{t} at {m}"
            );
        }
        for r in hanoi_presentation(&def, 2).unwrap() {
            assert!(embed(&gens, &r).unwrap().is_identity());
        }
    }
}

#[test]
fn functional_system_ranks() {
    // 2(3^m - 1) + 3^(m-1) independent equations
    for (m, rank) in [(1, 5), (2, 19), (3, 61)] {
        let sys = functional_system(m);
        assert_eq!(sys.cols(), 3usize.pow(m as u32 + 1));
        assert_eq!(sys.rank(), rank);
        let mut rows = sys.rows().to_vec();
        rows.extend(dependent_rows(m));
        assert_eq!(span_basis(&rows).len(), rank);
    }
}

#[test]
fn kernel_spans() {
    let def = builtin("hanoi3").unwrap();
    let opts = KernelOptions::default();
    for (m, rank, derived) in [(0, 3, 0), (1, 4, 2), (2, 8, 6)] {
        let r = kernel_span(&def, m, opts, &lim()).unwrap();
        assert!(r.exact);
        assert_eq!(r.rank, rank);
        assert_eq!(r.derived_rank, Some(derived));
        if m >= 1 {
            let sys = functional_system(m);
            assert!(r.basis.iter().all(|v| satisfies(&sys, v)));
            assert_eq!(r.upper_bound, rank);
            // the bound computation agrees with the exact one
            let b = kernel_span(
                &def,
                m,
                KernelOptions {
                    exact_up_to: 0,
                    certify: true,
                },
                &lim(),
            )
            .unwrap();
            assert!(!b.exact && b.bounds_meet);
            assert_eq!(span_basis(&b.basis), r.basis);
        }
    }
    let r = kernel_span(&def, 3, opts, &lim()).unwrap();
    assert_eq!((r.rank, r.upper_bound), (20, 20));
    assert!(r.bounds_meet);
    assert_eq!(r.lower_certified, Some(true));
    assert_eq!(r.chain_rank, Some(20));
}

#[test]
fn rigid_witnesses() {
    let def = builtin("hanoi3").unwrap().certify(20, 64).unwrap();
    for m in 1..=2 {
        let r = rigid_kernel_witnesses(&def, m, Policy::NucleusCertified, &lim()).unwrap();
        assert!(r.passed(), "{:?}", r.outcomes);
    }
    let klein = lower_bound_elements(&def, 1, &lim()).unwrap();
    for x in &klein {
        assert!(x.perm.is_identity());
        assert!(x.mul(x).is_identity());
    }
}

#[test]
fn conjugation_action() {
    let def = builtin("hanoi3").unwrap();
    let r = conjugation_action_check(&def, &lim()).unwrap();
    assert_eq!(
        (r.order, r.derived_order, r.second_derived_order),
        (648, 324, 108)
    );
    assert_eq!(r.torsion_order, 3);
    assert!(r.passed());
    let e = r
        .entries
        .iter()
        .find(|e| e.element == "[b,c]" && e.by == "bc")
        .unwrap();
    assert_eq!(e.coset, Coset::Exact);
    assert!(r.squares.iter().all(|(_, inside)| !inside));
}

#[test]
fn hanoi_presentations() {
    let def = builtin("hanoi3").unwrap();
    let snf = smith_normal_form(&k1_exponent_matrix());
    assert_eq!(abelian_invariants_list(&snf), vec![3, 0, 0, 0]);
    assert_eq!(snf.free_rank(), 3);
    let rels = hanoi_presentation(&def, 3).unwrap();
    assert_eq!(
        abelian_invariants_list(&presentation_abelianization(&rels, 3)),
        vec![2, 2, 2]
    );
    let p = builtin("pervova3").unwrap();
    let rels = pervova_presentation(&p).unwrap();
    assert_eq!(
        abelian_invariants_list(&presentation_abelianization(&rels, 3)),
        vec![3, 3, 3]
    );
    let free = presentation_abelianization(&[], 2);
    assert_eq!(free.free_rank(), 2);
}

#[test]
fn connecting() {
    let def = builtin("hanoi3").unwrap().certify(20, 64).unwrap();
    let r = connecting_matrix(&def, Policy::NucleusCertified).unwrap();
    assert_eq!(
        r.matrix,
        vec![
            vec![1, 0, 0, 0],
            vec![0, -1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, -1, 1, 0]
        ]
    );
    assert!(r.identities.iter().all(|c| c.passed));
    assert_eq!(r.identities.len(), 4);
}

#[test]
fn endomorphisms() {
    let l = lim();
    let def = builtin("hanoi3").unwrap().certify(20, 64).unwrap();
    let rels = hanoi_presentation(&def, 3).unwrap();
    let sunic = def.endomorphism("sunic").unwrap();
    let r = verify_endomorphism(
        &def,
        sunic,
        &EndoMode::Relators(rels.clone()),
        Policy::NucleusCertified,
    )
    .unwrap();
    assert!(r.passed());
    let id = branch_forge::tree::Endomorphism {
        name: "id".into(),
        images: (0..3).map(Word::generator).collect(),
    };
    assert!(verify_endomorphism(
        &def,
        &id,
        &EndoMode::Relators(rels),
        Policy::NucleusCertified
    )
    .unwrap()
    .passed());
    let short = branch_forge::tree::Endomorphism {
        name: "short".into(),
        images: vec![Word::identity()],
    };
    assert!(verify_endomorphism(
        &def,
        &short,
        &EndoMode::Relators(vec![]),
        Policy::NucleusCertified
    )
    .is_err());
    // a -> b does not preserve the relators
    let swap = branch_forge::tree::Endomorphism {
        name: "bad".into(),
        images: vec![Word::generator(1), Word::generator(1), Word::generator(2)],
    };
    let rels = hanoi_presentation(&def, 0).unwrap();
    assert!(!verify_endomorphism(
        &def,
        &swap,
        &EndoMode::Relators(rels),
        Policy::NucleusCertified
    )
    .unwrap()
    .passed());
    let bound = BoundSuite::load(suite("twin_sigma").unwrap(), &l).unwrap();
    assert!(bound.run(Policy::NucleusCertified, &l).unwrap().passed());
}
