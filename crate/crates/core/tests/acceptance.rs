//! One line per acceptance criterion, then a single verdict.

mod common;

use std::time::{Duration, Instant};

use branch_forge::catalog::{builtin, suite, HANOI_RELATORS, PERVOVA_KERNEL, TWIN_KERNEL};
use branch_forge::completions::*;
use branch_forge::linalg::smith_normal_form;
use branch_forge::tree::{nucleus, parse_word, GroupDef, Letter, Policy, Word};
use branch_forge::Limits;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

type Criterion = (&'static str, fn() -> Check);

fn lim() -> Limits {
    Limits::default()
}

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn e(err: branch_forge::Error) -> String {
    err.to_string()
}

fn words(def: &GroupDef, texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| parse_word(def, t).unwrap()).collect()
}

fn certified(name: &str) -> GroupDef {
    builtin(name).unwrap().certify(20, 64).unwrap()
}

fn hanoi_orders() -> Check {
    let def = builtin("hanoi3").unwrap();
    let start = Instant::now();
    let t = stab_series(&def, 3, &lim()).map_err(e)?;
    let t27 = start.elapsed();
    let q: Vec<u64> = t.quotients.iter().map(|x| x.try_into().unwrap()).collect();
    ensure(q == [6, 108, 1_259_712], format!("quotients {q:?}"))?;
    ensure(
        t.orders[3] == BigUint::from(816_293_376u64),
        format!("|G_3| = {}", t.orders[3]),
    )?;
    ensure(
        t27 < Duration::from_secs(30),
        format!("degree 27 took {t27:?}"),
    )?;
    let start = Instant::now();
    let g4 = level_quotient(&def, 4, &lim()).map_err(e)?;
    let t81 = start.elapsed();
    ensure(
        t81 < Duration::from_secs(120),
        format!("degree 81 took {t81:?}"),
    )?;
    Ok(format!(
        "quotients {q:?}, |G_3| = {}, |G_4| = {}",
        t.orders[3],
        g4.order()
    ))
}

fn hanoi_abelianizations() -> Check {
    let def = builtin("hanoi3").unwrap();
    let rels = hanoi_presentation(&def, 3).map_err(e)?;
    let ab = abelian_invariants_list(&presentation_abelianization(&rels, 3));
    ensure(ab == [2, 2, 2], format!("presentation gives {ab:?}"))?;
    let t = stab_series(&def, 3, &lim()).map_err(e)?;
    for n in 1..=3 {
        ensure(
            t.abelian[n] == [2],
            format!("G_{n} abelianization {:?}", t.abelian[n]),
        )?;
    }
    Ok(format!("presentation {ab:?}, G_1..G_3 [2]"))
}

fn k1_snf() -> Check {
    let snf = smith_normal_form(&k1_exponent_matrix());
    let d: Vec<String> = snf
        .invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect();
    ensure(d == ["1", "1", "3"], format!("invariant factors {d:?}"))?;
    ensure(
        snf.free_rank() == 3,
        format!("free rank {}", snf.free_rank()),
    )?;
    Ok("invariant factors (1,1,3), free rank 3".into())
}

fn kernel_ranks() -> Check {
    let def = builtin("hanoi3").unwrap();
    let mut ranks = Vec::new();
    for (m, rank, derived) in [(0, 3, 0), (1, 4, 2), (2, 8, 6)] {
        let r = kernel_span(&def, m, KernelOptions::default(), &lim()).map_err(e)?;
        ensure(r.exact && r.rank == rank, format!("M_{m} rank {}", r.rank))?;
        ensure(
            r.derived_rank == Some(derived),
            format!("M_{m} derived rank {:?}", r.derived_rank),
        )?;
        ranks.push(r.rank);
    }
    let r = kernel_span(&def, 3, KernelOptions::default(), &lim()).map_err(e)?;
    ensure(
        r.rank == 20 && r.upper_bound == 20 && r.bounds_meet && r.lower_certified == Some(true),
        format!("M_3 bounds {} / {}", r.rank, r.upper_bound),
    )?;
    Ok(format!(
        "ranks {ranks:?} exact, m = 3 bounds meet at 20, derived 0, 2, 6"
    ))
}

fn functional_ranks() -> Check {
    for (m, rank) in [(1, 5), (2, 19)] {
        let sys = functional_system(m);
        ensure(
            sys.rank() == rank && sys.row_count() == rank,
            format!("m = {m}: rank {} of {}", sys.rank(), sys.row_count()),
        )?;
    }
    Ok("5 of 5, 19 of 19".into())
}

fn rigid_witnesses() -> Check {
    let def = certified("hanoi3");
    let mut total = 0;
    for m in 1..=2 {
        let r = rigid_kernel_witnesses(&def, m, Policy::NucleusCertified, &lim()).map_err(e)?;
        let failed: Vec<&str> = r
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.check.as_str())
            .collect();
        ensure(failed.is_empty(), format!("m = {m}: {failed:?}"))?;
        total += r.outcomes.len();
    }
    Ok(format!("{total} checks at m = 1, 2"))
}

fn connecting() -> Check {
    let def = certified("hanoi3");
    let r = connecting_matrix(&def, Policy::NucleusCertified).map_err(e)?;
    let expected = vec![
        vec![1, 0, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, 1, 0],
        vec![1, -1, 1, 0],
    ];
    ensure(r.matrix == expected, format!("matrix {:?}", r.matrix))?;
    ensure(
        r.identities.len() == 4 && r.identities.iter().all(|c| c.passed),
        "section identities",
    )?;
    Ok(format!("{:?}, 4 identities", r.matrix))
}

fn conjugation() -> Check {
    let def = builtin("hanoi3").unwrap();
    let start = Instant::now();
    let r = conjugation_action_check(&def, &lim()).map_err(e)?;
    let took = start.elapsed();
    ensure(r.order == 648, format!("|G_2| = {}", r.order))?;
    ensure(r.passed(), format!("{:?}", r.entries))?;
    ensure(took < Duration::from_secs(10), format!("took {took:?}"))?;
    let torsion = r
        .entries
        .iter()
        .filter(|x| matches!(x.coset, Coset::Torsion(_)))
        .count();
    Ok(format!(
        "{} relations hold, {torsion} up to the order-{} coset; no square in G_2''",
        r.entries.len(),
        r.torsion_order
    ))
}

fn pervova() -> Check {
    let l = lim();
    let def = certified("pervova3");
    let ab = abelian_invariants_list(&presentation_abelianization(
        &pervova_presentation(&def).map_err(e)?,
        3,
    ));
    ensure(ab == [3, 3, 3], format!("presentation gives {ab:?}"))?;
    let t = stab_series(&def, 4, &l).map_err(e)?;
    for n in 2..=4 {
        ensure(
            t.abelian[n] == [3, 3],
            format!("G_{n} abelianization {:?}", t.abelian[n]),
        )?;
    }
    let k = words(&def, &PERVOVA_KERNEL);
    let idx = normal_index(&def, &k, 2, &l).map_err(e)?;
    ensure(idx == BigUint::from(9u32), format!("index {idx}"))?;
    ensure(
        contains_level_kernel(&def, &k, 3, 2, &l).map_err(e)?,
        "K does not contain stab(2) at level 3",
    )?;
    let b = BoundSuite::load(suite("pervova_branching").unwrap(), &l).map_err(e)?;
    ensure(
        b.run(Policy::NucleusCertified, &l).map_err(e)?.passed(),
        "branching identities",
    )?;
    let cb = parse_word(&def, "c-b").unwrap();
    let inside = in_closure_of_derived(&def, &cb, 4, &l).map_err(e)?;
    ensure(inside == [true; 4], format!("c-b in G_n': {inside:?}"))?;
    Ok(
        "[3,3,3], [3,3] at n = 2..4, index 9, stab(2) inside K, branching, c-b in G_1'..G_4'"
            .into(),
    )
}

fn twin() -> Check {
    let l = lim();
    let def = builtin("twisted_twin").unwrap();
    let b = BoundSuite::load(suite("twin_sigma").unwrap(), &l).map_err(e)?;
    let r = b.run(Policy::NucleusCertified, &l).map_err(e)?;
    ensure(r.passed() && r.outcomes.len() == 5, "sigma section form")?;
    let k = words(&def, &TWIN_KERNEL);
    for n in [4, 5] {
        ensure(
            contains_level_kernel(&def, &k, n, 3, &l).map_err(e)?,
            format!("stab(3) not in K at level {n}"),
        )?;
    }
    let inv: Vec<Vec<u64>> = (4..=6)
        .map(|n| kernel_quotient_invariants(&def, &k, n, &l))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    let stable = inv.windows(2).all(|w| w[0] == w[1]);
    ensure(
        inv.iter().all(|x| x == &[4, 2]),
        format!(
            "sigma and stab(3) hold; K_n/[K_n,H_n] = {inv:?} at n = 4..6 ({}), expected [4, 2]",
            if stable { "stable" } else { "not stable" }
        ),
    )?;
    Ok("sigma, stab(3) inside K, [4, 2] at n = 4..6".into())
}

fn random_word(rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(1..=12);
    Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..3), false)))
}

fn word_problem() -> Check {
    let def = certified("hanoi3");
    let ab = hanoi_abbreviations(&def).map_err(e)?;
    let base: Vec<Word> = HANOI_RELATORS
        .iter()
        .map(|r| parse_word(&ab, r).unwrap())
        .collect();
    let rels = iterates(&def, "tau", 2, &base).map_err(e)?;
    ensure(rels.len() == 15, format!("{} relators", rels.len()))?;
    for r in &rels {
        ensure(
            def.is_trivial(r, Policy::NucleusCertified).map_err(e)?,
            def.format_word(r),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut proved, mut by_level, mut drawn) = (0, 0, 0);
    let l = lim();
    while proved < 100 {
        let w = random_word(&mut rng);
        drawn += 1;
        // a, b, c are involutions, so these are freely reduced words
        if w.letters().windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        let trivial = def.is_trivial(&w, Policy::NucleusCertified).map_err(e)?;
        ensure(!trivial, format!("{} is a relator", def.format_word(&w)))?;
        proved += 1;
        if (1..=6).any(|n| !def.level_permutation(&w, n, &l).unwrap().is_identity()) {
            by_level += 1;
        }
    }
    Ok(format!(
        "15 relators trivial; 100 random reduced words proved nontrivial ({by_level} also seen by level 6, {drawn} drawn)"
    ))
}

fn nuclei() -> Check {
    let mut out = Vec::new();
    for (name, size) in [("hanoi3", 4), ("grigorchuk", 5)] {
        let def = builtin(name).unwrap();
        let start = Instant::now();
        let n = nucleus(&def, 20, 64).map_err(e)?;
        let took = start.elapsed();
        let names: Vec<String> = n.iter().map(|w| def.format_word(w)).collect();
        ensure(n.len() == size, format!("{name}: {names:?}"))?;
        ensure(
            took < Duration::from_secs(1),
            format!("{name} took {took:?}"),
        )?;
        out.push(format!("{name} {{{}}}", names.join(",")));
    }
    ensure(out[0] == "hanoi3 {1,a,b,c}", out[0].clone())?;
    Ok(out.join(", "))
}

fn properties() -> Check {
    let mut failed = Vec::new();
    for (name, run) in common::ALL {
        if let Err(err) = run() {
            failed.push(format!("{name}: {err}"));
        }
    }
    ensure(failed.is_empty(), failed.join("; "))?;
    Ok(format!(
        "{} properties, {} seed-pinned cases each",
        common::ALL.len(),
        common::CASES
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("hanoi tower orders", hanoi_orders),
        ("hanoi abelianizations", hanoi_abelianizations),
        ("level-1 kernel exponent matrix", k1_snf),
        ("M_m ranks", kernel_ranks),
        ("functional system ranks", functional_ranks),
        ("rigid kernel witnesses", rigid_witnesses),
        ("connecting matrix", connecting),
        ("conjugation action on G_2/G_2''", conjugation),
        ("pervova", pervova),
        ("twisted twin", twin),
        ("word problem", word_problem),
        ("nucleus", nuclei),
        ("property suites", properties),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match &result {
            Ok(detail) => println!("[{:>2}] PASS {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                println!("[{:>2}] FAIL {name} ({secs:.2}s): {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
