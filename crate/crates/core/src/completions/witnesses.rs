//! Witnesses for the rigid kernel and for the conjugation action of `V`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{in_span, span_basis, F2Vec};
use crate::perm::Perm;
use crate::permgrp::{derived_subgroup, Enumerated};
use crate::tree::{parse_word, ElementExpr, GroupDef, Policy, Vertex, Word};

use super::affine::{embed_by_sections, uniform_vector};
use super::kernels::{gamma_group, kernel_exact, KLEIN_WORDS, X_WORDS};
use super::verify::{CheckOutcome, CheckReport};

const X_SECTIONS: [[&str; 3]; 3] = [["a", "a", "bc"], ["ca", "b", "b"], ["c", "ab", "c"]];
const KLEIN_SECTIONS: [[&str; 3]; 3] = [
    ["1", "abc", "bac"],
    ["cba", "1", "bca"],
    ["cab", "acb", "1"],
];
/// `x̄_a = b̄ + c̄`, `x̄_b = ā + c̄`, `x̄_c = ā + b̄`.
const X_BAR: [[bool; 3]; 3] = [
    [false, true, true],
    [true, false, true],
    [true, true, false],
];

fn outcome(check: String, passed: bool) -> CheckOutcome {
    CheckOutcome { check, passed }
}

fn sections_match(def: &GroupDef, g: &Word, expected: &[&str; 3], policy: Policy) -> Result<bool> {
    if !def.root_perm(g).is_identity() {
        return Ok(false);
    }
    for (s, e) in def.sections(g).iter().zip(expected) {
        if !def.equal(s, &parse_word(def, e)?, policy)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three distinct nonzero vectors summing to zero.
fn is_klein(vs: &[F2Vec]) -> bool {
    vs.len() == 3
        && vs.iter().all(|v| !v.is_zero())
        && vs[0] != vs[1]
        && vs[1] != vs[2]
        && vs[0] != vs[2]
        && vs[0].add(&vs[1]) == vs[2]
}

/// Rigid-kernel witness table at level `m` (1 or 2) of the Hanoi group.
pub fn rigid_kernel_witnesses(
    def: &GroupDef,
    m: usize,
    policy: Policy,
    limits: &Limits,
) -> Result<CheckReport> {
    if !(1..=2).contains(&m) {
        return Err(Error::Definition(format!(
            "witnesses are computed for levels 1 and 2, not {m}"
        )));
    }
    let names = ["a", "b", "c"];
    let mut out = Vec::new();
    let gamma = gamma_group(def, m, limits)?;
    let derived = derived_subgroup(&gamma)?;
    let (basis, dbasis) = kernel_exact(def, m, limits)?;

    for (i, text) in X_WORDS.iter().enumerate() {
        let x = parse_word(def, text)?;
        let ok = sections_match(def, &x, &X_SECTIONS[i], policy)?;
        out.push(outcome(
            format!("x_{} = {text} = ({})", names[i], X_SECTIONS[i].join(",")),
            ok,
        ));
    }

    for (i, text) in X_WORDS.iter().enumerate() {
        let x = parse_word(def, text)?;
        let expr = ElementExpr::Product(vec![
            ElementExpr::Word(x.clone()),
            ElementExpr::Inverse(Box::new(ElementExpr::level_product(1, x, def.alphabet()))),
        ]);
        let (ext, w) = expr.realize(def)?;
        let e = embed_by_sections(&ext, &w, m, limits)?;
        out.push(outcome(
            format!("x_{0} (x_{0},x_{0},x_{0})^-1 in Γ_{m}'", names[i]),
            derived.contains(&e.to_perm()),
        ));
    }

    let mut klein_vectors: Vec<Vec<F2Vec>> = vec![Vec::new(); 3usize.pow(m as u32 - 1)];
    let mut klein_in_derived = true;
    for (j, text) in KLEIN_WORDS.iter().enumerate() {
        let k = parse_word(def, text)?;
        let ok = sections_match(def, &k, &KLEIN_SECTIONS[j], policy)?;
        out.push(outcome(
            format!("{text} = ({})", KLEIN_SECTIONS[j].join(",")),
            ok,
        ));
        for (i, slot) in klein_vectors.iter_mut().enumerate() {
            let expr = ElementExpr::translate(
                Vertex::from_index(i, m - 1, 3),
                ElementExpr::Word(k.clone()),
            );
            let (ext, w) = expr.realize(def)?;
            let e = embed_by_sections(&ext, &w, m, limits)?;
            klein_in_derived &= e.perm.is_identity() && derived.contains(&e.to_perm());
            slot.push(e.vector);
        }
    }
    out.push(outcome(
        format!("translates of the Klein elements lie in M_{m} ∩ Γ_{m}'"),
        klein_in_derived,
    ));
    out.push(outcome(
        "translates of the Klein elements form Klein four-groups".to_string(),
        klein_vectors.iter().all(|vs| is_klein(vs)),
    ));

    let xbar: Vec<F2Vec> = X_BAR.iter().map(|v| uniform_vector(m, v)).collect();
    out.push(outcome(
        format!("X^{m}*x̄_s lie in M_{m}"),
        xbar.iter().all(|v| in_span(&basis, v)),
    ));
    out.push(outcome(
        format!(
            "X^{m}*x̄_s form a Klein group of order {}",
            1usize << span_basis(&xbar).len()
        ),
        is_klein(&xbar) && span_basis(&xbar).len() == 2,
    ));
    out.push(outcome(
        format!("<X^{m}*x̄_s> ∩ (M_{m} ∩ Γ_{m}') = 1"),
        xbar.iter().all(|v| !in_span(&dbasis, v)),
    ));
    Ok(CheckReport { outcomes: out })
}

/// Where `x^conj * x^-expected` falls in `G_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coset {
    /// In `G_2''`.
    Exact,
    /// In `t^k G_2''` for the torsion element `t = eh^-1`, `k = 1, 2`.
    Torsion(u32),
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationEntry {
    pub element: String,
    pub by: String,
    pub expected_exponent: i64,
    pub coset: Coset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationReport {
    pub order: usize,
    pub derived_order: usize,
    pub second_derived_order: usize,
    /// Order of `eh^-1` modulo `G_2''`.
    pub torsion_order: usize,
    pub entries: Vec<ConjugationEntry>,
    /// `(u, whether u^2 lies in G_2'')` for `u = bc, ca, ab`.
    pub squares: Vec<(String, bool)>,
}

impl ConjugationReport {
    /// Every entry agrees, possibly up to the torsion coset, and no square
    /// lies in `G_2''`.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.coset != Coset::Other)
            && self.squares.iter().all(|(_, inside)| !inside)
    }
}

/// `d^{bc} ≃ d^-1`, `e^{bc} = e`, `f^{bc} ≃ f^-1` and cyclic analogues, in
/// `G_2 / G_2''` by enumeration.
pub fn conjugation_action_check(def: &GroupDef, limits: &Limits) -> Result<ConjugationReport> {
    let map = def.level_map(2, limits)?;
    let g2 = Enumerated::new(map.degree(), map.generators(), limits.max_enum)?;
    let all = vec![true; g2.len()];
    let d1 = g2.derived(&all);
    let d2 = g2.derived(&d1);
    let count = |v: &[bool]| v.iter().filter(|&&b| b).count();
    let img = |text: &str| -> Result<Perm> { Ok(map.image(&parse_word(def, text)?)) };
    let inside = |p: &Perm, set: &[bool]| -> bool { g2.position(p).is_some_and(|i| set[i]) };
    let t = img("[b,c]([b,c]^a)-")?;
    let t_inv = t.inverse();
    let t_inv2 = t_inv.then(&t_inv);

    let mut torsion_order = 1;
    let mut power = t.clone();
    while !inside(&power, &d2) {
        power = power.then(&t);
        torsion_order += 1;
    }
    let plan: [(&str, [(&str, i64); 3]); 3] = [
        ("bc", [("[a,b]", -1), ("[b,c]", 1), ("[c,a]", -1)]),
        ("ca", [("[b,c]", -1), ("[c,a]", 1), ("[a,b]", -1)]),
        ("ab", [("[c,a]", -1), ("[a,b]", 1), ("[b,c]", -1)]),
    ];
    let mut entries = Vec::new();
    for (by, items) in plan {
        let u = img(by)?;
        for (x, eps) in items {
            let xp = img(x)?;
            let y = xp.conjugate(&u).then(&xp.pow(-eps));
            let coset = if inside(&y, &d2) {
                Coset::Exact
            } else if inside(&y.then(&t_inv), &d2) {
                Coset::Torsion(1)
            } else if inside(&y.then(&t_inv2), &d2) {
                Coset::Torsion(2)
            } else {
                Coset::Other
            };
            entries.push(ConjugationEntry {
                element: x.to_string(),
                by: by.to_string(),
                expected_exponent: eps,
                coset,
            });
        }
    }
    let squares = ["bc", "ca", "ab"]
        .iter()
        .map(|u| {
            let p = img(u)?;
            Ok((format!("({u})^2"), inside(&p.then(&p), &d2)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjugationReport {
        order: g2.len(),
        derived_order: count(&d1),
        second_derived_order: count(&d2),
        torsion_order,
        entries,
        squares,
    })
}
