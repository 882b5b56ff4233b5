//! Exponent-sum computations for the Hanoi tower group.

use serde::Serialize;

use crate::catalog::{hanoi_relators, HANOI_RELATORS};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::tree::{parse_word, Abbreviations, ElementExpr, FreeSymbols, GroupDef, Policy, Word};

use super::verify::{iterates, CheckOutcome};

/// Generators of `Γ'` used in the level-1 kernel presentation.
pub const DERIVED_NAMES: [&str; 6] = ["d", "e", "f", "g", "h", "i"];
pub const DERIVED_DEFS: [&str; 6] = ["[a,b]", "[b,c]", "[c,a]", "d^c", "e^a", "f^b"];

/// Definition-bound abbreviations `d..i`.
pub fn hanoi_abbreviations(def: &GroupDef) -> Result<Abbreviations<'_>> {
    let mut ab = Abbreviations::new(def);
    for (n, t) in DERIVED_NAMES.iter().zip(DERIVED_DEFS) {
        ab.define(n, t)?;
    }
    Ok(ab)
}

/// Exponent sums of the level-1 kernel relators over `(d, e, f, g, h, i)`.
pub fn k1_exponent_matrix() -> IntMatrix {
    let free = FreeSymbols(DERIVED_NAMES.iter().map(|s| s.to_string()).collect());
    let rows: Vec<Vec<i64>> = HANOI_RELATORS
        .iter()
        .map(|r| parse_word(&free, r).expect("relator text").exponent_sums(6))
        .collect();
    IntMatrix::from_rows(&rows, 6).expect("rectangular")
}

/// `a^2, b^2, c^2` and the kernel relators with their `tau`-iterates up to
/// `depth`, as words in `a, b, c`.
pub fn hanoi_presentation(def: &GroupDef, depth: usize) -> Result<Vec<Word>> {
    let ab = hanoi_abbreviations(def)?;
    let base: Vec<Word> = hanoi_relators()
        .iter()
        .map(|r| parse_word(&ab, r))
        .collect::<Result<_>>()?;
    iterates(def, "tau", depth, &base)
}

/// `a^3, b^3, c^3`.
pub fn pervova_presentation(def: &GroupDef) -> Result<Vec<Word>> {
    ["a^3", "b^3", "c^3"]
        .iter()
        .map(|t| parse_word(def, t))
        .collect()
}

/// `(lhs at letter 1, rhs)`: `(x, 1, 1) = rhs` for the basis of `Γ'/Γ''`.
pub const SECTION_IDENTITIES: [(&str, &str); 4] = [
    ("d", "h-de"),
    ("e", "e-if-"),
    ("f", "efh-"),
    ("dg-", "h-de^3g-fh-f-e-"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectingReport {
    pub identities: Vec<CheckOutcome>,
    /// Rows and columns indexed by `(d, e, f, eh^-1)`.
    pub matrix: Vec<Vec<i64>>,
}

/// Image of a word over `d..i` in `Z^3 x Z/3` on the basis
/// `(d, e, f, t)`, where `g = d t^-1`, `h = e t^-1`, `i = f t^-1` and
/// `t = dg^-1 = eh^-1 = fi^-1` is the torsion class.
fn reduce(exponents: &[i64]) -> [i64; 4] {
    let mut v = [0i64; 4];
    for k in 0..3 {
        v[k] = exponents[k] + exponents[k + 3];
    }
    let t = -(exponents[3] + exponents[4] + exponents[5]);
    v[3] = (t + 1).rem_euclid(3) - 1;
    v
}

/// Matrix of `x -> (x, 1, 1)` on `(d, e, f, eh^-1)`, after verifying the
/// section identities in the group.
pub fn connecting_matrix(def: &GroupDef, policy: Policy) -> Result<ConnectingReport> {
    let ab = hanoi_abbreviations(def)?;
    let free = FreeSymbols(DERIVED_NAMES.iter().map(|s| s.to_string()).collect());
    let mut identities = Vec::new();
    let mut columns = Vec::new();
    for (lhs, rhs) in SECTION_IDENTITIES {
        let l = parse_word(&ab, lhs)?;
        let r = parse_word(&ab, rhs)?;
        let expr = ElementExpr::Product(vec![
            ElementExpr::tuple(vec![l, Word::identity(), Word::identity()], def.alphabet()),
            ElementExpr::Inverse(Box::new(ElementExpr::Word(r))),
        ]);
        let (ext, w) = expr.realize(def)?;
        let ok = ext.is_trivial(&w, policy)?;
        let check = format!("({lhs},1,1) = {rhs}");
        if !ok {
            return Err(Error::CheckFailed(format!(
                "section identity {check} does not hold"
            )));
        }
        identities.push(CheckOutcome { check, passed: ok });
        columns.push(reduce(&parse_word(&free, rhs)?.exponent_sums(6)));
    }
    let matrix = (0..4)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect();
    Ok(ConnectingReport { identities, matrix })
}
