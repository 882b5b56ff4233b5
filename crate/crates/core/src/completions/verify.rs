//! Relator suites, endomorphism checks and abelianized presentations.

use serde::Serialize;

use crate::catalog::{builtin, Check, Side, Suite};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{smith_normal_form, IntMatrix, Snf};
use crate::tree::{
    parse_word, Abbreviations, ElementExpr, Endomorphism, GroupDef, Policy, Vertex, Word,
};

use super::tower::contains_level_kernel;

/// SNF of the exponent-sum matrix of `relators` over `generators` free
/// generators.
pub fn presentation_abelianization(relators: &[Word], generators: usize) -> Snf {
    let rows: Vec<Vec<i64>> = relators
        .iter()
        .map(|r| r.exponent_sums(generators))
        .collect();
    let m = IntMatrix::from_rows(&rows, generators).expect("rows have equal length");
    smith_normal_form(&m)
}

/// Invariants of the abelianization as a list: torsion factors followed by
/// one `0` per free summand.
pub fn abelian_invariants_list(snf: &Snf) -> Vec<u64> {
    let mut out: Vec<u64> = snf
        .torsion()
        .iter()
        .map(|d| u64::try_from(d).expect("small invariant factor"))
        .collect();
    out.extend(std::iter::repeat_n(0, snf.free_rank()));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed).count()
    }

    fn push(&mut self, check: String, passed: bool) {
        self.outcomes.push(CheckOutcome { check, passed });
    }
}

/// How an endomorphism is checked.
#[derive(Clone, Debug)]
pub enum EndoMode {
    /// Each relator maps to a trivial element.
    Relators(Vec<Word>),
    /// `phi(g) = v * g` for each listed word.
    SectionForm(Vertex, Vec<Word>),
}

pub fn verify_endomorphism(
    def: &GroupDef,
    phi: &Endomorphism,
    mode: &EndoMode,
    policy: Policy,
) -> Result<CheckReport> {
    if phi.images.len() != def.generators().len() {
        return Err(Error::Definition(format!(
            "substitution `{}` must give an image for every generator",
            phi.name
        )));
    }
    let mut report = CheckReport {
        outcomes: Vec::new(),
    };
    match mode {
        EndoMode::Relators(rels) => {
            for r in rels {
                let ok = def.is_trivial(&r.substitute(&phi.images), policy)?;
                report.push(format!("{}({}) = 1", phi.name, def.format_word(r)), ok);
            }
        }
        EndoMode::SectionForm(v, words) => {
            for g in words {
                let expr = ElementExpr::Product(vec![
                    ElementExpr::Word(g.substitute(&phi.images)),
                    ElementExpr::Inverse(Box::new(ElementExpr::translate(
                        v.clone(),
                        ElementExpr::Word(g.clone()),
                    ))),
                ]);
                let (ext, w) = expr.realize(def)?;
                let ok = ext.is_trivial(&w, policy)?;
                report.push(
                    format!(
                        "{}({}) = {v}*{}",
                        phi.name,
                        def.format_word(g),
                        def.format_word(g)
                    ),
                    ok,
                );
            }
        }
    }
    Ok(report)
}

/// `endo^i(r)` for `i = 0..=n`.
pub fn iterates(def: &GroupDef, endo: &str, n: usize, relators: &[Word]) -> Result<Vec<Word>> {
    let phi = def.endomorphism(endo)?;
    let mut out = Vec::new();
    for r in relators {
        let mut w = r.clone();
        out.push(w.clone());
        for _ in 0..n {
            w = w.substitute(&phi.images);
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// A suite bound to its group, with abbreviations resolved.
pub struct BoundSuite {
    pub def: GroupDef,
    pub suite: Suite,
    names: Vec<(String, Word)>,
}

impl BoundSuite {
    /// Loads the suite's builtin group and attaches its nucleus.
    pub fn load(suite: Suite, limits: &Limits) -> Result<Self> {
        let def = builtin(&suite.group)?.certify(limits.word_depth, 64)?;
        Self::bind(def, suite)
    }

    pub fn bind(def: GroupDef, suite: Suite) -> Result<Self> {
        let mut ab = Abbreviations::new(&def);
        let mut names = Vec::new();
        for (name, text) in &suite.abbreviations {
            names.push((name.clone(), ab.define(name, text)?));
        }
        Ok(BoundSuite { def, suite, names })
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        let mut ab = Abbreviations::new(&self.def);
        for (n, w) in &self.names {
            ab.names.insert(n.clone(), w.clone());
        }
        parse_word(&ab, text)
    }

    fn words(&self, texts: &[String]) -> Result<Vec<Word>> {
        texts.iter().map(|t| self.word(t)).collect()
    }

    fn side(&self, s: &Side) -> Result<ElementExpr> {
        Ok(match s {
            Side::Word(t) => ElementExpr::Word(self.word(t)?),
            Side::Tuple(ts) => ElementExpr::tuple(self.words(ts)?, self.def.alphabet()),
            Side::Translate(v, t) => ElementExpr::translate(
                Vertex::parse(self.def.alphabet(), v)?,
                ElementExpr::Word(self.word(t)?),
            ),
        })
    }

    fn expanded(&self, relators: &[String], expand: &Option<(String, usize)>) -> Result<Vec<Word>> {
        let words = self.words(relators)?;
        match expand {
            None => Ok(words),
            Some((e, n)) => iterates(&self.def, e, *n, &words),
        }
    }

    pub fn run(&self, policy: Policy, limits: &Limits) -> Result<CheckReport> {
        let def = &self.def;
        let mut report = CheckReport {
            outcomes: Vec::new(),
        };
        for check in &self.suite.checks {
            match check {
                Check::Trivial(t) => {
                    let ok = def.is_trivial(&self.word(t)?, policy)?;
                    report.push(format!("{t} = 1"), ok);
                }
                Check::Equal(lhs, rhs) => {
                    let expr = ElementExpr::Product(vec![
                        self.side(lhs)?,
                        ElementExpr::Inverse(Box::new(self.side(rhs)?)),
                    ]);
                    let (ext, w) = expr.realize(def)?;
                    let ok = ext.is_trivial(&w, policy)?;
                    report.push(format!("{} = {}", side_text(lhs), side_text(rhs)), ok);
                }
                Check::Relators { relators, expand } => {
                    for r in self.expanded(relators, expand)? {
                        let ok = def.is_trivial(&r, policy)?;
                        report.push(format!("{} = 1", def.format_word(&r)), ok);
                    }
                }
                Check::Preserves {
                    endo,
                    relators,
                    expand,
                } => {
                    let rels = self.expanded(relators, expand)?;
                    let phi = def.endomorphism(endo)?;
                    report.outcomes.extend(
                        verify_endomorphism(def, phi, &EndoMode::Relators(rels), policy)?.outcomes,
                    );
                }
                Check::SectionForm {
                    endo,
                    vertex,
                    words,
                } => {
                    let phi = def.endomorphism(endo)?;
                    let mode = EndoMode::SectionForm(
                        Vertex::parse(def.alphabet(), vertex)?,
                        self.words(words)?,
                    );
                    report
                        .outcomes
                        .extend(verify_endomorphism(def, phi, &mode, policy)?.outcomes);
                }
                Check::Containment { kernel, n, k } => {
                    let ok = contains_level_kernel(def, &self.words(kernel)?, *n, *k, limits)?;
                    report.push(
                        format!("<<{}>> contains ker(G_{n} -> G_{k})", kernel.join(", ")),
                        ok,
                    );
                }
            }
        }
        Ok(report)
    }
}

fn side_text(s: &Side) -> String {
    match s {
        Side::Word(t) => t.clone(),
        Side::Tuple(ts) => format!("({})", ts.join(",")),
        Side::Translate(v, t) => format!("{v}*({t})"),
    }
}
