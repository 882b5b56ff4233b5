//! Named relation suites over the builtin groups.

use crate::error::{Error, Result};

/// One side of an equality: a word, a level-1 tuple `(w1,...,wd)`, or a
/// translate `v*w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Word(String),
    Tuple(Vec<String>),
    Translate(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Trivial(String),
    Equal(Side, Side),
    /// Every relator is trivial, together with its images under the
    /// iterates `e^1..e^n` of `expand = (e, n)`.
    Relators {
        relators: Vec<String>,
        expand: Option<(String, usize)>,
    },
    /// `endo(r)` is trivial for every relator `r` (expanded as above).
    Preserves {
        endo: String,
        relators: Vec<String>,
        expand: Option<(String, usize)>,
    },
    /// `endo(k) = v*k` for each listed word.
    SectionForm {
        endo: String,
        vertex: String,
        words: Vec<String>,
    },
    /// The normal closure of `kernel` in `G_n` contains the kernel of
    /// `G_n -> G_k`.
    Containment {
        kernel: Vec<String>,
        n: usize,
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suite {
    pub name: String,
    pub group: String,
    /// Named words, each may use the previous ones.
    pub abbreviations: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

pub const SUITE_NAMES: &[&str] = &[
    "pervova_branching",
    "pervova_kernel",
    "pervova_containment",
    "hanoi_sections",
    "hanoi_K1",
    "hanoi_tau",
    "hanoi_sunic",
    "twin_sigma",
    "twin_containment",
];

pub const HANOI_RELATORS: [&str; 5] = [
    "d-efi-ge-",
    "he-d-fdi-",
    "e-g-f-egf",
    "e-dhe^-2d-h^2",
    "hgd^-2f-gfe-",
];

/// `a^2, b^2, c^2` and the five normal generators of the level-1 kernel.
pub fn hanoi_relators() -> Vec<String> {
    let mut out = strings(&["a^2", "b^2", "c^2"]);
    out.extend(strings(&HANOI_RELATORS));
    out
}

pub const TWIN_KERNEL: [&str; 5] = ["[a,b]", "[b,c]", "[c,d]", "[d,b]", "bcd"];

pub const PERVOVA_KERNEL: [&str; 4] = ["[a,b]", "[a,c]", "[b,c]", "b-c"];

fn abbrev(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn hanoi_abbrev() -> Vec<(String, String)> {
    abbrev(&[
        ("d", "[a,b]"),
        ("e", "[b,c]"),
        ("f", "[c,a]"),
        ("g", "d^c"),
        ("h", "e^a"),
        ("i", "f^b"),
    ])
}

fn eq(lhs: Side, rhs: &str) -> Check {
    Check::Equal(lhs, Side::Word(rhs.to_string()))
}

fn translate(v: &str, w: &str) -> Side {
    Side::Translate(v.to_string(), w.to_string())
}

fn tuple(xs: &[&str]) -> Side {
    Side::Tuple(strings(xs))
}

pub fn suite(name: &str) -> Result<Suite> {
    let (group, abbreviations, checks) = match name {
        "pervova_branching" => (
            "pervova3",
            Vec::new(),
            vec![
                eq(translate("1", "[a,b]"), "[(b^a)-(b^a^a)-, b-(b^a)-]"),
                eq(translate("1", "[a,c]"), "[c-(c^a)-, (c^a^a)-c-]"),
                eq(translate("1", "[b,c]"), "[b^a, c]"),
            ],
        ),
        "pervova_kernel" => (
            "pervova3",
            Vec::new(),
            vec![
                Check::Equal(Side::Word("[a,b]b-c".into()), Side::Word("(b^a)-c".into())),
                eq(translate("1", "b-c"), "[a,b]b-c"),
                Check::Relators {
                    relators: strings(&["a^3", "b^3", "c^3"]),
                    expand: None,
                },
            ],
        ),
        "pervova_containment" => (
            "pervova3",
            Vec::new(),
            vec![Check::Containment {
                kernel: strings(&PERVOVA_KERNEL),
                n: 3,
                k: 2,
            }],
        ),
        "hanoi_sections" => (
            "hanoi3",
            hanoi_abbrev(),
            vec![
                eq(tuple(&["d", "1", "1"]), "h-de"),
                eq(tuple(&["e", "1", "1"]), "e-if-"),
                eq(tuple(&["f", "1", "1"]), "efh-"),
                eq(tuple(&["dg-", "1", "1"]), "h-de^3g-fh-f-e-"),
                Check::Equal(Side::Word("b^ac".into()), tuple(&["a", "a", "bc"])),
            ],
        ),
        "hanoi_K1" => (
            "hanoi3",
            hanoi_abbrev(),
            vec![Check::Relators {
                relators: strings(&HANOI_RELATORS),
                expand: Some(("tau".into(), 3)),
            }],
        ),
        "hanoi_tau" => (
            "hanoi3",
            hanoi_abbrev(),
            vec![Check::SectionForm {
                endo: "tau".into(),
                vertex: "1".into(),
                words: strings(&HANOI_RELATORS),
            }],
        ),
        "hanoi_sunic" => (
            "hanoi3",
            hanoi_abbrev(),
            vec![Check::Preserves {
                endo: "sunic".into(),
                relators: hanoi_relators(),
                expand: Some(("tau".into(), 3)),
            }],
        ),
        "twin_sigma" => (
            "twisted_twin",
            Vec::new(),
            vec![Check::SectionForm {
                endo: "sigma".into(),
                vertex: "1".into(),
                words: strings(&TWIN_KERNEL),
            }],
        ),
        "twin_containment" => (
            "twisted_twin",
            Vec::new(),
            vec![
                Check::Containment {
                    kernel: strings(&TWIN_KERNEL),
                    n: 4,
                    k: 3,
                },
                Check::Containment {
                    kernel: strings(&TWIN_KERNEL),
                    n: 5,
                    k: 3,
                },
            ],
        ),
        _ => {
            return Err(Error::Unknown {
                kind: "suite",
                name: name.to_string(),
            })
        }
    };
    Ok(Suite {
        name: name.to_string(),
        group: group.to_string(),
        abbreviations,
        checks,
    })
}
