//! `w * g`: the element acting as `g` below `w` and trivially elsewhere.

use crate::error::Result;
use crate::perm::Perm;

use super::def::{Generator, GroupDef, Vertex, AUX_PREFIX};
use super::word::Word;

/// Returns a definition extended with auxiliary generators and a word
/// equal to `w * g` in it.
pub fn translate(def: &GroupDef, w: &Vertex, g: &Word) -> Result<(GroupDef, Word)> {
    def.check_word(g)?;
    if w.level() == 0 {
        return Ok((def.clone(), g.clone()));
    }
    let d = def.degree();
    let first = def.generators().len();
    let k = w.level();
    let extra = (0..k)
        .map(|j| {
            let mut sections = vec![Word::identity(); d];
            let below = if j + 1 == k {
                g.clone()
            } else {
                Word::generator(first + j + 1)
            };
            sections[w.raw()[j] as usize] = below;
            Generator {
                name: format!("{AUX_PREFIX}{}", first + j),
                perm: Perm::identity(d),
                sections,
            }
        })
        .collect();
    Ok((def.extended(extra)?, Word::generator(first)))
}

/// An element described by words, translates and products of those.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementExpr {
    Word(Word),
    Translate(Vertex, Box<ElementExpr>),
    Product(Vec<ElementExpr>),
    Inverse(Box<ElementExpr>),
}

impl ElementExpr {
    pub fn translate(v: Vertex, inner: ElementExpr) -> Self {
        ElementExpr::Translate(v, Box::new(inner))
    }

    /// The tuple `(g_1, ..., g_d)` with trivial root permutation.
    pub fn tuple(entries: Vec<Word>, alphabet: super::def::Alphabet) -> Self {
        ElementExpr::Product(
            entries
                .into_iter()
                .enumerate()
                .filter(|(_, w)| !w.is_identity())
                .map(|(x, w)| {
                    let v = Vertex::from_letters(alphabet, &[x + 1]).expect("letter in range");
                    ElementExpr::translate(v, ElementExpr::Word(w))
                })
                .collect(),
        )
    }

    /// `prod_{v in X^n} v * g`.
    pub fn level_product(level: usize, g: Word, alphabet: super::def::Alphabet) -> Self {
        let d = alphabet.size();
        let count = d.pow(level as u32);
        ElementExpr::Product(
            (0..count)
                .map(|i| {
                    ElementExpr::translate(
                        Vertex::from_index(i, level, d),
                        ElementExpr::Word(g.clone()),
                    )
                })
                .collect(),
        )
    }

    /// Extends `def` as needed and returns a word for this element.
    pub fn realize(&self, def: &GroupDef) -> Result<(GroupDef, Word)> {
        match self {
            ElementExpr::Word(w) => {
                def.check_word(w)?;
                Ok((def.clone(), w.clone()))
            }
            ElementExpr::Translate(v, inner) => {
                let (d1, w) = inner.realize(def)?;
                translate(&d1, v, &w)
            }
            ElementExpr::Product(parts) => {
                let mut cur = def.clone();
                let mut acc = Word::identity();
                for p in parts {
                    let (next, w) = p.realize(&cur)?;
                    cur = next;
                    acc.append(&w);
                }
                Ok((cur, acc))
            }
            ElementExpr::Inverse(inner) => {
                let (d1, w) = inner.realize(def)?;
                Ok((d1, w.inverse()))
            }
        }
    }
}
