//! Evaluating words through the wreath recursion.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Perm;

use super::def::{GroupDef, Vertex};
use super::word::Word;

/// Finite-depth picture of an element: root permutations down to `depth`,
/// residual words below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Portrait {
    Leaf(Word),
    Node { perm: Perm, children: Vec<Portrait> },
}

impl Portrait {
    pub fn depth(&self) -> usize {
        match self {
            Portrait::Leaf(_) => 0,
            Portrait::Node { children, .. } => 1 + children.first().map_or(0, Portrait::depth),
        }
    }

    pub fn is_trivial_to_depth(&self) -> bool {
        match self {
            Portrait::Leaf(_) => true,
            Portrait::Node { perm, children } => {
                perm.is_identity() && children.iter().all(Portrait::is_trivial_to_depth)
            }
        }
    }
}

impl GroupDef {
    /// Image of letter `x` (0-based) under an oriented word, and the
    /// oriented section at `x`.
    fn walk(&self, w: &Word, x: u8) -> (u8, Word) {
        let mut p = x;
        let mut out = Word::identity();
        for &l in w.letters() {
            let g = l.generator();
            if l.is_inverse() {
                let q = self.eval_perm_inv[g][p as usize];
                out.append_inverse(&self.eval_sections[g][q as usize]);
                p = q;
            } else {
                out.append(&self.eval_sections[g][p as usize]);
                p = self.eval_perm[g][p as usize];
            }
        }
        (p, out)
    }

    fn oriented_root_images(&self, w: &Word) -> Vec<u8> {
        (0..self.degree() as u8)
            .map(|x| {
                let mut p = x;
                for &l in w.letters() {
                    let g = l.generator();
                    p = if l.is_inverse() {
                        self.eval_perm_inv[g][p as usize]
                    } else {
                        self.eval_perm[g][p as usize]
                    };
                }
                p
            })
            .collect()
    }

    pub(crate) fn oriented_root_is_identity(&self, w: &Word) -> bool {
        self.oriented_root_images(w)
            .iter()
            .enumerate()
            .all(|(i, &p)| p as usize == i)
    }

    /// Oriented sections at every letter, in letter order.
    pub(crate) fn oriented_sections(&self, w: &Word) -> Vec<Word> {
        (0..self.degree() as u8)
            .map(|x| self.walk(w, x).1)
            .collect()
    }

    /// Permutation of the letters induced by `g`.
    pub fn root_perm(&self, g: &Word) -> Perm {
        let w = self.oriented(g);
        let img = self.oriented_root_images(&w);
        Perm::from_images(img.into_iter().map(u32::from).collect()).expect("valid permutation")
    }

    /// `g@x` for every letter `x`.
    pub fn sections(&self, g: &Word) -> Vec<Word> {
        let w = self.oriented(g);
        self.oriented_sections(&w)
            .into_iter()
            .map(|s| self.unorient(s))
            .collect()
    }

    fn unorient(&self, w: Word) -> Word {
        match self.action() {
            super::def::ActionSide::Right => w,
            super::def::ActionSide::Left => w.reversed(),
        }
    }

    /// `g@v`, extended letter by letter.
    pub fn section(&self, g: &Word, v: &Vertex) -> Word {
        let mut w = self.oriented(g).into_owned();
        for &x in v.raw() {
            w = self.walk(&w, x).1;
        }
        self.unorient(w)
    }

    /// `v^g`.
    pub fn act(&self, g: &Word, v: &Vertex) -> Vertex {
        let mut w = self.oriented(g).into_owned();
        let mut out = Vec::with_capacity(v.level());
        for &x in v.raw() {
            let (y, s) = self.walk(&w, x);
            out.push(y);
            w = s;
        }
        Vertex::from_raw(out)
    }

    /// Level permutations of every generator on `X^n`, vertices indexed
    /// lexicographically.
    pub fn generator_level_perms(&self, n: usize, limits: &Limits) -> Result<Vec<Perm>> {
        let d = self.degree();
        let size = self
            .alphabet()
            .level_size(n)
            .filter(|&s| s <= limits.max_degree)
            .ok_or_else(|| Error::cap("level degree", limits.max_degree))?;
        let _ = size;
        let mut perms: Vec<Perm> = vec![Perm::identity(1); self.generators().len()];
        let mut inverses = perms.clone();
        let mut block = 1usize;
        for _level in 1..=n {
            let next: Vec<Perm> = (0..self.generators().len())
                .map(|g| {
                    let mut img = vec![0u32; block * d];
                    for x in 0..d {
                        let sub =
                            oriented_word_perm(&self.eval_sections[g][x], &perms, &inverses, block);
                        let y = self.eval_perm[g][x] as usize;
                        for u in 0..block {
                            img[x * block + u] = (y * block) as u32 + sub.image(u as u32);
                        }
                    }
                    Perm::from_images(img).expect("level permutation")
                })
                .collect();
            inverses = next.iter().map(Perm::inverse).collect();
            perms = next;
            block *= d;
        }
        Ok(perms)
    }

    /// Permutation of `X^n` induced by `g`.
    pub fn level_permutation(&self, g: &Word, n: usize, limits: &Limits) -> Result<Perm> {
        Ok(self.level_map(n, limits)?.image(g))
    }

    /// Evaluator for many words on the same level.
    pub fn level_map(&self, n: usize, limits: &Limits) -> Result<LevelMap> {
        let perms = self.generator_level_perms(n, limits)?;
        let inverses: Vec<Perm> = perms.iter().map(Perm::inverse).collect();
        let degree = perms.first().map_or(1, Perm::degree);
        Ok(LevelMap {
            perms,
            inverses,
            degree,
            action: self.action(),
        })
    }

    pub fn portrait(&self, g: &Word, depth: usize) -> Portrait {
        if depth == 0 {
            return Portrait::Leaf(g.clone());
        }
        Portrait::Node {
            perm: self.root_perm(g),
            children: self
                .sections(g)
                .iter()
                .map(|s| self.portrait(s, depth - 1))
                .collect(),
        }
    }
}

/// Product, left to right, of generator permutations.
/// Level-`n` permutations of the generators, applied to words.
#[derive(Clone, Debug)]
pub struct LevelMap {
    perms: Vec<Perm>,
    inverses: Vec<Perm>,
    degree: usize,
    action: super::def::ActionSide,
}

impl LevelMap {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.perms
    }

    pub fn image(&self, g: &Word) -> Perm {
        match self.action {
            super::def::ActionSide::Right => {
                oriented_word_perm(g, &self.perms, &self.inverses, self.degree)
            }
            super::def::ActionSide::Left => {
                oriented_word_perm(&g.reversed(), &self.perms, &self.inverses, self.degree)
            }
        }
    }
}

pub(crate) fn oriented_word_perm(
    w: &Word,
    perms: &[Perm],
    inverses: &[Perm],
    degree: usize,
) -> Perm {
    let mut p = Perm::identity(degree);
    for &l in w.letters() {
        if l.is_inverse() {
            p.then_assign(&inverses[l.generator()]);
        } else {
            p.then_assign(&perms[l.generator()]);
        }
    }
    p
}

/// Restriction of a level-`n` permutation to level `k <= n` prefixes.
pub fn restrict_to_level(p: &Perm, d: usize, n: usize, k: usize) -> Perm {
    assert!(k <= n);
    let block = d.pow((n - k) as u32);
    let size = d.pow(k as u32);
    let img = (0..size)
        .map(|u| p.image((u * block) as u32) / block as u32)
        .collect();
    Perm::from_images(img).expect("restriction of a tree automorphism")
}

/// Label for a point of `X^n` in level-permutation cycle notation.
pub fn vertex_label(idx: u32, level: usize, d: usize) -> String {
    Vertex::from_index(idx as usize, level, d).to_string()
}
