//! Deciding `g = 1` by exploring the states of `g`.
//!
//! `g` is trivial iff every state `g@v` has trivial root permutation. States
//! are explored breadth first as freely reduced words; a state already seen
//! is not expanded again, so the search closes on cycles such as
//! `aa -> aa`. A nontrivial element is therefore rejected at the smallest
//! depth where it moves a vertex.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::def::GroupDef;
use super::word::Word;

pub const MEMO_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Requires a definition with a verified nucleus; no depth cap.
    NucleusCertified,
    /// Gives up with [`Error::Inconclusive`] once this depth is reached
    /// with unexplored states.
    DepthCapped(usize),
}

/// Outcome of a triviality search with the depth at which it resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub trivial: bool,
    /// For a nontrivial element, the level of a vertex whose state moves
    /// its children; the element is nontrivial on level `depth + 1`.
    pub depth: usize,
    pub states: usize,
}

impl GroupDef {
    pub fn is_trivial(&self, g: &Word, policy: Policy) -> Result<bool> {
        self.triviality(g, policy, MEMO_CAP).map(|v| v.trivial)
    }

    pub fn triviality(&self, g: &Word, policy: Policy, memo_cap: usize) -> Result<Verdict> {
        self.check_word(g)?;
        let cap = match policy {
            Policy::NucleusCertified => {
                if !self.is_certified() {
                    return Err(Error::Definition(format!(
                        "group `{}` carries no verified nucleus",
                        self.name()
                    )));
                }
                usize::MAX
            }
            Policy::DepthCapped(k) => k,
        };
        let start = self.oriented(g).into_owned();
        let mut seen: HashSet<Word> = HashSet::new();
        let mut frontier = Vec::new();
        if !start.is_identity() {
            seen.insert(start.clone());
            frontier.push(start);
        }
        let mut depth = 0;
        while !frontier.is_empty() {
            if frontier.iter().any(|w| !self.oriented_root_is_identity(w)) {
                return Ok(Verdict {
                    trivial: false,
                    depth,
                    states: seen.len(),
                });
            }
            if depth >= cap {
                return Err(Error::Inconclusive(format!(
                    "{} unresolved states of `{}` at depth {depth}",
                    frontier.len(),
                    self.format_word(g)
                )));
            }
            let mut next = Vec::new();
            for w in &frontier {
                for s in self.oriented_sections(w) {
                    if !s.is_identity() && seen.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            if seen.len() > memo_cap {
                return Err(Error::cap("word-problem memo table", memo_cap));
            }
            frontier = next;
            depth += 1;
        }
        Ok(Verdict {
            trivial: true,
            depth,
            states: seen.len(),
        })
    }

    /// `g = h` in the group.
    pub fn equal(&self, g: &Word, h: &Word, policy: Policy) -> Result<bool> {
        self.is_trivial(&g.mul(&h.inverse()), policy)
    }
}
