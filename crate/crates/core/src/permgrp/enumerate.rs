//! Breadth-first enumeration of small groups.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// All elements of `<gens>` in breadth-first order from the identity.
pub fn enumerate(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for s in gens {
            let y = out[k].then(s);
            if !seen.contains(&y) {
                if out.len() >= cap {
                    return Err(Error::cap("group enumeration", cap));
                }
                seen.insert(y.clone());
                out.push(y);
            }
        }
        k += 1;
    }
    Ok(out)
}

/// A finite group held as an explicit element list, with subgroups as
/// index sets. Suited to quotients like `G/G''` of a few hundred elements.
pub struct Enumerated {
    pub elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl Enumerated {
    pub fn new(degree: usize, gens: &[Perm], cap: usize) -> Result<Self> {
        let elements = enumerate(degree, gens, cap)?;
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(Enumerated { elements, index })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Membership flags of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[Perm]) -> Vec<bool> {
        let mut flag = vec![false; self.len()];
        let mut list = vec![0usize];
        flag[0] = true;
        let mut k = 0;
        while k < list.len() {
            for s in gens {
                let y = self.elements[list[k]].then(s);
                let i = self.index[&y];
                if !flag[i] {
                    flag[i] = true;
                    list.push(i);
                }
            }
            k += 1;
        }
        flag
    }

    /// Commutator subgroup of the subgroup given by `members`.
    pub fn derived(&self, members: &[bool]) -> Vec<bool> {
        let sub: Vec<&Perm> = (0..self.len())
            .filter(|&i| members[i])
            .map(|i| &self.elements[i])
            .collect();
        let mut comms: Vec<Perm> = Vec::new();
        let mut seen = HashSet::new();
        for x in &sub {
            for y in &sub {
                let c = Perm::commutator(x, y);
                if seen.insert(c.clone()) {
                    comms.push(c);
                }
            }
        }
        self.subgroup(&comms)
    }
}
