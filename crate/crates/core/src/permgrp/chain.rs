//! Deterministic Schreier–Sims.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// Index into `orbit` of each point, or `ABSENT`.
    pos: Vec<u32>,
    /// `fwd[k]` maps `base` to `orbit[k]`; `inv[k]` is its inverse.
    fwd: Vec<Perm>,
    inv: Vec<Perm>,
    /// Number of generators already used for Schreier generators at
    /// each orbit point.
    checked: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut pos = vec![ABSENT; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            pos,
            fwd: vec![Perm::identity(degree)],
            inv: vec![Perm::identity(degree)],
            checked: vec![0],
        }
    }

    fn push_point(&mut self, y: u32, u: Perm) {
        self.pos[y as usize] = self.orbit.len() as u32;
        self.orbit.push(y);
        self.inv.push(u.inverse());
        self.fwd.push(u);
        self.checked.push(0);
    }

    fn add_gen(&mut self, s: Perm) {
        self.gens.push(s);
        let s = self.gens.last().unwrap().clone();
        let known = self.orbit.len();
        for k in 0..known {
            let y = s.image(self.orbit[k]);
            if self.pos[y as usize] == ABSENT {
                let u = self.fwd[k].then(&s);
                self.push_point(y, u);
            }
        }
        self.close_orbit(known);
    }

    fn close_orbit(&mut self, mut k: usize) {
        while k < self.orbit.len() {
            let x = self.orbit[k];
            for g in 0..self.gens.len() {
                let y = self.gens[g].image(x);
                if self.pos[y as usize] == ABSENT {
                    let u = self.fwd[k].then(&self.gens[g]);
                    self.push_point(y, u);
                }
            }
            k += 1;
        }
    }

    /// Next Schreier generator `u_x s u_{x^s}^-1` not yet examined.
    fn next_schreier(&mut self) -> Option<Perm> {
        for k in 0..self.orbit.len() {
            while self.checked[k] < self.gens.len() {
                let s = &self.gens[self.checked[k]];
                self.checked[k] += 1;
                let y = s.image(self.orbit[k]);
                let j = self.pos[y as usize] as usize;
                let mut t = self.fwd[k].then(s);
                if t == self.fwd[j] {
                    continue;
                }
                t.then_assign(&self.inv[j]);
                return Some(t);
            }
        }
        None
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

/// Serializable base and strong generators, level by level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bsgs {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub base: Vec<u32>,
    pub strong: Vec<Vec<Perm>>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// The group generated by `gens`, all of degree `degree`.
    pub fn generated(degree: usize, gens: &[Perm]) -> Result<Self> {
        let mut g = Self::trivial(degree);
        for p in gens {
            g.add_generator(p.clone())?;
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Residue of `g` after sifting through levels `from..`, and the level
    /// where sifting stopped.
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (j, l) in self.levels.iter().enumerate().skip(from) {
            let x = g.image(l.base);
            let k = l.pos[x as usize];
            if k == ABSENT {
                return (g, j);
            }
            g.then_assign(&l.inv[k as usize]);
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.sift(p.clone(), 0).0.is_identity()
    }

    /// Adds a generator; returns whether the group grew.
    pub fn add_generator(&mut self, p: Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::Dimension(format!(
                "permutation of degree {} in a group of degree {}",
                p.degree(),
                self.degree
            )));
        }
        let (h, j) = self.sift(p.clone(), 0);
        if h.is_identity() {
            return Ok(false);
        }
        self.generators.push(p);
        self.insert(h, 0, j);
        self.complete(j);
        Ok(true)
    }

    /// Adds `h` as a strong generator on levels `lo..=hi`, creating level
    /// `hi` if needed.
    fn insert(&mut self, h: Perm, lo: usize, hi: usize) {
        if hi == self.levels.len() {
            let b = h.first_moved_point().expect("nontrivial residue");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in lo..=hi {
            self.levels[l].add_gen(h.clone());
        }
    }

    fn complete(&mut self, top: usize) {
        let mut i = top;
        loop {
            match self.levels[i].next_schreier() {
                Some(y) => {
                    let (h, j) = self.sift(y, i + 1);
                    if !h.is_identity() {
                        self.insert(h, i + 1, j);
                        i = j;
                    }
                }
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    pub fn to_bsgs(&self) -> Bsgs {
        Bsgs {
            degree: self.degree,
            generators: self.generators.clone(),
            base: self.base(),
            strong: self.levels.iter().map(|l| l.gens.clone()).collect(),
        }
    }

    /// Rebuilds orbits and transversals from a stored base and strong
    /// generating set. The stored data is not re-verified beyond shape.
    pub fn from_bsgs(b: &Bsgs) -> Result<Self> {
        if b.base.len() != b.strong.len() {
            return Err(Error::Dimension(
                "base and strong generator levels differ".into(),
            ));
        }
        let check = |p: &Perm| -> Result<()> {
            if p.degree() != b.degree {
                return Err(Error::Dimension(
                    "stored permutation has wrong degree".into(),
                ));
            }
            Perm::from_images(p.images().to_vec()).map(|_| ())
        };
        let mut levels = Vec::with_capacity(b.base.len());
        for (i, (&base, gens)) in b.base.iter().zip(&b.strong).enumerate() {
            if base as usize >= b.degree {
                return Err(Error::Dimension(format!("base point {base} out of range")));
            }
            let mut l = Level::new(b.degree, base);
            for g in gens {
                check(g)?;
                if b.base[..i].iter().any(|&x| g.image(x) != x) {
                    return Err(Error::Dimension(format!(
                        "strong generator on level {i} moves an earlier base point"
                    )));
                }
                l.gens.push(g.clone());
            }
            l.close_orbit(0);
            l.checked = vec![l.gens.len(); l.orbit.len()];
            levels.push(l);
        }
        for g in &b.generators {
            check(g)?;
        }
        Ok(PermGroup {
            degree: b.degree,
            generators: b.generators.clone(),
            levels,
        })
    }
}
