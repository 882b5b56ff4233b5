//! Nucleus of a contracting group.
//!
//! Elements are kept as representative words. Two words name the same
//! element when the depth-capped word problem says so; a comparison that
//! cannot be settled aborts the computation rather than guessing.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::def::{GroupDef, Vertex};
use super::trivial::Policy;
use super::word::Word;

const FINGERPRINT_POINTS: usize = 64;

struct States<'a> {
    def: &'a GroupDef,
    policy: Policy,
    level: usize,
    reps: Vec<Word>,
    buckets: HashMap<Vec<u32>, Vec<usize>>,
    sections: Vec<Option<Vec<usize>>>,
    cap: usize,
}

impl<'a> States<'a> {
    fn new(def: &'a GroupDef, depth: usize, cap: usize) -> Self {
        let d = def.degree();
        let mut level = 1;
        while d.pow(level as u32 + 1) <= FINGERPRINT_POINTS {
            level += 1;
        }
        States {
            def,
            policy: Policy::DepthCapped(depth),
            level,
            reps: Vec::new(),
            buckets: HashMap::new(),
            sections: Vec::new(),
            cap,
        }
    }

    fn fingerprint(&self, w: &Word) -> Vec<u32> {
        let d = self.def.degree();
        (0..d.pow(self.level as u32))
            .map(|i| {
                let v = Vertex::from_index(i, self.level, d);
                self.def.act(w, &v).index(d) as u32
            })
            .collect()
    }

    fn id(&mut self, w: Word) -> Result<usize> {
        let key = self.fingerprint(&w);
        if let Some(bucket) = self.buckets.get(&key) {
            for &i in bucket {
                if self.def.equal(&w, &self.reps[i], self.policy)? {
                    return Ok(i);
                }
            }
        }
        if self.reps.len() >= self.cap {
            return Err(Error::cap("nucleus candidate states", self.cap));
        }
        let i = self.reps.len();
        self.reps.push(w);
        self.sections.push(None);
        self.buckets.entry(key).or_default().push(i);
        Ok(i)
    }

    fn successors(&mut self, i: usize) -> Result<Vec<usize>> {
        if let Some(s) = &self.sections[i] {
            return Ok(s.clone());
        }
        let words = self.def.sections(&self.reps[i]);
        let mut out = Vec::with_capacity(words.len());
        for w in words {
            out.push(self.id(w)?);
        }
        self.sections[i] = Some(out.clone());
        Ok(out)
    }

    fn reachable(&mut self, from: &[usize]) -> Result<Vec<usize>> {
        let mut seen: HashSet<usize> = from.iter().copied().collect();
        let mut order: Vec<usize> = from.to_vec();
        let mut k = 0;
        while k < order.len() {
            for s in self.successors(order[k])? {
                if seen.insert(s) {
                    order.push(s);
                }
            }
            k += 1;
        }
        Ok(order)
    }

    /// States lying on a cycle of the state graph of `start`.
    fn recurrent(&mut self, start: usize) -> Result<Vec<usize>> {
        let all = self.reachable(&[start])?;
        let mut out = Vec::new();
        for &v in &all {
            let succ = self.successors(v)?;
            if self.reachable(&succ)?.contains(&v) {
                out.push(v);
            }
        }
        Ok(out)
    }
}

/// Computes the nucleus, failing if it has more than `cap` elements or if
/// some equality cannot be decided within `depth` levels.
pub fn nucleus(def: &GroupDef, depth: usize, cap: usize) -> Result<Vec<Word>> {
    let mut st = States::new(def, depth, cap.saturating_mul(cap).max(cap));
    let one = st.id(Word::identity())?;
    let mut members: Vec<usize> = vec![one];
    let mut in_n: HashSet<usize> = members.iter().copied().collect();
    let mut seeds = Vec::new();
    for g in 0..def.generators().len() {
        let w = Word::generator(g);
        seeds.push(st.id(w.clone())?);
        seeds.push(st.id(w.inverse())?);
    }
    let add = |st: &mut States,
               start: usize,
               members: &mut Vec<usize>,
               in_n: &mut HashSet<usize>|
     -> Result<bool> {
        let rec = st.recurrent(start)?;
        let mut grew = false;
        for v in st.reachable(&rec)? {
            if in_n.insert(v) {
                members.push(v);
                grew = true;
            }
        }
        if members.len() > cap {
            return Err(Error::cap("nucleus size", cap));
        }
        Ok(grew)
    };
    for s in seeds {
        add(&mut st, s, &mut members, &mut in_n)?;
    }
    let mut done = 0;
    loop {
        let n = members.len();
        for i in 0..n {
            for j in 0..n {
                if i < done && j < done {
                    continue;
                }
                let w = st.reps[members[i]].mul(&st.reps[members[j]]);
                let id = st.id(w)?;
                add(&mut st, id, &mut members, &mut in_n)?;
            }
        }
        if members.len() == n {
            break;
        }
        done = n;
    }
    let mut words: Vec<Word> = members.iter().map(|&i| st.reps[i].clone()).collect();
    words.sort_by_key(|w| {
        let key: Vec<(usize, bool)> = w
            .letters()
            .iter()
            .map(|l| (l.generator(), l.is_inverse()))
            .collect();
        (w.len(), key)
    });
    Ok(words)
}

impl GroupDef {
    /// Attaches a freshly computed nucleus, enabling
    /// [`Policy::NucleusCertified`].
    pub fn certify(mut self, depth: usize, cap: usize) -> Result<Self> {
        let n = nucleus(&self, depth, cap)?;
        self.nucleus = Some(Arc::new(n));
        Ok(self)
    }
}
