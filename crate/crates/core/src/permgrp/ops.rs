//! Subgroup constructions on top of the stabilizer chain.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::perm::Perm;

use super::chain::PermGroup;

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Perm]) -> Result<PermGroup> {
    let mut n = PermGroup::trivial(g.degree());
    let mut queue: Vec<Perm> = Vec::new();
    for p in s {
        if n.add_generator(p.clone())? {
            queue.push(p.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for t in g.generators() {
            let y = x.conjugate(t);
            if !n.contains(&y) {
                n.add_generator(y.clone())?;
                queue.push(y);
            }
        }
    }
    Ok(n)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    let gens = g.generators();
    let mut comms = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = Perm::commutator(&gens[i], &gens[j]);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// `[g : h]` for a subgroup `h` of `g`.
pub fn index(g: &PermGroup, h: &PermGroup) -> Result<BigUint> {
    if let Some(p) = h.generators().iter().find(|p| !g.contains(p)) {
        return Err(Error::CheckFailed(format!(
            "subgroup generator {p} is not in the group"
        )));
    }
    Ok(g.order() / h.order())
}

/// Schreier generators of the kernel of `project` restricted to the group
/// generated by `gens`, from a breadth-first transversal of the image.
pub fn kernel_generators<K, F>(gens: &[Perm], project: F, cap: usize) -> Result<Vec<Perm>>
where
    K: Eq + Hash + Clone,
    F: Fn(&Perm) -> K,
{
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let id = Perm::identity(first.degree());
    let mut reps: HashMap<K, usize> = HashMap::new();
    let mut transversal = vec![id.clone()];
    reps.insert(project(&id), 0);
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut k = 0;
    while k < transversal.len() {
        for s in gens {
            let ts = transversal[k].then(s);
            let key = project(&ts);
            match reps.get(&key) {
                Some(&r) => {
                    let y = ts.then(&transversal[r].inverse());
                    if !y.is_identity() && seen.insert(y.clone()) {
                        out.push(y);
                    }
                }
                None => {
                    if transversal.len() >= cap {
                        return Err(Error::cap("projection transversal", cap));
                    }
                    reps.insert(key, transversal.len());
                    transversal.push(ts);
                }
            }
        }
        k += 1;
    }
    Ok(out)
}

/// Invariants of the abelian group `<gens> / n` as prime powers in
/// descending order, where `n` is normal in `<gens>` and contains its
/// commutators. Fails if the quotient has more than `cap` elements.
pub fn abelian_quotient_invariants(gens: &[Perm], n: &PermGroup, cap: usize) -> Result<Vec<u64>> {
    // relative orders along <n, g_1, ..., g_i>
    let mut chain = n.clone();
    let mut kept: Vec<(Perm, u64)> = Vec::new();
    let mut size: u64 = 1;
    for g in gens {
        let mut k = 1u64;
        let mut p = g.clone();
        while !chain.contains(&p) {
            p = p.then(g);
            k += 1;
        }
        if k > 1 {
            size = size.saturating_mul(k);
            if size > cap as u64 {
                return Err(Error::cap("abelian quotient size", cap));
            }
            chain.add_generator(g.clone())?;
            kept.push((g.clone(), k));
        }
    }
    // g_i^{k_i} = prod_{j<i} g_j^{e_j} modulo n
    let r = kept.len();
    let mut rows = vec![vec![BigInt::zero(); r]; r];
    for i in 0..r {
        let target = kept[i].0.pow(kept[i].1 as i64);
        let e = find_exponents(&kept[..i], &target, n)
            .ok_or_else(|| Error::CheckFailed("abelian quotient relation not found".into()))?;
        rows[i][i] = BigInt::from(kept[i].1);
        for (j, ej) in e.into_iter().enumerate() {
            rows[i][j] -= BigInt::from(ej);
        }
    }
    let m = IntMatrix::from_rows(&rows, r)?;
    let snf = smith_normal_form(&m);
    let mut out = Vec::new();
    for d in snf.invariant_factors() {
        let d = d.to_u64().expect("bounded by the quotient size");
        out.extend(prime_power_parts(d));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Exponents `e` with `target * (prod g_j^{e_j})^-1` in `n`.
fn find_exponents(gs: &[(Perm, u64)], target: &Perm, n: &PermGroup) -> Option<Vec<u64>> {
    let mut e = vec![0u64; gs.len()];
    loop {
        let prod = rebuild(gs, &e, target.degree());
        if n.contains(&target.then(&prod.inverse())) {
            return Some(e);
        }
        let mut j = 0;
        loop {
            if j == gs.len() {
                return None;
            }
            e[j] += 1;
            if e[j] < gs[j].1 {
                break;
            }
            e[j] = 0;
            j += 1;
        }
    }
}

fn rebuild(gs: &[(Perm, u64)], e: &[u64], degree: usize) -> Perm {
    let mut p = Perm::identity(degree);
    for ((g, _), &k) in gs.iter().zip(e) {
        p = p.then(&g.pow(k as i64));
    }
    p
}

fn prime_power_parts(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            let mut q = 1;
            while d.is_multiple_of(p) {
                d /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Invariants of `G/G'` as prime powers in descending order.
pub fn abelian_invariants_finite(g: &PermGroup, cap: usize) -> Result<Vec<u64>> {
    let d = derived_subgroup(g)?;
    let q = g.order() / d.order();
    if q > BigUint::from(cap) {
        return Err(Error::cap("abelian quotient size", cap));
    }
    if q.is_one() {
        return Ok(Vec::new());
    }
    abelian_quotient_invariants(g.generators(), &d, cap)
}
