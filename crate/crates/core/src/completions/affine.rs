//! The truncation `W_m = A[X^m] ⋊ Aut X^m` for the Hanoi tower group, with
//! `A = F2^3` on the basis `(ā, b̄, c̄)`.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::F2Vec;
use crate::perm::Perm;
use crate::tree::{GroupDef, Vertex, Word};

/// Rank of `A`.
pub const A_RANK: usize = 3;

/// `(v, g)` with `v` indexed by `vertex_index * 3 + s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineElement {
    pub vector: F2Vec,
    pub perm: Perm,
}

fn level_size(m: usize) -> usize {
    3usize.pow(m as u32)
}

/// `g . v` with `(g . v)(w) = v(w^g)`.
pub fn act_on_vector(g: &Perm, v: &F2Vec) -> F2Vec {
    let mut out = F2Vec::zeros(v.len());
    for w in 0..g.degree() {
        let src = g.image(w as u32) as usize;
        for s in 0..A_RANK {
            if v.get(src * A_RANK + s) {
                out.set(w * A_RANK + s, true);
            }
        }
    }
    out
}

impl AffineElement {
    pub fn identity(m: usize) -> Self {
        let n = level_size(m);
        AffineElement {
            vector: F2Vec::zeros(n * A_RANK),
            perm: Perm::identity(n),
        }
    }

    pub fn level(&self) -> usize {
        let mut m = 0;
        while level_size(m) < self.perm.degree() {
            m += 1;
        }
        m
    }

    /// `(v1, g1)(v2, g2) = (v1 + g1 . v2, g1 g2)`.
    pub fn mul(&self, other: &AffineElement) -> AffineElement {
        AffineElement {
            vector: self.vector.add(&act_on_vector(&self.perm, &other.vector)),
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn inverse(&self) -> AffineElement {
        let inv = self.perm.inverse();
        AffineElement {
            vector: act_on_vector(&inv, &self.vector),
            perm: inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vector.is_zero() && self.perm.is_identity()
    }

    /// Faithful action on `X^m x F2^3`, point `w * 8 + bits`:
    /// `(w, s) -> (w^g, s + v(w))`.
    pub fn to_perm(&self) -> Perm {
        let n = self.perm.degree();
        let mut img = Vec::with_capacity(n * 8);
        for w in 0..n {
            let mut shift = 0u32;
            for s in 0..A_RANK {
                if self.vector.get(w * A_RANK + s) {
                    shift |= 1 << s;
                }
            }
            let target = self.perm.image(w as u32) * 8;
            for bits in 0..8u32 {
                img.push(target + (bits ^ shift));
            }
        }
        Perm::from_images(img).expect("affine map is a bijection")
    }

    /// Inverse of [`to_perm`](Self::to_perm).
    pub fn from_perm(p: &Perm) -> Result<AffineElement> {
        if !p.degree().is_multiple_of(8) {
            return Err(Error::Dimension(format!(
                "degree {} is not a multiple of 8",
                p.degree()
            )));
        }
        let n = p.degree() / 8;
        let mut vector = F2Vec::zeros(n * A_RANK);
        let mut images = Vec::with_capacity(n);
        for w in 0..n {
            let y = p.image(w as u32 * 8);
            images.push(y / 8);
            for s in 0..A_RANK {
                if y >> s & 1 == 1 {
                    vector.set(w * A_RANK + s, true);
                }
            }
        }
        let elt = AffineElement {
            vector,
            perm: Perm::from_images(images)?,
        };
        if elt.to_perm() != *p {
            return Err(Error::Dimension("permutation is not affine".into()));
        }
        Ok(elt)
    }
}

/// `s * ā` style vector: `value` placed at vertex index `w`.
pub fn point_vector(m: usize, w: usize, value: &[bool; A_RANK]) -> F2Vec {
    let mut v = F2Vec::zeros(level_size(m) * A_RANK);
    for (s, &b) in value.iter().enumerate() {
        v.set(w * A_RANK + s, b);
    }
    v
}

/// `X^m * value`.
pub fn uniform_vector(m: usize, value: &[bool; A_RANK]) -> F2Vec {
    let mut v = F2Vec::zeros(level_size(m) * A_RANK);
    for w in 0..level_size(m) {
        for (s, &b) in value.iter().enumerate() {
            v.set(w * A_RANK + s, b);
        }
    }
    v
}

/// `α_m = (1^m * ā, a)`, `β_m = (2^m * b̄, b)`, `γ_m = (3^m * c̄, c)`.
pub fn affine_generators(def: &GroupDef, m: usize, limits: &Limits) -> Result<[AffineElement; 3]> {
    check_hanoi_shape(def)?;
    let perms = def.generator_level_perms(m, limits)?;
    let n = level_size(m);
    let mut out = Vec::with_capacity(3);
    for (g, perm) in perms.into_iter().take(3).enumerate() {
        // the vertex g g ... g
        let w = if m == 0 { 0 } else { g * (n - 1) / 2 };
        let mut unit = [false; A_RANK];
        unit[g] = true;
        out.push(AffineElement {
            vector: point_vector(m, w, &unit),
            perm,
        });
    }
    Ok(out.try_into().expect("three generators"))
}

fn check_hanoi_shape(def: &GroupDef) -> Result<()> {
    if def.degree() != 3 || def.base_generator_count() != 3 {
        return Err(Error::Definition(format!(
            "`{}` is not a ternary group on three generators",
            def.name()
        )));
    }
    Ok(())
}

/// Image of a word over the three base generators, by multiplying
/// generator images.
pub fn embed(gens: &[AffineElement; 3], w: &Word) -> Result<AffineElement> {
    let m = gens[0].level();
    let inverses: Vec<AffineElement> = gens.iter().map(AffineElement::inverse).collect();
    let mut acc = AffineElement::identity(m);
    for l in w.letters() {
        let g = l.generator();
        if g >= 3 {
            return Err(Error::Definition(
                "word uses a generator outside a, b, c".into(),
            ));
        }
        acc = acc.mul(if l.is_inverse() {
            &inverses[g]
        } else {
            &gens[g]
        });
    }
    Ok(acc)
}

/// Exponent parities of a word over `a, b, c`: its image in `A`.
pub fn abelian_image(w: &Word) -> Result<[bool; A_RANK]> {
    let mut out = [false; A_RANK];
    for l in w.letters() {
        let g = l.generator();
        if g >= A_RANK {
            return Err(Error::Definition(
                "section word uses a generator outside a, b, c".into(),
            ));
        }
        out[g] ^= true;
    }
    Ok(out)
}

/// Image in `W_m` computed from sections: `(sum_w w * ab(g@w), level-m
/// permutation)`. Works for words over definitions extended by
/// translates as long as level-`m` sections only involve `a, b, c`.
pub fn embed_by_sections(
    def: &GroupDef,
    w: &Word,
    m: usize,
    limits: &Limits,
) -> Result<AffineElement> {
    let n = level_size(m);
    let mut vector = F2Vec::zeros(n * A_RANK);
    for i in 0..n {
        let v = Vertex::from_index(i, m, 3);
        let ab = abelian_image(&def.section(w, &v))?;
        for (s, &b) in ab.iter().enumerate() {
            vector.set(i * A_RANK + s, b);
        }
    }
    Ok(AffineElement {
        vector,
        perm: def.level_permutation(w, m, limits)?,
    })
}
