//! Freely reduced words over generator symbols.

use std::fmt;

/// A generator symbol or its formal inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        let v = generator as i32 + 1;
        Letter(if inverse { -v } else { v })
    }

    #[inline]
    pub fn generator(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g{}{}",
            self.generator(),
            if self.is_inverse() { "-" } else { "" }
        )
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter, cancelling against the last one if possible.
    #[inline]
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn append(&mut self, other: &Word) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn append_inverse(&mut self, other: &Word) {
        for &l in other.0.iter().rev() {
            self.push(l.inverse());
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    /// `by^-1 self by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        let mut w = by.inverse();
        w.append(self);
        w.append(by);
        w
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        let mut w = x.inverse();
        w.append_inverse(y);
        w.append(x);
        w.append(y);
        w
    }

    /// Letter order reversed, signs kept.
    pub fn reversed(&self) -> Word {
        Word::from_letters(self.0.iter().rev().copied())
    }

    /// Image under the substitution `generator i -> images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut w = Word::identity();
        for &l in &self.0 {
            let img = &images[l.generator()];
            if l.is_inverse() {
                w.append_inverse(img);
            } else {
                w.append(img);
            }
        }
        w
    }

    /// Signed exponent count of each of the first `generators` symbols.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut out = vec![0i64; generators];
        for &l in &self.0 {
            if l.generator() < generators {
                out[l.generator()] += if l.is_inverse() { -1 } else { 1 };
            }
        }
        out
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator()).max()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Concatenation followed by free reduction.
pub fn compose(g: &Word, h: &Word) -> Word {
    g.mul(h)
}

pub fn invert(g: &Word) -> Word {
    g.inverse()
}
