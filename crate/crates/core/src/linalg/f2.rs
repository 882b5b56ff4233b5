//! Linear algebra over the field with two elements.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        if self.get(i) != b {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn add_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn add(&self, other: &F2Vec) -> F2Vec {
        let mut v = self.clone();
        v.add_assign(other);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn leading(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vec>,
}

impl F2Matrix {
    pub fn new(cols: usize) -> Self {
        F2Matrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vec>) -> Result<Self> {
        let mut m = Self::new(cols);
        for r in rows {
            m.push(r)?;
        }
        Ok(m)
    }

    pub fn push(&mut self, row: F2Vec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension(format!(
                "row of length {} in a matrix with {} columns",
                row.len(),
                self.cols
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn rows(&self) -> &[F2Vec] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        span_basis(&self.rows).len()
    }

    /// Some `x` with `M x = b`.
    pub fn solve(&self, b: &F2Vec) -> Result<Option<F2Vec>> {
        if b.len() != self.rows.len() {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows.len()
            )));
        }
        // eliminate on the augmented rows [row | b_i]
        let mut aug: Vec<(F2Vec, bool)> = self
            .rows
            .iter()
            .cloned()
            .zip((0..b.len()).map(|i| b.get(i)))
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            let Some(p) = (r..aug.len()).find(|&i| aug[i].0.get(col)) else {
                continue;
            };
            aug.swap(r, p);
            let (pivot, pb) = aug[r].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != r && row.0.get(col) {
                    row.0.add_assign(&pivot);
                    row.1 ^= pb;
                }
            }
            pivots.push((r, col));
            r += 1;
        }
        if aug[r..].iter().any(|(_, bit)| *bit) {
            return Ok(None);
        }
        let mut x = F2Vec::zeros(self.cols);
        for (row, col) in pivots {
            x.set(col, aug[row].1);
        }
        Ok(Some(x))
    }

    /// `M v` for a vector of length `cols`.
    pub fn apply(&self, v: &F2Vec) -> F2Vec {
        F2Vec::from_bits(&self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }
}

/// Reduced row echelon basis of the span, ordered by pivot column.
pub fn span_basis(vectors: &[F2Vec]) -> Vec<F2Vec> {
    let mut basis: Vec<F2Vec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            if w.get(b.leading().unwrap()) {
                w.add_assign(b);
            }
        }
        if let Some(lead) = w.leading() {
            for b in basis.iter_mut() {
                if b.get(lead) {
                    b.add_assign(&w);
                }
            }
            basis.push(w);
        }
    }
    basis.sort_by_key(|b| b.leading());
    basis
}

/// Whether `v` lies in the span of a basis returned by [`span_basis`].
pub fn in_span(basis: &[F2Vec], v: &F2Vec) -> bool {
    let mut w = v.clone();
    for b in basis {
        if w.get(b.leading().unwrap()) {
            w.add_assign(b);
        }
    }
    w.is_zero()
}
