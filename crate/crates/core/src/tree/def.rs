use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::word::{Letter, Word};

/// Letters `1..=d` of a `d`-ary tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(usize);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::Definition(format!(
                "alphabet size must be at least 2, got {size}"
            )));
        }
        Ok(Alphabet(size))
    }

    #[inline]
    pub fn size(self) -> usize {
        self.0
    }

    /// Number of vertices on level `n`, or `None` on overflow.
    pub fn level_size(self, n: usize) -> Option<usize> {
        self.0.checked_pow(n as u32)
    }
}

/// A vertex of the tree, i.e. a word over the alphabet. Letters are stored
/// 0-based and shown 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(Vec<u8>);

impl Vertex {
    pub fn root() -> Self {
        Vertex(Vec::new())
    }

    /// From 1-based letters.
    pub fn from_letters(alphabet: Alphabet, letters: &[usize]) -> Result<Self> {
        letters
            .iter()
            .map(|&x| {
                if x == 0 || x > alphabet.size() {
                    Err(Error::Definition(format!(
                        "letter {x} outside 1..={}",
                        alphabet.size()
                    )))
                } else {
                    Ok((x - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Vertex)
    }

    /// Digit string such as `"12"`; for alphabets above 9 letters are
    /// separated by dots.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "root" {
            return Ok(Vertex::root());
        }
        let letters: Vec<usize> = if text.contains('.') || alphabet.size() > 9 {
            text.split('.')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Definition(format!("bad vertex `{text}`")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Definition(format!("bad vertex `{text}`")))
                })
                .collect::<Result<_>>()?
        };
        Vertex::from_letters(alphabet, &letters)
    }

    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        Vertex(letters)
    }

    /// 0-based letters.
    #[inline]
    pub fn raw(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn is_prefix_of(&self, other: &Vertex) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Lexicographic index among the vertices of the same level.
    pub fn index(&self, d: usize) -> usize {
        self.0.iter().fold(0, |acc, &x| acc * d + x as usize)
    }

    pub fn from_index(mut idx: usize, level: usize, d: usize) -> Self {
        let mut v = vec![0u8; level];
        for slot in v.iter_mut().rev() {
            *slot = (idx % d) as u8;
            idx /= d;
        }
        Vertex(v)
    }

    pub fn child(&self, x: u8) -> Vertex {
        let mut v = self.0.clone();
        v.push(x);
        Vertex(v)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "root");
        }
        if self.0.iter().any(|&x| x >= 9) {
            let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "{}", parts.join("."))
        } else {
            for x in &self.0 {
                write!(f, "{}", x + 1)?;
            }
            Ok(())
        }
    }
}

/// Which side the group acts on. Stored words under `Left` are evaluated by
/// reversal onto an equivalent right-action definition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ActionSide {
    #[default]
    Right,
    Left,
}

/// One generator: its root permutation and one section word per letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub perm: Perm,
    pub sections: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    pub name: String,
    pub images: Vec<Word>,
}

/// A self-similar group given by wreath recursion.
#[derive(Clone, Debug)]
pub struct GroupDef {
    name: String,
    alphabet: Alphabet,
    generators: Vec<Generator>,
    endomorphisms: Vec<Endomorphism>,
    action: ActionSide,
    /// Right-action section words used by evaluation.
    pub(super) eval_sections: Vec<Vec<Word>>,
    pub(super) eval_perm: Vec<Vec<u8>>,
    pub(super) eval_perm_inv: Vec<Vec<u8>>,
    pub(super) nucleus: Option<Arc<Vec<Word>>>,
    base_generators: usize,
}

impl PartialEq for GroupDef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.alphabet == other.alphabet
            && self.generators == other.generators
            && self.endomorphisms == other.endomorphisms
            && self.action == other.action
    }
}

pub(crate) const AUX_PREFIX: char = '~';

impl GroupDef {
    pub fn new(
        name: impl Into<String>,
        alphabet: Alphabet,
        generators: Vec<Generator>,
        action: ActionSide,
    ) -> Result<Self> {
        let n = generators.len();
        let mut def = GroupDef {
            name: name.into(),
            alphabet,
            generators: Vec::new(),
            endomorphisms: Vec::new(),
            action,
            eval_sections: Vec::new(),
            eval_perm: Vec::new(),
            eval_perm_inv: Vec::new(),
            nucleus: None,
            base_generators: n,
        };
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Definition(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        for g in generators {
            def.push_generator(g, n)?;
        }
        Ok(def)
    }

    fn push_generator(&mut self, g: Generator, total: usize) -> Result<()> {
        let d = self.alphabet.size();
        if g.perm.degree() != d {
            return Err(Error::Definition(format!(
                "generator `{}`: root permutation acts on {} letters, alphabet has {d}",
                g.name,
                g.perm.degree()
            )));
        }
        if g.sections.len() != d {
            return Err(Error::Definition(format!(
                "generator `{}`: expected {d} sections, got {}",
                g.name,
                g.sections.len()
            )));
        }
        if let Some(m) = g.sections.iter().filter_map(Word::max_generator).max() {
            if m >= total {
                return Err(Error::Definition(format!(
                    "generator `{}`: section references undeclared generator #{m}",
                    g.name
                )));
            }
        }
        let perm: Vec<u8> = g.perm.images().iter().map(|&x| x as u8).collect();
        let perm_inv: Vec<u8> = g.perm.inverse().images().iter().map(|&x| x as u8).collect();
        let sections = match self.action {
            ActionSide::Right => g.sections.clone(),
            ActionSide::Left => g.sections.iter().map(Word::reversed).collect(),
        };
        self.eval_perm.push(perm);
        self.eval_perm_inv.push(perm_inv);
        self.eval_sections.push(sections);
        self.generators.push(g);
        Ok(())
    }

    /// Appends generators (used for synthesized translates). Any attached
    /// nucleus certificate is kept: the new generators reach the old ones
    /// after finitely many levels, so contraction is inherited.
    pub(crate) fn extended(&self, extra: Vec<Generator>) -> Result<GroupDef> {
        let mut def = self.clone();
        let total = def.generators.len() + extra.len();
        for g in extra {
            def.push_generator(g, total)?;
        }
        Ok(def)
    }

    pub fn with_endomorphism(mut self, endo: Endomorphism) -> Result<Self> {
        if endo.images.len() != self.generators.len() {
            return Err(Error::Definition(format!(
                "endomorphism `{}` must give an image for each of the {} generators",
                endo.name,
                self.generators.len()
            )));
        }
        if let Some(m) = endo.images.iter().filter_map(Word::max_generator).max() {
            if m >= self.generators.len() {
                return Err(Error::Definition(format!(
                    "endomorphism `{}` references an undeclared generator",
                    endo.name
                )));
            }
        }
        self.endomorphisms.retain(|e| e.name != endo.name);
        self.endomorphisms.push(endo);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.alphabet.size()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Number of generators declared by the user (not synthesized).
    pub fn base_generator_count(&self) -> usize {
        self.base_generators
    }

    pub fn endomorphisms(&self) -> &[Endomorphism] {
        &self.endomorphisms
    }

    pub fn endomorphism(&self, name: &str) -> Result<&Endomorphism> {
        self.endomorphisms
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::Unknown {
                kind: "endomorphism",
                name: name.to_string(),
            })
    }

    pub fn action(&self) -> ActionSide {
        self.action
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn gen_word(&self, name: &str) -> Result<Word> {
        self.generator_index(name)
            .map(Word::generator)
            .ok_or_else(|| Error::Unknown {
                kind: "generator",
                name: name.to_string(),
            })
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(m) if m >= self.generators.len() => Err(Error::Definition(format!(
                "word uses generator #{m}, group `{}` has {}",
                self.name,
                self.generators.len()
            ))),
            _ => Ok(()),
        }
    }

    pub fn nucleus_words(&self) -> Option<&[Word]> {
        self.nucleus.as_deref().map(|v| v.as_slice())
    }

    pub fn is_certified(&self) -> bool {
        self.nucleus.is_some()
    }

    /// Word in evaluation orientation.
    #[inline]
    pub(super) fn oriented<'a>(&self, w: &'a Word) -> std::borrow::Cow<'a, Word> {
        match self.action {
            ActionSide::Right => std::borrow::Cow::Borrowed(w),
            ActionSide::Left => std::borrow::Cow::Owned(w.reversed()),
        }
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        WordDisplay { def: self, word: w }
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.display(w).to_string()
    }

    pub(crate) fn symbol(&self, l: Letter) -> String {
        let name = &self.generators[l.generator()].name;
        let mut s = if is_short_name(name) {
            name.clone()
        } else {
            format!("{{{name}}}")
        };
        if l.is_inverse() {
            s.push('-');
        }
        s
    }

    /// Permutation of the letters shown in 1-based cycle notation.
    pub fn format_letter_perm(p: &Perm) -> String {
        p.to_cycle_string(|x| (x + 1).to_string())
    }
}

/// One ASCII letter followed by digits.
pub(crate) fn is_short_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_digit())
}

pub struct WordDisplay<'a> {
    def: &'a GroupDef,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for &l in self.word.letters() {
            write!(f, "{}", self.def.symbol(l))?;
        }
        Ok(())
    }
}
