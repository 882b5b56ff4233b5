//! Word syntax: juxtaposition, `x-` inverse, `x^y` conjugation, `x^n`
//! power, `[x,y]` commutator, `1` identity, parentheses for grouping.
//! Symbols are one ASCII letter plus optional digits, or `{any name}`.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::def::GroupDef;
use super::word::Word;

/// Resolves a symbol name to a word.
pub trait SymbolTable {
    fn resolve(&self, name: &str) -> Option<Word>;
}

impl SymbolTable for GroupDef {
    fn resolve(&self, name: &str) -> Option<Word> {
        self.gen_word(name).ok()
    }
}

/// Generators of a group plus named abbreviations such as `d = [a,b]`.
pub struct Abbreviations<'a> {
    pub def: &'a GroupDef,
    pub names: HashMap<String, Word>,
}

impl<'a> Abbreviations<'a> {
    pub fn new(def: &'a GroupDef) -> Self {
        Abbreviations {
            def,
            names: HashMap::new(),
        }
    }

    /// Parses `text` and binds it to `name`.
    pub fn define(&mut self, name: &str, text: &str) -> Result<Word> {
        let w = parse_word(self, text)?;
        self.names.insert(name.to_string(), w.clone());
        Ok(w)
    }
}

impl SymbolTable for Abbreviations<'_> {
    fn resolve(&self, name: &str) -> Option<Word> {
        self.names
            .get(name)
            .cloned()
            .or_else(|| self.def.resolve(name))
    }
}

/// Symbols bound to consecutive free generators, for formal words.
pub struct FreeSymbols(pub Vec<String>);

impl SymbolTable for FreeSymbols {
    fn resolve(&self, name: &str) -> Option<Word> {
        self.0.iter().position(|s| s == name).map(Word::generator)
    }
}

pub fn parse_word(table: &dyn SymbolTable, text: &str) -> Result<Word> {
    parse_word_at(table, text, 1, 1)
}

/// Like [`parse_word`], reporting errors relative to a position in a file.
pub fn parse_word_at(
    table: &dyn SymbolTable,
    text: &str,
    line: usize,
    column: usize,
) -> Result<Word> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        table,
        line,
        column,
    };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(w)
}

struct Parser<'t> {
    chars: Vec<char>,
    pos: usize,
    table: &'t dyn SymbolTable,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column + self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || c == '{' || c == '(' || c == '[' || c == '1' {
                let t = self.term()?;
                w.append(&t);
            } else {
                break;
            }
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let mut w = self.atom()?;
        loop {
            // postfix operators bind tightly: no whitespace allowed before them
            match self.chars.get(self.pos) {
                Some('-') => {
                    self.pos += 1;
                    w = w.inverse();
                }
                Some('^') => {
                    self.pos += 1;
                    let neg = self.chars.get(self.pos) == Some(&'-');
                    if neg {
                        self.pos += 1;
                    }
                    if matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
                        let start = self.pos;
                        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
                            self.pos += 1;
                        }
                        let digits: String = self.chars[start..self.pos].iter().collect();
                        let e: i64 = digits
                            .parse()
                            .map_err(|_| self.error(format!("bad exponent `{digits}`")))?;
                        w = w.pow(if neg { -e } else { e });
                    } else {
                        let by = self.atom()?;
                        w = w.conjugate(&by);
                        if neg {
                            w = w.inverse();
                        }
                    }
                }
                _ => break,
            }
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let mut acc = self.word()?;
                let mut parts = 1;
                while self.peek() == Some(',') {
                    self.pos += 1;
                    let next = self.word()?;
                    acc = Word::commutator(&acc, &next);
                    parts += 1;
                }
                if parts < 2 {
                    return Err(self.error("commutator needs at least two entries".into()));
                }
                self.expect(']')?;
                Ok(acc)
            }
            Some('{') => {
                let start = self.pos + 1;
                let end = self.chars[start..]
                    .iter()
                    .position(|&c| c == '}')
                    .map(|i| start + i)
                    .ok_or_else(|| self.error("unterminated `{`".into()))?;
                let name: String = self.chars[start..end].iter().collect();
                let at = self.pos;
                self.pos = end + 1;
                self.lookup(&name, at)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                self.pos += 1;
                while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let name: String = self.chars[at..self.pos].iter().collect();
                self.lookup(&name, at)
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of word".into())),
        }
    }

    fn lookup(&self, name: &str, at: usize) -> Result<Word> {
        self.table.resolve(name).ok_or_else(|| Error::Parse {
            line: self.line,
            column: self.column + at,
            message: format!("undeclared symbol `{name}`"),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }
}
