//! Line-oriented group definition files.
//!
//! ```text
//! group hanoi3
//! alphabet 3
//! gen a perm (2 3) sections a, 1, 1
//! gen b perm (1 3) sections 1, b, 1
//! gen c perm (1 2) sections 1, 1, c
//! endo tau a -> a ; b -> b^c ; c -> c^b
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::tree::{
    is_short_name, parse_word_at, ActionSide, Alphabet, Endomorphism, FreeSymbols, Generator,
    GroupDef, Word,
};

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.no,
            column: offset + 1,
            message: message.into(),
        }
    }

    /// Column offset of `part`, which must be a subslice of the line.
    fn offset(&self, part: &str) -> usize {
        part.as_ptr() as usize - self.text.as_ptr() as usize
    }
}

struct PendingGen<'a> {
    line: Line<'a>,
    name: String,
    perm: Perm,
    sections: Vec<&'a str>,
}

fn strip_keyword<'a>(s: &'a str, kw: &str) -> Option<&'a str> {
    let rest = s.strip_prefix(kw)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest.trim_start())
    } else {
        None
    }
}

fn parse_name(line: &Line, s: &str) -> Result<String> {
    let name = if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        inner
    } else {
        if !is_short_name(s) {
            return Err(line.err(line.offset(s), format!("invalid name `{s}`")));
        }
        s
    };
    if name.is_empty() || name.contains(['~', '{', '}']) {
        return Err(line.err(line.offset(s), format!("invalid name `{s}`")));
    }
    Ok(name.to_string())
}

/// Cycle notation over letters `1..=d`; `()` is the identity.
fn parse_perm(line: &Line, s: &str, d: usize) -> Result<Perm> {
    let at = line.offset(s);
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| line.err(line.offset(rest), "expected `(`"))?;
        let close = open
            .find(')')
            .ok_or_else(|| line.err(line.offset(open), "unclosed cycle"))?;
        let mut cycle = Vec::new();
        for tok in open[..close].split_whitespace() {
            let x: usize = tok
                .parse()
                .map_err(|_| line.err(line.offset(tok), format!("invalid letter `{tok}`")))?;
            if x == 0 || x > d {
                return Err(line.err(line.offset(tok), format!("letter {x} out of range 1..={d}")));
            }
            cycle.push(x as u32 - 1);
        }
        cycles.push(cycle);
        rest = open[close + 1..].trim_start();
    }
    Perm::from_cycles(d, &cycles).map_err(|e| line.err(at, e.to_string()))
}

/// Parses a group definition file.
pub fn parse_group_def(text: &str) -> Result<GroupDef> {
    let mut name = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut action = ActionSide::Right;
    let mut gens: Vec<PendingGen> = Vec::new();
    let mut endos: Vec<Line> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let line = Line {
            no: i + 1,
            text: raw,
        };
        let s = body.trim();
        if s.is_empty() {
            continue;
        }
        if let Some(rest) = strip_keyword(s, "group") {
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(line.err(line.offset(s), "expected `group NAME`"));
            }
            name = Some(rest.to_string());
        } else if let Some(rest) = strip_keyword(s, "alphabet") {
            let d: usize = rest
                .parse()
                .map_err(|_| line.err(line.offset(rest), "expected alphabet size"))?;
            alphabet =
                Some(Alphabet::new(d).map_err(|e| line.err(line.offset(rest), e.to_string()))?);
        } else if let Some(rest) = strip_keyword(s, "action") {
            action = match rest {
                "right" => ActionSide::Right,
                "left" => ActionSide::Left,
                _ => return Err(line.err(line.offset(rest), "expected `left` or `right`")),
            };
        } else if let Some(rest) = strip_keyword(s, "gen") {
            let d = alphabet
                .ok_or_else(|| line.err(line.offset(s), "`alphabet` must precede generators"))?
                .size();
            let (gname, rest) = rest.split_once(char::is_whitespace).ok_or_else(|| {
                line.err(
                    line.offset(rest),
                    "expected `gen NAME perm ... sections ...`",
                )
            })?;
            let gname = parse_name(&line, gname)?;
            let rest = strip_keyword(rest.trim_start(), "perm")
                .ok_or_else(|| line.err(line.offset(rest.trim_start()), "expected `perm`"))?;
            let at = rest
                .find("sections")
                .ok_or_else(|| line.err(line.offset(rest), "expected `sections`"))?;
            let perm = parse_perm(&line, &rest[..at], d)?;
            let list = rest[at + "sections".len()..].trim_start();
            let sections: Vec<&str> = list.split(',').collect();
            if sections.len() != d {
                return Err(line.err(
                    line.offset(list),
                    format!("expected {d} sections, got {}", sections.len()),
                ));
            }
            if gens.iter().any(|g| g.name == gname) {
                return Err(line.err(line.offset(s), format!("duplicate generator `{gname}`")));
            }
            gens.push(PendingGen {
                line,
                name: gname,
                perm,
                sections,
            });
        } else if strip_keyword(s, "endo").is_some() {
            endos.push(line);
        } else {
            let kw = s.split_whitespace().next().unwrap_or(s);
            return Err(line.err(line.offset(s), format!("unknown directive `{kw}`")));
        }
    }

    let name = name.ok_or_else(|| Error::Definition("missing `group` line".into()))?;
    let alphabet = alphabet.ok_or_else(|| Error::Definition("missing `alphabet` line".into()))?;
    let symbols = FreeSymbols(gens.iter().map(|g| g.name.clone()).collect());
    let mut generators = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut sections = Vec::with_capacity(g.sections.len());
        for part in &g.sections {
            sections.push(word_at(&symbols, &g.line, part)?);
        }
        generators.push(Generator {
            name: g.name.clone(),
            perm: g.perm.clone(),
            sections,
        });
    }
    let mut def = GroupDef::new(name, alphabet, generators, action)?;
    for line in &endos {
        let rest =
            strip_keyword(line.text.split('#').next().unwrap_or("").trim(), "endo").unwrap_or("");
        let (ename, body) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| line.err(line.offset(rest), "expected `endo NAME x -> w ; ...`"))?;
        let mut images: Vec<Option<Word>> = vec![None; symbols.0.len()];
        for clause in body.split(';') {
            let (lhs, rhs) = clause
                .split_once("->")
                .ok_or_else(|| line.err(line.offset(clause), "expected `x -> w`"))?;
            let key = lhs.trim();
            let idx = symbols
                .0
                .iter()
                .position(|n| *n == key || format!("{{{n}}}") == key)
                .ok_or_else(|| line.err(line.offset(lhs), format!("undeclared symbol `{key}`")))?;
            if images[idx].is_some() {
                return Err(line.err(line.offset(lhs), format!("`{key}` mapped twice")));
            }
            images[idx] = Some(word_at(&symbols, line, rhs)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    line.err(
                        0,
                        format!(
                            "endomorphism `{ename}` gives no image for `{}`",
                            symbols.0[i]
                        ),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        def = def.with_endomorphism(Endomorphism {
            name: ename.to_string(),
            images,
        })?;
    }
    Ok(def)
}

fn word_at(symbols: &FreeSymbols, line: &Line, part: &str) -> Result<Word> {
    parse_word_at(symbols, part, line.no, line.offset(part) + 1)
}

/// Canonical text form; parsing it yields an equal definition.
pub fn serialize(def: &GroupDef) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {}", def.name());
    let _ = writeln!(out, "alphabet {}", def.degree());
    if def.action() == ActionSide::Left {
        out.push_str("action left\n");
    }
    for g in def.generators() {
        let sections: Vec<String> = g.sections.iter().map(|w| def.format_word(w)).collect();
        let _ = writeln!(
            out,
            "gen {} perm {} sections {}",
            display_name(&g.name),
            GroupDef::format_letter_perm(&g.perm),
            sections.join(", ")
        );
    }
    for e in def.endomorphisms() {
        let clauses: Vec<String> = def
            .generators()
            .iter()
            .zip(&e.images)
            .map(|(g, w)| format!("{} -> {}", display_name(&g.name), def.format_word(w)))
            .collect();
        let _ = writeln!(out, "endo {} {}", e.name, clauses.join(" ; "));
    }
    out
}

fn display_name(name: &str) -> String {
    if is_short_name(name) {
        name.to_string()
    } else {
        format!("{{{name}}}")
    }
}
