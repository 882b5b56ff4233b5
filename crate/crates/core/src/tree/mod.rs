//! Self-similar groups acting on the rooted tree `X*`.

mod def;
mod eval;
mod expr;
mod nucleus;
mod translate;
mod trivial;
mod word;

pub use def::{ActionSide, Alphabet, Endomorphism, Generator, GroupDef, Vertex, WordDisplay};
pub use eval::{restrict_to_level, vertex_label, LevelMap, Portrait};
pub use expr::{parse_word, parse_word_at, Abbreviations, FreeSymbols, SymbolTable};
pub use nucleus::nucleus;
pub use translate::{translate, ElementExpr};
pub use trivial::{Policy, Verdict, MEMO_CAP};
pub use word::{compose, invert, Letter, Word};

pub(crate) use def::is_short_name;
