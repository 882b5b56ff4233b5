//! Builtin groups, stored in the group file format.

use crate::error::{Error, Result};
use crate::tree::GroupDef;

use super::format::parse_group_def;

const HANOI3: &str = "\
group hanoi3
alphabet 3
gen a perm (2 3) sections a, 1, 1
gen b perm (1 3) sections 1, b, 1
gen c perm (1 2) sections 1, 1, c
endo tau a -> a ; b -> b^c ; c -> c^b
endo sunic a -> 1 ; b -> b ; c -> c
";

const PERVOVA3: &str = "\
group pervova3
alphabet 3
gen a perm (1 2 3) sections 1, 1, 1
gen b perm () sections a, a-, b
gen c perm () sections c, a, a-
";

const PERVOVA3_D: &str = "\
group pervova3_d
alphabet 3
gen a perm (1 2 3) sections 1, 1, 1
gen b perm () sections a, a-, b
gen c perm () sections c, a, a-
gen d perm (1 2 3) sections d, d, d
";

const TWISTED_TWIN: &str = "\
group twisted_twin
alphabet 2
gen a perm (1 2) sections 1, 1
gen b perm () sections c, a
gen c perm () sections a, d
gen d perm () sections 1, b
endo sigma a -> c ; b -> d^a ; c -> b ; d -> c^a
";

const GRIGORCHUK: &str = "\
group grigorchuk
alphabet 2
gen a perm (1 2) sections 1, 1
gen b perm () sections a, c
gen c perm () sections a, d
gen d perm () sections 1, b
";

pub const BUILTIN_NAMES: &[&str] = &[
    "hanoi3",
    "pervova3",
    "pervova3_d",
    "twisted_twin",
    "grigorchuk",
];

/// Source text of a builtin definition.
pub fn builtin_source(name: &str) -> Result<&'static str> {
    Ok(match name {
        "hanoi3" => HANOI3,
        "pervova3" => PERVOVA3,
        "pervova3_d" => PERVOVA3_D,
        "twisted_twin" => TWISTED_TWIN,
        "grigorchuk" => GRIGORCHUK,
        _ => {
            return Err(Error::Unknown {
                kind: "group",
                name: name.to_string(),
            })
        }
    })
}

pub fn builtin(name: &str) -> Result<GroupDef> {
    parse_group_def(builtin_source(name)?)
}
