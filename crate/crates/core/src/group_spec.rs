//! Textual group specifications: `sym:N`, `normalizer:L`,
//! `wreath:cyclic:L:W`, `wreath:normalizer:L:W`, and wreath bases
//! `cyclic:L`, `normalizer:L`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseSpec {
    Cyclic(u64),
    Normalizer(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Sym(u64),
    Normalizer(u64),
    Wreath { base: BaseSpec, w: u64 },
}

fn number(s: &str, what: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("{what}: expected a non-negative integer, got {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("{what}: {s:?} is out of range")))
}

fn ell(s: &str) -> Result<u64> {
    let l = number(s, "ell")?;
    if l < 2 {
        return Err(Error::EllTooSmall(l));
    }
    Ok(l)
}

impl BaseSpec {
    pub fn ell(self) -> u64 {
        match self {
            BaseSpec::Cyclic(l) | BaseSpec::Normalizer(l) => l,
        }
    }

    fn from_parts(kind: &str, l: &str) -> Result<Self> {
        match kind {
            "cyclic" => Ok(BaseSpec::Cyclic(ell(l)?)),
            "normalizer" => Ok(BaseSpec::Normalizer(ell(l)?)),
            _ => Err(Error::Parse(format!("unknown base group {kind:?}"))),
        }
    }
}

impl GroupSpec {
    /// The `ℓ` built into the group, if any.
    pub fn ell(self) -> Option<u64> {
        match self {
            GroupSpec::Sym(_) => None,
            GroupSpec::Normalizer(l) => Some(l),
            GroupSpec::Wreath { base, .. } => Some(base.ell()),
        }
    }
}

pub fn parse_base_spec(s: &str) -> Result<BaseSpec> {
    match s.split(':').collect::<Vec<_>>()[..] {
        [kind, l] => BaseSpec::from_parts(kind, l),
        _ => Err(Error::Parse(format!(
            "expected cyclic:L or normalizer:L, got {s:?}"
        ))),
    }
}

pub fn parse_group_spec(s: &str) -> Result<GroupSpec> {
    match s.split(':').collect::<Vec<_>>()[..] {
        ["sym", n] => Ok(GroupSpec::Sym(number(n, "n")?)),
        ["normalizer", l] => Ok(GroupSpec::Normalizer(ell(l)?)),
        ["wreath", kind, l, w] => Ok(GroupSpec::Wreath {
            base: BaseSpec::from_parts(kind, l)?,
            w: number(w, "w")?,
        }),
        _ => Err(Error::Parse(format!(
            "expected sym:N, normalizer:L or wreath:{{cyclic|normalizer}}:L:W, got {s:?}"
        ))),
    }
}

impl FromStr for BaseSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_base_spec(s)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Cyclic(l) => write!(f, "cyclic:{l}"),
            BaseSpec::Normalizer(l) => write!(f, "normalizer:{l}"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Normalizer(l) => write!(f, "normalizer:{l}"),
            GroupSpec::Wreath { base, w } => write!(f, "wreath:{base}:{w}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!(parse_group_spec("sym:3").unwrap(), GroupSpec::Sym(3));
        assert_eq!(parse_group_spec("normalizer:4").unwrap(), GroupSpec::Normalizer(4));
        assert_eq!(
            parse_group_spec("wreath:cyclic:3:2").unwrap(),
            GroupSpec::Wreath {
                base: BaseSpec::Cyclic(3),
                w: 2
            }
        );
        assert_eq!(parse_base_spec("normalizer:5").unwrap(), BaseSpec::Normalizer(5));
    }

    #[test]
    fn rejects() {
        for bad in [
            "", "sym", "sym:", "sym:-1", "sym:+3", "normalizer:1", "normalizer:x",
            "wreath:cyclic:3", "wreath:dihedral:3:2", "sym:3:4",
            "sym:99999999999999999999999",
        ] {
            assert!(parse_group_spec(bad).is_err(), "{bad}");
        }
        assert!(parse_base_spec("cyclic:0").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["sym:7", "normalizer:12", "wreath:normalizer:4:3", "wreath:cyclic:2:0"] {
            assert_eq!(parse_group_spec(s).unwrap().to_string(), s);
        }
    }
}
