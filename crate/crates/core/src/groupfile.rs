//! Line-oriented group description files.
//!
//! ```text
//! # comment
//! name sym4
//! degree 4
//! expected_order 24
//! gen (1,2)
//! gen (1,2,3,4)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::bsgs::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub expected_order: Option<u128>,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut name = None;
        let mut degree = None;
        let mut expected_order = None;
        let mut gens: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let syntax = |msg: String| Error::Syntax { line: line_no, msg };
            match key {
                "name" => name = Some(rest.to_string()),
                "degree" => {
                    let n: usize = rest.parse().map_err(|_| syntax(format!("bad degree {rest:?}")))?;
                    if n == 0 {
                        return Err(syntax("degree must be positive".into()));
                    }
                    degree = Some(n);
                }
                "expected_order" => {
                    expected_order =
                        Some(rest.parse().map_err(|_| syntax(format!("bad order {rest:?}")))?);
                }
                "gen" => gens.push((line_no, rest.to_string())),
                _ => return Err(syntax(format!("unknown keyword {key:?}"))),
            }
        }
        let degree = degree.ok_or(Error::Syntax {
            line: 0,
            msg: "missing degree".into(),
        })?;
        let generators = gens
            .into_iter()
            .map(|(line, g)| {
                Permutation::parse(degree, &g).map_err(|e| Error::Syntax {
                    line,
                    msg: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec {
            name: name.unwrap_or_default(),
            degree,
            expected_order,
            generators,
        })
    }

    pub fn read(path: &Path) -> Result<GroupSpec> {
        let text = std::fs::read_to_string(path)?;
        let mut spec = GroupSpec::parse(&text)?;
        if spec.name.is_empty() {
            spec.name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
        }
        Ok(spec)
    }

    /// Builds the group and checks it against `expected_order`.
    pub fn to_group(&self) -> Result<PermGroup> {
        let g = PermGroup::new(self.degree, self.generators.clone())?;
        if let Some(expected) = self.expected_order {
            if g.order() != expected {
                return Err(Error::OrderMismatch {
                    expected,
                    computed: g.order(),
                });
            }
        }
        Ok(g)
    }

    pub fn from_group(name: &str, g: &PermGroup) -> GroupSpec {
        GroupSpec {
            name: name.to_string(),
            degree: g.degree(),
            expected_order: Some(g.order()),
            generators: g.generators().to_vec(),
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            let _ = writeln!(out, "name {}", self.name);
        }
        let _ = writeln!(out, "degree {}", self.degree);
        if let Some(o) = self.expected_order {
            let _ = writeln!(out, "expected_order {o}");
        }
        for g in &self.generators {
            let _ = writeln!(out, "gen {g}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_round_trip() {
        let text = "# Sym(4)\nname sym4\ndegree 4\ngen (1,2)\ngen (1,2,3,4)\n";
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.to_group().unwrap().order(), 24);
        let again = GroupSpec::parse(&spec.serialize()).unwrap();
        assert_eq!(again, spec);
        assert_eq!(again.serialize(), spec.serialize());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = GroupSpec::parse("degree 3\n\ngen (1,1,2)\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
        let err = GroupSpec::parse("degree 4\nfoo bar\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        let spec = GroupSpec::parse("degree 4\nexpected_order 24\ngen (1,2,3)\ngen (2,3,4)\n").unwrap();
        assert_eq!(
            spec.to_group().unwrap_err(),
            Error::OrderMismatch {
                expected: 24,
                computed: 12
            }
        );
    }
}
