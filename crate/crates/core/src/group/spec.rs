//! Group constructor expressions and their text grammar.
//!
//! Atoms: `Z:n`, `D:m` (dihedral of order m, even, >= 6), `Q:m` (generalized
//! quaternion of order m, divisible by 4, >= 8), `E2:r` (rank-r elementary
//! abelian 2-group), `SD:m,k,t` (Z_m acting on Z_k by b -> b^t), and
//! `table:<path>` for an explicit multiplication table file. Atoms are
//! combined into direct products with `x`, e.g. `Q:8 x Z:3`.

use std::fmt;

use super::{build, Group, GroupError};
use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Stored as the group order 2n, n >= 3.
    Dihedral(u64),
    /// Stored as the group order 4n, n >= 2.
    GeneralizedQuaternion(u64),
    ElementaryAbelian2(u32),
    /// Z_m acting on Z_k with conjugation b -> b^t.
    SemidirectCyclic { m: u64, k: u64, t: u64 },
    /// Multiplication table loaded from a file: first line n, then n rows
    /// of n space-separated element indices.
    RawTable { path: String },
    DirectProduct(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Parses the text grammar. Whitespace between tokens is ignored;
    /// nothing else is normalized.
    pub fn parse(input: &str) -> Result<GroupSpec, GroupError> {
        let tokens: Vec<&str> = input.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(GroupError::InvalidSpec("empty spec".into()));
        }
        let mut atoms = Vec::new();
        for (i, tok) in tokens.iter().enumerate() {
            if i % 2 == 1 {
                if *tok != "x" {
                    return Err(GroupError::InvalidSpec(format!(
                        "expected `x` between atoms, found `{tok}`"
                    )));
                }
            } else {
                atoms.push(parse_atom(tok)?);
            }
        }
        if tokens.len().is_multiple_of(2) {
            return Err(GroupError::InvalidSpec(
                "dangling `x` at end of spec".into(),
            ));
        }
        let spec = if atoms.len() == 1 {
            atoms.pop().expect("one atom")
        } else {
            GroupSpec::DirectProduct(atoms)
        };
        spec.check()?;
        Ok(spec)
    }

    /// Validates the parameter constraints of this spec.
    pub fn check(&self) -> Result<(), GroupError> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n < 1 {
                    return Err(GroupError::InvalidSpec("Z:n requires n >= 1".into()));
                }
            }
            GroupSpec::Dihedral(m) => {
                if *m < 6 || *m % 2 != 0 {
                    return Err(GroupError::InvalidSpec(format!(
                        "D:{m} requires an even order >= 6"
                    )));
                }
            }
            GroupSpec::GeneralizedQuaternion(m) => {
                if *m < 8 || *m % 4 != 0 {
                    return Err(GroupError::InvalidSpec(format!(
                        "Q:{m} requires an order divisible by 4 and >= 8"
                    )));
                }
            }
            GroupSpec::ElementaryAbelian2(r) => {
                if *r < 1 {
                    return Err(GroupError::InvalidSpec("E2:r requires r >= 1".into()));
                }
            }
            GroupSpec::SemidirectCyclic { m, k, t } => {
                if *m < 1 || *k < 1 {
                    return Err(GroupError::InvalidSpec(
                        "SD:m,k,t requires m >= 1 and k >= 1".into(),
                    ));
                }
                if arith::gcd(t % k, *k) != 1 {
                    return Err(GroupError::InvalidSpec(format!(
                        "SD action b -> b^{t} is not invertible mod {k}"
                    )));
                }
                if arith::pow_mod(*t, *m, *k) != 1 % k {
                    return Err(GroupError::InvalidSpec(format!(
                        "SD action requires t^m = 1 (mod k); {t}^{m} != 1 (mod {k})"
                    )));
                }
            }
            GroupSpec::RawTable { .. } => {}
            GroupSpec::DirectProduct(factors) => {
                if factors.is_empty() {
                    return Err(GroupError::InvalidSpec("empty direct product".into()));
                }
                for f in factors {
                    f.check()?;
                }
            }
        }
        Ok(())
    }

    /// Builds the multiplication table realizing this spec.
    pub fn build(&self) -> Result<Group, GroupError> {
        self.check()?;
        build::build_group(self)
    }
}

fn parse_atom(tok: &str) -> Result<GroupSpec, GroupError> {
    let (head, rest) = tok
        .split_once(':')
        .ok_or_else(|| GroupError::InvalidSpec(format!("unrecognized atom `{tok}`")))?;
    let parse_num = |s: &str| -> Result<u64, GroupError> {
        s.parse()
            .map_err(|_| GroupError::InvalidSpec(format!("bad number `{s}` in `{tok}`")))
    };
    match head {
        "Z" => Ok(GroupSpec::Cyclic(parse_num(rest)?)),
        "D" => Ok(GroupSpec::Dihedral(parse_num(rest)?)),
        "Q" => Ok(GroupSpec::GeneralizedQuaternion(parse_num(rest)?)),
        "E2" => Ok(GroupSpec::ElementaryAbelian2(parse_num(rest)? as u32)),
        "SD" => {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 {
                return Err(GroupError::InvalidSpec(format!(
                    "`{tok}` must have the form SD:m,k,t"
                )));
            }
            Ok(GroupSpec::SemidirectCyclic {
                m: parse_num(parts[0])?,
                k: parse_num(parts[1])?,
                t: parse_num(parts[2])?,
            })
        }
        "table" => Ok(GroupSpec::RawTable { path: rest.to_string() }),
        _ => Err(GroupError::InvalidSpec(format!("unrecognized atom `{tok}`"))),
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z:{n}"),
            GroupSpec::Dihedral(m) => write!(f, "D:{m}"),
            GroupSpec::GeneralizedQuaternion(m) => write!(f, "Q:{m}"),
            GroupSpec::ElementaryAbelian2(r) => write!(f, "E2:{r}"),
            GroupSpec::SemidirectCyclic { m, k, t } => write!(f, "SD:{m},{k},{t}"),
            GroupSpec::RawTable { path } => write!(f, "table:{path}"),
            GroupSpec::DirectProduct(factors) => {
                for (i, fac) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{fac}")?;
                }
                Ok(())
            }
        }
    }
}
