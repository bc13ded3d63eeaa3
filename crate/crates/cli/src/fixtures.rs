//! Fixture files: one JSON object per line declaring a matrix, group,
//! group algebra, basis-copying algebra or builtin functor. Rationals are
//! strings `"p/q"` or `"n"`, so exact values survive serialization.

use arrowcat_core::algebra::{basis_copying, AlgebraData};
use arrowcat_core::arrowcat::{
    identity_functor, squaring_functor, transpose_functor, FunctorData,
};
use arrowcat_core::exactmat::{group_algebra, GroupPresentation, Rat, RatMatrix};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

#[derive(Debug)]
pub enum LoadError {
    Io(String),
    /// Malformed JSON or unparseable rational, with its line number.
    Parse {
        line: usize,
        message: String,
    },
    /// Structurally valid input that violates a fixture invariant.
    Validation {
        line: usize,
        name: String,
        invariant: String,
    },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read fixtures: {e}"),
            LoadError::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            LoadError::Validation {
                line,
                name,
                invariant,
            } => write!(f, "invalid fixture {name:?} at line {line}: {invariant}"),
        }
    }
}

impl std::error::Error for LoadError {}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum FixtureDecl {
    Matrix {
        name: String,
        rows: Vec<Vec<String>>,
    },
    Group {
        name: String,
        table: Vec<Vec<usize>>,
    },
    GroupAlgebra {
        name: String,
        group: String,
    },
    BasisCopying {
        name: String,
        dim: usize,
    },
    Functor {
        name: String,
        builtin: String,
    },
}

/// Named instances contributed to the suites.
#[derive(Debug, Default)]
pub struct FixtureSet {
    pub matrices: BTreeMap<String, RatMatrix>,
    pub groups: BTreeMap<String, GroupPresentation>,
    pub algebras: BTreeMap<String, AlgebraData>,
    pub functors: BTreeMap<String, FunctorData>,
}

impl FixtureSet {
    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
            && self.groups.is_empty()
            && self.algebras.is_empty()
            && self.functors.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} matrices, {} groups, {} algebras, {} functors",
            self.matrices.len(),
            self.groups.len(),
            self.algebras.len(),
            self.functors.len()
        )
    }
}

fn parse_matrix(line: usize, name: &str, rows: &[Vec<String>]) -> Result<RatMatrix, LoadError> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(LoadError::Validation {
            line,
            name: name.to_string(),
            invariant: "matrix must have at least one row and one column".to_string(),
        });
    }
    let width = rows[0].len();
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != width {
            return Err(LoadError::Validation {
                line,
                name: name.to_string(),
                invariant: format!("ragged rows: expected width {width}, got {}", row.len()),
            });
        }
        let mut out = Vec::with_capacity(width);
        for cell in row {
            let value: Rat = cell.parse().map_err(|e| LoadError::Parse {
                line,
                message: format!("entry {cell:?}: {e}"),
            })?;
            out.push(value);
        }
        parsed.push(out);
    }
    Ok(RatMatrix::from_rows(parsed))
}

/// Parses and invariant-validates a fixture file.
pub fn load_instances(path: &Path) -> Result<FixtureSet, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(e.to_string()))?;
    parse_instances(&text)
}

pub fn parse_instances(text: &str) -> Result<FixtureSet, LoadError> {
    let mut set = FixtureSet::default();
    let mut names = std::collections::BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let decl: FixtureDecl = serde_json::from_str(trimmed).map_err(|e| LoadError::Parse {
            line,
            message: e.to_string(),
        })?;
        let name = match &decl {
            FixtureDecl::Matrix { name, .. }
            | FixtureDecl::Group { name, .. }
            | FixtureDecl::GroupAlgebra { name, .. }
            | FixtureDecl::BasisCopying { name, .. }
            | FixtureDecl::Functor { name, .. } => name.clone(),
        };
        if !names.insert(name.clone()) {
            return Err(LoadError::Validation {
                line,
                name,
                invariant: "duplicate fixture name".to_string(),
            });
        }
        match decl {
            FixtureDecl::Matrix { name, rows } => {
                let m = parse_matrix(line, &name, &rows)?;
                set.matrices.insert(name, m);
            }
            FixtureDecl::Group { name, table } => {
                let group = GroupPresentation::new(name.clone(), table).map_err(|e| {
                    LoadError::Validation {
                        line,
                        name: name.clone(),
                        invariant: e.to_string(),
                    }
                })?;
                set.groups.insert(name, group);
            }
            FixtureDecl::GroupAlgebra { name, group } => {
                let g = set.groups.get(&group).ok_or_else(|| LoadError::Validation {
                    line,
                    name: name.clone(),
                    invariant: format!("unknown group {group:?} (declare it on an earlier line)"),
                })?;
                set.algebras.insert(name, group_algebra(g));
            }
            FixtureDecl::BasisCopying { name, dim } => {
                if dim == 0 {
                    return Err(LoadError::Validation {
                        line,
                        name,
                        invariant: "dimension must be at least 1".to_string(),
                    });
                }
                set.algebras.insert(name, basis_copying(dim));
            }
            FixtureDecl::Functor { name, builtin } => {
                let functor = match builtin.as_str() {
                    "identity" => identity_functor(),
                    "transpose" => transpose_functor(),
                    "squaring" => squaring_functor(),
                    other => {
                        return Err(LoadError::Validation {
                            line,
                            name,
                            invariant: format!(
                                "unknown builtin functor {other:?} (expected identity, transpose or squaring)"
                            ),
                        })
                    }
                };
                set.functors.insert(name, functor);
            }
        }
    }
    Ok(set)
}
