//! A generic commuting-diagram engine: named vertices, named edges, and
//! lists of paths that must evaluate to equal composites.
//!
//! Everything the specialized checkers verify is a path equality in either
//! the ambient category (matrices) or the arrow category (squares), so one
//! engine covers both through the [`Composable`] trait. The engine composes
//! each path exactly and reports the first differing pair together with the
//! evaluated witnesses.

use arrowcat_core::arrowcat::{arrow_compose, ArrowMorphism};
use arrowcat_core::exactmat::{compose, RatMatrix};
use arrowcat_core::verdict::{Verdict, Witness};
use std::collections::BTreeMap;
use std::fmt;

/// Morphism-like values the engine can compose and compare.
pub trait Composable: Clone + PartialEq {
    fn compose_pair(later: &Self, earlier: &Self) -> Result<Self, String>;
    fn witness(&self) -> Witness;
}

impl Composable for RatMatrix {
    fn compose_pair(later: &Self, earlier: &Self) -> Result<Self, String> {
        compose(later, earlier).map_err(|e| e.to_string())
    }

    fn witness(&self) -> Witness {
        Witness::Matrix(self.clone())
    }
}

impl Composable for ArrowMorphism {
    fn compose_pair(later: &Self, earlier: &Self) -> Result<Self, String> {
        arrow_compose(later, earlier).map_err(|e| e.to_string())
    }

    fn witness(&self) -> Witness {
        Witness::Square {
            top: self.top().clone(),
            bottom: self.bottom().clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    UnknownVertex(String),
    UnknownEdge(String),
    DuplicateEdge(String),
    /// A listed path has consecutive edges whose endpoints do not chain, or
    /// two compared paths do not share endpoints.
    NotComposable(String),
    EmptyPath,
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::UnknownVertex(v) => write!(f, "unknown vertex {v:?}"),
            DiagramError::UnknownEdge(e) => write!(f, "unknown edge {e:?}"),
            DiagramError::DuplicateEdge(e) => write!(f, "duplicate edge {e:?}"),
            DiagramError::NotComposable(s) => write!(f, "not composable: {s}"),
            DiagramError::EmptyPath => write!(f, "empty path"),
        }
    }
}

impl std::error::Error for DiagramError {}

struct Edge<T> {
    from: String,
    to: String,
    value: T,
}

/// A diagram with named vertices and edges plus the path lists to compare.
/// Paths are edge-name sequences written source-first.
pub struct Diagram<T> {
    vertices: Vec<String>,
    edges: BTreeMap<String, Edge<T>>,
    comparisons: Vec<Vec<Vec<String>>>,
}

impl<T: Composable> Diagram<T> {
    pub fn new() -> Self {
        Diagram {
            vertices: Vec::new(),
            edges: BTreeMap::new(),
            comparisons: Vec::new(),
        }
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> &mut Self {
        let name = name.into();
        if !self.vertices.contains(&name) {
            self.vertices.push(name);
        }
        self
    }

    pub fn edge(
        &mut self,
        name: impl Into<String>,
        from: impl Into<String>,
        to: impl Into<String>,
        value: T,
    ) -> Result<&mut Self, DiagramError> {
        let name = name.into();
        let from = from.into();
        let to = to.into();
        for v in [&from, &to] {
            if !self.vertices.contains(v) {
                return Err(DiagramError::UnknownVertex(v.clone()));
            }
        }
        if self.edges.contains_key(&name) {
            return Err(DiagramError::DuplicateEdge(name));
        }
        self.edges.insert(name, Edge { from, to, value });
        Ok(self)
    }

    /// Requires all listed paths to evaluate to the same composite.
    pub fn compare(&mut self, paths: &[&[&str]]) -> &mut Self {
        self.comparisons.push(
            paths
                .iter()
                .map(|p| p.iter().map(|s| s.to_string()).collect())
                .collect(),
        );
        self
    }

    fn eval_path(&self, path: &[String]) -> Result<(T, String, String), DiagramError> {
        let mut iter = path.iter();
        let first_name = iter.next().ok_or(DiagramError::EmptyPath)?;
        let first = self
            .edges
            .get(first_name)
            .ok_or_else(|| DiagramError::UnknownEdge(first_name.clone()))?;
        let mut value = first.value.clone();
        let source = first.from.clone();
        let mut at = first.to.clone();
        for name in iter {
            let edge = self
                .edges
                .get(name)
                .ok_or_else(|| DiagramError::UnknownEdge(name.clone()))?;
            if edge.from != at {
                return Err(DiagramError::NotComposable(format!(
                    "edge {name:?} starts at {:?} but the path has reached {at:?}",
                    edge.from
                )));
            }
            value = T::compose_pair(&edge.value, &value)
                .map_err(DiagramError::NotComposable)?;
            at = edge.to.clone();
        }
        Ok((value, source, at))
    }
}

impl<T: Composable> Default for Diagram<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn describe(path: &[String]) -> String {
    path.join(" ; ")
}

/// Composes every compared path exactly; the verdict carries the first
/// differing path pair and both evaluated composites.
pub fn check_diagram<T: Composable>(diagram: &Diagram<T>) -> Result<Verdict, DiagramError> {
    for comparison in &diagram.comparisons {
        let mut evaluated: Option<(T, String, String, &Vec<String>)> = None;
        for path in comparison {
            let (value, source, target) = diagram.eval_path(path)?;
            match &evaluated {
                None => evaluated = Some((value, source, target, path)),
                Some((reference, ref_source, ref_target, ref_path)) => {
                    if source != *ref_source || target != *ref_target {
                        return Err(DiagramError::NotComposable(format!(
                            "paths {:?} and {:?} do not share endpoints",
                            describe(ref_path),
                            describe(path)
                        )));
                    }
                    if value != *reference {
                        return Ok(Verdict::fail_with(
                            "diagram",
                            format!("{} vs {}", describe(ref_path), describe(path)),
                            reference.witness(),
                            value.witness(),
                        ));
                    }
                }
            }
        }
    }
    Ok(Verdict::Pass)
}
