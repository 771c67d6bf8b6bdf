//! Indexed edge colorings and the verifier that checks them against a graph.
//!
//! A coloring is proper when every class is a matching, and complete when
//! the classes partition the edge set exactly. The verifier reports every
//! failure rather than stopping at the first one, so a bad class can be
//! traced back to the specific edges that break it.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::edge_sum::EdgeSumColoring;
use crate::graph::{Edge, SumGraph};

/// How a coloring was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// One of the built-in case constructions, e.g. `H2s/A`.
    PaperScheme { case: String },
    Exact,
    Greedy,
    EdgeSum,
}

impl Provenance {
    pub fn kind(&self) -> &'static str {
        match self {
            Provenance::PaperScheme { .. } => "paper-scheme",
            Provenance::Exact => "exact",
            Provenance::Greedy => "greedy",
            Provenance::EdgeSum => "edge-sum",
        }
    }
}

/// A partition of an edge set into indexed classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    classes: Vec<Vec<Edge>>,
    provenance: Provenance,
}

impl EdgeColoring {
    pub fn new(classes: Vec<Vec<Edge>>, provenance: Provenance) -> Self {
        EdgeColoring {
            classes,
            provenance,
        }
    }

    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The class index of each edge, or `None` if the edge is not colored.
    pub fn class_of(&self, e: Edge) -> Option<usize> {
        self.classes
            .iter()
            .position(|class| class.contains(&e))
    }

    /// Negates every edge label, preserving class structure. Used to carry a
    /// coloring across the mirror between sign-swapped families.
    pub fn negated(&self) -> EdgeColoring {
        EdgeColoring {
            classes: self
                .classes
                .iter()
                .map(|class| class.iter().map(Edge::negated).collect())
                .collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Classes as plain endpoint pairs, in class order.
    pub fn as_pairs(&self) -> Vec<Vec<(i64, i64)>> {
        self.classes
            .iter()
            .map(|class| class.iter().map(Edge::endpoints).collect())
            .collect()
    }
}

impl From<&EdgeSumColoring> for EdgeColoring {
    fn from(c: &EdgeSumColoring) -> Self {
        EdgeColoring {
            classes: c.classes().iter().map(|cl| cl.edges.clone()).collect(),
            provenance: Provenance::EdgeSum,
        }
    }
}

/// A single verification failure, tied to the class it occurred in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Two edges in one class share a vertex.
    Clash {
        class: usize,
        first: Edge,
        second: Edge,
    },
    /// An edge that is not present in the graph (including edges whose
    /// labels are not graph vertices).
    Foreign { class: usize, edge: Edge },
    /// An edge assigned to more than one class (or twice to one class).
    Duplicate { class: usize, edge: Edge },
    /// A graph edge missing from every class.
    Missing { edge: Edge },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Clash {
                class,
                first,
                second,
            } => write!(f, "class {class}: {first} and {second} share a vertex"),
            Violation::Foreign { class, edge } => {
                write!(f, "class {class}: {edge} is not a graph edge")
            }
            Violation::Duplicate { class, edge } => {
                write!(f, "class {class}: {edge} already colored")
            }
            Violation::Missing { edge } => write!(f, "uncolored graph edge {edge}"),
        }
    }
}

/// Outcome of checking a coloring against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub complete: bool,
    pub class_count: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.proper && self.complete
    }
}

/// Checks `c` against `g`: proper iff every class is a matching on `g`,
/// complete iff the classes partition `E(g)`. All failures are report
/// content, never errors.
pub fn verify_coloring(g: &SumGraph, c: &EdgeColoring) -> VerificationReport {
    let mut violations = Vec::new();
    let mut proper = true;
    let mut complete = true;
    let mut seen: BTreeSet<Edge> = BTreeSet::new();

    for (idx, class) in c.classes().iter().enumerate() {
        for (a, e) in class.iter().enumerate() {
            if !g.has_edge(*e) {
                complete = false;
                violations.push(Violation::Foreign {
                    class: idx,
                    edge: *e,
                });
            }
            if !seen.insert(*e) {
                complete = false;
                violations.push(Violation::Duplicate {
                    class: idx,
                    edge: *e,
                });
            }
            for f in &class[a + 1..] {
                if e.shares_vertex(f) {
                    proper = false;
                    violations.push(Violation::Clash {
                        class: idx,
                        first: *e,
                        second: *f,
                    });
                }
            }
        }
    }

    for e in g.edges() {
        if !seen.contains(&e) {
            complete = false;
            violations.push(Violation::Missing { edge: e });
        }
    }

    VerificationReport {
        proper,
        complete,
        class_count: c.class_count(),
        violations,
    }
}

/// True iff every class of `c` is a matching on `g`.
pub fn is_proper_edge_coloring(g: &SumGraph, c: &EdgeColoring) -> bool {
    verify_coloring(g, c).proper
}

/// Builds a coloring from plain endpoint pairs; loops are rejected.
pub fn coloring_from_pairs(
    pairs: &[Vec<(i64, i64)>],
    provenance: Provenance,
) -> crate::error::Result<EdgeColoring> {
    let mut classes = Vec::with_capacity(pairs.len());
    for class in pairs {
        let mut edges = Vec::with_capacity(class.len());
        for &(u, v) in class {
            edges.push(Edge::new(u, v)?);
        }
        classes.push(edges);
    }
    Ok(EdgeColoring::new(classes, provenance))
}
