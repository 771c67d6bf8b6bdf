//! Wire formats: graph, coloring, solver, and verification payloads.
//!
//! Graph payloads are validated on load by rebuilding the graph from its
//! family parameters and comparing vertex and edge sets, so a payload can
//! never smuggle in edges the family would not produce.

use serde::{Deserialize, Serialize};

use crate::coloring::{EdgeColoring, Provenance, VerificationReport};
use crate::edge_sum::EdgeSumColoring;
use crate::error::{Error, Result};
use crate::graph::{
    build_h, build_integral_sum_graph, build_sum_graph, Edge, Family, SumGraph,
};
use crate::solver::SolveOutcome;

/// Flat graph payload. Family parameters appear at the top level; unused
/// parameters are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    pub vertices: Vec<i64>,
    pub edges: Vec<Edge>,
}

impl From<&SumGraph> for GraphJson {
    fn from(g: &SumGraph) -> Self {
        let mut out = GraphJson {
            family: g.family().tag().to_string(),
            n: None,
            r: None,
            i: None,
            s: None,
            m: None,
            j: None,
            vertices: g.vertices().to_vec(),
            edges: g.edges().collect(),
        };
        match g.family() {
            Family::Gn { n } => out.n = Some(n),
            Family::Grs { r, s } => {
                out.r = Some(r);
                out.s = Some(s);
            }
            Family::H(p) => {
                out.i = Some(p.i);
                out.s = Some(p.s);
                out.m = Some(p.m);
                out.j = Some(p.j);
            }
        }
        out
    }
}

fn require(field: Option<i64>, name: &str) -> Result<i64> {
    field.ok_or_else(|| Error::InvalidPayload(format!("missing field `{name}`")))
}

impl GraphJson {
    /// Rebuilds the graph from the family parameters and checks that the
    /// payload's vertex and edge lists match the rebuilt graph exactly.
    pub fn to_graph(&self) -> Result<SumGraph> {
        let g = match self.family.as_str() {
            "Gn" => build_sum_graph(require(self.n, "n")?)?,
            "Grs" => build_integral_sum_graph(require(self.r, "r")?, require(self.s, "s")?)?,
            "H" => build_h(
                require(self.i, "i")?,
                require(self.s, "s")?,
                require(self.m, "m")?,
                require(self.j, "j")?,
            )?,
            other => {
                return Err(Error::InvalidPayload(format!("unknown family `{other}`")))
            }
        };
        if g.vertices() != self.vertices.as_slice() {
            return Err(Error::InvalidPayload(
                "vertex list does not match the family parameters".into(),
            ));
        }
        let rebuilt: Vec<Edge> = g.edges().collect();
        if rebuilt != self.edges {
            return Err(Error::InvalidPayload(
                "edge list does not match the family parameters".into(),
            ));
        }
        Ok(g)
    }
}

/// Serializes a graph to its canonical JSON form.
pub fn graph_to_json(g: &SumGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serialization cannot fail")
}

/// Parses and validates a graph payload.
pub fn graph_from_json(text: &str) -> Result<SumGraph> {
    let payload: GraphJson = serde_json::from_str(text)?;
    payload.to_graph()
}

/// One edge-sum class on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSumClassJson {
    pub k: i64,
    pub edges: Vec<Edge>,
}

/// Solver outcome on the wire. `chi_prime` and `class` are absent on
/// timeout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_prime: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub nodes_expanded: u64,
    pub status: String,
}

impl SolveJson {
    pub fn from_outcome(outcome: &SolveOutcome, delta: usize) -> Self {
        match outcome {
            SolveOutcome::Exact {
                chi_prime,
                nodes_expanded,
                ..
            } => SolveJson {
                chi_prime: Some(*chi_prime),
                class: Some(if *chi_prime == delta { "1" } else { "2" }.to_string()),
                nodes_expanded: *nodes_expanded,
                status: "exact".to_string(),
            },
            SolveOutcome::Timeout { nodes_expanded } => SolveJson {
                chi_prime: None,
                class: None,
                nodes_expanded: *nodes_expanded,
                status: "timeout".to_string(),
            },
        }
    }
}

/// Coloring payload; the class layout depends on the producing engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ColoringJson {
    EdgeSum {
        classes: Vec<EdgeSumClassJson>,
        count: usize,
    },
    PaperScheme {
        case: String,
        classes: Vec<Vec<Edge>>,
        count: usize,
        proper: bool,
        complete: bool,
    },
    Exact {
        classes: Vec<Vec<Edge>>,
        count: usize,
        proper: bool,
        complete: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        solver: Option<SolveJson>,
    },
    Greedy {
        classes: Vec<Vec<Edge>>,
        count: usize,
        proper: bool,
        complete: bool,
    },
}

impl ColoringJson {
    pub fn from_edge_sum(c: &EdgeSumColoring) -> Self {
        ColoringJson::EdgeSum {
            classes: c
                .classes()
                .iter()
                .map(|cl| EdgeSumClassJson {
                    k: cl.k,
                    edges: cl.edges.clone(),
                })
                .collect(),
            count: c.class_count(),
        }
    }

    /// Wraps a coloring with its verification flags.
    pub fn from_coloring(
        c: &EdgeColoring,
        report: &VerificationReport,
        solver: Option<SolveJson>,
    ) -> Self {
        let classes = c.classes().to_vec();
        let count = c.class_count();
        match c.provenance() {
            Provenance::PaperScheme { case } => ColoringJson::PaperScheme {
                case: case.clone(),
                classes,
                count,
                proper: report.proper,
                complete: report.complete,
            },
            Provenance::Exact => ColoringJson::Exact {
                classes,
                count,
                proper: report.proper,
                complete: report.complete,
                solver,
            },
            Provenance::Greedy => ColoringJson::Greedy {
                classes,
                count,
                proper: report.proper,
                complete: report.complete,
            },
            Provenance::EdgeSum => ColoringJson::EdgeSum {
                classes: classes
                    .iter()
                    .map(|cl| EdgeSumClassJson {
                        k: cl.first().map(Edge::sum).unwrap_or(0),
                        edges: cl.clone(),
                    })
                    .collect(),
                count,
            },
        }
    }

    /// Recovers the class structure, dropping any embedded flags; callers
    /// re-verify against a graph.
    pub fn to_coloring(&self) -> EdgeColoring {
        match self {
            ColoringJson::EdgeSum { classes, .. } => EdgeColoring::new(
                classes.iter().map(|c| c.edges.clone()).collect(),
                Provenance::EdgeSum,
            ),
            ColoringJson::PaperScheme { case, classes, .. } => EdgeColoring::new(
                classes.clone(),
                Provenance::PaperScheme { case: case.clone() },
            ),
            ColoringJson::Exact { classes, .. } => {
                EdgeColoring::new(classes.clone(), Provenance::Exact)
            }
            ColoringJson::Greedy { classes, .. } => {
                EdgeColoring::new(classes.clone(), Provenance::Greedy)
            }
        }
    }

    pub fn count(&self) -> usize {
        match self {
            ColoringJson::EdgeSum { count, .. }
            | ColoringJson::PaperScheme { count, .. }
            | ColoringJson::Exact { count, .. }
            | ColoringJson::Greedy { count, .. } => *count,
        }
    }
}

/// Serializes any coloring payload.
pub fn coloring_to_json(c: &ColoringJson) -> String {
    serde_json::to_string(c).expect("coloring serialization cannot fail")
}

/// Parses a coloring payload.
pub fn coloring_from_json(text: &str) -> Result<ColoringJson> {
    Ok(serde_json::from_str(text)?)
}

/// Serializes a verification report.
pub fn report_to_json(report: &VerificationReport) -> String {
    serde_json::to_string(report).expect("report serialization cannot fail")
}

/// Serializes a solver outcome payload.
pub fn solve_to_json(solve: &SolveJson) -> String {
    serde_json::to_string(solve).expect("solve serialization cannot fail")
}
