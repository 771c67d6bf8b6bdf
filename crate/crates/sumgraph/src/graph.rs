//! Sum-graph families over integer labels and the closed-form degree and
//! edge-count expressions they satisfy.
//!
//! Three families are supported:
//!
//! * `G_n` — labels `{1..n}`, edge `{u,v}` iff `u+v <= n`;
//! * `G_{r,s}` — labels `{r..s}` with `r <= 0 <= s`, edge iff `u+v` lies in
//!   `[r,s]`;
//! * `H^{-i,s}_{m,j}` — `G_{-i,s}` with the vertices `-m` and `j` deleted and
//!   every edge of endpoint sum `-m` or `j` deleted.
//!
//! Graphs are immutable after construction; degrees and related quantities
//! are computed on demand.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Labels are capped so every derived quantity fits comfortably in `i64`.
pub const MAX_LABEL: i64 = 1_000_000;

fn check_label(label: i64) -> Result<i64> {
    if label.abs() > MAX_LABEL {
        return Err(Error::LabelLimit {
            label,
            max: MAX_LABEL,
        });
    }
    Ok(label)
}

/// An undirected edge stored canonically as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(i64, i64);

impl Edge {
    /// Canonicalizes the endpoint order; self-loops are rejected.
    pub fn new(u: i64, v: i64) -> Result<Self> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        Ok(Edge(u.min(v), u.max(v)))
    }

    pub fn lo(&self) -> i64 {
        self.0
    }

    pub fn hi(&self) -> i64 {
        self.1
    }

    pub fn endpoints(&self) -> (i64, i64) {
        (self.0, self.1)
    }

    /// The endpoint sum, i.e. the edge-sum label of this edge.
    pub fn sum(&self) -> i64 {
        self.0 + self.1
    }

    pub fn touches(&self, v: i64) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }

    /// Maps both endpoints through label negation.
    pub fn negated(&self) -> Edge {
        Edge((-self.1).min(-self.0), (-self.1).max(-self.0))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.0)?;
        t.serialize_element(&self.1)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EdgeVisitor;

        impl<'de> Visitor<'de> for EdgeVisitor {
            type Value = Edge;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a two-element [u, v] array with u != v")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Edge, A::Error> {
                let u: i64 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let v: i64 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<i64>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Edge::new(u, v).map_err(|_| de::Error::custom("self-loop edge"))
            }
        }

        deserializer.deserialize_tuple(2, EdgeVisitor)
    }
}

/// The contiguous label interval `{r, r+1, ..., s}` with `r <= 0 <= s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelSet {
    r: i64,
    s: i64,
}

impl LabelSet {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        check_label(r)?;
        check_label(s)?;
        if r > 0 || s < 0 || s - r < 1 {
            return Err(Error::InvalidBounds { r, s });
        }
        Ok(LabelSet { r, s })
    }

    pub fn lower(&self) -> i64 {
        self.r
    }

    pub fn upper(&self) -> i64 {
        self.s
    }

    pub fn contains(&self, k: i64) -> bool {
        self.r <= k && k <= self.s
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.r..=self.s
    }

    pub fn len(&self) -> usize {
        (self.s - self.r + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Parameters of the vertex/sum-class removal applied to `G_{-i,s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HParams {
    pub i: i64,
    pub s: i64,
    pub m: i64,
    pub j: i64,
}

impl HParams {
    pub fn new(i: i64, s: i64, m: i64, j: i64) -> Result<Self> {
        check_label(i)?;
        check_label(s)?;
        if i < 1 || s < 1 || m < 1 || m >= i || j < 1 || j >= s {
            return Err(Error::InvalidRemoval { i, s, m, j });
        }
        Ok(HParams { i, s, m, j })
    }

    /// The parameter image under label negation: `H^{-i,s}_{m,j} -> H^{-s,i}_{j,m}`.
    pub fn negated(&self) -> HParams {
        HParams {
            i: self.s,
            s: self.i,
            m: self.j,
            j: self.m,
        }
    }
}

/// Which catalog family a graph was built from, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gn { n: i64 },
    Grs { r: i64, s: i64 },
    H(HParams),
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Gn { .. } => "Gn",
            Family::Grs { .. } => "Grs",
            Family::H(_) => "H",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gn { n } => write!(f, "G_{n}"),
            Family::Grs { r, s } => write!(f, "G_({r},{s})"),
            Family::H(p) => write!(f, "H^(-{},{})_({},{})", p.i, p.s, p.m, p.j),
        }
    }
}

/// Per-vertex degree report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub label: i64,
    pub degree: usize,
}

/// An immutable integer-labeled simple graph from one of the sum-graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumGraph {
    vertices: Vec<i64>,
    edges: BTreeSet<Edge>,
    family: Family,
}

impl SumGraph {
    fn assemble(vertices: Vec<i64>, family: Family, removed_sums: &[i64]) -> Self {
        let mut edges = BTreeSet::new();
        for (a, &u) in vertices.iter().enumerate() {
            for &v in &vertices[a + 1..] {
                let t = u + v;
                let in_range = match family {
                    Family::Gn { n } => 1 <= t && t <= n,
                    Family::Grs { r, s } => r <= t && t <= s,
                    Family::H(p) => -p.i <= t && t <= p.s,
                };
                if in_range && !removed_sums.contains(&t) {
                    edges.insert(Edge(u, v));
                }
            }
        }
        SumGraph {
            vertices,
            edges,
            family,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_vertex(&self, v: i64) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Number of edges incident to `v`, or `None` for an unknown label.
    pub fn degree(&self, v: i64) -> Option<usize> {
        if !self.has_vertex(v) {
            return None;
        }
        Some(self.edges.iter().filter(|e| e.touches(v)).count())
    }

    /// Degrees of every vertex, in ascending label order.
    pub fn degrees(&self) -> Vec<DegreeRecord> {
        let mut by_label: BTreeMap<i64, usize> =
            self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            *by_label.get_mut(&e.0).expect("edge endpoint is a vertex") += 1;
            *by_label.get_mut(&e.1).expect("edge endpoint is a vertex") += 1;
        }
        by_label
            .into_iter()
            .map(|(label, degree)| DegreeRecord { label, degree })
            .collect()
    }

    /// The maximum degree. Family constructors never produce an empty vertex
    /// set, so the maximum always exists.
    pub fn max_degree(&self) -> usize {
        self.degrees()
            .into_iter()
            .map(|d| d.degree)
            .max()
            .unwrap_or(0)
    }

    /// Maps every label `t` to `-t` and re-derives the family parameters:
    /// `G_{r,s} -> G_{-s,-r}` and `H^{-i,s}_{m,j} -> H^{-s,i}_{j,m}`. An
    /// involution. `G_n` has no negative-interval counterpart in the catalog.
    pub fn negate_labels(&self) -> Result<SumGraph> {
        let family = match self.family {
            Family::Gn { .. } => return Err(Error::NegateUnsupported),
            Family::Grs { r, s } => Family::Grs { r: -s, s: -r },
            Family::H(p) => Family::H(p.negated()),
        };
        let mut vertices: Vec<i64> = self.vertices.iter().map(|&v| -v).collect();
        vertices.sort_unstable();
        let edges = self.edges.iter().map(Edge::negated).collect();
        Ok(SumGraph {
            vertices,
            edges,
            family,
        })
    }
}

/// Builds `G_n`: labels `{1..n}`, edge `{u,v}` iff `u + v <= n`.
pub fn build_sum_graph(n: i64) -> Result<SumGraph> {
    check_label(n)?;
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    let vertices: Vec<i64> = (1..=n).collect();
    Ok(SumGraph::assemble(vertices, Family::Gn { n }, &[]))
}

/// Builds `G_{r,s}`: labels `{r..s}`, edge `{u,v}` iff `u + v` lies in `[r,s]`.
pub fn build_integral_sum_graph(r: i64, s: i64) -> Result<SumGraph> {
    let set = LabelSet::new(r, s)?;
    let vertices: Vec<i64> = set.iter().collect();
    Ok(SumGraph::assemble(vertices, Family::Grs { r, s }, &[]))
}

/// Builds `H^{-i,s}_{m,j}`: `G_{-i,s}` minus the vertices `-m` and `j` and
/// minus every edge whose endpoint sum is `-m` or `j`.
pub fn build_h_graph(p: HParams) -> Result<SumGraph> {
    let p = HParams::new(p.i, p.s, p.m, p.j)?;
    let vertices: Vec<i64> = (-p.i..=p.s).filter(|&v| v != -p.m && v != p.j).collect();
    Ok(SumGraph::assemble(vertices, Family::H(p), &[-p.m, p.j]))
}

/// Convenience wrapper over [`build_h_graph`].
pub fn build_h(i: i64, s: i64, m: i64, j: i64) -> Result<SumGraph> {
    build_h_graph(HParams::new(i, s, m, j)?)
}

/// Maximum degree of a graph; see [`SumGraph::max_degree`].
pub fn max_degree(g: &SumGraph) -> usize {
    g.max_degree()
}

/// Piecewise closed form for `deg(t)` in `G_{r,s}` with `r < 0 < s` and
/// `n = s - r + 1`:
///
/// * `n - t - 1` for `1 <= t <= floor(s/2)`,
/// * `n - t` for `floor(s/2) < t <= s`,
/// * `n - 1` for `t = 0`,
/// * `n + t - 1` for `t < 0` with `1 <= |t| <= floor(|r|/2)`,
/// * `n + t` for `t < 0` with `floor(|r|/2) < |t| <= |r|`.
///
/// The negative branches read the index as the (negative) label value with
/// the range condition on its magnitude; this is the unique reading that
/// matches enumeration.
pub fn degree_formula(label: i64, r: i64, s: i64) -> Result<usize> {
    if r >= 0 || s <= 0 {
        return Err(Error::DegreeRange { r, s });
    }
    LabelSet::new(r, s)?;
    if label < r || label > s {
        return Err(Error::LabelOutOfRange {
            label,
            lo: r,
            hi: s,
        });
    }
    let n = s - r + 1;
    let value = if label == 0 {
        n - 1
    } else if label > 0 {
        if label <= s.div_euclid(2) {
            n - label - 1
        } else {
            n - label
        }
    } else if -label <= (-r).div_euclid(2) {
        n + label - 1
    } else {
        n + label
    };
    Ok(value as usize)
}

/// Closed form for `deg(t)` in `G_n`: `n - t - 1` for `1 <= t <= floor(n/2)`
/// and `n - t` above.
pub fn sum_graph_degree_formula(label: i64, n: i64) -> Result<usize> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    if label < 1 || label > n {
        return Err(Error::LabelOutOfRange {
            label,
            lo: 1,
            hi: n,
        });
    }
    let value = if label <= n.div_euclid(2) {
        n - label - 1
    } else {
        n - label
    };
    Ok(value as usize)
}

/// Closed form for `|E(G_{r,s})|` with `|r| + s >= 3`:
/// `(r^2 + s^2 - 3r + 3s - 4rs)/4 - (floor(|r|/2) + floor(s/2))/2`.
///
/// The combined numerator is always divisible by 4, so the value is exact
/// in integer arithmetic.
pub fn edge_count_formula(r: i64, s: i64) -> Result<usize> {
    LabelSet::new(r, s)?;
    if r.abs() + s < 3 {
        return Err(Error::EdgeCountRange { r, s });
    }
    let quad = r * r + s * s - 3 * r + 3 * s - 4 * r * s;
    let halves = r.abs().div_euclid(2) + s.div_euclid(2);
    let numerator = quad - 2 * halves;
    debug_assert_eq!(numerator.rem_euclid(4), 0);
    Ok((numerator / 4) as usize)
}
