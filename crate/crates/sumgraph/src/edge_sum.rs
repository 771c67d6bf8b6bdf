//! The canonical edge-sum coloring: edges grouped by endpoint sum.
//!
//! Two edges with the same endpoint sum can never share a vertex
//! (`u+v = u+w` forces `v = w`), so every class is a matching and the
//! grouping is always a proper edge coloring.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, SumGraph};

/// All surviving edges whose endpoints sum to `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeSumClass {
    pub k: i64,
    pub edges: Vec<Edge>,
}

/// The partition of an edge set by endpoint sum, ascending in `k`.
/// Empty sums are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSumColoring {
    classes: Vec<EdgeSumClass>,
}

impl EdgeSumColoring {
    pub fn classes(&self) -> &[EdgeSumClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.classes.iter().map(|c| c.edges.len()).sum()
    }

    /// The distinct endpoint sums present, ascending.
    pub fn sums(&self) -> Vec<i64> {
        self.classes.iter().map(|c| c.k).collect()
    }
}

/// Partitions `E(g)` by endpoint sum. An edgeless graph yields zero classes.
pub fn edge_sum_classes(g: &SumGraph) -> EdgeSumColoring {
    let mut by_sum: BTreeMap<i64, Vec<Edge>> = BTreeMap::new();
    for e in g.edges() {
        by_sum.entry(e.sum()).or_default().push(e);
    }
    EdgeSumColoring {
        classes: by_sum
            .into_iter()
            .map(|(k, edges)| EdgeSumClass { k, edges })
            .collect(),
    }
}

/// The number of nonempty edge-sum classes, i.e. the number of distinct
/// endpoint sums over `E(g)`.
pub fn edge_sum_chromatic(g: &SumGraph) -> usize {
    edge_sum_classes(g).class_count()
}

/// Whether the edge-sum coloring is already optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeSumStatus {
    Perfect,
    NonPerfect,
}

impl EdgeSumStatus {
    pub fn is_perfect(&self) -> bool {
        matches!(self, EdgeSumStatus::Perfect)
    }
}

/// Compares the edge-sum chromatic number against a verified chromatic
/// index. `chi_prime` below the maximum degree is impossible and rejected.
pub fn classify_perfect(g: &SumGraph, chi_prime: usize) -> Result<EdgeSumStatus> {
    let delta = g.max_degree();
    if chi_prime < delta {
        return Err(Error::ImpossibleChromatic {
            chi: chi_prime,
            delta,
        });
    }
    if edge_sum_chromatic(g) == chi_prime {
        Ok(EdgeSumStatus::Perfect)
    } else {
        Ok(EdgeSumStatus::NonPerfect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_h, build_integral_sum_graph, build_sum_graph};

    #[test]
    fn classes_of_h_4_3_1_2() {
        let g = build_h(4, 3, 1, 2).unwrap();
        let coloring = edge_sum_classes(&g);
        assert_eq!(coloring.sums(), vec![-4, -3, -2, 0, 1, 3]);
        assert_eq!(coloring.edge_count(), g.edge_count());
    }

    #[test]
    fn classes_of_h_2_3_1_2() {
        let g = build_h(2, 3, 1, 2).unwrap();
        let coloring = edge_sum_classes(&g);
        let got: Vec<(i64, Vec<(i64, i64)>)> = coloring
            .classes()
            .iter()
            .map(|c| (c.k, c.edges.iter().map(|e| e.endpoints()).collect()))
            .collect();
        assert_eq!(
            got,
            vec![
                (-2, vec![(-2, 0)]),
                (1, vec![(-2, 3), (0, 1)]),
                (3, vec![(0, 3)]),
            ]
        );
    }

    #[test]
    fn edgeless_graph_has_zero_classes() {
        let g = build_sum_graph(1).unwrap();
        assert_eq!(edge_sum_classes(&g).class_count(), 0);
        assert_eq!(edge_sum_chromatic(&g), 0);
    }

    #[test]
    fn chromatic_counts() {
        assert_eq!(edge_sum_chromatic(&build_h(4, 3, 1, 2).unwrap()), 6);
        assert_eq!(edge_sum_chromatic(&build_integral_sum_graph(0, 1).unwrap()), 1);
        assert_eq!(edge_sum_chromatic(&build_h(2, 3, 1, 2).unwrap()), 3);
    }

    #[test]
    fn every_class_is_a_matching() {
        for (i, s, m, j) in [(4, 3, 1, 2), (2, 7, 1, 1), (5, 5, 2, 3), (6, 2, 3, 1)] {
            let g = build_h(i, s, m, j).unwrap();
            for class in edge_sum_classes(&g).classes() {
                for (a, e) in class.edges.iter().enumerate() {
                    for f in &class.edges[a + 1..] {
                        assert!(!e.shares_vertex(f), "clash in E_{}: {e} {f}", class.k);
                    }
                }
            }
        }
    }

    #[test]
    fn perfect_classification() {
        let g = build_h(4, 3, 1, 2).unwrap();
        assert_eq!(classify_perfect(&g, 5).unwrap(), EdgeSumStatus::NonPerfect);

        let single = build_integral_sum_graph(0, 1).unwrap();
        assert_eq!(classify_perfect(&single, 1).unwrap(), EdgeSumStatus::Perfect);

        // chi' = 7 for H(-2,7;1,1): zsum = 8, so non-perfect as claimed.
        let g = build_h(2, 7, 1, 1).unwrap();
        assert_eq!(edge_sum_chromatic(&g), 8);
        assert_eq!(classify_perfect(&g, 7).unwrap(), EdgeSumStatus::NonPerfect);
    }

    #[test]
    fn impossible_chromatic_rejected() {
        let g = build_h(4, 3, 1, 2).unwrap();
        assert!(matches!(
            classify_perfect(&g, 4),
            Err(Error::ImpossibleChromatic { chi: 4, delta: 5 })
        ));
    }

    #[test]
    fn grs_nonempty_sums_match_brute_force() {
        for (r, s) in [(-3, 4), (-2, 3), (-5, 2), (0, 4)] {
            let g = build_integral_sum_graph(r, s).unwrap();
            let mut expected: Vec<i64> = (r..=s)
                .filter(|&k| {
                    (r..=s).any(|u| {
                        let v = k - u;
                        u < v && v <= s && v >= r
                    })
                })
                .collect();
            expected.sort_unstable();
            assert_eq!(edge_sum_classes(&g).sums(), expected, "G({r},{s})");
        }
    }
}
