//! Cross-checks the solver against an independent brute-force route: color
//! the edges in plain lexicographic order over an adjacency matrix, trying
//! k = 1, 2, ... classes upward. No degree ordering, no Vizing shortcut.

use sumgraph::{
    build_h, build_integral_sum_graph, build_sum_graph, exact_chromatic_index, Edge, SolveOutcome,
    SolverBudget, SumGraph,
};

fn line_graph_adjacency(edges: &[Edge]) -> Vec<Vec<bool>> {
    let n = edges.len();
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for b in (a + 1)..n {
            if edges[a].shares_vertex(&edges[b]) {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
    }
    adj
}

fn colorable(adj: &[Vec<bool>], colors: &mut [usize], pos: usize, k: usize) -> bool {
    if pos == colors.len() {
        return true;
    }
    let bound = colors[..pos]
        .iter()
        .max()
        .map(|&m| (m + 2).min(k))
        .unwrap_or(1);
    for c in 0..bound {
        if (0..pos).any(|q| adj[pos][q] && colors[q] == c) {
            continue;
        }
        colors[pos] = c;
        if colorable(adj, colors, pos + 1, k) {
            return true;
        }
    }
    false
}

fn brute_force_chromatic_index(g: &SumGraph) -> usize {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.is_empty() {
        return 0;
    }
    let adj = line_graph_adjacency(&edges);
    for k in 1..=edges.len() {
        let mut colors = vec![usize::MAX; edges.len()];
        if colorable(&adj, &mut colors, 0, k) {
            return k;
        }
    }
    edges.len()
}

fn solver_value(g: &SumGraph) -> usize {
    match exact_chromatic_index(g, &SolverBudget::default()).unwrap() {
        SolveOutcome::Exact { chi_prime, .. } => chi_prime,
        SolveOutcome::Timeout { .. } => panic!("unexpected timeout"),
    }
}

#[test]
fn agrees_on_all_small_removal_instances() {
    for i in 2..=6 {
        for s in 2..=(8 - i).max(2) {
            for m in 1..i {
                for j in 1..s {
                    let g = build_h(i, s, m, j).unwrap();
                    let brute = brute_force_chromatic_index(&g);
                    let solved = solver_value(&g);
                    assert_eq!(solved, brute, "H(-{i},{s};{m},{j})");
                    let delta = g.max_degree();
                    assert!(brute == delta || brute == delta + 1);
                }
            }
        }
    }
}

#[test]
fn agrees_on_interval_graphs() {
    for r in -3..=0 {
        for s in 0..=3 {
            if s - r < 1 {
                continue;
            }
            let g = build_integral_sum_graph(r, s).unwrap();
            assert_eq!(
                solver_value(&g),
                brute_force_chromatic_index(&g),
                "G({r},{s})"
            );
        }
    }
}

#[test]
fn agrees_on_positive_sum_graphs() {
    for n in 1..=9 {
        let g = build_sum_graph(n).unwrap();
        assert_eq!(solver_value(&g), brute_force_chromatic_index(&g), "G_{n}");
    }
}

#[test]
fn solver_matches_every_claim_up_to_six() {
    // Over i, s <= 6 the exact value equals the claimed chromatic index
    // wherever a claim exists, and sits in the Vizing window everywhere.
    for i in 2..=6 {
        for s in 2..=6 {
            for m in 1..i {
                for j in 1..s {
                    let g = build_h(i, s, m, j).unwrap();
                    let chi = solver_value(&g);
                    let delta = g.max_degree();
                    assert!(chi == delta || chi == delta + 1);
                    if let Some(claim) = sumgraph::chi_claim(i, s, m, j) {
                        assert_eq!(chi, claim.chi_prime, "H(-{i},{s};{m},{j})");
                    }
                }
            }
        }
    }
}

#[test]
fn worked_values_from_both_routes() {
    let g = build_h(4, 3, 1, 2).unwrap();
    assert_eq!(brute_force_chromatic_index(&g), 5);
    assert_eq!(solver_value(&g), 5);

    let g = build_h(2, 3, 1, 2).unwrap();
    assert_eq!(brute_force_chromatic_index(&g), 3);
    assert_eq!(solver_value(&g), 3);
}
