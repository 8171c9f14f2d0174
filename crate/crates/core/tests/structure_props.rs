mod common;

use trapezoid::oracle::{chordless_cycle, has_odd_cycle};
use trapezoid::structure::{
    caterpillar_to_diagram, has_triangle, is_bipartite, is_caterpillar, random_caterpillar, OddCycle,
};
use trapezoid::{IntersectionGraph, TrapezoidDiagram};

fn triangle_by_triples(g: &IntersectionGraph) -> bool {
    let n = g.n();
    (1..=n).any(|i| {
        (i + 1..=n).any(|j| g.has_edge(i, j) && (j + 1..=n).any(|k| g.has_edge(i, k) && g.has_edge(j, k)))
    })
}

#[test]
fn bipartite_verdict_matches_exhaustive_cycle_parity() {
    for (n, seed) in common::corpus(600, 8, 21) {
        let g = TrapezoidDiagram::random(n, seed).intersection_graph();
        assert_eq!(is_bipartite(&g).is_ok(), !has_odd_cycle(&g), "n = {n}, seed = {seed}");
    }
}

#[test]
fn triangle_search_matches_triple_scan() {
    for (n, seed) in common::corpus(2000, 60, 22) {
        let dg = TrapezoidDiagram::random(n, seed);
        let g = dg.intersection_graph();
        let found = has_triangle(&g);
        assert_eq!(found.is_some(), triangle_by_triples(&g));
        if let Some((i, j, k)) = found {
            assert!(i < j && j < k);
            assert!(g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k));
        }
    }
}

#[test]
fn odd_cycle_witnesses_are_cycles() {
    for (n, seed) in common::corpus(500, 40, 23) {
        let g = TrapezoidDiagram::random(n, seed).intersection_graph();
        match is_bipartite(&g) {
            Ok(b) => {
                for (u, v) in g.edges() {
                    assert_ne!(b.side[u - 1], b.side[v - 1]);
                }
            }
            Err(OddCycle(cycle)) => {
                assert_eq!(cycle.len() % 2, 1);
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), cycle.len());
                for k in 0..cycle.len() {
                    assert!(g.has_edge(cycle[k], cycle[(k + 1) % cycle.len()]));
                }
            }
        }
    }
}

#[test]
fn no_long_chordless_cycles() {
    for (n, seed) in common::corpus(300, 9, 24) {
        let g = TrapezoidDiagram::random(n, seed).intersection_graph();
        assert_eq!(chordless_cycle(&g, 5), None, "n = {n}, seed = {seed}");
    }
}

#[test]
fn tree_diagrams_are_caterpillars() {
    let mut trees = 0;
    for seed in 0..3000u64 {
        let g = common::sparse_diagram(2 + seed as usize % 14, seed).intersection_graph();
        if g.m() + 1 == g.n() && g.is_connected() {
            trees += 1;
            assert!(is_caterpillar(&g).is_ok(), "seed = {seed}");
        }
    }
    assert!(trees > 100, "only {trees} tree-shaped diagrams sampled");
}

#[test]
fn caterpillar_fixture_round_trips() {
    let dg = common::fixture("caterpillar_raw.txt");
    let g = dg.intersection_graph();
    let cd = is_caterpillar(&g).unwrap();
    assert_eq!(cd.spine, vec![1, 2, 3, 4]);
    assert_eq!(cd.pendants, vec![vec![], vec![5, 6], vec![7], vec![]]);
    let rebuilt = caterpillar_to_diagram(&cd).intersection_graph();
    assert_eq!(rebuilt, g);
    assert_eq!(is_caterpillar(&rebuilt).unwrap(), cd);
}

#[test]
fn random_caterpillars_round_trip() {
    for seed in 0..300u64 {
        let n = 1 + (seed as usize * 37) % 200;
        let g = random_caterpillar(n, seed);
        let cd = is_caterpillar(&g).unwrap();
        let dg = caterpillar_to_diagram(&cd);
        assert!(TrapezoidDiagram::validate(&dg.rows()).is_ok());
        let h = dg.intersection_graph();
        assert_eq!(h, g, "seed = {seed}");
        let again = is_caterpillar(&h).unwrap();
        assert!(again == cd || again == cd.reversed());
    }
}
