mod common;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use proptest::prelude::*;

use kappa_core::corpus::{self, connected_graphs, random_acyclic, random_clicks};
use kappa_core::kappa::{contract_interval, interval, interval_of_class};
use kappa_core::{
    count_acyclic, enumerate_acyclic, kappa_classes_bfs, kappa_count, nu_signature, tutte, EdgeKind, EdgeRef, Graph,
    Orientation, DEFAULT_EDGE_CAP,
};

fn class_ids(g: &Arc<Graph>) -> HashMap<String, usize> {
    kappa_classes_bfs(g, DEFAULT_EDGE_CAP)
        .unwrap()
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.members.iter().map(move |o| (o.to_string(), i)))
        .collect()
}

#[test]
fn frozen_oracle_totals() {
    // (n, sum of alpha, sum of kappa, sum of spanning trees) over all
    // connected labeled graphs on n vertices.
    let frozen = [
        (1, 1, 1, 1),
        (2, 2, 1, 1),
        (3, 18, 5, 6),
        (4, 446, 79, 128),
        (5, 26430, 3377, 8000),
    ];
    for (n, alpha, kappa, trees) in frozen {
        let graphs = connected_graphs(n);
        let a: u64 = graphs.iter().map(|g| count_acyclic(g).unwrap()).sum();
        let k: u64 = graphs.iter().map(|g| kappa_count(g).unwrap()).sum();
        let t: u64 = graphs
            .iter()
            .map(|g| tutte(g).unwrap().evaluate(&1u64, &1).unwrap())
            .sum();
        assert_eq!((a, k, t), (alpha, kappa, trees), "n = {}", n);
        let oracle_a: u64 = graphs.iter().map(common::oracle_alpha).sum();
        let oracle_k: u64 = graphs.iter().map(common::oracle_kappa).sum();
        assert_eq!((oracle_a, oracle_k), (alpha, kappa));
    }
}

#[test]
fn complete_graphs_have_factorial_classes() {
    for (n, alpha, kappa) in [(5, 120, 24), (6, 720, 120)] {
        let g = Graph::complete(n);
        assert_eq!(common::oracle_alpha(&g), alpha);
        assert_eq!(common::oracle_kappa(&g), kappa);
        assert_eq!(kappa_count(&g).unwrap(), kappa);
        assert_eq!(tutte(&g).unwrap().evaluate(&1u64, &0).unwrap(), kappa);
    }
}

#[test]
fn tutte_matches_subset_expansion_on_multigraphs() {
    let graphs = [
        Graph::new(3, [(1, 2), (1, 2), (2, 3), (1, 3)]).unwrap(),
        Graph::new(4, [(1, 2), (1, 2), (1, 2), (3, 4), (2, 3), (2, 4)]).unwrap(),
        Graph::complete(4),
    ];
    for g in graphs {
        let t = tutte(&g).unwrap();
        for (x, y) in [(0, 0), (1, 0), (2, 0), (1, 1), (2, 3), (-1, 2)] {
            let got = t.evaluate(&(x as i128), &(y as i128)).unwrap();
            assert_eq!(
                got,
                common::oracle_tutte_eval(&g, x, y) as i128,
                "{:?} at ({}, {})",
                g,
                x,
                y
            );
        }
    }
}

/// Any two members of a class with `v -> w` have the same interval.
#[test]
fn class_interval_is_well_defined() {
    for n in 2..=5 {
        for g in connected_graphs(n) {
            let g = Arc::new(g);
            for class in kappa_classes_bfs(&g, DEFAULT_EDGE_CAP).unwrap() {
                for i in 0..g.edge_slots() {
                    let e = EdgeRef(i);
                    let expected = interval_of_class(&class.representative, e).unwrap();
                    for m in class.members.iter().filter(|m| !m.bits()[i]) {
                        assert_eq!(
                            interval(m, e).unwrap().vertices(),
                            expected.vertices(),
                            "{:?} edge {} member {}",
                            g,
                            i,
                            m
                        );
                    }
                }
            }
        }
    }
}

/// Inequivalent orientations sharing an interval (vertices and induced
/// relations) stay inequivalent after the interval is contracted.
#[test]
fn interval_contraction_separates_classes() {
    for n in 3..=5 {
        for g in connected_graphs(n) {
            let g = Arc::new(g);
            let ids = class_ids(&g);
            let all: Vec<Orientation> = enumerate_acyclic(&g, DEFAULT_EDGE_CAP).unwrap().collect();
            for i in 0..g.edge_slots() {
                let e = EdgeRef(i);
                let mut groups: BTreeMap<_, Vec<&Orientation>> = BTreeMap::new();
                for o in all.iter().filter(|o| !o.bits()[i]) {
                    let iv = interval(o, e).unwrap();
                    groups
                        .entry((iv.vertices().to_vec(), iv.relations().to_vec()))
                        .or_default()
                        .push(o);
                }
                for members in groups.values() {
                    let iv = interval(members[0], e).unwrap();
                    let contracted: Vec<Orientation> =
                        members.iter().map(|o| contract_interval(o, &iv).unwrap().0).collect();
                    let target = Arc::clone(contracted[0].graph());
                    assert!(contracted.iter().all(|c| c.is_acyclic()));
                    let target_ids = class_ids(&target);
                    for a in 0..members.len() {
                        for b in a + 1..members.len() {
                            if ids[&members[a].to_string()] != ids[&members[b].to_string()] {
                                assert_ne!(
                                    target_ids[&contracted[a].to_string()],
                                    target_ids[&contracted[b].to_string()],
                                    "{:?} edge {}: {} and {}",
                                    g,
                                    i,
                                    members[a],
                                    members[b]
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn bridges_never_change_kappa() {
    for g in connected_graphs(5) {
        for (i, kind) in g.classify_edges().into_iter().enumerate() {
            if kind == EdgeKind::Bridge {
                let (c, _) = g.contract_edge(EdgeRef(i), kappa_core::Contraction::Simplify).unwrap();
                assert_eq!(kappa_count(&g).unwrap(), kappa_count(&c).unwrap());
                assert_eq!(count_acyclic(&g).unwrap(), 2 * count_acyclic(&c).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clicks_preserve_signature_on_random_graphs(seed in any::<u64>(), len in 0usize..40) {
        let mut rng = corpus::rng(seed);
        let g = Arc::new(corpus::random_connected_graphs(6, 12, 1, &mut rng).remove(0));
        let o = random_acyclic(&g, &mut rng);
        let c = random_clicks(&o, len, &mut rng);
        let end = o.apply_clicks(&c).unwrap();
        prop_assert_eq!(nu_signature(&o).unwrap(), nu_signature(&end).unwrap());
    }

    #[test]
    fn deletion_contraction_counts(seed in any::<u64>()) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_connected_graphs(6, 12, 1, &mut rng).remove(0);
        let e = g.first_cycle_edge();
        prop_assume!(e.is_some());
        let e = e.unwrap();
        let del = g.delete_edge(e).unwrap();
        let (con, _) = g.contract_edge(e, kappa_core::Contraction::Simplify).unwrap();
        prop_assert_eq!(kappa_count(&g).unwrap(), kappa_count(&del).unwrap() + kappa_count(&con).unwrap());
        prop_assert_eq!(count_acyclic(&g).unwrap(), count_acyclic(&del).unwrap() + count_acyclic(&con).unwrap());
    }
}
