//! Deterministic test corpora: small connected graphs, random orientations
//! and random legal click sequences.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::orientation::{ClickSequence, Orientation};

/// Seeded generator used by every sampling routine here.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Every connected simple graph on exactly the labels `1..=n`
/// (1, 1, 4, 38, 728 for n = 1..5). Ordered by edge mask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    assert!(pairs.len() < 32, "exhaustive corpus is limited to n <= 7");
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let chosen = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            let g = Graph::new(n, chosen).expect("pairs are valid");
            g.is_connected().then_some(g)
        })
        .collect()
}

/// All connected graphs for n in `1..=max_n`.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// `count` distinct connected simple graphs on `n` vertices with at most
/// `max_edges` edges, sampled uniformly by edge count then edge set.
pub fn random_connected_graphs(n: usize, max_edges: usize, count: usize, rng: &mut impl Rng) -> Vec<Graph> {
    let pairs = all_pairs(n);
    let lo = n.saturating_sub(1);
    let hi = max_edges.min(pairs.len());
    assert!(lo <= hi, "no connected graph fits");
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = rng.gen_range(lo..=hi);
        let chosen: Vec<_> = pairs.choose_multiple(rng, m).copied().collect();
        let g = Graph::new(n, chosen).expect("pairs are valid");
        if g.is_connected() && seen.insert(g.to_string()) {
            out.push(g);
        }
    }
    out
}

/// The corpus used for cross-validation: every connected graph up to
/// `exhaustive_n`, then `extra` random connected graphs on
/// `exhaustive_n + 1` vertices with at most `max_edges` edges.
pub fn standard_corpus(exhaustive_n: usize, extra: usize, max_edges: usize, seed: u64) -> Vec<Graph> {
    let mut out = connected_graphs_up_to(exhaustive_n);
    out.extend(random_connected_graphs(
        exhaustive_n + 1,
        max_edges,
        extra,
        &mut rng(seed),
    ));
    out
}

/// An acyclic orientation induced by a uniformly random vertex order.
pub fn random_acyclic(graph: &Arc<Graph>, rng: &mut impl Rng) -> Orientation {
    let mut pi: Vec<usize> = (1..=graph.n()).collect();
    pi.shuffle(rng);
    Orientation::from_permutation(graph.clone(), &pi).expect("graph must be simple")
}

/// A legal click sequence of length `len` from `o`, each click a uniformly
/// chosen current source.
pub fn random_clicks(o: &Orientation, len: usize, rng: &mut impl Rng) -> ClickSequence {
    let mut cur = o.clone();
    let mut clicks = Vec::with_capacity(len);
    for _ in 0..len {
        let sources = cur.sources();
        let Some(&x) = sources.choose(rng) else { break };
        cur = cur.click(x).expect("chosen vertex is a source");
        clicks.push(x);
    }
    ClickSequence(clicks)
}
