//! Seeded random graph families for sweeps and tests.
//!
//! Every generator takes the RNG explicitly; callers seed a
//! [`rand_chacha::ChaCha8Rng`] so that runs are reproducible.

use rand::Rng;

use crate::graph::{Edge, MixedGraph};

/// A uniformly random edge kind on the pair `{u, v}`.
pub fn random_edge<R: Rng + ?Sized>(rng: &mut R, u: usize, v: usize) -> Edge {
    match rng.random_range(0..3) {
        0 => Edge::digon(u, v),
        1 => Edge::arc(u, v),
        _ => Edge::arc(v, u),
    }
}

/// Each pair independently none, digon, arc or reversed arc.
pub fn random_mixed_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MixedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..4) != 0 {
                edges.push(random_edge(rng, u, v));
            }
        }
    }
    MixedGraph::new(n, edges).expect("pairs are distinct")
}

fn random_tree_pairs<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    // Random recursive tree on a shuffled labelling.
    let mut labels: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        labels.swap(i, rng.random_range(0..=i));
    }
    (1..n)
        .map(|i| {
            let j = rng.random_range(0..i);
            (labels[j], labels[i])
        })
        .collect()
}

/// A random spanning tree with random edge kinds.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MixedGraph {
    let edges: Vec<Edge> = random_tree_pairs(rng, n)
        .into_iter()
        .map(|(u, v)| random_edge(rng, u, v))
        .collect();
    MixedGraph::new(n, edges).expect("tree pairs are distinct")
}

/// A random tree plus each remaining pair with probability `extra`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: f64) -> MixedGraph {
    let mut graph = random_tree(rng, n);
    for u in 0..n {
        for v in u + 1..n {
            if !graph.adjacent(u, v) && rng.random_bool(extra) {
                let edge = random_edge(rng, u, v);
                graph = graph.with_edge(edge).expect("pair is free");
            }
        }
    }
    graph
}

/// A connected graph made only of digons.
pub fn random_undirected_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: f64) -> MixedGraph {
    let mut pairs = random_tree_pairs(rng, n);
    for u in 0..n {
        for v in u + 1..n {
            if !pairs.contains(&(u, v)) && !pairs.contains(&(v, u)) && rng.random_bool(extra) {
                pairs.push((u, v));
            }
        }
    }
    MixedGraph::new(n, pairs.into_iter().map(|(u, v)| Edge::digon(u, v))).expect("pairs are distinct")
}

/// Arcs only, between the two sides of a random bipartition.
pub fn random_oriented_bipartite<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> MixedGraph {
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.random_bool(density) {
                edges.push(if rng.random_bool(0.5) {
                    Edge::arc(u, v)
                } else {
                    Edge::arc(v, u)
                });
            }
        }
    }
    MixedGraph::new(n, edges).expect("pairs are distinct")
}
