//! Independent oracles and sweep helpers shared by the integration tests.
//!
//! Nothing here calls the library's spectral, cycle or monograph routines;
//! only the graph data (vertex count and edge list) is read.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hermix::{EdgeKind, MixedGraph, UnitPhase};
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn named_alphas() -> [UnitPhase; 3] {
    [UnitPhase::i(), UnitPhase::gamma(), UnitPhase::omega()]
}

pub fn five_alphas() -> [UnitPhase; 5] {
    [
        UnitPhase::i(),
        UnitPhase::gamma(),
        UnitPhase::omega(),
        UnitPhase::root(1, 5).unwrap(),
        UnitPhase::Angle(1.0),
    ]
}

/// Every mixed graph on `n` vertices, in assignment order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = MixedGraph> {
    let total = MixedGraph::assignment_count(n).unwrap();
    (0..total).map(move |i| MixedGraph::from_assignment(n, i))
}

/// `+1` for `u -> v`, `-1` for `v -> u`, `0` for a digon, `None` if not adjacent.
pub fn arc_sign(graph: &MixedGraph, u: usize, v: usize) -> Option<i64> {
    graph.edges().iter().find_map(|e| match e.kind {
        EdgeKind::Digon if (e.u, e.v) == (u, v) || (e.u, e.v) == (v, u) => Some(0),
        EdgeKind::Arc if (e.u, e.v) == (u, v) => Some(1),
        EdgeKind::Arc if (e.u, e.v) == (v, u) => Some(-1),
        _ => None,
    })
}

pub fn alpha_complex(alpha: UnitPhase) -> Complex64 {
    match alpha {
        UnitPhase::Rational(t) => {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t.numer() as f64 / t.denom() as f64)
        }
        UnitPhase::Angle(theta) => Complex64::from_polar(1.0, theta),
    }
}

/// Dense `H^α` built straight from the edge list.
pub fn dense(graph: &MixedGraph, alpha: UnitPhase) -> Vec<Vec<Complex64>> {
    let a = alpha_complex(alpha);
    let n = graph.n();
    let mut m = vec![vec![Complex64::zero(); n]; n];
    for e in graph.edges() {
        match e.kind {
            EdgeKind::Digon => {
                m[e.u][e.v] = Complex64::one();
                m[e.v][e.u] = Complex64::one();
            }
            EdgeKind::Arc => {
                m[e.u][e.v] = a;
                m[e.v][e.u] = a.conj();
            }
        }
    }
    m
}

/// Determinant by the permutation sum, permutations generated by Heap's algorithm.
pub fn leibniz_det(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    if n == 0 {
        return Complex64::one();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1.0;
    let term = |p: &[usize], s: f64| -> Complex64 {
        p.iter().enumerate().fold(Complex64::new(s, 0.0), |acc, (r, &col)| acc * m[r][col])
    };
    let mut total = term(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            total += term(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

/// `c_k = (-1)^k` times the sum of all `k x k` principal minors.
pub fn minor_char_poly(m: &[Vec<Complex64>]) -> Vec<Complex64> {
    let n = m.len();
    let mut coeffs = vec![Complex64::zero(); n];
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<Complex64>> = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| m[r][c]).collect())
            .collect();
        let k = idx.len();
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        coeffs[k - 1] += leibniz_det(&sub) * sign;
    }
    coeffs
}

pub fn oracle_char_poly(graph: &MixedGraph, alpha: UnitPhase) -> Vec<f64> {
    minor_char_poly(&dense(graph, alpha))
        .into_iter()
        .map(|c| {
            assert!(c.im.abs() < 1e-9, "Hermitian minors are real");
            c.re
        })
        .collect()
}

pub fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Every simple cycle of length at least 3, each once, as a vertex
/// sequence starting at its smallest vertex. Built from vertex subsets
/// and their orderings.
pub fn brute_cycles(graph: &MixedGraph) -> Vec<Vec<usize>> {
    let n = graph.n();
    let adj = |u: usize, v: usize| arc_sign(graph, u, v).is_some();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let first = vs[0];
        let mut rest = vs[1..].to_vec();
        for_each_permutation(&mut rest, 0, &mut |order| {
            if order[0] > order[order.len() - 1] {
                return;
            }
            let mut seq = vec![first];
            seq.extend_from_slice(order);
            let closed = (0..seq.len()).all(|i| adj(seq[i], seq[(i + 1) % seq.len()]));
            if closed {
                out.push(seq);
            }
        });
    }
    out
}

fn for_each_permutation(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Forward-minus-backward arcs and edge count along a closed vertex sequence.
pub fn cycle_data(graph: &MixedGraph, cycle: &[usize]) -> (i64, usize) {
    let len = cycle.len();
    let balance = (0..len)
        .map(|i| arc_sign(graph, cycle[i], cycle[(i + 1) % len]).expect("consecutive vertices adjacent"))
        .sum();
    (balance, len)
}

fn frac(r: Rational64) -> Rational64 {
    r - r.floor()
}

/// `α^balance (-1)^sign_edges == 1`, decided exactly for rational phases.
pub fn value_is_one(alpha: UnitPhase, balance: i64, sign_edges: usize) -> bool {
    match alpha {
        UnitPhase::Rational(t) => {
            let turn = Rational64::new(t.numer(), t.denom());
            let half = Rational64::new((sign_edges % 2) as i64, 2);
            frac(turn * balance + half).is_zero()
        }
        UnitPhase::Angle(theta) => {
            let z = Complex64::from_polar(1.0, theta * balance as f64)
                * if sign_edges.is_multiple_of(2) { 1.0 } else { -1.0 };
            (z - 1.0).norm() < 1e-9
        }
    }
}

/// Monograph test over all simple cycles. `second` switches to `g`-values.
pub fn brute_monograph(graph: &MixedGraph, alpha: UnitPhase, second: bool) -> bool {
    brute_cycles(graph).iter().all(|c| {
        let (b, len) = cycle_data(graph, c);
        value_is_one(alpha, b, if second { len } else { 0 })
    })
}

/// Values of all closed walks at `root`, as reduced turns, found by a
/// search over (vertex, accumulated turn) states. Rational phases only.
pub fn brute_store(graph: &MixedGraph, alpha: UnitPhase, second: bool, root: usize) -> BTreeSet<Rational64> {
    let UnitPhase::Rational(t) = alpha else {
        panic!("finite search needs a rational phase");
    };
    let turn = Rational64::new(t.numer(), t.denom());
    let step_sign = if second { Rational64::new(1, 2) } else { Rational64::zero() };
    let mut seen: BTreeSet<(usize, Rational64)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert((root, Rational64::zero()));
    queue.push_back((root, Rational64::zero()));
    while let Some((u, value)) = queue.pop_front() {
        for v in 0..graph.n() {
            if let Some(s) = arc_sign(graph, u, v) {
                let next = (v, frac(value + turn * s + step_sign));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter()
        .filter(|&(v, _)| v == root)
        .map(|(_, r)| r)
        .collect()
}

/// Connected by plain search over the edge list.
pub fn connected(graph: &MixedGraph) -> bool {
    let n = graph.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (v, s) in seen.iter_mut().enumerate() {
            if !*s && arc_sign(graph, u, v).is_some() {
                *s = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Max residual of `H y = λ y` using the dense oracle matrix.
pub fn dense_residual(graph: &MixedGraph, alpha: UnitPhase, lambda: f64, y: &[Complex64]) -> f64 {
    let m = dense(graph, alpha);
    (0..graph.n())
        .map(|r| {
            let hy: Complex64 = (0..graph.n()).map(|c| m[r][c] * y[c]).sum();
            (hy - y[r] * lambda).norm()
        })
        .fold(0.0, f64::max)
}

/// Coefficients `c1..cn` of `∏ (λ - r)`.
pub fn expand_roots(roots: &[f64]) -> Vec<f64> {
    let mut poly = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= r * c;
        }
        poly = next;
    }
    poly[1..].to_vec()
}

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.mg"))
}

pub fn fixture(name: &str) -> MixedGraph {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    hermix::parse_graph(&text).expect("fixture parses")
}

/// All 3^6 edge-kind assignments on the complete graph K4.
pub fn k4_orientations() -> Vec<MixedGraph> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    (0..729u32)
        .map(|idx| {
            let mut k = idx;
            let edges: Vec<hermix::Edge> = pairs
                .iter()
                .map(|&(u, v)| {
                    let e = match k % 3 {
                        0 => hermix::Edge::digon(u, v),
                        1 => hermix::Edge::arc(u, v),
                        _ => hermix::Edge::arc(v, u),
                    };
                    k /= 3;
                    e
                })
                .collect();
            MixedGraph::new(4, edges).unwrap()
        })
        .collect()
}

/// Adjacency spectrum of the cycle `C_n`, `2 cos(2πk/n)`, descending.
pub fn sigma_of_cycle(n: usize) -> Vec<f64> {
    let mut s: Vec<f64> = (0..n)
        .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
        .collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Graph from one base-4 digit per pair, in the assignment order.
pub fn graph_from_digits(n: usize, digits: &[u8]) -> MixedGraph {
    let mut edges = Vec::new();
    let mut it = digits.iter();
    for u in 0..n {
        for v in u + 1..n {
            match it.next().copied().unwrap_or(0) {
                1 => edges.push(hermix::Edge::digon(u, v)),
                2 => edges.push(hermix::Edge::arc(u, v)),
                3 => edges.push(hermix::Edge::arc(v, u)),
                _ => {}
            }
        }
    }
    MixedGraph::new(n, edges).unwrap()
}

/// Mixed graphs on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = MixedGraph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..4, n * (n - 1) / 2)
            .prop_map(move |d| graph_from_digits(n, &d))
    })
}

pub fn arb_alpha() -> impl proptest::strategy::Strategy<Value = UnitPhase> {
    use proptest::prelude::*;
    prop_oneof![
        Just(UnitPhase::i()),
        Just(UnitPhase::gamma()),
        Just(UnitPhase::omega()),
        (1i64..12, 2i64..13).prop_map(|(k, n)| UnitPhase::root(k, n).unwrap()),
        (-3.0f64..3.0).prop_map(UnitPhase::Angle),
    ]
}
