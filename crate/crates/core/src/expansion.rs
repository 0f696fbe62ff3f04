//! Characteristic polynomial coefficients by enumerating elementary subgraphs.
//!
//! An elementary subgraph is a vertex-disjoint packing of single edges and
//! simple cycles. With rank `r` (vertices minus components) and co-rank `s`
//! (number of cycles), every packing on `k` vertices contributes
//! `(-1)^r 2^s Re(∏_C h_α(C))` to `(-1)^k c_k`. The module is exponential by
//! construction and serves as an independent oracle for the numeric path in
//! [`crate::spectra`].

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Cycle, MixedGraph};
use crate::phase::{walk_value_h, Phase, Turn, UnitPhase};
use crate::spectra::CharPoly;

/// Largest graph the enumeration accepts.
pub const MAX_ORACLE_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("graph has {0} vertices; the expansion oracle is limited to {MAX_ORACLE_VERTICES}")]
    TooLarge(usize),
}

/// A vertex-disjoint packing of single edges and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub p2_edges: Vec<(usize, usize)>,
    pub cycles: Vec<Cycle>,
    vertex_mask: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankData {
    pub rank: usize,
    pub corank: usize,
}

impl ElementarySubgraph {
    pub fn vertex_set(&self) -> Vec<usize> {
        (0..64).filter(|v| self.vertex_mask & (1 << v) != 0).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_mask.count_ones() as usize
    }

    pub fn component_count(&self) -> usize {
        self.p2_edges.len() + self.cycles.len()
    }

    pub fn rank_data(&self) -> RankData {
        RankData {
            rank: self.vertex_count() - self.component_count(),
            corank: self.cycles.len(),
        }
    }

    /// `(-1)^rank`.
    fn sign(&self) -> i64 {
        if self.rank_data().rank.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone)]
enum Component {
    Edge(usize, usize),
    Cycle(Cycle),
}

struct Menu {
    components: Vec<(Component, u64)>,
}

impl Menu {
    fn new(graph: &MixedGraph) -> Self {
        let underlying = graph.underlying();
        let mut components: Vec<(Component, u64)> = underlying
            .edges()
            .iter()
            .map(|&(a, b)| (Component::Edge(a, b), (1 << a) | (1 << b)))
            .collect();
        components.extend(
            underlying
                .simple_cycles(graph.n())
                .into_iter()
                .map(|c| {
                    let mask = c.vertex_mask();
                    (Component::Cycle(c), mask)
                }),
        );
        components.sort_by_key(|(c, mask)| {
            let kind = matches!(c, Component::Cycle(_));
            (mask.trailing_zeros(), kind, *mask)
        });
        Menu { components }
    }

    /// Visits every packing (including the empty one) exactly once.
    fn for_each_packing(&self, mut visit: impl FnMut(&[usize], u64)) {
        let mut chosen = Vec::new();
        self.extend(0, 0, &mut chosen, &mut visit);
    }

    fn extend(
        &self,
        start: usize,
        used: u64,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize], u64),
    ) {
        visit(chosen, used);
        for i in start..self.components.len() {
            let mask = self.components[i].1;
            if used & mask == 0 {
                chosen.push(i);
                self.extend(i + 1, used | mask, chosen, visit);
                chosen.pop();
            }
        }
    }

    fn subgraph(&self, chosen: &[usize], mask: u64) -> ElementarySubgraph {
        let mut p2_edges = Vec::new();
        let mut cycles = Vec::new();
        for &i in chosen {
            match &self.components[i].0 {
                Component::Edge(a, b) => p2_edges.push((*a, *b)),
                Component::Cycle(c) => cycles.push(c.clone()),
            }
        }
        ElementarySubgraph {
            p2_edges,
            cycles,
            vertex_mask: mask,
        }
    }
}

fn guard(graph: &MixedGraph) -> Result<(), ExpansionError> {
    if graph.n() > MAX_ORACLE_VERTICES {
        return Err(ExpansionError::TooLarge(graph.n()));
    }
    Ok(())
}

/// All elementary subgraphs covering exactly `k` vertices.
pub fn enumerate_elementary(
    graph: &MixedGraph,
    k: usize,
) -> Result<Vec<ElementarySubgraph>, ExpansionError> {
    guard(graph)?;
    let menu = Menu::new(graph);
    let mut out = Vec::new();
    menu.for_each_packing(|chosen, mask| {
        if mask.count_ones() as usize == k {
            out.push(menu.subgraph(chosen, mask));
        }
    });
    Ok(out)
}

/// `h_α` of one traversal of a cycle.
fn cycle_value(graph: &MixedGraph, alpha: UnitPhase, cycle: &Cycle) -> Phase {
    walk_value_h(graph, alpha, &cycle.to_walk()).expect("cycles come from the graph")
}

/// The contribution `(-1)^r 2^s ∏_C Re(h_α(C))` of one elementary subgraph.
///
/// Each cycle can be traversed either way, so the cycle factors are
/// `h + h̄ = 2 Re(h)` separately; with two or more cycles this differs from
/// `2^s Re(∏_C h_α(C))`.
pub fn subgraph_term(graph: &MixedGraph, alpha: UnitPhase, sub: &ElementarySubgraph) -> f64 {
    let values: Vec<Phase> = sub
        .cycles
        .iter()
        .map(|c| cycle_value(graph, alpha, c))
        .collect();
    let mut acc = Accumulator::default();
    add_orientations(&mut acc, sub.sign(), &values);
    acc.total()
}

/// Adds `sign · ∏_j (h_j + h̄_j)` as `2^s` signed phases, one per choice of
/// traversal for every cycle.
fn add_orientations(acc: &mut Accumulator, sign: i64, values: &[Phase]) {
    for choice in 0u32..(1 << values.len()) {
        let product = values.iter().enumerate().fold(Phase::one(), |p, (j, &h)| {
            p * if choice >> j & 1 == 0 { h } else { h.conj() }
        });
        acc.add(sign, product);
    }
}

/// Sums terms grouped by rotation so that exact phases only meet floating
/// point in the final cosines.
#[derive(Default)]
struct Accumulator {
    exact: BTreeMap<Turn, i64>,
    approx: f64,
}

impl Accumulator {
    fn add(&mut self, weight: i64, phase: Phase) {
        match phase {
            Phase::Exact(turn) => *self.exact.entry(turn).or_insert(0) += weight,
            Phase::Approx(_) => self.approx += weight as f64 * phase.re(),
        }
    }

    fn total(&self) -> f64 {
        self.exact
            .iter()
            .filter(|(_, &w)| w != 0)
            .map(|(turn, &w)| w as f64 * turn.cos())
            .sum::<f64>()
            + self.approx
    }
}

/// Every coefficient of `χ_α(D, λ)` from the elementary-subgraph expansion.
pub fn char_poly_expansion(graph: &MixedGraph, alpha: UnitPhase) -> Result<CharPoly, ExpansionError> {
    guard(graph)?;
    let n = graph.n();
    let menu = Menu::new(graph);
    let cycle_values: Vec<Option<Phase>> = menu
        .components
        .iter()
        .map(|(c, _)| match c {
            Component::Cycle(cycle) => Some(cycle_value(graph, alpha, cycle)),
            Component::Edge(..) => None,
        })
        .collect();

    let mut sums: Vec<Accumulator> = (0..=n).map(|_| Accumulator::default()).collect();
    menu.for_each_packing(|chosen, mask| {
        let k = mask.count_ones() as usize;
        if k == 0 {
            return;
        }
        let rank = k - chosen.len();
        let sign = if rank.is_multiple_of(2) { 1 } else { -1 };
        let values: Vec<Phase> = chosen.iter().filter_map(|&i| cycle_values[i]).collect();
        add_orientations(&mut sums[k], sign, &values);
    });

    let coeffs = (1..=n)
        .map(|k| {
            let signed = sums[k].total();
            let c = if k % 2 == 0 { signed } else { -signed };
            if c == 0.0 {
                0.0
            } else {
                c
            }
        })
        .collect();
    Ok(CharPoly::new(coeffs))
}

/// `det H^α` as the sum over spanning elementary subgraphs.
pub fn determinant_expansion(graph: &MixedGraph, alpha: UnitPhase) -> Result<f64, ExpansionError> {
    guard(graph)?;
    let mut acc = Accumulator::default();
    for sub in enumerate_elementary(graph, graph.n())? {
        let values: Vec<Phase> = sub
            .cycles
            .iter()
            .map(|c| cycle_value(graph, alpha, c))
            .collect();
        add_orientations(&mut acc, sub.sign(), &values);
    }
    Ok(acc.total())
}
