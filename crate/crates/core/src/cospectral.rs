//! Cospectrality of one graph under two phases.
//!
//! Decisions are made on characteristic-polynomial coefficients. Each report
//! also carries the structural conditions known to force cospectrality, and
//! a true condition with a negative numeric verdict is reported as an error
//! rather than silently returned.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::generate::random_mixed_graph;
use crate::graph::MixedGraph;
use crate::monograph::{is_monograph, Kind};
use crate::phase::{arc_balance, Turn, UnitPhase};
use crate::spectra::{alpha_spectrum, build_hermitian, char_poly, SpectraError};

/// Largest `n` for exhaustive search (`4^10` graphs).
pub const MAX_EXHAUSTIVE_VERTICES: usize = 5;
/// Largest `n` for sampled search.
pub const MAX_SAMPLED_VERTICES: usize = 64;
const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CospectralError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("structural condition `{flag}` holds but the spectra differ by {gap:e}")]
    Unsound { flag: &'static str, gap: f64 },
    #[error("search over {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StructuralFlags {
    /// Every cycle has an even number of arcs.
    pub even_arc_condition: bool,
    /// No digons and a bipartite underlying graph.
    pub oriented_bipartite: bool,
    /// The underlying graph is acyclic.
    pub tree: bool,
    /// Both phases make the graph a monograph of the same kind.
    pub monograph_both: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CospectralReport {
    pub alpha1: UnitPhase,
    pub alpha2: UnitPhase,
    pub cospectral: bool,
    /// Largest characteristic-polynomial coefficient gap.
    pub max_gap: f64,
    /// Largest gap between the sorted spectra.
    pub spectral_gap: f64,
    pub structural_flags: StructuralFlags,
}

/// Every fundamental cycle has an even number of arcs. Arc count and
/// arc balance agree mod 2, and both are linear on the cycle space.
pub fn even_arc_condition(graph: &MixedGraph) -> bool {
    graph
        .fundamental_cycles()
        .cycles
        .iter()
        .all(|c| arc_balance(graph, c).expect("cycles come from the graph").0 % 2 == 0)
}

pub fn oriented_bipartite(graph: &MixedGraph) -> bool {
    graph.digon_count() == 0 && graph.underlying().is_bipartite()
}

fn is_turn(alpha: UnitPhase, candidates: [(i64, i64); 2]) -> bool {
    match alpha {
        UnitPhase::Rational(t) => candidates
            .iter()
            .any(|&(k, n)| Turn::new(k, n) == Some(t)),
        UnitPhase::Angle(_) => false,
    }
}

/// The unordered pair is `{γ, ω}` up to conjugating either entry.
pub fn is_gamma_omega_pair(alpha1: UnitPhase, alpha2: UnitPhase) -> bool {
    let gamma = [(1, 3), (2, 3)];
    let omega = [(1, 6), (5, 6)];
    (is_turn(alpha1, gamma) && is_turn(alpha2, omega))
        || (is_turn(alpha1, omega) && is_turn(alpha2, gamma))
}

pub fn structural_flags(graph: &MixedGraph, alpha1: UnitPhase, alpha2: UnitPhase) -> StructuralFlags {
    let both = |kind| {
        is_monograph(graph, alpha1, kind).verdict && is_monograph(graph, alpha2, kind).verdict
    };
    StructuralFlags {
        even_arc_condition: even_arc_condition(graph),
        oriented_bipartite: oriented_bipartite(graph),
        tree: graph.is_forest(),
        monograph_both: both(Kind::First) || both(Kind::Second),
    }
}

/// Compares `σ_{α1}` and `σ_{α2}` of one graph.
pub fn numeric_cospectral(
    graph: &MixedGraph,
    alpha1: UnitPhase,
    alpha2: UnitPhase,
    tol: f64,
) -> Result<CospectralReport, CospectralError> {
    let p1 = char_poly(&build_hermitian(graph, alpha1))?;
    let p2 = char_poly(&build_hermitian(graph, alpha2))?;
    let max_gap = p1.max_gap(&p2);
    let spectral_gap = alpha_spectrum(graph, alpha1)?.max_gap(&alpha_spectrum(graph, alpha2)?)?;
    let flags = structural_flags(graph, alpha1, alpha2);
    let cospectral = max_gap <= tol;

    if !cospectral {
        let gamma_omega = is_gamma_omega_pair(alpha1, alpha2);
        let governing = [
            ("even_arc_condition", flags.even_arc_condition && gamma_omega),
            ("oriented_bipartite", flags.oriented_bipartite && gamma_omega),
            ("tree", flags.tree),
            ("monograph_both", flags.monograph_both),
        ];
        if let Some((flag, _)) = governing.iter().find(|(_, on)| *on) {
            return Err(CospectralError::Unsound { flag, gap: max_gap });
        }
    }
    Ok(CospectralReport {
        alpha1,
        alpha2,
        cospectral,
        max_gap,
        spectral_gap,
        structural_flags: flags,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every assignment on `n` vertices, in index order.
    Exhaustive,
    /// `count` graphs drawn from a seeded generator.
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchHit {
    /// Assignment index (exhaustive) or sample number (random).
    pub index: u64,
    pub graph: MixedGraph,
    pub report: CospectralReport,
}

/// Runs [`search_cospectral_with`] and collects the hits.
pub fn search_cospectral(
    n: usize,
    alpha1: UnitPhase,
    alpha2: UnitPhase,
    mode: SearchMode,
    tol: f64,
) -> Result<Vec<SearchHit>, CospectralError> {
    let mut hits = Vec::new();
    search_cospectral_with(n, alpha1, alpha2, mode, tol, |hit| hits.push(hit))?;
    Ok(hits)
}

/// Evaluates graphs in parallel chunks and hands cospectral hits to
/// `on_hit` in index order.
pub fn search_cospectral_with(
    n: usize,
    alpha1: UnitPhase,
    alpha2: UnitPhase,
    mode: SearchMode,
    tol: f64,
    mut on_hit: impl FnMut(SearchHit),
) -> Result<(), CospectralError> {
    let mut evaluate = |batch: Vec<(u64, MixedGraph)>| -> Result<(), CospectralError> {
        let reports: Vec<Result<Option<SearchHit>, CospectralError>> = batch
            .into_par_iter()
            .map(|(index, graph)| {
                let report = numeric_cospectral(&graph, alpha1, alpha2, tol)?;
                Ok(report.cospectral.then_some(SearchHit { index, graph, report }))
            })
            .collect();
        for r in reports {
            if let Some(hit) = r? {
                on_hit(hit);
            }
        }
        Ok(())
    };

    match mode {
        SearchMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_VERTICES {
                return Err(CospectralError::TooLarge {
                    n,
                    limit: MAX_EXHAUSTIVE_VERTICES,
                });
            }
            let total = MixedGraph::assignment_count(n).expect("small n");
            let mut start = 0;
            while start < total {
                let end = (start + CHUNK as u64).min(total);
                evaluate((start..end).map(|i| (i, MixedGraph::from_assignment(n, i))).collect())?;
                start = end;
            }
        }
        SearchMode::Random { count, seed } => {
            if n > MAX_SAMPLED_VERTICES {
                return Err(CospectralError::TooLarge {
                    n,
                    limit: MAX_SAMPLED_VERTICES,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut done = 0;
            while done < count {
                let take = CHUNK.min(count - done);
                let batch = (done..done + take)
                    .map(|i| (i as u64, random_mixed_graph(&mut rng, n)))
                    .collect();
                evaluate(batch)?;
                done += take;
            }
        }
    }
    Ok(())
}
