//! Hermitian adjacency matrices of mixed graphs.
//!
//! A mixed graph has digons (undirected edges) and arcs. For a unit complex
//! number `α` its Hermitian adjacency matrix has `1` on digons, `α` along
//! arcs and `ᾱ` against them. This crate builds those matrices, computes
//! spectra and characteristic polynomials (numerically and by an exact
//! combinatorial expansion), decides the monograph property of both kinds
//! through vertex gauges, and checks the cospectrality and spectral-radius
//! results that follow from it.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | graph model, parser, cycles and spanning trees |
//! | [`phase`] | exact and approximate unit phases, walk values |
//! | [`spectra`] | matrix construction, eigensolver, characteristic polynomial |
//! | [`expansion`] | elementary-subgraph expansion of the coefficients |
//! | [`monograph`] | stores, gauges, partitions, eigenvector transfer |
//! | [`cospectral`] | cospectrality reports and small-graph search |
//! | [`generate`] | seeded random graph families |
//! | [`cli`] | the `hermix` command line |

pub mod cli;
pub mod cospectral;
pub mod expansion;
pub mod generate;
pub mod graph;
pub mod monograph;
pub mod phase;
pub mod spectra;

pub use graph::{parse_graph, Cycle, Edge, EdgeKind, MixedGraph, UndirectedGraph, Walk};
pub use phase::{make_alpha, Phase, Turn, UnitPhase};
pub use spectra::{CharPoly, EigenPair, HermitianMatrix, Spectrum};

/// Rounds to 12 significant digits, mapping `-0.0` to `0.0`.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}
