//! Stores, gauges and monographs.
//!
//! A connected mixed graph is an α-monograph of the first kind when every
//! cycle traversal has walk value `h_α = 1`, and of the second kind when
//! every cycle traversal has `g_α = (-1)^{len} h_α = 1`. Both are decided
//! from a fundamental cycle basis: walk values are homomorphisms on the
//! cycle space, so the basis generates every closed-walk value.
//!
//! When the verdict is positive the graph carries a gauge (potential): each
//! vertex gets the walk value of any walk from its component root. The
//! convention follows the walk recursion literally, so traversing an arc
//! forwards multiplies the potential by `α` (by `-α` for the second kind,
//! where digons multiply by `-1`). Classes therefore run from `V_{α^j}` to
//! `V_{α^{j+1}}` along arcs; the opposite labelling `j ↦ -j` describes the
//! same partition.

use num_integer::Integer;
use thiserror::Error;

use crate::graph::{Edge, EdgeKind, GraphError, MixedGraph, Step, Walk};
use crate::phase::{arc_balance, walk_value_g, walk_value_h, Phase, Turn, UnitPhase};
use crate::spectra::{
    alpha_spectrum, spectra_equal, spectral_radius, underlying_spectrum, verify_eigenpair,
    EigenPair, SpectraError,
};

/// Residual bound for transferred eigenpairs and for the input basis.
pub const TRANSFER_TOL: f64 = 1e-8;
/// Slack on the `ρ ≤ Δ` bound.
pub const RADIUS_BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Cycles have `h_α = 1`.
    First,
    /// Cycles have `g_α = 1`.
    Second,
}

impl Kind {
    fn sign_exponent(self, edges: usize) -> usize {
        match self {
            Kind::First => 0,
            Kind::Second => edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MonographError {
    #[error("graph is disconnected; split it into components first")]
    Disconnected,
    #[error("not an α-monograph of the {kind:?} kind; cycle {:?} has a non-trivial value", violation.vertices)]
    NotMonograph { kind: Kind, violation: Walk },
    #[error("basis vector {index} is not an eigenvector of the underlying graph (residual {residual:e})")]
    BasisNotVerified { index: usize, residual: f64 },
    #[error("transferred eigenpair {index} has residual {residual:e}")]
    TransferResidual { index: usize, residual: f64 },
    #[error("vertex set is empty")]
    EmptySubgraph,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("edge {0} inside the chosen vertex set is an arc")]
    ArcInSubgraph(Edge),
    #[error("chosen vertex set does not induce a connected subgraph")]
    SubgraphDisconnected,
    #[error("attachment {0} has no targets")]
    EmptyAttachment(usize),
    #[error("attachment {index} targets vertex {vertex} outside the chosen vertex set")]
    AttachmentOutside { index: usize, vertex: usize },
    #[error("extended graph lost the monograph property")]
    ExtensionBroke,
    #[error("gauge classes violate the edge rule on {0:?}")]
    PartitionRule((usize, usize)),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

impl MonographError {
    /// True for failures of the numerics or of internal invariants rather
    /// than of the input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            MonographError::TransferResidual { .. }
                | MonographError::ExtensionBroke
                | MonographError::PartitionRule(_)
                | MonographError::Spectra(_)
        )
    }
}

/// The value of a walk relevant to `kind`.
fn kind_value(graph: &MixedGraph, alpha: UnitPhase, kind: Kind, walk: &Walk) -> Phase {
    match kind {
        Kind::First => walk_value_h(graph, alpha, walk),
        Kind::Second => walk_value_g(graph, alpha, walk),
    }
    .expect("walks come from the graph")
}

/// Multiplier applied to a potential when taking one step.
fn step_factor(alpha: UnitPhase, kind: Kind, step: Step) -> Phase {
    let h = alpha.step_phase(step);
    match kind {
        Kind::First => h,
        Kind::Second => -h,
    }
}

/// The subgroup of the circle generated by the closed-walk values.
#[derive(Debug, Clone, PartialEq)]
pub enum Subgroup {
    /// `{m · step mod 1}`; `step = 0` is the trivial group.
    Cyclic { step: Turn },
    /// Generators of a group of unknown (infinite) size.
    Generated(Vec<Phase>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct StoreDescriptor {
    pub kind: Kind,
    /// Value of each fundamental cycle.
    pub generator_phases: Vec<Phase>,
    pub subgroup: Subgroup,
    /// Store size when finite.
    pub size: Option<u64>,
}

impl StoreDescriptor {
    /// All store values, when the store is finite.
    pub fn elements(&self) -> Option<Vec<Phase>> {
        match (&self.subgroup, self.size) {
            (Subgroup::Cyclic { step }, Some(size)) => Some(
                (0..size as i64)
                    .map(|m| Phase::Exact(step.times(m)))
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.size == Some(1)
    }
}

/// Smallest rotation generating the same cyclic group as `turns`.
fn cyclic_step(turns: &[Turn]) -> (Turn, u64) {
    let lcm = turns.iter().fold(1i64, |l, t| l.lcm(&t.denom()));
    let g = turns
        .iter()
        .fold(lcm, |g, t| g.gcd(&(t.numer() * (lcm / t.denom()))));
    (Turn::new(g, lcm).expect("lcm is positive"), (lcm / g) as u64)
}

/// The α-store of a connected graph, from its fundamental cycles.
pub fn compute_store(
    graph: &MixedGraph,
    alpha: UnitPhase,
    kind: Kind,
) -> Result<StoreDescriptor, MonographError> {
    if !graph.is_connected() {
        return Err(MonographError::Disconnected);
    }
    let basis = graph.fundamental_cycles();
    let generator_phases: Vec<Phase> = basis
        .cycles
        .iter()
        .map(|c| kind_value(graph, alpha, kind, c))
        .collect();

    let exact: Option<Vec<Turn>> = generator_phases
        .iter()
        .map(|p| match p {
            Phase::Exact(t) => Some(*t),
            Phase::Approx(_) => None,
        })
        .collect();
    if let Some(turns) = exact {
        let (step, size) = cyclic_step(&turns);
        return Ok(StoreDescriptor {
            kind,
            generator_phases,
            subgroup: Subgroup::Cyclic { step },
            size: Some(size),
        });
    }

    // Angles have infinite order: only the integer data of each cycle matters.
    let mut any_balance = false;
    let mut any_odd = false;
    for cycle in &basis.cycles {
        let (balance, edges) = arc_balance(graph, cycle).expect("cycles come from the graph");
        any_balance |= balance != 0;
        any_odd |= kind.sign_exponent(edges) % 2 == 1;
    }
    let (subgroup, size) = if any_balance {
        (Subgroup::Generated(generator_phases.clone()), None)
    } else if any_odd {
        (Subgroup::Cyclic { step: Turn::half() }, Some(2))
    } else {
        (Subgroup::Cyclic { step: Turn::zero() }, Some(1))
    };
    Ok(StoreDescriptor {
        kind,
        generator_phases,
        subgroup,
        size,
    })
}

/// Outcome of a monograph test.
#[derive(Debug, Clone, PartialEq)]
pub struct MonographCertificate {
    pub kind: Kind,
    pub verdict: bool,
    /// The gauge; present exactly when the verdict is positive.
    pub potential: Option<Vec<Phase>>,
    /// A fundamental cycle with non-trivial value when the verdict is negative.
    pub violation: Option<Walk>,
}

/// Decides the monograph property of the given kind, component by component.
pub fn is_monograph(graph: &MixedGraph, alpha: UnitPhase, kind: Kind) -> MonographCertificate {
    let basis = graph.fundamental_cycles();
    let violation = basis.cycles.iter().find(|cycle| {
        let (balance, edges) = arc_balance(graph, cycle).expect("cycles come from the graph");
        !alpha.is_trivial_power(balance, kind.sign_exponent(edges))
    });
    if let Some(cycle) = violation {
        return MonographCertificate {
            kind,
            verdict: false,
            potential: None,
            violation: Some(cycle.clone()),
        };
    }

    let mut potential = vec![Phase::one(); graph.n()];
    for &v in &basis.order {
        if let Some(p) = basis.parent[v] {
            let step = graph.step(p, v).expect("tree edges are graph edges");
            potential[v] = potential[p] * step_factor(alpha, kind, step);
        }
    }
    MonographCertificate {
        kind,
        verdict: true,
        potential: Some(potential),
        violation: None,
    }
}

/// Vertices grouped by gauge value.
#[derive(Debug, Clone, PartialEq)]
pub struct MonographPartition {
    pub kind: Kind,
    /// Classes ordered by rotation, each with sorted vertices.
    pub classes: Vec<(Phase, Vec<usize>)>,
}

impl MonographPartition {
    fn class_of(&self, v: usize) -> Option<Phase> {
        self.classes
            .iter()
            .find(|(_, members)| members.contains(&v))
            .map(|(p, _)| *p)
    }

    /// The first edge whose endpoints break the class rule, if any.
    ///
    /// First kind: digons stay inside a class and an arc `u -> v` goes from
    /// class `p` to class `α p`. Second kind: digons join `p` and `-p`, and an
    /// arc `u -> v` goes from `p` to `-α p`.
    pub fn edge_rule_violation(&self, graph: &MixedGraph, alpha: UnitPhase) -> Option<(usize, usize)> {
        graph.edges().iter().find_map(|e| {
            let step = graph.step(e.u, e.v).expect("edge endpoints are adjacent");
            let (pu, pv) = (self.class_of(e.u)?, self.class_of(e.v)?);
            let expected = pu * step_factor(alpha, self.kind, step);
            (!pv.approx_eq(&expected)).then_some((e.u, e.v))
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.classes.iter().map(|(_, m)| m.len()).sum()
    }
}

pub fn monograph_partition(
    graph: &MixedGraph,
    alpha: UnitPhase,
    kind: Kind,
) -> Result<MonographPartition, MonographError> {
    let cert = is_monograph(graph, alpha, kind);
    let potential = match (cert.potential, cert.violation) {
        (Some(p), _) => p,
        (None, violation) => {
            return Err(MonographError::NotMonograph {
                kind,
                violation: violation.expect("negative verdicts carry a violation"),
            })
        }
    };
    let mut classes: Vec<(Phase, Vec<usize>)> = Vec::new();
    for (v, p) in potential.into_iter().enumerate() {
        match classes.iter_mut().find(|(q, _)| q.approx_eq(&p)) {
            Some((_, members)) => members.push(v),
            None => classes.push((p, vec![v])),
        }
    }
    classes.sort_by(|a, b| a.0.turns().total_cmp(&b.0.turns()));
    let partition = MonographPartition { kind, classes };
    if let Some(edge) = partition.edge_rule_violation(graph, alpha) {
        return Err(MonographError::PartitionRule(edge));
    }
    Ok(partition)
}

fn require(
    graph: &MixedGraph,
    alpha: UnitPhase,
    kind: Kind,
) -> Result<Vec<Phase>, MonographError> {
    let cert = is_monograph(graph, alpha, kind);
    match cert.potential {
        Some(p) => Ok(p),
        None => Err(MonographError::NotMonograph {
            kind,
            violation: cert.violation.expect("negative verdicts carry a violation"),
        }),
    }
}

/// Carries eigenpairs of the underlying graph over to `H^α` of a
/// first-kind monograph via `y_r = conj(potential(r)) · x_r`.
pub fn transfer_eigenvectors(
    graph: &MixedGraph,
    alpha: UnitPhase,
    basis: &[EigenPair],
) -> Result<Vec<EigenPair>, MonographError> {
    let potential = require(graph, alpha, Kind::First)?;
    let mut out = Vec::with_capacity(basis.len());
    for (index, pair) in basis.iter().enumerate() {
        let residual = verify_eigenpair(graph, UnitPhase::one(), pair)?;
        if residual > TRANSFER_TOL {
            return Err(MonographError::BasisNotVerified { index, residual });
        }
        let vector = pair
            .vector
            .iter()
            .zip(&potential)
            .map(|(x, p)| p.conj().to_complex() * x)
            .collect();
        let moved = EigenPair {
            lambda: pair.lambda,
            vector,
        };
        let residual = verify_eigenpair(graph, alpha, &moved)?;
        if residual > TRANSFER_TOL {
            return Err(MonographError::TransferResidual { index, residual });
        }
        out.push(moved);
    }
    Ok(out)
}

/// For a second-kind monograph, checks `σ_α(D) = -σ(Γ(D))` within `tol`.
pub fn negated_spectrum_check(
    graph: &MixedGraph,
    alpha: UnitPhase,
    tol: f64,
) -> Result<bool, MonographError> {
    require(graph, alpha, Kind::Second)?;
    let sigma = alpha_spectrum(graph, alpha)?;
    let base = underlying_spectrum(graph)?;
    Ok(spectra_equal(&sigma, &base.negated(), tol)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Arcs from the new vertex into every target.
    AllOut,
    /// Arcs from every target into the new vertex.
    AllIn,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub targets: Vec<usize>,
    pub direction: Direction,
}

/// Adds one vertex per attachment, joined to its targets by uniformly
/// directed arcs. `subgraph` must induce a connected, all-digon subgraph of
/// a first-kind monograph; the result is again a first-kind monograph.
pub fn extend_monograph(
    graph: &MixedGraph,
    alpha: UnitPhase,
    subgraph: &[usize],
    attachments: &[Attachment],
) -> Result<MixedGraph, MonographError> {
    require(graph, alpha, Kind::First)?;
    if subgraph.is_empty() {
        return Err(MonographError::EmptySubgraph);
    }
    let mut inside = vec![false; graph.n()];
    for &v in subgraph {
        if v >= graph.n() {
            return Err(MonographError::UnknownVertex(v));
        }
        inside[v] = true;
    }
    if let Some(arc) = graph
        .edges()
        .iter()
        .find(|e| e.kind == EdgeKind::Arc && inside[e.u] && inside[e.v])
    {
        return Err(MonographError::ArcInSubgraph(*arc));
    }
    let members: Vec<usize> = (0..graph.n()).filter(|&v| inside[v]).collect();
    if !graph.induced(&members).is_connected() {
        return Err(MonographError::SubgraphDisconnected);
    }

    let base = graph.n();
    let mut extended = graph.with_vertices(attachments.len());
    for (index, attachment) in attachments.iter().enumerate() {
        if attachment.targets.is_empty() {
            return Err(MonographError::EmptyAttachment(index));
        }
        let x = base + index;
        for &t in &attachment.targets {
            if t >= graph.n() || !inside[t] {
                return Err(MonographError::AttachmentOutside { index, vertex: t });
            }
            let edge = match attachment.direction {
                Direction::AllOut => Edge::arc(x, t),
                Direction::AllIn => Edge::arc(t, x),
            };
            extended = extended.with_edge(edge)?;
        }
    }
    if !is_monograph(&extended, alpha, Kind::First).verdict {
        return Err(MonographError::ExtensionBroke);
    }
    Ok(extended)
}

/// Spectral radius against maximum degree, with the structural data that
/// should decide equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusAnalysis {
    pub rho: f64,
    pub delta: usize,
    pub equal: bool,
    pub regular: bool,
    pub mono1: bool,
    pub mono2: bool,
    /// No power of `α` is the negative of another.
    pub negation_free: bool,
    /// `ρ ≤ Δ` up to [`RADIUS_BOUND_SLACK`].
    pub within_bound: bool,
    /// `equal ⇔ regular ∧ (mono1 ∨ mono2)`, and `equal ⇒ mono1` when negation free.
    pub theorem_consistent: bool,
}

/// Compares `ρ_α(D)` with `Δ` for a connected graph; `tol` decides equality.
pub fn radius_equality_analysis(
    graph: &MixedGraph,
    alpha: UnitPhase,
    tol: f64,
) -> Result<RadiusAnalysis, MonographError> {
    if !graph.is_connected() {
        return Err(MonographError::Disconnected);
    }
    let rho = spectral_radius(graph, alpha)?;
    let profile = graph.degree_profile();
    let delta = profile.max_degree;
    let equal = (rho - delta as f64).abs() <= tol;
    let mono1 = is_monograph(graph, alpha, Kind::First).verdict;
    let mono2 = is_monograph(graph, alpha, Kind::Second).verdict;
    let negation_free = alpha.avoids_negation();
    let characterised = equal == (profile.regular && (mono1 || mono2));
    let first_kind_only = !(negation_free && equal) || mono1;
    Ok(RadiusAnalysis {
        rho,
        delta,
        equal,
        regular: profile.regular,
        mono1,
        mono2,
        negation_free,
        within_bound: rho <= delta as f64 + RADIUS_BOUND_SLACK,
        theorem_consistent: characterised && first_kind_only,
    })
}

/// True iff every cycle has as many forward as backward arcs, i.e. the
/// graph is a first-kind monograph for every `α`.
pub fn every_alpha_monograph(graph: &MixedGraph) -> bool {
    graph
        .fundamental_cycles()
        .cycles
        .iter()
        .all(|c| arc_balance(graph, c).expect("cycles come from the graph").0 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{build_hermitian, eigen_decomposition};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn graph(n: usize, edges: &[Edge]) -> MixedGraph {
        MixedGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn dc3() -> MixedGraph {
        graph(3, &[Edge::arc(0, 1), Edge::arc(1, 2), Edge::arc(2, 0)])
    }

    fn uc3() -> MixedGraph {
        graph(3, &[Edge::digon(0, 1), Edge::digon(1, 2), Edge::digon(0, 2)])
    }

    fn ac4() -> MixedGraph {
        graph(
            4,
            &[Edge::arc(0, 1), Edge::arc(2, 1), Edge::arc(2, 3), Edge::arc(0, 3)],
        )
    }

    fn exact(k: i64, n: i64) -> Phase {
        Phase::Exact(Turn::new(k, n).unwrap())
    }

    #[test]
    fn stores() {
        let s = compute_store(&dc3(), UnitPhase::i(), Kind::First).unwrap();
        assert_eq!(s.generator_phases, vec![exact(3, 4)]);
        assert_eq!(s.size, Some(4));
        assert_eq!(
            s.elements().unwrap(),
            vec![exact(0, 1), exact(1, 4), exact(1, 2), exact(3, 4)]
        );

        let s = compute_store(&dc3(), UnitPhase::gamma(), Kind::First).unwrap();
        assert_eq!(s.size, Some(1));
        assert!(s.is_trivial());

        for alpha in [UnitPhase::i(), UnitPhase::gamma(), UnitPhase::Angle(0.3)] {
            let s = compute_store(&uc3(), alpha, Kind::Second).unwrap();
            assert_eq!(s.generator_phases, vec![Phase::minus_one()]);
            assert_eq!(s.size, Some(2));
        }

        let s = compute_store(&dc3(), UnitPhase::Angle(0.3), Kind::First).unwrap();
        assert_eq!(s.size, None);
        assert!(matches!(s.subgroup, Subgroup::Generated(_)));

        let two = dc3().disjoint_union(&uc3());
        assert_eq!(
            compute_store(&two, UnitPhase::i(), Kind::First),
            Err(MonographError::Disconnected)
        );
    }

    #[test]
    fn cyclic_step_of_mixed_denominators() {
        let (step, size) = cyclic_step(&[Turn::new(1, 4).unwrap(), Turn::new(1, 6).unwrap()]);
        assert_eq!((step, size), (Turn::new(1, 12).unwrap(), 12));
        let (step, size) = cyclic_step(&[Turn::new(1, 2).unwrap(), Turn::new(1, 2).unwrap()]);
        assert_eq!((step, size), (Turn::new(1, 2).unwrap(), 2));
        assert_eq!(cyclic_step(&[]), (Turn::zero(), 1));
    }

    #[test]
    fn verdicts() {
        let tree = graph(4, &[Edge::arc(0, 1), Edge::digon(1, 2), Edge::arc(3, 1)]);
        for alpha in [UnitPhase::i(), UnitPhase::omega(), UnitPhase::Angle(2.0)] {
            assert!(is_monograph(&tree, alpha, Kind::First).verdict);
        }
        assert!(is_monograph(&dc3(), UnitPhase::gamma(), Kind::First).verdict);
        let cert = is_monograph(&dc3(), UnitPhase::i(), Kind::First);
        assert!(!cert.verdict);
        assert_eq!(cert.violation, Some(Walk::new(vec![0, 1, 2, 0])));
        assert!(cert.potential.is_none());

        for alpha in [UnitPhase::i(), UnitPhase::gamma(), UnitPhase::Angle(0.3)] {
            assert!(!is_monograph(&uc3(), alpha, Kind::Second).verdict);
        }
        let c4 = graph(
            4,
            &[Edge::digon(0, 1), Edge::digon(1, 2), Edge::digon(2, 3), Edge::digon(0, 3)],
        );
        for alpha in [UnitPhase::i(), UnitPhase::gamma(), UnitPhase::Angle(0.3)] {
            assert!(is_monograph(&c4, alpha, Kind::Second).verdict);
        }
    }

    #[test]
    fn gauge_follows_the_walk_recursion() {
        let cert = is_monograph(&dc3(), UnitPhase::gamma(), Kind::First);
        assert_eq!(
            cert.potential.unwrap(),
            vec![exact(0, 1), exact(1, 3), exact(2, 3)]
        );
        let path = graph(3, &[Edge::arc(0, 1), Edge::digon(1, 2)]);
        let cert = is_monograph(&path, UnitPhase::i(), Kind::First);
        assert_eq!(
            cert.potential.unwrap(),
            vec![exact(0, 1), exact(1, 4), exact(1, 4)]
        );
    }

    #[test]
    fn partitions() {
        let p = monograph_partition(&dc3(), UnitPhase::gamma(), Kind::First).unwrap();
        assert_eq!(
            p.classes,
            vec![(exact(0, 1), vec![0]), (exact(1, 3), vec![1]), (exact(2, 3), vec![2])]
        );
        let path = graph(3, &[Edge::arc(0, 1), Edge::digon(1, 2)]);
        let p = monograph_partition(&path, UnitPhase::i(), Kind::First).unwrap();
        assert_eq!(p.classes, vec![(exact(0, 1), vec![0]), (exact(1, 4), vec![1, 2])]);
        assert!(matches!(
            monograph_partition(&uc3(), UnitPhase::i(), Kind::Second),
            Err(MonographError::NotMonograph { kind: Kind::Second, .. })
        ));
    }

    #[test]
    fn partitions_of_disconnected_graphs_cover_every_vertex() {
        let g = dc3().disjoint_union(&graph(2, &[Edge::arc(0, 1)]));
        let p = monograph_partition(&g, UnitPhase::gamma(), Kind::First).unwrap();
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.classes[0].1, vec![0, 3]);
    }

    #[test]
    fn transfer_on_directed_triangle() {
        let r = 1.0 / 3f64.sqrt();
        let x = EigenPair {
            lambda: 2.0,
            vector: vec![Complex64::new(r, 0.0); 3],
        };
        let y = transfer_eigenvectors(&dc3(), UnitPhase::gamma(), &[x]).unwrap();
        let g = UnitPhase::gamma().to_complex();
        let expected = [Complex64::new(1.0, 0.0), g * g, g];
        for (a, b) in y[0].vector.iter().zip(expected) {
            assert_abs_diff_eq!((a - b * r).norm(), 0.0, epsilon = 1e-15);
        }
        assert!(verify_eigenpair(&dc3(), UnitPhase::gamma(), &y[0]).unwrap() < 1e-15);

        assert!(matches!(
            transfer_eigenvectors(&dc3(), UnitPhase::i(), &[]),
            Err(MonographError::NotMonograph { .. })
        ));
        let bogus = EigenPair {
            lambda: 1.0,
            vector: vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        };
        assert!(matches!(
            transfer_eigenvectors(&dc3(), UnitPhase::gamma(), &[bogus]),
            Err(MonographError::BasisNotVerified { index: 0, .. })
        ));
    }

    #[test]
    fn transfer_on_trees() {
        let tree = graph(
            5,
            &[Edge::arc(0, 1), Edge::digon(1, 2), Edge::arc(3, 1), Edge::arc(3, 4)],
        );
        let (_, basis) = eigen_decomposition(&build_hermitian(&tree, UnitPhase::one())).unwrap();
        for alpha in [UnitPhase::i(), UnitPhase::omega(), UnitPhase::Angle(1.3)] {
            let moved = transfer_eigenvectors(&tree, alpha, &basis).unwrap();
            assert_eq!(moved.len(), 5);
            for pair in &moved {
                assert!(verify_eigenpair(&tree, alpha, pair).unwrap() <= 1e-9);
            }
        }
    }

    #[test]
    fn negated_spectra() {
        let c4 = graph(
            4,
            &[Edge::digon(0, 1), Edge::digon(1, 2), Edge::digon(2, 3), Edge::digon(0, 3)],
        );
        assert!(negated_spectrum_check(&c4, UnitPhase::i(), 1e-8).unwrap());
        assert!(negated_spectrum_check(&c4, UnitPhase::Angle(0.2), 1e-8).unwrap());
        assert!(matches!(
            negated_spectrum_check(&uc3(), UnitPhase::i(), 1e-8),
            Err(MonographError::NotMonograph { .. })
        ));
    }

    #[test]
    fn extensions() {
        let attach = |targets: Vec<usize>, direction| Attachment { targets, direction };
        for alpha in [UnitPhase::i(), UnitPhase::gamma(), UnitPhase::Angle(0.7)] {
            let out = extend_monograph(&uc3(), alpha, &[0, 1, 2], &[attach(vec![0, 1], Direction::AllOut)])
                .unwrap();
            assert_eq!(out.n(), 4);
            assert_eq!(out.out_neighbors(3), vec![0, 1]);
            assert!(is_monograph(&out, alpha, Kind::First).verdict);
        }

        let digon = graph(2, &[Edge::digon(0, 1)]);
        let out = extend_monograph(
            &digon,
            UnitPhase::i(),
            &[0, 1],
            &[attach(vec![0, 1], Direction::AllOut), attach(vec![0, 1], Direction::AllIn)],
        )
        .unwrap();
        assert_eq!(out.n(), 4);
        assert_eq!(out.in_neighbors(3), vec![0, 1]);
        assert!(is_monograph(&out, UnitPhase::i(), Kind::First).verdict);

        let with_arc = graph(3, &[Edge::arc(0, 1), Edge::digon(1, 2)]);
        assert_eq!(
            extend_monograph(&with_arc, UnitPhase::i(), &[0, 1], &[attach(vec![0], Direction::AllIn)]),
            Err(MonographError::ArcInSubgraph(Edge::arc(0, 1)))
        );
        assert_eq!(
            extend_monograph(&with_arc, UnitPhase::i(), &[0, 2], &[attach(vec![0], Direction::AllIn)]),
            Err(MonographError::SubgraphDisconnected)
        );
        assert_eq!(
            extend_monograph(&with_arc, UnitPhase::i(), &[1, 2], &[attach(vec![0], Direction::AllIn)]),
            Err(MonographError::AttachmentOutside { index: 0, vertex: 0 })
        );
        assert_eq!(
            extend_monograph(&with_arc, UnitPhase::i(), &[1, 2], &[attach(vec![], Direction::AllIn)]),
            Err(MonographError::EmptyAttachment(0))
        );
        assert!(matches!(
            extend_monograph(&dc3(), UnitPhase::i(), &[0], &[]),
            Err(MonographError::NotMonograph { .. })
        ));
    }

    #[test]
    fn radius_cases() {
        let a = radius_equality_analysis(&dc3(), UnitPhase::gamma(), 1e-8).unwrap();
        assert_abs_diff_eq!(a.rho, 2.0, epsilon = 1e-10);
        assert!(a.equal && a.regular && a.mono1 && a.theorem_consistent && a.within_bound);
        assert_eq!(a.delta, 2);

        let a = radius_equality_analysis(&dc3(), UnitPhase::i(), 1e-8).unwrap();
        assert_abs_diff_eq!(a.rho, 3f64.sqrt(), epsilon = 1e-10);
        assert!(!a.equal && !a.mono1 && !a.mono2 && a.theorem_consistent);

        for alpha in [UnitPhase::i(), UnitPhase::omega(), UnitPhase::Angle(2.5)] {
            let a = radius_equality_analysis(&uc3(), alpha, 1e-8).unwrap();
            assert!(a.equal && a.regular && a.mono1 && a.theorem_consistent);
        }

        let two = dc3().disjoint_union(&uc3());
        assert_eq!(
            radius_equality_analysis(&two, UnitPhase::i(), 1e-8),
            Err(MonographError::Disconnected)
        );
    }

    #[test]
    fn balanced_cycles() {
        assert!(every_alpha_monograph(&ac4()));
        assert!(!every_alpha_monograph(&dc3()));
        assert!(every_alpha_monograph(&graph(3, &[Edge::arc(0, 1), Edge::arc(2, 1)])));
    }
}
