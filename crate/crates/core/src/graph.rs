//! Mixed graphs: digons and arcs over dense vertex ids `0..n`.
//!
//! A [`MixedGraph`] holds at most one edge per unordered vertex pair. Each
//! edge is either a digon (undirected) or an arc `u -> v`. Most structural
//! notions (degree, connectivity, cycles) are taken from the underlying
//! undirected graph, see [`MixedGraph::underlying`].

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Structural violations when assembling a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("more than one edge between vertices {0} and {1}")]
    DuplicatePair(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Errors raised while reading the text graph format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing vertex count")]
    MissingVertexCount,
    #[error("line {line}: invalid vertex count {text:?}")]
    BadVertexCount { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?} (expected `u -- v` or `u -> v`)")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Errors for walk validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk is empty")]
    Empty,
    #[error("walk vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("walk steps between non-adjacent vertices {0} and {1}")]
    NotAdjacent(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Digon,
    /// Directed from `u` to `v`.
    Arc,
}

/// One edge of a mixed graph. Digons are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn digon(u: usize, v: usize) -> Self {
        Edge {
            u: u.min(v),
            v: u.max(v),
            kind: EdgeKind::Digon,
        }
    }

    pub fn arc(from: usize, to: usize) -> Self {
        Edge {
            u: from,
            v: to,
            kind: EdgeKind::Arc,
        }
    }

    /// The unordered endpoint pair `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn is_arc(&self) -> bool {
        self.kind == EdgeKind::Arc
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EdgeKind::Digon => write!(f, "{} -- {}", self.u, self.v),
            EdgeKind::Arc => write!(f, "{} -> {}", self.u, self.v),
        }
    }
}

/// How a single step `u -> v` of a walk traverses the edge between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Digon,
    /// Along an arc `u -> v`.
    Forward,
    /// Against an arc `v -> u`.
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    /// Sorted by endpoint pair.
    edges: Vec<Edge>,
    /// Row-major `n x n` step table.
    steps: Vec<Option<Step>>,
}

impl MixedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut graph = MixedGraph::empty(n);
        for edge in edges {
            graph.insert(edge)?;
        }
        graph.edges.sort_by_key(|e| e.pair());
        Ok(graph)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        MixedGraph {
            n,
            edges: Vec::new(),
            steps: vec![None; n * n],
        }
    }

    fn insert(&mut self, edge: Edge) -> Result<(), GraphError> {
        let n = self.n;
        for vertex in [edge.u, edge.v] {
            if vertex >= n {
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
        }
        if edge.u == edge.v {
            return Err(GraphError::Loop(edge.u));
        }
        let edge = match edge.kind {
            EdgeKind::Digon => Edge::digon(edge.u, edge.v),
            EdgeKind::Arc => edge,
        };
        let (a, b) = edge.pair();
        if self.steps[a * n + b].is_some() {
            return Err(GraphError::DuplicatePair(a, b));
        }
        let (fwd, bwd) = match edge.kind {
            EdgeKind::Digon => (Step::Digon, Step::Digon),
            EdgeKind::Arc => (Step::Forward, Step::Backward),
        };
        self.steps[edge.u * n + edge.v] = Some(fwd);
        self.steps[edge.v * n + edge.u] = Some(bwd);
        self.edges.push(edge);
        Ok(())
    }

    /// Returns a copy with `edge` added.
    pub fn with_edge(&self, edge: Edge) -> Result<Self, GraphError> {
        let mut graph = self.clone();
        graph.insert(edge)?;
        graph.edges.sort_by_key(|e| e.pair());
        Ok(graph)
    }

    /// Returns a copy with `extra` isolated vertices appended.
    pub fn with_vertices(&self, extra: usize) -> Self {
        let n = self.n + extra;
        MixedGraph::new(n, self.edges.iter().copied()).expect("existing edges stay valid")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &MixedGraph) -> Self {
        let shift = self.n;
        let shifted = other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            kind: e.kind,
        });
        MixedGraph::new(self.n + other.n, self.edges.iter().copied().chain(shifted))
            .expect("disjoint union of valid graphs is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_arc()).count()
    }

    pub fn digon_count(&self) -> usize {
        self.edges.len() - self.arc_count()
    }

    /// How the step from `u` to `v` traverses their edge, if adjacent.
    pub fn step(&self, u: usize, v: usize) -> Option<Step> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.steps[u * self.n + v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.step(u, v).is_some()
    }

    /// All neighbours of `u` in the underlying graph with the step kind.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = (usize, Step)> + '_ {
        let row = &self.steps[u * self.n..(u + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|s| (v, s)))
    }

    /// Digon neighbours of `u`.
    pub fn digon_neighbors(&self, u: usize) -> Vec<usize> {
        self.neighbors_by(u, Step::Digon)
    }

    /// Heads of arcs leaving `u`.
    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        self.neighbors_by(u, Step::Forward)
    }

    /// Tails of arcs entering `u`.
    pub fn in_neighbors(&self, u: usize) -> Vec<usize> {
        self.neighbors_by(u, Step::Backward)
    }

    fn neighbors_by(&self, u: usize, step: Step) -> Vec<usize> {
        self.neighbors(u)
            .filter(|&(_, s)| s == step)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.edges.iter().map(Edge::pair))
            .expect("mixed graph edges are simple")
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|u| self.neighbors(u).count()).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let regular = degrees.iter().all(|&d| d == max_degree);
        DegreeProfile {
            degrees,
            max_degree,
            regular,
        }
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.underlying().connected_components()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// True when the underlying graph has no cycles.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.connected_components().len() == self.n
    }

    pub fn fundamental_cycles(&self) -> FundamentalCycleBasis {
        FundamentalCycleBasis::new(&self.underlying())
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> MixedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges.iter().filter_map(|e| {
            let (a, b) = (index[e.u], index[e.v]);
            (a != usize::MAX && b != usize::MAX).then_some(Edge {
                u: a,
                v: b,
                kind: e.kind,
            })
        });
        MixedGraph::new(vertices.len(), edges).expect("induced subgraph is valid")
    }

    /// Number of distinct graphs on `n` vertices: four choices per vertex pair.
    pub fn assignment_count(n: usize) -> Option<u64> {
        let pairs = u32::try_from(n * n.saturating_sub(1) / 2).ok()?;
        4u64.checked_pow(pairs)
    }

    /// Decodes an assignment index. Pairs `(u, v)`, `u < v`, are taken in
    /// lexicographic order; the base-4 digit of each pair selects none,
    /// `u -- v`, `u -> v` or `v -> u`.
    pub fn from_assignment(n: usize, mut index: u64) -> MixedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                match index % 4 {
                    1 => edges.push(Edge::digon(u, v)),
                    2 => edges.push(Edge::arc(u, v)),
                    3 => edges.push(Edge::arc(v, u)),
                    _ => {}
                }
                index /= 4;
            }
        }
        MixedGraph::new(n, edges).expect("assignment decodes to a simple graph")
    }

    /// Serializes to the text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for edge in &self.edges {
            out.push_str(&edge.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for MixedGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Parses the line-oriented graph format.
///
/// The first non-comment line holds the vertex count; every following line
/// is `u -- v` or `u -> v`. `#` starts a comment and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<MixedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (count_line, count_text) = lines.next().ok_or(ParseError::MissingVertexCount)?;
    let n: usize = count_text.parse().map_err(|_| ParseError::BadVertexCount {
        line: count_line,
        text: count_text.to_string(),
    })?;

    let mut graph = MixedGraph::empty(n);
    for (line, content) in lines {
        let malformed = || ParseError::Malformed {
            line,
            text: content.to_string(),
        };
        let (lhs, rhs, kind) = if let Some((a, b)) = content.split_once("->") {
            (a, b, EdgeKind::Arc)
        } else if let Some((a, b)) = content.split_once("--") {
            (a, b, EdgeKind::Digon)
        } else {
            return Err(malformed());
        };
        let u: usize = lhs.trim().parse().map_err(|_| malformed())?;
        let v: usize = rhs.trim().parse().map_err(|_| malformed())?;
        graph
            .insert(Edge { u, v, kind })
            .map_err(|source| ParseError::Invalid { line, source })?;
    }
    graph.edges.sort_by_key(|e| e.pair());
    Ok(graph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub regular: bool,
}

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn new(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (a, b) = (a.min(b), a.max(b));
            if adj[a].contains(&b) {
                return Err(GraphError::DuplicatePair(a, b));
            }
            adj[a].push(b);
            adj[b].push(a);
            edges.push((a, b));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        edges.sort_unstable();
        Ok(UndirectedGraph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Components in order of their smallest vertex, each sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut component = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        component.push(v);
                        queue.push_back(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("queued vertices are coloured");
                for &v in &self.adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// All simple cycles of length `3..=max_len`, each reported once.
    ///
    /// Cycles are listed in canonical orientation: they start at their
    /// smallest vertex and the second vertex is smaller than the last.
    pub fn simple_cycles(&self, max_len: usize) -> Vec<Cycle> {
        let mut cycles = Vec::new();
        let mut on_path = vec![false; self.n];
        let mut path = Vec::with_capacity(self.n);
        for root in 0..self.n {
            path.push(root);
            on_path[root] = true;
            self.extend_cycles(root, max_len, &mut path, &mut on_path, &mut cycles);
            on_path[root] = false;
            path.pop();
        }
        cycles
    }

    fn extend_cycles(
        &self,
        root: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Cycle>,
    ) {
        let last = *path.last().expect("path starts at the root");
        for &next in &self.adj[last] {
            if next == root {
                if path.len() >= 3 && path[1] < last {
                    out.push(Cycle(path.clone()));
                }
            } else if next > root && !on_path[next] && path.len() < max_len {
                on_path[next] = true;
                path.push(next);
                self.extend_cycles(root, max_len, path, on_path, out);
                path.pop();
                on_path[next] = false;
            }
        }
    }
}

/// Enumerates simple cycles of length `3..=max_len`; see [`UndirectedGraph::simple_cycles`].
pub fn enumerate_simple_cycles(graph: &UndirectedGraph, max_len: usize) -> Vec<Cycle> {
    graph.simple_cycles(max_len)
}

/// A simple cycle as its vertex sequence, without repeating the start.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle(pub Vec<usize>);

impl Cycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Rotates to start at the smallest vertex and picks the direction whose
    /// second vertex is smaller than the last.
    pub fn canonical(&self) -> Cycle {
        let k = self.0.len();
        if k == 0 {
            return self.clone();
        }
        let start = (0..k).min_by_key(|&i| self.0[i]).expect("nonempty");
        let mut seq: Vec<usize> = (0..k).map(|i| self.0[(start + i) % k]).collect();
        if k > 2 && seq[1] > seq[k - 1] {
            seq[1..].reverse();
        }
        Cycle(seq)
    }

    /// The traversal in the opposite direction.
    pub fn reversed(&self) -> Cycle {
        let mut seq = self.0.clone();
        if seq.len() > 1 {
            seq[1..].reverse();
        }
        Cycle(seq)
    }

    /// The closed walk `v1, ..., vk, v1`.
    pub fn to_walk(&self) -> Walk {
        let mut vertices = self.0.clone();
        if let Some(&first) = vertices.first() {
            vertices.push(first);
        }
        Walk { vertices }
    }

    /// Bitmask of the vertices; requires every vertex `< 64`.
    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1 << v))
    }
}

/// A vertex sequence in which consecutive vertices are adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Self {
        Walk { vertices }
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() > 1 && self.vertices.first() == self.vertices.last()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn concat(&self, other: &Walk) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().skip(1));
        Walk { vertices }
    }

    /// The step kinds along the walk, validated against `graph`.
    pub fn steps(&self, graph: &MixedGraph) -> Result<Vec<Step>, WalkError> {
        let first = *self.vertices.first().ok_or(WalkError::Empty)?;
        if first >= graph.n() {
            return Err(WalkError::UnknownVertex(first));
        }
        self.vertices
            .windows(2)
            .map(|w| {
                if w[1] >= graph.n() {
                    return Err(WalkError::UnknownVertex(w[1]));
                }
                graph
                    .step(w[0], w[1])
                    .ok_or(WalkError::NotAdjacent(w[0], w[1]))
            })
            .collect()
    }
}

impl From<Vec<usize>> for Walk {
    fn from(vertices: Vec<usize>) -> Self {
        Walk { vertices }
    }
}

/// BFS spanning forest and the cycle closed by each non-tree edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalCycleBasis {
    /// Tree edges of each component, in component order.
    pub tree: Vec<Vec<(usize, usize)>>,
    /// BFS parent of every vertex; roots have none.
    pub parent: Vec<Option<usize>>,
    /// BFS order of the vertices, component by component.
    pub order: Vec<usize>,
    /// One canonical closed walk per non-tree edge.
    pub cycles: Vec<Walk>,
    /// The non-tree edge that closes each cycle.
    pub closing_edges: Vec<(usize, usize)>,
}

impl FundamentalCycleBasis {
    pub fn new(graph: &UndirectedGraph) -> Self {
        let n = graph.n();
        let mut parent = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut tree = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut component_tree = Vec::new();
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &v in graph.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = Some(u);
                        depth[v] = depth[u] + 1;
                        component_tree.push((u.min(v), u.max(v)));
                        queue.push_back(v);
                    }
                }
            }
            component_tree.sort_unstable();
            tree.push(component_tree);
        }

        let is_tree_edge = |a: usize, b: usize| parent[a] == Some(b) || parent[b] == Some(a);
        let mut cycles = Vec::new();
        let mut closing_edges = Vec::new();
        for &(a, b) in graph.edges() {
            if is_tree_edge(a, b) {
                continue;
            }
            // Climb both ends to their lowest common ancestor.
            let (mut x, mut y) = (a, b);
            let mut up = vec![x];
            let mut down = vec![y];
            while depth[x] > depth[y] {
                x = parent[x].expect("non-root has a parent");
                up.push(x);
            }
            while depth[y] > depth[x] {
                y = parent[y].expect("non-root has a parent");
                down.push(y);
            }
            while x != y {
                x = parent[x].expect("non-root has a parent");
                y = parent[y].expect("non-root has a parent");
                up.push(x);
                down.push(y);
            }
            down.pop();
            down.reverse();
            up.extend(down);
            cycles.push(Cycle(up).canonical().to_walk());
            closing_edges.push((a, b));
        }

        FundamentalCycleBasis {
            tree,
            parent,
            order,
            cycles,
            closing_edges,
        }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}
