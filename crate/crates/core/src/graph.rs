//! Immutable simple graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so every set
//! operation used by the verifiers (neighborhood shells, cross-edge counts,
//! component scans) is a handful of word operations. The 62-vertex cap
//! keeps one machine word per row sufficient and keeps every graph inside
//! the short form of the graph6 codec.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported graph order.
pub const MAX_VERTICES: usize = 62;

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertices of some graph, stored as a bitset.
///
/// All set bits must be below the order of the graph the set refers to;
/// operations taking a `VertexSet` validate this where it matters.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn count(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex in the set, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates over the vertices in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            bits |= 1 << v;
        }
        VertexSet(bits)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a vertex set, in increasing order.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

// ============================================================================
// Errors
// ============================================================================

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Requested order exceeds [`MAX_VERTICES`].
    TooManyVertices { requested: usize },
    /// An edge endpoint or queried vertex is not below the graph order.
    VertexOutOfRange { vertex: usize, order: usize },
    /// An edge pair (u, u) was supplied.
    SelfLoop { vertex: usize },
    /// Two vertex sets required to be disjoint overlap.
    OverlappingSets,
    /// A vertex set refers to vertices outside the graph.
    SetOutOfRange,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { requested } => {
                write!(f, "graph order {requested} exceeds the maximum of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for a graph of order {order}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "loop edge at vertex {vertex}"),
            GraphError::OverlappingSets => write!(f, "vertex sets overlap"),
            GraphError::SetOutOfRange => write!(f, "vertex set exceeds the graph order"),
        }
    }
}

impl core::error::Error for GraphError {}

// ============================================================================
// Graph
// ============================================================================

/// An undirected simple graph on `n <= 62` vertices.
///
/// Values are immutable after construction and cheap to clone; all
/// operations are pure, so graphs can be shared and sent across threads
/// freely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate pairs collapse
    /// to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { requested: n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph { n, adj };
        g.debug_check_invariants();
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { requested: n });
        }
        let full = VertexSet::full(n).bits();
        let adj = (0..n).map(|v| full & !(1 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// The path on `n` vertices, in line order 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges)
    }

    /// The cycle on `n` vertices, 0-1-...-(n-1)-0.
    ///
    /// # Panics
    /// Panics if `n < 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges)
    }

    /// The complete bipartite graph K_{a,b}. The first `a` vertices form
    /// one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let n = a.checked_add(b).filter(|&n| n <= MAX_VERTICES);
        let n = n.ok_or(GraphError::TooManyVertices { requested: a.wrapping_add(b) })?;
        let x_bits = VertexSet::full(a).bits();
        let y_bits = VertexSet::full(n).bits() & !x_bits;
        let adj = (0..n).map(|v| if v < a { y_bits } else { x_bits }).collect();
        Ok(Graph { n, adj })
    }

    /// Vertex-disjoint union; `other`'s vertices are relabeled by offset
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { requested: n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// Builds a graph directly from adjacency rows. Debug builds check the
    /// symmetry / no-loop / in-range invariants.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Self {
        let g = Graph { n, adj };
        g.debug_check_invariants();
        g
    }

    fn debug_check_invariants(&self) {
        debug_assert!(self.n <= MAX_VERTICES);
        debug_assert_eq!(self.adj.len(), self.n);
        let full = VertexSet::full(self.n).bits();
        for u in 0..self.n {
            debug_assert_eq!(self.adj[u] & !full, 0, "adjacency bit beyond order");
            debug_assert_eq!(self.adj[u] >> u & 1, 0, "loop at vertex {u}");
            for v in self.neighbors(u).iter() {
                debug_assert_ne!(self.adj[v] >> u & 1, 0, "asymmetric edge ({u},{v})");
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u])
    }

    /// Raw adjacency rows, one bitset per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// BFS distances from `u`; `None` marks unreachable vertices.
    fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut frontier = 1u64 << u;
        let mut seen = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in BitIter(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Vertices at graph distance exactly `d` from `u`. Distance 0 gives
    /// `{u}`; distances beyond the component of `u` give the empty set.
    pub fn neighborhood_shell(&self, u: usize, d: usize) -> Result<VertexSet, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        let dist = self.distances_from(u);
        Ok((0..self.n).filter(|&v| dist[v] == Some(d)).collect())
    }

    /// Number of edges with one endpoint in `s` and the other in `t`.
    /// The sets must be disjoint.
    pub fn cross_edges(&self, s: VertexSet, t: VertexSet) -> Result<usize, GraphError> {
        if !s.is_disjoint(t) {
            return Err(GraphError::OverlappingSets);
        }
        let full = self.vertex_set();
        if !s.is_subset_of(full) || !t.is_subset_of(full) {
            return Err(GraphError::SetOutOfRange);
        }
        Ok(s.iter().map(|v| (self.adj[v] & t.bits()).count_ones() as usize).sum())
    }

    /// Two-colors the graph if it is bipartite; otherwise reports a witness
    /// odd closed walk.
    ///
    /// Within each component the side containing the smallest vertex is the
    /// X side, so edgeless components land entirely in X and the output is
    /// deterministic.
    pub fn two_coloring(&self) -> TwoColoring {
        let mut color = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut x_bits = 0u64;
        let mut y_bits = 0u64;
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            x_bits |= 1 << root;
            let mut queue = vec![root];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let cu = color[u].unwrap();
                for v in self.neighbors(u).iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            parent[v] = u;
                            if cu {
                                x_bits |= 1 << v;
                            } else {
                                y_bits |= 1 << v;
                            }
                            queue.push(v);
                        }
                        Some(cv) if cv == cu => {
                            return TwoColoring::NotBipartite {
                                odd_closed_walk: odd_walk(&parent, u, v),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        TwoColoring::Bipartite(Bipartition {
            x_side: VertexSet(x_bits),
            y_side: VertexSet(y_bits),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.two_coloring(), TwoColoring::Bipartite(_))
    }

    /// The bipartition from [`Graph::two_coloring`], or `None` when the
    /// graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        match self.two_coloring() {
            TwoColoring::Bipartite(bp) => Some(bp),
            TwoColoring::NotBipartite { .. } => None,
        }
    }

    /// Maximal connected vertex sets, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut components = Vec::new();
        let mut remaining = self.vertex_set().bits();
        while remaining != 0 {
            let root = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << root;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                next &= !comp;
                comp |= next;
                frontier = next;
            }
            components.push(VertexSet(comp));
            remaining &= !comp;
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced by `s`, with vertices relabeled 0..|s| in
    /// increasing original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(GraphError::SetOutOfRange);
        }
        let verts: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; verts.len()];
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[a] |= 1 << b;
                }
            }
        }
        Ok(Graph::from_adjacency(verts.len(), adj))
    }

    /// The graph with vertex `u` removed (remaining vertices relabeled in
    /// increasing original order).
    pub fn delete_vertex(&self, u: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        self.induced_subgraph(self.vertex_set().without(u))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                if !first {
                    write!(f, ", ")?;
                }
                write!(f, "{u}-{v}")?;
                first = false;
            }
        }
        write!(f, "])")
    }
}

/// Reconstructs an odd closed walk r -> ... -> u -> v -> ... -> r from the
/// BFS parent links when an edge (u, v) joins two equally colored vertices.
fn odd_walk(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let mut up = Vec::new();
    let mut a = u;
    loop {
        up.push(a);
        if parent[a] == usize::MAX {
            break;
        }
        a = parent[a];
    }
    up.reverse();
    let mut walk = up;
    let mut b = v;
    loop {
        walk.push(b);
        if parent[b] == usize::MAX {
            break;
        }
        b = parent[b];
    }
    walk
}

// ============================================================================
// Bipartition
// ============================================================================

/// A two-coloring (X, Y) of the vertices of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub x_side: VertexSet,
    pub y_side: VertexSet,
}

impl Bipartition {
    pub fn new(x_side: VertexSet, y_side: VertexSet) -> Self {
        Bipartition { x_side, y_side }
    }

    /// True when the sides partition the vertex set of `g` and every edge
    /// crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if !self.x_side.is_disjoint(self.y_side) {
            return false;
        }
        if self.x_side.union(self.y_side) != g.vertex_set() {
            return false;
        }
        self.x_side.iter().all(|u| g.neighbors(u).is_disjoint(self.x_side))
            && self.y_side.iter().all(|u| g.neighbors(u).is_disjoint(self.y_side))
    }

    /// The side the walk-crossing convention calls X, swapped so that it
    /// contains `v` (helper for side-symmetric callers).
    pub fn side_of(&self, v: usize) -> Option<VertexSet> {
        if self.x_side.contains(v) {
            Some(self.x_side)
        } else if self.y_side.contains(v) {
            Some(self.y_side)
        } else {
            None
        }
    }
}

/// Outcome of [`Graph::two_coloring`]: either a valid bipartition or a
/// witness odd closed walk (first vertex equals last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Bipartition),
    NotBipartite { odd_closed_walk: Vec<usize> },
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn k22_union_k1() -> Graph {
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        k22.disjoint_union(&Graph::empty(1).unwrap()).unwrap()
    }

    #[test]
    fn triangle_from_edge_list() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn k22_plus_isolated_vertex() {
        let g = k22_union_k1();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, order: 2 })
        );
        assert!(matches!(
            Graph::new(63, &[]),
            Err(GraphError::TooManyVertices { .. })
        ));
        assert!(matches!(
            Graph::complete_bipartite(31, 32),
            Err(GraphError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn complete_bipartite_shape() {
        let g = Graph::complete_bipartite(2, 4).unwrap();
        assert_eq!(g.edge_count(), 8);
        let mut degrees: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [2, 2, 2, 2, 4, 4]);

        let empty_side = Graph::complete_bipartite(0, 3).unwrap();
        assert_eq!(empty_side.order(), 3);
        assert_eq!(empty_side.edge_count(), 0);

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
    }

    #[test]
    fn disjoint_union_relabels() {
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.connected_components().len(), 2);
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(2, 3));

        let two = Graph::empty(1).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((two.order(), two.edge_count()), (2, 0));
    }

    #[test]
    fn shells_by_distance() {
        // X-vertex of K_{2,4}: the whole Y side at distance 1, the other
        // X-vertex at distance 2.
        let g = Graph::complete_bipartite(2, 4).unwrap();
        let shell2 = g.neighborhood_shell(0, 2).unwrap();
        assert_eq!(shell2, VertexSet::singleton(1));
        assert_eq!(g.neighborhood_shell(0, 1).unwrap().count(), 4);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.neighborhood_shell(0, 3).unwrap(), VertexSet::singleton(3));

        let g = k22_union_k1();
        assert!(g.neighborhood_shell(4, 1).unwrap().is_empty());
        assert_eq!(g.neighborhood_shell(4, 0).unwrap(), VertexSet::singleton(4));

        assert!(g.neighborhood_shell(9, 1).is_err());
    }

    #[test]
    fn shells_partition_the_component() {
        for g in [
            Graph::complete_bipartite(2, 4).unwrap(),
            k22_union_k1(),
            Graph::cycle(5).unwrap(),
        ] {
            for u in g.vertices() {
                let mut union = VertexSet::EMPTY;
                for d in 0..g.order() {
                    let shell = g.neighborhood_shell(u, d).unwrap();
                    assert!(shell.is_disjoint(union));
                    union = union.union(shell);
                }
                let component = g
                    .connected_components()
                    .into_iter()
                    .find(|c| c.contains(u))
                    .unwrap();
                assert_eq!(union, component);
            }
        }
    }

    #[test]
    fn cross_edge_counts() {
        let g = Graph::complete_bipartite(2, 4).unwrap();
        let n1 = g.neighborhood_shell(0, 1).unwrap();
        let n2 = g.neighborhood_shell(0, 2).unwrap();
        assert_eq!(g.cross_edges(n1, n2).unwrap(), 4);
        assert_eq!(g.cross_edges(VertexSet::EMPTY, n1).unwrap(), 0);

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let bp = k33.bipartition().unwrap();
        assert_eq!(k33.cross_edges(bp.x_side, bp.y_side).unwrap(), 9);

        assert_eq!(g.cross_edges(n1, n1), Err(GraphError::OverlappingSets));
    }

    #[test]
    fn two_coloring_outcomes() {
        match Graph::cycle(5).unwrap().two_coloring() {
            TwoColoring::NotBipartite { odd_closed_walk } => {
                assert_eq!(odd_closed_walk.first(), odd_closed_walk.last());
                let edges = odd_closed_walk.len() - 1;
                assert_eq!(edges % 2, 1);
                let g = Graph::cycle(5).unwrap();
                for w in odd_closed_walk.windows(2) {
                    assert!(g.has_edge(w[0], w[1]));
                }
            }
            TwoColoring::Bipartite(_) => panic!("C_5 is not bipartite"),
        }

        let bp = Graph::complete_bipartite(2, 4).unwrap().bipartition().unwrap();
        let sizes = (bp.x_side.count(), bp.y_side.count());
        assert!(sizes == (2, 4) || sizes == (4, 2));

        let edgeless = Graph::empty(3).unwrap().bipartition().unwrap();
        assert_eq!(edgeless.x_side, VertexSet::full(3));
        assert!(edgeless.y_side.is_empty());
    }

    #[test]
    fn coloring_convention_per_component() {
        // Smallest vertex of every component lands in X.
        let g = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let bp = g.bipartition().unwrap();
        assert_eq!(bp.x_side, VertexSet::from_iter([0, 2, 4]));
        assert!(bp.is_valid_for(&g));
    }

    #[test]
    fn components() {
        let g = k22_union_k1();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].count(), 4);
        assert_eq!(comps[1], VertexSet::singleton(4));

        assert!(Graph::complete_bipartite(3, 3).unwrap().is_connected());
        assert_eq!(Graph::empty(3).unwrap().connected_components().len(), 3);
    }

    #[test]
    fn induced_subgraphs() {
        let g = Graph::complete_bipartite(2, 4).unwrap();
        let s = g.neighborhood_shell(0, 1).unwrap().union(g.neighborhood_shell(0, 2).unwrap());
        let h = g.induced_subgraph(s).unwrap();
        // N(u) ∪ N²(u) of an X-vertex induces the star K_{1,4}.
        assert_eq!(h.order(), 5);
        assert_eq!(h.edge_count(), 4);
        let mut degs: Vec<_> = h.vertices().map(|v| h.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 1, 1, 4]);

        let identity = g.induced_subgraph(g.vertex_set()).unwrap();
        assert_eq!(identity, g);

        let nothing = g.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(nothing.order(), 0);
    }

    #[test]
    fn handshake_identity() {
        for g in [
            Graph::complete(5).unwrap(),
            Graph::complete_bipartite(2, 4).unwrap(),
            k22_union_k1(),
            Graph::path(6).unwrap(),
        ] {
            let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn bipartition_validity() {
        let g = Graph::complete_bipartite(2, 2).unwrap();
        let good = Bipartition::new(VertexSet::from_iter([0, 1]), VertexSet::from_iter([2, 3]));
        assert!(good.is_valid_for(&g));
        let bad = Bipartition::new(VertexSet::from_iter([0, 2]), VertexSet::from_iter([1, 3]));
        assert!(!bad.is_valid_for(&g));
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<VertexSet>();
        assert_send_sync::<Bipartition>();
    }
}
