//! Bound formulas, per-instance verifiers, and equality-case recognizers
//! for the spectral bounds on path- and cycle-free graphs.
//!
//! Every verifier returns a [`BoundReport`] carrying the measured quantity,
//! the bound, the satisfaction margin, and (at equality) a recognized
//! extremal shape. A negative margin with the premises satisfied is a
//! violation and is never dropped; campaigns aggregate these reports.

use alloc::vec::Vec;
use core::fmt;

use crate::enumerate;
use crate::forbidden;
use crate::graph::{Bipartition, Graph, TwoColoring, VertexSet};
use crate::spectral;

/// Absolute tolerance for equality detection against irrational bound
/// values. Solver error is below 1e-10, so 1e-8 separates cleanly.
pub const EPS_EQ: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalError {
    /// The supplied bipartition does not two-color the graph.
    InvalidBipartition,
    VertexOutOfRange { vertex: usize, order: usize },
    /// The side parameter k must be at least 1.
    KOutOfRange { k: usize },
    CycleOrderTooSmall { t: usize },
    PathOrderTooSmall { t: usize },
    EmptyGraph,
    /// Bipartite input required; carries a witness odd closed walk.
    NotBipartite { odd_closed_walk: Vec<usize> },
    /// A hypothesis forbids this path; carries the found path.
    PathPresent { path: Vec<usize> },
    /// A hypothesis forbids a component of this shape; carries its vertex
    /// set.
    ForbiddenComponent { component: VertexSet },
    /// Equality-case recognition needs the exact canonical form, which is
    /// capped at small orders.
    OrderTooLarge { n: usize, max: usize },
}

impl fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalError::InvalidBipartition => write!(f, "bipartition is not valid for the graph"),
            ExtremalError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            ExtremalError::KOutOfRange { k } => write!(f, "side parameter k={k} must be >= 1"),
            ExtremalError::CycleOrderTooSmall { t } => {
                write!(f, "cycle order {t} is below the minimum of 3")
            }
            ExtremalError::PathOrderTooSmall { t } => {
                write!(f, "path order {t} is below the minimum of 2")
            }
            ExtremalError::EmptyGraph => write!(f, "graph has no vertices"),
            ExtremalError::NotBipartite { .. } => write!(f, "graph is not bipartite"),
            ExtremalError::PathPresent { path } => {
                write!(f, "forbidden path of order {} present", path.len())
            }
            ExtremalError::ForbiddenComponent { component } => {
                write!(f, "forbidden component on {} vertices present", component.count())
            }
            ExtremalError::OrderTooLarge { n, max } => {
                write!(f, "order {n} exceeds the recognizer bound of {max}")
            }
        }
    }
}

impl core::error::Error for ExtremalError {}

// ============================================================================
// Report types
// ============================================================================

/// Recognized extremal shape at an equality instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqualityCase {
    /// Complete bipartite with the endpoint side of size exactly k.
    CompleteBipartiteKSide,
    /// Complete bipartite with the other side of size exactly k-1.
    CompleteBipartiteKm1Side,
    /// K_{k,m} plus one extra vertex on the k-side joined to exactly k-1
    /// vertices of the m-side.
    NearCompleteBipartite,
    /// K_{k,n-k}.
    KkNminusK,
    /// The balanced complete bipartite graph.
    BalancedBipartite,
    /// K_{2,2} plus an isolated vertex.
    K22PlusK1,
    /// No recognized shape.
    None,
}

impl EqualityCase {
    pub fn as_str(self) -> &'static str {
        match self {
            EqualityCase::CompleteBipartiteKSide => "complete-bipartite-k-side",
            EqualityCase::CompleteBipartiteKm1Side => "complete-bipartite-km1-side",
            EqualityCase::NearCompleteBipartite => "near-complete-bipartite",
            EqualityCase::KkNminusK => "k-nminusk",
            EqualityCase::BalancedBipartite => "balanced-bipartite",
            EqualityCase::K22PlusK1 => "k22-union-k1",
            EqualityCase::None => "none",
        }
    }
}

/// Certificate found while checking a premise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
}

/// Outcome of checking one bound instance.
///
/// `slack` is the satisfaction margin: how far the measured side sits
/// inside the bound, so `slack >= 0` (up to tolerance for real bounds)
/// means the bound holds. `violation` is a negative margin with the
/// premises satisfied, and `equality` implies `premise_ok`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub premise_ok: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    /// True when both sides are integers and comparisons are exact.
    pub exact: bool,
    pub equality: bool,
    pub violation: bool,
    pub equality_case: EqualityCase,
    pub witness: Option<Witness>,
}

impl BoundReport {
    fn from_integer(premise_ok: bool, lhs: i64, rhs: i64, witness: Option<Witness>) -> Self {
        let slack = rhs - lhs;
        BoundReport {
            premise_ok,
            lhs: lhs as f64,
            rhs: rhs as f64,
            slack: slack as f64,
            exact: true,
            equality: premise_ok && slack == 0,
            violation: premise_ok && slack < 0,
            equality_case: EqualityCase::None,
            witness,
        }
    }

    fn from_real(
        premise_ok: bool,
        lhs: f64,
        rhs: f64,
        slack: f64,
        eps_eq: f64,
        witness: Option<Witness>,
    ) -> Self {
        BoundReport {
            premise_ok,
            lhs,
            rhs,
            slack,
            exact: false,
            equality: premise_ok && slack.abs() <= eps_eq,
            violation: premise_ok && slack < -eps_eq,
            equality_case: EqualityCase::None,
            witness,
        }
    }
}

/// Which forbidden structure defines the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenFamily {
    CycleFree,
    PathFree,
}

impl ForbiddenFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            ForbiddenFamily::CycleFree => "cycle-free",
            ForbiddenFamily::PathFree => "path-free",
        }
    }
}

/// Which spectral quantity the bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMode {
    /// Lower bound on the least adjacency eigenvalue.
    LeastEigenvalue,
    /// Upper bound on the spectral radius of a bipartite graph.
    BipartiteRadius,
}

impl BoundMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundMode::LeastEigenvalue => "least-eigenvalue",
            BoundMode::BipartiteRadius => "bipartite-radius",
        }
    }
}

// ============================================================================
// Edge-count bound for bipartite graphs without an endpoint-constrained
// path
// ============================================================================

/// The edge bound (k-1)|X| + k|Y| - k(k-1) for bipartite graphs with no
/// path on 2k+1 vertices having both endpoints in X.
pub fn edge_bound(x_size: usize, y_size: usize, k: usize) -> Result<i64, ExtremalError> {
    if k < 1 {
        return Err(ExtremalError::KOutOfRange { k });
    }
    if x_size < k || y_size + 1 < k {
        return Err(ExtremalError::InvalidBipartition);
    }
    Ok(edge_bound_raw(x_size, y_size, k))
}

fn edge_bound_raw(x_size: usize, y_size: usize, k: usize) -> i64 {
    let (x, y, k) = (x_size as i64, y_size as i64, k as i64);
    (k - 1) * x + k * y - k * (k - 1)
}

/// Checks the edge bound on `g` with the distinguished bipartition `bp`.
///
/// The premise is |X| >= k, |Y| >= k-1, and no path on 2k+1 vertices with
/// both endpoints in X; a found path is attached as the witness. At
/// equality the shape is complete bipartite with |X| = k or |Y| = k-1.
pub fn verify_edge_bound(
    g: &Graph,
    bp: &Bipartition,
    k: usize,
) -> Result<BoundReport, ExtremalError> {
    if k < 1 {
        return Err(ExtremalError::KOutOfRange { k });
    }
    if !bp.is_valid_for(g) {
        return Err(ExtremalError::InvalidBipartition);
    }
    let x = bp.x_side.count();
    let y = bp.y_side.count();
    let sizes_ok = x >= k && y + 1 >= k;
    let path = forbidden::find_path_with_endpoints_in(g, 2 * k + 1, bp.x_side);
    let premise_ok = sizes_ok && path.is_none();
    let lhs = g.edge_count() as i64;
    let rhs = edge_bound_raw(x, y, k);
    let mut report = BoundReport::from_integer(premise_ok, lhs, rhs, path.map(Witness::Path));
    if report.equality {
        report.equality_case = complete_bipartite_case(g.edge_count(), x, y, k);
    }
    Ok(report)
}

fn complete_bipartite_case(edges: usize, x: usize, y: usize, k: usize) -> EqualityCase {
    if edges != x * y {
        EqualityCase::None
    } else if x == k {
        EqualityCase::CompleteBipartiteKSide
    } else if y + 1 == k {
        EqualityCase::CompleteBipartiteKm1Side
    } else {
        EqualityCase::None
    }
}

// ============================================================================
// Local edge bound around a vertex
// ============================================================================

/// Checks the cross-edge bound e(N(u), N2(u)) <= (k-1)|N(u)| + k|N2(u)|
/// - k(k-1) at vertex `u`.
///
/// Global hypotheses are errors with witnesses: the graph must be
/// bipartite, must not contain a path on 2k+3 vertices, and must not have
/// a component isomorphic to K_{k+1,k+1}. The per-vertex premise recorded
/// in the report is |N(u)| >= k and |N2(u)| >= k-1, inherited from the
/// edge bound the claim reduces to; the bound can genuinely fail below
/// those sizes.
pub fn verify_local_edge_bound(
    g: &Graph,
    u: usize,
    k: usize,
) -> Result<BoundReport, ExtremalError> {
    if k < 1 {
        return Err(ExtremalError::KOutOfRange { k });
    }
    if u >= g.order() {
        return Err(ExtremalError::VertexOutOfRange { vertex: u, order: g.order() });
    }
    if let TwoColoring::NotBipartite { odd_closed_walk } = g.two_coloring() {
        return Err(ExtremalError::NotBipartite { odd_closed_walk });
    }
    if let Some(path) = forbidden::find_path(g, 2 * k + 3) {
        return Err(ExtremalError::PathPresent { path });
    }
    if let Some(component) = balanced_complete_component(g, k + 1)? {
        return Err(ExtremalError::ForbiddenComponent { component });
    }

    let shell1 = g.neighborhood_shell(u, 1).expect("u in range");
    let shell2 = g.neighborhood_shell(u, 2).expect("u in range");
    let s1 = shell1.count();
    let s2 = shell2.count();
    let premise_ok = s1 >= k && s2 + 1 >= k;
    let lhs = g.cross_edges(shell1, shell2).expect("shells are disjoint") as i64;
    let rhs = edge_bound_raw(s1, s2, k);
    let mut report = BoundReport::from_integer(premise_ok, lhs, rhs, None);
    if report.equality {
        report.equality_case = local_equality_case(g, shell1, shell2, k);
    }
    Ok(report)
}

/// A component isomorphic to K_{m,m}, if any.
fn balanced_complete_component(g: &Graph, m: usize) -> Result<Option<VertexSet>, ExtremalError> {
    let target = enumerate::canonical_code(
        &Graph::complete_bipartite(m, m).map_err(|_| ExtremalError::OrderTooLarge {
            n: 2 * m,
            max: crate::graph::MAX_VERTICES,
        })?,
    )
    .map_err(enum_to_extremal)?;
    for component in g.connected_components() {
        if component.count() != 2 * m {
            continue;
        }
        let induced = g.induced_subgraph(component).expect("component within g");
        if enumerate::canonical_code(&induced).map_err(enum_to_extremal)? == target {
            return Ok(Some(component));
        }
    }
    Ok(None)
}

fn enum_to_extremal(e: enumerate::EnumError) -> ExtremalError {
    match e {
        enumerate::EnumError::OrderTooLarge { n, max } => ExtremalError::OrderTooLarge { n, max },
        // Other enumeration errors cannot arise from canonical_code.
        _ => ExtremalError::OrderTooLarge { n: 0, max: 0 },
    }
}

/// Classifies the induced subgraph on N(u) and N2(u) at equality: either
/// complete bipartite with the size condition, or complete bipartite from
/// a k-subset plus one extra N(u)-vertex joined to exactly k-1 vertices of
/// N2(u).
fn local_equality_case(g: &Graph, shell1: VertexSet, shell2: VertexSet, k: usize) -> EqualityCase {
    let s1 = shell1.count();
    let s2 = shell2.count();
    let cross = g.cross_edges(shell1, shell2).expect("disjoint shells");
    let case_i = complete_bipartite_case(cross, s1, s2, k);
    if case_i != EqualityCase::None {
        return case_i;
    }
    // Case (ii): |N(u)| = k+1, one vertex of N(u) sees exactly k-1 of
    // N2(u), every other vertex of N(u) sees all of N2(u).
    if s1 == k + 1 {
        let mut full_rows = 0;
        let mut short_rows = 0;
        for v in shell1.iter() {
            let seen = g.neighbors(v).intersection(shell2).count();
            if seen == s2 {
                full_rows += 1;
            } else if seen == k - 1 {
                short_rows += 1;
            }
        }
        if full_rows == k && short_rows == 1 {
            return EqualityCase::NearCompleteBipartite;
        }
    }
    EqualityCase::None
}

// ============================================================================
// Walk-count row certificate
// ============================================================================

/// The certificate quantity |N(u)| + e(N(u), N2(u)) - k(n-k): the u-th row
/// sum of A^2 - k(n-k)I for triangle-free neighborhoods (in particular for
/// every bipartite graph). Nonpositivity over all vertices certifies the
/// radius bound; the all-zero case pins the extremal graph.
///
/// The walk-count identity against the explicit matrix row sum is asserted
/// on every call.
pub fn two_walk_excess(g: &Graph, u: usize, k: usize) -> Result<i64, ExtremalError> {
    let n = g.order();
    if u >= n {
        return Err(ExtremalError::VertexOutOfRange { vertex: u, order: n });
    }
    let shell1 = g.neighborhood_shell(u, 1).expect("u in range");
    let shell2 = g.neighborhood_shell(u, 2).expect("u in range");
    let cross = g.cross_edges(shell1, shell2).expect("disjoint shells") as i64;
    let shift = k as i64 * (n as i64 - k as i64);
    let excess = shell1.count() as i64 + cross - shift;

    // Row u of A^2 counts walks of length 2 from u; edges inside N(u)
    // contribute the correction term, which vanishes on bipartite graphs.
    let row_sum: i64 = (0..n)
        .map(|w| (g.neighbors(u).intersection(g.neighbors(w))).count() as i64)
        .sum();
    let inside: i64 = shell1
        .iter()
        .map(|v| g.neighbors(v).intersection(shell1).count() as i64)
        .sum::<i64>()
        / 2;
    assert_eq!(excess + 2 * inside, row_sum - shift, "walk-count identity");

    Ok(excess)
}

// ============================================================================
// Spectral bounds and extremal recognizers
// ============================================================================

enum BoundShape {
    /// Bound from the balanced complete bipartite graph.
    Balanced,
    /// Bound sqrt(k(n-k)) with the stated side size k.
    Split { k: usize },
}

fn cycle_shape(n: usize, t: usize) -> BoundShape {
    if t % 2 == 1 || n < t {
        BoundShape::Balanced
    } else {
        BoundShape::Split { k: (t - 2) / 2 }
    }
}

fn path_shape(n: usize, t: usize) -> BoundShape {
    if n < t {
        BoundShape::Balanced
    } else {
        BoundShape::Split { k: (t - 2) / 2 }
    }
}

fn shape_magnitude(n: usize, shape: &BoundShape) -> f64 {
    let product = match shape {
        BoundShape::Balanced => (n / 2) * n.div_ceil(2),
        BoundShape::Split { k } => k * (n - k),
    };
    libm::sqrt(product as f64)
}

/// Negates a bound magnitude, keeping zero positive.
fn negated(magnitude: f64) -> f64 {
    if magnitude == 0.0 {
        0.0
    } else {
        -magnitude
    }
}

/// Sharp lower bound on the least eigenvalue of a C_t-free graph of order
/// n: the negated balanced-bipartite radius when t is odd or n < t, else
/// -sqrt(k(n-k)) with k = (t-2)/2.
pub fn cycle_free_bound(n: usize, t: usize) -> Result<f64, ExtremalError> {
    if t < 3 {
        return Err(ExtremalError::CycleOrderTooSmall { t });
    }
    if n == 0 {
        return Err(ExtremalError::EmptyGraph);
    }
    Ok(negated(shape_magnitude(n, &cycle_shape(n, t))))
}

/// Sharp lower bound on the least eigenvalue of a P_t-free graph of order
/// n: the negated balanced-bipartite radius when n < t, else
/// -sqrt(k(n-k)) with k = floor((t-2)/2).
pub fn path_free_bound(n: usize, t: usize) -> Result<f64, ExtremalError> {
    if t < 2 {
        return Err(ExtremalError::PathOrderTooSmall { t });
    }
    if n == 0 {
        return Err(ExtremalError::EmptyGraph);
    }
    Ok(negated(shape_magnitude(n, &path_shape(n, t))))
}

fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, ExtremalError> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let a = enumerate::canonical_code(g).map_err(enum_to_extremal)?;
    let b = enumerate::canonical_code(h).map_err(enum_to_extremal)?;
    Ok(a == b)
}

fn classify_shape(g: &Graph, shape: &BoundShape) -> Result<EqualityCase, ExtremalError> {
    let n = g.order();
    match shape {
        BoundShape::Balanced => {
            let target = Graph::complete_bipartite(n / 2, n.div_ceil(2)).expect("n <= 62");
            Ok(if is_isomorphic(g, &target)? {
                EqualityCase::BalancedBipartite
            } else {
                EqualityCase::None
            })
        }
        BoundShape::Split { k } => {
            let target = Graph::complete_bipartite(*k, n - k).expect("n <= 62");
            Ok(if is_isomorphic(g, &target)? {
                EqualityCase::KkNminusK
            } else {
                EqualityCase::None
            })
        }
    }
}

/// Recognizes whether `g` is the extremal graph for the C_t-free bound at
/// its order.
pub fn classify_cycle_extremal(g: &Graph, t: usize) -> Result<EqualityCase, ExtremalError> {
    if t < 3 {
        return Err(ExtremalError::CycleOrderTooSmall { t });
    }
    classify_shape(g, &cycle_shape(g.order(), t))
}

/// Recognizes whether `g` is an extremal graph for the P_t-free bound at
/// its order; at (n, t) = (5, 5) both the split graph and K_{2,2} plus an
/// isolated vertex are accepted.
pub fn classify_path_extremal(g: &Graph, t: usize) -> Result<EqualityCase, ExtremalError> {
    if t < 2 {
        return Err(ExtremalError::PathOrderTooSmall { t });
    }
    let n = g.order();
    let shape = path_shape(n, t);
    let case = classify_shape(g, &shape)?;
    if case != EqualityCase::None {
        return Ok(case);
    }
    if n == 5 && t == 5 {
        let exceptional = Graph::complete_bipartite(2, 2)
            .expect("order 4")
            .disjoint_union(&Graph::empty(1).expect("order 1"))
            .expect("order 5");
        if is_isomorphic(g, &exceptional)? {
            return Ok(EqualityCase::K22PlusK1);
        }
    }
    Ok(EqualityCase::None)
}

/// Checks one spectral bound instance on `g`.
///
/// In least-eigenvalue mode the bound is a lower bound on the least
/// eigenvalue of any C_t-free (P_t-free) graph; in radius mode it is the
/// negated value as an upper bound on the spectral radius, and the graph
/// must be bipartite. Equality triggers the extremal recognizer.
pub fn verify_spectral_bound(
    g: &Graph,
    t: usize,
    family: ForbiddenFamily,
    mode: BoundMode,
    eps_eq: f64,
) -> Result<BoundReport, ExtremalError> {
    let n = g.order();
    if n == 0 {
        return Err(ExtremalError::EmptyGraph);
    }
    if mode == BoundMode::BipartiteRadius {
        if let TwoColoring::NotBipartite { odd_closed_walk } = g.two_coloring() {
            return Err(ExtremalError::NotBipartite { odd_closed_walk });
        }
    }
    let (magnitude, witness) = match family {
        ForbiddenFamily::CycleFree => {
            if t < 3 {
                return Err(ExtremalError::CycleOrderTooSmall { t });
            }
            let witness = forbidden::find_cycle(g, t).expect("t >= 3").map(Witness::Cycle);
            (shape_magnitude(n, &cycle_shape(n, t)), witness)
        }
        ForbiddenFamily::PathFree => {
            if t < 2 {
                return Err(ExtremalError::PathOrderTooSmall { t });
            }
            (shape_magnitude(n, &path_shape(n, t)), forbidden::find_path(g, t).map(Witness::Path))
        }
    };
    let premise_ok = witness.is_none();
    let spectrum = spectral::spectrum(g).expect("n >= 1");
    let (lhs, rhs, slack) = match mode {
        BoundMode::LeastEigenvalue => {
            let lhs = spectrum.least();
            let rhs = negated(magnitude);
            (lhs, rhs, lhs - rhs)
        }
        BoundMode::BipartiteRadius => {
            let lhs = spectrum.radius();
            let rhs = magnitude;
            (lhs, rhs, rhs - lhs)
        }
    };
    let mut report = BoundReport::from_real(premise_ok, lhs, rhs, slack, eps_eq, witness);
    if report.equality {
        report.equality_case = match family {
            ForbiddenFamily::CycleFree => classify_cycle_extremal(g, t)?,
            ForbiddenFamily::PathFree => classify_path_extremal(g, t)?,
        };
    }
    Ok(report)
}

// ============================================================================
// Bipartization
// ============================================================================

/// A spanning bipartite subgraph H with least eigenvalue at most that of
/// `g`: the edges crossing the sign partition of a least eigenvector
/// (zero entries count as nonnegative). Bipartite graphs come back
/// unchanged with their two-coloring.
pub fn spanning_bipartite_subgraph(g: &Graph) -> Result<(Graph, Bipartition), ExtremalError> {
    let n = g.order();
    if n == 0 {
        return Err(ExtremalError::EmptyGraph);
    }
    if let TwoColoring::Bipartite(bp) = g.two_coloring() {
        return Ok((g.clone(), bp));
    }
    let pairs = spectral::eigenpairs(g).expect("n >= 1");
    let least_vector = pairs.vectors.last().expect("n >= 1");
    let mut nonneg = VertexSet::EMPTY;
    for (v, &entry) in least_vector.iter().enumerate() {
        if entry >= 0.0 {
            nonneg = nonneg.with(v);
        }
    }
    let negative = g.vertex_set().difference(nonneg);
    let mut edges = Vec::new();
    for u in nonneg.iter() {
        for v in g.neighbors(u).intersection(negative).iter() {
            edges.push((u, v));
        }
    }
    let h = Graph::new(n, &edges).expect("edges within order");
    debug_assert!(
        spectral::least_eigenvalue(&h).expect("n >= 1")
            <= spectral::least_eigenvalue(g).expect("n >= 1") + EPS_EQ
    );
    Ok((h, Bipartition::new(nonneg, negative)))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k22_union_k1() -> Graph {
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        k22.disjoint_union(&Graph::empty(1).unwrap()).unwrap()
    }

    fn assert_close(a: f64, b: f64) {
        assert!((a - b).abs() <= 1e-9, "{a} vs {b}");
    }

    #[test]
    fn edge_bound_formula() {
        assert_eq!(edge_bound(3, 4, 2).unwrap(), 9);
        for y in 1..6 {
            assert_eq!(edge_bound(2, y, 2).unwrap(), 2 * y as i64);
        }
        assert_eq!(edge_bound(4, 0, 1).unwrap(), 0);
        assert!(edge_bound(1, 4, 2).is_err());
        assert!(edge_bound(3, 4, 0).is_err());
    }

    #[test]
    fn edge_bound_equality_on_k_side() {
        let g = Graph::complete_bipartite(2, 5).unwrap();
        let bp = Bipartition::new(VertexSet::full(2), VertexSet::from_bits(0b1111100));
        let r = verify_edge_bound(&g, &bp, 2).unwrap();
        assert!(r.premise_ok && r.equality && !r.violation);
        assert_eq!((r.lhs, r.rhs), (10.0, 10.0));
        assert_eq!(r.equality_case, EqualityCase::CompleteBipartiteKSide);
    }

    #[test]
    fn edge_bound_equality_on_km1_side() {
        // K_{4,1} with X the 4-side: e = 4 = 1*4 + 2*1 - 2.
        let g = Graph::complete_bipartite(4, 1).unwrap();
        let bp = Bipartition::new(VertexSet::full(4), VertexSet::singleton(4));
        let r = verify_edge_bound(&g, &bp, 2).unwrap();
        assert!(r.equality);
        assert_eq!(r.equality_case, EqualityCase::CompleteBipartiteKm1Side);
    }

    #[test]
    fn edge_bound_premise_fails_on_k33() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        let bp = g.bipartition().unwrap();
        let r = verify_edge_bound(&g, &bp, 2).unwrap();
        assert!(!r.premise_ok && !r.equality);
        match r.witness {
            Some(Witness::Path(p)) => {
                assert_eq!(p.len(), 5);
                assert!(bp.x_side.contains(p[0]) && bp.x_side.contains(p[4]));
            }
            other => panic!("expected a path witness, got {other:?}"),
        }
    }

    #[test]
    fn edge_bound_rejects_invalid_bipartition() {
        let g = Graph::complete(3).unwrap();
        let bp = Bipartition::new(VertexSet::full(2), VertexSet::singleton(2));
        assert_eq!(verify_edge_bound(&g, &bp, 1), Err(ExtremalError::InvalidBipartition));
    }

    #[test]
    fn local_bound_equality_case_i() {
        // u in the 4-side of K_{2,4}: N(u) is the 2-side, N2(u) the other
        // three 4-side vertices; 6 = 1*2 + 2*3 - 2.
        let g = Graph::complete_bipartite(2, 4).unwrap();
        let r = verify_local_edge_bound(&g, 2, 2).unwrap();
        assert!(r.premise_ok && r.equality);
        assert_eq!((r.lhs, r.rhs), (6.0, 6.0));
        assert_eq!(r.equality_case, EqualityCase::CompleteBipartiteKSide);
    }

    #[test]
    fn local_bound_star_center() {
        let g = Graph::complete_bipartite(1, 4).unwrap();
        let r = verify_local_edge_bound(&g, 0, 1).unwrap();
        assert!(r.equality);
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        assert_eq!(r.equality_case, EqualityCase::CompleteBipartiteKm1Side);
    }

    #[test]
    fn local_bound_rejects_balanced_component() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        match verify_local_edge_bound(&g, 0, 2) {
            Err(ExtremalError::ForbiddenComponent { component }) => {
                assert_eq!(component.count(), 6);
            }
            other => panic!("expected forbidden component, got {other:?}"),
        }
    }

    #[test]
    fn local_bound_rejects_long_path() {
        let g = Graph::path(7).unwrap();
        match verify_local_edge_bound(&g, 0, 2) {
            Err(ExtremalError::PathPresent { path }) => assert_eq!(path.len(), 7),
            other => panic!("expected path witness, got {other:?}"),
        }
    }

    #[test]
    fn local_bound_case_ii_fires() {
        // w-v1-u-v2: at u with k=1 the neighborhood graph is a single edge
        // plus the extra neighbor v2 joined to k-1 = 0 vertices.
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = verify_local_edge_bound(&g, 2, 1).unwrap();
        assert!(r.equality);
        assert_eq!(r.equality_case, EqualityCase::NearCompleteBipartite);
    }

    #[test]
    fn local_bound_small_neighborhoods_are_out_of_premise() {
        // A single edge plus k=2: the bound goes negative but the size
        // premise excuses it, so no violation is recorded.
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let r = verify_local_edge_bound(&g, 0, 2).unwrap();
        assert!(!r.premise_ok);
        assert!(r.slack < 0.0);
        assert!(!r.violation && !r.equality);
    }

    #[test]
    fn walk_certificate_values() {
        let g = Graph::complete_bipartite(2, 4).unwrap();
        assert_eq!(two_walk_excess(&g, 0, 2).unwrap(), 0);
        assert_eq!(two_walk_excess(&g, 2, 2).unwrap(), 0);
        assert_eq!(two_walk_excess(&Graph::empty(1).unwrap(), 0, 1).unwrap(), 0);
        assert!(two_walk_excess(&g, 9, 2).is_err());
    }

    #[test]
    fn walk_certificate_matches_matrix_arithmetic_with_triangles() {
        // The identity assertion also covers graphs with edges inside a
        // neighborhood.
        for g in [Graph::complete(4).unwrap(), Graph::cycle(5).unwrap()] {
            for u in g.vertices() {
                let _ = two_walk_excess(&g, u, 1).unwrap();
            }
        }
    }

    #[test]
    fn cycle_bound_values() {
        assert_close(cycle_free_bound(6, 6).unwrap(), -8.0f64.sqrt());
        assert_close(cycle_free_bound(6, 5).unwrap(), -3.0);
        assert_close(cycle_free_bound(3, 8).unwrap(), -2.0f64.sqrt());
        assert!(cycle_free_bound(6, 2).is_err());
    }

    #[test]
    fn cycle_recognizers() {
        let k24 = Graph::complete_bipartite(2, 4).unwrap();
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(classify_cycle_extremal(&k24, 6).unwrap(), EqualityCase::KkNminusK);
        assert_eq!(classify_cycle_extremal(&k33, 5).unwrap(), EqualityCase::BalancedBipartite);
        assert_eq!(classify_cycle_extremal(&k33, 6).unwrap(), EqualityCase::None);
    }

    #[test]
    fn path_bound_values() {
        assert_close(path_free_bound(5, 5).unwrap(), -2.0);
        assert_close(path_free_bound(4, 5).unwrap(), -2.0);
        assert_close(path_free_bound(6, 5).unwrap(), -5.0f64.sqrt());
        assert!(path_free_bound(4, 1).is_err());
    }

    #[test]
    fn path_recognizers() {
        let k14 = Graph::complete_bipartite(1, 4).unwrap();
        assert_eq!(classify_path_extremal(&k14, 5).unwrap(), EqualityCase::KkNminusK);
        assert_eq!(classify_path_extremal(&k22_union_k1(), 5).unwrap(), EqualityCase::K22PlusK1);
        // The exceptional shape is only accepted at (n, t) = (5, 5).
        assert_eq!(classify_path_extremal(&k22_union_k1(), 6).unwrap(), EqualityCase::None);
        let k15 = Graph::complete_bipartite(1, 5).unwrap();
        assert_eq!(classify_path_extremal(&k15, 5).unwrap(), EqualityCase::KkNminusK);
        let k22 = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(classify_path_extremal(&k22, 5).unwrap(), EqualityCase::BalancedBipartite);
    }

    #[test]
    fn spectral_bound_instances() {
        let k24 = Graph::complete_bipartite(2, 4).unwrap();
        let r = verify_spectral_bound(&k24, 6, ForbiddenFamily::CycleFree, BoundMode::LeastEigenvalue, EPS_EQ)
            .unwrap();
        assert!(r.premise_ok && r.equality && !r.violation);
        assert_eq!(r.equality_case, EqualityCase::KkNminusK);

        let c6 = Graph::cycle(6).unwrap();
        let r = verify_spectral_bound(&c6, 6, ForbiddenFamily::CycleFree, BoundMode::LeastEigenvalue, EPS_EQ)
            .unwrap();
        assert!(!r.premise_ok);
        assert!(matches!(r.witness, Some(Witness::Cycle(ref c)) if c.len() == 6));

        let r = verify_spectral_bound(
            &k22_union_k1(),
            5,
            ForbiddenFamily::PathFree,
            BoundMode::BipartiteRadius,
            EPS_EQ,
        )
        .unwrap();
        assert!(r.premise_ok && r.equality);
        assert_close(r.lhs, 2.0);
        assert_close(r.rhs, 2.0);
        assert_eq!(r.equality_case, EqualityCase::K22PlusK1);

        assert!(matches!(
            verify_spectral_bound(
                &Graph::complete(3).unwrap(),
                4,
                ForbiddenFamily::CycleFree,
                BoundMode::BipartiteRadius,
                EPS_EQ
            ),
            Err(ExtremalError::NotBipartite { .. })
        ));
    }

    #[test]
    fn bipartization_of_odd_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        let (h, bp) = spanning_bipartite_subgraph(&c5).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.edge_count(), 4);
        assert!(bp.is_valid_for(&h));
        // One edge removed leaves the path on five vertices.
        assert_eq!(
            enumerate::canonical_code(&h).unwrap(),
            enumerate::canonical_code(&Graph::path(5).unwrap()).unwrap()
        );
        let before = spectral::least_eigenvalue(&c5).unwrap();
        let after = spectral::least_eigenvalue(&h).unwrap();
        assert_close(before, -1.618033988749895);
        assert_close(after, -3.0f64.sqrt());
    }

    #[test]
    fn bipartization_fixes_bipartite_graphs() {
        let g = Graph::complete_bipartite(2, 4).unwrap();
        let (h, bp) = spanning_bipartite_subgraph(&g).unwrap();
        assert_eq!(h, g);
        assert!(bp.is_valid_for(&h));
    }

    #[test]
    fn bipartization_of_triangle() {
        let (h, _) = spanning_bipartite_subgraph(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(
            enumerate::canonical_code(&h).unwrap(),
            enumerate::canonical_code(&Graph::path(3).unwrap()).unwrap()
        );
        assert_close(spectral::least_eigenvalue(&h).unwrap(), -2.0f64.sqrt());
    }
}
