//! Exact detection of paths and cycles as (not necessarily induced)
//! subgraphs.
//!
//! The engine is a dynamic program over (visited-subset, last-vertex)
//! states: O(2^n * n^2) time and O(2^n) words, with an early exit once a
//! witness of the target order appears. Endpoint constraints filter the
//! seed and accept states. Cycle detection anchors each sweep at the
//! minimum vertex of the candidate cycle, which kills rotational and
//! reflective double counting.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

/// The subset DP is exponential in the order; campaigns stay at n <= 9 and
/// this cap is generous headroom.
const MAX_SEARCH_VERTICES: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenError {
    /// Cycles need at least three vertices.
    CycleOrderTooSmall { t: usize },
    /// The graph has no vertices.
    EmptyGraph,
}

impl fmt::Display for ForbiddenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenError::CycleOrderTooSmall { t } => {
                write!(f, "cycle order {t} is below the minimum of 3")
            }
            ForbiddenError::EmptyGraph => write!(f, "graph has no vertices"),
        }
    }
}

impl core::error::Error for ForbiddenError {}

fn check_order(n: usize) {
    assert!(
        n <= MAX_SEARCH_VERTICES,
        "path/cycle search is exponential; supported up to {MAX_SEARCH_VERTICES} vertices"
    );
}

/// Core DP: finds a path on exactly `t` vertices whose first vertex lies in
/// `starts` and whose last vertex lies in `ends`, restricted to the vertex
/// universe `allowed`. Returns the vertex sequence.
fn path_dp(g: &Graph, t: usize, starts: u64, ends: u64, allowed: u64) -> Option<Vec<usize>> {
    let n = g.order();
    check_order(n);
    if t == 0 || t > n {
        return None;
    }
    let starts = starts & allowed;
    let ends = ends & allowed;
    if t == 1 {
        return (starts & ends != 0).then(|| vec![(starts & ends).trailing_zeros() as usize]);
    }
    if starts == 0 || ends == 0 {
        return None;
    }

    let size = 1usize << n;
    let mut last = vec![0u64; size];
    for v in VertexSet::from_bits(starts).iter() {
        last[1 << v] = 1 << v;
    }
    for mask in 1..size as u64 {
        let reachable = last[mask as usize];
        if reachable == 0 {
            continue;
        }
        let len = mask.count_ones() as usize;
        if len == t {
            if reachable & ends != 0 {
                return Some(backtrack(g, &last, mask, reachable & ends));
            }
            continue;
        }
        for v in VertexSet::from_bits(reachable).iter() {
            let nexts = g.neighbors(v).bits() & !mask & allowed;
            for w in VertexSet::from_bits(nexts).iter() {
                last[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    None
}

/// Recovers one path for an accepting (mask, last) state by walking the DP
/// table backwards.
fn backtrack(g: &Graph, last: &[u64], mut mask: u64, accept: u64) -> Vec<usize> {
    let mut v = accept.trailing_zeros() as usize;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        let prev = last[mask as usize] & g.neighbors(v).bits();
        debug_assert_ne!(prev, 0, "DP state without predecessor");
        v = prev.trailing_zeros() as usize;
        path.push(v);
    }
    path.reverse();
    path
}

/// Whether `g` contains a path on `t` vertices.
pub fn has_path(g: &Graph, t: usize) -> bool {
    find_path(g, t).is_some()
}

/// A path on `t` vertices, if one exists.
pub fn find_path(g: &Graph, t: usize) -> Option<Vec<usize>> {
    let all = g.vertex_set().bits();
    path_dp(g, t, all, all, all)
}

/// Whether `g` contains a path on `t` vertices with both endpoints in `s`.
/// For t = 1 the single vertex counts as both endpoints.
pub fn has_path_with_endpoints_in(g: &Graph, t: usize, s: VertexSet) -> bool {
    find_path_with_endpoints_in(g, t, s).is_some()
}

/// A path on `t` vertices with both endpoints in `s`, if one exists.
pub fn find_path_with_endpoints_in(g: &Graph, t: usize, s: VertexSet) -> Option<Vec<usize>> {
    debug_assert!(s.is_subset_of(g.vertex_set()));
    path_dp(g, t, s.bits(), s.bits(), g.vertex_set().bits())
}

/// Whether `g` contains a cycle on exactly `t` vertices.
pub fn has_cycle(g: &Graph, t: usize) -> Result<bool, ForbiddenError> {
    Ok(find_cycle(g, t)?.is_some())
}

/// A cycle on exactly `t` vertices as a vertex sequence (the closing edge
/// back to the first vertex is implicit), if one exists.
pub fn find_cycle(g: &Graph, t: usize) -> Result<Option<Vec<usize>>, ForbiddenError> {
    if t < 3 {
        return Err(ForbiddenError::CycleOrderTooSmall { t });
    }
    let n = g.order();
    check_order(n);
    if t > n {
        return Ok(None);
    }
    for anchor in 0..n {
        // The anchor is the minimum vertex of the cycle, so only larger
        // vertices may participate.
        let universe = g.vertex_set().bits() & !((1u64 << anchor) - 1);
        let closing = g.neighbors(anchor).bits();
        if let Some(path) = path_dp(g, t, 1 << anchor, closing, universe) {
            debug_assert_eq!(path[0], anchor);
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Largest `t` such that `g` contains a path on `t` vertices; 1 for
/// edgeless graphs.
pub fn longest_path_order(g: &Graph) -> Result<usize, ForbiddenError> {
    let n = g.order();
    if n == 0 {
        return Err(ForbiddenError::EmptyGraph);
    }
    check_order(n);
    let size = 1usize << n;
    let mut last = vec![0u64; size];
    for v in 0..n {
        last[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1..size as u64 {
        let reachable = last[mask as usize];
        if reachable == 0 {
            continue;
        }
        let len = mask.count_ones() as usize;
        if len > best {
            best = len;
        }
        for v in VertexSet::from_bits(reachable).iter() {
            let nexts = g.neighbors(v).bits() & !mask;
            for w in VertexSet::from_bits(nexts).iter() {
                last[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(best)
}

// ============================================================================
// Tests
// ============================================================================
