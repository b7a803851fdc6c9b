//! Deterministic dense symmetric eigensolver over adjacency matrices.
//!
//! The solver is cyclic Jacobi: plane rotations in a fixed sweep order
//! until every off-diagonal magnitude drops below 1e-12. That is slower
//! than LAPACK but dependency-free, bit-reproducible across runs, and
//! plenty accurate at order 62; the reported tolerance is 1e-10.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Absolute eigenvalue tolerance reported by the solver.
pub const SOLVER_TOL: f64 = 1e-10;

/// Sweep termination threshold on off-diagonal magnitudes.
const OFF_DIAGONAL_LIMIT: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// The graph has no vertices.
    EmptyGraph,
    /// The operation is defined for connected graphs only.
    Disconnected,
    /// The operation is defined for bipartite graphs only.
    NotBipartite,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::EmptyGraph => write!(f, "graph has no vertices"),
            SpectralError::Disconnected => write!(f, "graph is not connected"),
            SpectralError::NotBipartite => write!(f, "graph is not bipartite"),
        }
    }
}

impl core::error::Error for SpectralError {}

// ============================================================================
// Result types
// ============================================================================

/// The full adjacency spectrum, sorted in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Least eigenvalue (last in descending order).
    pub fn least(&self) -> f64 {
        *self.values.last().expect("spectrum of a nonempty graph")
    }

    /// Largest modulus of an eigenvalue; for adjacency matrices this equals
    /// the largest eigenvalue.
    pub fn radius(&self) -> f64 {
        let first = self.values[0].abs();
        let last = self.least().abs();
        if first >= last {
            first
        } else {
            last
        }
    }
}

/// Spectral radius together with the positive unit eigenvector of a
/// connected graph.
#[derive(Clone, Debug, PartialEq)]
pub struct PerronData {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// All eigenpairs, values descending; `vectors[i]` is a unit eigenvector
/// for `values[i]`. Ties keep the solver's deterministic column order.
#[derive(Clone, Debug)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

// ============================================================================
// Jacobi
// ============================================================================

/// Rotates the symmetric matrix `a` (row-major, n x n) to diagonal form,
/// accumulating the rotations into `v`.
fn jacobi(a: &mut [f64], v: &mut [f64], n: usize) {
    for i in 0..n {
        for j in 0..n {
            v[i * n + j] = if i == j { 1.0 } else { 0.0 };
        }
    }
    if n < 2 {
        return;
    }
    for _sweep in 0..MAX_SWEEPS {
        let mut max_off = 0.0f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() > max_off {
                    max_off = apq.abs();
                }
            }
        }
        if max_off <= OFF_DIAGONAL_LIMIT {
            return;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= OFF_DIAGONAL_LIMIT / (n * n) as f64 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    // Avoid overflow in theta^2; the rotation is tiny.
                    1.0 / (2.0 * theta)
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = a[p * n + p];
                let aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = aip - s * (aiq + tau * aip);
                    a[i * n + q] = aiq + s * (aip - tau * aiq);
                    a[p * n + i] = a[i * n + p];
                    a[q * n + i] = a[i * n + q];
                }
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = vip - s * (viq + tau * vip);
                    v[i * n + q] = viq + s * (vip - tau * viq);
                }
            }
        }
    }
    // Quadratic convergence makes the cap unreachable for n <= 62.
    panic!("Jacobi sweep cap exceeded");
}

fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            a[u * n + v] = 1.0;
        }
    }
    a
}

/// Full eigendecomposition of the adjacency matrix, values descending.
/// Equal values keep the solver's deterministic internal order, so the
/// output is identical across runs.
pub fn eigenpairs(g: &Graph) -> Result<EigenPairs, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let mut a = adjacency_matrix(g);
    let mut v = vec![0.0f64; n * n];
    jacobi(&mut a, &mut v, n);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));

    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
        .collect();
    Ok(EigenPairs { values, vectors })
}

/// All `n` adjacency eigenvalues, sorted descending, accurate to
/// [`SOLVER_TOL`].
pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    let pairs = eigenpairs(g)?;
    let spectrum = Spectrum { values: pairs.values, tol: SOLVER_TOL };
    debug_assert!(spectrum_identities_hold(g, &spectrum));
    Ok(spectrum)
}

/// Trace and Frobenius identities: the eigenvalues sum to zero and their
/// squares sum to twice the edge count, both within `n * tol`.
pub fn spectrum_identities_hold(g: &Graph, s: &Spectrum) -> bool {
    let n = g.order() as f64;
    let sum: f64 = s.values().iter().sum();
    let sq_sum: f64 = s.values().iter().map(|v| v * v).sum();
    s.values().len() == g.order()
        && sum.abs() <= n * s.tol()
        && (sq_sum - 2.0 * g.edge_count() as f64).abs() <= n * s.tol()
}

/// Minimum adjacency eigenvalue; for disconnected graphs this is the
/// minimum over components.
pub fn least_eigenvalue(g: &Graph) -> Result<f64, SpectralError> {
    Ok(spectrum(g)?.least())
}

/// Largest modulus of an adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64, SpectralError> {
    Ok(spectrum(g)?.radius())
}

/// The Perron pair of a connected graph: the spectral radius and its unit
/// eigenvector, sign-fixed so entry 0 is nonnegative.
pub fn perron_vector(g: &Graph) -> Result<PerronData, SpectralError> {
    if g.order() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let pairs = eigenpairs(g)?;
    let value = pairs.values[0];
    let mut vector = pairs.vectors[0].clone();
    if vector[0] < 0.0 {
        for x in vector.iter_mut() {
            *x = -*x;
        }
    }
    Ok(PerronData { value, vector })
}

/// True when the least eigenvalue is the negated spectral radius, within
/// `100 * tol`. Holds for every bipartite graph; requires bipartite input.
pub fn check_bipartite_negation(g: &Graph) -> Result<bool, SpectralError> {
    if !g.is_bipartite() {
        return Err(SpectralError::NotBipartite);
    }
    if g.order() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let s = spectrum(g)?;
    Ok((s.least() + s.radius()).abs() <= 100.0 * s.tol())
}

// ============================================================================
// Tests
// ============================================================================
