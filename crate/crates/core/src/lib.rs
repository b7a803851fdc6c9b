//! Exact toolkit for sharp spectral bounds on graphs without given paths
//! or cycles.
//!
//! The crate provides the pieces needed to state, check, and explore those
//! bounds at desk scale:
//!
//! - [`graph`]: immutable simple graphs on up to 62 vertices, one adjacency
//!   bitset per vertex, plus bipartition and component machinery.
//! - [`graph6`]: the bit-exact short-form graph6 codec.
//! - [`spectral`]: a deterministic cyclic-Jacobi eigensolver for adjacency
//!   matrices (full spectrum, least eigenvalue, spectral radius, Perron
//!   vector).
//! - [`forbidden`]: exact subgraph-path and cycle detection by subset
//!   dynamic programming, including the endpoint-constrained variant.
//! - [`extremal`]: the bound formulas, per-instance verifiers with
//!   equality-case recognizers, the walk-count row certificate, and the
//!   eigenvector sign-partition bipartization.
//! - [`enumerate`]: canonical forms and exhaustive generation of
//!   non-isomorphic graphs (general and bipartite with distinguished
//!   sides), and extremal search over forbidden-subgraph families.
//!
//! All operations are pure functions over immutable values and are safe to
//! call from multiple threads. The crate is `no_std` (with `alloc`); IO and
//! the command-line front end live in the companion `sek-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enumerate;
pub mod extremal;
pub mod forbidden;
pub mod graph;
pub mod graph6;
pub mod spectral;

pub use graph::{Bipartition, Graph, GraphError, TwoColoring, VertexSet, MAX_VERTICES};
