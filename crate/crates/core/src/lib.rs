//! Grassmannians of half-dimensional subspaces over small prime fields.
//!
//! G is the set of n-dimensional subspaces of V = GF(p)^{2n}, p ∈ {2, 3, 5, 7}.
//! Two elements are *adjacent* when they meet in an (n-1)-subspace and
//! *distant* when they are complementary. The crate builds both graphs and
//! verifies, exhaustively at small (p, n), the structure around them:
//!
//! - [`gf`] and [`subspace`]: matrices over GF(p), canonical (RREF) subspaces,
//!   enumeration by pivot profile.
//! - [`grassmann`]: the index of G with both relations as bit-rows, stars,
//!   tops and pencils, graph metrics, adjacency recovered from distance, and
//!   permutations induced by linear maps and the duality.
//! - [`ringline`]: the projective line over M_n(GF(p)), the bijection onto G
//!   for a frame (U, U′, λ), the action of GL(2, M_n(GF(p))) and Z-chains.
//! - [`reguli`]: reguli from frames and from triples, directrices, the regulus
//!   predicates and their characterization in the distant graph.
//! - [`harness`]: named verification suites with JSON and text reports, and
//!   an on-disk index cache. The `grasslab` binary is a thin CLI over it.
//!
//! Runnable examples live in `examples/`: `field_linear_algebra`,
//! `enumerate_grassmannian`, `cliques_and_pencils`, `distant_graph`,
//! `ring_line`, `reguli`, `lemma_sweeps`, `automorphisms` and
//! `verification_report`.
//!
//! ```
//! use grasslab::grassmann::{build_index, maximal_adjacency_cliques};
//!
//! let g = build_index(2, 2)?;
//! assert_eq!(g.len(), 35);
//! assert_eq!(maximal_adjacency_cliques(&g).len(), 30);
//! # Ok::<(), grasslab::Error>(())
//! ```

pub mod error;
pub mod gf;
pub mod grassmann;
pub mod harness;
pub mod reguli;
pub mod ringline;
pub mod subspace;

pub use error::{Error, Result};
pub use gf::{Field, FpMatrix, Rref};
pub use subspace::{enumerate_subspaces, gaussian_binomial, PointTable, Subspace};
