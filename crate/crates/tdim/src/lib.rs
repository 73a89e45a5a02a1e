//! Exact solvers for the metric dimension and the threshold dimension of
//! small graphs, together with the machinery to certify every answer.
//!
//! The toolkit is organised around a handful of ideas:
//!
//! * [`graph`] — immutable simple graphs on `0..n-1` with BFS distances,
//!   edge addition, complements, and bit-exact edge-list / graph6 I/O.
//! * [`metric`] — the exact metric dimension solver. Every positive answer
//!   comes with a [`metric::ResolvingCertificate`] listing the landmark
//!   distance vectors; several classical lower bounds are provided.
//! * [`tree`] — tree anatomy (major vertices, limbs, core) and the
//!   closed-form tree dimension with a constrained basis constructor.
//! * [`embedding`] — lattice embeddings into strong powers of paths under
//!   the Chebyshev metric, a verifier for landmark-resolved embeddings,
//!   and a complete backtracking search for their existence.
//! * [`threshold`] — the threshold dimension (minimum dimension over all
//!   edge additions) by two independent exact methods, plus the star-method
//!   upper-bound construction for trees.
//! * [`reduction`] — constructive edge additions that strictly reduce the
//!   dimension of a tree (one edge for dimension ≥ 3, two edges taking
//!   dimension 4 to 2), with mandatory re-verification.
//! * [`families`] — generators for the named graph families used throughout
//!   the test suite and packaged, verifier-checked lattice embeddings.
//! * [`enumerate`] — canonical free-tree enumeration and Prüfer decoding,
//!   used by the exhaustive sweeps.
//!
//! All solver output is deterministic: ties are broken lexicographically,
//! so certificates are byte-stable across runs and platforms.

pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod metric;
pub mod reduction;
pub mod threshold;
pub mod tree;

pub use error::Error;
pub use graph::{DistanceMatrix, Graph};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
