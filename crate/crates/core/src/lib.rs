//! Exact spectral analysis of signed graphs through the net Laplacian
//! `L± = D± − A`, where `D±` holds net-degrees (positive minus negative
//! neighbours) and `A` is the signed adjacency matrix.
//!
//! The crate computes nullity, rank and inertia exactly with arbitrary
//! precision integers, obtains characteristic polynomial coefficients two
//! independent ways (Berkowitz's division-free recurrence and a signed
//! spanning-forest sum), and checks the structural nullity results for trees,
//! unicyclic graphs, cacti and complete joins on constructed, random and
//! exhaustively enumerated graphs.
//!
//! ```
//! use netlap::{exactalg, SignedGraph};
//!
//! // K2 joined to K2 by negative edges has nullity n - 1.
//! let g = SignedGraph::complete_join_neg(2).unwrap();
//! assert_eq!(exactalg::nullity(&g), 3);
//! ```
//!
//! With the default `parallel` feature the sweeps fan out over rayon; without
//! it every code path runs sequentially.

pub mod error;
pub mod exactalg;
pub mod forests;
pub mod generate;
pub mod graph;
pub mod matrix;
pub mod parallel;
pub mod search;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use exactalg::{CharPoly, Inertia, SpectralSummary};
pub use graph::{Edge, EdgeRef, Sign, SignedGraph};
pub use matrix::IntMatrix;
pub use parallel::Execution;
