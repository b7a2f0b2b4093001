//! h-vectors of broken circuit complexes of graphic matroids, ear
//! decompositions of series-parallel networks, and the structural
//! classifications built on them.

pub mod bc;
pub mod classify;
pub mod ears;
pub mod error;
pub mod fixtures;
pub mod generator;
pub mod graph;
pub mod hvector;
pub mod io;
pub mod limits;
pub mod poly;
pub mod sp;
pub mod subdivision;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{edge_set, Edge, EdgeId, EdgeSet, Multigraph, VertexId};
pub use hvector::{DeltaVector, HVector};
pub use poly::{BigPolynomial, IntPolynomial, Poly};
