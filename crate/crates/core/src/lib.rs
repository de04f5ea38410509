//! Line digraphs: construction, iteration and recognition, 1-factorizations
//! of regular digraphs, exact spectral checks, coined quantum walks whose
//! support is a line digraph, and dihedral Cayley examples.

pub mod cayley;
pub mod digraph;
pub mod error;
pub mod factorization;
pub mod iso;
pub mod line;
pub mod matrix;
pub mod random;
pub mod report;
pub mod spectral;
pub mod verify;
pub mod walk;

pub use digraph::{families, Arc, Digraph, MultiDigraph};
pub use error::{Error, Result};
pub use factorization::{Factorization, OneFactor};
pub use line::{line_digraph, ArcLabeledDigraph};
pub use matrix::{IntMatrix, RatMatrix};
pub use report::{Assertion, Report, Status};
