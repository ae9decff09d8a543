//! Exact Laplacian coefficients of graphs, the balanced starlike unicyclic
//! families, coefficient-decreasing transformations, and exhaustive checks
//! of minimality in the coefficient poset of unicyclic graphs.

pub mod canon;
#[cfg(feature = "cli")]
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod forest;
pub mod graph;
pub mod io;
pub mod poset;
pub mod spectra;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{classify, Graph, StructuralReport};
