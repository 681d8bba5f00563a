//! Local spectra of vertex sets in connected graphs, their predistance
//! polynomials, and recognition of completely pseudo-regular codes.
//!
//! The usual entry point is [`code::analyze`], which runs the combinatorial
//! test on the ν-weighted intersection functions and the three spectral tests
//! (predistance polynomials on the subconstituents, projection collinearity
//! with the antipodal set, spectral excess), then cross-checks their verdicts.

pub mod batch;
pub mod cli;
pub mod code;
pub mod config;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod local;
mod par;
pub mod poly;

pub use code::{analyze, Analysis, CodeReport, Overall};
pub use config::Config;
pub use eigen::{apply_polynomial, spectral_decomposition, Spectrum};
pub use error::{Error, Result};
pub use graph::{distance_partition, generate, load_graph, DistancePartition, Graph, VertexSet};
pub use local::{local_spectrum, rho_vector, LocalSpectrum};
pub use poly::{predistance_polynomials, Polynomial, PredistanceSystem};
