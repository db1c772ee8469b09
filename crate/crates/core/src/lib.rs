//! Generalized paths built from chained antiregular graphs: construction,
//! Laplacian spectra with closed-form cross-checks, single-input
//! controllability and minimum-energy steering.

pub mod control;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod spectral;

pub use control::{
    gramian, kalman_rank_oracle, min_energy_control, pbh_controllable, simulate_autonomous,
    verify_append_vertex, ControlSetup, ControllabilityVerdict, GramianResult, TrajectoryResult,
};
pub use error::{Error, Result};
pub use graph::{
    build_antiregular, build_generalized_path, build_path, interconnect_antiregular, laplacian,
    BlockLayout, Graph,
};
pub use matrix::{DenseMatrix, SymmetricMatrix};
pub use spectral::{eigh, SpectralDecomposition, TheoremReport};
