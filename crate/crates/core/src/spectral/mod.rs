//! Dense symmetric eigensolver, the closed-form antiregular eigenbasis and
//! numerical checkers for the spectral inequalities.

mod antiregular;
mod checks;
mod eigen;
mod report;

pub use antiregular::{
    antiregular_eigenvectors, antiregular_spectrum, connector, interconnection_laplacian,
    structured_candidates, structured_eigenvector_report, structured_eigenvectors,
    AntiregularEigenbasis, StructuredEigenpair, STRUCTURED_RESIDUAL_TOL,
};
pub use checks::{
    check_anchoring, check_distinct, check_eigenvector_entries, check_grone_merris,
    check_interlacing, check_weyl, min_gap, GroneMerris, DISTINCT_REL_TOL, EIGEN_TOL,
};
pub use eigen::{eigh, SpectralDecomposition};
pub use report::{Margin, Relation, TheoremReport};
