//! Single-input Laplacian controllability of `ẋ = −𝓛x + b u`: the PBH test,
//! an independent Krylov oracle, the controllability Gramian and
//! minimum-energy steering.

mod fig2;
mod gramian;
mod pbh;
mod setup;
mod steering;

pub use fig2::{fig2_comparison, fig2_systems, Fig2Comparison, Fig2Entry, FIG2_DEFAULT_HORIZON};
pub use gramian::{gramian, modal_gramian, phi, GramianResult};
pub use pbh::{
    kalman_rank_oracle, krylov_rank, pbh_controllable, verdict_from_decomposition,
    verify_append_vertex, ControllabilityVerdict, Witness, KALMAN_MAX_VERTICES, PBH_TOL,
};
pub use setup::ControlSetup;
pub use steering::{
    min_energy_control, min_energy_control_with, simulate_autonomous, SteeringOptions,
    TrajectoryResult,
};
