//! Fixtures shared by the benchmarks.

use lapctl_core::{build_generalized_path, BlockLayout, ControlSetup, SymmetricMatrix};

/// Generalized path with the designated input.
pub fn generalized_path(k: usize, n: usize) -> ControlSetup {
    build_generalized_path(&BlockLayout::new(k, n, false).expect("valid layout"))
        .expect("builders succeed on valid layouts")
}

pub fn laplacian_of(k: usize, n: usize) -> SymmetricMatrix {
    generalized_path(k, n).laplacian()
}

/// `(x₀, x_f) = (−20·1, 20·1)` for a system with `v` states.
pub fn consensus_endpoints(v: usize) -> (Vec<f64>, Vec<f64>) {
    (vec![-20.0; v], vec![20.0; v])
}
