use serde::Serialize;

use super::ControlSetup;
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, SymmetricMatrix};
use crate::spectral::eigh;

/// Below this magnitude `λ_i + λ_j` counts as zero in [`phi`].
const PHI_ZERO: f64 = 1e-12;

/// `∫₀ᵗ e^{−sτ} dτ = (1 − e^{−st})/s`, equal to `t` at `s = 0`.
pub fn phi(s: f64, t: f64) -> f64 {
    if s.abs() > PHI_ZERO {
        -(-s * t).exp_m1() / s
    } else {
        t
    }
}

/// Controllability Gramian in the eigenbasis of `𝓛`:
/// `M_ij = c_i c_j φ(λ_i + λ_j, t₁)` with `c = Vᵀb`.
pub fn modal_gramian(eigenvalues: &[f64], c: &[f64], t1: f64) -> SymmetricMatrix {
    let n = eigenvalues.len();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            m.set(
                i,
                j,
                coupling(c[i], c[j], 1.0, eigenvalues[i] + eigenvalues[j], t1),
            );
        }
    }
    m
}

/// `((c_i·c_j)·e)·φ(s, t)`: the one place modal couplings are formed, so the
/// steering trajectory at `t = t₁` reproduces the Gramian entries bit for bit.
#[inline]
pub(crate) fn coupling(ci: f64, cj: f64, e: f64, s: f64, t: f64) -> f64 {
    ((ci * cj) * e) * phi(s, t)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GramianResult {
    pub horizon: f64,
    #[serde(skip)]
    pub gramian: SymmetricMatrix,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
    /// `ℓ_max / ℓ_min` of `W`; infinite when `W` is singular.
    pub condition: f64,
}

/// `W(t₁) = ∫₀^{t₁} e^{−𝓛τ} b bᵀ e^{−𝓛τ} dτ = V M Vᵀ`, symmetrized.
pub fn gramian(setup: &ControlSetup, t1: f64) -> Result<GramianResult> {
    if !(t1 > 0.0 && t1.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "horizon must be positive, got {t1}"
        )));
    }
    let spec = eigh(&setup.laplacian())?;
    let c = spec.eigenvectors.transpose_mul_vec(&setup.b());
    let m = modal_gramian(&spec.eigenvalues, &c, t1);
    let v = &spec.eigenvectors;
    let w: DenseMatrix = v.matmul(m.as_dense()).matmul(&v.transpose());
    let gramian = SymmetricMatrix::symmetrize(&w);

    let ev = eigh(&gramian)?.eigenvalues;
    let min_eigenvalue = ev[0];
    let max_eigenvalue = ev[ev.len() - 1];
    let condition = if min_eigenvalue > 0.0 {
        max_eigenvalue / min_eigenvalue
    } else {
        f64::INFINITY
    };
    Ok(GramianResult {
        horizon: t1,
        gramian,
        min_eigenvalue,
        max_eigenvalue,
        condition,
    })
}
