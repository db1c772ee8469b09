use serde::Serialize;

use super::ControlSetup;
use crate::error::{Error, Result};
use crate::graph::{append_vertex, max_degree};
use crate::matrix::{dot, norm2};
use crate::spectral::{
    check_eigenvector_entries, eigh, min_gap, Margin, Relation, SpectralDecomposition,
    TheoremReport,
};

/// Threshold on `|v_iᵀ b|` and on relative eigenvalue gaps.
pub const PBH_TOL: f64 = 1e-8;
/// The Krylov oracle refuses larger graphs.
pub const KALMAN_MAX_VERTICES: usize = 12;
/// Relative breakdown threshold of the Krylov oracle.
const KRYLOV_TOL: f64 = 1e-7;

/// An eigenvector orthogonal (within tolerance) to the control vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// 1-based position in the ascending spectrum.
    pub index: usize,
    pub eigenvalue: f64,
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ControllabilityVerdict {
    pub controllable: bool,
    pub distinct_eigenvalues: bool,
    /// Smallest gap between consecutive eigenvalues.
    pub min_gap: f64,
    /// `min_i |v_iᵀ b|`.
    pub min_abs_projection: f64,
    pub tolerance: f64,
    pub witness: Option<Witness>,
}

/// PBH test: `(𝓛, b)` is controllable iff no eigenvector of `𝓛` is
/// orthogonal to `b`.
///
/// With a single input, an eigenvalue of multiplicity two or more always has
/// an eigenvector orthogonal to `b`, so a gap below `tol·max(1, ℓ_max)`
/// settles the verdict; the witness is then built inside that eigenspace.
pub fn pbh_controllable(setup: &ControlSetup, tol: f64) -> Result<ControllabilityVerdict> {
    if !setup.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = eigh(&setup.laplacian())?;
    Ok(verdict_from_decomposition(&spec, setup.input_vertex(), tol))
}

/// PBH verdict for an already decomposed Laplacian.
pub fn verdict_from_decomposition(
    spec: &SpectralDecomposition,
    input_vertex: usize,
    tol: f64,
) -> ControllabilityVerdict {
    let row = input_vertex - 1;
    let n = spec.order();
    let projections: Vec<f64> = (0..n).map(|i| spec.eigenvectors[(row, i)]).collect();
    let (weakest, min_abs_projection) = projections
        .iter()
        .map(|p| p.abs())
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((0, f64::INFINITY));

    let scale = spec.eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
    let (gap_at, gap) = min_gap(&spec.eigenvalues).unwrap_or((0, f64::INFINITY));
    let distinct_eigenvalues = gap > tol * scale;

    let witness = if !distinct_eigenvalues {
        // x = (wᵀb)u − (uᵀb)w lies in span{u, w} and is orthogonal to b.
        let (i, j) = (gap_at - 1, gap_at);
        let (u, w) = (spec.vector(i), spec.vector(j));
        let (pu, pw) = (projections[i], projections[j]);
        let mut x: Vec<f64> = u.iter().zip(&w).map(|(a, b)| pw * a - pu * b).collect();
        let norm = norm2(&x);
        if norm > 1e-300 {
            x.iter_mut().for_each(|v| *v /= norm);
        } else {
            x = u;
        }
        Some(Witness {
            index: gap_at,
            eigenvalue: 0.5 * (spec.eigenvalues[i] + spec.eigenvalues[j]),
            vector: x,
        })
    } else if !(min_abs_projection > tol) {
        Some(Witness {
            index: weakest + 1,
            eigenvalue: spec.eigenvalues[weakest],
            vector: spec.vector(weakest),
        })
    } else {
        None
    };

    ControllabilityVerdict {
        controllable: witness.is_none(),
        distinct_eigenvalues,
        min_gap: gap,
        min_abs_projection,
        tolerance: tol,
        witness,
    }
}

/// Dimension of the Krylov space `span{b, 𝓛b, 𝓛²b, …}`.
///
/// Built by Arnoldi with two passes of full reorthogonalization; the rank is
/// the number of steps taken before the new direction's norm falls below
/// `1e−7` times the Gershgorin bound `2·max degree` (floored at 1). No
/// eigendecomposition is involved.
pub fn krylov_rank(setup: &ControlSetup) -> Result<usize> {
    let v = setup.num_vertices();
    if v > KALMAN_MAX_VERTICES {
        return Err(Error::OracleTooLarge(v));
    }
    let l = setup.laplacian();
    let scale = (2.0 * max_degree(setup.graph()) as f64).max(1.0);
    let mut basis: Vec<Vec<f64>> = vec![setup.b()];
    while basis.len() < v {
        let mut w = l.mul_vec(basis.last().expect("basis is never empty"));
        for _ in 0..2 {
            for q in &basis {
                let h = dot(q, &w);
                w.iter_mut().zip(q).for_each(|(x, y)| *x -= h * y);
            }
        }
        let h = norm2(&w);
        if h <= KRYLOV_TOL * scale {
            break;
        }
        w.iter_mut().for_each(|x| *x /= h);
        basis.push(w);
    }
    Ok(basis.len())
}

/// Kalman rank condition `rank [b, 𝓛b, …, 𝓛^{v−1}b] = v`, evaluated through
/// [`krylov_rank`]. Refuses graphs with more than 12 vertices.
pub fn kalman_rank_oracle(setup: &ControlSetup) -> Result<bool> {
    Ok(krylov_rank(setup)? == setup.num_vertices())
}

/// Hangs a new vertex on the (controllable) input vertex, moves the input
/// there and checks that every eigenvector of the enlarged Laplacian has a
/// nonzero entry at the new vertex and that the spectrum stays simple.
pub fn verify_append_vertex(setup: &ControlSetup, tol: f64) -> Result<TheoremReport> {
    if !pbh_controllable(setup, tol)?.controllable {
        return Err(Error::Uncontrollable(setup.input_vertex()));
    }
    let g = append_vertex(setup.graph(), setup.input_vertex())?;
    let new_vertex = g.num_vertices();
    let appended = ControlSetup::new(g, new_vertex)?;
    let spec = eigh(&appended.laplacian())?;
    let verdict = verdict_from_decomposition(&spec, new_vertex, tol);

    let mut margins = check_eigenvector_entries(&spec, &[new_vertex], tol)?.margins;
    let scale = spec.eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
    margins.push(Margin::new(
        "minimum eigenvalue gap",
        verdict.min_gap,
        Relation::Above,
        tol * scale,
    ));
    let report = TheoremReport::from_margins("append_vertex", tol, margins);
    debug_assert_eq!(report.passed, verdict.controllable);
    Ok(report)
}
