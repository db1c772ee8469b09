//! Closed-form spectral data of antiregular graphs and of their chained
//! interconnection.

use serde::Serialize;

use super::report::{Margin, Relation, TheoremReport};
use crate::error::{Error, Result};
use crate::graph::{build_antiregular, conjugate, degree_sequence, laplacian, BlockLayout};
use crate::matrix::{inf_norm, norm2, DenseMatrix, SymmetricMatrix};

/// Residual bound for the structured eigenvectors of the interconnection.
pub const STRUCTURED_RESIDUAL_TOL: f64 = 1e-8;

/// `{0, 1, …, k} \ {⌈k/2⌉}`, ascending.
pub fn antiregular_spectrum(k: usize) -> Result<Vec<usize>> {
    let layout = BlockLayout::new(k, 1, false)?;
    Ok((0..=k).filter(|&x| x != layout.kappa_upper()).collect())
}

/// Eigenvectors of the `k`-vertex antiregular Laplacian obtained by direct
/// column manipulation of the Laplacian itself.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiregularEigenbasis {
    /// Eigenvalue of each column, largest first (the conjugate degree sequence).
    pub eigenvalues: Vec<usize>,
    /// Unnormalized, mutually orthogonal eigenvectors; the last column is all ones.
    pub vectors: DenseMatrix,
}

impl AntiregularEigenbasis {
    /// Unit eigenvector for the `a`-th smallest eigenvalue (zero-based).
    pub fn unit_ascending(&self, a: usize) -> Vec<f64> {
        let k = self.eigenvalues.len();
        let mut v = self.vectors.column(k - 1 - a);
        let norm = norm2(&v);
        v.iter_mut().for_each(|x| *x /= norm);
        v
    }
}

/// Builds the eigenvectors column by column:
///
/// 1. start from the Laplacian;
/// 2. replace each strictly-upper entry `t` by `−1 − t`;
/// 3. reset each diagonal entry to minus the sum of the rest of its column;
/// 4. drop the single all-zero column and append the all-ones column.
///
/// Column `j` then belongs to the `j`-th largest eigenvalue, which equals the
/// `j`-th entry of the conjugate degree sequence.
pub fn antiregular_eigenvectors(k: usize) -> Result<AntiregularEigenbasis> {
    let g = build_antiregular(k)?;
    let mut t = laplacian(&g).into_dense();

    for i in 0..k {
        for j in (i + 1)..k {
            t[(i, j)] = -1.0 - t[(i, j)];
        }
    }
    for j in 0..k {
        let off: f64 = (0..k).filter(|&i| i != j).map(|i| t[(i, j)]).sum();
        t[(j, j)] = -off;
    }

    let zero_columns: Vec<usize> = (0..k)
        .filter(|&j| (0..k).all(|i| t[(i, j)] == 0.0))
        .collect();
    let [zero] = zero_columns[..] else {
        return Err(Error::Construction(format!(
            "expected exactly one zero column, found {}",
            zero_columns.len()
        )));
    };

    let mut columns: Vec<Vec<f64>> = (0..k).filter(|&j| j != zero).map(|j| t.column(j)).collect();
    columns.push(vec![1.0; k]);

    let eigenvalues = conjugate(&degree_sequence(&g)).values().to_vec();
    Ok(AntiregularEigenbasis {
        eigenvalues,
        vectors: DenseMatrix::from_columns(&columns)?,
    })
}

/// Connector `z_i = e_{ik} − e_{ik+⌈k/2⌉}` (i is 1-based), as a dense vector.
pub fn connector(layout: &BlockLayout, i: usize) -> Vec<f64> {
    let mut z = vec![0.0; layout.k() * layout.n()];
    z[i * layout.k() - 1] = 1.0;
    z[i * layout.k() + layout.kappa_upper() - 1] = -1.0;
    z
}

/// `I_n ⊗ L_A + Σ z_i z_iᵀ`, assembled from the block formula rather than
/// from the graph.
pub fn interconnection_laplacian(layout: &BlockLayout) -> Result<SymmetricMatrix> {
    if layout.extra_vertex() {
        return Err(Error::InvalidLayout(
            "interconnection Laplacian takes a layout without the appended vertex".into(),
        ));
    }
    let block = laplacian(&build_antiregular(layout.k())?);
    let mut m = SymmetricMatrix::block_diagonal_repeat(&block, layout.n());
    for i in 1..layout.n() {
        m = m.add(&SymmetricMatrix::outer(&connector(layout, i)))?;
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuredEigenpair {
    /// 1-based position `i = n·j + 1` in the ascending spectrum.
    pub index: usize,
    pub eigenvalue: f64,
    /// Unit-length eigenvector.
    pub vector: Vec<f64>,
    /// `‖𝓛ṽ − λṽ‖∞`.
    pub residual: f64,
}

/// Candidate eigenpairs at positions `1, n+1, 2n+1, …, (k−1)n+1`, assembled
/// from one block eigenvector `v` of the antiregular graph:
///
/// * first and last position: `[v, v, …, v]`;
/// * position `n+1`: `[v, t v, …, t^{n−1} v]` with `t = −(k−2)`;
/// * everything else: `[v, 0, …, 0]`.
///
/// Every pair carries its measured residual; nothing is assumed.
pub fn structured_candidates(layout: &BlockLayout) -> Result<Vec<StructuredEigenpair>> {
    let (k, n) = (layout.k(), layout.n());
    let m = interconnection_laplacian(layout)?;
    let basis = antiregular_eigenvectors(k)?;
    let spectrum = antiregular_spectrum(k)?;
    let t = -(k as f64 - 2.0);

    let mut out = Vec::with_capacity(k);
    for (j, &lambda) in spectrum.iter().enumerate() {
        let index = n * j + 1;
        let v = basis.unit_ascending(j);
        let block_scale = |p: usize| -> f64 {
            if index == 1 || index == (k - 1) * n + 1 {
                1.0
            } else if index == n + 1 {
                t.powi(p as i32)
            } else if p == 0 {
                1.0
            } else {
                0.0
            }
        };
        let mut vector: Vec<f64> = (0..n)
            .flat_map(|p| {
                let s = block_scale(p);
                v.iter().map(move |x| s * x)
            })
            .collect();
        let norm = norm2(&vector);
        vector.iter_mut().for_each(|x| *x /= norm);

        let lambda = lambda as f64;
        let mv = m.mul_vec(&vector);
        let diff: Vec<f64> = mv
            .iter()
            .zip(&vector)
            .map(|(a, b)| a - lambda * b)
            .collect();
        out.push(StructuredEigenpair {
            index,
            eigenvalue: lambda,
            vector,
            residual: inf_norm(&diff),
        });
    }
    Ok(out)
}

/// Like [`structured_candidates`], but fails on the first pair whose residual
/// exceeds [`STRUCTURED_RESIDUAL_TOL`].
pub fn structured_eigenvectors(layout: &BlockLayout) -> Result<Vec<StructuredEigenpair>> {
    let pairs = structured_candidates(layout)?;
    if let Some(bad) = pairs
        .iter()
        .find(|p| !(p.residual < STRUCTURED_RESIDUAL_TOL))
    {
        return Err(Error::StructuredResidual {
            index: bad.index,
            residual: bad.residual,
            tolerance: STRUCTURED_RESIDUAL_TOL,
        });
    }
    Ok(pairs)
}

pub fn structured_eigenvector_report(layout: &BlockLayout) -> Result<TheoremReport> {
    let margins = structured_candidates(layout)?
        .into_iter()
        .map(|p| {
            Margin::new(
                format!(
                    "residual at position {} (eigenvalue {})",
                    p.index, p.eigenvalue
                ),
                p.residual,
                Relation::AtMost,
                STRUCTURED_RESIDUAL_TOL,
            )
        })
        .collect();
    Ok(TheoremReport::from_margins(
        "structured_eigenvectors",
        STRUCTURED_RESIDUAL_TOL,
        margins,
    ))
}
