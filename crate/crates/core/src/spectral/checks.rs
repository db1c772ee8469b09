//! Numerical checkers for the eigenvalue inequalities and equalities that the
//! interconnection construction relies on. Every checker reports margins; a
//! boolean alone would hide how close a case came to failing.

use serde::Serialize;

use super::antiregular::antiregular_spectrum;
use super::eigen::{eigh, SpectralDecomposition};
use super::report::{Margin, Relation, TheoremReport};
use crate::error::{Error, Result};
use crate::graph::{conjugate, degree_sequence, laplacian, BlockLayout, Graph};

/// Default absolute tolerance for eigenvalue (in)equalities.
pub const EIGEN_TOL: f64 = 1e-8;
/// Default relative gap below which two eigenvalues count as equal.
pub const DISTINCT_REL_TOL: f64 = 1e-8;

fn scale_of(lists: &[&[f64]]) -> f64 {
    lists
        .iter()
        .flat_map(|l| l.iter())
        .fold(1.0_f64, |m, x| m.max(x.abs()))
}

fn same_order(expected: usize, lists: &[&[f64]]) -> Result<()> {
    for l in lists {
        if l.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: l.len(),
            });
        }
    }
    Ok(())
}

/// Weyl's inequalities for ascending spectra of `M₁`, `M₂` and `M₁ + M₂`:
///
/// * `ℓ³_i ≤ ℓ¹_{i+j} + ℓ²_{k−j}` for `j = 0..=k−i`;
/// * `ℓ¹_{i−j+1} + ℓ²_j ≤ ℓ³_i` for `j = 1..=i`.
///
/// `tol` is relative to the largest eigenvalue magnitude (floored at 1).
pub fn check_weyl(first: &[f64], second: &[f64], sum: &[f64], tol: f64) -> Result<TheoremReport> {
    let k = first.len();
    same_order(k, &[second, sum])?;
    let abs_tol = tol * scale_of(&[first, second, sum]);
    let mut margins = Vec::new();
    for i in 1..=k {
        for j in 0..=(k - i) {
            margins.push(Margin::le(
                format!("upper i={i} j={j}"),
                sum[i - 1],
                first[i + j - 1] + second[k - j - 1],
                abs_tol,
            ));
        }
        for j in 1..=i {
            margins.push(Margin::le(
                format!("lower i={i} j={j}"),
                first[i - j] + second[j - 1],
                sum[i - 1],
                abs_tol,
            ));
        }
    }
    Ok(TheoremReport::from_margins("weyl", abs_tol, margins))
}

/// Interlacing after a rank-one positive update:
/// `ℓ_1 ≤ ℓ'_1 ≤ ℓ_2 ≤ ℓ'_2 ≤ … ≤ ℓ_k ≤ ℓ'_k`.
pub fn check_interlacing(base: &[f64], updated: &[f64], tol: f64) -> Result<TheoremReport> {
    let k = base.len();
    same_order(k, &[updated])?;
    let abs_tol = tol * scale_of(&[base, updated]);
    let mut margins = Vec::with_capacity(2 * k);
    for i in 0..k {
        margins.push(Margin::le(
            format!("base[{}] <= updated[{}]", i + 1, i + 1),
            base[i],
            updated[i],
            abs_tol,
        ));
        if i + 1 < k {
            margins.push(Margin::le(
                format!("updated[{}] <= base[{}]", i + 1, i + 2),
                updated[i],
                base[i + 1],
                abs_tol,
            ));
        }
    }
    Ok(TheoremReport::from_margins("interlacing", abs_tol, margins))
}

/// Each antiregular eigenvalue `λ_{j+1}` must reappear at position `nj+1` of
/// the interconnection spectrum, with strictly larger neighbor at `nj+2` and
/// (for `j ≥ 1`) strictly smaller neighbor at `nj`. With one block only the
/// equalities are checked.
///
/// Strict neighbors must clear `strict_gap`.
pub fn check_anchoring(
    layout: &BlockLayout,
    eigenvalues: &[f64],
    tol: f64,
    strict_gap: f64,
) -> Result<TheoremReport> {
    let (k, n) = (layout.k(), layout.n());
    if eigenvalues.len() != k * n {
        return Err(Error::DimensionMismatch {
            expected: k * n,
            actual: eigenvalues.len(),
        });
    }
    let anchors = antiregular_spectrum(k)?;
    let mut margins = Vec::new();
    for (j, &lambda) in anchors.iter().enumerate() {
        let lambda = lambda as f64;
        let pos = n * j + 1;
        margins.push(Margin::eq(
            format!("position {pos} equals {lambda}"),
            eigenvalues[pos - 1],
            lambda,
            tol,
        ));
        if n >= 2 {
            margins.push(Margin::new(
                format!("position {} above {lambda}", pos + 1),
                eigenvalues[pos] - lambda,
                Relation::Above,
                strict_gap,
            ));
            if j >= 1 {
                margins.push(Margin::new(
                    format!("position {} below {lambda}", pos - 1),
                    lambda - eigenvalues[pos - 2],
                    Relation::Above,
                    strict_gap,
                ));
            }
        }
    }
    Ok(TheoremReport::from_margins("anchoring", tol, margins))
}

/// Passes iff every consecutive gap exceeds `rel_tol · max(1, ℓ_max)`.
pub fn check_distinct(eigenvalues: &[f64], rel_tol: f64) -> TheoremReport {
    let top = eigenvalues.last().copied().unwrap_or(0.0);
    let threshold = rel_tol * top.max(1.0);
    let margins = eigenvalues
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            Margin::new(
                format!("gap between {} and {}", i + 1, i + 2),
                w[1] - w[0],
                Relation::Above,
                threshold,
            )
        })
        .collect();
    TheoremReport::from_margins("distinct", threshold, margins)
}

/// Smallest consecutive gap and its 1-based lower index.
pub fn min_gap(eigenvalues: &[f64]) -> Option<(usize, f64)> {
    eigenvalues
        .windows(2)
        .enumerate()
        .map(|(i, w)| (i + 1, w[1] - w[0]))
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

/// Every eigenvector must be nonzero (above `tol`) at the given 1-based
/// positions.
pub fn check_eigenvector_entries(
    spec: &SpectralDecomposition,
    positions: &[usize],
    tol: f64,
) -> Result<TheoremReport> {
    let mut margins = Vec::new();
    for &pos in positions {
        if pos == 0 || pos > spec.order() {
            return Err(Error::VertexOutOfRange {
                vertex: pos,
                num_vertices: spec.order(),
            });
        }
        for i in 0..spec.order() {
            margins.push(Margin::new(
                format!("|v_{}[{pos}]|", i + 1),
                spec.eigenvectors[(pos - 1, i)].abs(),
                Relation::Above,
                tol,
            ));
        }
    }
    Ok(TheoremReport::from_margins(
        "eigenvector_entries",
        tol,
        margins,
    ))
}

/// Grone–Merris check together with whether it is tight everywhere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroneMerris {
    pub report: TheoremReport,
    /// Every partial sum matches within tolerance (threshold graphs).
    pub equality: bool,
}

/// The Laplacian spectrum is majorized by the conjugate degree sequence:
/// `Σ_{i≤t} ℓ_{k−i+1} ≤ Σ_{i≤t} d*_i` for all `t`.
pub fn check_grone_merris(g: &Graph, tol: f64) -> Result<GroneMerris> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = eigh(&laplacian(g))?;
    let conj = conjugate(&degree_sequence(g));
    let mut spectral_sum = 0.0;
    let mut conj_sum = 0.0;
    let mut margins = Vec::new();
    let mut equality = true;
    for (t, (&l, &d)) in spec.eigenvalues.iter().rev().zip(conj.values()).enumerate() {
        spectral_sum += l;
        conj_sum += d as f64;
        margins.push(Margin::le(
            format!("partial sum t={}", t + 1),
            spectral_sum,
            conj_sum,
            tol,
        ));
        equality &= (conj_sum - spectral_sum).abs() <= tol;
    }
    Ok(GroneMerris {
        report: TheoremReport::from_margins("grone_merris", tol, margins),
        equality,
    })
}
