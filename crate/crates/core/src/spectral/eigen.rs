use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, SymmetricMatrix};

/// Stop once the off-diagonal Frobenius mass falls below this fraction of ‖M‖_F.
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;
/// Entries at or below this magnitude do not decide an eigenvector's sign.
const SIGN_THRESHOLD: f64 = 1e-9;

/// Ascending eigenvalues with an orthonormal eigenvector matrix; column `i`
/// pairs with `eigenvalues[i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    #[serde(skip)]
    pub eigenvectors: DenseMatrix,
}

impl SpectralDecomposition {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvector paired with the `i`-th smallest eigenvalue (zero-based).
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.eigenvectors.column(i)
    }

    /// Largest eigen-residual `‖M v_i − ℓ_i v_i‖∞` over all pairs.
    pub fn max_residual(&self, m: &SymmetricMatrix) -> f64 {
        (0..self.order())
            .map(|i| {
                let v = self.vector(i);
                let mv = m.mul_vec(&v);
                mv.iter()
                    .zip(&v)
                    .map(|(a, b)| (a - self.eigenvalues[i] * b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// Largest deviation of `VᵀV` from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        let vtv = self.eigenvectors.transpose().matmul(&self.eigenvectors);
        vtv.max_abs_diff(&DenseMatrix::identity(self.order()))
    }

    /// `V diag(f(ℓ)) Vᵀ x`.
    pub fn apply_function(&self, x: &[f64], f: impl Fn(f64) -> f64) -> Vec<f64> {
        let mut coeffs = self.eigenvectors.transpose_mul_vec(x);
        for (c, &l) in coeffs.iter_mut().zip(&self.eigenvalues) {
            *c *= f(l);
        }
        self.eigenvectors.mul_vec(&coeffs)
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Rotations are applied in fixed row-major `(p, q)` order, so the result is
/// deterministic. Eigenvalues come back ascending and each eigenvector is
/// signed so that its first entry larger than 1e-9 in magnitude is positive.
pub fn eigh(m: &SymmetricMatrix) -> Result<SpectralDecomposition> {
    let n = m.order();
    let mut a = m.as_dense().clone();
    let mut v = DenseMatrix::identity(n);
    let scale = m.frobenius_norm();

    let threshold = OFF_DIAGONAL_TOL * scale;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let eigenvalues = order.iter().map(|&i| a[(i, i)]).collect();
    let mut eigenvectors = DenseMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut col = v.column(src);
        canonicalize_sign(&mut col);
        eigenvectors.set_column(dst, &col);
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation and accumulates it into `v`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.rows();
    a[(p, p)] -= t * apq;
    a[(q, q)] += t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for r in 0..n {
        if r != p && r != q {
            let arp = a[(r, p)];
            let arq = a[(r, q)];
            let new_rp = c * arp - s * arq;
            let new_rq = s * arp + c * arq;
            a[(r, p)] = new_rp;
            a[(p, r)] = new_rp;
            a[(r, q)] = new_rq;
            a[(q, r)] = new_rq;
        }
    }
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = c * vrp - s * vrq;
        v[(r, q)] = s * vrp + c * vrq;
    }
}

fn canonicalize_sign(v: &mut [f64]) {
    if let Some(first) = v.iter().find(|x| x.abs() > SIGN_THRESHOLD) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}
