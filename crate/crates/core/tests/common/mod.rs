#![allow(dead_code)]

use lapctl_core::{laplacian, ControlSetup, DenseMatrix, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Gallai: a non-increasing sequence with even sum is graphical iff
/// `Σ_{i≤r} d_i ≤ r(r−1) + Σ_{i>r} min(d_i, r)` for every `r`.
pub fn erdos_gallai(d: &[usize]) -> bool {
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut d = d.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    (1..=d.len()).all(|r| {
        let lhs: usize = d[..r].iter().sum();
        let rhs = r * (r - 1) + d[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        lhs <= rhs
    })
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, v: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (1..=v).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(v).unwrap();
    for i in 1..v {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent).unwrap();
    }
    for a in 1..=v {
        for b in (a + 1)..=v {
            if !g.has_edge(a, b) && rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// `e^{−𝓛h}` by scaling and squaring a truncated Taylor series.
pub fn expm_neg(l: &DenseMatrix, h: f64) -> Vec<Vec<f64>> {
    let n = l.rows();
    let norm = l.inf_norm() * h;
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let s = h / f64::from(1u32 << squarings);
    let a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| -l[(i, j)] * s).collect())
        .collect();
    let mut result: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut term = result.clone();
    for k in 1..=30 {
        term = matmul(&term, &a);
        for row in term.iter_mut() {
            row.iter_mut().for_each(|x| *x /= k as f64);
        }
        for i in 0..n {
            for j in 0..n {
                result[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        result = matmul(&result, &result);
    }
    result
}

/// `∫₀^{t₁} e^{−𝓛τ} b bᵀ e^{−𝓛τ} dτ` by composite Simpson with `panels`
/// (even) panels, stepping `x(τ) = e^{−𝓛τ} b` with a fixed propagator.
pub fn gramian_by_simpson(setup: &ControlSetup, t1: f64, panels: usize) -> Vec<Vec<f64>> {
    assert!(panels % 2 == 0);
    let n = setup.num_vertices();
    let h = t1 / panels as f64;
    let step = expm_neg(laplacian(setup.graph()).as_dense(), h);
    let mut x = setup.b();
    let mut w = vec![vec![0.0; n]; n];
    for m in 0..=panels {
        let weight = if m == 0 || m == panels {
            1.0
        } else if m % 2 == 1 {
            4.0
        } else {
            2.0
        };
        for i in 0..n {
            for j in 0..n {
                w[i][j] += weight * h / 3.0 * x[i] * x[j];
            }
        }
        x = (0..n)
            .map(|i| (0..n).map(|j| step[i][j] * x[j]).sum())
            .collect();
    }
    w
}
