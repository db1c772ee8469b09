use serde::Serialize;
use twofloat::TwoFloat;

use super::gramian::{coupling, modal_gramian};
use super::pbh::{verdict_from_decomposition, PBH_TOL};
use super::ControlSetup;
use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::matrix::{cholesky, cholesky_solve, inf_norm, SymmetricMatrix};
use crate::spectral::eigh;

/// Fewer grid intervals than this are rejected.
pub const MIN_STEPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteeringOptions {
    /// Largest accepted condition number of the equilibrated modal Gramian.
    pub max_condition: f64,
    /// Terminal error bound relative to `max(‖x_f‖∞, 1)`.
    pub terminal_rel_tol: f64,
    pub pbh_tol: f64,
    pub max_refinements: usize,
}

impl Default for SteeringOptions {
    fn default() -> Self {
        Self {
            max_condition: 1e14,
            terminal_rel_tol: 1e-6,
            pbh_tol: PBH_TOL,
            max_refinements: 60,
        }
    }
}

/// Sampled trajectory on the uniform grid `t_m = m·t₁/steps`, `m = 0..=steps`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryResult {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    pub inputs: Vec<f64>,
    /// Trapezoidal `∫u² dt` over the grid.
    pub energy: f64,
    /// `ηᵀW⁻¹η`, the exact minimum energy.
    pub energy_quadratic: f64,
    /// `‖x(t₁) − x_f‖∞`; for autonomous runs the target is the consensus
    /// value `mean(x₀)·1`.
    pub terminal_error: f64,
}

impl TrajectoryResult {
    /// `t,x1,…,xN,u` with one row per grid point.
    pub fn to_csv(&self) -> String {
        let n = self.states.first().map_or(0, Vec::len);
        let mut out = String::from("t");
        for i in 1..=n {
            out.push_str(&format!(",x{i}"));
        }
        out.push_str(",u\n");
        for ((t, x), u) in self.times.iter().zip(&self.states).zip(&self.inputs) {
            out.push_str(&format!("{t}"));
            for v in x {
                out.push_str(&format!(",{v}"));
            }
            out.push_str(&format!(",{u}\n"));
        }
        out
    }
}

fn grid(t1: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|m| t1 * m as f64 / steps as f64).collect()
}

fn check_horizon(t1: f64) -> Result<()> {
    if t1 > 0.0 && t1.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "horizon must be positive, got {t1}"
        )))
    }
}

fn check_len(expected: usize, x: &[f64]) -> Result<()> {
    if x.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            actual: x.len(),
        })
    }
}

fn trapezoid(times: &[f64], values: &[f64]) -> f64 {
    times
        .windows(2)
        .zip(values.windows(2))
        .map(|(t, v)| 0.5 * (t[1] - t[0]) * (v[0] + v[1]))
        .sum()
}

/// Minimum-energy input steering `x₀` to `x_f` at `t₁` with default options.
pub fn min_energy_control(
    setup: &ControlSetup,
    x0: &[f64],
    xf: &[f64],
    t1: f64,
    steps: usize,
) -> Result<TrajectoryResult> {
    min_energy_control_with(setup, x0, xf, t1, steps, &SteeringOptions::default())
}

/// Minimum-energy steering in modal coordinates `y = Vᵀx`.
///
/// With `c = Vᵀb`, `η̂ = Vᵀx_f − e^{−Λt₁}Vᵀx₀` and `M` the modal Gramian, the
/// optimal input is `u(t) = Σ_j c_j e^{−λ_j(t₁−t)} μ_j` where `Mμ = η̂`, and
///
/// `y_i(t) = e^{−λ_i t} y_i(0) + Σ_j c_i c_j e^{−λ_j(t₁−t)} φ(λ_i+λ_j, t) μ_j`
///
/// holds exactly, so no quadrature is needed. `M` is ill-conditioned for
/// chains of blocks, so `μ` is found by Cholesky on the diagonally
/// equilibrated `M` followed by iterative refinement with residuals, `μ` and
/// the trajectory sums carried in double-double precision.
pub fn min_energy_control_with(
    setup: &ControlSetup,
    x0: &[f64],
    xf: &[f64],
    t1: f64,
    steps: usize,
    opts: &SteeringOptions,
) -> Result<TrajectoryResult> {
    check_horizon(t1)?;
    if steps < MIN_STEPS {
        return Err(Error::InvalidParameter(format!(
            "need at least {MIN_STEPS} steps, got {steps}"
        )));
    }
    let n = setup.num_vertices();
    check_len(n, x0)?;
    check_len(n, xf)?;
    if !setup.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = eigh(&setup.laplacian())?;
    if !verdict_from_decomposition(&spec, setup.input_vertex(), opts.pbh_tol).controllable {
        return Err(Error::Uncontrollable(setup.input_vertex()));
    }
    let lambda = &spec.eigenvalues;
    let v = &spec.eigenvectors;
    let c = v.transpose_mul_vec(&setup.b());
    let y0 = v.transpose_mul_vec(x0);
    let yf = v.transpose_mul_vec(xf);
    let eta: Vec<f64> = (0..n)
        .map(|i| yf[i] - (-lambda[i] * t1).exp() * y0[i])
        .collect();

    let m = modal_gramian(lambda, &c, t1);
    let mu = solve_refined(&m, &eta, t1, opts)?;

    let times = grid(t1, steps);
    let mut states = Vec::with_capacity(times.len());
    let mut inputs = Vec::with_capacity(times.len());
    for &t in &times {
        let decay: Vec<f64> = lambda.iter().map(|l| (-l * (t1 - t)).exp()).collect();
        let mut u = TwoFloat::from(0.0);
        for j in 0..n {
            u += mu[j] * (c[j] * decay[j]);
        }
        inputs.push(f64::from(u));

        let y: Vec<f64> = (0..n)
            .map(|i| {
                let mut acc = TwoFloat::new_mul((-lambda[i] * t).exp(), y0[i]);
                for j in 0..n {
                    acc += mu[j] * coupling(c[i], c[j], decay[j], lambda[i] + lambda[j], t);
                }
                f64::from(acc)
            })
            .collect();
        states.push(v.mul_vec(&y));
    }

    let energy = trapezoid(&times, &inputs.iter().map(|u| u * u).collect::<Vec<_>>());
    let energy_quadratic = f64::from(
        eta.iter()
            .zip(&mu)
            .fold(TwoFloat::from(0.0), |acc, (e, m)| acc + *m * *e),
    );
    let last = states.last().expect("grid has at least two points");
    let terminal_error = last
        .iter()
        .zip(xf)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let tolerance = opts.terminal_rel_tol * inf_norm(xf).max(1.0);
    if !(terminal_error <= tolerance) {
        return Err(Error::TerminalMiss {
            terminal_error,
            tolerance,
        });
    }
    Ok(TrajectoryResult {
        times,
        states,
        inputs,
        energy,
        energy_quadratic,
        terminal_error,
    })
}

/// Solves `Mμ = η` for symmetric positive definite `M`.
fn solve_refined(
    m: &SymmetricMatrix,
    eta: &[f64],
    t1: f64,
    opts: &SteeringOptions,
) -> Result<Vec<TwoFloat>> {
    let n = m.order();
    let d: Vec<f64> = (0..n).map(|i| m.get(i, i).sqrt()).collect();
    let infeasible = |condition: f64| Error::InfeasibleHorizon {
        horizon: t1,
        condition,
        limit: opts.max_condition,
    };
    if d.iter().any(|x| !(*x > 0.0)) {
        return Err(infeasible(f64::INFINITY));
    }
    let mut e = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            e.set(i, j, m.get(i, j) / (d[i] * d[j]));
        }
    }
    let ev = eigh(&e)?.eigenvalues;
    let condition = if ev[0] > 0.0 {
        ev[n - 1] / ev[0]
    } else {
        f64::INFINITY
    };
    if !(condition <= opts.max_condition) {
        return Err(infeasible(condition));
    }
    let l = cholesky(&e).map_err(|_| infeasible(condition))?;

    let mut mu = vec![TwoFloat::from(0.0); n];
    let mut best: Option<(f64, Vec<TwoFloat>)> = None;
    for _ in 0..=opts.max_refinements {
        let r: Vec<TwoFloat> = (0..n)
            .map(|i| {
                let mut acc = TwoFloat::from(eta[i]);
                for j in 0..n {
                    acc -= mu[j] * m.get(i, j);
                }
                acc
            })
            .collect();
        let size = r.iter().map(|x| f64::from(*x).abs()).fold(0.0, f64::max);
        match &best {
            Some((prev, _)) if size >= *prev => break,
            _ => best = Some((size, mu.clone())),
        }
        if size == 0.0 {
            break;
        }
        let scaled: Vec<f64> = r.iter().zip(&d).map(|(x, di)| f64::from(*x) / di).collect();
        let z = cholesky_solve(&l, &scaled);
        for ((m, zi), di) in mu.iter_mut().zip(&z).zip(&d) {
            *m += zi / di;
        }
    }
    Ok(best.map(|(_, mu)| mu).unwrap_or(mu))
}

/// Consensus dynamics `ẋ = −𝓛x` from `x₀`, propagated exactly in the
/// eigenbasis: `x(t) = V e^{−Λt} Vᵀ x₀`.
pub fn simulate_autonomous(
    g: &Graph,
    x0: &[f64],
    t1: f64,
    steps: usize,
) -> Result<TrajectoryResult> {
    check_horizon(t1)?;
    if steps == 0 {
        return Err(Error::InvalidParameter("need at least one step".into()));
    }
    check_len(g.num_vertices(), x0)?;
    let spec = eigh(&laplacian(g))?;
    let times = grid(t1, steps);
    let states: Vec<Vec<f64>> = times
        .iter()
        .map(|&t| spec.apply_function(x0, |l| (-l * t).exp()))
        .collect();
    let mean = x0.iter().sum::<f64>() / x0.len() as f64;
    let terminal_error = states
        .last()
        .expect("grid has at least two points")
        .iter()
        .map(|x| (x - mean).abs())
        .fold(0.0, f64::max);
    Ok(TrajectoryResult {
        inputs: vec![0.0; times.len()],
        times,
        states,
        energy: 0.0,
        energy_quadratic: 0.0,
        terminal_error,
    })
}
