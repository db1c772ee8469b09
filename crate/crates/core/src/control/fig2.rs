//! Minimum-energy comparison of three 8-vertex topologies: the path, two
//! interconnected 4-vertex antiregular blocks and the antiregular graph, all
//! steered from `−20·1` to `20·1`.

use serde::Serialize;

use super::steering::{min_energy_control_with, SteeringOptions, TrajectoryResult};
use super::ControlSetup;
use crate::error::{Error, Result};
use crate::graph::{build_antiregular, build_generalized_path, build_path, BlockLayout};

pub const FIG2_DEFAULT_HORIZON: f64 = 2.0;
const START: f64 = -20.0;
const TARGET: f64 = 20.0;
const STATES: usize = 8;

/// `(name, setup)` for the path (input at an end), the interconnection
/// (input at the first block's repeated-degree vertex) and the antiregular
/// graph (input at its first repeated-degree vertex, 4).
pub fn fig2_systems() -> Result<Vec<(&'static str, ControlSetup)>> {
    let anti = build_antiregular(STATES)?;
    let anti_input = BlockLayout::new(STATES, 1, false)?.kappa_upper();
    Ok(vec![
        ("path8", ControlSetup::new(build_path(STATES)?, 1)?),
        (
            "interconnect_4_2",
            build_generalized_path(&BlockLayout::new(4, 2, false)?)?,
        ),
        ("antiregular8", ControlSetup::new(anti, anti_input)?),
    ])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig2Entry {
    pub name: String,
    pub input_vertex: usize,
    /// `"ok"`, or the reason the run was refused.
    pub status: String,
    pub energy: Option<f64>,
    pub energy_quadratic: Option<f64>,
    pub terminal_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig2Comparison {
    pub horizon: f64,
    pub entries: Vec<Fig2Entry>,
    /// `E(path) > E(interconnect) > E(antiregular)`, false if any run failed.
    pub ordering_holds: bool,
}

/// Runs the three systems at horizon `t1`. Infeasible horizons are recorded
/// in the entry status instead of aborting the comparison.
pub fn fig2_comparison(
    t1: f64,
    steps: usize,
    opts: &SteeringOptions,
) -> Result<(Fig2Comparison, Vec<Option<TrajectoryResult>>)> {
    let x0 = vec![START; STATES];
    let xf = vec![TARGET; STATES];
    let mut entries = Vec::new();
    let mut runs = Vec::new();
    for (name, setup) in fig2_systems()? {
        let entry = |status: String, run: Option<&TrajectoryResult>| Fig2Entry {
            name: name.to_string(),
            input_vertex: setup.input_vertex(),
            status,
            energy: run.map(|r| r.energy),
            energy_quadratic: run.map(|r| r.energy_quadratic),
            terminal_error: run.map(|r| r.terminal_error),
        };
        match min_energy_control_with(&setup, &x0, &xf, t1, steps, opts) {
            Ok(run) => {
                entries.push(entry("ok".into(), Some(&run)));
                runs.push(Some(run));
            }
            Err(e @ (Error::InfeasibleHorizon { .. } | Error::TerminalMiss { .. })) => {
                entries.push(entry(e.to_string(), None));
                runs.push(None);
            }
            Err(e) => return Err(e),
        }
    }
    let energies: Option<Vec<f64>> = entries.iter().map(|e| e.energy).collect();
    let ordering_holds = energies.is_some_and(|e| e[0] > e[1] && e[1] > e[2]);
    Ok((
        Fig2Comparison {
            horizon: t1,
            entries,
            ordering_holds,
        },
        runs,
    ))
}
