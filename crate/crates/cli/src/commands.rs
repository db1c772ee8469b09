use std::fs;
use std::path::{Path, PathBuf};

use lapctl_core::control::{
    fig2_comparison, min_energy_control_with, pbh_controllable, simulate_autonomous,
    ControllabilityVerdict, SteeringOptions, TrajectoryResult,
};
use lapctl_core::graph::{diameter, max_degree, BlockLayout};
use lapctl_core::spectral::{
    antiregular_spectrum, check_anchoring, check_distinct, check_grone_merris, min_gap, GroneMerris,
};
use lapctl_core::{
    build_generalized_path, eigh, laplacian, ControlSetup, Error, Graph, TheoremReport,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{BuildArgs, CheckArgs, GraphSource, SimulateArgs, SpectrumArgs, SweepArgs};
use crate::failure::{Failure, EXIT_CHECK_FAILED, EXIT_INFEASIBLE};

pub type Outcome = Result<u8, Failure>;

pub fn positive(name: &str, value: f64) -> Result<f64, Failure> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Failure::usage(format!(
            "--{name} must be positive, got {value}"
        )))
    }
}

/// `a..b` (inclusive), `a..=b` or a single `a`; `b < a` gives an empty range.
pub fn parse_range(text: &str) -> Result<Vec<usize>, Failure> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| Failure::usage(format!("bad range `{text}`: {e}")))
    };
    match text.split_once("..") {
        Some((a, b)) => Ok((num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?).collect()),
        None => Ok(vec![num(text)?]),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail") + "\n"
}

pub fn write_artifact(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| Failure::usage(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

struct Resolved {
    graph: Graph,
    input_vertex: Option<usize>,
    layout: Option<BlockLayout>,
}

fn resolve(source: &GraphSource) -> Result<Resolved, Failure> {
    let mut resolved = if let Some(path) = &source.graph {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        Resolved {
            graph: Graph::parse_any(&text)?,
            input_vertex: None,
            layout: None,
        }
    } else {
        let (Some(k), Some(n)) = (source.k, source.n) else {
            return Err(Failure::usage("give --k and --n, or --graph FILE"));
        };
        let layout = BlockLayout::new(k, n, source.extra)?;
        let setup = build_generalized_path(&layout)?;
        Resolved {
            input_vertex: Some(setup.input_vertex()),
            graph: setup.graph().clone(),
            layout: Some(layout),
        }
    };
    if let Some(v) = source.input_vertex {
        resolved.graph.check_vertex(v)?;
        resolved.input_vertex = Some(v);
    }
    Ok(resolved)
}

fn setup_of(resolved: Resolved) -> Result<ControlSetup, Failure> {
    let input = resolved
        .input_vertex
        .ok_or_else(|| Failure::usage("--input-vertex is required with --graph"))?;
    Ok(ControlSetup::new(resolved.graph, input)?)
}

#[derive(Serialize)]
struct BuildSummary {
    k: usize,
    n: usize,
    extra: bool,
    vertices: usize,
    edges: usize,
    diameter: usize,
    max_degree: usize,
    input_vertex: usize,
}

pub fn build(args: &BuildArgs) -> Outcome {
    let layout = BlockLayout::new(args.k, args.n, args.extra)?;
    let setup = build_generalized_path(&layout)?;
    let g = setup.graph();
    let summary = BuildSummary {
        k: args.k,
        n: args.n,
        extra: args.extra,
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        diameter: diameter(g)?,
        max_degree: max_degree(g),
        input_vertex: setup.input_vertex(),
    };
    if let Some(dir) = &args.common.out {
        write_artifact(dir, "graph.json", &(g.to_json() + "\n"))?;
        write_artifact(dir, "summary.json", &to_json(&summary))?;
    }
    print!("{}", to_json(&summary));
    Ok(0)
}

#[derive(Serialize)]
struct Anchor {
    position: usize,
    expected: usize,
    value: f64,
}

#[derive(Serialize)]
struct SpectrumReports {
    anchored: Option<Vec<Anchor>>,
    anchoring: Option<TheoremReport>,
    distinct: TheoremReport,
    grone_merris: Option<GroneMerris>,
}

#[derive(Serialize)]
struct SpectrumOutput {
    vertices: usize,
    eigenvalues: Vec<f64>,
    reports: SpectrumReports,
}

pub fn spectrum(args: &SpectrumArgs) -> Outcome {
    let tol = positive("tol", args.tol)?;
    let resolved = resolve(&args.source)?;
    let eigenvalues = eigh(&laplacian(&resolved.graph))?.eigenvalues;
    let plain_layout = resolved.layout.filter(|l| !l.extra_vertex());
    let (anchored, anchoring) = match plain_layout {
        Some(layout) => {
            let anchors = antiregular_spectrum(layout.k())?
                .into_iter()
                .enumerate()
                .map(|(j, expected)| {
                    let position = layout.n() * j + 1;
                    Anchor {
                        position,
                        expected,
                        value: eigenvalues[position - 1],
                    }
                })
                .collect();
            let strict = tol * eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
            (
                Some(anchors),
                Some(check_anchoring(&layout, &eigenvalues, tol, strict)?),
            )
        }
        None => (None, None),
    };
    let grone_merris = match check_grone_merris(&resolved.graph, tol) {
        Ok(gm) => Some(gm),
        Err(Error::Disconnected) => None,
        Err(e) => return Err(e.into()),
    };
    let out = SpectrumOutput {
        vertices: resolved.graph.num_vertices(),
        reports: SpectrumReports {
            anchored,
            anchoring,
            distinct: check_distinct(&eigenvalues, tol),
            grone_merris,
        },
        eigenvalues,
    };
    let text = to_json(&out);
    if let Some(dir) = &args.common.out {
        write_artifact(dir, "spectrum.json", &text)?;
    }
    print!("{text}");
    Ok(0)
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    vertices: usize,
    input_vertex: usize,
    #[serde(flatten)]
    verdict: &'a ControllabilityVerdict,
}

pub fn check(args: &CheckArgs) -> Outcome {
    let tol = positive("tol", args.tol)?;
    let setup = setup_of(resolve(&args.source)?)?;
    let verdict = pbh_controllable(&setup, tol)?;
    let text = to_json(&CheckOutput {
        vertices: setup.num_vertices(),
        input_vertex: setup.input_vertex(),
        verdict: &verdict,
    });
    if let Some(dir) = &args.common.out {
        write_artifact(dir, "verdict.json", &text)?;
    }
    print!("{text}");
    Ok(if verdict.controllable {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn parse_state(text: &str, n: usize, flag: &str) -> Result<Vec<f64>, Failure> {
    let values = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Failure::usage(format!("bad --{flag} entry `{s}`: {e}")))
        })
        .collect::<Result<Vec<f64>, Failure>>()?;
    match values.len() {
        1 => Ok(vec![values[0]; n]),
        len if len == n => Ok(values),
        len => Err(Failure::usage(format!(
            "--{flag} has {len} entries, the graph has {n} vertices"
        ))),
    }
}

#[derive(Serialize)]
struct SimulationSummary {
    energy: f64,
    terminal_error: f64,
    controllable: Option<bool>,
    min_abs_projection: Option<f64>,
    energy_quadratic: f64,
    horizon: f64,
    steps: usize,
    input_vertex: Option<usize>,
}

fn summary(
    run: &TrajectoryResult,
    verdict: Option<&ControllabilityVerdict>,
    t1: f64,
    steps: usize,
    input_vertex: Option<usize>,
) -> SimulationSummary {
    SimulationSummary {
        energy: run.energy,
        terminal_error: run.terminal_error,
        controllable: verdict.map(|v| v.controllable),
        min_abs_projection: verdict.map(|v| v.min_abs_projection),
        energy_quadratic: run.energy_quadratic,
        horizon: t1,
        steps,
        input_vertex,
    }
}

pub fn simulate(args: &SimulateArgs) -> Outcome {
    let t1 = positive("t1", args.t1)?;
    let tol = positive("tol", args.tol)?;
    let opts = SteeringOptions {
        max_condition: positive("max-condition", args.max_condition)?,
        pbh_tol: tol,
        ..SteeringOptions::default()
    };
    let dir = args
        .common
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from("."));
    if args.compare.is_some() {
        return compare_fig2(t1, args.steps, &opts, &dir);
    }
    let resolved = resolve(&args.source)?;
    let n = resolved.graph.num_vertices();
    let x0 = parse_state(&args.x0, n, "x0")?;

    let (run, verdict, input) = if args.autonomous {
        let run = simulate_autonomous(&resolved.graph, &x0, t1, args.steps)?;
        let verdict = match resolved.input_vertex {
            Some(v) if resolved.graph.is_connected() => Some(pbh_controllable(
                &ControlSetup::new(resolved.graph.clone(), v)?,
                tol,
            )?),
            _ => None,
        };
        (run, verdict, resolved.input_vertex)
    } else {
        let xf = parse_state(&args.xf, n, "xf")?;
        let setup = setup_of(resolved)?;
        let verdict = pbh_controllable(&setup, tol)?;
        if !verdict.controllable {
            eprint!("{}", to_json(&verdict));
            return Err(Error::Uncontrollable(setup.input_vertex()).into());
        }
        let run = min_energy_control_with(&setup, &x0, &xf, t1, args.steps, &opts)?;
        (run, Some(verdict), Some(setup.input_vertex()))
    };
    let text = to_json(&summary(&run, verdict.as_ref(), t1, args.steps, input));
    write_artifact(&dir, "trajectory.csv", &run.to_csv())?;
    write_artifact(&dir, "summary.json", &text)?;
    print!("{text}");
    Ok(0)
}

fn compare_fig2(t1: f64, steps: usize, opts: &SteeringOptions, dir: &Path) -> Outcome {
    let (cmp, runs) = fig2_comparison(t1, steps, opts)?;
    for (entry, run) in cmp.entries.iter().zip(&runs) {
        if let Some(run) = run {
            write_artifact(dir, &format!("{}.csv", entry.name), &run.to_csv())?;
        }
    }
    let text = to_json(&cmp);
    write_artifact(dir, "fig2.json", &text)?;
    print!("{text}");
    if cmp.ordering_holds {
        Ok(0)
    } else if cmp.entries.iter().any(|e| e.energy.is_none()) {
        for e in cmp.entries.iter().filter(|e| e.energy.is_none()) {
            eprintln!("{}: {}", e.name, e.status);
        }
        Ok(EXIT_INFEASIBLE)
    } else {
        eprintln!("energy ordering does not hold at t1 = {t1}");
        Ok(EXIT_CHECK_FAILED)
    }
}

struct SweepRow {
    k: usize,
    n: usize,
    vertices: usize,
    diameter: usize,
    max_degree: usize,
    controllable: bool,
    min_gap: f64,
    energy: Option<f64>,
}

fn sweep_cell(
    k: usize,
    n: usize,
    args: &SweepArgs,
    opts: &SteeringOptions,
) -> Result<SweepRow, Failure> {
    let setup = build_generalized_path(&BlockLayout::new(k, n, args.extra)?)?;
    let g = setup.graph();
    let verdict = pbh_controllable(&setup, opts.pbh_tol)?;
    let energy = if verdict.controllable {
        let v = setup.num_vertices();
        match min_energy_control_with(
            &setup,
            &vec![-20.0; v],
            &vec![20.0; v],
            args.t1,
            args.steps,
            opts,
        ) {
            Ok(run) => Some(run.energy),
            Err(Error::InfeasibleHorizon { .. } | Error::TerminalMiss { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let spec = eigh(&setup.laplacian())?;
    Ok(SweepRow {
        k,
        n,
        vertices: g.num_vertices(),
        diameter: diameter(g)?,
        max_degree: max_degree(g),
        controllable: verdict.controllable,
        min_gap: min_gap(&spec.eigenvalues).map_or(f64::INFINITY, |(_, gap)| gap),
        energy,
    })
}

pub fn sweep(args: &SweepArgs) -> Outcome {
    positive("t1", args.t1)?;
    let opts = SteeringOptions {
        max_condition: positive("max-condition", args.max_condition)?,
        pbh_tol: positive("tol", args.tol)?,
        ..SteeringOptions::default()
    };
    let ks = parse_range(&args.k)?;
    let ns = parse_range(&args.n)?;
    let cells: Vec<(usize, usize)> = ks
        .iter()
        .flat_map(|&k| ns.iter().map(move |&n| (k, n)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(k, n)| sweep_cell(k, n, args, &opts))
        .collect::<Result<Vec<_>, _>>()?;

    let mut csv = String::from("k,n,vertices,diameter,max_degree,controllable,min_gap,energy\n");
    for r in &rows {
        let energy = r.energy.map(|e| e.to_string()).unwrap_or_default();
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.k, r.n, r.vertices, r.diameter, r.max_degree, r.controllable, r.min_gap, energy
        ));
    }
    if let Some(dir) = &args.common.out {
        write_artifact(dir, "sweep.csv", &csv)?;
    }
    print!("{csv}");
    Ok(0)
}
