use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lapctl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lapctl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn build_examples() {
    let s = json(&lapctl(&["build", "--k", "4", "--n", "2"]));
    assert_eq!(s["vertices"], 8);
    assert_eq!(s["input_vertex"], 2);
    assert_eq!(s["diameter"], 5);

    let s = json(&lapctl(&["build", "--k", "2", "--n", "4"]));
    assert_eq!(s["vertices"], 8);
    assert_eq!(s["input_vertex"], 1);
    assert_eq!(s["diameter"], 7);
    assert_eq!(s["max_degree"], 2);

    let s = json(&lapctl(&["build", "--k", "3", "--n", "2", "--extra"]));
    assert_eq!(s["vertices"], 7);
    assert_eq!(s["input_vertex"], 7);
}

#[test]
fn build_writes_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = lapctl(&[
        "build",
        "--k",
        "2",
        "--n",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let g = fs::read_to_string(dir.path().join("graph.json")).unwrap();
    assert_eq!(
        g.trim(),
        r#"{"num_vertices":4,"edges":[[1,2],[2,3],[3,4]]}"#
    );
    assert!(dir.path().join("summary.json").exists());
}

#[test]
fn invalid_parameters_are_usage_errors() {
    let out = lapctl(&["build", "--k", "1", "--n", "2"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&lapctl(&["build", "--k", "4"])), 2);
    assert_eq!(code(&lapctl(&["frobnicate"])), 2);
    assert_eq!(
        code(&lapctl(&["check", "--k", "4", "--n", "2", "--tol", "0"])),
        2
    );
    assert_eq!(
        code(&lapctl(&["spectrum", "--graph", "/nonexistent/graph.json"])),
        2
    );
}

#[test]
fn spectrum_examples() {
    let s = json(&lapctl(&["spectrum", "--k", "6", "--n", "1"]));
    let ev = floats(&s["eigenvalues"]);
    for (got, want) in ev.iter().zip([0.0, 1.0, 2.0, 4.0, 5.0, 6.0]) {
        assert!((got - want).abs() < 1e-8);
    }
    assert_eq!(s["reports"]["grone_merris"]["equality"], true);

    let s = json(&lapctl(&["spectrum", "--k", "4", "--n", "2"]));
    let anchored = s["reports"]["anchored"].as_array().unwrap();
    let positions: Vec<u64> = anchored
        .iter()
        .map(|a| a["position"].as_u64().unwrap())
        .collect();
    assert_eq!(positions, vec![1, 3, 5, 7]);
    for (a, want) in anchored.iter().zip([0.0, 1.0, 3.0, 4.0]) {
        assert!((a["value"].as_f64().unwrap() - want).abs() < 1e-8);
    }
    assert_eq!(s["reports"]["anchoring"]["passed"], true);
    assert_eq!(s["reports"]["distinct"]["passed"], true);

    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", "# vertices 3\n1 2\n2 3\n");
    let s = json(&lapctl(&["spectrum", "--graph", &p3]));
    let ev = floats(&s["eigenvalues"]);
    for (got, want) in ev.iter().zip([0.0, 1.0, 3.0]) {
        assert!((got - want).abs() < 1e-8);
    }
    assert!(s["reports"]["anchoring"].is_null());
}

#[test]
fn check_examples() {
    let dir = tempfile::tempdir().unwrap();
    let p2 = write(
        dir.path(),
        "p2.json",
        r#"{"num_vertices":2,"edges":[[1,2]]}"#,
    );
    let out = lapctl(&["check", "--graph", &p2, "--input-vertex", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["controllable"], true);

    let p3 = write(
        dir.path(),
        "p3.json",
        r#"{"num_vertices":3,"edges":[[1,2],[2,3]]}"#,
    );
    let out = lapctl(&["check", "--graph", &p3, "--input-vertex", "2"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["controllable"], false);
    let w = floats(&v["witness"]["vector"]);
    assert!(w[1].abs() < 1e-12 && (w[0] + w[2]).abs() < 1e-12);

    let out = lapctl(&["check", "--k", "4", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["input_vertex"], 2);

    let split = write(dir.path(), "split.txt", "# vertices 3\n1 2\n");
    assert_eq!(
        code(&lapctl(&[
            "check",
            "--graph",
            &split,
            "--input-vertex",
            "1"
        ])),
        2
    );
    assert_eq!(code(&lapctl(&["check", "--graph", &p3])), 2);
}

#[test]
fn verify_default_grid_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = lapctl(&[
        "verify",
        "--out",
        dir.path().to_str().unwrap(),
        "--random-graphs",
        "50",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["cells"].as_array().unwrap().len(), 20);
    assert_eq!(v["oracle"]["checked"], 50);
    let full: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("verify.json")).unwrap()).unwrap();
    assert!(full["cells"][0]["checks"][0]["margins"].is_array());
}

#[test]
fn verify_single_path_cell() {
    let out = lapctl(&["verify", "--k", "2", "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["cells"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_sabotage_fails_with_witness() {
    let out = lapctl(&[
        "verify",
        "--k",
        "3..4",
        "--n",
        "2",
        "--sabotage",
        "drop-cross-edge",
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["passed"], false);
    for cell in v["cells"].as_array().unwrap() {
        assert_eq!(cell["passed"], false);
        assert!(cell["witness_index"].is_u64());
        let failed: Vec<&str> = cell["failed"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| f.as_str().unwrap())
            .collect();
        assert!(failed.contains(&"distinct") && failed.contains(&"pbh"));
    }
}

#[test]
fn fig2_comparison_writes_three_trajectories() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = lapctl(&["simulate", "--compare", "fig2", "--out", d]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ordering_holds"], true);
    let e: Vec<f64> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["energy"].as_f64().unwrap())
        .collect();
    assert!(e[0] > e[1] && e[1] > e[2]);
    for name in ["path8", "interconnect_4_2", "antiregular8"] {
        let csv = fs::read_to_string(dir.path().join(format!("{name}.csv"))).unwrap();
        assert!(csv.starts_with("t,x1,x2,x3,x4,x5,x6,x7,x8,u\n"));
        assert_eq!(csv.lines().count(), 2002);
    }
    assert!(dir.path().join("fig2.json").exists());
}

#[test]
fn short_horizon_is_reported_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    let out = lapctl(&[
        "simulate",
        "--compare",
        "fig2",
        "--t1",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["ordering_holds"], false);
    assert_eq!(v["entries"][2]["status"], "ok");
    assert!(v["entries"][0]["energy"].is_null());
}

#[test]
fn scalar_and_equilibrium_runs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let single = write(dir.path(), "one.txt", "# vertices 1\n");
    let out = lapctl(&[
        "simulate",
        "--graph",
        &single,
        "--input-vertex",
        "1",
        "--x0",
        "0",
        "--xf",
        "3",
        "--t1",
        "2",
        "--steps",
        "100",
        "--out",
        d,
    ]);
    assert_eq!(code(&out), 0);
    let s = json(&out);
    assert!((s["energy"].as_f64().unwrap() - 4.5).abs() < 1e-12);
    let sidecar: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    for key in [
        "energy",
        "terminal_error",
        "controllable",
        "min_abs_projection",
    ] {
        assert!(!sidecar[key].is_null(), "{key}");
    }

    let out = lapctl(&[
        "simulate", "--k", "3", "--n", "1", "--x0", "5", "--xf", "5", "--steps", "200", "--out", d,
    ]);
    assert_eq!(code(&out), 0);
    let csv = fs::read_to_string(dir.path().join("trajectory.csv")).unwrap();
    for line in csv.lines().skip(1) {
        let u: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(u.abs() < 1e-9);
    }
}

#[test]
fn simulate_refuses_uncontrollable_input() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", "# vertices 3\n1 2\n2 3\n");
    let out = lapctl(&[
        "simulate",
        "--graph",
        &p3,
        "--input-vertex",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn sweep_examples() {
    let out = lapctl(&["sweep", "--k", "3..5", "--n", "1..3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("k,n,vertices,diameter,max_degree,controllable,min_gap,energy")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    for r in &rows {
        let n: usize = r[1].parse().unwrap();
        assert_eq!(r[3].parse::<usize>().unwrap(), 3 * n - 1);
        assert_eq!(r[5], "true");
    }

    let text = String::from_utf8(lapctl(&["sweep", "--k", "2", "--n", "1..4"]).stdout).unwrap();
    for (i, line) in text.lines().skip(1).enumerate() {
        let n = i + 1;
        assert_eq!(line.split(',').nth(3).unwrap(), (2 * n - 1).to_string());
    }

    let out = lapctl(&["sweep", "--k", "3..2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn outputs_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let d = dir.path().to_str().unwrap();
        assert_eq!(
            code(&lapctl(&[
                "sweep", "--k", "2..4", "--n", "1..3", "--out", d
            ])),
            0
        );
        assert_eq!(
            code(&lapctl(&[
                "verify",
                "--k",
                "3",
                "--n",
                "1..2",
                "--random-graphs",
                "10",
                "--seed",
                "9",
                "--out",
                d
            ])),
            0
        );
        assert_eq!(
            code(&lapctl(&["simulate", "--k", "3", "--n", "2", "--out", d])),
            0
        );
    }
    for name in ["sweep.csv", "verify.json", "trajectory.csv", "summary.json"] {
        assert_eq!(
            fs::read(a.path().join(name)).unwrap(),
            fs::read(b.path().join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn config_file_values_yield_to_flags() {
    let dir = tempfile::tempdir().unwrap();
    let conf = write(
        dir.path(),
        "run.conf",
        "# defaults\nk = 4\nn = 2\nextra = true\n",
    );
    let s = json(&lapctl(&["build", "--config", &conf]));
    assert_eq!(s["vertices"], 9);
    let s = json(&lapctl(&["build", "--config", &conf, "--k", "3"]));
    assert_eq!(s["vertices"], 7);
}
