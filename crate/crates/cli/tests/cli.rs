use std::process::{Command, Output};

use serde_json::Value;

fn qpb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpb"))
        .args(args)
        .env_remove("QPB_MAX_DENOM")
        .output()
        .expect("run qpb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qpb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_calculus_passes() {
    let o = qpb(&["verify", "--suite", "calculus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_all_json_lists_every_suite() {
    let o = qpb(&["verify", "--suite", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    let laws = v["laws"].as_array().unwrap();
    for s in ["calculus", "hopf", "bundle", "qvb", "gauge", "field"] {
        assert!(laws.iter().any(|l| l["suite"] == s), "{s} missing");
    }
    assert!(laws.iter().all(|l| l["passed"] == true));
}

#[test]
fn suite_typo_is_a_usage_error() {
    let o = qpb(&["verify", "--suite", "calculis"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("calculus"));
}

#[test]
fn solve_ym_finds_the_ym_connection_and_flat_points() {
    let o = qpb(&["solve", "ym", "--seeds", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("(1/2 i, 1/2 i)"));
    assert!(s.contains("ym_nonflat"));
    assert!(s.contains("flat"));
    assert!(s.contains("100 seeds, 100 converged, 100 certified exactly"));
}

#[test]
fn solve_ym_json_is_deterministic() {
    let a = qpb(&["solve", "ym", "--seeds", "8", "--seed", "3", "--format", "json"]);
    let b = qpb(&["solve", "ym", "--seeds", "8", "--seed", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["points"].as_array().unwrap().len(), 8);
    assert!(v["points"].as_array().unwrap().iter().all(|p| p["status"] == "converged"));
}

#[test]
fn solve_ymsm_trivial_paper_potential() {
    let o = qpb(&["solve", "ymsm", "--corep", "trivial", "--potential", "paper:2,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("[2, 1] [2, 1]"), "{}", stdout(&o));
}

#[test]
fn frozen_alternating_solution_is_certified() {
    let o = qpb(&[
        "solve", "ymsm", "--corep", "alternating", "--potential", "poly:0,1",
        "--omega", "1/2i,1/2i", "--freeze-omega", "--t1", "1,1", "--t2", "1,1", "--freeze-sections",
        "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let p = &json(&o)["points"][0];
    assert_eq!(p["certified"], true);
    assert_eq!(p["omega"]["lambda0"], "1/2 i");
}

#[test]
fn frozen_violating_sections_fail() {
    let o = qpb(&[
        "solve", "ymsm", "--corep", "alternating", "--potential", "poly:0,1",
        "--omega", "1/2i,1/2i", "--freeze-omega", "--t1", "1,2", "--t2", "1,1", "--freeze-sections",
        "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["points"][0]["status"], "failed");
}

#[test]
fn malformed_config_reports_the_path() {
    let p = tmp("bad.json");
    std::fs::write(&p, r#"{"command": "ymsm", "solver": {"max_iter": "many"}}"#).unwrap();
    let o = qpb(&["solve", "--config", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("solver.max_iter"), "{}", stderr(&o));

    std::fs::write(&p, r#"{"command": "ym", "sedd": 1}"#).unwrap();
    let o = qpb(&["solve", "--config", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sedd"));
}

#[test]
fn config_file_drives_a_run() {
    let cfg = tmp("run.json");
    let out = tmp("run.out.json");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"command": "ymsm", "seed": 5, "corep": "trivial",
                "potential": {{"kind": "paper_example", "x": "3", "y": {{"re": "2", "im": "0"}}}},
                "solver": {{"max_iter": 50}}, "out": {:?}}}"#,
            out.to_str().unwrap()
        ),
    )
    .unwrap();
    let o = qpb(&["solve", "--config", cfg.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["solver"]["max_iter"], 50);
    let p = &v["points"][0];
    assert_eq!(p["sections"][0]["p"], serde_json::json!(["3", "2"]));
}

#[test]
fn snapping_bound_comes_from_the_environment() {
    let args = ["solve", "ym", "--omega", "0.4i,0.6i", "--seeds", "1", "--format", "json"];
    let o = qpb(&args);
    assert_eq!(json(&o)["points"][0]["omega"]["lambda0"], "1/2 i");
    let o = Command::new(env!("CARGO_BIN_EXE_qpb"))
        .args(args)
        .env("QPB_MAX_DENOM", "1")
        .output()
        .unwrap();
    let p = &json(&o)["points"][0];
    assert_eq!(p["certified"], false);
    assert_eq!(json(&o)["solver"]["max_denom"], 1);
}

#[test]
fn replicate_passes_and_flips_fail() {
    let o = qpb(&["replicate"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));

    let o = qpb(&["replicate", "--flip", "product-factor", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let curv = v["claims"].as_array().unwrap().iter().find(|c| c["id"] == "curvature").unwrap();
    assert_eq!(curv["passed"], false);

    for f in ["hodge-even-sign", "connection-side", "tensor-star"] {
        assert_eq!(qpb(&["replicate", "--flip", f]).status.code(), Some(1), "{f}");
    }
    assert_eq!(qpb(&["replicate", "--flip", "nonsense"]).status.code(), Some(2));
}

#[test]
fn replicate_json_key_order_is_stable() {
    let a = qpb(&["replicate", "--format", "json"]);
    let b = qpb(&["replicate", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("calibration") < pos("flipped") && pos("flipped") < pos("claims") && pos("claims") < pos("notes"));
}

#[test]
fn print_calibration_shows_one_passing_combination() {
    let o = qpb(&["print-calibration", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passing"].as_array().unwrap().len(), 1);
    assert_eq!(v["gate"].as_array().unwrap().len(), 16);
    assert_eq!(v["passing"][0], v["selected"]);
}

#[test]
fn out_flag_writes_a_file() {
    let p = tmp("verify.txt");
    let o = qpb(&["verify", "--suite", "hopf", "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&p).unwrap().contains("hopf"));
}
