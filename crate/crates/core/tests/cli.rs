use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixvol")).args(args).output().unwrap()
}

fn setup() -> (TempDir, String, String, String) {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let g = write("g.json", r#"{"dim":2,"vertices":[[0,0],[1,0],[0,1],[1,1]]}"#);
    let k = write("k.json", r#"{"dim":2,"vertices":[["0","0"]]}"#);
    let l = write("l.json", r#"{"dim":2,"vertices":[["1","0"]]}"#);
    (dir, g, k, l)
}

#[test]
fn report_writes_one_row() {
    let (_d, g, k, l) = setup();
    let out = run(&["report", "-g", &g, "--k", &k, "--l", &l]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,dG,rhoG,dH_sq,dH,sandwich_ok,upper_ok,lower_ok,lower_binom_ok");
    assert!(lines.next().unwrap().starts_with("2,1,2,1,1,true"));
}

#[test]
fn exit_codes() {
    let (d, g, k, _) = setup();
    let bad = d.path().join("bad.json");
    fs::write(&bad, r#"{"dim":2,"vertices":[[0.5,0]]}"#).unwrap();
    let outside = d.path().join("out.json");
    fs::write(&outside, r#"{"dim":2,"vertices":[[2,2]]}"#).unwrap();
    let (bad, outside) = (bad.to_str().unwrap(), outside.to_str().unwrap());

    assert_eq!(run(&["report", "-g", &g, "--k", bad, "--l", &k]).status.code(), Some(2));
    assert_eq!(run(&["report", "-g", &g, "--k", outside, "--l", &k]).status.code(), Some(3));
    assert_eq!(run(&["sweep", "-g", &g, "--steps", "2"]).status.code(), Some(4));
    assert_eq!(run(&["sweep", "--nonsense"]).status.code(), Some(4));
}

#[test]
fn sweep_then_fit() {
    let (d, g, _, _) = setup();
    let csv = d.path().join("sweep.csv");
    let svg = d.path().join("sweep.svg");
    let out = run(&[
        "sweep",
        "-g",
        &g,
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 17);
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));

    let fit = run(&["fit", csv.to_str().unwrap()]);
    assert!(fit.status.success());
    let v: serde_json::Value = serde_json::from_slice(&fit.stdout).unwrap();
    assert!((v["slope"].as_f64().unwrap() - 2.0).abs() < 1e-6);
    assert_eq!(v["points"], 16);
}

#[test]
fn constants_and_estimate_emit_json() {
    let (_d, g, k, l) = setup();
    let c = run(&["constants", "-g", &g, "--rolling-radius", "0.5"]);
    assert!(c.status.success());
    let v: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(v["n"], 2);
    assert!((v["c_upper_value"].as_f64().unwrap() - 12.0).abs() < 1e-12);

    let e = run(&["estimate", "-g", &g, "--k", &k, "--l", &l, "--samples", "20000", "--seed", "3"]);
    assert!(e.status.success());
    let v: serde_json::Value = serde_json::from_slice(&e.stdout).unwrap();
    let (rho, ci) = (v["rhoG"].as_f64().unwrap(), v["rhoG_ci95"].as_f64().unwrap());
    assert!((rho - 2.0).abs() <= 3.0 * ci.max(1e-12), "{rho} ± {ci}");
}
