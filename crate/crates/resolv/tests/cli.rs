//! End-to-end checks of the CLI surface: family construction, the Betti
//! pipelines, report commands, the cache, the exit-code contract, and the
//! verification runner.

use std::process::{Command, Output};

fn resolv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resolv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn resolv_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_resolv"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn family_simplex_prints_code_json() {
    let out = resolv(&["family", "simplex", "--q", "2", "--k", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["code"]["n"], 7);
    assert_eq!(v["code"]["k"], 3);
    assert_eq!(v["code"]["field"]["p"], 2);
}

#[test]
fn family_rm_prints_code_json() {
    let out = resolv(&["family", "rm", "--q", "2", "--r", "1", "--m", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["code"]["n"], 8);
    assert_eq!(v["code"]["k"], 4);
}

#[test]
fn family_geometric_includes_projective_system() {
    let out = resolv(&["family", "hyperoval", "--q", "4"]);
    let v = stdout_json(&out);
    assert_eq!(v["projective_system"]["k"], 3);
    assert_eq!(v["projective_system"]["points"].as_array().unwrap().len(), 6);
}

#[test]
fn family_parameter_error_exits_2() {
    let out = resolv(&["family", "hyperoval", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even characteristic"));

    let out = resolv(&["family", "nosuch", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn betti_simplex_values() {
    let out = resolv(&["betti", "--family", "simplex", "--q", "2", "--k", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["method"], "hochster");
    assert_eq!(v["pure"], true);
    assert_eq!(v["ghw"], serde_json::json!([4, 6, 7]));
    let betas: Vec<(u64, u64, String)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["i"].as_u64().unwrap(),
                e["j"].as_u64().unwrap(),
                e["beta"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert!(betas.contains(&(1, 4, "7".into())));
    assert!(betas.contains(&(2, 6, "14".into())));
    assert!(betas.contains(&(3, 7, "8".into())));
}

#[test]
fn betti_auto_switches_to_solver_beyond_scan_limit() {
    let out = resolv(&["betti", "--family", "hermitian", "--q", "2", "--k", "4"]);
    let v = stdout_json(&out);
    assert_eq!(v["method"], "shifts+bs_solve");
    assert_eq!(v["ghw"], serde_json::json!([32, 40, 44, 45]));
}

#[test]
fn betti_shifts_method() {
    let out = resolv(&["betti", "--family", "hermitian", "--q", "2", "--k", "4", "--method", "shifts"]);
    let v = stdout_json(&out);
    assert_eq!(v["shifts"]["1"], serde_json::json!([32, 36]));
    assert_eq!(v["shifts"]["2"], serde_json::json!([40, 42]));
}

#[test]
fn betti_closed_form_method() {
    let out = resolv(&["betti", "--family", "simplex", "--q", "2", "--k", "3", "--method", "closed-form"]);
    let v = stdout_json(&out);
    assert_eq!(v["method"], "closed_form");
    assert_eq!(v["ghw"], serde_json::json!([4, 6, 7]));
}

#[test]
fn betti_cache_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "betti", "--family", "ovoid", "--q", "3", "--cache-dir",
        dir.path().to_str().unwrap(),
    ];
    let cold = resolv(&args);
    let warm = resolv(&args);
    assert!(cold.status.success() && warm.status.success());
    assert_eq!(cold.stdout, warm.stdout, "cached bytes must be identical");
    assert!(String::from_utf8_lossy(&cold.stderr).contains("cache: miss"));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cache: hit"));
}

#[test]
fn betti_cache_env_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["betti", "--family", "simplex", "--q", "3", "--k", "2"];
    let env = [("RESOLV_CACHE_DIR", dir.path().to_str().unwrap())];
    let cold = resolv_env(&args, &env);
    assert!(String::from_utf8_lossy(&cold.stderr).contains("cache: miss"));
    let warm = resolv_env(&args, &env);
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cache: hit"));
    assert_eq!(cold.stdout, warm.stdout);
}

#[test]
fn betti_from_generator_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("code.json");
    let family = resolv(&["family", "simplex", "--q", "2", "--k", "3"]);
    let v = stdout_json(&family);
    std::fs::write(&path, serde_json::to_vec(&v["code"]).unwrap()).unwrap();
    let out = resolv(&["betti", "--generator", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["ghw"], serde_json::json!([4, 6, 7]));
}

#[test]
fn exactly_one_code_source_required() {
    let out = resolv(&["betti", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = resolv(&[
        "betti", "--family", "dual-hyperoval", "--q", "4", "--method", "hochster",
        "--scan-limit", "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn solver_inconsistency_exits_4(){
    // columns with projective multiplicities {1, 2, 3} put three shifts on
    // step 2, so the power-sum system has more unknowns than equations
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("code.json");
    let code = serde_json::json!({
        "field": {"p": 2, "e": 1, "modulus": [0, 1]},
        "n": 6,
        "k": 3,
        "generator": [[1,0,0,0,0,0],[0,1,1,0,0,0],[0,0,0,1,1,1]],
    });
    std::fs::write(&path, serde_json::to_vec(&code).unwrap()).unwrap();
    let out = resolv(&["betti", "--generator", path.to_str().unwrap(), "--method", "bs-solve"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn purity_reports_witnesses_under_budget() {
    let out = resolv(&[
        "purity", "--family", "rm", "--q", "2", "--r", "2", "--m", "4",
        "--subcode-limit", "4096",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["pure"], false);
    assert_eq!(v["complete"], false);
    assert_eq!(v["steps"][0]["weights"], serde_json::json!([4, 6]));
}

#[test]
fn ghw_and_wdist_commands() {
    let out = resolv(&["ghw", "--family", "ovoid", "--q", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["ghw"], serde_json::json!([6, 8, 9, 10]));

    let out = resolv(&["wdist", "--family", "dual-hyperoval", "--q", "4"]);
    let v = stdout_json(&out);
    assert_eq!(
        v["counts"],
        serde_json::json!([
            {"w": 0, "count": "1"},
            {"w": 10, "count": "18"},
            {"w": 12, "count": "45"}
        ])
    );
}

#[test]
fn verify_filter_runs_selected_items() {
    let out = resolv(&["verify", "--only", "rt3"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rt3-curve"));
    assert!(text.contains("rt3-surface"));
    assert!(text.contains("note: printed step-3 value 18"));

    let out = resolv(&["verify", "--only", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_fault_injection_exits_1_with_named_item() {
    let out = resolv_env(
        &["verify", "--only", "fault-inject"],
        &[("RESOLV_FAULT_INJECT", "1")],
    );
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL fault-inject"));
}

#[test]
fn identical_output_across_worker_counts() {
    let one = resolv(&["betti", "--family", "ovoid", "--q", "3", "--threads", "1"]);
    let eight = resolv(&["betti", "--family", "ovoid", "--q", "3", "--threads", "8"]);
    assert!(one.status.success() && eight.status.success());
    assert_eq!(one.stdout, eight.stdout);
}
