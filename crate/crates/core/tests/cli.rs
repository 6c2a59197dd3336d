//! Command-line behavior, both in process and through the built binary.

use std::process::Command;

use serde_json::Value;
use weakgame::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("weakgame").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn num(v: &Value, key: &str) -> f64 {
    v[key]
        .as_f64()
        .unwrap_or_else(|| panic!("missing {key} in {v}"))
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("weakgame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn payoff_pd_control_point() {
    let v = json(&[
        "payoff",
        "--game",
        "pd",
        "--state",
        "discorded",
        "--x",
        "0",
        "--y",
        "0",
        "--z",
        "inf",
        "--theta-b",
        "3.14159265",
    ]);
    assert!((num(&v, "u_a") - 1.5).abs() < 1e-12);
    assert!((num(&v, "u_b") - 1.75).abs() < 1e-12);
    assert!(num(&v["closed_form"], "abs_diff_b") < 1e-12);
}

#[test]
fn payoff_chsh_werner_uncorrelated() {
    let v = json(&[
        "payoff", "--game", "chsh", "--state", "werner", "--eta", "0",
    ]);
    assert!((num(&v, "u_a") - 0.5).abs() < 1e-12);
    assert!((num(&v, "u_b") + 0.5).abs() < 1e-12);
}

#[test]
fn payoff_modified_chsh_bell() {
    let v = json(&[
        "payoff",
        "--game",
        "modified_chsh",
        "--state",
        "bell",
        "--y",
        "inf",
        "--z",
        "inf",
        "--theta-ap",
        "0",
        "--theta-bp",
        "0",
    ]);
    assert!((num(&v, "u_a") + 0.25).abs() < 1e-12);
}

#[test]
fn payoff_without_closed_form_reports_null() {
    let v = json(&[
        "payoff", "--game", "pd", "--state", "bell", "--phi-a", "0.3",
    ]);
    assert!(v["closed_form"].is_null());
}

#[test]
fn payoff_csv_has_header_and_row() {
    let (code, out, _) = call(&[
        "payoff", "--game", "chsh", "--state", "bell", "--out", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "u_A,u_B,closed_u_A,closed_u_B,abs_diff_A,abs_diff_B"
    );
    assert_eq!(lines.len(), 2);
}

#[test]
fn sweep_three_steps() {
    let (code, out, _) = call(&[
        "sweep",
        "--from",
        "0",
        "--to",
        "6.283185307179586",
        "--steps",
        "3",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "x,theta_b_star,u_A_max,u_B_max");
    let ub: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ub, vec![1.75, 1.5, 1.75]);
}

#[test]
fn sweep_rejects_bad_ranges() {
    assert_eq!(call(&["sweep", "--from", "1", "--to", "0"]).0, 2);
    assert_eq!(call(&["sweep", "--steps", "1"]).0, 2);
}

#[test]
fn optimize_chsh_bell() {
    let v = json(&["optimize", "--game", "chsh", "--state", "bell"]);
    assert!((num(&v, "value") - (4.0 + 2.0 * 2f64.sqrt()) / 8.0).abs() < 1e-6);
    assert_eq!(v["assignment"].as_object().unwrap().len(), 4);
}

#[test]
fn optimize_control_point_over_theta_b() {
    let v = json(&[
        "optimize",
        "--game",
        "pd",
        "--state",
        "discorded",
        "--x",
        "0",
        "--y",
        "0",
        "--free",
        "theta_b",
        "--player",
        "b",
    ]);
    assert!((num(&v, "value") - 1.75).abs() < 1e-9);
    assert!((num(&v["assignment"], "theta_b") - std::f64::consts::PI).abs() < 1e-6);
}

#[test]
fn optimize_rejects_bad_free_sets() {
    assert_eq!(
        call(&["optimize", "--game", "chsh", "--state", "bell", "--free", "x"]).0,
        2
    );
    assert_eq!(
        call(&[
            "optimize",
            "--game",
            "chsh",
            "--state",
            "bell",
            "--free",
            "theta_a,theta_a"
        ])
        .0,
        2
    );
    assert_eq!(
        call(&["optimize", "--game", "chsh", "--state", "bell", "--free", "psi"]).0,
        2
    );
}

#[test]
fn sample_is_reproducible() {
    let args = [
        "sample", "--game", "chsh", "--state", "bell", "--rounds", "1", "--seed", "7",
    ];
    let first = call(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, call(&args));
    let v: Value = serde_json::from_str(&first.1).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["seed"], 7);
}

#[test]
fn verify_default_passes() {
    let (code, out, _) = call(&["verify", "--draws", "200"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 9);
    assert!(!out.contains("FAIL "));
}

#[test]
fn verify_flags_bad_prior() {
    let (code, out, _) = call(&["verify", "--draws", "20", "--prior", "0.3,0.3,0.2,0.1"]);
    assert_eq!(code, 1);
    assert!(out
        .lines()
        .any(|l| l.starts_with("FAIL prior_normalization")));
}

#[test]
fn verify_flags_non_psd_state() {
    let mut rho = vec![[0.0, 0.0]; 16];
    rho[0] = [1.5, 0.0];
    rho[5] = [-0.5, 0.0];
    let spec = serde_json::json!({ "type": "custom", "rho": rho }).to_string();
    let path = temp_file("bad_state.json", &spec);
    let (code, out, _) = call(&[
        "verify",
        "--draws",
        "20",
        "--state-spec",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let line = out
        .lines()
        .find(|l| l.starts_with("FAIL state_validity"))
        .unwrap();
    assert!(line.contains("positive semidefinite"), "{line}");
}

#[test]
fn game_file_drives_payoff() {
    let spec = r#"{
        "table": "chsh",
        "angles": {"theta_a": 0, "theta_ap": 1.5707963267948966, "theta_b": 0.7853981633974483, "theta_bp": -0.7853981633974483},
        "y": "projective",
        "z": "projective",
        "state": {"type": "bell"}
    }"#;
    let path = temp_file("tsirelson.json", spec);
    let v = json(&["payoff", "--spec", path.to_str().unwrap()]);
    assert!((num(&v, "u_a") - 0.853_553_390_593_273_7).abs() < 1e-12);
}

#[test]
fn schema_errors_name_the_field() {
    let path = temp_file(
        "bad_game.json",
        r#"{"table": "chsh", "y": "projective", "z": {"finite": -1}, "state": {"type": "bell"}}"#,
    );
    let (code, _, err) = call(&["payoff", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains('z'), "{err}");

    let path = temp_file(
        "bad_prior.json",
        r#"{"table": "chsh", "prior": [0.5, 0.5, 0.5, 0.5], "y": "projective", "z": "projective", "state": {"type": "bell"}}"#,
    );
    let (code, _, err) = call(&["payoff", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("prior"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["payoff", "--game", "chess", "--state", "bell"]).0, 2);
    assert_eq!(
        call(&["payoff", "--game", "pd", "--state", "bell", "--y", "-1"]).0,
        2
    );
    assert_eq!(call(&["payoff", "--game", "pd", "--state", "werner"]).0, 2);
    assert_eq!(
        call(&["payoff", "--game", "pd", "--state", "werner", "--eta", "1.5"]).0,
        2
    );
    assert_eq!(
        call(&["payoff", "--game", "pd", "--state", "bell", "--prior", "1,0"]).0,
        2
    );
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&[]).0, 2);
}

#[test]
fn binary_runs_and_exits_cleanly() {
    let exe = env!("CARGO_BIN_EXE_weakgame");
    let run = |args: &[&str]| Command::new(exe).args(args).output().unwrap();

    let out = run(&[
        "sample",
        "--game",
        "pd",
        "--state",
        "discorded",
        "--x",
        "0.5",
        "--y",
        "0",
        "--rounds",
        "1000",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let again = run(&[
        "sample",
        "--game",
        "pd",
        "--state",
        "discorded",
        "--x",
        "0.5",
        "--y",
        "0",
        "--rounds",
        "1000",
        "--seed",
        "3",
    ]);
    assert_eq!(out.stdout, again.stdout);

    let out = run(&["verify", "--draws", "10", "--prior", "0.3,0.3,0.2,0.1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["payoff", "--game", "nope", "--state", "bell"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run(&["--help"]);
    assert!(out.status.success());
}
