//! End-to-end checks of the command-line surface: grammar, determinism,
//! config-echo closure, and exit codes.

use std::process::Command;

fn vertexlab(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_vertexlab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn z_brute_matches_enumeration() {
    let (out, code) = vertexlab(&[
        "z", "--model", "6v", "--n", "3", "--weights", "a=1,b=1,c=1", "--method", "brute",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"brute_exact\": \"7\""), "{out}");
}

#[test]
fn z_difrancesco() {
    let (out, code) = vertexlab(&["z", "--model", "20v", "--n", "2", "--method", "difrancesco"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"difrancesco_exact\": \"4\""), "{out}");
}

#[test]
fn z_cross_method_delta_is_small() {
    let (out, code) = vertexlab(&[
        "z",
        "--model",
        "6v",
        "--n",
        "2",
        "--method",
        "brute,ik",
        "--spectral",
        "random:seed=7",
    ]);
    assert_eq!(code, 0);
    let record: serde_json::Value = serde_json::from_str(&out).unwrap();
    let delta: f64 = record["oracle_comparisons"]["ik_vs_brute"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!(delta <= 1e-10, "cross-method delta {delta}");
}

#[test]
fn efp_enumerated_value() {
    let (out, code) = vertexlab(&["efp", "--model", "6v", "--n", "2", "--r", "1", "--s", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("5.0000000000000000e-1"), "{out}");
}

#[test]
fn check_commands_pass_and_report() {
    for relation in ["ab-exchange", "bb-commute", "cc-commute", "transfer-commute", "omega", "geom-sum", "fundamental"] {
        let (out, code) = vertexlab(&["check", relation, "--sites", "3", "--seed", "1"]);
        assert_eq!(code, 0, "{relation}: {out}");
        assert!(out.contains("\"status\": \"pass\""), "{relation}: {out}");
    }
    let (out, code) = vertexlab(&["check", "3d:GEC", "--trunc", "2", "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("report-only"), "{out}");
    let (_, code) = vertexlab(&["check", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "z", "--model", "6v", "--n", "2", "--method", "brute,ik", "--spectral", "random:seed=9",
    ];
    let (a, _) = vertexlab(&args);
    let (b, _) = vertexlab(&args);
    assert_eq!(a, b);
}

#[test]
fn config_echo_closure() {
    let (out, _) = vertexlab(&[
        "z", "--model", "6v", "--n", "3", "--weights", "a=3/2,b=1,c=1/2", "--method", "brute",
    ]);
    let record: serde_json::Value = serde_json::from_str(&out).unwrap();
    let dir = std::env::temp_dir().join("vertexlab_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("echo.json");
    std::fs::write(&path, serde_json::to_string(&record["config"]).unwrap()).unwrap();
    let (replayed, code) = vertexlab(&["z", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, replayed);
}

#[test]
fn restricted_and_hratio() {
    let (out, code) = vertexlab(&[
        "restricted", "--model", "6v", "--n", "3", "--which", "bottom", "--rs", "2",
    ]);
    assert_eq!(code, 0);
    let record: serde_json::Value = serde_json::from_str(&out).unwrap();
    let delta: f64 = record["oracle_comparisons"]["contour_vs_brute"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!(delta <= 1e-8, "contour delta {delta}");
    let (out, code) = vertexlab(&["hratio", "--model", "6v", "--n", "2", "--rs", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("h_ratio"), "{out}");
}

#[test]
fn bad_configuration_exits_two() {
    let (_, code) = vertexlab(&["z", "--model", "6v"]);
    assert_eq!(code, 2);
    let (_, code) = vertexlab(&["frobnicate"]);
    assert_eq!(code, 2);
}
