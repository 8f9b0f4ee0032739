use std::path::PathBuf;
use std::process::Command;

use subdivision_algebra::{parse_poly, parse_tpoly};

fn subdiv(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_subdiv"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_str().unwrap().to_owned()
}

const START: &str = "x[1,2]*x[2,3]*x[3,4]";

#[test]
fn scripted_games_end_at_different_forms_with_equal_images() {
    let run = |script: &str| {
        let file = data(script);
        let (code, out, err) = subdiv(&[
            "reduce",
            "--n",
            "4",
            "--beta",
            "1",
            "--alpha",
            "0",
            "--strategy",
            "script",
            "--script-file",
            &file,
            "--trace",
            "--d-image",
            START,
        ]);
        assert_eq!(code, 0, "{err}");
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.iter().filter(|l| l.starts_with("m=")).count(), 5, "{out}");
        let result = lines[lines.len() - 2];
        let d = lines[lines.len() - 1].strip_prefix("D: ").expect("D line");
        (parse_poly(result, 4).unwrap(), parse_tpoly(d, 4).unwrap())
    };
    let (q1, d1) = run("worked_game.script");
    let (q2, d2) = run("second_game.script");
    assert!(q1.is_pathless() && q2.is_pathless());
    assert_ne!(q1, q2);
    assert_eq!(d1, d2);
    assert_eq!(d1, parse_tpoly(
        "t[1]^3 + t[1]^2*t[2] + t[1]^2*t[3] + 2*t[1]^2 + t[1]*t[2]^2 + t[1]*t[2]*t[3] + 2*t[1]*t[2] + t[1]*t[3] + t[1]",
        4,
    ).unwrap());
}

#[test]
fn reduce_modes() {
    let (code, out, _) = subdiv(&["reduce", "--n", "3", "x[1,2]*x[2,3]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x[1,2]*x[1,3] + x[1,3]*x[2,3] + b*x[1,3] + a");
    let (code, out, _) = subdiv(&[
        "reduce",
        "--mode",
        "forkless",
        "--n",
        "3",
        "--beta",
        "0",
        "--alpha",
        "0",
        "x[1,2]*x[1,3]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x[1,2]*x[2,3] - x[1,3]*x[2,3]");
    let (code, a, _) = subdiv(&["reduce", "--n", "4", "--strategy", "random", "--seed", "9", START]);
    let (_, b, _) = subdiv(&["reduce", "--n", "4", "--strategy", "random", "--seed", "9", START]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
}

#[test]
fn verifications_pass() {
    for args in [
        &["verify", "groebner", "--n", "5"][..],
        &[
            "verify",
            "t-unique",
            "--n",
            "4",
            "--trials",
            "100",
            "--strategies",
            "5",
            "--seed",
            "7",
        ],
        &["verify", "ed-ba", "--n", "4", "--w-order", "4"],
        &["verify", "a-kills-j", "--n", "4"],
        &["verify", "symmetry", "--n", "4"],
        &["verify", "e-inverse", "--n", "4", "--samples", "50"],
        &["verify", "groebner", "--n", "4", "--beta", "2", "--alpha", "-1/3"],
    ] {
        let (code, out, err) = subdiv(args);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
        assert!(out.starts_with("PASS "), "{out}");
    }
}

#[test]
fn count_checks_the_generating_function() {
    let (code, out, _) = subdiv(&["count", "forkless", "--n", "5", "--max-degree", "4", "--check-gf"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0,1\n1,10\n2,45\n3,130\n4,289\n");
    let (code, out, _) = subdiv(&["basis", "forkless", "--n", "3", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn d_image_command() {
    let (code, out, _) = subdiv(&["d-image", "--n", "3", "x[1,3]*x[2,3]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t[1]*t[2]");
}

#[test]
fn exit_codes() {
    assert_eq!(subdiv(&["--help"]).0, 0);
    assert_eq!(subdiv(&["reduce", "--n", "3", "x[1,4]"]).0, 2);
    assert_eq!(subdiv(&["reduce", "--n", "3", "x[1,2"]).0, 2);
    assert_eq!(subdiv(&["verify", "groebner"]).0, 2);
    assert_eq!(subdiv(&["verify", "nonsense", "--n", "3"]).0, 2);
    assert_eq!(
        subdiv(&[
            "reduce",
            "--n",
            "3",
            "--strategy",
            "script",
            "--script-file",
            "/nonexistent",
            "x[1,2]"
        ])
        .0,
        2
    );
    let (code, _, err) = subdiv(&["verify", "t-unique", "--n", "3", "--strategies", "1"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn json_output_round_trips() {
    let (code, out, _) = subdiv(&[
        "--json", "verify", "t-unique", "--n", "4", "--trials", "20", "--seed", "3",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["check"], "t-unique");
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 3);
    let again = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(again.trim(), out.trim());

    let (_, out, _) = subdiv(&["reduce", "--json", "--n", "3", "x[1,2]*x[2,3]"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let result = parse_poly(v["result"].as_str().unwrap(), 3).unwrap();
    assert!(result.is_pathless());
    assert_eq!(v["trace"].as_array().unwrap().len(), 1);
    assert_eq!(serde_json::to_string_pretty(&v).unwrap().trim(), out.trim());
}
