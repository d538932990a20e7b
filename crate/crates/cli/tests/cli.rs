use std::io::Write;
use std::process::{Command, Output};

fn pba(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pba")).args(args).output().expect("pba runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SL2: [&str; 6] = ["--f", "-2*y", "--g", "-2*x", "--h", "z"];

#[test]
fn check_jacobi_exit_codes() {
    let ok = pba(&["check-jacobi", "--f", "y", "--g", "-x", "--h", "0"]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = pba(&["check-jacobi", "--f", "y", "--g", "z", "--h", "x"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("-x - y - z"));

    let parse = pba(&["check-jacobi", "--f", "y^", "--g", "z", "--h", "x"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("offset 2"));
}

#[test]
fn bracket_values() {
    let mut args = vec!["bracket"];
    args.extend(SL2);
    args.extend(["--lhs", "x", "--rhs", "y"]);
    assert_eq!(stdout(&pba(&args)).trim(), "z");

    let same = pba(&["bracket", "--f", "x^2", "--g", "y", "--h", "1", "--lhs", "x*z", "--rhs", "x*z"]);
    assert_eq!(stdout(&same).trim(), "0");

    let eq = [
        "bracket", "--f", "2 - 2*y*z", "--g", "2 - 2*x*z", "--h", "2 - 2*x*y", "--lhs", "x", "--rhs", "y",
    ];
    assert_eq!(stdout(&pba(&eq)).trim(), "2 - 2*x*y");
}

#[test]
fn spectrum_text_and_json() {
    let out = pba(&["spectrum", "--s", "1/2*z^2 - 2*x*y", "--t", "1", "--params", "1:0,1:1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], "pba/1");
    assert_eq!(v["residually_null"]["maximal_points"][0]["point"], serde_json::json!(["0", "0", "0"]));
    for h in v["height_one"].as_array().unwrap() {
        assert_eq!(h["primes"].as_array().unwrap().len(), 1);
        assert_eq!(h["primes"][0]["primitive"], true);
    }
    // re-serializing the parsed document reproduces it
    let doc = pba_core::report::ReportDoc::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text.trim_end());

    let sxy = pba(&["spectrum", "--s", "x", "--t", "y", "--params", "1:0,0:1,1:-1"]);
    let text = stdout(&sxy);
    assert!(text.contains("dim A/I = 1"));
    for g in ["(x)A", "(y)A", "(x + y)A"] {
        assert!(text.contains(g), "{g} missing from\n{text}");
    }
}

#[test]
fn spectrum_rejects_common_factor() {
    let out = pba(&["spectrum", "--s", "x", "--t", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not coprime"));
}

#[test]
fn lift_certificates() {
    let mut args = vec!["lift"];
    args.extend(SL2);
    args.extend(["--weight", "4"]);
    let out = pba(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("point: (-1, -1, -1)"));
    assert!(text.contains("d_100 = 1"));
    assert!(text.contains("verified: b grad d = F through degree 4"));

    let direct = pba(&["lift", "--f", "x*y + 1", "--g", "0", "--h", "0", "--weight", "3"]);
    assert_eq!(direct.status.code(), Some(0));
    assert!(stdout(&direct).contains("(b, d) = (1 + x*y, x)"));

    let negative = pba(&["lift", "--f", "y", "--g", "-x", "--h", "0", "--weight", "-1"]);
    assert_eq!(negative.status.code(), Some(2));

    let not_poisson = pba(&["lift", "--f", "y", "--g", "z", "--h", "x", "--weight", "2"]);
    assert_eq!(not_poisson.status.code(), Some(1));
}

#[test]
fn corpus_runs() {
    let all = pba(&["corpus", "run"]);
    assert_eq!(all.status.code(), Some(0), "{}", stdout(&all));
    assert!(!stdout(&all).contains("FAIL"));

    let missing = pba(&["corpus", "run", "--file", "/definitely/not/here.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"[{{"name": "wrong", "s": "2*x + 2*y + 2*z - 2*x*y*z", "t": "1", "params": [], "max_deg": 1,
            "expected": {{"maximal_points": [["1", "1", "1"], ["2", "2", "2"]]}}}}]"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let wrong = pba(&["corpus", "run", "--file", path]);
    assert_eq!(wrong.status.code(), Some(1));
    let text = stdout(&wrong);
    assert!(text.contains("FAIL wrong"));
    assert!(text.contains("missing (2, 2, 2)"));

    let json = pba(&["corpus", "run", "--file", path, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["entries"][0]["passed"], false);
}
