use std::path::PathBuf;
use std::process::{Command, Output};

use equikl::rep::GradedRepJson;
use equikl::GradedVirtualRep;

fn equikl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equikl")).args(args).env_remove("EQUIKL_CACHE_DIR").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("equikl-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn glued_cycles_coefficients() {
    let o = equikl(&["kl", "--matroid", "glued:5,6", "--blocks", "{1,2,3,4}|{5}|{6,7,8,9,10}"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "[x^0] V[4]⊗V[1]⊗V[5]");
    let counts: Vec<usize> = lines.iter().map(|l| l.matches(" + ").count() + 1).collect();
    assert_eq!(counts, vec![1, 5, 9, 6]);
    assert!(lines[3].contains("V[1^4]⊗V[1]⊗V[2,1^3]"));
}

#[test]
fn uniform_restriction_has_eleven_quadratic_terms() {
    let o = equikl(&["kl", "--matroid", "uniform:8,9", "--blocks", "{1..4}|{5..9}"]);
    let out = stdout(&o);
    let quad = out.lines().find(|l| l.starts_with("[x^2]")).unwrap();
    assert_eq!(quad.matches(" + ").count() + 1, 11);
}

#[test]
fn nonequivariant_polynomials() {
    let out = stdout(&equikl(&["nonequivariant", "--matroid", "glued:5,6"]));
    assert_eq!(out.lines().next().unwrap(), "P: 74x^3+113x^2+26x+1");
    let out = stdout(&equikl(&["nonequivariant", "--matroid", "uniform:8,9"]));
    assert_eq!(out.lines().next().unwrap(), "P: 84x^3+120x^2+27x+1");
    let out = stdout(&equikl(&["nonequivariant", "--matroid", "uniform:2,4", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], serde_json::json!([1]));
}

#[test]
fn gamma_verdicts() {
    let out = stdout(&equikl(&["gamma", "--matroid", "boolean:2", "--blocks", "{1,2}"]));
    assert!(out.contains("NOT Gamma-positive; witness Γ_1 = V[1,1] - V[2]"), "{out}");
    let out = stdout(&equikl(&["gamma", "--matroid", "uniform:2,3", "--blocks", "{1,2}"]));
    assert!(out.ends_with("Gamma-positive\n") && !out.contains("NOT"), "{out}");
    let out = stdout(&equikl(&["survey-gamma", "--family", "corank1", "--group", "S2", "--max-n", "10"]));
    assert_eq!(out.lines().count(), 9);
    assert!(out.lines().all(|l| l.ends_with(": Gamma-positive")));
}

#[test]
fn deletion_cross_check() {
    let o = equikl(&["delete", "--matroid", "glued:5,6", "--blocks", "{1..4}|{6..10}", "--element", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("MATCH"));
    let o = equikl(&["delete", "--corpus"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("MATCH ("));
}

#[test]
fn exit_codes() {
    assert_eq!(equikl(&["kl", "--matroid", "torus:3"]).status.code(), Some(1));
    assert_eq!(equikl(&["kl", "--matroid", "uniform:2,3", "--blocks", "{1,9}"]).status.code(), Some(1));
    assert_eq!(equikl(&["kl", "--matroid", "glued:5,6", "--blocks", "{1,5}"]).status.code(), Some(1));
    assert_eq!(equikl(&["verify", "--suite", "nothing"]).status.code(), Some(1));
    assert_eq!(equikl(&["delete", "--matroid", "boolean:3", "--element", "1"]).status.code(), Some(2));
    assert_eq!(equikl(&["kl", "--matroid", "pi:1,1,1,3"]).status.code(), Some(2));

    let dir = scratch("codes");
    let loopy = dir.join("loopy.json");
    std::fs::write(&loopy, r#"{"ground": [1, 2, 3], "bases": [[1], [2]]}"#).unwrap();
    assert_eq!(equikl(&["kl", "--matroid", loopy.to_str().unwrap()]).status.code(), Some(2));
    let skew = dir.join("skew.json");
    std::fs::write(&skew, r#"{"group": [[1]], "terms": [{"degree": 1, "parts": [[1]], "mult": 1}]}"#).unwrap();
    let o = equikl(&["gamma", "--input", skew.to_str().unwrap(), "--degree", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_round_trip() {
    let o = equikl(&["z", "--matroid", "glued:3,4", "--blocks", "{1,2}|{4,5,6}", "--json"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let json: GradedRepJson = serde_json::from_str(&out).unwrap();
    let z = GradedVirtualRep::from_json(json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&z.to_json()).unwrap(), out.trim_end());

    let dir = scratch("json");
    let path = dir.join("z.json");
    std::fs::write(&path, &out).unwrap();
    let o = equikl(&["gamma", "--input", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("Γ_0 = "));
}

#[test]
fn matroid_file_input() {
    let dir = scratch("file");
    let path = dir.join("u24.json");
    std::fs::write(
        &path,
        serde_json::to_string(&equikl::Matroid::uniform(2, &[1, 2, 3, 4]).unwrap().to_json()).unwrap(),
    )
    .unwrap();
    let from_file = stdout(&equikl(&["z", "--matroid", path.to_str().unwrap(), "--blocks", "{1..4}"]));
    let from_spec = stdout(&equikl(&["z", "--matroid", "uniform:2,4", "--blocks", "{1..4}"]));
    assert_eq!(from_file, from_spec);
}

#[test]
fn persistent_cache() {
    let dir = scratch("cache");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_equikl"))
            .args(["kl", "--matroid", "lambda:2,3,3,5", "--blocks", "{1,2,3}|{4,5}"])
            .env("EQUIKL_CACHE_DIR", &dir)
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert!(equikl::cache::cache_file(&dir).exists());
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_reference_suite() {
    let o = equikl(&["verify", "--suite", "paper"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
