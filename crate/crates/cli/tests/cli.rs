use std::process::Command;

use schubcalc::complexes::SimplicialComplex;
use schubcalc::poly::Polynomial;
use schubcalc::shuffle::MarkedWord;
use schubcalc::{Permutation, Word};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubcalc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {stderr}");
    stdout
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> T {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&ok(&all)).expect("valid JSON")
}

#[test]
fn schubert_of_1432() {
    let p: Polynomial = json(&["poly", "schubert", "[1432]"]);
    let want = Polynomial::parse("x_1^2*x_2 + x_1^2*x_3 + x_1*x_2^2 + x_1*x_2*x_3 + x_2^2*x_3").unwrap();
    assert_eq!(p, want);
    assert_eq!(Polynomial::parse(ok(&["poly", "schubert", "[1432]"]).trim()).unwrap(), want);
}

#[test]
fn reduced_words_of_1432() {
    assert_eq!(ok(&["perm", "reduced-words", "[1432]"]), "232\n323\n");
    let ws: Vec<Word> = json(&["perm", "reduced-words", "[1432]"]);
    assert_eq!(ws, vec!["232".parse().unwrap(), "323".parse::<Word>().unwrap()]);
}

#[test]
fn monk_example_run() {
    assert_eq!(ok(&["shuffle", "monk", "--i", "3", "--word", "323432", "--pos", "5"]), "1232432\n");
    let traced = ok(&["shuffle", "monk", "--i", "3", "--word", "323432", "--pos", "5", "--trace"]);
    assert_eq!(traced.lines().count(), 4);
}

#[test]
fn monk_inverse_recovers_input() {
    let pi: Permutation = "323432".parse::<Word>().unwrap().product();
    let v: serde_json::Value = json(&["shuffle", "monk-inv", "--i", "3", "--perm", &pi.to_string(), "--word", "1232432"]);
    assert_eq!(serde_json::from_value::<Word>(v["word"].clone()).unwrap(), "323432".parse().unwrap());
    assert_eq!(v["pos"], 5);
}

#[test]
fn pieri_round_trip_with_negative_letters() {
    let out = ok(&["shuffle", "pieri", "--i", "2", "--word", "12∞↓1∞↓"]);
    assert_eq!(out, "-1,0,2,1,2\n");
    let back: MarkedWord = json(&["shuffle", "pieri-inv", "--i", "2", "--perm", "[321]", "--word", "-1,0,2,1,2"]);
    assert_eq!(back, "12∞↓1∞↓".parse().unwrap());
}

#[test]
fn verify_rules() {
    for rule in ["monk", "pieri-c", "pieri-r"] {
        let out = ok(&["shuffle", "verify", "--rule", rule, "--perm", "[321]", "--i", "1", "--k", "2"]);
        assert!(out.ends_with("bijection\n") && !out.contains("NOT"), "{rule}: {out}");
    }
    let out = ok(&["shuffle", "verify", "--rule", "monk", "--perm", "[321]", "--i", "1"]);
    assert!(out.starts_with("8 inputs, 3 targets with 8 reduced words"));
}

#[test]
fn subword_complex_round_trips() {
    let v: serde_json::Value = json(&["complex", "subword", "--q", "321323", "--perm", "[1432]"]);
    let d: SimplicialComplex = serde_json::from_value(v["complex"].clone()).unwrap();
    assert_eq!(d.num_facets(), 5);
    assert_eq!(v["classification"]["kind"], "ball");
    let text = serde_json::to_string(&v["complex"]).unwrap();
    let again: serde_json::Value = json(&["complex", "classify", "--complex", &text]);
    assert_eq!(again["classification"], v["classification"]);
    assert!(ok(&["complex", "subword", "--q", "321323", "--perm", "[1432]", "--format", "dot"]).starts_with("graph"));
    assert!(ok(&["complex", "subword", "--q", "321323", "--perm", "[1432]", "--format", "svg"]).contains("<svg"));
}

#[test]
fn stanley_reisner_generators() {
    assert_eq!(
        ok(&["complex", "sr-generators", "--q", "321323", "--perm", "[1432]"]),
        "z1*z4\nz1*z5\nz2*z5\nz2*z6\nz4*z6\n"
    );
}

#[test]
fn tableau_complexes() {
    let v: serde_json::Value = json(&["complex", "tableau", "--family", "syt", "--shape", "2,1", "--n", "3"]);
    assert_eq!(v["classification"]["kind"], "neither");
    let v: serde_json::Value = json(&["complex", "tableau", "--family", "ssyt", "--shape", "1,1,1", "--n", "4"]);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 4);
    let out = ok(&["complex", "decompose-ssyt", "--shape", "2,1", "--n", "3"]);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn polynomial_commands() {
    assert_eq!(ok(&["poly", "slide", "1,0,1"]), "x_1*x_2 + x_1*x_3\n");
    assert_eq!(ok(&["poly", "schubert", "[321]"]), "x_1^2*x_2\n");
    let s: Polynomial = json(&["poly", "schur", "2,1", "--n", "3"]);
    assert_eq!(s.num_terms(), 7);
    let g: Polynomial = json(&["poly", "glide", "0,1"]);
    assert_eq!(g, Polynomial::parse("x_1 + x_2 - x_1*x_2").unwrap());
    let b: Polynomial = json(&["poly", "backstable", "[21]", "--lower-bound", "-1"]);
    assert_eq!(b, Polynomial::parse("x_-1 + x_0 + x_1").unwrap());
    assert_eq!(ok(&["expand", "schubert-slides", "[1432]"]).lines().count(), 2);
    assert_eq!(ok(&["expand", "schur-fqs", "2,1", "--n", "3"]).lines().count(), 2);
}

#[test]
fn permutation_commands() {
    assert_eq!(ok(&["perm", "demazure", "53153243"]), "[246135]\n");
    assert_eq!(ok(&["perm", "tau", "[321]"]), "[1432]\n");
    let back: Permutation = json(&["perm", "tau", "[1432]", "--shift", "-1"]);
    assert_eq!(back, "[321]".parse().unwrap());
    assert_eq!(ok(&["perm", "lehmer", "[1432]"]), "(0,2,1,0)\n");
}

#[test]
fn pipe_dream_commands() {
    assert_eq!(ok(&["pipedreams", "list", "[1432]"]).matches("word").count(), 5);
    assert!(ok(&["pipedreams", "qy", "315243", "--format", "svg"]).contains("<svg"));
    let (code, _, _) = run(&["pipedreams", "qy", "2312"]);
    assert_eq!(code, 1);
}

#[test]
fn selftest_passes() {
    let out = ok(&["selftest"]);
    assert!(out.ends_with(" passed, 0 failed\n"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["perm", "reduced-words", "[14x2]"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 3"), "{err}");
    let (code, _, _) = run(&["perm", "reduced-words", "[1132]"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["poly", "schubert", "[321]", "--format", "dot"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["nonsense"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["shuffle", "monk-inv", "--i", "1", "--perm", "[321]", "--word", "232"]);
    assert_eq!(code, 1);
}
