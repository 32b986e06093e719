//! The command line: documented invocations, exit codes and byte-stable
//! output on the shipped corpus.

use ilkit::calculus::proof_corpus;
use ilkit::cli::run;

const CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");

fn ilkit(args: &[&str]) -> ilkit::cli::Outcome {
    run(std::iter::once("ilkit").chain(args.iter().copied()))
}

fn corpus(name: &str) -> String {
    format!("{CORPUS}/{name}")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = ilkit(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn remark_check_and_frame_check() {
    let remark = corpus("remark.json");
    let v = json(&["check", "--model", &remark, "--world", "w", "--formula", "[](p|<>p) -> I p"]);
    assert_eq!(v["holds"], false);
    let v = json(&["frame-check", "--model", &remark, "--condition", "FC-J1"]);
    assert_eq!(v["holds"], true);
    let v = json(&["frame-check", "--model", &remark, "--condition", "FC-J5"]);
    assert_eq!(v["holds"], false);
}

#[test]
fn prove_accepts_corpus_scripts() {
    let v = json(&["prove", "--logic", "il-uJ15", "--script", &corpus("prop-relation-2.prf")]);
    assert_eq!(v["accepted"], true);
    for e in proof_corpus() {
        let v = json(&["prove", "--script", &corpus(&format!("{}.prf", e.name))]);
        assert_eq!(v["accepted"], true, "{}", e.name);
    }
    let v = json(&["prove", "--logic", "il-", "--script", &corpus("prop-relation-2.prf")]);
    assert_eq!(v["accepted"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(ilkit(&["decide", "--logic", "IL", "--formula", "[]p -> [][]p"]).code, 2);
    assert_eq!(ilkit(&["decide", "--logic", "IL-", "--formula", "<>p |> p"]).code, 0);
    assert_eq!(ilkit(&["countermodel", "--logic", "IL-(J1)", "--formula", "p |> p"]).code, 2);
    assert_eq!(ilkit(&["parse", "--formula", "p ->"]).code, 1);
    assert_eq!(ilkit(&["decide", "--logic", "IL-(J9)", "--formula", "p"]).code, 1);
    assert_eq!(ilkit(&["frobnicate"]).code, 1);
    assert_eq!(ilkit(&["parse", "--formula", "p", "--format", "dot"]).code, 1);
}

#[test]
fn output_is_byte_stable() {
    let remark = corpus("remark.json");
    let runs: [&[&str]; 5] = [
        &["countermodel", "--logic", "IL-(J1)", "--formula", "[](p|<>p) -> I p"],
        &["canonical", "--logic", "IL-(J1)", "--formula", "[](p|<>p) -> I p"],
        &["canonical", "--logic", "IL-(J2,J5)", "--formula", "I ~p", "--format", "dot"],
        &["check", "--model", &remark, "--formula", "I p"],
        &["fixpoint", "--logic", "IL-(J1,J4+,J5)", "--formula", "I ~p", "--search-depth", "1"],
    ];
    for args in runs {
        let a = ilkit(args);
        let b = ilkit(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn shipped_scripts_match_the_corpus() {
    for e in proof_corpus() {
        let on_disk = std::fs::read_to_string(corpus(&format!("{}.prf", e.name))).unwrap();
        assert_eq!(on_disk, e.proof.to_script(Some(e.logic), Some(&e.goal)), "{}", e.name);
    }
}

#[test]
fn verbs_report_their_results() {
    let v = json(&["parse", "--formula", "I p"]);
    assert_eq!(v["formula"], "I p");
    assert_eq!(v["unary"], true);
    let v = json(&["fixpoint", "--formula", "I p"]);
    assert_eq!(v["fixed_point"], "I []_|_");
    assert_eq!(v["verdict"], "semantically-consistent");
    let v = json(&["canonical", "--logic", "IL-(J1)", "--formula", "[](p|<>p) -> I p"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["construction"]["construction"], "veltman-pairs");
    let v = json(&["correspond", "--logic", "IL-(J1,J5)", "--formula", "[](p|<>p) -> I p"]);
    assert_eq!(v["verdict"], "agree-provable");
    let v = json(&["enumerate-frames", "--worlds", "2", "--count-only"]);
    assert_eq!(v["count"], 9);
    let v = json(&["enumerate-frames", "--worlds", "2", "--logic", "IL-(J2)"]);
    assert_eq!(v["count"], v["frames"].as_array().unwrap().len());
}

#[test]
fn text_and_glyphs() {
    let out = ilkit(&["parse", "--formula", "[]p -> I p", "--format", "text"]);
    assert_eq!(out.stdout, "[]p -> I p\n");
}
