//! End-to-end checks of the `qk` binary: the exit-code contract, the
//! pinned fixture behaviors, byte-determinism of `--json` output, and
//! totality of the parser on arbitrary byte soup.

use std::io::Write;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn qk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qk")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn lemma04_on_bool2_passes_with_seven_rows() {
    let out = qk(&["laws", &fixture("bool2.qk"), "--suite", "lemma04"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("pass")).collect();
    assert_eq!(rows.len(), 7, "{text}");
    assert!(text.contains("7 checks, 0 failures"));

    let out = qk(&["--json", "laws", &fixture("bool2.qk"), "--suite", "lemma04"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], serde_json::json!(true));
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);
}

#[test]
fn morita_equivalence_gives_a_witness_bijection() {
    let out = qk(&["--json", "morita", &fixture("chain-vs-doubled.qk"), "A", "B"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equivalent"], serde_json::json!(true));
    let map = v["object_map"].as_array().unwrap();
    assert_eq!(map.len(), 2);
    assert!(v["phi"]["entries"].as_array().is_some());
    assert!(v["psi"]["entries"].as_array().is_some());
}

#[test]
fn missing_colimit_exits_one_with_the_failing_point() {
    let out = qk(&["--json", "colim", &fixture("antichain.qk"), "phi", "id"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["exists"], serde_json::json!(false));
    assert_eq!(v["at"], serde_json::json!("x"));
}

#[test]
fn every_fixture_validates() {
    for f in [
        "bool2.qk",
        "antichain.qk",
        "chain-vs-doubled.qk",
        "tropical.qk",
        "shapes.qk",
        "corpus.qk",
        "handmade.qk",
    ] {
        let out = qk(&["validate", &fixture(f)]);
        assert_eq!(code(&out), 0, "{f}: {}", stderr(&out));
    }
}

#[test]
fn computations_exit_zero_with_results() {
    let cases: &[&[&str]] = &[
        &["compose", &fixture("bool2.qk"), "collapse", "id"],
        &["compose", &fixture("bool2.qk"), "phi", "phi"],
        &["lift", &fixture("tropical.qk"), "dM", "dM"],
        &["ext", &fixture("tropical.qk"), "dM", "dM"],
        &["colim", &fixture("bool2.qk"), "phi", "id"],
        &["lim", &fixture("bool2.qk"), "phi", "id"],
        &["presheaves", &fixture("antichain.qk"), "C"],
        &["yoneda-check", &fixture("bool2.qk"), "A"],
        &["kan", &fixture("chain-vs-doubled.qk"), "j", "j", "--bruteforce"],
        &["cocomplete", &fixture("bool2.qk"), "A"],
        &["cauchy-complete", &fixture("chain-vs-doubled.qk"), "B"],
        &["cauchy-test", &fixture("bool2.qk"), "A"],
        &["matr", &fixture("corpus.qk")],
        &["bim", &fixture("corpus.qk"), "B"],
        &["dsum", &fixture("chain-vs-doubled.qk"), "A", "B"],
        &["split", &fixture("antichain.qk"), "phi"],
        &["split", &fixture("handmade.qk"), "delta"],
        &["lax-colim", &fixture("shapes.qk"), "F"],
        &["lax-colim", &fixture("shapes.qk"), "H"],
        &["laws", &fixture("handmade.qk"), "--suite", "prop150"],
    ];
    for args in cases {
        let out = qk(args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stderr(&out));
        assert!(!stdout(&out).is_empty(), "{args:?} printed nothing");
    }
}

#[test]
fn failed_properties_exit_one() {
    let cases: &[&[&str]] = &[
        &["colim", &fixture("antichain.qk"), "phi", "id"],
        &["lim", &fixture("antichain.qk"), "phi", "id"],
        &["cocomplete", &fixture("antichain.qk"), "C"],
        &["kan", &fixture("tropical.qk"), "at_p", "at_p", "--right"],
    ];
    for args in cases {
        let out = qk(args);
        assert_eq!(code(&out), 1, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn bad_input_and_bad_references_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.qk");
    std::fs::write(&bad, "category A over { }").unwrap();
    let bad = bad.to_str().unwrap();

    let unclosed = dir.path().join("unclosed.qk");
    std::fs::write(&unclosed, "quantaloid Q = bool2\ncategory A over Q { objects: x:*;").unwrap();

    let lawless = dir.path().join("lawless.qk");
    std::fs::write(
        &lawless,
        "quantaloid Q = bool2\ncategory A over Q { objects: x:*, y:*, z:*; hom x y = 1; hom y z = 1; }",
    )
    .unwrap();

    let cases: &[&[&str]] = &[
        &["validate", bad],
        &["validate", unclosed.to_str().unwrap()],
        &["validate", lawless.to_str().unwrap()],
        &["validate", "/does/not/exist.qk"],
        &["colim", &fixture("antichain.qk"), "nope", "id"],
        &["compose", &fixture("bool2.qk"), "id", "phi"],
        &["laws", &fixture("bool2.qk"), "--suite", "nope"],
        &["morita", &fixture("bool2.qk"), "A", "nope"],
        &["split", &fixture("antichain.qk"), "partial"],
    ];
    for args in cases {
        let out = qk(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?} gave no diagnostics");
        assert!(stdout(&out).is_empty(), "{args:?} wrote to stdout on failure");
    }
}

#[test]
fn usage_errors_from_the_argument_parser_exit_two() {
    let out = qk(&["not-a-verb"]);
    assert_eq!(code(&out), 2);
    let out = qk(&[]);
    assert_eq!(code(&out), 2);
}

#[test]
fn cap_overruns_exit_three() {
    let cases: &[&[&str]] = &[
        &["presheaves", &fixture("bool2.qk"), "A", "--cap", "2"],
        &["cocomplete", &fixture("bool2.qk"), "A", "--cap", "2"],
        &["morita", &fixture("chain-vs-doubled.qk"), "A", "B", "--cap", "2"],
    ];
    for args in cases {
        let out = qk(args);
        assert_eq!(code(&out), 3, "{args:?}: {}", stderr(&out));
        assert!(stderr(&out).contains("cap"), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn json_output_is_byte_deterministic() {
    let runs: &[&[&str]] = &[
        &["--json", "laws", &fixture("corpus.qk"), "--seed", "7"],
        &["--json", "morita", &fixture("chain-vs-doubled.qk"), "A", "B"],
        &["--json", "presheaves", &fixture("tropical.qk"), "M"],
        &["--json", "lax-colim", &fixture("shapes.qk"), "G"],
    ];
    for args in runs {
        let a = qk(args);
        let b = qk(args);
        assert_eq!(code(&a), code(&b));
        assert_eq!(a.stdout, b.stdout, "{args:?} differed between runs");
        let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
        assert_eq!(v["schema"], serde_json::json!(1));
    }
}

#[test]
fn seeds_resample_the_law_corpus_without_breaking_it() {
    for seed in ["1", "2", "99"] {
        let out =
            qk(&["--json", "laws", &fixture("corpus.qk"), "--suite", "prop150", "--seed", seed]);
        assert_eq!(code(&out), 0, "seed {seed}: {}", stderr(&out));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["failures"], serde_json::json!(0));
    }
}

#[test]
fn fixtures_round_trip_through_the_printer() {
    for f in [
        "bool2.qk",
        "antichain.qk",
        "chain-vs-doubled.qk",
        "tropical.qk",
        "shapes.qk",
        "corpus.qk",
        "handmade.qk",
    ] {
        let src = std::fs::read_to_string(fixture(f)).unwrap();
        let (doc, diags) = qk::parser::parse(&src);
        assert!(diags.is_empty(), "{f}: {diags:?}");
        let printed = qk::pretty::pretty(&doc);
        let (doc2, diags2) = qk::parser::parse(&printed);
        assert!(diags2.is_empty(), "{f} reprinted with errors: {diags2:?}\n{printed}");
        assert_eq!(doc, doc2, "{f} changed across print/parse");

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(f);
        let mut file = std::fs::File::create(&path).unwrap();
        file.write_all(printed.as_bytes()).unwrap();
        drop(file);
        let out = qk(&["validate", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "printed {f} no longer validates: {}", stderr(&out));
    }
}

/// A tiny deterministic byte-soup generator; the parser and loader
/// must survive anything it produces without panicking.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

#[test]
fn parser_and_loader_are_total_on_byte_soup() {
    let vocab: &[&str] = &[
        "lattice", "quantaloid", "category", "functor", "distributor", "shape", "laxfunctor",
        "objects", "elements", "order", "hom", "compose", "id", "generate", "over", "meet",
        "bool2", "tropical", "rel_locale", "point", "walking-arrow", "{", "}", "(", ")", ":",
        ";", ",", "->", "-|->", "<=", "=", ".", "*", "a", "b", "x", "y", "0", "1", "2", "#",
        "\n", " ", "\u{3bb}", "\"", "@",
    ];
    let mut rng = XorShift(0x9e3779b97f4a7c15);
    for _ in 0..500 {
        let len = (rng.next() % 60) as usize;
        let mut src = String::new();
        for _ in 0..len {
            src.push_str(vocab[(rng.next() % vocab.len() as u64) as usize]);
            if rng.next() % 3 == 0 {
                src.push(' ');
            }
        }
        let (doc, _) = qk::parser::parse(&src);
        let _ = qk::loader::load(&doc);
        let printed = qk::pretty::pretty(&doc);
        let _ = qk::parser::parse(&printed);
    }
}
