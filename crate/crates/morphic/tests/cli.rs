use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use morphic::format::parse_morphism;
use morphic_core::constructions::{iso_equivalent, UniformRepresentation};
use morphic_core::sequence::prefix_equal;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(format!("{name}.morph"))
}

fn morphic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morphic"))
        .args(args)
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = morphic(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_fibonacci() {
    let (code, out, _) = run(&["generate", path(&corpus("fibonacci")), "-n", "10"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0100101001");
}

#[test]
fn analyze_summaries() {
    let cases = [
        ("lysenok", "Automatic(2) via 2-block morphism 1→23,2→21,3→22"),
        ("istrail", "Automatic(2) via left-eigenvector criterion, q=2"),
        ("grig_bs", "NotAutomatic: primitive, dominant eigenvalue irrational, charpoly x^4 - 2x^3 - 2x^2 - x + 2"),
    ];
    for (name, summary) in cases {
        let (code, out, _) = run(&["analyze", path(&corpus(name))]);
        assert_eq!(code, 0, "{name}");
        assert!(
            out.lines().next().unwrap().starts_with(summary),
            "{name}: {out}"
        );
    }
}

#[test]
fn analyze_json_parses() {
    let (code, out, _) = run(&["analyze", "--json", path(&corpus("cor52"))]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["verdict"]["kind"], "automatic");
    assert_eq!(json["verdict"]["q"], 4);
    assert_eq!(json["verdict"]["base"], 2);
}

#[test]
fn uniformize_istrail_gives_berstel() {
    let (code, out, _) = run(&["uniformize", "--minimize", path(&corpus("istrail"))]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# derived-from: "));
    let u = UniformRepresentation::from_spec(&parse_morphism(&out).unwrap()).unwrap();
    assert_eq!((u.q(), u.morphism().alphabet().len()), (2, 4));
    let berstel = fs::read_to_string(corpus("berstel")).unwrap();
    let berstel = UniformRepresentation::from_spec(&parse_morphism(&berstel).unwrap()).unwrap();
    assert!(iso_equivalent(&u, &berstel).is_some());
}

#[test]
fn uniformize_lysenok_is_a_precondition_failure() {
    let (code, _, err) = run(&["uniformize", path(&corpus("lysenok"))]);
    assert_eq!(code, 4);
    assert!(err.contains("eigenvector"), "{err}");
}

#[test]
fn blocks_lysenok() {
    let (code, out, _) = run(&["blocks", path(&corpus("lysenok")), "-k", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("# uniform length 2"), "{out}");
    assert!(out.contains("1→23,2→21,3→22"), "{out}");
    let spec = parse_morphism(&out).unwrap();
    assert_eq!(spec.morphism().uniform_length(), Some(2));
}

#[test]
fn compare() {
    let (code, out, _) = run(&[
        "compare",
        path(&corpus("lysenok")),
        path(&corpus("lysenok_psi")),
        "-n",
        "10000",
    ]);
    assert_eq!((code, out.trim()), (0, "equal"));
    let (code, _, err) = run(&[
        "compare",
        path(&corpus("thue_morse")),
        path(&corpus("fibonacci")),
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("position 2"), "{err}");
}

#[test]
fn cup_reports_back_check() {
    let (code, out, _) = run(&[
        "cup",
        path(&corpus("tm_cube")),
        "--pair-pos",
        "3",
        "--split",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("0 -> 0 1 1 0' 1' 0 0 1"), "{out}");
    assert!(
        out.contains("# verify_back: holds, L'M' = 8L', L' = [8, 8, 1, 15]"),
        "{out}"
    );

    let (code, out, _) = run(&["cup", path(&corpus("thue_morse"))]);
    assert_eq!(code, 0);
    assert!(out.contains("squared"), "{out}");
    assert!(out.contains("L'M' = 4L'"), "{out}");

    let (code, _, _) = run(&["cup", path(&corpus("tm_cube")), "--split", "16"]);
    assert_eq!(code, 4);
    let (code, _, _) = run(&["cup", path(&corpus("lysenok"))]);
    assert_eq!(code, 4);
}

#[test]
fn complexity_csv() {
    let (code, out, _) = run(&[
        "complexity",
        path(&corpus("sturm_bc")),
        "--nmax",
        "5",
        "-N",
        "1000",
        "--csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,p\n1,2\n2,3\n3,4\n4,5\n5,6\n");
    let (code, _, _) = run(&[
        "complexity",
        path(&corpus("sturm_bc")),
        "--nmax",
        "30",
        "-N",
        "100",
    ]);
    assert_eq!(code, 4);
}

#[test]
fn parse_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.morph");
    fs::write(&bad, "letters: a b\na -> ab\nb -> c\n").unwrap();
    let (code, _, err) = run(&["analyze", path(&bad)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, _) = run(&["analyze", path(&dir.path().join("missing.morph"))]);
    assert_eq!(code, 5);
}

#[test]
fn corpus_passes() {
    let (code, out, _) = run(&["corpus", "--run"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));
}

#[test]
fn corrupted_corpus_fails_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(corpus("lysenok"), dir.path().join("lysenok.morph")).unwrap();
    fs::write(
        dir.path().join("lysenok.expected.json"),
        r#"{"provenance": "fixture", "verdict": "not_automatic"}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["corpus", "--run", "--dir", path(dir.path())]);
    assert_eq!(code, 1);
    assert!(
        out.contains("lysenok: verdict: expected NotAutomatic, got Automatic"),
        "{out}"
    );
}

#[test]
fn empty_corpus_warns() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, err) = run(&["corpus", "--run", "--dir", path(dir.path())]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"), "{err}");
}

/// Every certificate the tool emits re-parses and reproduces the input sequence.
#[test]
fn emitted_certificates_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let entries = morphic::corpus::load_dir(&morphic::corpus::default_dir()).unwrap();
    let mut checked = 0;
    for e in entries {
        let input = e.path.to_str().unwrap();
        let (_, out, _) = run(&["analyze", "--json", input]);
        let json: serde_json::Value = serde_json::from_str(&out).unwrap();
        let Some(text) = json["verdict"]["certificate"]["morph"].as_str() else {
            continue;
        };
        let cert = dir.path().join(format!("{}.morph", e.name));
        fs::write(&cert, text).unwrap();
        let spec = parse_morphism(text).unwrap();
        let q = json["verdict"]["q"].as_u64().unwrap() as usize;
        assert_eq!(spec.morphism().uniform_length(), Some(q), "{}", e.name);
        let original = parse_morphism(&e.source).unwrap();
        assert!(prefix_equal(&original, &spec, 10_000), "{}", e.name);
        let (code, out, _) = run(&["compare", input, path(&cert)]);
        assert_eq!((code, out.trim()), (0, "equal"), "{}", e.name);
        checked += 1;
    }
    assert!(checked >= 15, "{checked}");
}
