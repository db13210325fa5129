use std::path::PathBuf;
use std::process::{Command, Output};

use perv_disc::cli::{parse, serialize};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perv-disc"))
        .args(args)
        .output()
        .unwrap()
}

fn run_on(args: &[&str], name: &str) -> Output {
    let path = golden(name);
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    run(&all)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn canonical_goldens_round_trip_exactly() {
    for name in [
        "q2_c_object.json",
        "q2_a2_object.json",
        "zero_c_object.json",
        "q2_scalar_morphism.json",
        "a1_matrix.json",
        "a1_empty.json",
    ] {
        let text = read(name);
        let doc = parse(&text).unwrap();
        assert_eq!(serialize(&doc), text, "{name}");
    }
    for name in ["bad_gamma_plus.json", "q2_rotation_morphism.json"] {
        let doc = parse(&read(name)).unwrap();
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc, "{name}");
    }
}

#[test]
fn validate_exit_codes() {
    let cases = [
        ("q2_c_object.json", 0, "ok: valid c-object"),
        ("q2_a2_object.json", 0, "ok: valid a2-object"),
        ("zero_c_object.json", 0, "ok: valid c-object"),
        ("q2_scalar_morphism.json", 0, "ok: valid c-morphism"),
        ("a1_matrix.json", 0, "ok: valid a1-object"),
        ("a1_empty.json", 0, "ok: valid a1-object"),
        ("q2_rotation_morphism.json", 1, "violation: containment"),
        ("bad_gamma_plus.json", 1, "violation: cross"),
    ];
    for (name, code, prefix) in cases {
        let out = run_on(&["validate"], name);
        assert_eq!(out.status.code(), Some(code), "{name}");
        assert!(stdout(&out).starts_with(prefix), "{name}: {}", stdout(&out));
    }
}

#[test]
fn parse_errors_exit_two() {
    let out = run_on(&["validate"], "zero_denominator.json");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("zero denominator"), "{err}");

    assert_eq!(
        run(&["validate", "/nonexistent/input.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn s_then_t_reproduces_the_input() {
    let s = run_on(&["map", "--functor", "s"], "q2_c_object.json");
    assert_eq!(s.status.code(), Some(0));
    assert_eq!(stdout(&s), read("q2_a2_object.json"));

    let t = run_on(&["map", "--functor", "t"], "q2_a2_object.json");
    assert_eq!(t.status.code(), Some(0));
    assert_eq!(stdout(&t), read("q2_c_object.json"));
}

#[test]
fn map_rejects_wrong_kind_and_invalid_input() {
    assert_eq!(
        run_on(&["map", "--functor", "t"], "q2_c_object.json")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_on(&["map", "--functor", "s"], "a1_matrix.json")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_on(&["map", "--functor", "s"], "q2_rotation_morphism.json")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run_on(&["map", "--functor", "t"], "bad_gamma_plus.json")
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn roundtrip_certifies() {
    for name in [
        "q2_c_object.json",
        "q2_a2_object.json",
        "q2_scalar_morphism.json",
    ] {
        let out = run_on(&["roundtrip"], name);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(stdout(&out)
            .lines()
            .last()
            .unwrap()
            .starts_with("certified"));
    }
    assert_eq!(
        run_on(&["roundtrip"], "a1_matrix.json").status.code(),
        Some(2)
    );
    assert_eq!(
        run_on(&["roundtrip"], "bad_gamma_plus.json").status.code(),
        Some(1)
    );
}

#[test]
fn gen_is_deterministic_and_valid() {
    for kind in ["c", "a2"] {
        let args = ["gen", "--kind", kind, "--seed", "17", "--max-dim", "4"];
        let first = run(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(stdout(&first), stdout(&run(&args)));
        let doc = parse(&stdout(&first)).unwrap();
        assert_eq!(serialize(&doc), stdout(&first));
    }
}

#[test]
fn small_suite_is_certified() {
    let out = run(&["suite", "--samples", "20", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().last(), Some("certified 20/20"));
}
