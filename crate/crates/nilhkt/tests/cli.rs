//! End-to-end command-line checks: exit-code contract, deterministic
//! machine-readable output, serialization roundtrips, and the shipped
//! fixture files.

use std::path::PathBuf;

use nilhkt::cli::{
    algebra_to_file, parse_algebra_file, parse_report, render_file, run_command, EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR, EXIT_OK,
};
use nilhkt::constructors::{catalog, one_parameter_family, two_parameter_family};
use nilhkt::exactlin::{int, rat, Matrix};
use nilhkt::hypercx::HypercomplexStructure;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

#[test]
fn fixtures_match_catalog_serialization() {
    for name in ["n1", "n2", "n3", "example3_12dim"] {
        let (alg, h) = catalog(name).unwrap();
        let expected = render_file(&algebra_to_file(&alg, Some(&h)));
        let shipped = std::fs::read_to_string(fixture_path(&format!("{name}.json"))).unwrap();
        assert_eq!(shipped, expected, "fixture {name}.json is out of date");
    }
}

#[test]
fn classify_fixtures() {
    for (name, step) in [("n1", 2), ("n2", 2), ("n3", 2), ("example3_12dim", 3)] {
        let path = fixture_path(&format!("{name}.json"));
        let out = run_command(&["nilhkt", "classify", path.to_str().unwrap()]);
        assert_eq!(out.code, EXIT_OK, "{name}: {}", out.stderr);
        assert_eq!(
            out.stdout,
            format!("{step}-step; abelian hypercomplex; HKT: yes; torsion: weak\n"),
            "{name}"
        );
    }
}

#[test]
fn report_is_deterministic_and_roundtrips() {
    let path = fixture_path("n3.json");
    let first = run_command(&["nilhkt", "report", path.to_str().unwrap(), "--format", "json"]);
    let second = run_command(&["nilhkt", "report", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(first.code, EXIT_OK);
    assert_eq!(first.stdout, second.stdout, "byte-identical reports");
    let report = parse_report(&first.stdout).unwrap();
    assert_eq!(nilhkt::cli::render_json(&report), first.stdout);
    let human = run_command(&["nilhkt", "report", path.to_str().unwrap()]);
    assert!(human.stdout.contains("torsion class: weak"));
}

#[test]
fn serialization_roundtrip_for_catalog_and_families() {
    let mut cases = Vec::new();
    for name in ["n1", "n2", "n3", "example3_12dim"] {
        cases.push(catalog(name).unwrap());
    }
    cases.push(one_parameter_family(2, &rat(1, 2)).unwrap());
    cases.push(one_parameter_family(3, &int(1)).unwrap());
    cases.push(two_parameter_family(3, &rat(1, 3), &rat(1, 2)).unwrap());
    for (alg, h) in cases {
        let rendered = render_file(&algebra_to_file(&alg, Some(&h)));
        let (parsed, parsed_h) = parse_algebra_file(&rendered).unwrap();
        assert_eq!(parsed, alg);
        assert_eq!(parsed_h, Some(h));
    }
}

#[test]
fn family_generation_and_invariants_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let half = dir.path().join("nt_half.json");
    let one = dir.path().join("nt_one.json");
    let gen1 = run_command(&[
        "nilhkt", "family", "t", "--l", "3", "--t", "1/2", "--out",
        half.to_str().unwrap(),
    ]);
    assert_eq!(gen1.code, EXIT_OK, "{}", gen1.stderr);
    let gen2 = run_command(&[
        "nilhkt", "family", "t", "--l", "3", "--t", "1", "--out",
        one.to_str().unwrap(),
    ]);
    assert_eq!(gen2.code, EXIT_OK, "{}", gen2.stderr);

    let distinct = run_command(&[
        "nilhkt",
        "invariants",
        half.to_str().unwrap(),
        one.to_str().unwrap(),
    ]);
    assert_eq!(distinct.code, EXIT_OK, "{}", distinct.stderr);
    assert_eq!(distinct.stdout, "distinct\n");

    let same = run_command(&[
        "nilhkt",
        "invariants",
        half.to_str().unwrap(),
        half.to_str().unwrap(),
    ]);
    assert_eq!(same.code, EXIT_OK);
    assert_eq!(same.stdout, "inconclusive\n");

    // two-parameter members separate as well
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    run_command(&[
        "nilhkt", "family", "ts", "--l", "3", "--t", "1/4", "--s", "1/2", "--out",
        a.to_str().unwrap(),
    ]);
    run_command(&[
        "nilhkt", "family", "ts", "--l", "3", "--t", "1/3", "--s", "1/2", "--out",
        b.to_str().unwrap(),
    ]);
    let out = run_command(&["nilhkt", "invariants", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "distinct\n");

    // degenerate parameters are an input error
    let bad = run_command(&["nilhkt", "family", "ts", "--l", "3", "--t", "1/2", "--s", "1/2"]);
    assert_eq!(bad.code, EXIT_INPUT_ERROR);
}

#[test]
fn non_hkt_input_exits_one() {
    // catalog algebra with its triple conjugated by diag(2,1,…,1): the
    // quaternion relations survive but the torsion identity fails
    let (alg, h) = catalog("n3").unwrap();
    let mut p = Matrix::identity(8);
    p.set(0, 0, int(2));
    let p_inv = p.inverse().unwrap();
    let conj = |j: &Matrix| &(&p_inv * j) * &p;
    let perturbed = HypercomplexStructure::new(conj(h.j(1)), conj(h.j(2)), conj(h.j(3))).unwrap();
    let rendered = render_file(&algebra_to_file(&alg, Some(&perturbed)));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perturbed.json");
    std::fs::write(&path, rendered).unwrap();

    let out = run_command(&["nilhkt", "classify", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_CHECK_FAILED, "{}", out.stdout);
    assert!(out.stdout.contains("HKT: no"), "{}", out.stdout);

    let report = run_command(&["nilhkt", "report", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(report.code, EXIT_CHECK_FAILED);
    let parsed = parse_report(&report.stdout).unwrap();
    let hx = parsed.hypercomplex.unwrap();
    assert!(!hx.hkt);
    assert!(hx.witness.is_some());
}

#[test]
fn validate_reports_every_violated_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"dim": 4, "brackets": [
            {"i": 1, "j": 2, "targets": {"3": "1"}},
            {"i": 1, "j": 3, "targets": {"4": "1"}},
            {"i": 2, "j": 4, "targets": {"1": "1"}}
        ]}"#,
    )
    .unwrap();
    let out = run_command(&["nilhkt", "validate", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT_ERROR);
    assert!(out.stdout.contains("(e1, e2, e3)"), "{}", out.stdout);

    let good = run_command(&["nilhkt", "validate", fixture_path("n1.json").to_str().unwrap()]);
    assert_eq!(good.code, EXIT_OK);
    assert!(good.stdout.contains("valid"));
}

#[test]
fn coords_on_catalog_names() {
    let out = run_command(&["nilhkt", "coords", "n2", "--point", "0,0,0,0,0,0,0,0"]);
    assert_eq!(out.code, EXIT_OK);
    // at the origin the metric is the identity
    let lines: Vec<&str> = out.stdout.trim().lines().collect();
    assert_eq!(lines.len(), 8);
    // the 12-dimensional example is not 2-step: coords must refuse
    let bad = run_command(&["nilhkt", "coords", "example3_12dim", "--point", "0,0,0"]);
    assert_eq!(bad.code, EXIT_INPUT_ERROR);
}

#[test]
fn catalog_to_stdout() {
    let out = run_command(&["nilhkt", "catalog", "n2"]);
    assert_eq!(out.code, EXIT_OK);
    let (alg, h) = catalog("n2").unwrap();
    assert_eq!(out.stdout, render_file(&algebra_to_file(&alg, Some(&h))));
}
