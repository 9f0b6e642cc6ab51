use std::process::{Command, Output};

fn knotcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn empty_word_is_the_unknot() {
    let o = knotcomp(&["homfly", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn trefoil_homfly_and_specialization() {
    let o = knotcomp(&["homfly", "1 1 1"]);
    assert_eq!(stdout(&o).trim(), "a^-2*q^2 + a^-2*q^-2 - a^-4");
    let jones_like = knotcomp(&["homfly", "1 1 1", "--n", "2"]);
    assert_eq!(stdout(&jones_like).trim(), "q^-2 + q^-6 - q^-8");
}

#[test]
fn composition_reports_each_labeling_and_passes() {
    let o = knotcomp(&["composition", "1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for z in ["∅", "{e1,e2,e5}", "{e1,e3,e4}", "{e1,e3,e5}"] {
        assert!(
            out.lines().any(|l| l.starts_with(z)),
            "missing row {z}:\n{out}"
        );
    }
    let total = out
        .lines()
        .find(|l| l.starts_with("TOTAL"))
        .expect("total line");
    assert!(total.ends_with("PASS"), "{total}");
}

#[test]
fn composition_variants_pass() {
    for extra in [
        &["--jaeger"][..],
        &["--alexander"],
        &["--jaeger", "--circle-rotation", "-1"],
    ] {
        let mut args = vec!["composition", "1 -2 1 -2"];
        args.extend_from_slice(extra);
        assert_eq!(knotcomp(&args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn unsigned_product_fails_with_exit_one() {
    let o = knotcomp(&["composition", "1 -2 1 -2", "--unsigned"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn euler_check_trefoil_alexander() {
    let o = knotcomp(&["euler-check", "1 1 1", "--alexander"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("EXPECTED q^2 - 1 + q^-2  PASS"));
}

#[test]
fn euler_check_homfly_default_passes_and_reflected_fails() {
    assert_eq!(
        knotcomp(&["euler-check", "1 1 1", "--homfly"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        knotcomp(&["euler-check", "1 1 1", "--homfly", "--reflected"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_output_is_parseable_and_deterministic() {
    let a = knotcomp(&["--json", "labelings", "1 1 1"]);
    let b = knotcomp(&["labelings", "1 1 1", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).expect("valid json");
    assert_eq!(v["labelings"].as_array().map(Vec::len), Some(4));
}

#[test]
fn tsv_rows_are_tab_separated() {
    let o = knotcomp(&["--format", "tsv", "labelings", "1 1 1"]);
    let out = stdout(&o);
    let header = out.lines().next().expect("header");
    assert_eq!(header.split('\t').count(), 13);
}

fn terms(p: &str) -> std::collections::BTreeSet<String> {
    let p = if p.starts_with('-') {
        p.to_string()
    } else {
        format!("+ {p}")
    };
    p.replace("- ", "+ -")
        .split("+ ")
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect()
}

#[test]
fn homology_of_trefoil_has_euler_of_mirror() {
    let o = knotcomp(&["homology", "1 1 1", "--cutoff", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let mirror = knotcomp(&["homfly", "-1 -1 -1"]);
    let euler = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("EULER ").map(str::to_string))
        .expect("euler line");
    let expected = stdout(&mirror).trim().to_string();
    assert_eq!(terms(&euler), terms(&expected), "{euler} vs {expected}");
}

#[test]
fn sl_minus1_of_hopf_link() {
    let o = knotcomp(&[
        "--format",
        "tsv",
        "homology",
        "1 1",
        "--sl-minus1",
        "--cutoff",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "0\t0\t1"));
}

#[test]
fn fixtures_all_pass() {
    let o = knotcomp(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["homfly", "1 x"][..],
        &["homfly", "0"],
        &["homology", "1", "--cutoff", "-1"],
        &["nonsense"],
    ] {
        let o = knotcomp(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
