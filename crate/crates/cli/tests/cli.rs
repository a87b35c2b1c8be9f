//! End-to-end runs of the binary: output shapes, exit codes, determinism.

use std::process::{Command, Output};

fn pbzlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbzlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn catalog_lists_every_entry() {
    let out = pbzlat(&["catalog"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["D1", "F8", "H", "MO2", "menarini-8"] {
        assert!(text.contains(name), "{name} missing");
    }
}

#[test]
fn check_named_claim_exit_codes() {
    let out = pbzlat(&["check", "F8", "SDM"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "holds");

    let out = pbzlat(&["check", "D5", "SK"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("counterexample"));
}

#[test]
fn check_ad_hoc_equation() {
    let out = pbzlat(&["check", "MO2", "x & (y | z) = (x & y) | (x & z)"]);
    assert_eq!(code(&out), 1);
    let out = pbzlat(&["check", "D2", "x | x' = 1"]);
    assert_eq!(code(&out), 0);
    // syntax errors are usage errors
    let out = pbzlat(&["check", "D2", "x &"]);
    assert_eq!(code(&out), 2);
    // ~ is not part of the modal language
    let out = pbzlat(&["check", "menarini-2", "x~ = 0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn classify_reports_memberships() {
    let out = pbzlat(&["classify", "F8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("antiortholattice: yes"));
    assert!(text.contains("distributive: no"));

    let out = pbzlat(&["classify-stone", "BZ4"]);
    assert!(stdout(&out).contains("kleene-quasi-stone: yes"));

    let out = pbzlat(&["classify-modal", "menarini-4"]);
    let text = stdout(&out);
    assert!(text.contains("tetravalent-modal: yes"));
    assert!(text.contains("involutive-stone: no"));
}

#[test]
fn embed_and_iso_exit_codes() {
    assert_eq!(code(&pbzlat(&["embed", "B6", "F8", "--sig", "I"])), 0);
    assert_eq!(code(&pbzlat(&["embed", "B6", "F8", "--sig", "BI"])), 1);
    assert_eq!(code(&pbzlat(&["iso", "D4", "MO2", "--sig", "BZ"])), 1);
    assert_eq!(code(&pbzlat(&["iso", "D3", "D3", "--sig", "BZ"])), 0);
    // bad signature tag is a usage error
    assert_eq!(code(&pbzlat(&["embed", "B6", "F8", "--sig", "XX"])), 2);
}

#[test]
fn congruence_listing_and_quotient() {
    let out = pbzlat(&["con", "D3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("subdirectly irreducible: yes"));

    let out = pbzlat(&["quotient", "D3", "0;a,1"]);
    assert_eq!(code(&out), 1, "not a congruence");

    let out = pbzlat(&["quotient", "D3", "0;zzz"]);
    assert_eq!(code(&out), 2, "unknown label is a usage error");
}

#[test]
fn file_round_trip() {
    let dir = std::env::temp_dir().join("pbzlat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.alg");
    let shown = stdout(&pbzlat(&["show", "H"]));
    std::fs::write(&path, &shown).unwrap();
    let out = pbzlat(&["classify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("pbz*: yes"));
    let reshown = stdout(&pbzlat(&["show", path.to_str().unwrap()]));
    assert_eq!(shown, reshown);
}

#[test]
fn constructors_print_algebras() {
    let out = pbzlat(&["osum", "D2", "D2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("signature LATTICE"));

    let out = pbzlat(&["product", "D2", "D2"]);
    assert!(stdout(&out).contains("elements (0,0) (0,1) (1,0) (1,1)"));

    let out = pbzlat(&["symext", "D2", "B6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("signature BI"));
}

#[test]
fn translate_both_ways() {
    let out = pbzlat(&["translate", "D3", "--to-modal"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("diamond 0:0 a:1 1:1"));

    let out = pbzlat(&["translate", "menarini-8", "--to-bz"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("signature BZ"));

    let out = pbzlat(&["translate", "F8", "--to-modal"]);
    assert_eq!(code(&out), 1, "F8 is not distributive");
}

#[test]
fn discriminator_verdicts() {
    assert_eq!(code(&pbzlat(&["discriminator", "D3"])), 0);
    assert_eq!(code(&pbzlat(&["discriminator", "D4"])), 1);
}

#[test]
fn verify_paper_single_fact() {
    let out = pbzlat(&["verify-paper", "--fact", "f8-sdm"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("FACT f8-sdm PASS"));

    let out = pbzlat(&["verify-paper", "--fact", "no-such-fact"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_paper_full_run_flags_only_the_worked_example() {
    let out = pbzlat(&["verify-paper"]);
    // the three worked-example refutations are expected and documented
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let fails: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("FACT") && l.contains(" FAIL "))
        .collect();
    assert_eq!(fails.len(), 3, "{fails:#?}");
    for f in &fails {
        assert!(f.starts_with("FACT example-a-"), "{f}");
    }
    // deterministic output
    let again = stdout(&pbzlat(&["verify-paper"]));
    assert_eq!(text, again);
}

#[test]
fn usage_errors_exit_two() {
    let out = pbzlat(&["frobnicate"]);
    assert_eq!(code(&out), 2);
    let out = pbzlat(&["show", "F9"]);
    assert_eq!(code(&out), 2, "unknown catalog name");
}
