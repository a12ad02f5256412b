use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use trhull::report::Report;
use trhull::verify::{recheck, CheckResult, Instance};
use trhull::FiniteSemigroup;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn trhull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trhull")).current_dir(root()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn hull_text_and_json() {
    let o = trhull(&["hull", "data/sgp/left-zero-2.sgp"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("hull: 4 elements (2 inner, 2 outer)"));

    let o = trhull(&["hull", "data/sgp/z2.sgp"]);
    assert!(stdout(&o).contains("hull ≅ input monoid"));

    let o = trhull(&["--json", "hull", "data/sgp/v-semilattice.sgp"]);
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.command, "hull");
    assert_eq!(r.inputs.len(), 1);
    assert_eq!(r.inputs[0].sha256.len(), 64);
    assert_eq!(r.results["counts"]["outer"], 1);
}

#[test]
fn parse_errors_exit_one() {
    let o = trhull(&["hull", "data/sgp/broken.sgp"]);
    assert_eq!(o.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sgp");
    std::fs::write(&bad, "2\n0 0\n0 x\n").unwrap();
    let o = trhull(&["hull", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(trhull(&["hull", "no/such/file.sgp"]).status.code(), Some(1));
}

#[test]
fn props_reports_the_failing_side() {
    let o = trhull(&["props", "data/sgp/left-zero-2.sgp"]);
    let text = stdout(&o);
    assert!(text.contains("left non-degenerate: yes"));
    assert!(text.contains("right non-degenerate: no"));
    assert!(text.contains("ℜ: x ↦ (y ↦ yx) injective: no"));
}

#[test]
fn extend_modes_and_preconditions() {
    let o = trhull(&["extend", "sharp", "data/sgp/z2.sgp", "data/sgp/z2.sgp", "data/hom/z2-canonical.json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("(the identity of the hull)"));

    let o = trhull(&["extend", "trhull", "data/sgp/v-semilattice.sgp", "data/sgp/v-semilattice.sgp", "data/hom/v-canonical.json"]);
    assert!(stdout(&o).contains("found 1 solution"));

    let o = trhull(&["extend", "flat", "data/sgp/z2.sgp", "data/sgp/z2.sgp", "data/hom/z2-canonical.json"]);
    assert!(o.status.success());

    let o = trhull(&["extend", "trhull", "data/sgp/chain-2.sgp", "data/sgp/chain-2.sgp", "data/hom/constant-zero.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("witness"));
}

#[test]
fn alg_subcommands() {
    assert_eq!(stdout(&trhull(&["alg", "mult", "fleet/gf2-zero-1.alg"])).trim(), "4 multiplier pairs (1 inner)");
    assert_eq!(stdout(&trhull(&["alg", "mult", "fleet/gf2-field.alg"])).trim(), "2 pairs, all inner");
    let text = stdout(&trhull(&["alg", "concretize", "fleet/gf3-zero-1.alg"]));
    assert!(text.contains("9 multipliers → hull of 81 elements"));
    assert!(text.contains("injective, not surjective: NOT concrete"));
    let text = stdout(&trhull(&["alg", "conv", "fleet/gf2-nil-2.alg"]));
    assert!(text.starts_with("convolution semigroup of order 4"));
    let text = stdout(&trhull(&["alg", "comult", "fleet/gf2-upper-3-dual.alg"]));
    assert!(text.contains("isomorphism yes, anti-isomorphism no"));
    assert_eq!(trhull(&["alg", "comult", "fleet/gf2-field.alg"]).status.code(), Some(1));
}

#[test]
fn census_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.csv");
    let o = trhull(&["census", "--order", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("order 3: 113 tables"));
    let mut rd = csv::Reader::from_path(&out).unwrap();
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>()[..3], ["index", "hash", "order"]);
    assert_eq!(rd.records().count(), 113);

    let o = trhull(&["census", "--order", "3", "--reduce-iso"]);
    assert_eq!(stdout(&o).lines().count(), 25);
    assert_eq!(trhull(&["census", "--order", "5"]).status.code(), Some(2));
}

#[test]
fn verify_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = trhull(&["verify", "--scope", "linear", "--fleet", "fleet", "--report", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(r.passed());
    assert!(r.recheck_witnesses().is_empty());

    // a report carrying a failing check re-checks to the same verdict
    let lz = FiniteSemigroup::left_zero(2);
    let rows: Vec<Vec<usize>> = lz.rows().map(<[usize]>::to_vec).collect();
    let witness = Instance { semigroups: vec![rows.clone(), rows], ..Default::default() };
    assert_eq!(recheck("monoid-homs-are-nondegenerate", &witness), Some(false));
    let mut failing = r.clone();
    failing.checks.push(CheckResult {
        id: "monoid-homs-are-nondegenerate".into(),
        pass: false,
        instances: 1,
        witness: Some(witness),
        detail: None,
    });
    let text = serde_json::to_string(&failing).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, failing);
    assert!(back.recheck_witnesses().is_empty());
    let saved = dir.path().join("f.json");
    std::fs::write(&saved, text).unwrap();
    assert!(trhull(&["recheck", saved.to_str().unwrap()]).status.success());
}

#[test]
fn verify_without_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = trhull(&["verify", "--scope", "all", "--fleet", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no inputs"));
    assert!(Path::new(&root().join("fleet")).is_dir());
}

#[test]
fn verify_set_scope_small() {
    let o = trhull(&["verify", "--scope", "set", "--max-order", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
}
