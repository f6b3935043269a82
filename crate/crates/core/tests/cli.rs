use std::process::{Command, Output};

fn ik_sieve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ik-sieve")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const K33: &str = "EFz_";
const COUSIN110: &str = "I?@xvrw}?";
const K5: &str = "D~{";

#[test]
fn families_prints_members_and_size() {
    let o = ik_sieve(&["families", "k7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.last(), Some(&"family K7 size 20"));
    assert_eq!(lines.len(), 21);
}

#[test]
fn families_rejects_unknown_seed() {
    assert_eq!(ik_sieve(&["families", "petersen"]).status.code(), Some(2));
}

#[test]
fn minor_exit_codes() {
    let k33_in_k5 = ik_sieve(&["minor", K5, K33]);
    assert_eq!(k33_in_k5.status.code(), Some(1));
    assert_eq!(stdout(&k33_in_k5).trim(), "none");

    let same = ik_sieve(&["minor", K33, K33]);
    assert_eq!(same.status.code(), Some(0));
    assert_eq!(stdout(&same).trim(), "isomorphic");

    assert_eq!(ik_sieve(&["minor", "not graph6 !!", K33]).status.code(), Some(2));
}

#[test]
fn minor_prints_operations() {
    let o = ik_sieve(&["minor", "I?B~vro{?", COUSIN110]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("DELETE_EDGE "), "{text}");
}

#[test]
fn simplify_prints_trace() {
    let o = ik_sieve(&["simplify", K33, "0", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "a\tb\tNE\tNV3\tNV4\tNVY\tpredicted\tactual");
    assert_eq!(lines[2], "0\t3\t5\t4\t0\t0\t0\t0");
}

#[test]
fn simplify_rejects_equal_pair() {
    assert_eq!(ik_sieve(&["simplify", K33, "1", "1"]).status.code(), Some(2));
}

#[test]
fn sieve_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = ik_sieve(&["sieve", "--edges", "16", "--jobs", "2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(out.join("verdicts.tsv").exists());
    assert!(out.join("summary.txt").exists());
    assert!(stdout(&o).contains("ELIMINATED"));
}

#[test]
fn enumerate_writes_cache_files() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let o = ik_sieve(&["enumerate", "--edges", "12", "--cache-dir", cache.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().last().unwrap().starts_with("total "));
    let again = ik_sieve(&["enumerate", "--edges", "12", "--cache-dir", cache.to_str().unwrap()]);
    assert!(stdout(&again).contains("cached"));
    assert!(!stdout(&again).contains("generated"));
}

#[test]
fn verify_theorem_at_23_edges() {
    let o = ik_sieve(&["verify-theorem", "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("known classification reproduced"));
}

#[test]
fn verify_theorem_fails_on_unknown_budget() {
    assert_eq!(ik_sieve(&["verify-theorem", "--edges", "15"]).status.code(), Some(1));
}
