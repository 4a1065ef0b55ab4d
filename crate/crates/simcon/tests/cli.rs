use std::process::{Command, Output};

fn simcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simcon"))
        .args(args)
        .env_remove("SIMCON_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_total() {
    let o = simcon(&["count", "-k", "2", "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "16\n");
}

#[test]
fn equiv_examples() {
    let o = simcon(&["equiv", "-n", "2", "abacb", "baaacbb"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equivalent\n");
    let o = simcon(&["equiv", "-n", "3", "abacb", "baaacbb"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "distinguished by: aba\n");
    let o = simcon(&["--json", "equiv", "-n", "3", "abacb", "baaacbb"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["witness"], "aba");
    assert_eq!(v["witness_in"], "x");
}

#[test]
fn domain_errors_exit_1() {
    let o = simcon(&["equiv", "-k", "2", "-n", "2", "abc", "ab"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 3"));
    assert_eq!(simcon(&["count", "-k", "2"]).status.code(), Some(1));
    assert_eq!(simcon(&["count", "-k", "0", "-n", "2"]).status.code(), Some(1));
    assert_eq!(
        simcon(&["--threads", "0", "count", "-k", "2", "-n", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(simcon(&["--frobnicate"]).status.code(), Some(1));
    assert_eq!(simcon(&["--help"]).status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_simcon"))
        .args(["count", "-k", "2", "-n", "2"])
        .env("SIMCON_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn budgets_exit_2_with_inexact_marker() {
    let o = simcon(&["--budget-seconds", "0", "count", "-k", "2", "-n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with(">= "), "{}", stdout(&o));
    assert!(stdout(&o).contains("inexact"));

    let o = simcon(&["--json", "--memory-mb", "0", "count", "-k", "3", "-n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"], false);
    assert_eq!(v["termination"], "budget_exceeded");

    let o = simcon(&["count", "-k", "2", "-n", "3", "--max-length", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("length_cap_hit"));
}

#[test]
fn json_is_identical_across_thread_counts() {
    for mode in ["exact", "fingerprint"] {
        let a = simcon(&[
            "--json",
            "--threads",
            "1",
            "count",
            "-k",
            "3",
            "-n",
            "3",
            "--mode",
            mode,
        ]);
        let b = simcon(&[
            "--json",
            "--threads",
            "3",
            "count",
            "-k",
            "3",
            "-n",
            "3",
            "--mode",
            mode,
        ]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let a = simcon(&["--json", "--seed", "5", "verify", "--samples", "40"]);
    let b = simcon(&["--json", "--seed", "5", "--threads", "4", "verify", "--samples", "40"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_count_report_fields() {
    let o = simcon(&["--json", "count", "-k", "2", "-n", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total_classes"], "4");
    assert_eq!(v["per_length"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["max_rep_length"], 2);
    assert_eq!(v["termination"], "exhausted");
    assert_eq!(v["mode"], "exact");
    assert!(v.get("duration_seconds").is_none());
    let o = simcon(&["--json", "--timing", "count", "-k", "2", "-n", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["duration_seconds"].is_number());
}

#[test]
fn representative_dump() {
    let path = std::env::temp_dir().join(format!("simcon-reps-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let o = simcon(&["count", "-k", "2", "-n", "1", "--emit-reps", p]);
    assert_eq!(o.status.code(), Some(0));
    let dump = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(dump, "ε\n\na\nb\n\nab\n");
}

#[test]
fn word_subcommands() {
    let o = simcon(&["subwords", "-n", "2", "abacb"]);
    assert_eq!(stdout(&o), "ε\na\nb\nc\naa\nab\nac\nba\nbb\nbc\ncb\n");
    let o = simcon(&["minimal", "-n", "1", "ba"]);
    assert_eq!(stdout(&o), "ab\nalready minimal: false\n");
    let o = simcon(&["minimal", "-n", "2", "aaa"]);
    assert_eq!(stdout(&o), "aa\nalready minimal: false\n");
    let o = simcon(&["minimal", "-n", "1", "ab"]);
    assert_eq!(stdout(&o), "ab\nalready minimal: true\n");
    let o = simcon(&["richness", "bbaaabbccccaabbbaa"]);
    assert_eq!(stdout(&o), "2\n");
    let o = simcon(&["richness", "-k", "4", "bbaaabbccccaabbbaa"]);
    assert_eq!(stdout(&o), "0\n");
    let o = simcon(&["factorize", "bbaaabbccccaabbbaa"]);
    assert_eq!(stdout(&o), "bbaaabb·c|cccaa·b|bbaa\n");
    let o = simcon(&["--json", "factorize", "-k", "2", "abba"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["richness"], 2);
    assert_eq!(v["pairs"][1]["segment"], "b");
    assert_eq!(v["pairs"][1]["separator"], "a");
    assert_eq!(v["tail"], "");
}

#[test]
fn bounds_subcommand() {
    let o = simcon(&["bounds", "-k", "2", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("bound"));
    for id in [
        "naive-eq1",
        "naive-eq2",
        "kppps-odd",
        "main-lower",
        "main-upper",
        "prop3",
        "prop6",
        "eq5-c2",
    ] {
        assert!(
            text.lines().any(|l| l.starts_with(id) && l.contains("holds")),
            "{id}\n{text}"
        );
    }
    let o = simcon(&["--json", "bounds", "-k", "2", "-n", "3", "--which", "naive"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["lower"], "15");
    assert_eq!(v[0]["exact_value"], "68");
    assert_eq!(v[1]["upper"], "15");

    // no known value: bounds are evaluated but unchecked
    let o = simcon(&["--json", "bounds", "-k", "3", "-n", "7", "--which", "main"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["satisfied"].is_null());
    let o = simcon(&["--json", "bounds", "-k", "2", "-n", "12", "--which", "naive"]);
    assert!(serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()[0]["exact_value"].is_null());
    let o = simcon(&["--budget-seconds", "0", "bounds", "-k", "3", "-n", "7", "--compute"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("unchecked"));
}

#[test]
fn table_subcommand() {
    let o = simcon(&["table", "--cell", "2:3", "--cell", "3:2", "--cell", "1:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "k,n,value,provenance,exactness,reference,reference_exactness,match\n\
         1,5,6,computed,exact,6,exact,match\n\
         2,3,68,computed,exact,68,exact,match\n\
         3,2,152,computed,exact,152,exact,match\n"
    );
    let o = simcon(&["table", "--embedded"]);
    let text = stdout(&o);
    assert!(text.starts_with("k,n,value,provenance,exactness\n"));
    assert!(text.contains("\n2,11,137289920,paper,exact\n"));
    assert!(text.contains("\n8,2,1730000000,paper,lower-bound\n"));

    // out of budget: a lower bound, never a mismatch
    let o = simcon(&["--budget-seconds", "0", "table", "--cell", "2:9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stdout(&o).ends_with(",lower-bound,2298592,exact,inexact\n"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn verify_subcommand() {
    let o = simcon(&["verify", "--samples", "100", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("pass ")).count(), 9);
    let o = simcon(&["verify", "--suite", "segment", "--samples", "10"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(simcon(&["verify", "--suite", "nope"]).status.code(), Some(1));
}
