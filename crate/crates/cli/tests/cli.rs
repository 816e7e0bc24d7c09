use std::process::{Command, Output};

use serde_json::Value;

fn rankmoments(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankmoments"))
        .args(args)
        .env_remove("RANKMOMENTS_MAX_N")
        .env_remove("RANKMOMENTS_MAX_DURFEE_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = rankmoments(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn two_marked_symbols_of_five() {
    let v = json(&["durfee", "count", "--marks", "2", "--n", "5"]);
    assert_eq!(v["count"], "21");
}

#[test]
fn first_rank_filters_split_evenly() {
    for filter in ["zero", "positive", "negative"] {
        let v = json(&["durfee", "count", "--marks", "2", "--n", "5", "--rank-index", "1", "--filter", filter]);
        assert_eq!(v["count"], "7", "filter {filter}");
        assert_eq!(v["filter"], filter);
    }
}

#[test]
fn rank_vector_count() {
    let v = json(&["durfee", "count", "--marks", "2", "--n", "5", "--ranks", "1,0"]);
    assert_eq!(v["count"], "2");
}

#[test]
fn enumerate_matches_count() {
    let v = json(&["durfee", "enumerate", "--marks", "2", "--n", "5"]);
    let symbols = v.as_array().unwrap();
    assert_eq!(symbols.len(), 21);
    for s in symbols {
        assert_eq!(s["k"], 2);
        assert_eq!(s["ranks"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn rank_distribution_csv() {
    let o = rankmoments(&["rankdist", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,count\n-4,1\n-2,1\n-1,1\n0,1\n1,1\n2,1\n4,1\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["gf", "--which", "marked-zero", "--k", "1", "--order", "8", "--format", "json"];
    assert_eq!(rankmoments(&args).stdout, rankmoments(&args).stdout);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("moments.csv");
    let o = rankmoments(&[
        "moments", "--kind", "eta-bar", "--index", "3", "--n-max", "6", "--format", "csv", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,value\n1,0\n"));
    assert_eq!(text.lines().count(), 7);
    assert!(!text.contains('\r'));
}

#[test]
fn eta_bar_odd_series_coefficients() {
    let v = json(&["gf", "--which", "eta-bar-odd", "--k", "2", "--order", "5"]);
    let terms = v["terms"].as_array().unwrap();
    let at5 = terms.iter().find(|t| t["q"] == 5).unwrap();
    assert_eq!(at5["c"], "11");
}

#[test]
fn oversized_marks_are_refused() {
    let o = rankmoments(&["verify", "ji", "--k", "5", "--n-max", "30", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "refused");
    assert_eq!(v["cases_checked"], 0);
}

#[test]
fn quick_profile_passes() {
    let o = rankmoments(&["verify", "all", "--profile", "quick", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn single_verifications_pass() {
    for args in [
        vec!["verify", "andrews", "--k", "2", "--n-max", "8"],
        vec!["verify", "zero-rank", "--k", "1", "--i", "2", "--n-max", "8"],
        vec!["verify", "negative-rank", "--k", "2", "--n-max", "7"],
        vec!["verify", "symmetry", "--k", "2", "--n-max", "7"],
        vec!["verify", "gf", "--which", "even", "--k", "3", "--n-max", "20"],
        vec!["verify", "formulas", "--n-max", "20"],
    ] {
        let o = rankmoments(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn zero_is_a_usage_error() {
    assert_eq!(rankmoments(&["rankdist", "--n", "0"]).status.code(), Some(2));
    assert_eq!(rankmoments(&["durfee", "count", "--marks", "0", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn filter_needs_rank_index() {
    let o = rankmoments(&["durfee", "count", "--marks", "2", "--n", "5", "--filter", "zero"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn environment_lowers_the_cap() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_rankmoments"))
            .args(["rankdist", "--n", "12"])
            .env("RANKMOMENTS_MAX_N", cap)
            .output()
            .unwrap()
    };
    let refused = run("10");
    assert_eq!(refused.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("cap"));
    assert_eq!(run("12").status.code(), Some(0));
}
