use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sumsetlab"))
        .args(args)
        .env("SUMSETLAB_THREADS", "2")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn compute() {
    let (code, out, _) = run(&["compute", "--set", "1,3,5,7", "--variant", "rss", "--h", "3"]);
    assert_eq!((code, out.as_str()), (0, "cardinality=16\n"));
    let (code, out, _) = run(&["compute", "--set", "1,3,5", "--variant", "subsums", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cardinality"], 8);
    assert_eq!(v["values"].as_array().unwrap().len(), 8);
    let (code, _, err) = run(&["compute", "--set", "1,2", "--variant", "rss", "--h", "3"]);
    assert_eq!(code, 2);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn set_literals() {
    let (code, out, _) = run(&["compute", "--set", " 7, 1 ,5,3", "--h", "3"]);
    assert_eq!((code, out.as_str()), (0, "cardinality=16\n"));
    assert_eq!(run(&["compute", "--set", "1,3,3", "--h", "1"]).0, 2);
    assert_eq!(run(&["compute", "--set", "1,a", "--h", "1"]).0, 2);
}

#[test]
fn verify() {
    let (code, out, _) = run(&["verify", "--set", "1,3,5,9", "--h", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("EqualityAndPredictedStructure") && out.contains("SumClosure4"));
    let (code, out, _) = run(&["verify", "--set", "2,6,10,14", "--h", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("EqualityAndPredictedStructure") && out.contains("DilatedOddProgression(d=2)"));
    let (code, out, _) = run(&["verify", "--set", "1,2,3,4", "--h", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("StrictInequality"));
    assert_eq!(run(&["verify", "--set", "1,3,5", "--h", "2", "--variant", "signed"]).0, 2);
}

#[test]
fn search() {
    let (code, out, _) = run(&["search", "--k", "4", "--h", "3", "--max", "9", "--regime", "positive"]);
    assert_eq!(code, 0);
    assert!(out.contains("min=16") && out.contains("falsified=false"));
    let one = run(&["search", "--k", "5", "--h", "4", "--max", "11", "--format", "json", "--shards", "1"]);
    let eight = run(&["search", "--k", "5", "--h", "4", "--max", "11", "--format", "json", "--shards", "8"]);
    assert_eq!(one, eight);
    let (code, out, _) = run(&["search", "--k", "5", "--h", "3", "--max", "9", "--regime", "zero", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"status\": \"conjecture\""));
    let (code, out, _) = run(&["search", "--k", "4", "--h", "3", "--max", "9", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "k,h,N,regime,min,bound,slack,minimizer_count,falsified");
    assert_eq!(run(&["search", "--k", "4", "--h", "2", "--max", "9"]).0, 2);
}

#[test]
fn witness() {
    let (code, out, _) = run(&["witness", "--lemma", "odd-subsums", "--set", "1,3,5,7"]);
    assert_eq!(code, 0);
    assert!(out.contains("total=15") && out.ends_with("pass\n"));
    let (code, out, _) = run(&["witness", "--lemma", "parity-split", "--set", "2,4,5,6,8", "--h", "4", "--r", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 19);
    assert_eq!(v["checks"]["disjoint"], true);
    let (code, _, _) = run(&["witness", "--lemma", "parity-split", "--set", "1,3,5,7,9", "--h", "4", "--r", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn bounds_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalogue.json");
    let (code, out, _) = run(&["bounds", "--k", "5", "--h", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let direct = v.as_array().unwrap().iter().find(|e| e["id"] == "RSS_direct").unwrap();
    assert_eq!(direct["value"], 25);
}

#[test]
fn bad_thread_override_is_an_input_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_sumsetlab"))
        .args(["compute", "--set", "1,2", "--h", "1"])
        .env("SUMSETLAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
