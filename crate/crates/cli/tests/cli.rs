use std::process::{Command, Output};

fn dng(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dng"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = dng(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_reports_all_three_values() {
    let v = json(&["analyze", "S3", "--json"]);
    assert_eq!(v["name"], "S3");
    assert_eq!(v["order"], 6);
    assert_eq!(v["classification"]["nim"], 3);
    assert_eq!(v["classification"]["rule"], "Fallthrough3");
    assert_eq!(v["classification"]["outcome"], "N-position");
    assert_eq!(v["solver_nim"], 3);
    assert_eq!(v["oracle_nim"], 3);
    assert_eq!(v["agree"], true);
    assert_eq!(v["diagram"]["nodes"], 5);
}

#[test]
fn analyze_quaternion_group() {
    let v = json(&["analyze", "Dic2", "--json"]);
    assert_eq!(v["classification"]["nim"], 0);
    assert_eq!(v["oracle_nim"], 0);
}

#[test]
fn analyze_flags_skip_stages() {
    let v = json(&["analyze", "A4", "--json", "--fast", "--no-oracle"]);
    assert_eq!(v["classification"]["nim"], 3);
    assert!(v["solver_nim"].is_null());
    assert!(v["diagram"].is_null());
    assert_eq!(v["oracle_nim"], "skipped(disabled)");
    let v = json(&["analyze", "S4", "--json", "--budget", "10"]);
    assert_eq!(v["oracle_nim"], "skipped(budget)");
    assert_eq!(v["agree"], true);
}

#[test]
fn mod_frattini_reduces_z18_x_z2() {
    let v = json(&["analyze", "Z18 x Z2", "--mod-frattini", "--json"]);
    assert_eq!(v["order"], 12);
    assert_eq!(v["reduced_from"]["order"], 36);
    assert_eq!(v["classification"]["nim"], 0);
    assert_eq!(v["oracle_nim"], 0);
    // nothing to reduce: Φ(S3) is trivial
    let v = json(&["analyze", "S3", "--mod-frattini", "--json"]);
    assert_eq!(v["order"], 6);
    assert!(v.get("reduced_from").is_none());
}

#[test]
fn text_output_is_readable() {
    let o = dng(&["analyze", "Z4"]);
    let text = stdout(&o);
    assert!(
        text.contains("classifier: *0 via EvenFrattini (second player wins)"),
        "{text}"
    );
    assert!(text.contains("agree: true"));
}

#[test]
fn exit_codes() {
    let o = dng(&["analyze", "Z2 x x Z3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 5"));
    assert_eq!(dng(&["diagram", "Q8"]).status.code(), Some(2));
    assert_eq!(dng(&["analyze", "S7"]).status.code(), Some(3));
    assert_eq!(dng(&["analyze", "Z1"]).status.code(), Some(1));
}

#[test]
fn lattice_diagram_of_a4_has_ten_nodes() {
    let o = dng(&["diagram", "A4", "--lattice"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("// dng-dot v1\n"));
    assert_eq!(
        dot.lines()
            .filter(|l| l.trim_start().starts_with('n') && l.contains("[label="))
            .count(),
        10
    );
}

#[test]
fn simplified_diagrams_agree_across_frattini_quotient() {
    let a = stdout(&dng(&["diagram", "Z6 x Z2", "--simplified"]));
    let b = stdout(&dng(&["diagram", "Z18 x Z2", "--simplified"]));
    assert!(a.contains("digraph"));
    assert_eq!(a, b);
}

#[test]
fn odd_cyclic_diagram_is_one_node() {
    let dot = stdout(&dng(&["diagram", "Z3"]));
    assert_eq!(dot.matches("[label=").count(), 1);
    assert!(dot.contains("pty=1|even=1|odd=0"));
    assert!(!dot.contains("->"));
}

#[test]
fn verify_default_catalog() {
    let o = dng(&["verify"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("name,order,classifier_nim,rule,solver_nim,oracle_nim,barnes,d")
    );
    assert!(csv.lines().any(|l| l == "S3,6,3,Fallthrough3,3,3,first,2"));
    assert!(csv
        .lines()
        .any(|l| l == "\"SL(2,3)\",24,0,EvenFrattini,0,0,second,2"));
    assert!(csv.lines().all(|l| !l.contains("skipped")));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 disagreements"));
}

#[test]
fn verify_small_orders() {
    let o = dng(&["verify", "--max-order", "8"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    assert!(csv.lines().any(|l| l == "Z8,8,0,EvenFrattini,0,0,second,1"));
    assert!(csv
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(1).unwrap().parse::<usize>().unwrap() <= 8));

    let o = dng(&["verify", "--max-order", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn verify_is_deterministic() {
    let a = dng(&["verify", "--max-order", "16"]);
    let b = dng(&["verify", "--max-order", "16"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_custom_catalog() {
    let dir = std::env::temp_dir().join(format!("dng-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("groups.txt");
    std::fs::write(&path, "# a few groups\nS3\n\nZ2 x Z2 x Z2 x Z2\nGL(2,3)\n").unwrap();
    let o = dng(&[
        "verify",
        "--catalog",
        path.to_str().unwrap(),
        "--max-order",
        "48",
        "--no-oracle",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = stdout(&o);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(
        rows[1],
        "Z2 x Z2 x Z2 x Z2,16,0,AllMaximalsEven,0,skipped(disabled),second,>3"
    );
    assert!(rows[2].starts_with("\"GL(2,3)\",48,0,EvenFrattini"));

    std::fs::write(&path, "S3\nZ2 x\n").unwrap();
    let o = dng(&["verify", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
