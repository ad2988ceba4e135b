use std::path::PathBuf;
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn ggconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ggconn"))
        .args(args)
        .env("GG_DATA_DIR", data_dir())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ggconn-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_m11_json() {
    let o = ggconn(&["analyze", "--group", "m11.grp", "--p", "3", "--all-classes", "--format", "json"]);
    assert!(o.status.success());
    let reports: Vec<ggconn::Report> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!((r.lambda_size, r.stabilizer_order, r.delta.order), (8, 144, 9));
    assert_eq!(r.class.label.as_deref(), Some("3A"));
    assert_eq!(r.connected, "no");
}

#[test]
fn analyze_a5_with_oracle() {
    let o = ggconn(&["analyze", "--group", "a5.grp", "--p", "2", "--all-classes", "--oracle"]);
    assert!(o.status.success());
    let reports: Vec<ggconn::Report> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports[0].lambda_size, 3);
    assert_eq!(reports[0].connected, "no");
    assert!(reports[0].oracle.as_ref().unwrap().agrees);
}

#[test]
fn analyze_rational_closure() {
    let o = ggconn(&["analyze", "--group", "a5.grp", "--p", "5", "--class", "o5s12a", "--rational", "--format", "tsv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[4], "true");
    assert_eq!(row[5], "4");
}

#[test]
fn same_seed_same_bytes() {
    let args = ["analyze", "--group", "j2.grp", "--p", "5", "--all-classes", "--seed", "17"];
    assert_eq!(ggconn(&args).stdout, ggconn(&args).stdout);
    let args = ["analyze", "--group", "Alt(7)", "--p", "3", "--all-classes", "--seed", "3", "--format", "tsv"];
    assert_eq!(ggconn(&args).stdout, ggconn(&args).stdout);
}

#[test]
fn spe_verdicts() {
    for (g, p, want) in [("m11.grp", "3", "true"), ("Alt(7)", "3", "false"), ("Alt(5)", "2", "true")] {
        let o = ggconn(&["spe", "--group", g, "--p", p]);
        assert_eq!(stdout(&o).trim(), want, "{g}");
    }
}

#[test]
fn coefficient_queries() {
    let o = ggconn(&["coeff", "--table", "sym3.ctbl", "--classes", "2a,2a,1a"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = ggconn(&["coeff", "--table", "2m12.ctbl", "--classes", "2b,2b,2b"]);
    assert_eq!(stdout(&o).trim(), "24");
    let o = ggconn(&["coeff", "--table", "a5.ctbl", "--clique", "2a", "--p", "2"]);
    assert_eq!(stdout(&o).trim(), "nontrivial-component");
    let o = ggconn(&["coeff", "--table", "a5.ctbl", "--edge", "3a"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classes_and_identify() {
    let o = ggconn(&["classes", "--group", "l27.grp", "--p", "7"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = ggconn(&["identify", "--group", "a5.grp", "--element", "(1 2 3)"]);
    assert_eq!(stdout(&o), "o3s20a\t3a\n");
    let o = ggconn(&["identify", "--group", "a5.grp", "--element", "(1 2)"]);
    assert!(!o.status.success());
}

#[test]
fn declared_order_gate() {
    let bad = scratch("bad.grp", "degree 5\norder 120\ngen (1 2 3 4 5)\ngen (3 4 5)\n");
    let o = ggconn(&["analyze", "--group", bad.to_str().unwrap(), "--p", "2", "--all-classes"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("declared order 120"));
}

#[test]
fn unknown_class_selector() {
    let o = ggconn(&["analyze", "--group", "m11.grp", "--p", "3", "--class", "3Z"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reproduce_reports_failures_and_skips() {
    let m = format!(
        "[[entry]]\nid = \"wrong\"\ntier = \"mandatory\"\nkind = \"coeff\"\ntable = \"{0}/a5.ctbl\"\nclasses = [\"2a\", \"2a\", \"2a\"]\ncitation = \"deliberately wrong\"\nexpect = {{ value = \"3\" }}\n\n\
         [[entry]]\nid = \"right\"\ntier = \"mandatory\"\nkind = \"edge\"\ntable = \"{0}/a5.ctbl\"\nclass = \"2a\"\ncitation = \"edge\"\nexpect = {{ value = \"true\" }}\n\n\
         [[entry]]\nid = \"absent\"\ntier = \"extended\"\nkind = \"coeff\"\ntable = \"no-such-table.ctbl\"\nclasses = [\"2A\", \"2A\", \"2A\"]\ncitation = \"missing\"\nexpect = {{ value = \"0\" }}\n",
        data_dir().display()
    );
    let path = scratch("manifest.toml", &m);
    let o = ggconn(&["reproduce", "--manifest", path.to_str().unwrap(), "--tier", "extended", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("wrong\tFAIL [value: expected 3, computed 2]"), "{text}");
    assert!(text.contains("right\tpass"));
    assert!(text.contains("absent\tskipped"));

    let only_missing = m.split("[[entry]]").nth(3).unwrap();
    let path = scratch("missing.toml", &format!("[[entry]]{only_missing}"));
    let o = ggconn(&["reproduce", "--manifest", path.to_str().unwrap(), "--tier", "extended"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 passed, 0 failed, 1 skipped"));
}

#[test]
fn shipped_manifest_mandatory_tier() {
    let path = data_dir().join("manifest.toml");
    let o = ggconn(&["reproduce", "--manifest", path.to_str().unwrap(), "--jobs", "2"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.contains(" 0 failed, 0 skipped"));
}
