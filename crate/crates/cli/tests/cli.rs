use std::process::Command;

fn faithlab(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_faithlab")).args(args).output().unwrap()
}

fn write(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("faithlab-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn help_exits_zero() {
    assert_eq!(faithlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn dsep_on_a_mixed_graph() {
    let g = write("admg.json", r#"{"vertices": ["A","B","C"], "edges": [["A","B"]], "bidirected": [["B","C"]]}"#);
    let out = faithlab(&["dsep", &g, "--a", "A", "--b", "C"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "separated\n");
    let out = faithlab(&["dsep", &g, "--a", "A", "--b", "C", "--c", "B"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "connected\n");
}

#[test]
fn cycles_are_model_errors() {
    let g = write("cycle.json", r#"{"vertices": ["A","B"], "edges": [["A","B"],["B","A"]]}"#);
    assert_eq!(faithlab(&["project", &g]).status.code(), Some(2));
}

#[test]
fn report_goes_to_out_file() {
    let g = write("pair.json", r#"{"vertices": ["A","B"], "edges": [["A","B"]]}"#);
    let out_path = std::env::temp_dir().join(format!("faithlab-cli-{}-report.csv", std::process::id()));
    let out = faithlab(&[
        "experiment", "measure-zero", "--graph", &g, "--samples", "10", "--format", "csv", "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&out_path).unwrap();
    assert!(csv.starts_with("section,key,value\n"));
    assert!(csv.contains("summary,exact_unfaithful,0"));
}
