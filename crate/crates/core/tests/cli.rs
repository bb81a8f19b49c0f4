use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superspline")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(args: &[&str]) -> Vec<Vec<String>> {
    let mut full = args.to_vec();
    full.extend(["--format", "csv"]);
    let text = stdout(&full);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d,h0,lb52,lb51,ub53,exact,method"));
    lines.map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("superspline-{}-{name}", std::process::id()))
}

#[test]
fn powell_sabin_row_with_all_methods() {
    let rows = csv_rows(&["dim", "--gen", "ps6:morgan-scott", "-r", "2", "-s", "3", "-d", "5", "--method", "all"]);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][1], "0");
    assert_eq!(rows[0][5], "67");
}

#[test]
fn argyris_pair_from_file() {
    let doc = stdout(&["gen", "argyris-demo"]);
    let path = temp_path("pair.json");
    std::fs::write(&path, doc).unwrap();
    let rows = csv_rows(&["dim", "--mesh", path.to_str().unwrap(), "-r", "1", "-s", "2", "-d", "5", "--method", "exact"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(rows[0][5], "29");
}

#[test]
fn schumaker_formula_on_generic_star() {
    let rows = csv_rows(&["dim", "--gen", "star:4-generic", "-r", "1", "-d", "2", "--method", "formula"]);
    assert_eq!(rows[0][5], "7");
    assert_eq!(rows[0][6], "formula");
}

#[test]
fn table_rows_on_split_morgan_scott() {
    let rows = csv_rows(&["table", "--gen", "ps6:morgan-scott", "-r", "2", "-s", "3", "-d", "5..6", "--check"]);
    let picked: Vec<[&str; 4]> =
        rows.iter().map(|r| [r[0].as_str(), r[1].as_str(), r[2].as_str(), r[5].as_str()]).collect();
    assert_eq!(picked, vec![["5", "0", "67", "67"], ["6", "0", "160", "160"]]);
}

#[test]
fn single_triangle_table_is_all_polynomials() {
    let rows = csv_rows(&["table", "--gen", "triangle", "-r", "2", "-s", "3", "-d", "0..8"]);
    for (d, row) in rows.iter().enumerate() {
        assert_eq!(row[0], d.to_string());
        assert_eq!(row[5], ((d + 1) * (d + 2) / 2).to_string());
    }
}

#[test]
fn canonical_edge_ideal_dump() {
    let text = stdout(&["ideal", "--canonical-edge", "-r", "1", "-s", "2", "-d", "3..5", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["generators"], serde_json::json!(["x^3", "x^2*y*z"]));
    assert_eq!(value["dims"], serde_json::json!({"3": 1, "4": 4, "5": 8}));
}

#[test]
fn bar_vertex_ideal_past_the_socle() {
    let text = stdout(&["ideal", "--gen", "morgan-scott", "--vertex", "3", "--kind", "bar", "-r", "1", "-s", "3", "-d", "6..8"]);
    for (d, want) in [(6, 28 - 10), (7, 36 - 10), (8, 45 - 10)] {
        assert!(text.contains(&format!("d={d}: {want}")), "{text}");
    }
}

#[test]
fn gen_output_round_trips() {
    let doc = stdout(&["gen", "morgan-scott"]);
    let path = temp_path("ms.json");
    std::fs::write(&path, &doc).unwrap();
    let args = ["-r", "1", "-s", "2", "-d", "3..6", "--method", "all", "--format", "json"];
    let from_file = stdout(&[&["table", "--mesh", path.to_str().unwrap()][..], &args[..]].concat());
    let builtin = stdout(&[&["table", "--gen", "morgan-scott"][..], &args[..]].concat());
    std::fs::remove_file(&path).ok();
    assert_eq!(from_file, builtin);
}

#[test]
fn json_keys_are_sorted() {
    let text = stdout(&["dim", "--gen", "morgan-scott", "-r", "1", "-d", "4", "--method", "all", "--format", "json"]);
    let keys: Vec<usize> = ["\"d\"", "\"exact\"", "\"h0\"", "\"lb51\"", "\"lb52\"", "\"method\"", "\"ub53\""]
        .iter()
        .map(|k| text.find(k).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]), "{text}");
}

#[test]
fn validate_reports_face_counts() {
    let text = stdout(&["validate", "--gen", "morgan-scott"]);
    assert!(text.contains("f0=6 f1=12 f2=7"), "{text}");
}

#[test]
fn bad_inputs_exit_with_one() {
    let path = temp_path("bad.json");
    std::fs::write(&path, r#"{"vertices":[[0,0]],"triangles":[]}"#).unwrap();
    let bad_mesh = run(&["dim", "--mesh", path.to_str().unwrap(), "-r", "1", "-d", "2"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(bad_mesh.status.code(), Some(1));

    let high = run(&["dim", "--gen", "triangle", "-r", "1", "-d", "31"]);
    assert_eq!(high.status.code(), Some(1));
    let allowed = run(&["dim", "--gen", "triangle", "-r", "1", "-d", "31", "--allow-high-degree", "--method", "formula"]);
    assert!(allowed.status.success());

    let unknown = run(&["dim", "--gen", "no-such-mesh", "-r", "1", "-d", "2"]);
    assert_eq!(unknown.status.code(), Some(1));
}
