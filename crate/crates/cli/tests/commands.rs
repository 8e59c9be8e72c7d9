use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilting-cells"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn decompose_examples() {
    assert_eq!(
        json(&["--l", "3", "decompose", "--power", "3"]),
        serde_json::json!({"3": 1, "1": 1})
    );
    assert_eq!(
        json(&["--generic", "decompose", "--power", "3"]),
        serde_json::json!({"3": 1, "1": 2})
    );
    assert_eq!(
        json(&["decompose", "--power", "3"]),
        serde_json::json!({"3": 1, "1": 2})
    );
    assert_eq!(
        json(&["--l", "3", "decompose", "--power", "1"]),
        serde_json::json!({"1": 1})
    );
    assert_eq!(
        json(&["--l", "3", "decompose", "--tensor", "2,3"]),
        serde_json::json!({"5": 1, "3": 2})
    );
    assert_eq!(
        json(&["--q", "2", "decompose", "--power", "4"]),
        serde_json::json!({"4": 1, "2": 3, "0": 2})
    );
    assert_eq!(stdout(&["--l", "3", "decompose", "--power", "3"]), "T(3) + T(1)\n");
}

#[test]
fn cellbasis_examples() {
    let v = json(&["--l", "3", "cellbasis", "--power", "3"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["context"], "l3");
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 5);
    let mut degrees: Vec<i64> = elements.iter().map(|e| e["degree"].as_i64().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, vec![0, 0, 1, 1, 2]);
    assert_eq!(v["verification"]["rank_ok"], true);
    assert_eq!(v["certificate"]["rank"], 5);

    assert_eq!(
        json(&["cellbasis", "--power", "1"])["elements"]
            .as_array()
            .unwrap()
            .len(),
        1
    );
    let v = json(&["cellbasis", "--power", "4"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 14);
    assert_eq!(v["index_sets"], serde_json::json!([[0, 2], [2, 3], [4, 1]]));
}

#[test]
fn simples_examples() {
    let csv = |args: &[&str]| {
        let mut full = args.to_vec();
        full.extend(["--format", "csv"]);
        stdout(&full)
    };
    let header = "lambda,dimC,gramRank,m_lambda,agree\n";
    assert_eq!(
        csv(&["simples", "--power", "3"]),
        format!("{header}3,1,1,1,true\n1,2,2,2,true\n")
    );
    assert_eq!(
        csv(&["--l", "3", "simples", "--power", "3"]),
        format!("{header}3,1,1,1,true\n1,2,1,1,true\n")
    );
    assert_eq!(csv(&["simples", "--power", "1"]), format!("{header}1,1,1,1,true\n"));
}

#[test]
fn tl_commands() {
    let v = json(&["tl", "compose", "2; (1,2) (3,4)", "2; (1,2) (3,4)"]);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["diagram"], "2; (1,2) (3,4)");
    assert_eq!(json(&["tl", "jw", "--signs", "+,-"]).as_array().unwrap().len(), 1);
    assert_eq!(json(&["tl", "jw", "--power", "3"]).as_array().unwrap().len(), 5);
    let gl = json(&["tl", "gl-basis", "--power", "4"]);
    assert_eq!(gl["elements"].as_array().unwrap().len(), 14);
    assert_eq!(gl["verified"], true);
    let pb = json(&["--l", "3", "tl", "pullback", "--power", "3"]);
    assert_eq!(pb["elements"].as_array().unwrap().len(), 5);
    assert_eq!(pb["flip_is_involution"], true);
}

#[test]
fn roots_commands() {
    let v = json(&["--l", "3", "roots", "sl2", "--weight", "0", "--bound", "13"]);
    assert_eq!(v["linkage_class"], serde_json::json!([0, 4, 6, 10, 12]));
    assert_eq!(run(&["roots", "a2"]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    for args in [
        &["--l", "4", "decompose", "--power", "3"][..],
        &["--l", "1", "decompose", "--power", "3"],
        &["--q", "0", "decompose", "--power", "3"],
        &["--q", "x", "decompose", "--power", "3"],
        &["decompose", "--power", "0"],
        &["decompose", "--tensor", "1,-2"],
        &["decompose"],
        &["--l", "3", "--generic", "decompose", "--power", "2"],
        &["tl", "compose", "3; (1,3) (2,4) (5,6)", "3; (1,2) (3,4) (5,6)"],
        &["--l", "3", "tl", "jw", "--power", "3"],
        &["tl", "jw", "--signs", "+,-,-"],
        &["roots", "sl2", "--weight", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reproduce_passes_and_is_deterministic() {
    let first = run(&["reproduce"]);
    assert_eq!(
        first.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&first.stdout)
    );
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert!(!text.contains("FAIL"));
    assert_eq!(run(&["reproduce"]).stdout, first.stdout);
}

#[test]
fn cache_dir_is_transparent_and_self_healing() {
    let dir = std::env::temp_dir().join(format!("tilting-cells-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let d = dir.to_str().unwrap();
    let plain = stdout(&["--l", "3", "cellbasis", "--power", "4", "--format", "json"]);
    let cold = stdout(&[
        "--l",
        "3",
        "--cache-dir",
        d,
        "cellbasis",
        "--power",
        "4",
        "--format",
        "json",
    ]);
    let warm = stdout(&[
        "--l",
        "3",
        "--cache-dir",
        d,
        "cellbasis",
        "--power",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(plain, cold);
    assert_eq!(plain, warm);

    let entry = std::fs::read_dir(&dir).unwrap().next().unwrap().unwrap().path();
    std::fs::write(&entry, "{\"digest\":\"00\",\"payload\":\"{}\"}").unwrap();
    let out = run(&[
        "--l",
        "3",
        "--cache-dir",
        d,
        "cellbasis",
        "--power",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), plain);
    assert!(String::from_utf8(out.stderr).unwrap().contains("invalidated"));

    let reproduced = run(&["--cache-dir", d, "reproduce"]);
    assert_eq!(reproduced.status.code(), Some(0));
    assert_eq!(reproduced.stdout, run(&["reproduce"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
