use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

/// Runs the binary and returns (exit code, parsed stdout, stderr).
fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pforest"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap()
    };
    (
        out.status.code().unwrap(),
        json,
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn min_forest_on_six_vertex_fixture() {
    let g = fixture("six_vertices.txt");
    let (code, json, _) = run(&[
        "min-forest",
        "--graph",
        path(&g),
        "--f",
        "all-ones",
        "--verify",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["size"], 4);
    assert_eq!(json["schema"], 1);
    assert_eq!(json["even_degree_vertices"], serde_json::json!([]));
}

#[test]
fn class_b_and_proper_forest_on_k5() {
    let g = fixture("k5.txt");
    let (code, json, _) = run(&["class-b", "--graph", path(&g)]);
    assert_eq!((code, &json["class_b"]), (0, &Value::Bool(true)));
    let (code, json, _) = run(&["proper-one-forest", "--graph", path(&g)]);
    assert_eq!(code, 2);
    assert_eq!(json["feasible"], false);
    assert_eq!(json["reason"], "class-B");
}

#[test]
fn proper_forest_on_seven_vertex_fixture() {
    let (code, json, _) = run(&[
        "proper-one-forest",
        "--graph",
        path(&fixture("seven_vertices.txt")),
        "--verify",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["proper"], true);
    assert_eq!(json["even_degree_vertices"].as_array().unwrap().len(), 1);
}

#[test]
fn avoid_edge_blocked_instance() {
    let g = fixture("avoid_blocked.txt");
    let (code, json, _) = run(&["avoid-edge", "--graph", path(&g), "--edge", "3,5"]);
    assert_eq!(code, 2);
    assert_eq!(json["reason"], "claim-C-sum-2");
    // The same graph and edge with every vertex odd except two is fine.
    let (code, json, _) = run(&[
        "avoid-edge",
        "--graph",
        path(&g),
        "--edge",
        "3,5",
        "--f",
        "1,1,0,0,0,0,0",
        "--verify",
    ]);
    assert_eq!(code, 0, "{json}");
    assert!(!json["edges"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([3, 5])));
}

#[test]
fn one_forest_pins_the_even_vertex() {
    let g = fixture("seven_vertices.txt");
    for x in 0..7 {
        let (code, json, _) = run(&[
            "one-forest",
            "--graph",
            path(&g),
            "--even-vertex",
            &x.to_string(),
            "--verify",
        ]);
        assert_eq!(code, 0);
        assert_eq!(json["even_degree_vertices"], serde_json::json!([x]));
    }
}

#[test]
fn infeasible_inputs_exit_two() {
    let (code, json, _) = run(&[
        "min-forest",
        "--graph",
        path(&fixture("seven_vertices.txt")),
    ]);
    assert_eq!((code, json["reason"].as_str()), (2, Some("odd-order")));
    let dir = tempfile::tempdir().unwrap();
    let split = dir.path().join("split.txt");
    std::fs::write(&split, "4 2\n0 1\n2 3\n").unwrap();
    let (code, json, _) = run(&["min-forest", "--graph", path(&split)]);
    assert_eq!((code, json["reason"].as_str()), (2, Some("disconnected")));
    let (code, json, _) = run(&["forest-exists", "--graph", path(&split), "--f", "1,0,1,0"]);
    assert_eq!(
        (code, json["reason"].as_str()),
        (2, Some("odd-sum-component"))
    );
    let (code, _, _) = run(&["forest-exists", "--graph", path(&split), "--verify"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n0 1\n").unwrap();
    let (code, _, err) = run(&["min-forest", "--graph", path(&bad)]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&[
        "avoid-edge",
        "--graph",
        path(&fixture("k5.txt")),
        "--edge",
        "2,2",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn gadgets_write_role_maps() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("f.cnf");
    std::fs::write(&cnf, "c one clause\np cnf 3 1\n1 2 -3 0\n").unwrap();
    let out = dir.path().join("nae.json");
    let (code, _, _) = run(&["gadget", "nae3sat", "--in", path(&cnf), "--out", path(&out)]);
    assert_eq!(code, 0);
    let rec: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(rec["n"], 34);
    assert_eq!(rec["kind"], "nae3sat");
    assert_eq!(rec["roles"]["x1^1"], 0);

    let (code, rec, _) = run(&["gadget", "induced-cycle", "--in", path(&cnf)]);
    assert_eq!(code, 0);
    assert_eq!(rec["n"], 8 * 3 + 5);
    assert!(rec["marked"]["e2"].is_array());

    let c4 = dir.path().join("c4.txt");
    std::fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let (code, rec, _) = run(&["gadget", "indset", "--in", path(&c4), "--k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(rec["n"], 66);
    let (code, _, _) = run(&["gadget", "indset", "--in", path(&c4)]);
    assert_eq!(code, 1);
}

#[test]
fn verify_command_reads_emitted_forests() {
    let dir = tempfile::tempdir().unwrap();
    let g = fixture("six_vertices.txt");
    let forest = dir.path().join("forest.json");
    let (code, _, _) = run(&["min-forest", "--graph", path(&g), "--out", path(&forest)]);
    assert_eq!(code, 0);
    let (code, json, _) = run(&["verify", "--graph", path(&g), "--forest", path(&forest)]);
    assert_eq!((code, &json["ok"]), (0, &Value::Bool(true)));
    let bare = dir.path().join("bare.json");
    std::fs::write(&bare, "[[0, 1], [1, 2], [2, 4], [4, 5]]").unwrap();
    let (code, json, _) = run(&["verify", "--graph", path(&g), "--forest", path(&bare)]);
    assert_eq!(code, 2);
    assert_eq!(json["ok"], false);
}

#[test]
fn matching_and_oracle_agree() {
    let dir = tempfile::tempdir().unwrap();
    let wg = dir.path().join("w.txt");
    std::fs::write(&wg, "4 5\n0 1 1\n1 2 5\n2 3 1\n0 3 4\n0 2 9\n").unwrap();
    let (code, json, _) = run(&["matching", "--graph", path(&wg)]);
    assert_eq!((code, &json["weight"]), (0, &serde_json::json!(2)));
    let (code, json, _) = run(&["oracle", "matching", "--graph", path(&wg)]);
    assert_eq!((code, &json["weight"]), (0, &serde_json::json!(2)));
}

#[test]
fn oracle_subcommands() {
    let g = fixture("six_vertices.txt");
    for jobs in ["1", "3"] {
        let (code, json, _) = run(&[
            "oracle",
            "--jobs",
            jobs,
            "min-forest",
            "--graph",
            path(&g),
            "--verify",
        ]);
        assert_eq!((code, &json["size"]), (0, &serde_json::json!(4)));
        let (code, json, _) = run(&["oracle", "--jobs", jobs, "enumerate", "--graph", path(&g)]);
        assert_eq!(code, 0);
        assert_eq!(json["count"], json["forests"].as_array().unwrap().len());
    }
    let (code, json, _) = run(&["oracle", "max-zero-forest", "--graph", path(&g)]);
    assert_eq!(code, 0);
    assert!(json["size"].as_u64().unwrap() >= 4);
    let (code, _, _) = run(&["oracle", "containing", "--graph", path(&g), "--edge", "0,4"]);
    assert!(code == 0 || code == 2);

    let k5 = fixture("k5.txt");
    let (code, json, _) = run(&["oracle", "max-independent-set", "--graph", path(&k5)]);
    assert_eq!((code, &json["size"]), (0, &serde_json::json!(1)));
    let (code, _, err) = run(&[
        "oracle",
        "--cap",
        "3",
        "enumerate",
        "--graph",
        path(&k5),
        "--f",
        "1,1,0,0,0",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("limit"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("f.cnf");
    std::fs::write(&cnf, "p cnf 1 1\n1 1 1 0\n").unwrap();
    let (code, json, _) = run(&["oracle", "nae-sat", "--in", path(&cnf)]);
    assert_eq!((code, json["reason"].as_str()), (2, Some("unsatisfiable")));
    let (code, json, _) = run(&["oracle", "sat", "--in", path(&cnf)]);
    assert_eq!((code, &json["assignment"]), (0, &serde_json::json!([true])));

    let c4 = dir.path().join("c4.txt");
    std::fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let (code, json, _) = run(&[
        "oracle",
        "induced-cycle",
        "--graph",
        path(&c4),
        "--e1",
        "0,1",
        "--e2",
        "2,3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["cycle"].as_array().unwrap().len(), 4);
}
