use std::process::{Command, Output};

fn tabkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tabkit"))
        .args(args)
        .env_remove("TABKIT_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn single_class_at_degree_one() {
    let o = tabkit(&["classes", "--n", "1", "--relation", "equiv0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 classes"));
    let o = tabkit(&[
        "classes",
        "--n",
        "1",
        "--relation",
        "equiv0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 1);
    assert_eq!(v["classes"][0]["size"], 1);
}

#[test]
fn dot_export_has_clusters_and_labelled_edges() {
    let o = tabkit(&[
        "classes",
        "--n",
        "5",
        "--relation",
        "equiv1",
        "--format",
        "dot",
    ]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph \"equiv1\""));
    assert!(dot.contains("subgraph cluster_0"));
    assert!(dot.contains("generator=\"equiv1\""));
    let o = tabkit(&[
        "classes",
        "--n",
        "4",
        "--relation",
        "equiv2",
        "--format",
        "dot",
    ]);
    assert!(stdout(&o).starts_with("graph \"equiv2\""));
}

#[test]
fn hook_shape_classes_have_sizes_six_and_four() {
    let o = tabkit(&[
        "classes",
        "--shape",
        "6,1,1,1",
        "--relation",
        "equiv1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let sizes: Vec<u64> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert!(sizes.contains(&6) && sizes.contains(&4));
    assert_eq!(sizes.iter().sum::<u64>(), 56);
}

#[test]
fn restricted_moves_split_222() {
    let o = tabkit(&[
        "classes",
        "--alpha",
        "2,2,2",
        "--relation",
        "quasiDualSRT-restricted",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["count"].as_u64().unwrap() > 1);
    let o = tabkit(&[
        "classes",
        "--alpha",
        "2,2,2",
        "--relation",
        "quasiDualSRT",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn schur_expansion_of_a_shape() {
    let o = tabkit(&["expand", "--shape", "4,4,1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let total: i64 = v["fundamental"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["coeff"].as_i64().unwrap())
        .sum();
    // hook lengths of (4,4,1): 6 4 3 2 / 5 3 2 1 / 1
    let hooks: i64 = [6, 4, 3, 2, 5, 3, 2, 1, 1].iter().product();
    assert_eq!(total, (1..=9).product::<i64>() / hooks);
    assert_eq!(v["symmetric"], true);
    assert_eq!(
        v["schur"]["coeffs"],
        serde_json::json!([{"partition": "4,4,1", "coeff": 1}])
    );
}

#[test]
fn class_expansion_reports_symmetry() {
    let o = tabkit(&[
        "expand",
        "--class-of",
        "21345",
        "--relation",
        "equiv2",
        "--n",
        "5",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("F-expansion"));
    assert!(text.contains("symmetric: "));
    let o = tabkit(&[
        "expand",
        "--class-of",
        "21345",
        "--relation",
        "dual",
        "--n",
        "5",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["schur"]["coeffs"][0]["partition"], "4,1");
}

#[test]
fn quasi_schur_decomposes_nonnegatively() {
    let o = tabkit(&["expand", "--quasischur", "2,3,2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["decomposition"]["nonnegative"], true);
    assert_eq!(v["decomposition"]["family"], "equiv2");
    for k in ["0", "1"] {
        let o = tabkit(&[
            "expand",
            "--quasischur",
            "2,3,2",
            "--k",
            k,
            "--format",
            "json",
        ]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["decomposition"]["nonnegative"], true);
    }
}

#[test]
fn verify_suites() {
    let o = tabkit(&["verify", "--suite", "poset", "--n", "1"]);
    assert!(o.status.success());
    let o = tabkit(&["verify", "--suite", "mason", "--n", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rho intertwines"));
    let o = tabkit(&[
        "verify",
        "--suite",
        "conjecture",
        "--n",
        "7",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn output_is_stable() {
    let args = [
        "classes",
        "--n",
        "6",
        "--relation",
        "equiv0",
        "--format",
        "json",
        "--jobs",
        "2",
    ];
    assert_eq!(tabkit(&args).stdout, tabkit(&args).stdout);
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("tabkit-{}.txt", std::process::id()));
    let o = tabkit(&["classes", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().contains("classes"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["classes", "--n", "12"],
        vec!["classes", "--bogus"],
        vec!["classes", "--n", "4", "--relation", "nope"],
        vec!["classes", "--n", "4", "--shape", "2,1"],
        vec!["classes", "--relation", "knuth", "--n", "3"],
        vec!["expand"],
        vec!["verify", "--suite", "nope"],
    ] {
        assert_eq!(tabkit(&args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_tabkit"))
        .args(["classes", "--n", "4"])
        .env("TABKIT_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
