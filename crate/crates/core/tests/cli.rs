use std::path::Path;
use std::process::{Command, Output};

use lapco::families::{build_u, FamilySpec};
use lapco::graph::classify;
use lapco::io::parse_graph;
use lapco::spectra::laplacian_coefficients;
use serde_json::Value;

fn lapco(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lapco"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn build_then_classify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (n, l, g, p) in [(10, 2, 3, 1), (9, 3, 4, 0), (8, 1, 5, 2)] {
        let file = path(dir.path(), "u.g");
        let (n_s, l_s, g_s, p_s) = (n.to_string(), l.to_string(), g.to_string(), p.to_string());
        let out = lapco(&[
            "build", "--family", "u", "--n", &n_s, "--l", &l_s, "--g", &g_s, "--p", &p_s, "--out",
            &file,
        ]);
        assert!(out.status.success());
        let graph = parse_graph(&std::fs::read_to_string(&file).unwrap()).unwrap();
        let r = classify(&graph);
        assert_eq!((r.order, r.leaf_count, r.girth), (n, l, Some(g)));
        assert_eq!(graph, build_u(FamilySpec::new(n, l, g, p)).unwrap());
    }
    let out = lapco(&["build", "--family", "bst", "--n", "7", "--l", "3"]);
    assert!(out.status.success());
    assert!(classify(&parse_graph(std::str::from_utf8(&out.stdout).unwrap()).unwrap()).is_tree);
}

#[test]
fn coefficients_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "triangle.g");
    std::fs::write(&file, "# C_3\n3 3\n0 1\n1 2\n2 0\n").unwrap();
    let out = lapco(&["coeffs", &file, "--oracle"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["coefficients"], serde_json::json!(["1", "6", "9", "0"]));
    assert_eq!(doc["forest_coefficients"], doc["coefficients"]);
    assert_eq!(doc["verdict"], "match");
    assert_eq!(doc["polynomial"], "x^3-6x^2+9x");
}

#[test]
fn emitted_strings_parse_back_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "big.g");
    let g = build_u(FamilySpec::new(24, 3, 5, 2)).unwrap();
    std::fs::write(&file, lapco::io::write_graph(&g)).unwrap();
    let doc = json(&lapco(&["coeffs", &file]));
    let exact = laplacian_coefficients(&g);
    let parsed: Vec<num_bigint::BigUint> = doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(parsed, exact.c);
}

#[test]
fn counterexample_document() {
    let out = lapco(&["counterexample"]);
    assert!(out.status.success());
    let doc = json(&out);
    let nums = |key: &str| -> Vec<u64> {
        doc[key]["coefficients"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().parse().unwrap())
            .collect()
    };
    assert_eq!(
        nums("g1"),
        [1, 20, 167, 758, 2036, 3296, 3130, 1612, 382, 30, 0]
    );
    assert_eq!(
        nums("g2"),
        [1, 20, 168, 770, 2091, 3414, 3243, 1642, 373, 30, 0]
    );
    assert_eq!(doc["verdict"], "incomparable");
    assert_eq!(doc["pass"], true);
}

#[test]
fn compare_lel_and_transform() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.g"), path(dir.path(), "b.g"));
    assert!(
        lapco(&["build", "--family", "u", "--n", "10", "--l", "2", "--g", "3", "--out", &a])
            .status
            .success()
    );
    assert!(lapco(&[
        "build", "--family", "u", "--n", "10", "--l", "2", "--g", "3", "--p", "1", "--out", &b
    ])
    .status
    .success());
    assert_eq!(
        json(&lapco(&["compare", &a, &b]))["verdict"],
        "incomparable"
    );
    assert_eq!(json(&lapco(&["compare", &a, &a]))["verdict"], "equal");
    let energy = json(&lapco(&["lel", &a]))["lel"].as_f64().unwrap();
    assert!((energy - 12.336766377275).abs() < 1e-8);

    // triangle with pendants on two cycle vertices
    let t = path(dir.path(), "t.g");
    std::fs::write(&t, "5 5\n0 1\n1 2\n2 0\n1 3\n2 4\n").unwrap();
    let merged = path(dir.path(), "merged.g");
    let out = lapco(&["transform", &t, "--kind", "eta", "--out", &merged]);
    assert!(out.status.success());
    assert_eq!(json(&out)["after_vs_before"], "less_strict");
    let after = parse_graph(&std::fs::read_to_string(&merged).unwrap()).unwrap();
    assert_eq!(classify(&after).leaf_count, 2);

    let out = lapco(&["transform", &t, "--kind", "kappa"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("girth"));

    let out = lapco(&["transform", &b, "--kind", "reduce"]);
    assert!(out.status.success());
    let out = lapco(&["transform", &b, "--kind", "xi", "--u", "0", "--v", "3"]);
    let doc = json(&out);
    assert_eq!(doc["long_path"]["holds"], false);
    assert_eq!(doc["after_vs_before"], "incomparable");
    assert!(out.status.success());
}

#[test]
fn enumerate_writes_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let target = path(dir.path(), "cat");
    let out = lapco(&["enumerate", "--n", "6", "--l", "2", "--out", &target]);
    assert!(out.status.success());
    let index: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cat/index.json")).unwrap())
            .unwrap();
    let members = index["members"].as_array().unwrap();
    assert_eq!(members.len() as u64, index["count"].as_u64().unwrap());
    assert_eq!(members[0]["file"], "member_000.g");
    for m in members {
        let text =
            std::fs::read_to_string(dir.path().join("cat").join(m["file"].as_str().unwrap()))
                .unwrap();
        let g = parse_graph(&text).unwrap();
        assert_eq!(classify(&g).leaf_count, 2);
    }
}

#[test]
fn verify_exit_status() {
    let out = lapco(&["verify", "--theorem", "4.3", "--n", "10", "--l", "2"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["observed_minimal"].as_array().unwrap().len(), 2);
    assert_eq!(doc["pass"], true);

    let out = lapco(&[
        "verify",
        "--theorem",
        "3.4",
        "--n",
        "9",
        "--l",
        "2",
        "--g",
        "3",
    ]);
    assert!(out.status.success());
    let out = lapco(&["verify", "--theorem", "conjecture", "--n", "8"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["branch_violations"], 0);

    let out = lapco(&[
        "probe", "--n", "10", "--l", "2", "--g", "3", "--p", "1", "--q", "0",
    ]);
    assert!(out.status.success());
    let out = lapco(&[
        "probe", "--n", "11", "--l", "2", "--g", "4", "--p", "1", "--q", "0",
    ]);
    assert!(!out.status.success());
}

#[test]
fn errors_go_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.g");
    std::fs::write(&bad, "3 2\n0 1\n").unwrap();
    for args in [
        vec!["coeffs", bad.as_str()],
        vec!["coeffs", "/nonexistent/file.g"],
        vec!["frobnicate"],
        vec!["enumerate", "--n", "13", "--out", bad.as_str()],
    ] {
        let out = lapco(&args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn env_lowers_the_guard() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_lapco"))
            .args(["minimal", "--n", "9", "--l", "2", "--g", "3"])
            .env("LAPCO_MAX_N", limit)
            .output()
            .unwrap()
    };
    assert!(!run("8").status.success());
    assert!(run("9").status.success());
    // raising above the built-in guard has no effect
    let out = Command::new(env!("CARGO_BIN_EXE_lapco"))
        .args(["minimal", "--n", "13", "--l", "2", "--g", "3"])
        .env("LAPCO_MAX_N", "40")
        .output()
        .unwrap();
    assert!(!out.status.success());
}
