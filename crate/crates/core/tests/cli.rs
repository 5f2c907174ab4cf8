use std::path::Path;
use std::process::{Command, Output};

fn craftbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_craftbench"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generate_is_seeded() {
    let a = craftbench(&["generate", "sc", "--seed", "9", "--palindromic"]);
    let b = Command::new(env!("CARGO_BIN_EXE_craftbench"))
        .args(["generate", "sc", "--palindromic"])
        .env("CRAFTBENCH_SEED", "9")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("SC\n"));
    for kind in ["ovc", "cnf", "x3c"] {
        assert!(
            craftbench(&["generate", kind, "--seed", "1"])
                .status
                .success(),
            "{kind}"
        );
    }
    assert_eq!(
        craftbench(&["generate", "x3c", "--n", "4"]).status.code(),
        Some(3)
    );
}

#[test]
fn solve_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "inst.txt", "SC\n101110101\n1010\n101\n00\n");
    let out = craftbench(&["solve", &inst, "--method", "held-karp"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("yes"));
    let good = write(dir.path(), "good.txt", lines.next().unwrap());
    let ok = craftbench(&["verify", "crafting", &inst, &good]);
    assert_eq!(
        (ok.status.code(), stdout(&ok)),
        (Some(0), "valid\n".to_string())
    );
    let bad = write(dir.path(), "bad.txt", "3 2 1");
    assert_eq!(
        craftbench(&["verify", "crafting", &inst, &bad])
            .status
            .code(),
        Some(1)
    );

    let cnf = write(dir.path(), "f.cnf", "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
    assert_eq!(stdout(&craftbench(&["solve", &cnf])), "no\n");
    let x3c = write(dir.path(), "x.txt", "3 2\n1 2 3\n1 2 3\n");
    assert_eq!(stdout(&craftbench(&["solve", &x3c])), "yes\n1\n");
}

#[test]
fn verify_graph_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p3.txt", "3 2\n0 1\n1 2\ncolors\n1\n2\n1\n");
    let bags = write(dir.path(), "bags.txt", "0 1\n1 2\n");
    let ok = craftbench(&[
        "verify",
        "decomposition",
        &path,
        &bags,
        "--width",
        "1",
        "--bags",
        "2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let tight = craftbench(&[
        "verify",
        "decomposition",
        &path,
        &bags,
        "--width",
        "1",
        "--bags",
        "1",
    ]);
    assert_eq!(tight.status.code(), Some(1));
    let model = write(dir.path(), "m.txt", "0 2\n1 4\n3 5\n");
    assert_eq!(
        craftbench(&["verify", "intervals", &path, &model])
            .status
            .code(),
        Some(0)
    );
    let clash = write(dir.path(), "c.txt", "0 4\n1 5\n3 6\n");
    assert_eq!(
        craftbench(&["verify", "intervals", &path, &clash])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn reduce_prints_parseable_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let sc = write(dir.path(), "sc.txt", "SC\n1111011\n1\n101\n11\n1\n");
    let out = stdout(&craftbench(&["reduce", &sc, "--target", "subgraph"]));
    let host_text = out.split("# pattern").next().unwrap();
    let (host, _) = craftbench::Graph::parse(host_text).unwrap();
    assert!(craftbench::is_caterpillar(&host));

    let icg5 = stdout(&craftbench(&["reduce", &sc, "--target", "icg5"]));
    let cg = craftbench::ColoredGraph::parse(&icg5).unwrap();
    assert!(cg.graph().is_tree());

    let out = craftbench(&["reduce", &sc, "--target", "icg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn roundtrip_json_and_budgets() {
    let dir = tempfile::tempdir().unwrap();
    let sc = write(dir.path(), "sc.txt", "SC\n1011101\n101\n1\n101\n");
    let out = craftbench(&["roundtrip", &sc, "--target", "subgraph", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], "SUCCESS");
    let starved = craftbench(&[
        "roundtrip",
        &sc,
        "--target",
        "subgraph",
        "--oracle-state-budget",
        "3",
    ]);
    assert_eq!(starved.status.code(), Some(2));
    assert!(stdout(&starved).ends_with("verdict=INCONCLUSIVE\n"));
}
