use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ecperm::fixtures;
use ecperm::io::{self, GraphJson};
use ecperm::{Certificate, ColoredGraph};
use serde_json::Value;
use tempfile::TempDir;

fn ecperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecperm")).args(args).env_remove("ECPERM_SEED").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn write_graph(dir: &TempDir, name: &str, g: &ColoredGraph) -> PathBuf {
    write(dir, name, &io::write_ecg(g))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_recognize_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let tuples: &[&[&str]] = &[
        &["(6,3,7,4,2,5,1)", "(1,5,2,4,7,3,6)"],
        &["(1,3,5,2,4,7,6,8)", "(6,7,1,8,4,2,5,3)", "(2,3,4,5,8,1,6,7)"],
        &["(2,1,3,4,7,5,6)", "(4,1,2,3,5,6,7)", "(1,2,3,4,6,5,7)", "(5,6,7,3,1,2,4)"],
        &["(3,2,1)"],
    ];
    for (i, perms) in tuples.iter().enumerate() {
        let graph = dir.path().join(format!("g{i}.ecg"));
        let mut args = vec!["generate", "--labeling", "id", "-o", s(&graph)];
        for p in perms.iter() {
            args.extend(["--perm", p]);
        }
        let out = ecperm(&args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

        let rec = ecperm(&["recognize", s(&graph), "--assert"]);
        assert_eq!(rec.status.code(), Some(0));
        assert_eq!(json(&rec)["member"], true);
        let cert_path = write(&dir, &format!("c{i}.json"), &stdout(&rec));

        let ver = ecperm(&["verify", s(&graph), "--certificate", s(&cert_path), "--assert"]);
        assert_eq!(ver.status.code(), Some(0));
        assert_eq!(json(&ver)["valid"], true);

        // the generating tuple verifies too
        let mut args = vec!["verify", s(&graph), "--labeling", "id"];
        for p in perms.iter() {
            args.extend(["--perm", p]);
        }
        assert_eq!(json(&ecperm(&args))["valid"], true);
    }
}

#[test]
fn obstructions_exit_zero_unless_asserted() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "rainbow.ecg", &fixtures::rainbow_k3());
    let out = ecperm(&["recognize", s(&graph)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["member"], false);
    assert_eq!(v["obstruction"]["kind"], "rainbow_triangle");
    assert_eq!(v["obstruction"]["triangle"]["u"], 0);
    assert_eq!(ecperm(&["recognize", s(&graph), "--assert"]).status.code(), Some(1));
    assert_eq!(ecperm(&["oracle", s(&graph), "--assert"]).status.code(), Some(1));
    assert_eq!(json(&ecperm(&["oracle", s(&graph)]))["member"], false);

    let cert = write(&dir, "bad.json", r#"{"labeling":[1,2,3],"permutations":[[1,2,3],[1,2,3],[1,2,3]]}"#);
    let ver = ecperm(&["verify", s(&graph), "--certificate", s(&cert), "--assert"]);
    assert_eq!(ver.status.code(), Some(1));
    assert_eq!(json(&ver)["valid"], false);
}

#[test]
fn input_errors_name_the_line_or_token() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.ecg", "ecg 3 1\n0 1 1\n0 2 one\n1 2 1\n");
    let out = ecperm(&["recognize", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.ecg:3:"), "{err}");
    assert!(out.stdout.is_empty());

    let out = ecperm(&["generate", "--perm", "(1,2,2)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(1,2,2)"));

    assert_eq!(ecperm(&["recognize"]).status.code(), Some(2));
    assert_eq!(ecperm(&["transmogrify", "x"]).status.code(), Some(2));
    assert_eq!(ecperm(&["recognize", "/no/such/file.ecg"]).status.code(), Some(2));

    let big = write_graph(&dir, "big.ecg", &ColoredGraph::monochromatic(10));
    assert_eq!(ecperm(&["oracle", s(&big)]).status.code(), Some(2));
}

#[test]
fn pinned_quotient_labels_reproduce_the_fixture() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "eight.ecg", &fixtures::eight_vertex_three_colors());
    let pins: Vec<Value> = fixtures::eight_vertex_quotient_orders()
        .into_iter()
        .map(|(m, o)| serde_json::json!({ "module": m, "order": o }))
        .collect();
    let pins = write(&dir, "pins.json", &serde_json::to_string(&pins).unwrap());
    let v = json(&ecperm(&["recognize", s(&graph), "--quotient-labels", s(&pins)]));
    let cert: Certificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    assert_eq!(cert.labeling, fixtures::eight_vertex_labeling());
    assert_eq!(cert.permutations, fixtures::eight_vertex_permutations());

    let wrong = write(&dir, "wrong.json", r#"[{"module":[0,2],"order":[0,2]}]"#);
    assert_eq!(ecperm(&["recognize", s(&graph), "--quotient-labels", s(&wrong)]).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_any_byte() {
    let dir = TempDir::new().unwrap();
    let out = ecperm(&[
        "random",
        "--n",
        "60",
        "--k",
        "4",
        "--profile",
        "from-permutations",
        "--seed",
        "3",
        "--format",
        "json",
    ]);
    let graph = write(&dir, "g.json", &stdout(&out));
    let one = ecperm(&["recognize", s(&graph), "--jobs", "1"]);
    let four = ecperm(&["recognize", s(&graph), "--jobs", "4"]);
    assert_eq!(json(&one)["member"], true);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn mdtree_formats() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "nested.ecg", &fixtures::nested_modules());
    let v = json(&ecperm(&["mdtree", s(&graph)]));
    assert_eq!(v["n"], 7);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 11);
    assert_eq!(v["nodes"][v["root"].as_u64().unwrap() as usize]["kind"], "prime");

    let dot = stdout(&ecperm(&["mdtree", s(&graph), "--dot"]));
    assert!(dot.starts_with("digraph md {"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    for line in dot.lines().skip(1).filter(|l| l.trim() != "}") {
        assert!(line.trim_end().ends_with(';'), "{line}");
    }
    assert_eq!(dot.matches("->").count(), 10);

    let text = stdout(&ecperm(&["mdtree", s(&graph), "--text"]));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn restrict_outputs_a_verifying_certificate() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "eight.ecg", &fixtures::eight_vertex_three_colors());
    let v = json(&ecperm(&["restrict", s(&graph), "--vertices", "0,2,5,7"]));
    let sub: GraphJson = serde_json::from_value(v["graph"].clone()).unwrap();
    let cert: Certificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    assert!(cert.verifies(&sub.to_graph().unwrap()));
    assert_eq!(v["kept"], serde_json::json!([0, 2, 5, 7]));

    let rainbow = write_graph(&dir, "rainbow.ecg", &fixtures::rainbow_k3());
    assert_eq!(ecperm(&["restrict", s(&rainbow), "--vertices", "0,1"]).status.code(), Some(2));
    assert_eq!(ecperm(&["restrict", s(&graph), "--vertices", "0,9"]).status.code(), Some(2));
}

#[test]
fn classify_reports_every_class() {
    let dir = TempDir::new().unwrap();
    let p4 = write_graph(&dir, "p4.ecg", &fixtures::two_colored_p4());
    let v = json(&ecperm(&["classify", s(&p4)]));
    assert_eq!(v["gallai"], true);
    assert_eq!(v["symbolic_ultrametric"], false);
    assert_eq!(v["colored_permutation"], true);
    let rainbow = write_graph(&dir, "rainbow.ecg", &fixtures::rainbow_k3());
    let v = json(&ecperm(&["classify", s(&rainbow)]));
    assert_eq!((v["gallai"].as_bool(), v["colored_permutation"].as_bool()), (Some(false), Some(false)));
}

#[test]
fn random_is_seeded() {
    let args = ["random", "--n", "7", "--k", "3", "--profile", "gallai-substitution", "--count", "4", "--seed", "11"];
    let a = ecperm(&args);
    let b = ecperm(&args);
    assert_eq!(a.stdout, b.stdout);
    let graphs: Vec<GraphJson> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(graphs.len(), 4);
    assert!(graphs.iter().all(|g| g.n == 7));

    let overridden = Command::new(env!("CARGO_BIN_EXE_ecperm")).args(args).env("ECPERM_SEED", "12").output().unwrap();
    assert_ne!(overridden.stdout, a.stdout);
    let direct =
        ecperm(&["random", "--n", "7", "--k", "3", "--profile", "gallai-substitution", "--count", "4", "--seed", "12"]);
    assert_eq!(overridden.stdout, direct.stdout);

    let ecg = stdout(&ecperm(&["random", "--n", "5", "--k", "2"]));
    assert!(io::read_ecg(&ecg).is_ok());
}
