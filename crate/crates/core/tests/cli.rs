use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hallgpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallgpd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == name)
        .unwrap_or_else(|| panic!("no check named {name}"))
}

fn discrete_functor(src: &[usize], target: usize) -> String {
    let doc = |n: usize| {
        serde_json::json!({
            "objects": n,
            "morphisms": (0..n).map(|i| serde_json::json!({"src": i, "tgt": i})).collect::<Vec<_>>(),
            "compose": (0..n).map(|g| (0..n).map(|f| if f == g { Some(f) } else { None }).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    };
    serde_json::json!({"source": doc(src.len()), "target": doc(target), "objects": src, "morphisms": src}).to_string()
}

#[test]
fn verify_green_passes_on_a2() {
    let out = hallgpd(&["verify", "green", "--q", "2", "--max-dim", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_stdout(&out);
    assert_eq!(r["passed"], true);
    assert!(check(&r, "green")["instances"].as_u64().unwrap() > 0);
}

#[test]
fn verify_all_at_dimension_zero() {
    let out = hallgpd(&["verify", "all", "--q", "2", "--max-dim", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_engine_with_seed() {
    let out = hallgpd(&["verify", "engine", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_stdout(&out);
    let engine = check(&r, "engine");
    assert!(engine["instances"].as_u64().unwrap() >= 50);
    assert_eq!(engine["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn failing_suite_exits_one_and_replays() {
    let out = hallgpd(&["verify", "ext-bilinearity"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json_stdout(&out);
    let first = check(&r, "ext-bilinearity")["failures"][0]["instance"]
        .as_str()
        .unwrap()
        .to_string();

    let replay = hallgpd(&["verify", "ext-bilinearity", "--only", &first]);
    assert_eq!(replay.status.code(), Some(1));
    let r = json_stdout(&replay);
    let c = check(&r, "ext-bilinearity");
    assert_eq!(c["instances"], 1);
    assert_eq!(c["failures"][0]["instance"], first.as_str());
}

#[test]
fn passing_instance_replays_alone() {
    let out = hallgpd(&["verify", "riedtmann", "--only", "(1,0)#0|(0,1)#0|(1,1)#1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(check(&json_stdout(&out), "riedtmann")["instances"], 1);
}

#[test]
fn tables_examples() {
    let out = hallgpd(&["tables", "--max-dim", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let t = json_stdout(&out);
    let row = t["product"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["left"] == "(1,0)#0" && r["right"] == "(0,1)#0")
        .unwrap();
    assert_eq!(
        row["terms"],
        serde_json::json!([{"class": "(1,1)#0", "coeff": "1/1"}, {"class": "(1,1)#1", "coeff": "1/1"}])
    );

    let zero = json_stdout(&hallgpd(&["tables", "--max-dim", "0"]));
    assert_eq!(zero["product"].as_array().unwrap().len(), 1);

    let csv = hallgpd(&["tables", "--q", "3", "--max-dim", "2", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.lines().any(|l| l == "coproduct,(0,1)#0,(1,0)#0,(1,1)#1,2/1"));
}

#[test]
fn groupoid_cardinalities() {
    let card = |f: &str| String::from_utf8(hallgpd(&["groupoid", "card", f]).stdout).unwrap();
    assert_eq!(card("finite-sets-5.json"), "163/60\n");
    assert_eq!(card("discrete-3.json"), "3/1\n");
}

#[test]
fn pullback_of_discrete_inputs_is_the_fibered_product() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    let g = dir.path().join("g.json");
    std::fs::write(&f, discrete_functor(&[0, 0, 1], 2)).unwrap();
    std::fs::write(&g, discrete_functor(&[0, 1, 1], 2)).unwrap();
    let out = hallgpd(&["groupoid", "pullback", f.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_stdout(&out);
    assert_eq!(r["objects"], 4);
    assert_eq!(r["cardinality"], "4/1");
}

#[test]
fn groupoid_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    let built = hallgpd(&["groupoid", "build", "cyclic", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(built.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    let checked = hallgpd(&["groupoid", "check", path.to_str().unwrap()]);
    assert_eq!(String::from_utf8(checked.stdout).unwrap(), written);
    let card = hallgpd(&["groupoid", "card", path.to_str().unwrap()]);
    assert_eq!(String::from_utf8(card.stdout).unwrap(), "1/4\n");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"objects\": 2,\n \"morphisms\": [}").unwrap();
    let out = hallgpd(&["groupoid", "card", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let unknown = dir.path().join("unknown.json");
    std::fs::write(
        &unknown,
        "{\"objects\": 1, \"morphisms\": [], \"compose\": [], \"extra\": 0}",
    )
    .unwrap();
    let err = String::from_utf8(hallgpd(&["groupoid", "card", unknown.to_str().unwrap()]).stderr).unwrap();
    assert!(err.contains("extra"), "{err}");
}

#[test]
fn bad_configuration_exits_two() {
    assert_eq!(hallgpd(&["verify", "green", "--q", "4"]).status.code(), Some(2));
    assert_eq!(hallgpd(&["verify", "green", "--budget", "0"]).status.code(), Some(2));
    assert_eq!(hallgpd(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(hallgpd(&["tables", "--quiver", "missing.json"]).status.code(), Some(2));
    assert_eq!(hallgpd(&["verify", "green", "--max-dim", "-1"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("r{i}.json"))).collect();
    for p in &paths {
        let out = hallgpd(&["verify", "all", "--max-dim", "2", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1));
    }
    let read = |p: &Path| std::fs::read(p).unwrap();
    assert_eq!(read(&paths[0]), read(&paths[1]));
    let csv = |_: ()| hallgpd(&["tables", "--format", "csv", "--quiver", "a3-linear.json"]).stdout;
    assert_eq!(csv(()), csv(()));
}

#[test]
fn other_quivers_load_from_the_bundle() {
    for (quiver, roots) in [("a3-linear.json", 6), ("a3-source.json", 6), ("d4.json", 12)] {
        let out = hallgpd(&["verify", "gabriel", "--quiver", quiver]);
        assert_eq!(out.status.code(), Some(0), "{quiver}");
        assert_eq!(check(&json_stdout(&out), "gabriel")["notes"]["positive_roots"], roots);
    }
}
