use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reg-obstruct"))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn ind_cycle5_reports_a_circle() {
    let o = run(&["ind", &data("cycle5.json"), "--json"]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    assert_eq!(j["degrees"][1]["rank"], 1);
    assert_eq!(j["degrees"][1]["torsion"], serde_json::json!([]));
    let t = run(&["ind", &data("cycle5.json")]);
    assert!(String::from_utf8_lossy(&t.stdout).contains("H_1   Z"));
}

#[test]
fn json_output_is_byte_identical() {
    let args = ["search", &data("cycle5.json"), &data("c5_generic.json"), "-k", "2", "--diagram", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = bin().args(args).env("REG_OBSTRUCT_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn search_exit_codes() {
    let found = run(&["search", &data("cycle5.json"), &data("c5_generic.json"), "-k", "2"]);
    assert_eq!(code(&found), 0);
    let none = run(&["search", &data("cycle5.json"), &data("c5_parallel.json"), "-k", "2", "--json"]);
    assert_eq!(code(&none), 1);
    assert_eq!(json(&none)["verdict"], "none_exists");
    let cut = run(&["search", &data("cycle5.json"), &data("c5_parallel.json"), "-k", "2", "--budget", "1"]);
    assert_eq!(code(&cut), 4);
}

#[test]
fn malformed_inputs_exit_2() {
    assert_eq!(code(&run(&["ind", &data("bad_graph.json")])), 2);
    assert_eq!(code(&run(&["ind", "/no/such/file.json"])), 2);
    assert_eq!(code(&run(&["ind", &data("cycle5.json"), "--ring", "F4"])), 2);
    assert_eq!(code(&run(&["search", &data("cycle5.json"), &data("c5_generic.json")])), 2);
    let threads = bin().args(["gen", "cycle", "3"]).env("REG_OBSTRUCT_THREADS", "0").output().unwrap();
    assert_eq!(code(&threads), 2);
}

#[test]
fn non_regular_assignment_is_rejected() {
    let o = run(&["diagram", &data("cycle5.json"), &data("c5_generic.json"), &data("c5_constant.json"), "-k", "2"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not 2-regular"));
}

#[test]
fn output_file_holds_the_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.json");
    let o = run(&["matroid", &data("generic4_q2.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(j["rank"], 2);
    assert_eq!(j["counts"], serde_json::json!([4, 6]));
}

#[test]
fn gen_and_power() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c6.json");
    let o = run(&["gen", "cycle", "6"]);
    std::fs::write(&c, &o.stdout).unwrap();
    let p = run(&["gen", "power", c.to_str().unwrap(), "2"]);
    assert_eq!(code(&p), 0);
    assert_eq!(json(&p)["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn corpus_runs_green_and_filters() {
    let all = run(&["corpus", "--json"]);
    assert_eq!(code(&all), 0, "{}", String::from_utf8_lossy(&all.stdout));
    let j = json(&all);
    assert_eq!(j["failed"], 0);
    assert!(j["passed"].as_u64().unwrap() >= 20);
    let one = run(&["corpus", "--case", "search-c5-parallel", "--json"]);
    assert_eq!(json(&one)["passed"], 1);
    assert_eq!(code(&run(&["corpus", "--dir", "/no/such/corpus"])), 2);
}

#[test]
fn failing_corpus_case_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("cases")).unwrap();
    std::fs::write(
        dir.path().join("cases/wrong.json"),
        format!(r#"{{"name":"wrong","args":["ind","{}"],"exit":0,"expect":{{"/degrees/1/rank":2}}}}"#, data("cycle5.json")),
    )
    .unwrap();
    let o = run(&["corpus", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL wrong"));
}
