//! End-to-end tests of the `pairdom` binary: output shapes and the exit-code
//! contract (0 ok / 2 input / 3 class / 4 budget / 5 verification).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pairdom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

struct Fixtures {
    dir: PathBuf,
}

impl Fixtures {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("pairdom-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Fixtures { dir }
    }

    fn write(&self, name: &str, content: &str) -> PathBuf {
        let path = self.dir.join(name);
        std::fs::write(&path, content).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }
}

impl Drop for Fixtures {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.dir);
    }
}

const P4: &str = "4 3\n1 2\n2 3\n3 4\n";
const K2: &str = "2 1\n1 2\n";
const C4: &str = "4 4\n1 2\n2 3\n3 4\n4 1\n";
const CEX6: &str = "6\n0 3\n1 4\n2 6\n7 9\n5 10\n8 11\n";

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_tree_and_interval() {
    let fx = Fixtures::new("solve");
    let p4 = fx.write("p4.gr", P4);
    let out = run(&["solve", "--class", "tree", arg(&p4)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("size: 2"));
    assert!(stdout(&out).contains("verified: true"));

    let cex = fx.write("cex6.ivl", CEX6);
    let out = run(&["solve", "--class", "interval", "--json", arg(&cex)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solution"]["size"], 2);
    assert_eq!(v["solution"]["vertices"], serde_json::json!([3, 5]));
    assert_eq!(v["verified"], true);
    assert_eq!(v["solver"], "mpdi");
}

#[test]
fn solve_auto_picks_a_solver() {
    let fx = Fixtures::new("auto");
    let p4 = fx.write("p4.gr", P4);
    let out = run(&["solve", "--json", arg(&p4)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solver"], "mpdt");

    // the six-interval fixture's graph happens to be a block graph, so auto
    // settles on the block solver before ever reaching the interval one
    let cex = fx.write("cex6.ivl", CEX6);
    let out = run(&["solve", "--json", arg(&cex)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solver"], "mpdb");
    assert_eq!(v["solution"]["size"], 2);
}

#[test]
fn class_mismatches_exit_3() {
    let fx = Fixtures::new("class");
    let c4 = fx.write("c4.gr", C4);
    assert_eq!(code(&run(&["solve", "--class", "block", arg(&c4)])), 3);
    assert_eq!(code(&run(&["solve", "--class", "tree", arg(&c4)])), 3);
    // graph input cannot serve the interval class
    assert_eq!(code(&run(&["solve", "--class", "interval", arg(&c4)])), 3);
    // C4 is not a block graph and carries no interval representation
    assert_eq!(code(&run(&["solve", arg(&c4)])), 3);
}

#[test]
fn malformed_input_exits_2() {
    let fx = Fixtures::new("malformed");
    let bad = fx.write("bad.gr", "3 2\n1 2\n1 1\n");
    assert_eq!(code(&run(&["solve", arg(&bad)])), 2);
    assert_eq!(code(&run(&["oracle", arg(&bad)])), 2);
    let missing = fx.path("nope.gr");
    assert_eq!(code(&run(&["solve", arg(&missing)])), 2);
}

#[test]
fn oracle_command_and_budget() {
    let fx = Fixtures::new("oracle");
    let k2 = fx.write("k2.gr", K2);
    let out = run(&["oracle", "--json", arg(&k2)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solution"]["size"], 2);

    let cex = fx.write("cex6.ivl", CEX6);
    let out = run(&["oracle", "--json", arg(&cex)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solution"]["vertices"], serde_json::json!([3, 5]));

    // n = 50 exceeds the default budget
    let mut text = String::from("50 49\n");
    for i in 1..50 {
        text.push_str(&format!("{i} {}\n", i + 1));
    }
    let big = fx.write("p50.gr", &text);
    assert_eq!(code(&run(&["oracle", arg(&big)])), 4);
    // raising the budget through the environment admits a moderate instance
    let mut text = String::from("20 19\n");
    for i in 1..20 {
        text.push_str(&format!("{i} {}\n", i + 1));
    }
    let p20 = fx.write("p20.gr", &text);
    assert_eq!(code(&run(&["oracle", arg(&p20)])), 4);
    let out = bin()
        .args(["oracle", arg(&p20)])
        .env("PAIRDOM_ORACLE_MAX", "24")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{out:?}");
}

#[test]
fn verify_command_exit_codes() {
    let fx = Fixtures::new("verify");
    let p4 = fx.write("p4.gr", P4);
    let good = fx.write("good.json", r#"{"size":2,"vertices":[2,3],"pairs":[[2,3]]}"#);
    let bad = fx.write("bad.json", r#"{"size":2,"vertices":[1,4],"pairs":[[1,4]]}"#);
    assert_eq!(code(&run(&["verify", arg(&p4), arg(&good)])), 0);
    let out = run(&["verify", "--json", arg(&p4), arg(&bad)]);
    assert_eq!(code(&out), 5);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reason"], "non-edge-pair");
}

#[test]
fn gen_is_deterministic_and_valid() {
    let fx = Fixtures::new("gen");
    let a = fx.path("a.gr");
    let b = fx.path("b.gr");
    assert_eq!(
        code(&run(&["gen", "--kind", "tree", "--n", "12", "--seed", "7", "-o", arg(&a)])),
        0
    );
    assert_eq!(
        code(&run(&["gen", "--kind", "tree", "--n", "12", "--seed", "7", "-o", arg(&b)])),
        0
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let blk = fx.path("blk.gr");
    assert_eq!(
        code(&run(&["gen", "--kind", "block", "--n", "200", "--seed", "1", "-o", arg(&blk)])),
        0
    );
    let g = pairdom::Graph::parse(&std::fs::read_to_string(&blk).unwrap()).unwrap();
    assert!(pairdom::block::is_block_graph(&g).unwrap());

    let ivl = fx.path("i.ivl");
    assert_eq!(
        code(&run(&["gen", "--kind", "interval", "--n", "12", "--seed", "3", "-o", arg(&ivl)])),
        0
    );
    let rep = pairdom::interval::IntervalRep::parse(&std::fs::read_to_string(&ivl).unwrap())
        .unwrap();
    assert!(pairdom::interval::interval_graph(&rep).is_ok());

    // invalid spec
    assert_eq!(code(&run(&["gen", "--kind", "tree", "--n", "1", "--seed", "0"])), 2);
}

#[test]
fn reduce_writes_graph_and_provenance() {
    let fx = Fixtures::new("reduce");
    let k2 = fx.write("k2.gr", K2);
    let out_path = fx.path("k2.split.gr");
    let out = run(&["reduce", "--variant", "split", arg(&k2), "-o", arg(&out_path)]);
    assert_eq!(code(&out), 0);
    let g = pairdom::Graph::parse(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 6);
    let prov: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(fx.path("k2.split.gr.provenance.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(prov["variant"], "split");
    assert_eq!(prov["vertices"].as_array().unwrap().len(), 6);

    let p3 = fx.write("p3.gr", "3 2\n1 2\n2 3\n");
    let out_path = fx.path("p3.bip.gr");
    let out = run(&["reduce", "--variant", "bipartite", arg(&p3), "-o", arg(&out_path)]);
    assert_eq!(code(&out), 0);
    let g = pairdom::Graph::parse(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 10);

    let edgeless = fx.write("e.gr", "3 0\n");
    let out = run(&["reduce", "--variant", "split", arg(&edgeless), "-o", arg(&fx.path("x.gr"))]);
    assert_eq!(code(&out), 2);
}

#[test]
fn counterexample_confirms_defect() {
    let out = run(&["counterexample", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["legacy_result"], serde_json::json!([4, 5, 1, 2]));
    assert_eq!(v["legacy_size"], 4);
    assert_eq!(v["optimal_size"], 2);
    assert_eq!(v["defect_confirmed"], true);
    // the published row i=5
    let row = &v["table"].as_array().unwrap()[4];
    assert_eq!(row["a"], 5);
    assert_eq!(row["b"], 10);
    assert_eq!(row["max_a_ifb_a"], 1);
    assert_eq!(row["l"], 3);
    assert_eq!(row["a_set"], serde_json::json!([]));
}

#[test]
fn bench_runs_and_rejects_bad_sizes() {
    let out = run(&["bench", "--kind", "block", "--sizes", "500,1000", "--seed", "2", "--json"]);
    assert_eq!(code(&out), 0, "{out:?}");
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["verified"], true);
    assert!(rows[1]["ratio_vs_prev"].is_number());

    assert_eq!(code(&run(&["bench", "--kind", "interval", "--sizes", ""])), 2);
    assert_eq!(code(&run(&["bench", "--kind", "tree", "--sizes", "1000,500"])), 2);
    // scientific notation is accepted
    let out = run(&["bench", "--kind", "tree", "--sizes", "1e3", "--seed", "1"]);
    assert_eq!(code(&out), 0);
}
