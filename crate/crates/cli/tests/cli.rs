use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn topolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("topolab-cli-{name}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_str().unwrap().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

const SIERPINSKI: &str = r#"{"points":2,"opens":[[],[1],[0,1]]}"#;

#[test]
fn enumerate_counts() {
    let o = topolab(&["enumerate", "--points", "3", "--count"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "29");
    let o = topolab(&["enumerate", "--points", "2"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn enumerate_past_the_limit_is_a_usage_error() {
    let o = topolab(&["enumerate", "--points", "9", "--count"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_valid_and_invalid() {
    let s = Scratch::new("check");
    let good = s.file("s.json", SIERPINSKI);
    let o = topolab(&["check", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 points, 3 open sets"));

    let bad = s.file("bad.json", r#"{"points":3,"opens":[[],[0],[1],[0,1,2]]}"#);
    let o = topolab(&["check", &bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).contains("union of {0} and {1}"),
        "{}",
        stderr(&o)
    );

    let garbage = s.file("garbage.json", "{\"points\": 2");
    assert_eq!(topolab(&["check", &garbage]).status.code(), Some(3));
    assert_eq!(
        topolab(&["check", &s.path("missing.json")]).status.code(),
        Some(3)
    );
}

#[test]
fn check_dot() {
    let s = Scratch::new("dot");
    let good = s.file("s.json", SIERPINSKI);
    let o = topolab(&["check", &good, "--dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("p0 -> p1"));
}

#[test]
fn product_writes_a_valid_space() {
    let s = Scratch::new("product");
    let a = s.file("a.json", SIERPINSKI);
    let out = s.path("p.json");
    let o = topolab(&["product", &a, &a, "-o", &out]);
    assert!(o.status.success());
    let o = topolab(&["check", &out]);
    assert!(stdout(&o).contains("4 points, 6 open sets"));
}

#[test]
fn exponential_of_sierpinski() {
    let s = Scratch::new("expo");
    let a = s.file("a.json", SIERPINSKI);
    let out = s.path("f.json");
    assert!(topolab(&["exponential", &a, &a, "-o", &out])
        .status
        .success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["maps"].as_array().unwrap().len(), 3);
    assert_eq!(v["opens"].as_array().unwrap().len(), 4);
}

#[test]
fn waybelow_report() {
    let s = Scratch::new("wb");
    let a = s.file("a.json", SIERPINSKI);
    let o = topolab(&["waybelow", &a, "--s", "1", "--t", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["way_below"], true);
    let o = topolab(&["waybelow", &a, "--s", "0", "--t", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["way_below"], false);
    assert_eq!(v["least_neighbourhood_form"], false);
    assert_eq!(
        topolab(&["waybelow", &a, "--s", "5", "--t", "1"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn witness_report() {
    let s = Scratch::new("witness");
    let a = s.file("a.json", SIERPINSKI);
    let o = topolab(&["witness", &a, "--cover", "[[1],[0,1]]"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["membership_open"], true);
    assert_eq!(v["member_containing_target"], serde_json::json!([0, 1]));

    let d = s.file("d.json", r#"{"points":2,"opens":[[],[0],[1],[0,1]]}"#);
    let o = topolab(&["witness", &d, "--cover", "[[0],[1]]"]);
    assert_eq!(o.status.code(), Some(3));
    let o = topolab(&["witness", &d, "--cover", "[[0],[1]]", "--complete"]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn verify_one_theorem() {
    let o = topolab(&["verify", "--theorem", "sec6-proper", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem"], "sec6-proper");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["bounds"]["max_z"], 3);
    assert!(v.get("wall_time").is_none());

    let o = topolab(&["verify", "--theorem", "sec5-p1", "--max-x", "3"]);
    assert!(stdout(&o).starts_with("PASS sec5-p1 instances="));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(
        topolab(&["verify", "--theorem", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        topolab(&["verify", "--theorem", "sec5-p4", "--max-x", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(topolab(&["verify"]).status.code(), Some(2));
    assert_eq!(
        topolab(&["verify", "--all", "--theorem", "sec5-p1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_small_bounds_are_worker_independent() {
    let run = |w: &str| {
        stdout(&topolab(&[
            "verify",
            "--all",
            "--json",
            "--max-x",
            "2",
            "--max-y",
            "2",
            "--max-z",
            "2",
            "--workers",
            w,
        ]))
    };
    let one = run("1");
    assert!(one.contains("\"verdict\": \"pass\""));
    assert_eq!(one, run("3"));
}
