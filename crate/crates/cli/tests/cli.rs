use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chernclass_cli::{parse_session_str, Format, Overrides, Runner};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("chernclass-cli-{}-{tag}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const P5: &str = "ring n=5\nideal X = x0*x1, x0*x2\nideal Y = x3^2+x4^2+x5^2\n";
const QUADRIC: &str = "ring n=3\nideal Q = x0*x3 - x1*x2\nideal T = x3\nideal L = x0*x1\nideal M = x2\n";

fn run(session: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chernclass"))
        .args(args.iter().take_while(|a| a.starts_with("--")).flat_map(|a| a.split('=')))
        .arg(session)
        .args(args.iter().skip_while(|a| a.starts_with("--")))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_commands() {
    let s = Scratch::new("compute");
    let p5 = s.file("p5.session", P5);
    let o = run(&p5, &["csm", "X"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("csm(X) = 1[P^4] + 6[P^3] + 13[P^2] + 13[P^1] + 6[P^0]\n"));
    let o = run(&p5, &["cfulton", "Y"]);
    assert!(stdout(&o).starts_with("cfulton(Y) = 2[P^4] + 8[P^3] + 14[P^2] + 12[P^1] + 6[P^0]\n"));
    let o = run(&p5, &["segre", "Y"]);
    assert_eq!(o.status.code(), Some(0));

    let q = s.file("q.session", QUADRIC);
    let o = run(&q, &["milnor", "Q"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("milnor(Q) = 0\n"));
    let o = run(&q, &["euler", "Q"]);
    assert!(stdout(&o).starts_with("euler(Q) = 4\n"));
}

#[test]
fn verification_exit_codes() {
    let s = Scratch::new("verify");
    let q = s.file("q.session", QUADRIC);
    let o = run(&q, &["verify", "csm-product", "Q", "T"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("discrepancy: 1[P^0]\n"));
    assert_eq!(run(&q, &["verify", "fulton-product", "Q", "T"]).status.code(), Some(0));
    assert_eq!(run(&q, &["verify", "complement", "L", "M"]).status.code(), Some(0));
    assert_eq!(run(&q, &["verify", "jacobian-splayed", "Q", "T"]).status.code(), Some(1));
    assert_eq!(run(&q, &["verify", "bertini", "1", "Q"]).status.code(), Some(0));
    assert_eq!(run(&q, &["euler", "Q", "T"]).status.code(), Some(1));
    // tiny field: the first trial is not generic and the others disagree with it
    let o = run(&q, &["--prime=3", "verify", "csm-product", "Q", "T"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("result: inconclusive"));
}

#[test]
fn json_reports() {
    let s = Scratch::new("json");
    let q = s.file("q.session", QUADRIC);
    let o = run(&q, &["--format=json", "--seed=5", "verify", "csm-product", "Q", "T"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["format_version", "identity", "lhs", "rhs", "pass", "discrepancy", "prime", "seed", "trials"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["identity"], "csm-product");
    assert_eq!(v["pass"], false);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["trials"], 3);
    assert_eq!(v["lhs"], serde_json::json!({"n": 3, "coeffs": [10, 2, 0, 0]}));
    assert_eq!(v["discrepancy"]["coeffs"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(v["prime_source"], "auto");

    let o = run(&q, &["--format=json", "verify", "fulton-product", "Q", "T"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["discrepancy"]["coeffs"], serde_json::json!([0, 0, 0, 0]));

    let o = run(&q, &["--format=json", "--prime=1000003", "csm", "Q"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class"]["coeffs"], serde_json::json!([4, 4, 2, 0]));
    assert_eq!((v["prime"].as_u64(), v["prime_source"].as_str()), (Some(1_000_003), Some("explicit")));
}

#[test]
fn output_is_deterministic() {
    let s = Scratch::new("determinism");
    let p5 = s.file("p5.session", P5);
    for args in [
        &["--format=json", "--seed=11", "verify", "csm-product", "X", "Y"][..],
        &["--seed=11", "verify", "fulton-product", "X", "Y"][..],
        &["--format=json", "csm", "X"][..],
    ] {
        let a = run(&p5, args);
        let b = run(&p5, args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn input_errors_exit_with_three() {
    let s = Scratch::new("errors");
    let empty = s.file("empty.session", "");
    let o = run(&empty, &["csm", "X"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing ring declaration"));
    let bad = s.file("bad.session", "ring n=2\nideal B = x0 + x1^2\n");
    let o = run(&bad, &["csm", "B"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 11: inhomogeneous generator"));
    let q = s.file("q.session", QUADRIC);
    assert_eq!(run(&q, &["csm", "Nope"]).status.code(), Some(3));
    assert_eq!(run(&q, &["frobnicate", "Q"]).status.code(), Some(3));
    assert_eq!(run(&q, &["verify", "csm-product", "Q"]).status.code(), Some(3));
    assert_eq!(run(&q, &["--prime=12", "csm", "Q"]).status.code(), Some(3));
    assert_eq!(run(&q, &["--format=xml", "csm", "Q"]).status.code(), Some(3));
    assert_eq!(run(&q, &["--max-gens=1", "csm", "L"]).status.code(), Some(0));
    let two = s.file("two.session", "ring n=2\nideal P = x0, x1\n");
    assert_eq!(run(&two, &["--max-gens=1", "csm", "P"]).status.code(), Some(3));
    assert_eq!(run(&s.0.join("missing.session"), &["csm", "Q"]).status.code(), Some(3));
}

#[test]
fn runner_library_interface() {
    let session = parse_session_str(
        "ring n=3\nprime 1000003\nfunction phi = [x0*x3-x1*x2]\nfunction psi = [x3]\nideal D1 = x1\nideal Z1 = x0, x1\nideal D2 = x2\nideal Z2 = x0, x2\nideal E =\n",
        &Overrides::default(),
    )
    .unwrap();
    let runner = Runner {
        session: &session,
        max_gens: 12,
        format: Format::Text,
    };
    let args = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let out = runner.run("verify", &args(&["constructible-product", "phi", "psi"])).unwrap();
    assert_eq!(out.code, 1);
    let out = runner.run("verify", &args(&["segre-relation", "D1", "Z1", "D2", "Z2"])).unwrap();
    assert_eq!(out.code, 0, "{}", out.text);
    let out = runner.run("verify", &args(&["segre-relation", "D1", "E", "D2", "E"])).unwrap();
    assert_eq!(out.code, 0, "{}", out.text);
    let out = runner.run("csm", &args(&["phi"])).unwrap();
    assert!(out.text.starts_with("csm(phi) = 2[P^2] + 4[P^1] + 4[P^0]"));
    assert!(runner.run("verify", &args(&["segre-relation", "Z1", "Z1", "D2", "Z2"])).is_err());
}
