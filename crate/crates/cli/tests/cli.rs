use std::process::{Command, Output};

use serde_json::{json, Value};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .env_remove("RINGLAB_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// Validates `instance` against one definition of the shipped schema.
fn assert_valid(definition: &str, instance: &Value) {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/schemas/v1/ringlab.schema.json"
    ))
    .unwrap();
    let mut schema: Value = serde_json::from_str(&text).unwrap();
    schema["$ref"] = json!(format!("#/$defs/{definition}"));
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{definition}: {errors:#?}");
}

fn predicate(report: &Value, id: &str) -> bool {
    report["predicates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["id"] == id)
        .unwrap_or_else(|| panic!("{id} missing"))["holds"]
        .as_bool()
        .unwrap()
}

#[test]
fn analyze_examples() {
    let o = ringlab(&["analyze", "Z3", "--json"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid("analysis", &r);
    assert_eq!(r["order"], 3);
    assert_eq!(r["sets"]["units"]["size"], 2);
    assert!(predicate(&r, "2UNJ"));
    assert!(!predicate(&r, "UNJ"));

    let o = ringlab(&["analyze", "Z7", "--json"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!predicate(&r, "2UNJ"));

    let o = ringlab(&["analyze", "M(2, Z2)", "--json", "--witnesses"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid("analysis", &r);
    let two = r["predicates"].as_array().unwrap().iter().find(|p| p["id"] == "2UNJ").unwrap();
    assert_eq!(two["holds"], false);
    assert!(two["counterexample"]["element"]["label"].as_str().unwrap().starts_with("[["));

    let text = stdout(&ringlab(&["analyze", "M(2, Z2)", "--witnesses"]));
    assert!(text.contains("2UNJ") && text.contains("fails at"));
}

#[test]
fn analysis_sizes_match_members() {
    let o = ringlab(&["analyze", "GroupRing(Z2, C8)", "--json"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid("analysis", &r);
    for (_, set) in r["sets"].as_object().unwrap() {
        let size = set["size"].as_u64().unwrap() as usize;
        let shown = set["members"].as_array().unwrap().len();
        let truncated = set["truncated"].as_bool().unwrap();
        assert_eq!(truncated, size > shown);
        assert_eq!(shown, size.min(32));
    }
    assert_eq!(r["predicates"].as_array().unwrap().len(), 27);
}

#[test]
fn check_examples() {
    let o = ringlab(&["check", "2UNJ", "GroupRing(Z2, C4)"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("holds"));

    let o = ringlab(&["check", "2UNJ", "GroupRing(Z2, C3)", "--json"]);
    assert_eq!(code(&o), 1);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid("check", &r);
    assert_eq!(r["holds"], false);
    assert!(r["witness"]["element"]["index"].is_u64());

    assert_eq!(code(&ringlab(&["check", "tripotent", "Z6"])), 0);
    assert_eq!(code(&ringlab(&["check", "no-such-predicate", "Z6"])), 2);
}

#[test]
fn error_exit_codes() {
    let o = ringlab(&["analyze", "T(2, GF(4)"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("column 11"), "{}", stderr(&o));
    assert_eq!(code(&ringlab(&["analyze", "M(3, Z3)"])), 3);
    assert_eq!(code(&ringlab(&["analyze", "GF(6)"])), 4);
    assert_eq!(code(&ringlab(&["analyze", "GroupRing(Z2, C5)"])), 4);
    assert_eq!(code(&ringlab(&["analyze", "Ks(M(2, Z2), s=2)"])), 4);
    assert_eq!(code(&ringlab(&["analyze", "Z2", "--max-order", "0"])), 2);
}

#[test]
fn order_budget_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_ringlab"));
        c.args(["analyze", "M(2, Z2)"]);
        match env {
            Some(v) => c.env("RINGLAB_MAX_ORDER", v),
            None => c.env_remove("RINGLAB_MAX_ORDER"),
        };
        if let Some(f) = flag {
            c.args(["--max-order", f]);
        }
        c.output().unwrap().status.code().unwrap()
    };
    assert_eq!(run(None, None), 0);
    assert_eq!(run(Some("8"), None), 3);
    assert_eq!(run(Some("8"), Some("16")), 0);
    assert_eq!(run(None, Some("15")), 3);
    assert_eq!(code(&ringlab(&["analyze", "M(3, Z3)", "--max-order", "20000"])), 0);
}

#[test]
fn verify_examples() {
    let o = ringlab(&["verify", "--theorem", "prop-3.3", "--json"]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_valid("theoremReport", &r);
    assert_eq!(r["aggregate"], "pass");
    assert_eq!(code(&ringlab(&["verify", "--theorem", "no-such-id"])), 2);
    assert_eq!(code(&ringlab(&["verify"])), 2);
    assert_eq!(code(&ringlab(&["verify", "--all", "--catalog", "/nonexistent/catalog.txt"])), 2);
}

#[test]
fn verify_output_ignores_job_count() {
    let dir = std::env::temp_dir().join(format!("ringlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.txt");
    std::fs::write(&path, "# small\nZ2\nZ4\nZ6\nM(2, Z2)\nT(2, Z2)\nGroupRing(Z2, C2)\nM(3, Z3)\n").unwrap();
    let path = path.to_str().unwrap();
    let run = |jobs: &str, json: bool| {
        let mut args = vec!["verify", "--all", "--catalog", path, "--no-timing", "--jobs", jobs];
        if json {
            args.push("--json");
        }
        let o = ringlab(&args);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        stdout(&o)
    };
    assert_eq!(run("1", false), run("4", false));
    let one = run("1", true);
    assert_eq!(one, run("3", true));
    for line in one.lines() {
        let r: Value = serde_json::from_str(line).unwrap();
        assert_valid("theoremReport", &r);
        assert!(r["ms"].is_null());
        for res in r["results"].as_array().unwrap() {
            assert_ne!(res["status"], "fail");
            if res["status"] == "skip" {
                assert!(res["note"].as_str().is_some_and(|n| !n.is_empty()));
            }
        }
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn search_examples() {
    let o = ringlab(&["search", "--where", "2UNJ and not UJ"]);
    assert_eq!(code(&o), 0);
    let found: Vec<String> = stdout(&o).lines().map(String::from).collect();
    for ring in ["Z3", "Z6", "Z9"] {
        assert!(found.iter().any(|f| f == ring), "{ring}");
    }
    let o = ringlab(&["search", "--where", "2UNJ and not 2UJ", "--json"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid("search", &r);
    assert_eq!(r["matches"], json!([]));

    let found = stdout(&ringlab(&["search", "--where", "tripotent"]));
    for ring in ["Z2", "Z3", "Z6", "Prod(Z3, Z3)"] {
        assert!(found.lines().any(|f| f == ring), "{ring}");
    }
    assert_eq!(code(&ringlab(&["search", "--where", "2UNJ and"])), 2);
    assert_eq!(code(&ringlab(&["search", "--where", "2UNJ or nonsense"])), 2);
}

#[test]
fn elements_examples() {
    let o = ringlab(&["elements", "Z4", "--table", "mul"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let row: Vec<&str> = text
        .lines()
        .find(|l| l.trim_start().starts_with("2 |"))
        .unwrap()
        .split('|')
        .nth(1)
        .unwrap()
        .split_whitespace()
        .collect();
    assert_eq!(row, ["0", "2", "0", "2"]);

    let text = stdout(&ringlab(&["elements", "PolyMod(Z2,2)"]));
    let labels: Vec<&str> = text.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(labels, ["0", "1", "x", "1+x"]);

    let o = ringlab(&["elements", "M(2,Z3)"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("--force"));
    let o = ringlab(&["elements", "M(2,Z3)", "--force"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 82);
}
