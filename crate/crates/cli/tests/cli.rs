use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_loopbraid"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn expand_prints_commutator_coefficients() {
    let (code, stdout, _) = run(&["expand", "--n", "2", "x1 x2 X1 X2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1 + y1 y2 - y2 y1");

    let (code, stdout, _) = run(&["expand", "--n", "2", "--json", "x1 x2 X1 X2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v[""], Value::from(1));
    assert_eq!(v["1,2"], Value::from(1));
    assert_eq!(v["2,1"], Value::from(-1));
    assert_eq!(v.as_object().unwrap().len(), 3);
}

#[test]
fn eq_distinguishes_words_and_knows_the_defining_relation() {
    // x1 commutes with its own conjugates: x1 · x1^{x2} = x1^{x2} · x1.
    let (code, stdout, _) = run(&["eq", "--n", "2", "x1 X2 x1 x2", "X2 x1 x2 x1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "equal");

    let (code, stdout, _) = run(&["eq", "--n", "2", "x1 x2", "x2 x1"]);
    assert_eq!(code, 1);
    assert_eq!(stdout.trim(), "not equal");
}

#[test]
fn auto_eq_sees_the_rank_two_commutation() {
    let (code, _, _) = run(&["auto-eq", "--n", "2", "c1.2 c2.1", "c2.1 c1.2"]);
    assert_eq!(code, 0);

    let (code, _, _) = run(&["auto-eq", "--n", "3", "c1.2 c1.3", "c1.3 c1.2"]);
    assert_eq!(code, 1);

    let (code, stdout, _) = run(&[
        "auto-eq", "--json", "--n", "2", "c1.2 c2.1", "c2.1 c1.2",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["equal"], Value::Bool(true));
    assert_eq!(v["left"]["n"], Value::from(2));
    assert_eq!(v["left"]["perm"], serde_json::json!([1, 2]));
    assert_eq!(v["left"], v["right"]);
}

#[test]
fn degree_grades_the_filtration() {
    let (code, stdout, _) = run(&["degree", "--n", "2", "c1.2 C1.2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "infinity");

    let (code, stdout, _) = run(&["degree", "--n", "3", "c1.2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1");

    let (code, stdout, _) = run(&["degree", "--n", "3", "c1.2 c1.3 C1.2 C1.3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "2");

    let (code, stdout, _) = run(&["degree", "--json", "--n", "2", "c1.2 C1.2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["degree"], Value::Null);
}

#[test]
fn milnor_reads_a_conjugator_coefficient() {
    let (code, stdout, _) = run(&[
        "milnor", "--n", "3", "--strand", "1", "--index", "2,3", "c1.2 c1.3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1");

    let (code, stdout, _) = run(&[
        "milnor", "--json", "--n", "3", "--strand", "1", "--index", "2,3", "c1.2 c1.3",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["coefficient"], Value::from(1));
}

#[test]
fn comb_emits_the_normal_form_schema() {
    let (code, stdout, _) = run(&["comb", "--json", "--n", "3", "a1.2 c1.3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["n"], Value::from(3));
    let levels = v["levels"].as_array().unwrap();
    assert!(!levels.is_empty());
    for level in levels {
        assert!(level["m"].is_u64());
        assert!(level["residual"].is_object());
        for coord in level["coords"].as_array().unwrap() {
            assert!(coord["i"].is_u64());
            assert!(coord["vector"].is_object());
        }
    }

    let (code, stdout, _) = run(&["comb", "--n", "3", "c1.2 C1.2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "identity");
}

#[test]
fn lyndon_enumerates_and_factorizes() {
    let (code, stdout, _) = run(&["lyndon", "--enumerate", "3", "2"]);
    assert_eq!(code, 0);
    let words: Vec<&str> = stdout.lines().collect();
    assert_eq!(words, ["1,2", "1,3", "2,3"]);

    let (code, stdout, _) = run(&["lyndon", "--enumerate", "2", "2", "--square-free"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1,2");

    let (code, stdout, _) = run(&["lyndon", "--factorize", "2,1,3,1"]);
    assert_eq!(code, 0);
    let factors: Vec<&str> = stdout.lines().collect();
    assert_eq!(factors, ["2", "1,3", "1"]);

    let (code, stdout, stderr) = run(&["lyndon", "--json", "--enumerate", "3", "2"]);
    assert_eq!(code, 0);
    assert!(stderr.is_empty());
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["words"], serde_json::json!(["1,2", "1,3", "2,3"]));

    let (code, _, _) = run(&["lyndon", "--enumerate", "3", "2", "--factorize", "1,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["lyndon"]);
    assert_eq!(code, 2);
}

#[test]
fn malformed_input_exits_two_with_empty_json_stdout() {
    let (code, _, stderr) = run(&["expand", "--n", "2", "y1"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());

    let (code, stdout, stderr) = run(&["expand", "--json", "--n", "2", "y1"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&stderr).unwrap();
    assert_eq!(v["code"], Value::from(2));
    assert!(v["error"].is_string());

    let (code, stdout, _) = run(&["expand", "--json", "--n", "2", "x3"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());

    let (code, stdout, stderr) = run(&["degree", "--json", "--n", "2", "s1"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&stderr).unwrap();
    assert_eq!(v["code"], Value::from(2));

    let (code, stdout, stderr) = run(&["verify", "--json", "--suite", "bogus"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&stderr).unwrap();
    assert_eq!(v["code"], Value::from(2));
}

#[test]
fn usage_errors_exit_two_even_in_json_mode() {
    let (code, _, stderr) = run(&["expand", "--json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stderr).unwrap();
    assert_eq!(v["code"], Value::from(2));

    let (code, _, stderr) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn verify_reports_suites_in_json() {
    let (code, stdout, _) = run(&[
        "verify", "--json", "--suite", "hirsch", "--max-n", "3", "--seed", "7",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert!(r["name"].is_string());
        assert!(r["params"].is_string());
        assert_eq!(r["passed"], Value::Bool(true));
        assert!(r["details"].is_string());
    }

    let (code, stdout, _) = run(&["verify", "--suite", "mutations", "--max-n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 4);
    assert!(stdout.lines().all(|l| l.starts_with("[ok]")));
}

#[test]
fn ranks_prints_expected_versus_computed() {
    let (code, stdout, _) = run(&["ranks", "--max-n", "3", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.iter().all(|r| r["passed"] == Value::Bool(true)));
    let names: Vec<&str> = reports
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert!(names.iter().any(|s| s.contains("rank")));
    assert!(names.iter().any(|s| s.contains("hirsch")));
}
