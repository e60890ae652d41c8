use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

const PETERSEN: &str = "IheA@GUAo";
const K4: &str = "C~";
const C5: &str = "Dhc";
const BOWTIE: &str = "0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n";

struct Run {
    code: i32,
    stdout: String,
    lines: Vec<Value>,
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brookskit"));
    cmd.args(args).env_remove("BROOKSKIT_LIMITS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines = stdout
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    Run {
        code: out.status.code().unwrap(),
        stdout,
        lines,
    }
}

fn run(args: &[&str], stdin: &str) -> Run {
    run_env(args, stdin, &[])
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

/// Checks every line against the subcommand's schema, or the error schema.
fn conforms(r: &Run, name: &str) {
    let ok = schema(name);
    let err = schema("error");
    assert!(!r.lines.is_empty(), "no JSON from {name}");
    for line in &r.lines {
        let v = if line.get("error").is_some() { &err } else { &ok };
        let errors: Vec<String> = v.iter_errors(line).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{name}: {line} fails its schema: {errors:?}");
    }
}

fn g6(args: &[&str]) -> String {
    let r = run(args, "");
    assert_eq!(r.code, 0, "{}", r.stdout);
    r.stdout.trim().to_string()
}

#[test]
fn k4_is_exceptional() {
    let r = run(&["-q", "color", "--strategy", "kempe", "--verify"], K4);
    conforms(&r, "color");
    assert_eq!(r.code, 1);
    assert_eq!(r.lines[0]["outcome"], "exceptional");
    assert_eq!(r.lines[0]["exception"], "complete_graph");
    assert_eq!(r.lines[0]["witness"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn every_strategy_colors_petersen() {
    let r = run(&["-q", "color", "--strategy", "all", "--verify", "--trace"], PETERSEN);
    conforms(&r, "color");
    assert_eq!(r.code, 0);
    assert_eq!(r.lines.len(), 7);
    for line in &r.lines {
        assert_eq!(line["colors_used"], 3);
        assert_eq!(line["verified"], true);
        assert!(!line["trace"].as_array().unwrap().is_empty());
    }
}

#[test]
fn odd_cycle_witness_is_the_cycle() {
    let r = run(&["-q", "color", "--strategy", "lovasz,cubic"], C5);
    conforms(&r, "color");
    assert_eq!(r.code, 1);
    assert!(r.lines.iter().all(|l| l["exception"] == "odd_cycle"));
}

#[test]
fn catlin_oracle() {
    let catlin = g6(&["gen", "--family", "catlin", "--t", "3"]);
    let r = run(&["-q", "oracle"], &catlin);
    conforms(&r, "oracle");
    assert_eq!((r.lines[0]["chi"].as_u64(), r.lines[0]["omega"].as_u64(), r.lines[0]["delta"].as_u64()), (Some(8), Some(6), Some(8)));
}

#[test]
fn oracle_with_list_and_paint() {
    let r = run(&["-q", "oracle", "--list", "--paint"], C5);
    conforms(&r, "oracle");
    assert_eq!(r.lines[0]["chi_list"], 3);
    assert_eq!(r.lines[0]["chi_paint"], 3);
}

#[test]
fn classify_formats() {
    let r = run(&["-q", "classify", "--format", "edge-list"], BOWTIE);
    conforms(&r, "classify");
    assert_eq!(r.lines[0]["gallai_tree"], true);
    assert_eq!(r.lines[0]["two_connected"], false);
    let dimacs = run(&["-q", "classify"], "p edge 2 1\ne 1 2\n");
    conforms(&dimacs, "classify");
    assert_eq!(dimacs.lines[0]["n"], 2);
}

#[test]
fn list_modes() {
    let bad = run(&["-q", "lists", "--mode", "bad", "--verify"], BOWTIE);
    conforms(&bad, "lists");
    assert_eq!(bad.lines[0]["sizes"], serde_json::json!([2, 2, 4, 2, 2]));
    assert_eq!(bad.lines[0]["oracle_colorable"], false);

    let brooks = run(&["-q", "lists", "--verify"], PETERSEN);
    conforms(&brooks, "lists");
    assert_eq!(brooks.code, 0);
    assert_eq!(brooks.lines[0]["colored"], true);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lists.json");
    std::fs::write(&path, "[[1,2],[1,3],[2,3],[1,2],[1,3],[2,3]]").unwrap();
    let c6 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    let degree = run(&["-q", "lists", "--mode", "degree", "--verify", "--lists", path.to_str().unwrap()], c6);
    conforms(&degree, "lists");
    assert_eq!(degree.code, 0);
    assert_eq!(degree.lines[0]["colored"], true);
}

#[test]
fn at_check() {
    let c6 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    let r = run(&["-q", "at-check", "--verify"], c6);
    conforms(&r, "at-check");
    assert_eq!((r.lines[0]["ee"].as_u64(), r.lines[0]["eo"].as_u64()), (Some(2), Some(0)));
    assert_eq!(r.lines[0]["oracle_degree_choosable"], true);

    let rev = run(&["-q", "at-check", "--chord-rule", "reversed"], "0 1\n1 2\n2 3\n3 0\n0 2\n");
    conforms(&rev, "at-check");
    assert_eq!(rev.lines[0]["certified"], true);

    let pendant = run(&["-q", "at-check"], "0 1\n1 2\n2 3\n3 0\n0 4\n");
    conforms(&pendant, "at-check");
    assert_eq!(pendant.code, 1);
    assert_eq!(pendant.lines[0]["error"], "precondition");
}

#[test]
fn paint_solve_and_play() {
    let r = run(&["-q", "paint"], C5);
    conforms(&r, "paint");
    assert_eq!(r.lines[0]["chi_paint"], 3);

    let lose = run(&["-q", "paint", "--tokens", "2"], C5);
    conforms(&lose, "paint");
    assert_eq!(lose.lines[0]["solution"]["winner"], "adversary");

    for adversary in ["reveal-all", "lowest", "random"] {
        let play = run(&["-q", "paint", "--mode", "play", "--verify", "--adversary", adversary, "--seed", "5"], PETERSEN);
        conforms(&play, "paint");
        assert_eq!(play.code, 0);
        assert_eq!(play.lines[0]["validation"]["painter_wins"], true);
    }
}

#[test]
fn check_conjectures_reports_no_violations() {
    let r = run(&["-q", "check-conjectures", "--max-n", "5"], "");
    conforms(&r, "check-conjectures");
    let summary = &r.lines.last().unwrap()["summary"];
    assert_eq!(summary["graphs"], 52);
    assert_eq!(summary["reed_violations"], 0);
    assert_eq!(summary["bk_violations"], 0);
}

#[test]
fn bench_agrees_totally() {
    let r = run(&["-q", "bench", "--max-n", "5", "--jobs", "2"], "");
    conforms(&r, "bench");
    assert_eq!(r.code, 0);
    assert_eq!(r.lines[0]["total_agreement"], true);
    assert_eq!(r.lines[0]["graphs"], 1 + 1 + 4 + 38 + 728);
}

#[test]
fn output_is_deterministic() {
    let catlin = g6(&["gen", "--family", "catlin", "--t", "3"]);
    let cases: [(&[&str], &str); 5] = [
        (&["-q", "color", "--strategy", "all", "--trace"], PETERSEN),
        (&["-q", "oracle"], &catlin),
        (&["-q", "paint", "--mode", "play", "--adversary", "random", "--seed", "9"], PETERSEN),
        (&["-q", "lists", "--mode", "bad"], BOWTIE),
        (&["-q", "check-conjectures", "--max-n", "4"], ""),
    ];
    for (args, input) in cases {
        assert_eq!(run(args, input).stdout, run(args, input).stdout, "{args:?}");
    }
    let strip = |r: Run| {
        let mut v = r.lines[0].clone();
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    let one = strip(run(&["-q", "bench", "--max-n", "4", "--jobs", "1"], ""));
    let four = strip(run(&["-q", "bench", "--max-n", "4", "--jobs", "4"], ""));
    assert_eq!(one, four);
    let a = run(&["-q", "check-conjectures", "--max-n", "5", "--jobs", "1"], "");
    let b = run(&["-q", "check-conjectures", "--max-n", "5", "--jobs", "3"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generated_families_parse_back() {
    for args in [
        vec!["gen", "--family", "join", "--m", "3"],
        vec!["gen", "--family", "bk-five-triangles"],
        vec!["gen", "--family", "c8-squared"],
        vec!["gen", "--family", "c5_doubled"],
        vec!["gen", "--family", "gallai-random", "--n", "9", "--seed", "4"],
    ] {
        let g = g6(&args);
        let r = run(&["-q", "classify"], &g);
        assert_eq!(r.code, 0, "{args:?}");
        conforms(&r, "classify");
    }
}

#[test]
fn usage_errors_exit_2() {
    for (args, input) in [
        (vec!["frobnicate"], ""),
        (vec!["color", "--strategy", "nope"], PETERSEN),
        (vec!["color", "--bogus-flag"], PETERSEN),
        (vec!["classify"], "C\"\n"),
        (vec!["classify", "--format", "edge-list"], "0 0\n"),
        (vec!["classify", "--limits", "nonsense=1"], PETERSEN),
        (vec!["gen", "--family", "nope"], ""),
    ] {
        let r = run(&args, input);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        conforms(&r, "error");
    }
}

#[test]
fn scale_refusals_exit_3() {
    let r = run(&["oracle", "--limits", "chi_n=4,chi_sparse_n=4"], PETERSEN);
    assert_eq!(r.code, 3);
    conforms(&r, "error");
    assert_eq!(r.lines[0]["error"], "scale_refusal");
    assert_eq!(r.lines[0]["detail"]["limit"], 4);

    let env = run_env(&["oracle"], PETERSEN, &[("BROOKSKIT_LIMITS", "chi_n=4,chi_sparse_n=4")]);
    assert_eq!(env.code, 3);
    let flag_wins = run_env(&["-q", "oracle", "--limits", "chi_n=24,chi_sparse_n=48"], PETERSEN, &[("BROOKSKIT_LIMITS", "chi_n=4,chi_sparse_n=4")]);
    assert_eq!(flag_wins.code, 0);
}

#[test]
fn output_and_input_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k4.txt");
    let output = dir.path().join("out.json");
    std::fs::write(&input, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let r = run(&["-q", "-i", input.to_str().unwrap(), "-o", output.to_str().unwrap(), "color"], "");
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
    let written: Value = serde_json::from_str(std::fs::read_to_string(&output).unwrap().trim()).unwrap();
    assert_eq!(written["exception"], "complete_graph");

    let missing = run(&["-i", dir.path().join("nope").to_str().unwrap(), "classify"], "");
    assert_eq!(missing.code, 2);
    assert_eq!(missing.lines[0]["error"], "io");
}
