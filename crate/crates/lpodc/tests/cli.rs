use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn lpodc() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lpodc"));
    c.env_remove("LPODC_CAP");
    c
}

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "tests", "golden", name].iter().collect();
    fs::read_to_string(p).unwrap()
}

fn run(c: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = c.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn with_stdin(c: &mut Command, input: &str) -> (i32, String, String) {
    let mut child = c.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn translate_writes_the_base_program() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pi1.lp");
    let (code, _, _) = run(lpodc().args(["translate", &example("pi1.lpod"), "-o"]).arg(&out));
    assert_eq!(code, 0);
    let text = fs::read_to_string(out).unwrap();
    assert!(lpodc_core::asp::same_tokens(&text, &golden("pi1_base.lp")).unwrap());
}

#[test]
fn translate_crp_from_extension() {
    let (code, text, _) = run(lpodc().args(["translate", &example("pi3.crp")]));
    assert_eq!(code, 0);
    assert!(lpodc_core::asp::same_tokens(&text, &golden("pi3.lp")).unwrap());
}

#[test]
fn translate_with_criterion_adds_the_preference_block() {
    let (code, text, _) = run(lpodc().args(["translate", "--criterion", "pareto", &example("pi2.lpod")]));
    assert_eq!(code, 0);
    let want = format!("{}\n{}", golden("pi2_base.lp"), golden("pi2_pareto.lp"));
    assert!(lpodc_core::asp::same_tokens(&text, &want).unwrap());
}

#[test]
fn solve_json() {
    let (code, text, _) = run(lpodc().args(["solve", "--criterion", "cardinality", "--format", "json", &example("pi1.lpod")]));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["criterion"], "cardinality");
    assert_eq!(v["candidates"].as_array().unwrap().len(), 3);
    assert_eq!(v["preferred"][0]["atoms"], serde_json::json!(["a", "b"]));
    assert_eq!(v["preferred"][0]["degrees"], serde_json::json!([1, 1]));
}

#[test]
fn solve_text_lists_every_criterion() {
    let (code, text, _) = run(lpodc().args(["solve", &example("pi2.lpod")]));
    assert_eq!(code, 0);
    for c in ["cardinality", "inclusion", "pareto", "penalty-sum"] {
        assert!(text.contains(&format!("preferred [{c}]")), "{text}");
    }
}

#[test]
fn check_examples() {
    let (code, text, _) = run(lpodc().args(["check", &example("pi1.lpod")]));
    assert_eq!((code, text.as_str()), (0, "OK: 3 candidates, 1 preferred, oracle == translation\n"));
    let (code, text, _) = run(lpodc().args(["check", &example("pi3p.crp")]));
    assert_eq!((code, text.as_str()), (0, "OK: 1 candidates, 1 preferred, oracle == translation\n"));
}

#[test]
fn check_dumps_ground_programs() {
    let (code, _, err) = run(lpodc().args(["check", "--dump-ground", "--criterion", "pareto", &example("pi1.lpod")]));
    assert_eq!(code, 0);
    assert_eq!(err.matches("% tuple").count(), 9);
}

#[test]
fn check_random_corpus() {
    let (code, text, _) = run(lpodc().args(["check", "--random", "50", "--seed", "7", "--dialect", "lpod", "--parallel", "2"]));
    assert_eq!(code, 0);
    assert_eq!(text, "OK: 50 random lpod programs (seed 7), oracle == translation\n");
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, err) = with_stdin(lpodc().args(["solve", "--dialect", "lpod"]), "a * :- b.\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");
    let (code, _, _) = with_stdin(lpodc().args(["solve", "--dialect", "lpod"]), "r1: a :+ b.\n");
    assert_eq!(code, 2);
    let (code, _, _) = run(lpodc().args(["solve", "--criterion", "pareto", &example("pi3.crp")]));
    assert_eq!(code, 2);
}

#[test]
fn missing_file_exits_1() {
    let (code, _, _) = run(lpodc().args(["solve", "/nonexistent/x.lpod"]));
    assert_eq!(code, 1);
}

#[test]
fn cap_exits_3() {
    let (code, _, err) = run(lpodc().args(["solve", "--cap", "1", &example("pi2.lpod")]));
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = run(lpodc().args(["solve", &example("pi2.lpod")]).env("LPODC_CAP", "1"));
    assert_eq!(code, 3);
    let (code, _, _) = run(lpodc().args(["solve", &example("pi2.lpod")]).env("LPODC_CAP", "64"));
    assert_eq!(code, 0);
}

#[test]
fn empty_program() {
    let (code, text, err) = with_stdin(lpodc().args(["translate", "-"]), "");
    assert_eq!(code, 0);
    assert!(text.is_empty());
    assert!(err.contains("warning"), "{err}");
    let (code, text, _) = with_stdin(lpodc().args(["solve", "--criterion", "pareto"]), "");
    assert_eq!(code, 0);
    assert!(text.contains("candidates (1):\n  {}"), "{text}");
}
