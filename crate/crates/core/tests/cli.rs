use std::path::PathBuf;

use asai::cli::{run_command, EXIT_PASS, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("asai").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn config_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("asai-cli-{}-{name}.cfg", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn factors_for_ramified_n1() {
    let path = config_file("ram", "q = 5\nextension = inert_ramified\nn = 1\nsatake = 2\n");
    let (code, out, _) = run(&["factors", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("L = prod (1 - 4 X^1)^-1"), "{out}");
    assert!(out.lines().any(|l| l == "eps = 1"), "{out}");
    assert!(out.contains("gamma = ") && out.contains("poles = ["), "{out}");
}

#[test]
fn satake_length_mismatch_is_a_usage_error() {
    let path = config_file("short", "q = 5\nextension = inert_unramified\nn = 2\nsatake = 1\n");
    let (code, out, err) = run(&["factors", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("satake"), "{err}");
}

#[test]
fn missing_config_file_is_a_usage_error() {
    let (code, _, err) = run(&["factors", "--config", "/nonexistent/asai.cfg"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn bad_arguments_exit_with_usage() {
    assert_eq!(run(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--suite", "fe", "--n-max", "9"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["tate", "--char", "R,3", "--s", "0.5"]).0, EXIT_USAGE);
    assert_eq!(run(&["contour", "--D", "2", "--s", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_PASS);
}

#[test]
fn verify_is_deterministic_and_summarized() {
    let args = ["verify", "--suite", "twist", "--seed", "3", "--n-max", "2"];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!((c1, c2), (EXIT_PASS, EXIT_PASS));
    assert_eq!(o1, o2);
    let records = o1.lines().filter(|l| l.starts_with("case=")).count();
    // 3 types × 2 ranks × 10 tuples × 3 twists
    assert_eq!(records, 180);
    assert_eq!(o1.lines().last().unwrap(), "summary total=180 passed=180 failed=0");
    let (_, other, _) = run(&["verify", "--suite", "twist", "--seed", "4", "--n-max", "2"]);
    assert_ne!(o1, other);
}

#[test]
fn verify_with_config_checks_that_representation() {
    let path = config_file("split", "q = 3\nextension = split\nn = 2\nsatake = 2, 1/3\nsatake2 = 5, 1/7+i\ntruncation = 6\n");
    let (code, out, _) = run(&["verify", "--suite", "all", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("case=")).all(|l| l.contains("q=3") || l.contains("q=-")), "{out}");
    assert!(out.lines().last().unwrap().ends_with("failed=0"));
}

#[test]
fn tate_and_contour_records() {
    let (code, out, _) = run(&["tate", "--char", "sgn", "--s", "0.4"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("case=tate chi=") && out.contains("testfn=x_gaussian") && out.contains("status=pass"), "{out}");

    let (code, out, _) = run(&["contour", "--D", "2", "--s", "-0.5+0.25i"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("case=contour") && out.contains("status=pass"), "{out}");
    assert!(!out.contains("-0.0000000000i"), "{out}");
}
