use cogroupoid::Certificate;
use cogroupoid_cli::{exit, run_suite, spec, Bundle};
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cogroupoid"))
}

fn run(args: &[&str], out: &Path) -> Output {
    bin().args(args).arg("--out").arg(out).output().expect("binary runs")
}

fn write_spec(dir: &Path, text: &str) -> String {
    let p = dir.join("run.toml");
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn list_suites() {
    let o = bin().arg("--list-suites").output().unwrap();
    assert_eq!(o.status.code(), Some(exit::OK));
    let text = String::from_utf8(o.stdout).unwrap();
    for (name, _) in spec::SUITES {
        assert!(text.lines().any(|l| l.starts_with(name)), "{} missing", name);
    }
}

#[test]
fn every_builtin_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    for (name, _) in spec::SUITES {
        let out = dir.path().join(name);
        let o = run(&["--suite", name], &out);
        assert_eq!(o.status.code(), Some(exit::OK), "{}: {}", name, String::from_utf8_lossy(&o.stdout));
        let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("certificates.json")).unwrap()).unwrap();
        assert_eq!(json["suite"], *name);
        assert_eq!(json["passed"], true);
        assert!(!json["certificates"].as_array().unwrap().is_empty());
        let summary = std::fs::read_to_string(out.join("summary.txt")).unwrap();
        assert!(summary.trim_end().ends_with("certificates pass"));
        assert_eq!(summary, String::from_utf8(o.stdout).unwrap());
    }
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for suite in ["classify", "transport"] {
        let (a, b) = (dir.path().join(format!("{}-a", suite)), dir.path().join(format!("{}-b", suite)));
        run(&["--suite", suite], &a);
        run(&["--suite", suite], &b);
        let read = |p: &Path| std::fs::read(p.join("certificates.json")).unwrap();
        assert_eq!(read(&a), read(&b), "{}", suite);
    }
}

#[test]
fn seed_changes_random_witnesses() {
    let text = spec::builtin("classify").unwrap();
    let a = run_suite(text, Some(2), Some(1)).unwrap();
    let b = run_suite(text, Some(2), Some(2)).unwrap();
    assert!(a.passed && b.passed);
    let subjects = |x: &Bundle| x.certificates.iter().map(|c| c.subject.clone()).collect::<Vec<_>>();
    assert_ne!(subjects(&a), subjects(&b));
    assert_eq!(a.seed, 1);
    assert_eq!(a.degree, 2);
}

#[test]
fn spec_file_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(
        dir.path(),
        r#"
suite = "cogroupoid"
degree = 3

[family]
kind = "B"
params = { q = "3" }
objects = [
  { name = "E", matrix = [["0", "1"], ["-1/q", "0"]] },
]
"#,
    );
    let out = dir.path().join("r");
    let o = run(&["--spec", &path, "--degree", "2"], &out);
    assert_eq!(o.status.code(), Some(exit::OK), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out.join("certificates.json")).unwrap()).unwrap();
    assert_eq!(json["degree"], 2);
    assert_eq!(json["format"], "cogroupoid-bundle/1");
    // a spec for another suite is refused
    let o = run(&["--spec", &path, "--suite", "galois"], &out);
    assert_eq!(o.status.code(), Some(exit::PARSE));
}

#[test]
fn cocycle_family_from_a_table() {
    let dir = tempfile::tempdir().unwrap();
    let ones = vec!["\"1\""; 16].join(", ");
    let path = write_spec(
        dir.path(),
        &format!(
            r#"
suite = "galois"
degree = 2

[family]
kind = "cocycle"
group = [2, 2]
objects = [
  {{ name = "1", cocycle = [{}] }},
  {{ name = "σ", cocycle = "klein-bilinear" }},
]

[galois]
sides = ["left", "right"]
"#,
            ones
        ),
    );
    let o = run(&["--spec", &path], &dir.path().join("r"));
    assert_eq!(o.status.code(), Some(exit::OK), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r");
    let cases: &[(&str, i32)] = &[
        (
            "suite = \"cogroupoid\"\n[family]\nkind = \"B\"\nobjects = [{ name = \"E\", matrix = [[\"1+\", \"0\"], [\"0\", \"1\"]] }]\n",
            exit::PARSE,
        ),
        (
            "suite = \"cogroupoid\"\n[family]\nkind = \"B\"\nobjects = [{ name = \"E\", matrix = [[\"1\", \"2\"], [\"2\", \"4\"]] }]\n",
            exit::SINGULAR,
        ),
        ("suite = \"cogroupoid\"\ncolour = 1\n", exit::PARSE),
        ("suite = \"nope\"\n", exit::PARSE),
        ("suite = \"cogroupoid\"\n", exit::PARSE),
        (
            "suite = \"cogroupoid\"\n[family]\nkind = \"GL\"\nobjects = [{ name = \"P\", matrix = [[\"1\", \"2\"], [\"2\", \"1\"]] }]\n",
            exit::OTHER,
        ),
    ];
    for (text, code) in cases {
        let path = write_spec(dir.path(), text);
        let o = run(&["--spec", &path], &out);
        assert_eq!(o.status.code(), Some(*code), "{}\n{}", text, String::from_utf8_lossy(&o.stderr));
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
    assert_eq!(run(&["--suite", "fusion", "--degree", "11"], &out).status.code(), Some(exit::DEGREE_TOO_LARGE));
    assert_eq!(run(&["--suite", "fusion", "--degree", "0"], &out).status.code(), Some(exit::PARSE));
    assert_eq!(run(&["--bogus"], &out).status.code(), Some(exit::USAGE));
    assert_eq!(run(&[], &out).status.code(), Some(exit::PARSE));
    assert_eq!(run(&["--spec", "/nonexistent/run.toml"], &out).status.code(), Some(exit::OTHER));
}

#[test]
fn failing_certificate_sets_exit_code() {
    let mut b = run_suite(spec::builtin("fusion").unwrap(), Some(2), None).unwrap();
    assert_eq!(b.exit_code(), exit::OK);
    let mut c = Certificate::new("probe", vec![], None, true);
    c.fail("always", None, "1 ≠ 0");
    b.certificates.push(c);
    b.passed = b.certificates.iter().all(|c| c.passed);
    assert_eq!(b.exit_code(), exit::FAILED);
    assert!(b.summary().ends_with("FAIL: 2/3 certificates pass\n"));
}
