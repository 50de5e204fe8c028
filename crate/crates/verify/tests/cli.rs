use simpforge_verify::{Report, Status, CONFIG_ENV};
use std::path::Path;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).env_remove(CONFIG_ENV).output().expect("verify runs")
}

fn verify_with_config(config: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).env(CONFIG_ENV, config).output().expect("verify runs")
}

fn json_report(out: &Output) -> Report {
    Report::from_json(&String::from_utf8_lossy(&out.stdout)).expect("json report on stdout")
}

#[test]
fn passing_suite_exits_zero() {
    let out = verify(&["run", "--suite", "simplex", "--p-max", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[simplex]"));
    assert!(text.contains("0 fail"));
}

#[test]
fn bad_configuration_exits_two() {
    for args in [
        &["run", "--suite", "simplex", "--p-max", "1"][..],
        &["run", "--suite", "simplex", "--d-policy", "sample:0:1"],
        &["run", "--suite", "nonsense"],
        &["run", "--suite", "simplex", "--mutation", "no-such-mutation"],
    ] {
        let out = verify(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn malformed_config_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"p_max": 3, "unknown_key": true}"#).unwrap();
    let out = verify_with_config(&path, &["run", "--suite", "simplex"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = verify(&["run", "--config", "/nonexistent/verify.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn config_file_is_read_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("verify.json");
    std::fs::write(&path, r#"{"suite": ["simplex"], "p_max": 2, "n_max": 2, "format": "json"}"#).unwrap();

    let from_file = json_report(&verify_with_config(&path, &["run"]));
    assert_eq!(from_file.bounds.p_max, 2);
    assert_eq!(from_file.bounds.n_max, 2);
    assert!(from_file.checks.iter().all(|c| c.id.starts_with("simplex.")));

    let out = verify_with_config(&path, &["run", "--n-max", "3", "--only", "simplex.relations"]);
    let overridden = json_report(&out);
    assert_eq!(overridden.bounds.n_max, 3);
    assert_eq!(overridden.bounds.p_max, 2);
    assert!(overridden.checks.iter().all(|c| c.id.starts_with("simplex.relations")));
    let statuses: Vec<_> = overridden.checks.iter().map(|c| (c.id.as_str(), c.status)).collect();
    assert!(statuses.contains(&("simplex.relations.n=3", Status::Pass)));
    assert!(statuses.contains(&("simplex.relations.n=4", Status::Skipped)));
}

#[test]
fn mutation_exits_one_with_counterexample() {
    let out = verify(&["run", "--suite", "homotopy", "--only", "t_factor.values.n=1", "--mutation", "t-exponent", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json_report(&out);
    assert_eq!(r.mutation.as_deref(), Some("t-exponent"));
    assert!(r.failures().all(|c| c.counterexample.is_some()));
    assert!(r.summary.fail > 0);
}

#[test]
fn single_check_by_id() {
    let out = verify(&["run", "--suite", "homotopy", "--only", "h_tilde.vertex.n=3.i=2.p=2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(r.checks.len(), 1);
    assert_eq!(r.checks[0].status, Status::Pass);
}

#[test]
fn report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = verify(&["run", "--suite", "simplex", "--p-max", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.summary.fail, 0);
}

#[test]
fn list_prints_ids_and_anchors() {
    let out = verify(&["list", "--suite", "hopf"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.iter().all(|l| l.starts_with("hopf.") && l.contains('\t')));
    assert!(lines.iter().any(|l| l.starts_with("hopf.purechar.comult\t")));
}

#[test]
fn models_binary_checks_and_rejects() {
    let models = env!("CARGO_BIN_EXE_models");
    let ok = Command::new(models).args(["check", "kA(2)", "--p-max", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    let bad = Command::new(models).args(["check", "no_such_model"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let list = Command::new(models).arg("list").output().unwrap();
    assert!(String::from_utf8_lossy(&list.stdout).lines().any(|l| l.contains("K_A")));
}
