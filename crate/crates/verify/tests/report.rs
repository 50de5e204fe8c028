use num_bigint::BigInt;
use simpforge_doldkan::{assemble, homology, AbelianGroup, Weights};
use simpforge_models::{ModelId, Mutation};
use simpforge_verify::{run_suite, Bounds, Format, Report, RunOptions, Status, Suite};
use std::path::PathBuf;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn failing_report() -> Report {
    let mut opts = RunOptions::new(vec![Suite::Homotopy], Bounds::default());
    opts.only = Some("h_tilde.vertex.n=2.i=1.p=1".into());
    opts.mutation = Some(Mutation::RhoSquared);
    run_suite(&opts).unwrap().without_timing()
}

#[test]
fn failing_check_text_matches_golden() {
    let got = failing_report().to_text();
    let want = std::fs::read_to_string(fixture("rho_squared_vertex.txt")).unwrap();
    assert_eq!(got, want);
}

#[test]
fn failing_check_json_round_trips() {
    let r = failing_report();
    assert_eq!(r.summary.fail, 1);
    let c = &r.checks[0];
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.params.get("n").map(String::as_str), Some("2"));
    let x = c.counterexample.as_ref().unwrap();
    assert_eq!((x.level, x.generator.as_str()), (1, "t[1,1]"));
    let json = r.to_json();
    assert!(json.contains("\"counterexample\""));
    assert!(json.contains("\"mutation\": \"rho-squared\""));
    assert_eq!(Report::from_json(&json).unwrap(), r);
}

#[test]
fn passing_checks_omit_counterexamples() {
    let mut opts = RunOptions::new(vec![Suite::Simplex], Bounds { p_max: 2, ..Bounds::default() });
    opts.only = Some("simplex.relations".into());
    let r = run_suite(&opts).unwrap();
    let json = r.to_json();
    assert!(!json.contains("counterexample"));
    assert!(!json.contains("mutation"));
    assert_eq!(r.render(Format::Json), json);
    assert!(r.render(Format::Text).starts_with("simpforge verify report v1 (p_max=2 "));
}

#[test]
fn malformed_reports_are_rejected() {
    assert!(Report::from_json("{}").is_err());
    assert!(Report::from_json("not json").is_err());
    let mut r = serde_json::to_value(failing_report()).unwrap();
    r["checks"][0]["status"] = "maybe".into();
    assert!(Report::from_json(&r.to_string()).is_err());
}

#[derive(serde::Deserialize)]
struct Row {
    model: String,
    w: u32,
    degree: usize,
    rank: usize,
    torsion: Vec<String>,
}

#[test]
fn homology_matches_recorded_table() {
    let rows: Vec<Row> = serde_json::from_str(&std::fs::read_to_string(fixture("homology.json")).unwrap()).unwrap();
    assert_eq!(rows.len(), 144);
    let mut current: Option<(String, u32, simpforge_doldkan::GradedComplex)> = None;
    for row in rows {
        if current.as_ref().map_or(true, |(m, w, _)| *m != row.model || *w != row.w) {
            let p = row.model.parse::<ModelId>().unwrap().build().unwrap();
            current = Some((row.model.clone(), row.w, assemble(&p, &Weights::PerChain, row.w, 3).unwrap()));
        }
        let cx = &current.as_ref().unwrap().2;
        let want = AbelianGroup { rank: row.rank, torsion: row.torsion.iter().map(|t| t.parse::<BigInt>().unwrap()).collect() };
        assert_eq!(homology(cx, row.degree).unwrap(), want, "{} w={} H_{}", row.model, row.w, row.degree);
    }
}
