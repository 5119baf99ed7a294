use std::path::{Path, PathBuf};
use std::process::Command;

use mixedf4::fields::Mode;
use mixedf4::moufang::UElem;
use mixedf4::rewrite::RewriteOptions;
use mixedf4::Error;
use mixedf4_cli::checks::registry;
use mixedf4_cli::tau::run_tau;
use mixedf4_cli::*;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> PathBuf {
    crate_dir().join("fixtures/tau").join(name)
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn cheap(samples: usize) -> RunConfig {
    RunConfig { samples, suites: vec![Suite::Fields, Suite::Roots, Suite::Involution], ..RunConfig::default() }
}

#[test]
fn reports_are_deterministic() {
    let a = run_verify(cheap(5)).unwrap().without_timings();
    let b = run_verify(cheap(5)).unwrap().without_timings();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.passed());
    let names: Vec<&str> = a.records.iter().map(|r| r.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let c = run_verify(RunConfig { seed: 1, ..cheap(5) }).unwrap().without_timings();
    assert_ne!(a.to_json(), c.to_json());
}

#[test]
fn zero_samples_skip_sampled_checks() {
    let report = run_verify(cheap(0)).unwrap();
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.record("fields.ring_axioms").unwrap().status, Status::Skip);
    assert_eq!(report.record("involution.sigma_b3").unwrap().status, Status::Skip);
    for table in ["involution.coefficient_table", "involution.m_from_s", "roots.lemma_long"] {
        assert_eq!(report.record(table).unwrap().status, Status::Pass, "{table}");
    }
}

#[test]
fn roots_suite() {
    let report = run_verify(RunConfig { suites: vec![Suite::Roots], ..RunConfig::default() }).unwrap();
    assert!(report.passed());
    assert_eq!(report.record("roots.lemma_long").unwrap().samples_run, 24);
    assert!(report.records.iter().all(|r| r.name.starts_with("roots.")));
}

#[test]
fn algebraic_mode() {
    let cfg = RunConfig { field: FieldConfig::default_for(Mode::Algebraic), ..cheap(3) };
    let report = run_verify(cfg).unwrap();
    assert!(report.passed());
    assert_eq!(report.record("fields.k_split").unwrap().status, Status::Skip);
}

#[test]
fn malformed_configs_are_rejected() {
    let mut cfg = RunConfig::default();
    cfg.field.delta = "q".into();
    assert!(matches!(run_verify(cfg), Err(Error::Parse(_))));
    let mut cfg = RunConfig::default();
    cfg.field.alpha = "t".into();
    assert!(matches!(run_verify(cfg), Err(Error::Config(_))));
    assert!(Suite::parse("nope").is_err());
}

#[test]
fn config_round_trips_through_toml() {
    let cfg = RunConfig { seed: 7, samples: 3, suites: vec![Suite::Moufang], ..RunConfig::default() };
    let back: RunConfig = toml::from_str(&cfg.to_toml()).unwrap();
    assert_eq!(back, cfg);
    let partial: RunConfig = toml::from_str("samples = 4\nsuites = [\"roots\"]\n").unwrap();
    assert_eq!(partial.samples, 4);
    assert_eq!(partial.field, RunConfig::default().field);
}

#[test]
fn golden_report() {
    let text = std::fs::read_to_string(crate_dir().join("golden/report.json")).unwrap();
    let golden: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(golden.schema_version, SCHEMA_VERSION);
    assert_eq!(golden.config, RunConfig::default());
    assert!(golden.passed());
    assert_eq!(golden.summary.skip, 0);
    let mut names: Vec<&str> = registry().iter().map(|c| c.name).collect();
    names.sort();
    let golden_names: Vec<&str> = golden.records.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(golden_names, names);
    // The cheap part of the default run reproduces the published records.
    let cfg = RunConfig { suites: vec![Suite::Fields, Suite::Roots, Suite::Involution], ..RunConfig::default() };
    for r in run_verify(cfg).unwrap().records {
        let g = golden.record(&r.name).unwrap();
        assert_eq!((&r.status, r.samples_run, &r.detail), (&g.status, g.samples_run, &g.detail), "{}", r.name);
    }
}

#[test]
fn tau_fixtures() {
    let spec = RunConfig::default().field.build().unwrap();
    for name in ["generic", "degenerate"] {
        let input = UElem::from_json(&spec, &read_json(&fixture(&format!("{name}.json")))).unwrap();
        let run = run_tau(&spec, &input, RewriteOptions::default()).unwrap();
        assert_eq!(run.verdict(), Status::Pass, "{name}");
        assert_eq!(run.degenerate(), name == "degenerate");
        assert_eq!(run.to_json(&spec), read_json(&fixture(&format!("{name}.expected.json"))), "{name}");
    }
    let zero = UElem::from_json(&spec, &read_json(&fixture("identity.json"))).unwrap();
    assert!(matches!(run_tau(&spec, &zero, RewriteOptions::default()), Err(Error::IdentityInput)));
    assert!(matches!(UElem::from_json(&spec, &read_json(&fixture("not_in_u.json"))), Err(Error::NormViolation(_))));
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mixedf4"))
}

#[test]
fn binary() {
    let out = bin().args(["tau"]).arg(fixture("degenerate.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let printed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(printed, read_json(&fixture("degenerate.expected.json")));

    let out = bin().args(["tau"]).arg(fixture("identity.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("mixedf4-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("report.json");
    let out = bin().args(["verify", "--suite", "roots,involution", "--samples", "2", "--json"]).arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.config.samples, 2);
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS roots.lemma_long"));

    let cfg = dir.join("run.toml");
    std::fs::write(&cfg, "samples = 1\n[field]\nnames = [\"d\", \"a\", \"b\"]\nmode = \"algebraic\"\ndelta = \"d\"\nalpha = \"a\"\nbeta = \"b\"\n").unwrap();
    let out = bin().arg("--config").arg(&cfg).args(["verify", "--suite", "fields"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8(out.stdout).unwrap().contains("SKIP fields.k_split"));

    std::fs::write(&cfg, "samples = \"many\"\n").unwrap();
    let out = bin().arg("--config").arg(&cfg).arg("roots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["rewrite", "--trace"]).arg(fixture("degenerate.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 2);
    assert_eq!(lines[0]["rule"], "first_move");
    assert_eq!(lines.last().unwrap()["uprime"], read_json(&fixture("degenerate.expected.json"))["tau"]);

    for sub in ["roots", "coeffs", "b3check"] {
        let out = bin().args([sub, "--samples", "2"]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{sub}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
