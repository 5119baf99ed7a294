//! Acceptance run on the default configuration: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mixedf4::rewrite::Stratum;
use mixedf4_cli::checks::{run_named, Ctx};
use mixedf4_cli::{Record, RunConfig, Status};

struct Criterion {
    title: &'static str,
    checks: &'static [&'static str],
    limit: Option<Duration>,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        title: "Lie algebra: antisymmetry and Jacobi on all 52³ basis triples",
        checks: &["chevalley.lie_algebra"],
        limit: Some(Duration::from_secs(60)),
    },
    Criterion {
        title: "commutator relations: 48×46 ordered pairs × 3 samples",
        checks: &["chevalley.commutator_relations"],
        limit: Some(Duration::from_secs(600)),
    },
    Criterion {
        title: "coefficient table: listed values and c̄_r·c_σ(r) = 1",
        checks: &["involution.coefficient_table"],
        limit: None,
    },
    Criterion {
        title: "B3 model: R preserved, S̄S⁻¹ = M, σ_B3 = σ on words",
        checks: &["involution.b3_preserves_r", "involution.m_from_s", "involution.sigma_b3"],
        limit: None,
    },
    Criterion {
        title: "rewriter soundness and τ² = id on all strata",
        checks: &["rewrite.normal_form", "rewrite.tau_squared"],
        limit: None,
    },
    Criterion {
        title: "three-way τ agreement: closed formula, rewriter, matrix oracle",
        checks: &["moufang.tau_three_way"],
        limit: None,
    },
    Criterion {
        title: "group law of U and agreement with U¹ words",
        checks: &["moufang.group_axioms", "moufang.add_matches_words"],
        limit: None,
    },
    Criterion {
        title: "algebraic case: φ is a homomorphism and φ∘τ = τ̃∘φ",
        checks: &["moufang.algebraic_reduction"],
        limit: None,
    },
    Criterion { title: "long roots: short-fundamental coefficients even", checks: &["roots.lemma_long"], limit: None },
    Criterion { title: "anisotropy spot check on O_l and O_mixed", checks: &["moufang.anisotropy"], limit: None },
];

fn verdict(records: &[Record], elapsed: Duration, c: &Criterion, extra: Option<String>) -> (bool, String) {
    let mut ok = records.len() == c.checks.len() && records.iter().all(|r| r.status == Status::Pass);
    let mut notes: Vec<String> =
        records.iter().map(|r| format!("{} {} ({} samples): {}", r.status.label(), r.name, r.samples_run, r.detail)).collect();
    if let Some(limit) = c.limit {
        if elapsed > limit {
            ok = false;
            notes.push(format!("took {:.1} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()));
        }
    }
    if let Some(e) = extra {
        ok = false;
        notes.push(e);
    }
    (ok, notes.join(" | "))
}

fn main() -> ExitCode {
    let config = RunConfig::default();
    let ctx = Ctx::new(config).expect("default configuration is valid");
    let start = Instant::now();
    let mut all = true;
    for (i, c) in CRITERIA.iter().enumerate() {
        let t = Instant::now();
        let records = run_named(&ctx, c.checks);
        let elapsed = t.elapsed();
        let extra = match i + 1 {
            5 | 6 => {
                let samples = ctx.tau_samples();
                let strata = Stratum::ALL.iter().filter(|s| samples.iter().any(|x| x.stratum == **s)).count();
                (samples.len() < 100 || strata < Stratum::ALL.len())
                    .then(|| format!("{} samples over {strata} strata", samples.len()))
            }
            _ => None,
        };
        let (ok, detail) = verdict(&records, elapsed, c, extra);
        all &= ok;
        println!(
            "criterion {:>2}: {} {} [{:.1} s] {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            detail
        );
    }
    println!("total {:.1} s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
