//! The named verification checks. Each check gets its own random stream derived
//! from the seed and its name, so results do not depend on which other checks run.

mod chevalley;
mod fields;
mod involution;
mod moufang;
mod rewrite;
mod roots;

use std::sync::OnceLock;
use std::time::Instant;

use mixedf4::fields::FieldSpec;
use mixedf4::involution::CoeffTable;
use mixedf4::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{RunConfig, Suite};
use crate::report::{Record, Report, Status};

pub use involution::B3_CHECKS;
pub use rewrite::TauSample;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Exhaustive or fixed-table check; runs regardless of the sample count.
    Table,
    /// Runs on random instances; skipped when the sample count is 0.
    Sampled,
}

pub struct Check {
    pub name: &'static str,
    pub suite: Suite,
    pub kind: Kind,
    run: fn(&Ctx, &mut ChaCha8Rng) -> Tally,
}

pub fn registry() -> Vec<Check> {
    let mut v = Vec::new();
    v.extend(fields::checks());
    v.extend(roots::checks());
    v.extend(chevalley::checks());
    v.extend(involution::checks());
    v.extend(rewrite::checks());
    v.extend(moufang::checks());
    v
}

/// Shared state of a run.
pub struct Ctx {
    pub config: RunConfig,
    pub spec: FieldSpec,
    table: OnceLock<CoeffTable>,
    tau: OnceLock<Vec<TauSample>>,
}

impl Ctx {
    pub fn new(config: RunConfig) -> Result<Ctx> {
        config.validate()?;
        let spec = config.field.build()?;
        Ok(Ctx { config, spec, table: OnceLock::new(), tau: OnceLock::new() })
    }

    pub fn table(&self) -> &CoeffTable {
        self.table.get_or_init(|| CoeffTable::compute(&self.spec))
    }

    /// The normal-form samples shared by the rewriter and τ-agreement checks.
    pub fn tau_samples(&self) -> &[TauSample] {
        self.tau.get_or_init(|| rewrite::tau_pass(self))
    }
}

/// Accumulates the outcome of one check.
#[derive(Default)]
pub struct Tally {
    samples: usize,
    failures: usize,
    examples: Vec<String>,
    note: String,
    skip: Option<String>,
}

const EXAMPLES: usize = 3;

impl Tally {
    pub fn new() -> Tally {
        Tally::default()
    }

    pub fn skipped(reason: &str) -> Tally {
        Tally { skip: Some(reason.into()), ..Tally::default() }
    }

    pub fn sample(&mut self) {
        self.samples += 1;
    }

    pub fn add_samples(&mut self, n: usize) {
        self.samples += n;
    }

    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fail(what());
        }
    }

    pub fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.examples.len() < EXAMPLES {
            self.examples.push(what);
        }
    }

    /// Unwraps a result, counting an error as a failure.
    pub fn ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.fail(format!("{}: {e}", what()));
                None
            }
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.note = s.into();
    }

    fn finish(self, name: &str, elapsed_ms: u64) -> Record {
        let (status, detail) = if let Some(reason) = self.skip {
            (Status::Skip, reason)
        } else if self.failures == 0 {
            (Status::Pass, if self.note.is_empty() { "no failures".into() } else { self.note })
        } else {
            (Status::Fail, format!("{} failures; {}", self.failures, self.examples.join("; ")))
        };
        Record { name: name.into(), status, samples_run: self.samples, elapsed_ms, detail }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// The random stream of the check called `name`.
pub fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(name));
    rng
}

pub fn run_check(ctx: &Ctx, check: &Check) -> Record {
    let start = Instant::now();
    let tally = if check.kind == Kind::Sampled && ctx.config.samples == 0 {
        Tally::skipped("samples = 0")
    } else {
        (check.run)(ctx, &mut rng_for(ctx.config.seed, check.name))
    };
    tally.finish(check.name, start.elapsed().as_millis() as u64)
}

/// Runs the checks with the given names, in registry order.
pub fn run_named(ctx: &Ctx, names: &[&str]) -> Vec<Record> {
    registry().iter().filter(|c| names.contains(&c.name)).map(|c| run_check(ctx, c)).collect()
}

/// Runs every check of the selected suites.
pub fn run_verify(config: RunConfig) -> Result<Report> {
    let ctx = Ctx::new(config)?;
    let suites = ctx.config.selected();
    let records = registry().iter().filter(|c| suites.contains(&c.suite)).map(|c| run_check(&ctx, c)).collect();
    Ok(Report::new(ctx.config.clone(), records))
}
