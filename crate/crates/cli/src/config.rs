//! Run configuration. Everything a run depends on is in [`RunConfig`], so a
//! configuration and a seed determine the report up to timings.

use std::path::Path;

use mixedf4::fields::{FieldSpec, Mode, Sampler};
use mixedf4::rewrite::DEFAULT_STEP_BOUND;
use mixedf4::{Error, Result};
use serde::{Deserialize, Serialize};

/// The field tower: indeterminates, mode and textual values of δ, α, β.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub names: Vec<String>,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mixed_var: Option<String>,
    pub delta: String,
    pub alpha: String,
    pub beta: String,
}

impl FieldConfig {
    pub fn default_for(mode: Mode) -> FieldConfig {
        let strs = |v: &[&str]| v.iter().map(|s| s.to_string()).collect();
        match mode {
            Mode::Mixed => FieldConfig {
                names: strs(&["d", "a", "b", "t"]),
                mode,
                mixed_var: Some("t".into()),
                delta: "d".into(),
                alpha: "a".into(),
                beta: "b".into(),
            },
            Mode::Algebraic => FieldConfig {
                names: strs(&["d", "a", "b"]),
                mode,
                mixed_var: None,
                delta: "d".into(),
                alpha: "a".into(),
                beta: "b".into(),
            },
        }
    }

    pub fn build(&self) -> Result<FieldSpec> {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        FieldSpec::new(&names, self.mode, self.mixed_var.as_deref(), &self.delta, &self.alpha, &self.beta)
    }

    /// The same constants over k = ℓ.
    pub fn algebraic(&self) -> FieldConfig {
        FieldConfig { mode: Mode::Algebraic, mixed_var: None, ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fields,
    Roots,
    Chevalley,
    Rewrite,
    Involution,
    Moufang,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] =
        [Suite::Fields, Suite::Roots, Suite::Chevalley, Suite::Rewrite, Suite::Involution, Suite::Moufang];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fields => "fields",
            Suite::Roots => "roots",
            Suite::Chevalley => "chevalley",
            Suite::Rewrite => "rewrite",
            Suite::Involution => "involution",
            Suite::Moufang => "moufang",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub field: FieldConfig,
    /// Random instances per sampled check; 0 skips them.
    pub samples: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub step_bound: usize,
    /// Coefficients for the field, Chevalley, involution and group-law checks.
    pub sampler: Sampler,
    /// Inputs of the normal-form and τ-agreement checks.
    pub rewrite_sampler: Sampler,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldConfig::default_for(Mode::Mixed),
            samples: 100,
            seed: 0,
            suites: vec![Suite::All],
            step_bound: DEFAULT_STEP_BOUND,
            sampler: Sampler::default(),
            rewrite_sampler: Sampler::sparse_constants(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// The selected suites with `all` expanded, sorted and deduplicated.
    pub fn selected(&self) -> Vec<Suite> {
        let mut out: Vec<Suite> =
            if self.suites.contains(&Suite::All) { Suite::EACH.to_vec() } else { self.suites.clone() };
        out.sort();
        out.dedup();
        out
    }

    pub fn validate(&self) -> Result<()> {
        self.field.build()?;
        if self.step_bound == 0 {
            return Err(Error::Config("step_bound must be positive".into()));
        }
        for s in [&self.sampler, &self.rewrite_sampler] {
            if s.max_terms == 0 || !(0.0..1.0).contains(&s.zero_prob) {
                return Err(Error::Config("samplers need max_terms ≥ 1 and 0 ≤ zero_prob < 1".into()));
            }
        }
        Ok(())
    }
}
