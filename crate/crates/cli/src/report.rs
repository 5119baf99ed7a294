//! The machine-readable report. The schema is in `schema/report.schema.json`;
//! bump [`SCHEMA_VERSION`] whenever it changes.

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub status: Status,
    pub samples_run: usize,
    pub elapsed_ms: u64,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: RunConfig,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl Report {
    /// Sorts the records by name and fills in the summary.
    pub fn new(config: RunConfig, mut records: Vec<Record>) -> Report {
        records.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report { schema_version: SCHEMA_VERSION, config, summary, records }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn record(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    /// The report with every timing zeroed, for byte comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.elapsed_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn text_lines(&self) -> Vec<String> {
        self.records
            .iter()
            .map(|r| {
                format!(
                    "{} {} (samples {}, {} ms) {}",
                    r.status.label(),
                    r.name,
                    r.samples_run,
                    r.elapsed_ms,
                    r.detail
                )
            })
            .collect()
    }
}
