//! τ of a single element by all three methods.

use mixedf4::fields::FieldSpec;
use mixedf4::moufang::UElem;
use mixedf4::rewrite::{conjugate_by_n, decompose, tau_normal_form, RewriteOptions};
use mixedf4::{Error, Result};
use serde_json::{json, Value};

use crate::report::Status;

pub struct TauRun {
    pub input: UElem,
    /// The closed formula.
    pub tau: UElem,
    pub rewriter: std::result::Result<UElem, String>,
    pub oracle: std::result::Result<UElem, String>,
    pub steps: Option<usize>,
}

impl TauRun {
    pub fn verdict(&self) -> Status {
        match (&self.rewriter, &self.oracle) {
            (Ok(r), Ok(o)) if *r == self.tau && *o == self.tau => Status::Pass,
            _ => Status::Fail,
        }
    }

    /// t₁ = 0, where the rewriter first conjugates by a Levi element.
    pub fn degenerate(&self) -> bool {
        self.input.b.0[0].is_zero()
    }

    pub fn to_json(&self, spec: &FieldSpec) -> Value {
        let side = |r: &std::result::Result<UElem, String>| match r {
            Ok(p) => json!({ "agrees": *p == self.tau, "value": p.to_json(spec) }),
            Err(e) => json!({ "agrees": false, "error": e }),
        };
        json!({
            "input": self.input.to_json(spec),
            "tau": self.tau.to_json(spec),
            "degenerate": self.degenerate(),
            "agreement": {
                "status": self.verdict(),
                "rewriter": side(&self.rewriter),
                "oracle": side(&self.oracle),
                "rewrite_steps": self.steps,
            },
        })
    }
}

/// τ(p) by the closed formula, checked against the rewriter and the matrix oracle.
pub fn run_tau(spec: &FieldSpec, input: &UElem, opts: RewriteOptions) -> Result<TauRun> {
    input.validate(spec)?;
    if input.is_zero() {
        return Err(Error::IdentityInput);
    }
    let tau = input.tau(spec)?;
    let u = input.to_u1();
    let nf = tau_normal_form(spec, &u, opts);
    let steps = nf.as_ref().ok().map(|n| n.steps);
    let rewriter = nf.map(|n| UElem::from_u1(&n.uprime)).map_err(|e| e.to_string());
    let oracle = conjugate_by_n(spec, &u)
        .and_then(|m| decompose(spec, &m))
        .map(|d| UElem::from_u1(&d.uprime))
        .map_err(|e| e.to_string());
    Ok(TauRun { input: input.clone(), tau, rewriter, oracle, steps })
}
