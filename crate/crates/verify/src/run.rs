//! Parallel execution of registered checks into a report.

use crate::bounds::Bounds;
use crate::registry::{registry, CheckSpec, Ctx, Suite};
use crate::report::{CheckResult, Report, Status};
use crate::VerifyError;
use rayon::prelude::*;
use simpforge_models::{Formulas, Mutation};
use std::time::Instant;

/// What to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub suites: Vec<Suite>,
    pub bounds: Bounds,
    pub mutation: Option<Mutation>,
    /// Keep only checks whose id starts with this prefix.
    pub only: Option<String>,
    /// Within the hopf suite, keep only the pure-characteristic and generic-π checks.
    pub pure_char: bool,
}

impl RunOptions {
    pub fn new(suites: Vec<Suite>, bounds: Bounds) -> Self {
        RunOptions { suites, bounds, mutation: None, only: None, pure_char: false }
    }

    fn keeps(&self, spec: &CheckSpec) -> bool {
        let prefix_ok = self.only.as_ref().map_or(true, |p| spec.id.starts_with(p.as_str()));
        let hopf_ok = !self.pure_char
            || spec.suite != Suite::Hopf
            || spec.id.starts_with("hopf.purechar") || spec.id.starts_with("hopf.genericpi");
        prefix_ok && hopf_ok
    }

    /// The registered checks this run covers, in registry order.
    pub fn checks(&self) -> Vec<CheckSpec> {
        registry(&self.suites, &self.bounds).into_iter().filter(|s| self.keeps(s)).collect()
    }
}

/// `(id, anchor)` for every registered check of the suites.
pub fn list_checks(suites: &[Suite]) -> Vec<(String, &'static str)> {
    registry(suites, &Bounds::default()).into_iter().map(|s| (s.id, s.anchor)).collect()
}

fn execute(spec: &CheckSpec, bounds: &Bounds, ctx: &Ctx) -> CheckResult {
    let mut result = CheckResult {
        id: spec.id.clone(),
        suite: spec.suite,
        params: spec.params.clone(),
        status: Status::Skipped,
        millis: 0,
        counterexample: None,
    };
    if !spec.needs.within(bounds) {
        return result;
    }
    let start = Instant::now();
    let outcome = spec.execute(ctx);
    result.millis = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(()) => result.status = Status::Pass,
        Err(c) => {
            result.status = Status::Fail;
            result.counterexample = Some(c);
        }
    }
    result
}

/// Run every selected check within bounds; out-of-bounds checks are reported as skipped.
pub fn run_suite(opts: &RunOptions) -> Result<Report, VerifyError> {
    opts.bounds.validate()?;
    let started_at = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    let fm = opts.mutation.map(Formulas::mutated).unwrap_or_default();
    let ctx = Ctx::new(fm);
    let specs = opts.checks();
    let results: Vec<CheckResult> = specs.par_iter().map(|s| execute(s, &opts.bounds, &ctx)).collect();
    Ok(Report::new(opts.bounds, opts.mutation.map(|m| m.to_string()), started_at, results))
}
