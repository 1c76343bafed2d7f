//! Verification reports: a JSON document plus a plain-text table.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::dext::ExtAlgebra;
use crate::towers::DerivedField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Value,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceSummary {
    pub p: u32,
    pub delta_of_x: String,
    pub d: String,
    pub g: String,
    pub f: String,
    pub dimension: usize,
    pub seed: u64,
    pub degree_bound: usize,
}

impl InstanceSummary {
    pub fn of(alg: &ExtAlgebra<DerivedField>, seed: u64, degree_bound: usize) -> Self {
        InstanceSummary {
            p: alg.characteristic(),
            delta_of_x: alg.base().delta_of_x().to_string(),
            d: alg.d().to_string(),
            g: alg.g().to_string(),
            f: alg.f().to_string(),
            dimension: alg.dim(),
            seed,
            degree_bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub instance: InstanceSummary,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(instance: InstanceSummary) -> Self {
        Report { instance, checks: Vec::new() }
    }

    /// Runs `body`, timing it, and files the result under `name`.
    pub fn run(&mut self, name: &str, body: impl FnOnce() -> (Verdict, Value)) {
        let start = Instant::now();
        let (verdict, witness) = body();
        let ms = start.elapsed().as_millis() as u64;
        self.push(Check { name: name.to_string(), verdict, witness, ms });
    }

    /// Adds a check, replacing any earlier one of the same name. Checks are
    /// kept sorted by name so the output does not depend on run order.
    pub fn push(&mut self, check: Check) {
        match self.checks.binary_search_by(|c| c.name.as_str().cmp(&check.name)) {
            Ok(i) => self.checks[i] = check,
            Err(i) => self.checks.insert(i, check),
        }
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    /// Zeroes every timing, which makes reports byte-identical across runs.
    pub fn clear_timings(&mut self) {
        for c in &mut self.checks {
            c.ms = 0;
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn table(&self) -> String {
        let i = &self.instance;
        let mut out = format!(
            "p = {}, delta(x) = {}, d = {}\ng = {}\nf = {}\ndimension over F = {}, seed = {}, degree bound = {}\n\n",
            i.p, i.delta_of_x, i.d, i.g, i.f, i.dimension, i.seed, i.degree_bound
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        out.push_str(&format!("{:<width$}  {:<7}  {:>6}  witness\n", "check", "verdict", "ms"));
        for c in &self.checks {
            out.push_str(&format!("{:<width$}  {:<7}  {:>6}  {}\n", c.name, c.verdict.to_string(), c.ms, c.witness));
        }
        let count = |v| self.checks.iter().filter(|c| c.verdict == v).count();
        out.push_str(&format!(
            "\n{} passed, {} failed, {} unknown\n",
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Unknown)
        ));
        out
    }
}
