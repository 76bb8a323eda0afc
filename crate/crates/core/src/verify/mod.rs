//! Property suites run by `grmeasure verify`.

mod category;
mod chains;
mod poset;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::quiver::Budget;
use crate::registry::Registry;

pub use category::{family_checks, CategorySuite};
pub use chains::{
    check_dyadic_embedding, check_lemma_comparison, check_lemma_drop_max, check_order_axioms,
    check_scan_matches_rule, check_subset_monotonicity, ChainsSuite,
};
pub use poset::{check_corrupted_maps, check_random_posets, random_cases, PosetSuite};

/// Result of checking one property over many instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub checked: usize,
    /// Instances not evaluated, e.g. because a hom space exceeded the budget.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> usize {
        self.checked - self.failures.len()
    }

    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Prefixes the name, e.g. with the family it was run on.
    pub fn scoped(mut self, scope: &str) -> Self {
        self.name = format!("{scope}: {}", self.name);
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_pass() { "ok" } else { "FAIL" };
        write!(f, "{status:4} {}: {}/{} passed", self.name, self.passed(), self.checked)?;
        if self.skipped > 0 {
            write!(f, ", {} skipped", self.skipped)?;
        }
        for failure in self.failures.iter().take(5) {
            write!(f, "\n       {failure}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n       ... {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn is_pass(&self) -> bool {
        self.checks.iter().all(CheckOutcome::is_pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.is_pass()).count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances per property; suites without randomness ignore it.
    pub cases: usize,
    pub budget: Budget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 100,
            budget: Budget::default(),
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport>;
}

pub fn suite_registry() -> Registry<dyn Suite> {
    let mut reg: Registry<dyn Suite> = Registry::new("suite");
    reg.register("chains", Arc::new(ChainsSuite))
        .register("poset", Arc::new(PosetSuite))
        .register("category", Arc::new(CategorySuite));
    reg
}
