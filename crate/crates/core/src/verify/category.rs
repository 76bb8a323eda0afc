//! Structural properties of the measure on built subobject posets.

use super::{CheckOutcome, Suite, SuiteConfig, SuiteReport};
use crate::category::{
    category_gr_measure, family_registry, truncation_stability, verify_gr6, verify_gr7,
    verify_gr_inclusion_quotient, verify_main_property, verify_predecessor_values,
    verify_socle_formula, verify_structural, FamilyConfig,
};
use crate::error::Result;
use crate::linalg::PrimeField;

/// Every structural check on one family instance, plus truncation stability
/// against the cap `truncate_to` when given.
pub fn family_checks(
    family: &str,
    config: &FamilyConfig,
    suite: &SuiteConfig,
    truncate_to: Option<usize>,
) -> Result<Vec<CheckOutcome>> {
    let fam = family_registry().get(family)?;
    let instance = fam.build(config)?;
    let scope = match config.n {
        Some(n) => format!("{family} n={n} F{} L={}", config.field.p(), instance.max_length),
        None => format!("{family} F{} L={}", config.field.p(), instance.max_length),
    };
    let sp = instance.subobject_poset(config.budget)?;
    let r = category_gr_measure(&sp);
    let mut checks = vec![
        verify_gr6(&sp, &r),
        verify_gr7(&sp, &r),
        verify_main_property(&sp, &r, suite.cases, suite.seed, config.budget)?,
        verify_gr_inclusion_quotient(&sp, &r, config.budget)?,
        verify_predecessor_values(&sp, &r),
        verify_socle_formula(&sp, &r),
        verify_structural(&sp, &r),
    ];
    if let Some(lower) = truncate_to {
        checks.push(truncation_stability(fam.as_ref(), config, lower)?);
    }
    Ok(checks.into_iter().map(|c| c.scoped(&scope)).collect())
}

/// Runs on `1 <- 2 -> 3` over F2 and F3, linear A4 over F2 and the Kronecker
/// quiver over F2 and F3 up to length 6.
pub struct CategorySuite;

impl Suite for CategorySuite {
    fn name(&self) -> &'static str {
        "category"
    }

    fn run(&self, suite: &SuiteConfig) -> Result<SuiteReport> {
        let field = |p| PrimeField::new(p).expect("small prime");
        let base = FamilyConfig {
            budget: suite.budget,
            ..FamilyConfig::default()
        };
        let runs = [
            ("a3paper", FamilyConfig { field: field(2), ..base.clone() }, Some(2)),
            ("a3paper", FamilyConfig { field: field(3), ..base.clone() }, Some(2)),
            ("linear-an", FamilyConfig { n: Some(4), ..base.clone() }, Some(3)),
            ("kronecker", FamilyConfig { max_length: Some(6), ..base.clone() }, Some(4)),
            ("kronecker", FamilyConfig { field: field(3), max_length: Some(6), ..base.clone() }, Some(4)),
        ];
        let mut checks = Vec::new();
        for (family, config, lower) in runs {
            checks.extend(family_checks(family, &config, suite, lower)?);
        }
        Ok(SuiteReport {
            suite: self.name().into(),
            checks,
        })
    }
}
