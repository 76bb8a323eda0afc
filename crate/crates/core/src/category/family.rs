//! Named sources of indecomposable representations, selected at runtime.

use std::collections::HashMap;
use std::sync::Arc;

use super::{build_subobject_poset, SubobjectPoset};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use crate::quiver::{
    enumerate_indecomposables, kronecker_builtins, Budget, Quiver, QuiverFile, QuiverRep,
};
use crate::registry::Registry;

#[derive(Clone, Debug, Default)]
pub struct FamilyConfig {
    pub field: PrimeField,
    /// Largest total dimension; the family's default when unset.
    pub max_length: Option<usize>,
    /// Number of vertices, for families that take one.
    pub n: Option<usize>,
    pub budget: Budget,
    /// Parsed quiver file for the `custom` family.
    pub file: Option<Arc<QuiverFile>>,
}

/// Indecomposables of one quiver up to a length cap, with display names.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub quiver: Arc<Quiver>,
    pub field: PrimeField,
    pub max_length: usize,
    pub names: Vec<String>,
    pub reps: Vec<QuiverRep>,
    /// Further named representations supplied with the input, not
    /// necessarily indecomposable.
    pub extra: Vec<(String, QuiverRep)>,
}

impl FamilyInstance {
    pub fn subobject_poset(&self, budget: Budget) -> Result<SubobjectPoset> {
        build_subobject_poset(self.reps.clone(), self.names.clone(), budget)
    }
}

pub trait RepFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn default_max_length(&self, config: &FamilyConfig) -> usize;
    fn build(&self, config: &FamilyConfig) -> Result<FamilyInstance>;
}

fn max_length(family: &dyn RepFamily, config: &FamilyConfig) -> Result<usize> {
    match config.max_length.unwrap_or_else(|| family.default_max_length(config)) {
        0 => Err(Error::Config("max length must be at least 1".into())),
        l => Ok(l),
    }
}

/// Dimension-vector labels, with `_2`, `_3`, … on repeats.
fn dims_names(reps: &[QuiverRep]) -> Vec<String> {
    let mut seen: HashMap<String, usize> = HashMap::new();
    reps.iter()
        .map(|r| {
            let label = r.dims_label();
            let count = seen.entry(label.clone()).or_insert(0);
            *count += 1;
            if *count == 1 {
                label
            } else {
                format!("{label}_{count}")
            }
        })
        .collect()
}

fn enumerated(
    quiver: Arc<Quiver>,
    config: &FamilyConfig,
    max_length: usize,
) -> Result<FamilyInstance> {
    let reps = enumerate_indecomposables(&quiver, config.field, max_length, config.budget)
        .map_err(|e| e.during("enumerating indecomposables"))?;
    Ok(FamilyInstance {
        quiver,
        field: config.field,
        max_length,
        names: dims_names(&reps),
        reps,
        extra: Vec::new(),
    })
}

/// The quiver `1 <- 2 -> 3`, enumerated.
pub struct AThreePaper;

impl RepFamily for AThreePaper {
    fn name(&self) -> &'static str {
        "a3paper"
    }

    fn default_max_length(&self, _: &FamilyConfig) -> usize {
        3
    }

    fn build(&self, config: &FamilyConfig) -> Result<FamilyInstance> {
        enumerated(Quiver::a3_paper(), config, max_length(self, config)?)
    }
}

/// Linearly oriented `A_n`, enumerated. Needs `n`.
pub struct LinearA;

impl RepFamily for LinearA {
    fn name(&self) -> &'static str {
        "linear-an"
    }

    fn default_max_length(&self, config: &FamilyConfig) -> usize {
        config.n.unwrap_or(1)
    }

    fn build(&self, config: &FamilyConfig) -> Result<FamilyInstance> {
        let n = match config.n {
            Some(n) if n >= 1 => n,
            Some(_) => return Err(Error::Config("linear-an needs n >= 1".into())),
            None => return Err(Error::Config("linear-an needs n".into())),
        };
        enumerated(Quiver::linear_a(n), config, max_length(self, config)?)
    }
}

/// Normal forms `P_n`, `R_n(α:β)`, `Q_n` of the Kronecker quiver. Regulars
/// are only those attached to rational points of the projective line.
pub struct Kronecker;

impl RepFamily for Kronecker {
    fn name(&self) -> &'static str {
        "kronecker"
    }

    fn default_max_length(&self, _: &FamilyConfig) -> usize {
        6
    }

    fn build(&self, config: &FamilyConfig) -> Result<FamilyInstance> {
        let max_length = max_length(self, config)?;
        let (labels, reps): (Vec<_>, Vec<_>) =
            kronecker_builtins(config.field, max_length).into_iter().unzip();
        Ok(FamilyInstance {
            quiver: Quiver::kronecker(),
            field: config.field,
            max_length,
            names: labels.iter().map(ToString::to_string).collect(),
            reps,
            extra: Vec::new(),
        })
    }
}

/// Indecomposables of the quiver in a parsed file, enumerated. The file's own
/// representations are carried along as extras.
pub struct QuiverFileFamily;

impl RepFamily for QuiverFileFamily {
    fn name(&self) -> &'static str {
        "custom"
    }

    fn default_max_length(&self, _: &FamilyConfig) -> usize {
        3
    }

    fn build(&self, config: &FamilyConfig) -> Result<FamilyInstance> {
        let file = config
            .file
            .as_ref()
            .ok_or_else(|| Error::Config("custom needs a quiver file".into()))?;
        let mut instance = enumerated(file.quiver.clone(), config, max_length(self, config)?)?;
        instance.extra = file.reps.clone();
        Ok(instance)
    }
}

pub fn family_registry() -> Registry<dyn RepFamily> {
    let mut reg: Registry<dyn RepFamily> = Registry::new("family");
    reg.register("a3paper", Arc::new(AThreePaper))
        .register("linear-an", Arc::new(LinearA))
        .register("kronecker", Arc::new(Kronecker))
        .register("custom", Arc::new(QuiverFileFamily));
    reg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver_file;

    #[test]
    fn registry_names() {
        let reg = family_registry();
        assert_eq!(reg.names(), ["a3paper", "custom", "kronecker", "linear-an"]);
        for (name, fam) in reg.iter() {
            assert_eq!(fam.name(), name);
        }
        assert!(matches!(reg.get("d4"), Err(Error::UnknownStrategy { .. })));
    }

    #[test]
    fn linear_needs_n() {
        let cfg = FamilyConfig::default();
        assert!(matches!(LinearA.build(&cfg), Err(Error::Config(_))));
        let cfg = FamilyConfig {
            n: Some(3),
            ..FamilyConfig::default()
        };
        let inst = LinearA.build(&cfg).unwrap();
        assert_eq!(inst.max_length, 3);
        assert_eq!(inst.reps.len(), 6);
    }

    #[test]
    fn zero_cap_is_rejected() {
        let cfg = FamilyConfig {
            max_length: Some(0),
            ..FamilyConfig::default()
        };
        assert!(matches!(Kronecker.build(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn kronecker_names() {
        let inst = Kronecker.build(&FamilyConfig::default()).unwrap();
        assert_eq!(inst.names.len(), 15);
        assert_eq!(&inst.names[..2], ["P1", "Q1"]);
        assert!(inst.names.contains(&"R3(0:1)".to_string()));
    }

    #[test]
    fn repeated_dimension_vectors_get_suffixes() {
        let cfg = FamilyConfig {
            max_length: Some(2),
            ..FamilyConfig::default()
        };
        let file = parse_quiver_file("v 1\nv 2\na a 1 2\na b 1 2\n", cfg.field).unwrap();
        let cfg = FamilyConfig {
            file: Some(Arc::new(file)),
            ..cfg
        };
        let inst = QuiverFileFamily.build(&cfg).unwrap();
        assert_eq!(inst.names, ["01", "10", "11", "11_2", "11_3"]);
    }

    #[test]
    fn custom_needs_file() {
        assert!(matches!(
            QuiverFileFamily.build(&FamilyConfig::default()),
            Err(Error::Config(_))
        ));
    }
}
