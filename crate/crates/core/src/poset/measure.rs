use std::sync::Arc;

use serde::Serialize;

use super::MeasuredPoset;
use crate::chain::NatChain;
use crate::error::{Error, Result};
use crate::registry::Registry;

/// Measure values per element, grouped into classes of equal value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GRResult {
    pub measure: Vec<NatChain>,
    /// Element indices per class, classes ascending, members ascending.
    pub classes: Vec<Vec<usize>>,
    /// The distinct measure values, strictly ascending.
    pub class_order: Vec<NatChain>,
}

impl GRResult {
    pub fn from_measure(measure: Vec<NatChain>) -> Self {
        let mut class_order = measure.clone();
        class_order.sort();
        class_order.dedup();
        let mut classes = vec![Vec::new(); class_order.len()];
        for (x, m) in measure.iter().enumerate() {
            let c = class_order.binary_search(m).expect("value is present");
            classes[c].push(x);
        }
        GRResult {
            measure,
            classes,
            class_order,
        }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_order
            .binary_search(&self.measure[x])
            .expect("value is present")
    }
}

pub trait MeasureStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, poset: &MeasuredPoset) -> Result<GRResult>;
}

/// Evaluates `λ*(x) = max_{x'<x} λ*(x') ∪ {λ(x)}` along a linear extension.
#[derive(Clone, Copy, Debug, Default)]
pub struct Recursive;

impl MeasureStrategy for Recursive {
    fn name(&self) -> &'static str {
        "recursive"
    }

    fn compute(&self, poset: &MeasuredPoset) -> Result<GRResult> {
        poset.ensure_valid()?;
        let mut measure: Vec<Option<NatChain>> = vec![None; poset.len()];
        for x in poset.linear_extension() {
            let below = poset
                .predecessors(x)
                .map(|y| measure[y].as_ref().expect("predecessor evaluated first"))
                .max()
                .cloned()
                .unwrap_or_default();
            measure[x] = Some(below.extend(poset.length(x))?);
        }
        Ok(GRResult::from_measure(
            measure.into_iter().map(Option::unwrap).collect(),
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_elements: usize,
    pub max_chains: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_elements: 20,
            max_chains: 1 << 20,
        }
    }
}

/// Brute force: the lexicographic maximum of `λ(X)` over every chain `X`
/// whose top element is `x`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ChainOracle {
    pub budget: OracleBudget,
}

impl MeasureStrategy for ChainOracle {
    fn name(&self) -> &'static str {
        "chains"
    }

    fn compute(&self, poset: &MeasuredPoset) -> Result<GRResult> {
        poset.ensure_valid()?;
        let over = || Error::OracleBudget {
            limit: self.budget.max_chains,
            max_elements: self.budget.max_elements,
        };
        if poset.len() > self.budget.max_elements {
            return Err(over());
        }
        let mut visited: u64 = 0;
        let mut measure = Vec::with_capacity(poset.len());
        for x in 0..poset.len() {
            let mut best: Option<NatChain> = None;
            // each stack entry is a chain listed from the top down
            let mut stack: Vec<Vec<usize>> = vec![vec![x]];
            while let Some(chain) = stack.pop() {
                visited += 1;
                if visited > self.budget.max_chains {
                    return Err(over());
                }
                let lengths: Vec<u32> = chain.iter().rev().map(|&e| poset.length(e)).collect();
                let value = NatChain::from_elements(lengths)?;
                if best.as_ref().is_none_or(|b| value > *b) {
                    best = Some(value);
                }
                let bottom = *chain.last().unwrap();
                for y in poset.predecessors(bottom) {
                    let mut longer = chain.clone();
                    longer.push(y);
                    stack.push(longer);
                }
            }
            measure.push(best.expect("the singleton chain is always present"));
        }
        Ok(GRResult::from_measure(measure))
    }
}

pub fn gr_measure(poset: &MeasuredPoset) -> Result<GRResult> {
    Recursive.compute(poset)
}

pub fn gr_measure_oracle(poset: &MeasuredPoset, budget: OracleBudget) -> Result<GRResult> {
    ChainOracle { budget }.compute(poset)
}

pub fn measure_registry() -> Registry<dyn MeasureStrategy> {
    let mut reg: Registry<dyn MeasureStrategy> = Registry::new("measure strategy");
    reg.register("recursive", Arc::new(Recursive))
        .register("chains", Arc::new(ChainOracle::default()));
    reg
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn c(v: &[u32]) -> NatChain {
        NatChain::from_elements(v.to_vec()).unwrap()
    }

    fn both(p: &MeasuredPoset) -> GRResult {
        let fast = gr_measure(p).unwrap();
        let slow = gr_measure_oracle(p, OracleBudget::default()).unwrap();
        assert_eq!(fast, slow);
        fast
    }

    #[test]
    fn antichain_of_simples() {
        let p = MeasuredPoset::new(vec!["a".into(), "b".into()], vec![1, 1], vec![]).unwrap();
        let r = both(&p);
        assert_eq!(r.measure, vec![c(&[1]), c(&[1])]);
        assert_eq!(r.classes, vec![vec![0, 1]]);
    }

    #[test]
    fn total_order_gives_initial_segment() {
        let r = both(&total_order(5));
        assert_eq!(r.measure[4], c(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn paper_poset_measures() {
        let p = a3_paper();
        let r = both(&p);
        let m = |n: &str| r.measure[p.index_of(n).unwrap()].clone();
        assert_eq!(m("010"), c(&[1]));
        assert_eq!(m("100"), c(&[1]));
        assert_eq!(m("001"), c(&[1]));
        assert_eq!(m("110"), c(&[1, 2]));
        assert_eq!(m("011"), c(&[1, 2]));
        assert_eq!(m("111"), c(&[1, 3]));
        assert_eq!(r.class_order, vec![c(&[1]), c(&[1, 3]), c(&[1, 2])]);
    }

    #[test]
    fn invalid_poset_is_rejected() {
        let p = MeasuredPoset::new(vec!["a".into(), "b".into()], vec![2, 2], vec![(0, 1)]).unwrap();
        assert!(matches!(gr_measure(&p), Err(Error::InvalidPoset(_))));
        assert!(matches!(
            gr_measure_oracle(&p, OracleBudget::default()),
            Err(Error::InvalidPoset(_))
        ));
    }

    #[test]
    fn oracle_budget_is_a_hard_error() {
        let p = total_order(12);
        let tight = OracleBudget {
            max_elements: 20,
            max_chains: 100,
        };
        assert!(matches!(
            gr_measure_oracle(&p, tight),
            Err(Error::OracleBudget { .. })
        ));
        let few = OracleBudget {
            max_elements: 5,
            max_chains: 1 << 20,
        };
        assert!(gr_measure_oracle(&p, few).unwrap_err().is_budget());
    }

    #[test]
    fn registry_has_both_routes() {
        let reg = measure_registry();
        assert_eq!(reg.names(), vec!["chains", "recursive"]);
        let p = a3_paper();
        for (name, s) in reg.iter() {
            assert_eq!(s.name(), name);
            assert_eq!(s.compute(&p).unwrap(), gr_measure(&p).unwrap());
        }
    }
}
