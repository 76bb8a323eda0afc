use std::collections::BTreeSet;

use super::{GRResult, MeasuredPoset};
use crate::chain::NatChain;

/// A chain `x₁ < x₂ < … < x` where `x₁` is minimal and each step attains the
/// maximal measure among the strict predecessors of the next one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GRFiltration {
    pub steps: Vec<usize>,
}

impl GRFiltration {
    /// Number of steps, including the top element.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn names<'a>(&self, poset: &'a MeasuredPoset) -> Vec<&'a str> {
        self.steps.iter().map(|&x| poset.name(x)).collect()
    }

    /// Checks minimality of the first step, strict comparability of
    /// consecutive steps, and that each step attains the predecessor maximum.
    pub fn is_valid(&self, poset: &MeasuredPoset, result: &GRResult) -> bool {
        let Some(&first) = self.steps.first() else {
            return false;
        };
        poset.is_minimal(first)
            && self.steps.windows(2).all(|w| {
                poset.lt(w[0], w[1])
                    && result.measure[w[0]] == max_predecessor_measure(poset, result, w[1])
            })
    }
}

/// `max_{x'<x} μ(x')`, the empty chain when `x` is minimal.
pub fn max_predecessor_measure(poset: &MeasuredPoset, result: &GRResult, x: usize) -> NatChain {
    poset
        .predecessors(x)
        .map(|y| &result.measure[y])
        .max()
        .cloned()
        .unwrap_or_default()
}

/// Walks down from `x`, picking at each step the predecessor with maximal
/// measure. Ties go to the lexicographically smallest element name.
pub fn gr_filtration(poset: &MeasuredPoset, result: &GRResult, x: usize) -> GRFiltration {
    let mut steps = vec![x];
    let mut current = x;
    loop {
        let best = max_predecessor_measure(poset, result, current);
        let next = poset
            .predecessors(current)
            .filter(|&y| result.measure[y] == best)
            .min_by(|&a, &b| poset.name(a).cmp(poset.name(b)));
        match next {
            Some(y) => {
                steps.push(y);
                current = y;
            }
            None => break,
        }
    }
    steps.reverse();
    GRFiltration { steps }
}

/// The smallest realized measure value strictly above `μ(x)`; empty when
/// `μ(x)` is maximal.
pub fn immediate_successors(result: &GRResult, x: usize) -> BTreeSet<NatChain> {
    let own = &result.measure[x];
    result
        .class_order
        .iter()
        .find(|v| *v > own)
        .cloned()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{gr_measure, gr_measure_oracle, OracleBudget};
    use super::*;

    fn c(v: &[u32]) -> NatChain {
        NatChain::from_elements(v.to_vec()).unwrap()
    }

    #[test]
    fn total_order_filtration_is_the_whole_chain() {
        let p = total_order(4);
        let r = gr_measure(&p).unwrap();
        let f = gr_filtration(&p, &r, 3);
        assert_eq!(f.names(&p), vec!["x1", "x2", "x3", "x4"]);
        assert!(f.is_valid(&p, &r));
    }

    #[test]
    fn minimal_element_filtration() {
        let p = a3_paper();
        let r = gr_measure(&p).unwrap();
        let x = p.index_of("010").unwrap();
        assert_eq!(gr_filtration(&p, &r, x).steps, vec![x]);
    }

    #[test]
    fn tie_break_by_name() {
        let p = a3_paper();
        // predecessors of 111 both have measure {1}; use the oracle's values
        let r = gr_measure_oracle(&p, OracleBudget::default()).unwrap();
        let f = gr_filtration(&p, &r, p.index_of("111").unwrap());
        assert_eq!(f.names(&p), vec!["001", "111"]);
        assert!(f.is_valid(&p, &r));
    }

    #[test]
    fn successors() {
        let p = a3_paper();
        let r = gr_measure(&p).unwrap();
        let succ = immediate_successors(&r, p.index_of("010").unwrap());
        assert_eq!(succ.into_iter().collect::<Vec<_>>(), vec![c(&[1, 3])]);
        assert!(immediate_successors(&r, p.index_of("110").unwrap()).is_empty());

        let t = total_order(3);
        let rt = gr_measure(&t).unwrap();
        let succ = immediate_successors(&rt, 0);
        assert_eq!(succ.into_iter().collect::<Vec<_>>(), vec![c(&[1, 2])]);
    }

    #[test]
    fn invalid_filtrations_are_detected() {
        let p = a3_paper();
        let r = gr_measure(&p).unwrap();
        let (a, b) = (p.index_of("010").unwrap(), p.index_of("111").unwrap());
        assert!(!GRFiltration { steps: vec![a, b] }.is_valid(&p, &r));
        assert!(!GRFiltration { steps: vec![] }.is_valid(&p, &r));
        assert!(!GRFiltration { steps: vec![b] }.is_valid(&p, &r));
    }
}
