//! Checkers for the measure axioms and for the refinement properties a
//! Gabriel-Roiter measure satisfies. All checks are brute force over pairs or
//! triples of elements; an empty report is a pass.

use std::collections::BTreeSet;
use std::fmt;

use super::filtration::max_predecessor_measure;
use super::{GRResult, MeasuredPoset};
use crate::chain::NatChain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// transitivity
    M1,
    /// totality
    M2,
    /// order compatibility
    M3,
    P1,
    P2,
    P3,
    C1,
    C2,
    C4,
    C5,
    /// `μ(x) = μ(y)` iff predecessor maxima and lengths agree
    Corollary,
    /// `max μ(x) = λ(x)`
    TopIsLength,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::M1 => "M1",
            Axiom::M2 => "M2",
            Axiom::M3 => "M3",
            Axiom::P1 => "P1",
            Axiom::P2 => "P2",
            Axiom::P3 => "P3",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C4 => "C4",
            Axiom::C5 => "C5",
            Axiom::Corollary => "equality-criterion",
            Axiom::TopIsLength => "top-is-length",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub elements: Vec<String>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) fails at {}", self.axiom, self.elements.join(", "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Number of instances examined.
    pub checked: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fails(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn failed_axioms(&self) -> BTreeSet<Axiom> {
        self.violations.iter().map(|v| v.axiom).collect()
    }

    fn check(&mut self, axiom: Axiom, ok: bool, poset: &MeasuredPoset, at: &[usize]) {
        self.checked += 1;
        if !ok {
            self.violations.push(AxiomViolation {
                axiom,
                elements: at.iter().map(|&x| poset.name(x).to_string()).collect(),
            });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

/// (M1)–(M3) for the relation `m(x) <= m(y)`.
pub fn check_measure_axioms(poset: &MeasuredPoset, m: &[NatChain]) -> AxiomReport {
    let n = poset.len();
    let le = |x: usize, y: usize| m[x] <= m[y];
    let mut report = AxiomReport::default();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if le(x, y) && le(y, z) {
                    report.check(Axiom::M1, le(x, z), poset, &[x, y, z]);
                }
            }
            report.check(Axiom::M2, le(x, y) || le(y, x), poset, &[x, y]);
            if poset.le(x, y) {
                report.check(Axiom::M3, le(x, y), poset, &[x, y]);
            }
        }
    }
    report
}

/// (P1)–(P3): `m` is order preserving, refines the length, and is forced
/// upward only when some predecessor already reaches `m(y)`.
pub fn check_refinement_axioms(poset: &MeasuredPoset, m: &[NatChain]) -> AxiomReport {
    let n = poset.len();
    let mut report = AxiomReport::default();
    for x in 0..n {
        for y in 0..n {
            if poset.le(x, y) {
                report.check(Axiom::P1, m[x] <= m[y], poset, &[x, y]);
            }
            if m[x] == m[y] {
                report.check(Axiom::P2, poset.length(x) == poset.length(y), poset, &[x, y]);
            }
            let below_y = poset.predecessors(x).all(|xp| m[xp] < m[y]);
            if below_y && poset.length(x) >= poset.length(y) {
                report.check(Axiom::P3, m[x] <= m[y], poset, &[x, y]);
            }
        }
    }
    report
}

/// (C1), (C2), (C4), (C5) and `max μ(x) = λ(x)` for a computed result.
pub fn check_structural_properties(poset: &MeasuredPoset, result: &GRResult) -> AxiomReport {
    let n = poset.len();
    let m = &result.measure;
    let mut report = AxiomReport::default();
    for x in 0..n {
        report.check(
            Axiom::TopIsLength,
            m[x].max_element() == Some(poset.length(x)),
            poset,
            &[x],
        );
        for y in 0..n {
            if poset.le(x, y) {
                report.check(Axiom::C1, m[x] <= m[y], poset, &[x, y]);
            }
            if m[x] == m[y] {
                report.check(Axiom::C2, poset.length(x) == poset.length(y), poset, &[x, y]);
            }
            report.check(Axiom::C4, m[x] <= m[y] || m[y] <= m[x], poset, &[x, y]);
        }
    }
    let top = poset.lengths().iter().copied().max().unwrap_or(0);
    for bound in 1..=top {
        let count = result
            .class_order
            .iter()
            .filter(|v| v.max_element().is_some_and(|t| t <= bound))
            .count();
        let ok = bound >= 64 || (count as u64) <= (1u64 << bound);
        let witness: Vec<usize> = (0..n).filter(|&x| poset.length(x) <= bound).take(1).collect();
        report.check(Axiom::C5, ok, poset, &witness);
    }
    report
}

/// Pairwise check of: `μ(x) = μ(y)` iff `max_{x'<x} μ(x') = max_{y'<y} μ(y')`
/// and `λ(x) = λ(y)`.
pub fn check_corollary(poset: &MeasuredPoset, result: &GRResult) -> AxiomReport {
    let n = poset.len();
    let below: Vec<NatChain> = (0..n)
        .map(|x| max_predecessor_measure(poset, result, x))
        .collect();
    let mut report = AxiomReport::default();
    for x in 0..n {
        for y in 0..n {
            let lhs = result.measure[x] == result.measure[y];
            let rhs = below[x] == below[y] && poset.length(x) == poset.length(y);
            report.check(Axiom::Corollary, lhs == rhs, poset, &[x, y]);
        }
    }
    report
}
