//! Exhaustive checks of the chain order on subsets of `{1..n}`.

use std::cmp::Ordering;

use super::{CheckOutcome, Suite, SuiteConfig, SuiteReport};
use crate::chain::{lex_compare, NatChain};
use crate::error::Result;

/// The order read off directly from the set differences: `X <= Y` iff
/// `min(Y \ X) <= min(X \ Y)`, with the minimum of the empty set above
/// every number.
fn rule_le(x: &NatChain, y: &NatChain) -> bool {
    let first_missing = |a: &NatChain, b: &NatChain| {
        a.elements().iter().copied().find(|&e| !b.contains(e)).unwrap_or(u32::MAX)
    };
    first_missing(y, x) <= first_missing(x, y)
}

/// Chain maximum. `None` sorts below every `Some`, so the empty chain's
/// maximum lies below every number.
fn top(x: &NatChain) -> Option<u32> {
    x.max_element()
}

/// Totality, antisymmetry and transitivity: sorting all subsets and checking
/// that every pair compares like its positions.
pub fn check_order_axioms(n: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new(format!("order axioms on subsets of 1..{n}"));
    let mut all = NatChain::subsets_of(n);
    all.sort_by(lex_compare);
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            let got = lex_compare(a, b);
            out.record(got == i.cmp(&j), || format!("{a} vs {b}: {got:?}"));
        }
    }
    out
}

pub fn check_scan_matches_rule(n: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new(format!("scan equals set-difference rule on 1..{n}"));
    let all = NatChain::subsets_of(n);
    for a in &all {
        for b in &all {
            let scan = lex_compare(a, b) != Ordering::Greater;
            out.record(scan == rule_le(a, b), || format!("{a} vs {b}"));
        }
    }
    out
}

pub fn check_subset_monotonicity(n: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new(format!("subsets compare below on 1..{n}"));
    let all = NatChain::subsets_of(n);
    for a in &all {
        for b in all.iter().filter(|b| a.is_subset(b)) {
            out.record(a <= b, || format!("{a} is a subset of {b} but compares above"));
        }
    }
    out
}

/// Dropping the top element gives the largest chain below `X` whose top is
/// below the top of `X`.
pub fn check_lemma_drop_max(n: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new(format!("lemma part 1 on 1..{n}"));
    let all = NatChain::subsets_of(n);
    for x in all.iter().filter(|x| !x.is_empty()) {
        let best = all
            .iter()
            .filter(|xp| *xp < x && top(xp) < top(x))
            .max()
            .expect("the empty chain qualifies");
        let dropped = x.drop_max().expect("nonempty");
        out.record(*best == dropped, || format!("{x}: brute force {best}, drop_max {dropped}"));
    }
    out
}

/// `X* < Y` and `max X >= max Y` imply `X <= Y`.
pub fn check_lemma_comparison(n: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new(format!("lemma part 2 on 1..{n}"));
    let all = NatChain::subsets_of(n);
    for x in all.iter().filter(|x| !x.is_empty()) {
        let dropped = x.drop_max().expect("nonempty");
        for y in &all {
            if dropped < *y && top(x) >= top(y) {
                out.record(x <= y, || format!("{x} vs {y}"));
            }
        }
    }
    out
}

/// `X -> Σ 2^-x` is injective and strictly increasing, exactly.
pub fn check_dyadic_embedding(n: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new(format!("dyadic embedding on 1..{n}"));
    let mut all = NatChain::subsets_of(n);
    all.sort();
    let values: Vec<_> = all.iter().map(NatChain::dyadic_value).collect();
    for (i, pair) in values.windows(2).enumerate() {
        out.record(pair[0] < pair[1], || {
            format!("{} -> {} but {} -> {}", all[i], pair[0], all[i + 1], pair[1])
        });
    }
    // sorting by value must reproduce the chain order
    let mut by_value: Vec<usize> = (0..all.len()).collect();
    by_value.sort_by(|&a, &b| values[a].cmp(&values[b]));
    for (pos, &i) in by_value.iter().enumerate() {
        out.record(pos == i, || format!("{} out of place", all[i]));
    }
    out
}

pub struct ChainsSuite;

impl Suite for ChainsSuite {
    fn name(&self) -> &'static str {
        "chains"
    }

    fn run(&self, _: &SuiteConfig) -> Result<SuiteReport> {
        Ok(SuiteReport {
            suite: self.name().into(),
            checks: vec![
                check_order_axioms(12),
                check_scan_matches_rule(8),
                check_subset_monotonicity(10),
                check_lemma_drop_max(8),
                check_lemma_comparison(8),
                check_dyadic_embedding(12),
            ],
        })
    }
}
