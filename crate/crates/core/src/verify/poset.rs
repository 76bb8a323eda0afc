//! Randomized checks of the poset measure against its oracle and axioms.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckOutcome, Suite, SuiteConfig, SuiteReport};
use crate::chain::NatChain;
use crate::error::Result;
use crate::poset::{
    check_corollary, check_measure_axioms, check_refinement_axioms, check_structural_properties,
    gr_filtration, gr_measure, gr_measure_oracle, immediate_successors, random_poset, Axiom,
    AxiomReport, MeasuredPoset, OracleBudget,
};

const MAX_SIZE: usize = 12;

const A3_POSET: &str = "\
e 010 1
e 100 1
e 001 1
e 110 2
e 011 2
e 111 3
r 100 110
r 100 111
r 001 011
r 001 111
";

/// `cases` posets of 1 to 12 elements with lengths up to 12, all derived
/// from `seed`.
pub fn random_cases(seed: u64, cases: usize) -> Vec<MeasuredPoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| {
            let size = rng.gen_range(1..=MAX_SIZE);
            let max_length = rng.gen_range(1..=MAX_SIZE as u32);
            random_poset(rng.gen(), size, max_length)
        })
        .collect()
}

fn absorb(out: &mut CheckOutcome, case: usize, report: AxiomReport) {
    out.checked += report.checked;
    out.failures
        .extend(report.violations.iter().map(|v| format!("case {case}: {v}")));
}

/// Oracle equivalence, the axiom families, filtrations, successors and
/// truncation on seeded random posets.
pub fn check_random_posets(seed: u64, cases: usize) -> Result<Vec<CheckOutcome>> {
    let mut oracle = CheckOutcome::new("recursion equals chain oracle");
    let mut measure = CheckOutcome::new("M1-M3");
    let mut structural = CheckOutcome::new("C1/C2/C4/C5 and top is length");
    let mut refinement = CheckOutcome::new("P1-P3");
    let mut corollary = CheckOutcome::new("equal-measure corollary");
    let mut filtrations = CheckOutcome::new("filtrations valid, steps = |measure|");
    let mut successors = CheckOutcome::new("immediate successor is next class");
    let mut truncation = CheckOutcome::new("truncation stability");

    for (case, p) in random_cases(seed, cases).iter().enumerate() {
        let r = gr_measure(p)?;
        let o = gr_measure_oracle(p, OracleBudget::default())?;
        oracle.record(r == o, || format!("case {case}:\n{}", p.to_text()));

        absorb(&mut measure, case, check_measure_axioms(p, &r.measure));
        absorb(&mut structural, case, check_structural_properties(p, &r));
        absorb(&mut refinement, case, check_refinement_axioms(p, &r.measure));
        absorb(&mut corollary, case, check_corollary(p, &r));

        for x in 0..p.len() {
            let f = gr_filtration(p, &r, x);
            let ok = f.is_valid(p, &r) && f.steps.last() == Some(&x) && f.len() == r.measure[x].len();
            filtrations.record(ok, || format!("case {case}: {}", f.names(p).join(" < ")));

            let next = immediate_successors(&r, x);
            let expected: BTreeSet<NatChain> =
                r.class_order.get(r.class_of(x) + 1).cloned().into_iter().collect();
            successors.record(next == expected, || format!("case {case}: {}", p.name(x)));
        }

        let top = p.lengths().iter().copied().max().unwrap_or(0);
        for cap in 1..top {
            let (sub, kept) = p.restrict(|x| p.length(x) <= cap);
            let rs = gr_measure(&sub)?;
            let ok = kept.iter().enumerate().all(|(i, &x)| rs.measure[i] == r.measure[x]);
            truncation.record(ok, || format!("case {case}: cap {cap}"));
        }
    }
    Ok(vec![
        oracle,
        measure,
        structural,
        refinement,
        corollary,
        filtrations,
        successors,
        truncation,
    ])
}

/// Deliberately wrong maps on the six-element example poset must fail
/// exactly the expected axioms.
pub fn check_corrupted_maps() -> CheckOutcome {
    let mut out = CheckOutcome::new("corrupted maps rejected");
    let p: MeasuredPoset = A3_POSET.parse().expect("example poset parses");
    let good = gr_measure(&p).expect("example poset is valid").measure;
    let at = |name: &str| p.index_of(name).expect("example element");
    let chain = |v: &[u32]| NatChain::from_elements(v.to_vec()).expect("ascending");

    let mut swapped = good.clone();
    swapped.swap(at("100"), at("110"));
    let report = check_measure_axioms(&p, &swapped);
    out.record(report.fails(Axiom::M3), || "swap on 100 < 110 passes M3".into());

    let singleton: Vec<NatChain> = (0..p.len()).map(|x| chain(&[p.length(x)])).collect();
    let failed = check_refinement_axioms(&p, &singleton).failed_axioms();
    out.record(failed == BTreeSet::from([Axiom::P1]), || {
        format!("length singleton map fails {failed:?}, expected P1 only")
    });

    let mut raised = good.clone();
    raised[at("111")] = chain(&[1, 2, 3]);
    let failed = check_refinement_axioms(&p, &raised).failed_axioms();
    out.record(failed == BTreeSet::from([Axiom::P3]), || {
        format!("raised 111 fails {failed:?}, expected P3 only")
    });

    let constant = vec![chain(&[1]); p.len()];
    let failed = check_refinement_axioms(&p, &constant).failed_axioms();
    out.record(failed.contains(&Axiom::P2), || "constant map passes P2".into());

    let report = check_refinement_axioms(&p, &good);
    out.record(report.is_pass(), || "computed measure fails P1-P3".into());
    out
}

pub struct PosetSuite;

impl Suite for PosetSuite {
    fn name(&self) -> &'static str {
        "poset"
    }

    fn run(&self, config: &SuiteConfig) -> Result<SuiteReport> {
        let mut checks = check_random_posets(config.seed, config.cases)?;
        checks.push(check_corrupted_maps());
        Ok(SuiteReport {
            suite: self.name().into(),
            checks,
        })
    }
}
