//! The subobject poset of a finite set of indecomposable representations and
//! the Gabriel-Roiter measure on it.
//!
//! The poset orders representations by existence of a monomorphism and uses
//! total dimension as the length. For representation-infinite quivers only a
//! length-truncated piece is built. That is enough: the measure of `X` is
//! determined by the subobjects of `X`, all of length at most `ℓ(X)`, so values
//! computed with cap `L` remain valid under any larger cap.

mod family;
mod verify;

use std::collections::HashMap;

use crate::chain::NatChain;
use crate::error::{Error, Result};
use crate::poset::{gr_measure, GRResult, MeasuredPoset};
use crate::quiver::{decompose, find_mono, is_indecomposable, iso_test, Budget, QuiverRep, RepMorphism};

pub use family::{
    family_registry, AThreePaper, FamilyConfig, FamilyInstance, Kronecker, LinearA, QuiverFileFamily,
    RepFamily,
};
pub use verify::{
    truncation_stability, verify_gr6, verify_gr7, verify_gr_inclusion_quotient,
    verify_main_property, verify_predecessor_values, verify_socle_formula, verify_structural,
};

#[derive(Clone, Debug)]
pub struct SubobjectPoset {
    reps: Vec<QuiverRep>,
    poset: MeasuredPoset,
    /// One monomorphism per strict relation `(sub, sup)`.
    witnesses: HashMap<(usize, usize), RepMorphism>,
}

/// `sub ⊂ sup` with `sub` attaining the largest measure among the strict
/// subobjects of `sup`.
#[derive(Clone, Debug)]
pub struct GRInclusion {
    pub sub: usize,
    pub sup: usize,
    pub witness: RepMorphism,
}

/// Builds the subobject poset of pairwise non-isomorphic indecomposables.
///
/// Monomorphisms are only searched from shorter to longer objects; equal
/// lengths would force an isomorphism, which is excluded up front.
pub fn build_subobject_poset(
    reps: Vec<QuiverRep>,
    names: Vec<String>,
    budget: Budget,
) -> Result<SubobjectPoset> {
    if reps.len() != names.len() {
        return Err(Error::Config(format!(
            "{} representations but {} names",
            reps.len(),
            names.len()
        )));
    }
    if let Some(first) = reps.first() {
        if let Some((i, _)) = reps.iter().enumerate().find(|(_, r)| !r.same_category(first)) {
            return Err(Error::InvalidRep(format!(
                "{:?} lives over a different quiver or field than {:?}",
                names[i], names[0]
            )));
        }
    }
    for (rep, name) in reps.iter().zip(&names) {
        let indecomposable =
            is_indecomposable(rep, budget).map_err(|e| e.during(format!("decomposing {name}")))?;
        if !indecomposable {
            return Err(Error::InvalidRep(format!("{name:?} is not indecomposable")));
        }
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let iso = iso_test(&reps[i], &reps[j], budget)
                .map_err(|e| e.during(format!("comparing {} with {}", names[i], names[j])))?;
            if iso {
                return Err(Error::DuplicateIso(names[i].clone(), names[j].clone()));
            }
        }
    }

    let mut witnesses = HashMap::new();
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            if x.length() >= y.length() {
                continue;
            }
            let mono = find_mono(x, y, budget)
                .map_err(|e| e.during(format!("searching monomorphisms {} -> {}", names[i], names[j])))?;
            if let Some(m) = mono {
                witnesses.insert((i, j), m);
            }
        }
    }
    let mut relations: Vec<(usize, usize)> = witnesses.keys().copied().collect();
    relations.sort_unstable();
    let lengths = reps.iter().map(|r| r.length() as u32).collect();
    let poset = MeasuredPoset::new(names, lengths, relations)?;
    poset.validate().map_err(Error::InvalidPoset)?;
    Ok(SubobjectPoset {
        reps,
        poset,
        witnesses,
    })
}

impl SubobjectPoset {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[QuiverRep] {
        &self.reps
    }

    pub fn rep(&self, x: usize) -> &QuiverRep {
        &self.reps[x]
    }

    pub fn poset(&self) -> &MeasuredPoset {
        &self.poset
    }

    pub fn name(&self, x: usize) -> &str {
        self.poset.name(x)
    }

    /// A monomorphism `reps[sub] -> reps[sup]` for `sub < sup`.
    pub fn witness(&self, sub: usize, sup: usize) -> Option<&RepMorphism> {
        self.witnesses.get(&(sub, sup))
    }

    /// Index of the member isomorphic to `x`, if any.
    pub fn find_iso(&self, x: &QuiverRep, budget: Budget) -> Result<Option<usize>> {
        for (i, r) in self.reps.iter().enumerate() {
            if r.dims() == x.dims() && iso_test(r, x, budget)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

pub fn category_gr_measure(sp: &SubobjectPoset) -> GRResult {
    gr_measure(&sp.poset).expect("subobject posets are validated at build")
}

/// All strict subobjects of `y` with the largest measure below `y`. Empty
/// exactly when `y` has no strict subobject in the poset, i.e. is simple.
pub fn gr_predecessors(sp: &SubobjectPoset, result: &GRResult, y: usize) -> Vec<GRInclusion> {
    let preds: Vec<usize> = sp.poset.predecessors(y).collect();
    let Some(best) = preds.iter().map(|&x| &result.measure[x]).max() else {
        return Vec::new();
    };
    preds
        .iter()
        .filter(|&&x| &result.measure[x] == best)
        .map(|&x| GRInclusion {
            sub: x,
            sup: y,
            witness: sp.witnesses[&(x, y)].clone(),
        })
        .collect()
}

/// Measure of an arbitrary representation: the largest measure among its
/// indecomposable summands, each of which must be isomorphic to a member.
pub fn extended_measure(
    x: &QuiverRep,
    sp: &SubobjectPoset,
    result: &GRResult,
    budget: Budget,
) -> Result<NatChain> {
    let mut best = NatChain::empty();
    for summand in decompose(x, budget)? {
        let i = sp
            .find_iso(&summand, budget)?
            .ok_or_else(|| Error::SummandOutsidePoset(summand.dims().to_vec()))?;
        best = best.max(result.measure[i].clone());
    }
    Ok(best)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::quiver::{enumerate_indecomposables, Quiver};

    pub fn enumerated(quiver: std::sync::Arc<Quiver>, p: u32, max_length: usize) -> SubobjectPoset {
        let field = PrimeField::new(p).unwrap();
        let reps = enumerate_indecomposables(&quiver, field, max_length, Budget::default()).unwrap();
        let names = reps.iter().map(QuiverRep::dims_label).collect();
        build_subobject_poset(reps, names, Budget::default()).unwrap()
    }

    pub fn a3(p: u32) -> SubobjectPoset {
        enumerated(Quiver::a3_paper(), p, 3)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::linalg::PrimeField;
    use crate::quiver::{kronecker_builtins, Quiver};

    fn chain(v: &[u32]) -> NatChain {
        NatChain::from_elements(v.to_vec()).unwrap()
    }

    fn idx(sp: &SubobjectPoset, name: &str) -> usize {
        sp.poset().index_of(name).unwrap()
    }

    #[test]
    fn a3_hasse_diagram_and_measure() {
        for p in [2, 3] {
            let sp = a3(p);
            let mut covers: Vec<(String, String)> = sp
                .poset()
                .covers()
                .into_iter()
                .map(|(a, b)| (sp.name(a).to_string(), sp.name(b).to_string()))
                .collect();
            covers.sort();
            let expected = [("001", "011"), ("001", "111"), ("100", "110"), ("100", "111")];
            let expected: Vec<(String, String)> =
                expected.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
            assert_eq!(covers, expected, "p = {p}");

            let r = category_gr_measure(&sp);
            for (name, value) in [
                ("010", &[1][..]),
                ("100", &[1]),
                ("001", &[1]),
                ("111", &[1, 3]),
                ("110", &[1, 2]),
                ("011", &[1, 2]),
            ] {
                assert_eq!(r.measure[idx(&sp, name)], chain(value), "{name}");
            }
            assert_eq!(r.class_order, vec![chain(&[1]), chain(&[1, 3]), chain(&[1, 2])]);
        }
    }

    #[test]
    fn simples_form_an_antichain() {
        let k = PrimeField::new(2).unwrap();
        let q = Quiver::a3_paper();
        let reps: Vec<QuiverRep> = (0..3).map(|v| QuiverRep::simple(q.clone(), k, v)).collect();
        let names = vec!["s1".into(), "s2".into(), "s3".into()];
        let sp = build_subobject_poset(reps, names, Budget::default()).unwrap();
        assert!(sp.poset().covers().is_empty());
    }

    #[test]
    fn isomorphic_inputs_are_rejected() {
        let k = PrimeField::new(2).unwrap();
        let s = QuiverRep::simple(Quiver::a3_paper(), k, 0);
        let err = build_subobject_poset(vec![s.clone(), s], vec!["a".into(), "b".into()], Budget::default())
            .unwrap_err();
        assert!(matches!(err, Error::DuplicateIso(a, b) if a == "a" && b == "b"));
    }

    #[test]
    fn decomposable_inputs_are_rejected() {
        let k = PrimeField::new(2).unwrap();
        let q = Quiver::a3_paper();
        let sum = QuiverRep::simple(q.clone(), k, 0).direct_sum(&QuiverRep::simple(q, k, 2));
        assert!(matches!(
            build_subobject_poset(vec![sum], vec!["x".into()], Budget::default()),
            Err(Error::InvalidRep(_))
        ));
    }

    #[test]
    fn kronecker_up_to_length_four() {
        let k = PrimeField::new(2).unwrap();
        let (labels, reps): (Vec<_>, Vec<_>) = kronecker_builtins(k, 4).into_iter().unzip();
        assert_eq!(reps.len(), 4 + 6);
        let names = labels.iter().map(|l| l.to_string()).collect();
        let sp = build_subobject_poset(reps, names, Budget::default()).unwrap();
        let lt = |a: &str, b: &str| sp.poset().lt(idx(&sp, a), idx(&sp, b));
        assert!(lt("P1", "P2"));
        for r in ["R1(1:0)", "R1(1:1)", "R1(0:1)"] {
            assert!(lt("P1", r));
            assert!(!lt("Q1", r));
            assert!(lt(r, "Q2"));
        }
        assert!(lt("R1(1:1)", "R2(1:1)"));
        assert!(!lt("R1(1:0)", "R2(1:1)"));
        assert!(!lt("Q1", "P2"));
    }

    #[test]
    fn uniserial_intervals() {
        for n in 1..=4 {
            let sp = enumerated(Quiver::linear_a(n), 2, n);
            let r = category_gr_measure(&sp);
            let full = sp.find_iso(
                &QuiverRep::interval(Quiver::linear_a(n), PrimeField::new(2).unwrap(), 0, n - 1).unwrap(),
                Budget::default(),
            );
            let full = full.unwrap().unwrap();
            assert_eq!(r.measure[full], NatChain::initial_segment(n as u32));
        }
    }

    #[test]
    fn predecessors() {
        let sp = a3(2);
        let r = category_gr_measure(&sp);
        let mut subs: Vec<&str> = gr_predecessors(&sp, &r, idx(&sp, "111"))
            .iter()
            .map(|g| sp.name(g.sub))
            .collect();
        subs.sort();
        assert_eq!(subs, ["001", "100"]);
        for g in gr_predecessors(&sp, &r, idx(&sp, "111")) {
            assert!(g.witness.is_mono());
            assert_eq!(g.sup, idx(&sp, "111"));
        }
        assert!(gr_predecessors(&sp, &r, idx(&sp, "010")).is_empty());

        let line = enumerated(Quiver::linear_a(3), 2, 3);
        let lr = category_gr_measure(&line);
        let preds = gr_predecessors(&line, &lr, idx(&line, "111"));
        assert_eq!(preds.len(), 1);
        assert_eq!(line.name(preds[0].sub), "011");
    }

    #[test]
    fn extended_measure_examples() {
        let sp = a3(2);
        let r = category_gr_measure(&sp);
        let b = Budget::default();
        let s = sp.rep(idx(&sp, "100")).clone();
        let top = sp.rep(idx(&sp, "111")).clone();
        assert_eq!(extended_measure(&top, &sp, &r, b).unwrap(), chain(&[1, 3]));
        assert_eq!(extended_measure(&s.direct_sum(&top), &sp, &r, b).unwrap(), chain(&[1, 3]));
        assert_eq!(extended_measure(&s.direct_sum(&s), &sp, &r, b).unwrap(), chain(&[1]));

        let only_simples = {
            let reps: Vec<QuiverRep> = ["100", "010", "001"]
                .iter()
                .map(|n| sp.rep(idx(&sp, n)).clone())
                .collect();
            build_subobject_poset(reps, vec!["100".into(), "010".into(), "001".into()], b).unwrap()
        };
        let r2 = category_gr_measure(&only_simples);
        assert!(matches!(
            extended_measure(&top, &only_simples, &r2, b),
            Err(Error::SummandOutsidePoset(d)) if d == [1, 1, 1]
        ));
    }
}
