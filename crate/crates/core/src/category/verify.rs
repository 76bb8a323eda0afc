//! Instance checks of the structural properties of the measure on a built
//! subobject poset. Each returns a [`CheckOutcome`]; an empty failure list is
//! a pass.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::family::{FamilyConfig, RepFamily};
use super::{category_gr_measure, gr_predecessors, SubobjectPoset};
use crate::chain::NatChain;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::poset::{check_structural_properties, GRResult};
use crate::quiver::{
    cokernel, find_mono, hom_basis, is_indecomposable, socle, Budget, HomSpace, QuiverRep,
    RepMorphism,
};
use crate::verify::CheckOutcome;

/// Stacks the components of a morphism into one column.
fn flatten(comps: &[Matrix]) -> Vec<u32> {
    comps.iter().flat_map(|c| c.data().iter().copied()).collect()
}

/// Whether `m: X -> Y` has a retraction `r: Y -> X` with `r ∘ m = 1_X`.
/// Solved linearly over a basis of `Hom(Y, X)`.
pub(crate) fn splits(m: &RepMorphism) -> bool {
    let f = m.source().field();
    let identity = m.source().identity();
    let target = flatten(identity.comps());
    let columns: Vec<Vec<u32>> = hom_basis(m.target(), m.source())
        .iter()
        .map(|r| flatten(r.compose_after(m).comps()))
        .collect();
    let a = Matrix::from_fn(target.len(), columns.len(), |i, j| columns[j][i]);
    let b = Matrix::from_fn(target.len(), 1, |i, _| target[i]);
    a.rank(f) == a.hstack(&b).rank(f)
}

/// For `X ⊆ Y_1 ⊕ … ⊕ Y_k`: `μ(X) <= max μ(Y_i)`, and the inclusion splits
/// when the two agree.
///
/// Every relation `X <= Y` of the poset is checked with `k = 1` (the identity
/// included), followed by `samples` random tuples with `k <= 3` drawn from
/// `seed`. Samples whose sum admits no monomorphism from `X` are not counted;
/// samples whose hom space exceeds `budget` are counted as skipped.
pub fn verify_main_property(
    sp: &SubobjectPoset,
    result: &GRResult,
    samples: usize,
    seed: u64,
    budget: Budget,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("GR8 main property");
    let n = sp.len();
    let check = |out: &mut CheckOutcome, x: usize, ys: &[usize], mono: &RepMorphism| {
        let top = ys.iter().map(|&y| &result.measure[y]).max().expect("nonempty tuple");
        let mx = &result.measure[x];
        let describe = |what: &str| {
            let names: Vec<&str> = ys.iter().map(|&y| sp.name(y)).collect();
            format!("{} into {}: {what}", sp.name(x), names.join(" + "))
        };
        if mx > top {
            out.record(false, || describe(&format!("measure {mx} exceeds {top}")));
        } else if mx == top {
            // pairwise non-isomorphic members, so a summand isomorphic to X
            // is X itself
            let summand = ys.contains(&x);
            out.record(summand && splits(mono), || describe("equal measure but not a summand"));
        } else {
            out.record(true, String::new);
        }
    };

    for y in 0..n {
        for x in 0..n {
            if x == y {
                check(&mut out, x, &[y], &sp.rep(x).identity());
            } else if let Some(m) = sp.witness(x, y) {
                check(&mut out, x, &[y], m);
            }
        }
    }

    if n == 0 {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = rng.gen_range(0..n);
        let k = rng.gen_range(1..=3);
        let ys: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let sum = QuiverRep::direct_sum_all(ys.iter().map(|&y| sp.rep(y))).expect("nonempty");
        if HomSpace::new(sp.rep(x), &sum).check_budget(budget).is_err() {
            out.skipped += 1;
            continue;
        }
        if let Some(m) = find_mono(sp.rep(x), &sum, budget)? {
            check(&mut out, x, &ys, &m);
        }
    }
    Ok(out)
}

/// For every inclusion of a predecessor attaining the maximal measure, and
/// every monomorphism realizing it, the cokernel is indecomposable.
pub fn verify_gr_inclusion_quotient(
    sp: &SubobjectPoset,
    result: &GRResult,
    budget: Budget,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new("GR inclusion quotient indecomposable");
    for y in 0..sp.len() {
        for inc in gr_predecessors(sp, result, y) {
            let monos = HomSpace::new(sp.rep(inc.sub), sp.rep(y)).monos(budget)?;
            for m in monos {
                let (q, _) = cokernel(&m);
                let ok = is_indecomposable(&q, budget)?;
                out.record(ok, || {
                    format!(
                        "{} in {}: cokernel {} decomposes",
                        sp.name(inc.sub),
                        sp.name(y),
                        q.dims_label()
                    )
                });
            }
        }
    }
    Ok(out)
}

/// For all `μ(X) < μ(Y)`: some `Y' ⊂ Y'' <= Y` has
/// `μ(Y') <= μ(X) < μ(Y'')` and `ℓ(Y') <= ℓ(X)`.
pub fn verify_gr7(sp: &SubobjectPoset, result: &GRResult) -> CheckOutcome {
    let mut out = CheckOutcome::new("GR7");
    let p = sp.poset();
    let m = &result.measure;
    let n = sp.len();
    for x in 0..n {
        for y in 0..n {
            if m[x] >= m[y] {
                continue;
            }
            let found = (0..n).filter(|&b| p.le(b, y) && m[x] < m[b]).any(|b| {
                p.predecessors(b)
                    .any(|a| m[a] <= m[x] && p.length(a) <= p.length(x))
            });
            out.record(found, || format!("no witness pair for {} < {}", sp.name(x), sp.name(y)));
        }
    }
    out
}

/// Simple objects are exactly those of minimal measure.
pub fn verify_gr6(sp: &SubobjectPoset, result: &GRResult) -> CheckOutcome {
    let mut out = CheckOutcome::new("GR6");
    let Some(least) = result.class_order.first() else {
        return out;
    };
    for x in 0..sp.len() {
        let simple = sp.rep(x).length() == 1;
        let minimal = &result.measure[x] == least;
        out.record(simple == minimal, || {
            format!("{}: simple {simple}, minimal measure {minimal}", sp.name(x))
        });
    }
    out
}

/// Closed form for indecomposables of length at most three, decided by the
/// length of the socle.
pub fn socle_formula(x: &QuiverRep) -> Option<NatChain> {
    let values: &[u32] = match x.length() {
        1 => &[1],
        2 => &[1, 2],
        3 if socle(x).length() == 1 => &[1, 2, 3],
        3 => &[1, 3],
        _ => return None,
    };
    Some(NatChain::from_elements(values.to_vec()).expect("ascending"))
}

pub fn verify_socle_formula(sp: &SubobjectPoset, result: &GRResult) -> CheckOutcome {
    let mut out = CheckOutcome::new("length <= 3 socle formula");
    for x in 0..sp.len() {
        if let Some(expected) = socle_formula(sp.rep(x)) {
            let got = &result.measure[x];
            out.record(got == &expected, || {
                format!("{}: computed {got}, formula {expected}", sp.name(x))
            });
        }
    }
    out
}

/// Every non-simple object has predecessors of maximal measure, all sharing
/// the value `μ(Y)` with its top element removed.
pub fn verify_predecessor_values(sp: &SubobjectPoset, result: &GRResult) -> CheckOutcome {
    let mut out = CheckOutcome::new("GR predecessor value");
    for y in 0..sp.len() {
        let preds = gr_predecessors(sp, result, y);
        if sp.rep(y).length() == 1 {
            out.record(preds.is_empty(), || format!("simple {} has predecessors", sp.name(y)));
            continue;
        }
        let expected = result.measure[y].drop_max().expect("nonempty measure");
        let ok = !preds.is_empty()
            && preds.iter().all(|g| result.measure[g.sub] == expected && g.witness.is_mono());
        out.record(ok, || format!("{}: predecessors disagree with {expected}", sp.name(y)));
    }
    out
}

/// Equal measures force equal lengths, values are totally ordered and
/// finitely many per length bound.
pub fn verify_structural(sp: &SubobjectPoset, result: &GRResult) -> CheckOutcome {
    let report = check_structural_properties(sp.poset(), result);
    CheckOutcome {
        name: "GR2/GR4/GR5".into(),
        checked: report.checked,
        skipped: 0,
        failures: report
            .violations
            .iter()
            .map(ToString::to_string)
            .collect(),
    }
}

/// Measures at cap `lower` agree with the measures at the configured cap on
/// every object of length at most `lower`.
pub fn truncation_stability(
    family: &dyn RepFamily,
    config: &FamilyConfig,
    lower: usize,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::new(format!("truncation stability at {lower}"));
    let upper = family.build(config)?.subobject_poset(config.budget)?;
    let upper_result = category_gr_measure(&upper);
    let small_config = FamilyConfig {
        max_length: Some(lower),
        ..config.clone()
    };
    let small = family.build(&small_config)?.subobject_poset(config.budget)?;
    let small_result = category_gr_measure(&small);
    for x in 0..small.len() {
        let found = upper.find_iso(small.rep(x), config.budget)?;
        let ok = found.is_some_and(|i| upper_result.measure[i] == small_result.measure[x]);
        out.record(ok, || {
            format!(
                "{}: {} at cap {lower}, {} at the full cap",
                small.name(x),
                small_result.measure[x],
                found.map_or("missing".to_string(), |i| upper_result.measure[i].to_string())
            )
        });
    }
    Ok(out)
}
