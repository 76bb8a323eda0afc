use std::sync::Arc;

use super::decompose::{has_disconnected_support, has_simple_summand, is_indecomposable};
use super::hom::{iso_test, Budget};
use super::{Quiver, QuiverRep};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

/// Dimension vectors with total in `1..=max_total`, ordered by total and then
/// lexicographically.
pub fn dimension_vectors(vertices: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn fill(prefix: &mut Vec<usize>, slots: usize, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for d in 0..=remaining {
            prefix.push(d);
            fill(prefix, slots - 1, remaining - d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vertices == 0 {
        return out;
    }
    for total in 1..=max_total {
        fill(&mut Vec::new(), vertices, total, &mut out);
    }
    out
}

/// Brute-force list of pairwise non-isomorphic indecomposables of length at
/// most `max_length`.
///
/// Every tuple of arrow matrices is tried for every dimension vector. Tuples
/// with disconnected support or a split-off vertex simple are discarded
/// without the idempotent scan; the rest go through [`is_indecomposable`] and
/// are deduplicated by [`iso_test`] against earlier finds with the same
/// dimension vector. Output order is by length, then dimension vector, then
/// first found.
pub fn enumerate_indecomposables(
    quiver: &Arc<Quiver>,
    field: PrimeField,
    max_length: usize,
    budget: Budget,
) -> Result<Vec<QuiverRep>> {
    let mut found = Vec::new();
    for dims in dimension_vectors(quiver.vertex_count(), max_length) {
        let shapes: Vec<(usize, usize)> = quiver
            .arrows()
            .iter()
            .map(|a| (dims[a.target], dims[a.source]))
            .collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let tuples = match field.checked_pow(entries) {
            Some(n) if n <= budget.0 => n,
            _ => {
                return Err(Error::EnumerationBudget {
                    dims,
                    p: field.p(),
                    entries,
                    budget: budget.0,
                })
            }
        };
        let probe = QuiverRep::with_zero_maps(quiver.clone(), field, dims.clone());
        if has_disconnected_support(&probe) {
            continue;
        }
        let mut class: Vec<QuiverRep> = Vec::new();
        let p = field.p() as u64;
        for code in 0..tuples {
            let mut rest = code;
            let mats: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    Matrix::from_fn(r, c, |_, _| {
                        let digit = (rest % p) as u32;
                        rest /= p;
                        digit
                    })
                })
                .collect();
            let rep = QuiverRep::new(quiver.clone(), field, dims.clone(), mats)?;
            if has_simple_summand(&rep) || !is_indecomposable(&rep, budget)? {
                continue;
            }
            let mut duplicate = false;
            for known in &class {
                if iso_test(known, &rep, budget)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                class.push(rep);
            }
        }
        found.extend(class);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn dimension_vector_order() {
        let v = dimension_vectors(2, 2);
        assert_eq!(
            v,
            vec![vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }

    #[test]
    fn paper_quiver_has_six_classes() {
        for p in [2, 3] {
            let reps =
                enumerate_indecomposables(&Quiver::a3_paper(), field(p), 3, Budget::default())
                    .unwrap();
            let mut labels: Vec<String> = reps.iter().map(QuiverRep::dims_label).collect();
            labels.sort();
            assert_eq!(labels, ["001", "010", "011", "100", "110", "111"], "p = {p}");
        }
    }

    #[test]
    fn linear_a2_has_three_classes() {
        let reps =
            enumerate_indecomposables(&Quiver::linear_a(2), field(2), 2, Budget::default()).unwrap();
        let labels: Vec<String> = reps.iter().map(QuiverRep::dims_label).collect();
        assert_eq!(labels, ["01", "10", "11"]);
    }

    #[test]
    fn length_one_gives_vertex_simples() {
        for q in [Quiver::a3_paper(), Quiver::kronecker(), Quiver::linear_a(4)] {
            let reps = enumerate_indecomposables(&q, field(3), 1, Budget::default()).unwrap();
            assert_eq!(reps.len(), q.vertex_count());
            assert!(reps.iter().all(|r| r.length() == 1));
        }
    }

    #[test]
    fn enumeration_budget_names_dimension_vector() {
        let err = enumerate_indecomposables(&Quiver::kronecker(), field(2), 4, Budget(64))
            .unwrap_err();
        match err {
            Error::EnumerationBudget { dims, .. } => assert_eq!(dims, vec![2, 2]),
            other => panic!("unexpected {other}"),
        }
    }
}
