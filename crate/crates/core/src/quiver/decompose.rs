use super::hom::{Budget, HomSpace};
use super::ops::{image, kernel};
use super::{QuiverRep, RepMorphism};
use crate::error::Result;
use crate::linalg::Matrix;

/// An idempotent endomorphism other than `0` and the identity, if one exists.
pub fn find_nontrivial_idempotent(x: &QuiverRep, budget: Budget) -> Result<Option<RepMorphism>> {
    let f = x.field();
    let identity: Vec<Matrix> = x.dims().iter().map(|&d| Matrix::identity(d)).collect();
    HomSpace::new(x, x).find(budget, |comps| {
        let nontrivial = comps.iter().any(|c| !c.is_zero()) && comps != identity.as_slice();
        nontrivial && comps.iter().all(|c| &c.mul(c, f) == c)
    })
}

/// A nonzero representation is indecomposable iff its endomorphism space
/// holds no idempotent besides `0` and the identity. The scan is exhaustive.
pub fn is_indecomposable(x: &QuiverRep, budget: Budget) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    Ok(find_nontrivial_idempotent(x, budget)?.is_none())
}

/// True when some vertex simple splits off as a direct summand: there is a
/// vector killed by every outgoing arrow that is not in the span of the
/// incoming arrows' images. Sound and cheap; used to skip the idempotent scan.
pub fn has_simple_summand(x: &QuiverRep) -> bool {
    if x.length() < 2 {
        return false;
    }
    let f = x.field();
    let quiver = x.quiver();
    (0..quiver.vertex_count()).any(|v| {
        if x.dim(v) == 0 {
            return false;
        }
        let out = quiver
            .outgoing(v)
            .fold(Matrix::zeros(0, x.dim(v)), |acc, (i, _)| acc.vstack(x.mat(i)));
        let killed = out.nullspace(f);
        if killed.cols() == 0 {
            return false;
        }
        let reached = quiver
            .incoming(v)
            .fold(Matrix::zeros(x.dim(v), 0), |acc, (i, _)| acc.hstack(x.mat(i)));
        reached.hstack(&killed).rank(f) > reached.rank(f)
    })
}

/// True when the vertices with nonzero dimension do not form a connected
/// subgraph of the underlying graph; such a representation splits along the
/// components.
pub(crate) fn has_disconnected_support(x: &QuiverRep) -> bool {
    let quiver = x.quiver();
    let support: Vec<usize> = (0..quiver.vertex_count()).filter(|&v| x.dim(v) > 0).collect();
    let Some(&start) = support.first() else {
        return false;
    };
    let mut seen = vec![false; quiver.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for a in quiver.arrows() {
            let next = if a.source == v {
                a.target
            } else if a.target == v {
                a.source
            } else {
                continue;
            };
            if x.dim(next) > 0 && !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    support.iter().any(|&v| !seen[v])
}

/// Splits `x` along nontrivial idempotents until every piece is
/// indecomposable. Pieces are returned sorted by length, then dimension
/// vector.
pub fn decompose(x: &QuiverRep, budget: Budget) -> Result<Vec<QuiverRep>> {
    let mut done = Vec::new();
    let mut pending = vec![x.clone()];
    while let Some(piece) = pending.pop() {
        if piece.is_zero() {
            continue;
        }
        match find_nontrivial_idempotent(&piece, budget)? {
            Some(e) => {
                pending.push(image(&e).0);
                pending.push(kernel(&e).0);
            }
            None => done.push(piece),
        }
    }
    done.sort_by(|a, b| (a.length(), a.dims()).cmp(&(b.length(), b.dims())));
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{iso_test, kronecker_rep, KroneckerLabel, Quiver};
    use super::*;
    use crate::error::Error;

    #[test]
    fn indecomposable_examples() {
        let k = f2();
        let b = Budget::default();
        assert!(is_indecomposable(&a3("111", k), b).unwrap());
        let split = a3("100", k).direct_sum(&a3("001", k));
        assert!(!is_indecomposable(&split, b).unwrap());
        for v in 0..3 {
            let s = QuiverRep::simple(Quiver::a3_paper(), k, v);
            assert!(is_indecomposable(&s, b).unwrap());
        }
    }

    #[test]
    fn decompose_examples() {
        let k = f2();
        let b = Budget::default();
        let x = a3("111", k);
        assert_eq!(decompose(&x, b).unwrap(), vec![x.clone()]);

        let s1 = a3("100", k);
        let parts = decompose(&s1.direct_sum(&s1), b).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.dims() == [1, 0, 0]));

        let zero_maps = QuiverRep::with_zero_maps(Quiver::a3_paper(), k, vec![1, 0, 1]);
        let parts = decompose(&zero_maps, b).unwrap();
        let dims: Vec<&[usize]> = parts.iter().map(|p| p.dims()).collect();
        assert_eq!(dims, vec![&[0, 0, 1][..], &[1, 0, 0][..]]);
    }

    #[test]
    fn decompose_kronecker_sum() {
        let k = f2();
        let b = Budget::default();
        let p2 = kronecker_rep(KroneckerLabel::preprojective(2), k);
        let r1 = kronecker_rep(KroneckerLabel::regular(1, 1, 1, k).unwrap(), k);
        let parts = decompose(&p2.direct_sum(&r1), b).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(iso_test(&parts[0], &r1, b).unwrap());
        assert!(iso_test(&parts[1], &p2, b).unwrap());
    }

    #[test]
    fn budget_error_propagates() {
        let k = f2();
        let big = QuiverRep::with_zero_maps(Quiver::a3_paper(), k, vec![4, 0, 0]);
        assert!(matches!(
            is_indecomposable(&big, Budget(1000)),
            Err(Error::HomBudget { .. })
        ));
    }

    #[test]
    fn simple_summand_prefilter_agrees_with_idempotent_scan() {
        let k = f2();
        let b = Budget::default();
        let cases = [
            a3("111", k),
            a3("100", k).direct_sum(&a3("001", k)),
            a3("110", k).direct_sum(&a3("010", k)),
            a3("011", k),
            QuiverRep::with_zero_maps(Quiver::a3_paper(), k, vec![0, 2, 0]),
        ];
        for x in cases {
            if has_simple_summand(&x) {
                assert!(!is_indecomposable(&x, b).unwrap(), "{x:?}");
            }
        }
        assert!(has_simple_summand(&a3("110", k).direct_sum(&a3("010", k))));
        assert!(!has_simple_summand(&a3("111", k)));
    }

    #[test]
    fn disconnected_support() {
        let k = f2();
        assert!(has_disconnected_support(&QuiverRep::with_zero_maps(
            Quiver::linear_a(3),
            k,
            vec![1, 0, 1]
        )));
        assert!(!has_disconnected_support(&a3("111", k)));
    }
}
