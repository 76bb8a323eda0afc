//! Preprojective, regular and preinjective representations of the Kronecker
//! quiver `a, b: 1 -> 2`.
//!
//! Normal forms, with `n` the index:
//!
//! * `P_n`, dimensions `(n-1, n)`: `a = [I; 0]`, `b = [0; I]`.
//! * `Q_n`, dimensions `(n, n-1)`: the transposes, `a = [I 0]`, `b = [0 I]`.
//! * `R_n(1:β)`, dimensions `(n, n)`: `a = I`, `b = βI + J`.
//! * `R_n(0:1)`: `a = J`, `b = I`.
//!
//! `J` is the nilpotent Jordan block with ones above the diagonal.

use std::fmt;

use super::{Quiver, QuiverRep};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KroneckerKind {
    Preprojective,
    Regular,
    Preinjective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KroneckerLabel {
    pub kind: KroneckerKind,
    pub n: usize,
    /// Point of the projective line, canonically `(1, β)` or `(0, 1)`.
    /// Only set for regulars.
    pub param: Option<(u32, u32)>,
}

impl KroneckerLabel {
    pub fn preprojective(n: usize) -> Self {
        assert!(n >= 1, "index starts at 1");
        KroneckerLabel {
            kind: KroneckerKind::Preprojective,
            n,
            param: None,
        }
    }

    pub fn preinjective(n: usize) -> Self {
        assert!(n >= 1, "index starts at 1");
        KroneckerLabel {
            kind: KroneckerKind::Preinjective,
            n,
            param: None,
        }
    }

    /// `R_n(α:β)`, with the parameter scaled to its canonical representative.
    pub fn regular(n: usize, alpha: u32, beta: u32, f: PrimeField) -> Result<Self> {
        assert!(n >= 1, "index starts at 1");
        let (alpha, beta) = (alpha % f.p(), beta % f.p());
        let param = match (alpha, beta) {
            (0, 0) => {
                return Err(Error::InvalidRep(
                    "regular parameter (0:0) is not a point of the projective line".into(),
                ))
            }
            (0, _) => (0, 1),
            (a, b) => (1, f.mul(b, f.inv(a))),
        };
        Ok(KroneckerLabel {
            kind: KroneckerKind::Regular,
            n,
            param: Some(param),
        })
    }

    pub fn length(&self) -> usize {
        match self.kind {
            KroneckerKind::Regular => 2 * self.n,
            _ => 2 * self.n - 1,
        }
    }

    pub fn dims(&self) -> [usize; 2] {
        let n = self.n;
        match self.kind {
            KroneckerKind::Preprojective => [n - 1, n],
            KroneckerKind::Regular => [n, n],
            KroneckerKind::Preinjective => [n, n - 1],
        }
    }
}

impl fmt::Display for KroneckerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.param) {
            (KroneckerKind::Preprojective, _) => write!(f, "P{}", self.n),
            (KroneckerKind::Preinjective, _) => write!(f, "Q{}", self.n),
            (KroneckerKind::Regular, Some((a, b))) => write!(f, "R{}({a}:{b})", self.n),
            (KroneckerKind::Regular, None) => write!(f, "R{}", self.n),
        }
    }
}

/// Points of `P¹(F_p)`: `(1:0), (1:1), …, (1:p-1), (0:1)`.
pub fn projective_line(f: PrimeField) -> Vec<(u32, u32)> {
    f.elements().map(|b| (1, b)).chain([(0, 1)]).collect()
}

fn shifted_identity(rows: usize, cols: usize, row_offset: usize, col_offset: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |i, j| {
        u32::from(i >= row_offset && j >= col_offset && i - row_offset == j - col_offset)
    })
}

pub fn kronecker_rep(label: KroneckerLabel, f: PrimeField) -> QuiverRep {
    let n = label.n;
    let [d1, d2] = label.dims();
    let (a, b) = match label.kind {
        KroneckerKind::Preprojective => (
            shifted_identity(n, n - 1, 0, 0),
            shifted_identity(n, n - 1, 1, 0),
        ),
        KroneckerKind::Preinjective => (
            shifted_identity(n - 1, n, 0, 0),
            shifted_identity(n - 1, n, 0, 1),
        ),
        KroneckerKind::Regular => {
            let jordan = shifted_identity(n, n, 0, 1);
            match label.param.expect("regular label has a parameter") {
                (0, _) => (jordan, Matrix::identity(n)),
                (_, beta) => (
                    Matrix::identity(n),
                    Matrix::identity(n).scale(beta, f).add(&jordan, f),
                ),
            }
        }
    };
    QuiverRep::new(Quiver::kronecker(), f, vec![d1, d2], vec![a, b])
        .expect("normal forms have consistent shapes")
}

/// All `P_n`, `R_n(·)` and `Q_n` of length at most `max_length`, ordered by
/// length, then preprojective, regular, preinjective, then parameter.
pub fn kronecker_builtins(f: PrimeField, max_length: usize) -> Vec<(KroneckerLabel, QuiverRep)> {
    let mut labels = Vec::new();
    for n in 1.. {
        if 2 * n - 1 > max_length {
            break;
        }
        labels.push(KroneckerLabel::preprojective(n));
        labels.push(KroneckerLabel::preinjective(n));
        if 2 * n <= max_length {
            for (a, b) in projective_line(f) {
                labels.push(KroneckerLabel::regular(n, a, b, f).expect("point of P1"));
            }
        }
    }
    labels.sort_by_key(|l| (l.length(), l.kind, l.param));
    labels
        .into_iter()
        .map(|l| (l, kronecker_rep(l, f)))
        .collect()
}
