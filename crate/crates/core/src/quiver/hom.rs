use std::ops::ControlFlow;

use super::{QuiverRep, RepMorphism};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Upper bound on the number of elements an exhaustive scan of a hom space
/// may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 20)
    }
}

/// The solution space of the intertwining equations between two
/// representations, with a basis fixed by exact elimination.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: QuiverRep,
    target: QuiverRep,
    basis: Vec<Vec<Matrix>>,
}

impl HomSpace {
    pub fn new(source: &QuiverRep, target: &QuiverRep) -> Self {
        assert!(
            source.same_category(target),
            "hom space across different quivers or fields"
        );
        let f = source.field();
        let quiver = source.quiver();
        let nv = quiver.vertex_count();
        // unknown (v, i, j) is entry (i, j) of the component at v
        let mut offset = vec![0usize; nv + 1];
        for v in 0..nv {
            offset[v + 1] = offset[v] + target.dim(v) * source.dim(v);
        }
        let unknowns = offset[nv];
        let var = |v: usize, i: usize, j: usize| offset[v] + i * source.dim(v) + j;

        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (ai, a) in quiver.arrows().iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let xa = source.mat(ai);
            let ya = target.mat(ai);
            for i in 0..target.dim(t) {
                for j in 0..source.dim(s) {
                    let mut row = vec![0u32; unknowns];
                    // (φ_t · X_a)[i][j]
                    for k in 0..source.dim(t) {
                        let c = xa.get(k, j);
                        if c != 0 {
                            let idx = var(t, i, k);
                            row[idx] = f.add(row[idx], c);
                        }
                    }
                    // - (Y_a · φ_s)[i][j]
                    for k in 0..target.dim(s) {
                        let c = ya.get(i, k);
                        if c != 0 {
                            let idx = var(s, k, j);
                            row[idx] = f.sub(row[idx], c);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let system = Matrix::from_fn(rows.len(), unknowns, |i, j| rows[i][j]);
        let null = system.nullspace(f);
        let basis = (0..null.cols())
            .map(|k| {
                (0..nv)
                    .map(|v| {
                        Matrix::from_fn(target.dim(v), source.dim(v), |i, j| {
                            null.get(var(v, i, j), k)
                        })
                    })
                    .collect()
            })
            .collect();
        HomSpace {
            source: source.clone(),
            target: target.clone(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &QuiverRep {
        &self.source
    }

    pub fn target(&self) -> &QuiverRep {
        &self.target
    }

    pub fn basis(&self) -> Vec<RepMorphism> {
        self.basis
            .iter()
            .map(|comps| {
                RepMorphism::new_unchecked(self.source.clone(), self.target.clone(), comps.clone())
            })
            .collect()
    }

    /// Number of elements, `p^dim`, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        self.source.field().checked_pow(self.dim())
    }

    pub fn check_budget(&self, budget: Budget) -> Result<()> {
        match self.size() {
            Some(n) if n <= budget.0 => Ok(()),
            _ => Err(Error::HomBudget {
                p: self.source.field().p(),
                dim: self.dim(),
                budget: budget.0,
            }),
        }
    }

    pub fn morphism(&self, comps: Vec<Matrix>) -> RepMorphism {
        RepMorphism::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// Visits every element of the space, starting with zero. Errors before
    /// visiting anything if the space exceeds the budget.
    pub fn for_each(
        &self,
        budget: Budget,
        mut visit: impl FnMut(&[Matrix]) -> ControlFlow<()>,
    ) -> Result<()> {
        self.check_budget(budget)?;
        let f = self.source.field();
        let p = f.p();
        let mut digits = vec![0u32; self.dim()];
        let mut current: Vec<Matrix> = self
            .source
            .dims()
            .iter()
            .zip(self.target.dims())
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        loop {
            if visit(&current).is_break() {
                return Ok(());
            }
            // odometer step: every digit that moves gains one more copy of its
            // basis vector, including the wrap p-1 -> 0
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(());
                }
                for (c, b) in current.iter_mut().zip(&self.basis[i]) {
                    *c = c.add(b, f);
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// First element (in enumeration order) satisfying `pred`.
    pub fn find(
        &self,
        budget: Budget,
        mut pred: impl FnMut(&[Matrix]) -> bool,
    ) -> Result<Option<RepMorphism>> {
        let mut found = None;
        self.for_each(budget, |comps| {
            if pred(comps) {
                found = Some(comps.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        Ok(found.map(|c| self.morphism(c)))
    }

    /// Every element satisfying `pred`.
    pub fn filter(
        &self,
        budget: Budget,
        mut pred: impl FnMut(&[Matrix]) -> bool,
    ) -> Result<Vec<RepMorphism>> {
        let mut out = Vec::new();
        self.for_each(budget, |comps| {
            if pred(comps) {
                out.push(self.morphism(comps.to_vec()));
            }
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn monos(&self, budget: Budget) -> Result<Vec<RepMorphism>> {
        let f = self.source.field();
        self.filter(budget, |comps| comps.iter().all(|c| c.is_injective(f)))
    }
}

/// Basis of `Hom(X, Y)`.
pub fn hom_basis(x: &QuiverRep, y: &QuiverRep) -> Vec<RepMorphism> {
    HomSpace::new(x, y).basis()
}

/// A monomorphism `X -> Y`, found by scanning the whole hom space.
pub fn find_mono(x: &QuiverRep, y: &QuiverRep, budget: Budget) -> Result<Option<RepMorphism>> {
    if x.dims().iter().zip(y.dims()).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let f = x.field();
    HomSpace::new(x, y).find(budget, |comps| comps.iter().all(|c| c.is_injective(f)))
}

pub fn exists_mono(x: &QuiverRep, y: &QuiverRep, budget: Budget) -> Result<bool> {
    Ok(find_mono(x, y, budget)?.is_some())
}

pub fn iso_test(x: &QuiverRep, y: &QuiverRep, budget: Budget) -> Result<bool> {
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x == y {
        return Ok(true);
    }
    let f = x.field();
    Ok(HomSpace::new(x, y)
        .find(budget, |comps| comps.iter().all(|c| c.is_invertible(f)))?
        .is_some())
}
