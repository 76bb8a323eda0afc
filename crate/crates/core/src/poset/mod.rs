//! Finite posets carrying a length function, and the Gabriel-Roiter measure on
//! them.
//!
//! A [`MeasuredPoset`] stores the transitive closure of the declared relation;
//! redundant pairs in the input are harmless. Construction never fails on
//! cycles or non-monotone lengths: those are reported by
//! [`MeasuredPoset::validate`], which every measure computation runs first.

mod axioms;
mod filtration;
mod measure;
mod random;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use axioms::{
    check_corollary, check_measure_axioms, check_refinement_axioms, check_structural_properties,
    Axiom, AxiomReport, AxiomViolation,
};
pub use filtration::{gr_filtration, immediate_successors, max_predecessor_measure, GRFiltration};
pub use measure::{
    gr_measure, gr_measure_oracle, measure_registry, ChainOracle, GRResult, MeasureStrategy,
    OracleBudget, Recursive,
};
pub use random::random_poset;

/// Why a poset fails validation. Names the first offending pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetViolation {
    Cycle { lower: String, upper: String },
    Monotonicity {
        lower: String,
        upper: String,
        lower_length: u32,
        upper_length: u32,
    },
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetViolation::Cycle { lower, upper } => {
                write!(f, "cycle through {lower} < {upper}")
            }
            PosetViolation::Monotonicity {
                lower,
                upper,
                lower_length,
                upper_length,
            } => write!(
                f,
                "length not strictly monotone: {lower} < {upper} but {lower_length} >= {upper_length}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasuredPoset {
    names: Vec<String>,
    lengths: Vec<u32>,
    relations: Vec<(usize, usize)>,
    /// `below[i][j]` iff `i < j` in the transitive closure.
    below: Vec<Vec<bool>>,
}

impl MeasuredPoset {
    /// Builds a poset from element names, lengths and `(lower, upper)` index
    /// pairs. Fails on duplicate names, zero lengths or out-of-range indices.
    pub fn new(names: Vec<String>, lengths: Vec<u32>, relations: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        if lengths.len() != n {
            return Err(Error::InvalidRep(format!(
                "{} names but {} lengths",
                n,
                lengths.len()
            )));
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::UnknownElement(name.clone()));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate element {name:?}"),
                });
            }
            if lengths[i] == 0 {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("element {name:?} has length 0"),
                });
            }
        }
        for &(a, b) in &relations {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("index {}", a.max(b))));
            }
        }
        let mut below = vec![vec![false; n]; n];
        for &(a, b) in &relations {
            below[a][b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if below[i][k] {
                    for j in 0..n {
                        if below[k][j] {
                            below[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(MeasuredPoset {
            names,
            lengths,
            relations,
            below,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn length(&self, x: usize) -> u32 {
        self.lengths[x]
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    /// The relation pairs as declared, before closure.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// Strict order `x < y` of the closure.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.below[x][y]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.below[x][y]
    }

    /// Elements strictly below `x`, ascending by index.
    pub fn predecessors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&y| self.below[y][x])
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.predecessors(x).next().is_none()
    }

    pub fn validate(&self) -> std::result::Result<(), PosetViolation> {
        for &(a, b) in &self.relations {
            if a == b || self.below[b][a] {
                return Err(PosetViolation::Cycle {
                    lower: self.names[a].clone(),
                    upper: self.names[b].clone(),
                });
            }
        }
        for &(a, b) in &self.relations {
            if self.lengths[a] >= self.lengths[b] {
                return Err(PosetViolation::Monotonicity {
                    lower: self.names[a].clone(),
                    upper: self.names[b].clone(),
                    lower_length: self.lengths[a],
                    upper_length: self.lengths[b],
                });
            }
        }
        Ok(())
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        self.validate().map_err(Error::InvalidPoset)
    }

    /// Elements ordered by length, then index. On a valid poset this is a
    /// linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.lengths[x], x));
        order
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.below[x][y] && !(0..n).any(|z| self.below[x][z] && self.below[z][y]) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The induced subposet on the elements for which `keep` holds, together
    /// with the original index of each surviving element.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> (MeasuredPoset, Vec<usize>) {
        let kept: Vec<usize> = (0..self.len()).filter(|&x| keep(x)).collect();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &x) in kept.iter().enumerate() {
            pos[x] = i;
        }
        let names = kept.iter().map(|&x| self.names[x].clone()).collect();
        let lengths = kept.iter().map(|&x| self.lengths[x]).collect();
        let mut relations = Vec::new();
        for &x in &kept {
            for &y in &kept {
                if self.below[x][y] {
                    relations.push((pos[x], pos[y]));
                }
            }
        }
        let sub = MeasuredPoset::new(names, lengths, relations)
            .expect("restriction of a well-formed poset");
        (sub, kept)
    }

    /// Renders the poset in the line-based text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, len) in self.names.iter().zip(&self.lengths) {
            out.push_str(&format!("e {name} {len}\n"));
        }
        for &(a, b) in &self.relations {
            out.push_str(&format!("r {} {}\n", self.names[a], self.names[b]));
        }
        out
    }
}

/// Parses the line-based poset format:
///
/// ```text
/// # comment
/// e <name> <length>
/// r <lower> <upper>
/// ```
impl FromStr for MeasuredPoset {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut names = Vec::new();
        let mut lengths = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pending = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let parts: Vec<&str> = content.split_whitespace().collect();
            let err = |message: String| Error::Parse { line, message };
            match parts.as_slice() {
                ["e", name, len] => {
                    let len: u32 = len
                        .parse()
                        .map_err(|_| err(format!("bad length {len:?}")))?;
                    if len == 0 {
                        return Err(err(format!("length of {name:?} must be positive")));
                    }
                    if index.insert(name.to_string(), names.len()).is_some() {
                        return Err(err(format!("duplicate element {name:?}")));
                    }
                    names.push(name.to_string());
                    lengths.push(len);
                }
                ["r", a, b] => pending.push((line, a.to_string(), b.to_string())),
                ["e", ..] | ["r", ..] => {
                    return Err(err(format!("wrong number of fields in {content:?}")))
                }
                [other, ..] => return Err(err(format!("unknown directive {other:?}"))),
                [] => unreachable!(),
            }
        }
        let mut relations = Vec::with_capacity(pending.len());
        for (line, a, b) in pending {
            let lookup = |n: &str| {
                index.get(n).copied().ok_or_else(|| Error::Parse {
                    line,
                    message: format!("unknown element {n:?}"),
                })
            };
            relations.push((lookup(&a)?, lookup(&b)?));
        }
        MeasuredPoset::new(names, lengths, relations)
    }
}
