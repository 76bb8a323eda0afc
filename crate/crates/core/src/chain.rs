//! Finite chains of positive naturals under the lexicographic order.
//!
//! A chain `X` is compared with `Y` by looking at the smallest element on
//! which they disagree: whichever chain contains it is the larger one. If one
//! chain is an initial segment of the other, the shorter one is smaller. So
//! `{} < {3} < {2} < {2,3} < {1} < {1,3} < {1,2} < {1,2,3}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of positive naturals, stored in strictly ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct NatChain(Vec<u32>);

impl NatChain {
    pub fn empty() -> Self {
        NatChain(Vec::new())
    }

    pub fn singleton(n: u32) -> Result<Self> {
        Self::from_elements(vec![n])
    }

    /// Builds a chain from an ascending list, rejecting zeros, duplicates and
    /// unsorted input.
    pub fn from_elements(elements: Vec<u32>) -> Result<Self> {
        if elements.iter().any(|&e| e == 0) {
            return Err(Error::InvalidChain("elements must be positive".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidChain(
                "elements must be strictly ascending".into(),
            ));
        }
        Ok(NatChain(elements))
    }

    /// The chain `{1, ..., n}`.
    pub fn initial_segment(n: u32) -> Self {
        NatChain((1..=n).collect())
    }

    /// All subsets of `{1, ..., n}`, in no particular order.
    pub fn subsets_of(n: u32) -> Vec<NatChain> {
        assert!(n < 32, "universe too large to enumerate");
        (0u32..(1 << n))
            .map(|mask| NatChain((1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()))
            .collect()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_element(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn min_element(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn contains(&self, n: u32) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    pub fn is_subset(&self, other: &NatChain) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    /// The chain with its maximum removed.
    pub fn drop_max(&self) -> Result<NatChain> {
        if self.0.is_empty() {
            return Err(Error::EmptyChain);
        }
        Ok(NatChain(self.0[..self.0.len() - 1].to_vec()))
    }

    /// `self ∪ {n}` where `n` must exceed every element already present.
    pub fn extend(&self, n: u32) -> Result<NatChain> {
        if n == 0 {
            return Err(Error::InvalidChain("elements must be positive".into()));
        }
        if let Some(m) = self.max_element() {
            if n <= m {
                return Err(Error::NotExtendingMax { max: m, value: n });
            }
        }
        let mut v = self.0.clone();
        v.push(n);
        Ok(NatChain(v))
    }

    /// Exact value of `Σ 2^-x` over the elements. Injective and order
    /// preserving into `[0, 1]`.
    pub fn dyadic_value(&self) -> BigRational {
        let mut sum = BigRational::zero();
        for &x in &self.0 {
            let denom = BigInt::one() << (x as usize);
            sum += BigRational::new(BigInt::one(), denom);
        }
        sum
    }
}

/// Lexicographic comparison of two chains.
pub fn lex_compare(x: &NatChain, y: &NatChain) -> Ordering {
    for (a, b) in x.0.iter().zip(&y.0) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            // `x` holds the smaller element `a`, which `y` lacks
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    x.0.len().cmp(&y.0.len())
}

impl Ord for NatChain {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for NatChain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for NatChain {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        NatChain::from_elements(v)
    }
}

impl From<NatChain> for Vec<u32> {
    fn from(c: NatChain) -> Self {
        c.0
    }
}

/// Comma-joined ascending integers; the empty chain prints as `-`.
impl fmt::Display for NatChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for NatChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(NatChain::empty());
        }
        if s.is_empty() {
            return Err(Error::InvalidChain("empty literal (use `-`)".into()));
        }
        let elements = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidChain(format!("bad element {part:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        NatChain::from_elements(elements)
    }
}
