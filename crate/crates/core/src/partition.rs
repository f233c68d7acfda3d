//! Ordered partitions of part of a ground set into pairs.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// An ordered list of pairwise disjoint 2-element subsets. In an echidna the
/// pairs are spines; in a spike they are arms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPartition {
    pairs: Vec<SubsetMask>,
    covered: SubsetMask,
}

impl PairPartition {
    pub fn new(pairs: Vec<SubsetMask>) -> Result<PairPartition> {
        let mut covered = SubsetMask::EMPTY;
        for &p in &pairs {
            if p.len() != 2 {
                return Err(Error::Parameter(format!(
                    "pair {p:?} does not have exactly two elements"
                )));
            }
            if covered.intersects(p) {
                return Err(Error::Parameter(format!("pair {p:?} overlaps another pair")));
            }
            covered = covered | p;
        }
        Ok(PairPartition { pairs, covered })
    }

    pub fn from_index_pairs(pairs: &[(usize, usize)]) -> Result<PairPartition> {
        PairPartition::new(
            pairs
                .iter()
                .map(|&(a, b)| SubsetMask::from_indices([a, b]))
                .collect(),
        )
    }

    /// Number of pairs.
    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[SubsetMask] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> SubsetMask {
        self.pairs[i]
    }

    /// Union of all pairs.
    pub fn covered(&self) -> SubsetMask {
        self.covered
    }

    /// Union of the pairs selected by a mask over pair indices.
    pub fn union_of(&self, pair_indices: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for i in pair_indices.iter() {
            out = out | self.pairs[i];
        }
        out
    }

    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .map(|p| {
                let v = p.indices();
                (v[0], v[1])
            })
            .collect()
    }

    /// Same pairs, sorted by smallest element. Useful for comparing
    /// partitions that differ only in listing order.
    pub fn canonical(&self) -> PairPartition {
        let mut pairs = self.pairs.clone();
        pairs.sort_by_key(|p| p.min_element());
        PairPartition {
            pairs,
            covered: self.covered,
        }
    }
}
