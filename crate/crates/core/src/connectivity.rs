//! Tutte connectivity via exhaustive bipartition scan.

use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// A `j`-separation: `lambda(side) < j` and both sides have at least `j`
/// elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Separation {
    pub side: SubsetMask,
    pub order: usize,
}

impl Matroid {
    /// The connectivity function `lambda(X) = r(X) + r(E - X) - r(M)`.
    /// Symmetric in X and its complement, and nonnegative.
    pub fn connectivity(&self, x: SubsetMask) -> usize {
        self.rank(x) + self.rank(self.ground() - x) - self.full_rank()
    }

    /// Searches for a `j`-separation with `j < k`. Scans sides containing
    /// element 0 in increasing numeric order, so the witness is
    /// deterministic. Returns the first side found, with the least valid
    /// order for that side.
    pub fn separation_below(&self, k: usize) -> Option<Separation> {
        if self.n() < 2 || k < 2 {
            return None;
        }
        let full = self.ground().0;
        let mut bits = 1u32;
        while bits < full {
            let side = SubsetMask(bits);
            let lambda = self.connectivity(side);
            let min_size = side.len().min(self.n() - side.len());
            // a j-separation exists for this side iff lambda < j <= min(min_size, k-1)
            if lambda < min_size.min(k - 1) {
                return Some(Separation {
                    side,
                    order: lambda + 1,
                });
            }
            bits += 2; // only odd masks: sides containing element 0
        }
        None
    }

    /// Tutte k-connectivity: no `j`-separation exists for any `j < k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        self.separation_below(k).is_none()
    }
}
