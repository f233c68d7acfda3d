//! Subsets of a small ground set, stored as bitmasks.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// A subset of the ground set `{0, 1, ..., n-1}`. Bit `i` is set exactly when
/// element `i` is in the subset. Only the low `n` bits may be set for a
/// ground set of size `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> SubsetMask {
        debug_assert!(n < 32);
        SubsetMask((1u32 << n) - 1)
    }

    pub fn singleton(i: usize) -> SubsetMask {
        debug_assert!(i < 32);
        SubsetMask(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> SubsetMask {
        let mut bits = 0u32;
        for i in indices {
            debug_assert!(i < 32);
            bits |= 1 << i;
        }
        SubsetMask(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    pub fn with(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << i))
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement_in(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 ^ rhs.0)
    }
}

/// Set difference.
impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i as usize)
    }
}

/// All subsets of `mask`, in increasing numeric order (empty set first,
/// `mask` itself last).
pub fn subsets_of(mask: SubsetMask) -> Subsets {
    Subsets {
        mask: mask.0,
        next: Some(0),
    }
}

pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(SubsetMask(cur))
    }
}

/// All `k`-element subsets of `{0, ..., n-1}` in increasing numeric order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    debug_assert!(n < 31);
    let state = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u32 << k) - 1)
    };
    KSubsets {
        limit: 1u32 << n,
        state,
    }
}

pub struct KSubsets {
    limit: u32,
    state: Option<u32>,
}

impl Iterator for KSubsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.state?;
        self.state = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let next = (((cur ^ ripple) >> 2) / low) | ripple;
            if next < self.limit {
                Some(next)
            } else {
                None
            }
        };
        Some(SubsetMask(cur))
    }
}

/// All `k`-element subsets of an arbitrary set, in increasing numeric order.
pub fn k_subsets_of(mask: SubsetMask, k: usize) -> impl Iterator<Item = SubsetMask> {
    let positions = mask.indices();
    k_subsets(positions.len(), k).map(move |pattern| {
        SubsetMask::from_indices(pattern.iter().map(|b| positions[b]))
    })
}

/// All `k`-element subsets of `{0, ..., n-1}` in lexicographic order of their
/// increasing index sequences: {0,1,2} < {0,1,3} < ... < {0,2,3} < ...
///
/// This differs from numeric mask order ({1,2} = 6 sorts below {0,3} = 9
/// numerically but above it lexicographically).
pub fn k_subsets_lex(n: usize, k: usize) -> KSubsetsLex {
    let indices = if k > n { None } else { Some((0..k).collect()) };
    KSubsetsLex { n, k, indices }
}

pub struct KSubsetsLex {
    n: usize,
    k: usize,
    indices: Option<Vec<usize>>,
}

impl Iterator for KSubsetsLex {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let indices = self.indices.as_mut()?;
        let result = SubsetMask::from_indices(indices.iter().copied());
        // advance the odometer: bump the rightmost index that can move
        let mut done = true;
        for i in (0..self.k).rev() {
            if indices[i] < self.n - (self.k - i) {
                indices[i] += 1;
                for j in i + 1..self.k {
                    indices[j] = indices[j - 1] + 1;
                }
                done = false;
                break;
            }
        }
        if done {
            self.indices = None;
        }
        Some(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let x = SubsetMask::from_indices([0, 2, 5]);
        assert_eq!(x.len(), 3);
        assert!(x.contains(2));
        assert!(!x.contains(1));
        assert_eq!(x.indices(), vec![0, 2, 5]);
        assert_eq!(x.complement_in(6), SubsetMask::from_indices([1, 3, 4]));
        assert_eq!(format!("{x:?}"), "{0,2,5}");
        assert!(SubsetMask::from_indices([0, 2]).is_subset_of(x));
        assert_eq!(x - SubsetMask::singleton(2), SubsetMask::from_indices([0, 5]));
        assert_eq!(SubsetMask::full(3), SubsetMask(0b111));
    }

    #[test]
    fn subsets_of_counts_and_order() {
        let mask = SubsetMask::from_indices([1, 3, 4]);
        let all: Vec<_> = subsets_of(mask).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], SubsetMask::EMPTY);
        assert_eq!(*all.last().unwrap(), mask);
        for w in all.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn k_subsets_gosper() {
        let got: Vec<_> = k_subsets(4, 2).map(|m| m.0).collect();
        assert_eq!(got, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(5, 6).count(), 0);
        assert_eq!(k_subsets(10, 4).count(), 210);
    }

    #[test]
    fn k_subsets_lex_order() {
        let got: Vec<Vec<usize>> = k_subsets_lex(4, 2).map(|m| m.indices()).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        // lex and numeric order genuinely differ
        let lex: Vec<_> = k_subsets_lex(4, 2).collect();
        let num: Vec<_> = k_subsets(4, 2).collect();
        assert_ne!(lex, num);
        assert_eq!(k_subsets_lex(0, 0).count(), 1);
        assert_eq!(k_subsets_lex(3, 4).count(), 0);
    }

    #[test]
    fn k_subsets_of_arbitrary_set() {
        let mask = SubsetMask::from_indices([1, 4, 6]);
        let got: Vec<_> = k_subsets_of(mask, 2).collect();
        assert_eq!(
            got,
            vec![
                SubsetMask::from_indices([1, 4]),
                SubsetMask::from_indices([1, 6]),
                SubsetMask::from_indices([4, 6]),
            ]
        );
    }
}
