//! Circuit and cocircuit enumeration and predicates.

use crate::mask::{k_subsets, SubsetMask};
use crate::matroid::Matroid;

/// A family of circuits (or cocircuits), sorted by (size, numeric value).
/// Members are minimal dependent sets: no member contains another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitFamily {
    members: Vec<SubsetMask>,
}

impl CircuitFamily {
    pub(crate) fn from_sorted_scan(members: Vec<SubsetMask>) -> CircuitFamily {
        debug_assert!(members
            .windows(2)
            .all(|w| (w[0].len(), w[0].0) < (w[1].len(), w[1].0)));
        CircuitFamily { members }
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, x: SubsetMask) -> bool {
        self.members.contains(&x)
    }

    /// Members of the given size, in numeric order.
    pub fn of_size(&self, k: usize) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().copied().filter(move |c| c.len() == k)
    }
}

impl Matroid {
    /// A circuit is a minimal dependent set: `r(X) = |X| - 1` and every
    /// one-element deletion is independent.
    pub fn is_circuit(&self, x: SubsetMask) -> bool {
        if x.is_empty() || self.rank(x) + 1 != x.len() {
            return false;
        }
        x.iter()
            .all(|e| self.rank(x.without(e)) + 1 == x.len())
    }

    /// A cocircuit is a circuit of the dual, tested through the corank
    /// formula without building the dual table.
    pub fn is_cocircuit(&self, x: SubsetMask) -> bool {
        if x.is_empty() || self.corank(x) + 1 != x.len() {
            return false;
        }
        x.iter()
            .all(|e| self.corank(x.without(e)) + 1 == x.len())
    }

    /// All circuits, scanning subsets in (size, numeric) order.
    pub fn circuits(&self) -> CircuitFamily {
        let mut members = Vec::new();
        for k in 1..=self.n() {
            for x in k_subsets(self.n(), k) {
                if self.is_circuit(x) {
                    members.push(x);
                }
            }
        }
        CircuitFamily::from_sorted_scan(members)
    }

    /// All cocircuits, as a family in the same element indexing.
    pub fn cocircuits(&self) -> CircuitFamily {
        let mut members = Vec::new();
        for k in 1..=self.n() {
            for x in k_subsets(self.n(), k) {
                if self.is_cocircuit(x) {
                    members.push(x);
                }
            }
        }
        CircuitFamily::from_sorted_scan(members)
    }

    /// Circuits of exactly `k` elements, in numeric order.
    pub fn circuits_of_size(&self, k: usize) -> Vec<SubsetMask> {
        if k == 0 || k > self.n() {
            return Vec::new();
        }
        k_subsets(self.n(), k)
            .filter(|&x| self.is_circuit(x))
            .collect()
    }

    pub fn cocircuits_of_size(&self, k: usize) -> Vec<SubsetMask> {
        if k == 0 || k > self.n() {
            return Vec::new();
        }
        k_subsets(self.n(), k)
            .filter(|&x| self.is_cocircuit(x))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::k_subsets;

    #[test]
    fn circuits_of_small_uniforms() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.circuits().members(), &[SubsetMask::full(2)]);

        let u24 = Matroid::uniform(2, 4).unwrap();
        let expected: Vec<_> = k_subsets(4, 3).collect();
        assert_eq!(u24.circuits().members(), expected.as_slice());
    }

    #[test]
    fn cocircuits_of_u14() {
        // dual of U(1,4) is U(3,4); its only circuit is the full set
        let u14 = Matroid::uniform(1, 4).unwrap();
        assert_eq!(u14.cocircuits().members(), &[SubsetMask::full(4)]);
    }

    #[test]
    fn loops_and_free_elements() {
        let m = Matroid::uniform(0, 3).unwrap();
        let singles: Vec<_> = (0..3).map(SubsetMask::singleton).collect();
        assert_eq!(m.circuits().members(), singles.as_slice());
        assert!(m.cocircuits().is_empty());

        let free = Matroid::uniform(3, 3).unwrap();
        assert!(free.circuits().is_empty());
    }

    #[test]
    fn predicates_agree_with_enumeration() {
        let m = Matroid::uniform(2, 5).unwrap();
        let family = m.circuits();
        for bits in 0..(1u32 << 5) {
            let x = SubsetMask(bits);
            assert_eq!(m.is_circuit(x), family.contains(x));
        }
        let cofamily = m.cocircuits();
        for bits in 0..(1u32 << 5) {
            let x = SubsetMask(bits);
            assert_eq!(m.is_cocircuit(x), cofamily.contains(x));
        }
    }

    #[test]
    fn cocircuits_are_dual_circuits() {
        for m in [
            Matroid::uniform(2, 5).unwrap(),
            Matroid::uniform(1, 2)
                .unwrap()
                .direct_sum(&Matroid::uniform(1, 2).unwrap())
                .unwrap(),
        ] {
            assert_eq!(m.cocircuits(), m.dual().circuits());
        }
    }
}
