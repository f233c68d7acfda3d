//! Spike recognition: complete search for a pair partition of the ground set
//! in which every union of s pairs is a circuit and every union of t pairs a
//! cocircuit.

use crate::certificate::SpikeCertificate;
use crate::mask::{k_subsets, SubsetMask};
use crate::matroid::Matroid;
use crate::partition::PairPartition;

/// Searches for an (s,t)-spike certificate.
///
/// The search is complete: it pairs the smallest uncovered element with each
/// larger candidate in increasing order and recurses, so the first full
/// partition found is the lexicographically least valid one under that
/// canonical ordering. A partial partition is cut as soon as some s chosen
/// pairs fail the circuit test or some t chosen pairs fail the cocircuit
/// test. Returns `None` when n is odd, n < 2 max(s,t), or no partition
/// works.
pub fn recognize_spike(m: &Matroid, s: usize, t: usize) -> Option<SpikeCertificate> {
    assert!(s >= 1 && t >= 1, "spike parameters must be positive");
    let n = m.n();
    if !n.is_multiple_of(2) || n < 2 * s.max(t) {
        return None;
    }
    let mut pairs = Vec::with_capacity(n / 2);
    if !search(m, s, t, &mut pairs, SubsetMask::EMPTY) {
        return None;
    }
    let partition = PairPartition::new(pairs).expect("search builds disjoint pairs");
    Some(SpikeCertificate::new(s, t, partition).expect("search respects the order bound"))
}

fn search(
    m: &Matroid,
    s: usize,
    t: usize,
    pairs: &mut Vec<SubsetMask>,
    covered: SubsetMask,
) -> bool {
    if covered == m.ground() {
        return true;
    }
    let rest = m.ground() - covered;
    let z = rest.min_element().unwrap();
    for w in rest.without(z).iter() {
        let pair = SubsetMask::from_indices([z, w]);
        if admits_pair(m, s, t, pairs, pair) {
            pairs.push(pair);
            if search(m, s, t, pairs, covered | pair) {
                return true;
            }
            pairs.pop();
        }
    }
    false
}

/// Checks every s-subset and t-subset of the chosen pairs that includes the
/// new pair; older subsets were checked when their own last pair arrived.
fn admits_pair(
    m: &Matroid,
    s: usize,
    t: usize,
    pairs: &[SubsetMask],
    new_pair: SubsetMask,
) -> bool {
    let have = pairs.len();
    if have + 1 >= s {
        for ids in k_subsets(have, s - 1) {
            let mut union = new_pair;
            for i in ids.iter() {
                union = union | pairs[i];
            }
            if !m.is_circuit(union) {
                return false;
            }
        }
    }
    if have + 1 >= t {
        for ids in k_subsets(have, t - 1) {
            let mut union = new_pair;
            for i in ids.iter() {
                union = union | pairs[i];
            }
            if !m.is_cocircuit(union) {
                return false;
            }
        }
    }
    true
}

/// Brute-force cross-check: enumerates every pair partition of the ground
/// set, with no pruning, and keeps those whose unions pass the full echidna
/// and coechidna tests. Factorial in n/2; meant for n <= 12.
pub fn all_spike_partitions(m: &Matroid, s: usize, t: usize) -> Vec<SpikeCertificate> {
    assert!(s >= 1 && t >= 1, "spike parameters must be positive");
    let n = m.n();
    if !n.is_multiple_of(2) || n < 2 * s.max(t) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pairs = Vec::with_capacity(n / 2);
    enumerate(m, s, t, &mut pairs, SubsetMask::EMPTY, &mut out);
    out
}

fn enumerate(
    m: &Matroid,
    s: usize,
    t: usize,
    pairs: &mut Vec<SubsetMask>,
    covered: SubsetMask,
    out: &mut Vec<SpikeCertificate>,
) {
    if covered == m.ground() {
        let partition = PairPartition::new(pairs.clone()).expect("disjoint pairs");
        if crate::echidna::is_echidna(m, &partition, s, false)
            && crate::echidna::is_echidna(m, &partition, t, true)
        {
            out.push(SpikeCertificate::new(s, t, partition).expect("order bound holds"));
        }
        return;
    }
    let rest = m.ground() - covered;
    let z = rest.min_element().unwrap();
    for w in rest.without(z).iter() {
        let pair = SubsetMask::from_indices([z, w]);
        pairs.push(pair);
        enumerate(m, s, t, pairs, covered | pair, out);
        pairs.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::PairPartition;

    #[test]
    fn pair_sum_is_a_11_spike() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let m = u12.direct_sum(&u12).unwrap().direct_sum(&u12).unwrap();
        let cert = recognize_spike(&m, 1, 1).unwrap();
        assert_eq!(
            cert.partition(),
            &PairPartition::from_index_pairs(&[(0, 1), (2, 3), (4, 5)]).unwrap()
        );
    }

    #[test]
    fn u24_is_not_a_22_spike() {
        // the union of two pairs is all four elements, never a circuit
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert!(recognize_spike(&u24, 2, 2).is_none());
        assert!(all_spike_partitions(&u24, 2, 2).is_empty());
    }

    #[test]
    fn u14_is_a_12_spike_with_canonical_pairs() {
        let u14 = Matroid::uniform(1, 4).unwrap();
        let cert = recognize_spike(&u14, 1, 2).unwrap();
        assert_eq!(
            cert.partition(),
            &PairPartition::from_index_pairs(&[(0, 1), (2, 3)]).unwrap()
        );
    }

    #[test]
    fn odd_or_small_ground_sets_are_rejected() {
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert!(recognize_spike(&u13, 1, 1).is_none());
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(recognize_spike(&u12, 2, 2).is_none());
        assert!(recognize_spike(&Matroid::uniform(0, 0).unwrap(), 1, 1).is_none());
    }

    #[test]
    fn oracle_lists_every_valid_partition_of_u14() {
        // all three pairings of four elements work for (1,2): pairs are
        // circuits and the unique cocircuit is the whole set
        let u14 = Matroid::uniform(1, 4).unwrap();
        let all = all_spike_partitions(&u14, 1, 2);
        assert_eq!(all.len(), 3);
        assert_eq!(all[0], recognize_spike(&u14, 1, 2).unwrap());
    }
}
