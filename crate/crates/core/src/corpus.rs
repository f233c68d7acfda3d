//! Built-in instances: small uniform matroids, the cycle matroid of K4
//! entered as a circuit list, and the rank-3 matroid made of two disjoint
//! 4-point lines.

use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// Circuits of M(K4) over edges e0..e5 = 12, 13, 14, 23, 24, 34: the four
/// triangles and the three 4-cycles.
pub fn k4_circuits() -> Vec<SubsetMask> {
    vec![
        // triangles on vertex sets 123, 124, 134, 234
        SubsetMask::from_indices([0, 1, 3]),
        SubsetMask::from_indices([0, 2, 4]),
        SubsetMask::from_indices([1, 2, 5]),
        SubsetMask::from_indices([3, 4, 5]),
        // 4-cycles 1-2-3-4, 1-2-4-3, 1-3-2-4
        SubsetMask::from_indices([0, 2, 3, 5]),
        SubsetMask::from_indices([0, 1, 4, 5]),
        SubsetMask::from_indices([1, 2, 3, 4]),
    ]
}

/// The cycle matroid of K4: rank 3 on 6 elements.
pub fn k4() -> Matroid {
    Matroid::from_circuits(6, &k4_circuits()).expect("K4 circuit list is a matroid")
}

/// Two disjoint 4-point lines spanning rank 3: elements 0-3 on one line,
/// 4-7 on the other. Circuits are the triples inside either line and the
/// balanced 2+2 quadruples across them.
pub fn two_disjoint_lines() -> Matroid {
    let mut circuits = Vec::new();
    let lines = [
        SubsetMask::from_indices([0, 1, 2, 3]),
        SubsetMask::from_indices([4, 5, 6, 7]),
    ];
    for line in lines {
        for triple in crate::mask::k_subsets_of(line, 3) {
            circuits.push(triple);
        }
    }
    for left in crate::mask::k_subsets_of(lines[0], 2) {
        for right in crate::mask::k_subsets_of(lines[1], 2) {
            circuits.push(left | right);
        }
    }
    Matroid::from_circuits(8, &circuits).expect("two-lines circuit list is a matroid")
}

/// Named instances shipped with the CLI's seed-corpus flag.
pub fn seed_entries() -> Vec<(&'static str, Matroid)> {
    let u = |r, n| Matroid::uniform(r, n).unwrap();
    vec![
        ("u_0_3", u(0, 3)),
        ("u_1_2", u(1, 2)),
        ("u_1_3", u(1, 3)),
        ("u_1_4", u(1, 4)),
        ("u_2_3", u(2, 3)),
        ("u_2_4", u(2, 4)),
        ("u_2_5", u(2, 5)),
        ("u_2_6", u(2, 6)),
        ("u_3_6", u(3, 6)),
        ("k4", k4()),
        ("two_lines", two_disjoint_lines()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_rank_three_and_valid() {
        let m = k4();
        assert_eq!(m.n(), 6);
        assert_eq!(m.full_rank(), 3);
        assert!(m.validate().passed());
        assert_eq!(m.circuits().members(), k4_circuits_sorted().as_slice());
    }

    fn k4_circuits_sorted() -> Vec<SubsetMask> {
        let mut c = k4_circuits();
        c.sort_by_key(|x| (x.len(), x.0));
        c
    }

    #[test]
    fn k4_cocircuits_are_stars_and_cuts() {
        // stars of the four vertices and the three 4-element cuts
        let mut expected = vec![
            SubsetMask::from_indices([0, 1, 2]),
            SubsetMask::from_indices([0, 3, 4]),
            SubsetMask::from_indices([1, 3, 5]),
            SubsetMask::from_indices([2, 4, 5]),
            SubsetMask::from_indices([1, 2, 3, 4]),
            SubsetMask::from_indices([0, 2, 3, 5]),
            SubsetMask::from_indices([0, 1, 4, 5]),
        ];
        expected.sort_by_key(|x| (x.len(), x.0));
        assert_eq!(k4().cocircuits().members(), expected.as_slice());
    }

    #[test]
    fn k4_singletons_are_flats() {
        // no 2-element circuits, so singleton closures are themselves
        let m = k4();
        for e in 0..6 {
            assert_eq!(m.closure(SubsetMask::singleton(e)), SubsetMask::singleton(e));
        }
    }

    #[test]
    fn k4_is_self_dual_on_families() {
        let m = k4();
        assert_eq!(m.dual().circuits(), m.cocircuits());
        assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn two_lines_shape() {
        let m = two_disjoint_lines();
        assert_eq!(m.n(), 8);
        assert_eq!(m.full_rank(), 3);
        assert!(m.validate().passed());
        // closures of pairs inside a line recover the whole line
        let line = SubsetMask::from_indices([0, 1, 2, 3]);
        assert_eq!(m.closure(SubsetMask::from_indices([0, 1])), line);
        assert_eq!(m.closure(SubsetMask::from_indices([2, 3])), line);
        // cross pairs are their own closures
        let cross = SubsetMask::from_indices([0, 4]);
        assert_eq!(m.closure(cross), cross);
    }

    #[test]
    fn seed_entries_all_validate() {
        for (name, m) in seed_entries() {
            assert!(m.validate().passed(), "{name}");
        }
    }
}
