//! Shared test support: independent oracles and instance generators.
//!
//! The oracles here deliberately avoid the matroid engine's own code paths:
//! graph ranks come from union-find over explicit edge lists, uniform ranks
//! from the min(|X|, r) formula, so the engine can be checked against
//! something it does not implement.

#![allow(dead_code)]

use proptest::prelude::*;
use spikes_core::{build_spike, corpus, Matroid, SubsetMask};

/// Edges of K4 in the fixed labeling e0..e5 = 12, 13, 14, 23, 24, 34.
pub const K4_EDGES: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Graph rank of an edge subset of K4: vertices touched minus components,
/// via union-find over the explicit edge list.
pub fn k4_graph_rank(edges: SubsetMask) -> usize {
    let mut parent = [0usize, 1, 2, 3, 4];
    fn find(parent: &mut [usize; 5], v: usize) -> usize {
        let mut v = v;
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut rank = 0;
    for e in edges.iter() {
        let (a, b) = K4_EDGES[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            rank += 1;
        }
    }
    rank
}

/// All bonds (minimal edge cuts) of K4: minimal sets whose removal lowers
/// the graph rank.
pub fn k4_bonds() -> Vec<SubsetMask> {
    let full = SubsetMask::full(6);
    let mut bonds = Vec::new();
    for bits in 1u32..1 << 6 {
        let d = SubsetMask(bits);
        if k4_graph_rank(full - d) == 3 {
            continue;
        }
        let minimal = d
            .iter()
            .all(|e| k4_graph_rank(full - d.without(e)) == 3);
        if minimal {
            bonds.push(d);
        }
    }
    bonds.sort_by_key(|x| (x.len(), x.0));
    bonds
}

/// A j-separation scan working from an arbitrary rank function rather than
/// the engine's table.
pub fn separation_exists(n: usize, rank: impl Fn(SubsetMask) -> usize, below: usize) -> bool {
    if n < 2 || below < 2 {
        return false;
    }
    let full_rank = rank(SubsetMask::full(n));
    let mut bits = 1u32;
    while bits < (1u32 << n) - 1 {
        let side = SubsetMask(bits);
        let lambda = rank(side) + rank(side.complement_in(n)) - full_rank;
        let min_size = side.len().min(n - side.len());
        if lambda < min_size.min(below - 1) {
            return true;
        }
        bits += 2; // only sides containing element 0
    }
    false
}

/// Relaxes a circuit-hyperplane: turns it into a basis by bumping its one
/// table entry, re-validating the axioms.
pub fn relax(m: &Matroid, x: SubsetMask) -> Matroid {
    assert_eq!(m.rank(x) + 1, x.len(), "not a circuit-size set");
    assert_eq!(m.rank(x) + 1, m.full_rank(), "not of hyperplane rank");
    assert!(m.is_flat(x), "not a flat");
    let mut table = m.rank_table().to_vec();
    table[x.0 as usize] += 1;
    Matroid::from_rank_table(m.n(), table).expect("relaxation of a circuit-hyperplane")
}

/// Corpus of at least 20 matroids with n <= 10 for oracle cross-checks,
/// each with the (s,t) parameters its recognizers are asked about.
pub fn oracle_corpus() -> Vec<(String, Matroid, usize, usize)> {
    let u = |r, n| Matroid::uniform(r, n).unwrap();
    let spike = |s, t, m| build_spike(s, t, m).unwrap();
    let mut out: Vec<(String, Matroid, usize, usize)> = Vec::new();
    let mut add = |name: &str, m: Matroid, s: usize, t: usize| {
        out.push((name.to_string(), m, s, t));
    };

    // uniform family
    add("u_1_2", u(1, 2), 1, 1);
    add("u_1_4", u(1, 4), 1, 2);
    add("u_1_6", u(1, 6), 1, 3);
    add("u_2_4", u(2, 4), 2, 2);
    add("u_2_6", u(2, 6), 2, 2);
    add("u_3_6", u(3, 6), 3, 3);
    add("u_2_5", u(2, 5), 2, 2);
    add("u_0_4", u(0, 4), 1, 1);

    // direct sums
    let pair = u(1, 2);
    let two_pairs = pair.direct_sum(&pair).unwrap();
    let three_pairs = two_pairs.direct_sum(&pair).unwrap();
    add("pair_sum_2", two_pairs.clone(), 1, 1);
    add("pair_sum_3", three_pairs, 1, 1);
    add("u23_plus_u12", u(2, 3).direct_sum(&pair).unwrap(), 1, 1);
    add("u24_plus_u24", u(2, 4).direct_sum(&u(2, 4)).unwrap(), 2, 2);

    add("k4", corpus::k4(), 2, 2);
    add("two_lines", corpus::two_disjoint_lines(), 2, 2);

    // factory spikes with n <= 10
    for (s, t, m) in [(1, 1, 4), (1, 1, 5), (1, 2, 4), (1, 2, 5), (2, 2, 4), (1, 3, 5), (2, 3, 5), (2, 1, 4), (3, 1, 5), (3, 2, 5)] {
        let (mat, _, _) = spike(s, t, m);
        add(&format!("spike_{s}_{t}_{m}"), mat, s, t);
    }

    // perturbed spikes: one circuit removed, must be rejected by recognizers
    for k in [2usize, 3, 4, 5] {
        let (mat, cert, _) = spike(1, 1, k);
        let mut circuits: Vec<SubsetMask> = mat.circuits().members().to_vec();
        let gone = cert.arm(k - 1);
        circuits.retain(|&c| c != gone);
        let perturbed = Matroid::from_circuits(2 * k, &circuits).unwrap();
        add(&format!("perturbed_pair_sum_{k}"), perturbed, 1, 1);
    }
    // a relaxed (2,2)-spike: the relaxed arm union is no longer a circuit
    let (m224, cert224, _) = spike(2, 2, 4);
    let relaxed = relax(&m224, cert224.arm(0) | cert224.arm(1));
    add("relaxed_spike_2_2_4", relaxed, 2, 2);

    assert!(out.len() >= 20);
    out
}

/// Strategy over a varied pool of small matroids.
pub fn small_matroid() -> impl Strategy<Value = Matroid> {
    let uniform = (0usize..=8).prop_flat_map(|n| {
        (0..=n).prop_map(move |r| Matroid::uniform(r, n).unwrap())
    });
    let sums = ((0usize..=4), (0usize..=4)).prop_flat_map(|(n1, n2)| {
        ((0..=n1), (0..=n2)).prop_map(move |(r1, r2)| {
            Matroid::uniform(r1, n1)
                .unwrap()
                .direct_sum(&Matroid::uniform(r2, n2).unwrap())
                .unwrap()
        })
    });
    let spikes = ((1usize..=2), (1usize..=2)).prop_flat_map(|(s, t)| {
        ((s + t)..=5).prop_map(move |m| build_spike(s, t, m).unwrap().0)
    });
    let named = prop_oneof![Just(corpus::k4()), Just(corpus::two_disjoint_lines())];
    let base = prop_oneof![uniform, sums, spikes, named];
    // close under duality and small minors
    (base, 0u32..4, any::<u32>()).prop_map(|(m, op, bits)| match op {
        0 => m,
        1 => m.dual(),
        2 => {
            let keep_out = SubsetMask(bits & m.ground().0 & 0b111);
            m.delete(keep_out).0
        }
        _ => {
            let gone = SubsetMask(bits & m.ground().0 & 0b101);
            m.contract(gone).0
        }
    })
}
