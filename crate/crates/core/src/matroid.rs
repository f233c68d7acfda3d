//! Rank-table matroids on small ground sets.
//!
//! A matroid is stored as its full rank table: one byte per subset of the
//! ground set, indexed by bitmask. Every derived query (closure, duality,
//! minors, connectivity, circuit predicates) is a table lookup or a linear
//! scan, which is the right trade at desk scale.

use crate::error::{Error, Result};
use crate::mask::{subsets_of, SubsetMask};

/// Default limit on the ground set size. The rank table stores one byte per
/// subset, so n = 22 bounds the allocation at 4 MiB.
pub const DEFAULT_CAP: usize = 22;

/// Hard ceiling on any cap override (a 2^28-entry table is 256 MiB).
pub const MAX_CAP: usize = 28;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if cap > MAX_CAP {
        return Err(Error::Parameter(format!(
            "cap {cap} exceeds the hard ceiling {MAX_CAP}"
        )));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    cap: usize,
    ranks: Vec<u8>,
}

/// Identity is the ground set plus the rank table; the cap is a policy knob.
impl PartialEq for Matroid {
    fn eq(&self, other: &Matroid) -> bool {
        self.n == other.n && self.ranks == other.ranks
    }
}

impl Eq for Matroid {}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, rank={})", self.n, self.full_rank())
    }
}

impl Matroid {
    fn from_parts(n: usize, cap: usize, ranks: Vec<u8>) -> Matroid {
        debug_assert_eq!(ranks.len(), 1usize << n);
        Matroid { n, cap, ranks }
    }

    /// For constructions whose output is a matroid by theory (extensions by
    /// validated modular cuts); callers are responsible for that guarantee.
    pub(crate) fn from_rank_table_with_cap_unchecked(
        n: usize,
        cap: usize,
        ranks: Vec<u8>,
    ) -> Matroid {
        Matroid::from_parts(n, cap, ranks)
    }

    /// The uniform matroid: every subset of at most `rank` elements is
    /// independent.
    pub fn uniform(rank: usize, n: usize) -> Result<Matroid> {
        Matroid::uniform_with_cap(rank, n, DEFAULT_CAP)
    }

    pub fn uniform_with_cap(rank: usize, n: usize, cap: usize) -> Result<Matroid> {
        if rank > n {
            return Err(Error::Parameter(format!(
                "uniform matroid needs rank <= n, got rank {rank}, n {n}"
            )));
        }
        check_cap(n, cap)?;
        let ranks = (0u32..1 << n)
            .map(|bits| (bits.count_ones() as usize).min(rank) as u8)
            .collect();
        Ok(Matroid::from_parts(n, cap, ranks))
    }

    /// Reconstructs a matroid from its circuit family.
    ///
    /// The input must satisfy the circuit axioms: no empty set, pairwise
    /// incomparable members, and weak elimination. Violations are reported
    /// with a witness. The rank of a subset is the size of the greedily built
    /// maximal subset containing no listed circuit; greedy is exact on
    /// matroids.
    pub fn from_circuits(n: usize, circuits: &[SubsetMask]) -> Result<Matroid> {
        Matroid::from_circuits_with_cap(n, circuits, DEFAULT_CAP)
    }

    pub fn from_circuits_with_cap(
        n: usize,
        circuits: &[SubsetMask],
        cap: usize,
    ) -> Result<Matroid> {
        check_cap(n, cap)?;
        let ground = SubsetMask::full(n);
        for &c in circuits {
            if c.is_empty() {
                return Err(Error::InvalidCircuits {
                    reason: "the empty set cannot be a circuit".into(),
                    witness: vec![c],
                });
            }
            if !c.is_subset_of(ground) {
                return Err(Error::InvalidCircuits {
                    reason: format!("circuit outside the {n}-element ground set"),
                    witness: vec![c],
                });
            }
        }
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return Err(Error::InvalidCircuits {
                        reason: "comparable circuits".into(),
                        witness: vec![a, b],
                    });
                }
            }
        }

        // dependent[X] <=> X contains a listed circuit, via superset closure
        let size = 1usize << n;
        let mut dependent = vec![false; size];
        for &c in circuits {
            dependent[c.0 as usize] = true;
        }
        for i in 0..n {
            let bit = 1usize << i;
            for x in 0..size {
                if x & bit != 0 && dependent[x ^ bit] {
                    dependent[x] = true;
                }
            }
        }

        // weak elimination: distinct circuits meeting at x must leave a
        // circuit inside their union minus x
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                let common = a & b;
                for x in common.iter() {
                    let rest = (a | b).without(x);
                    if !dependent[rest.0 as usize] {
                        return Err(Error::InvalidCircuits {
                            reason: format!(
                                "elimination fails: no circuit inside the union minus {x}"
                            ),
                            witness: vec![a, b],
                        });
                    }
                }
            }
        }

        let ranks = (0..size)
            .map(|x| {
                let mut chosen = 0usize;
                let mut count = 0u8;
                let mut rest = x;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    if !dependent[chosen | bit] {
                        chosen |= bit;
                        count += 1;
                    }
                    rest ^= bit;
                }
                count
            })
            .collect();
        Ok(Matroid::from_parts(n, cap, ranks))
    }

    /// Builds a matroid directly from a rank table, validating the axioms.
    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Matroid> {
        check_cap(n, DEFAULT_CAP)?;
        if ranks.len() != 1usize << n {
            return Err(Error::Parameter(format!(
                "rank table must have 2^{n} entries, got {}",
                ranks.len()
            )));
        }
        let m = Matroid::from_parts(n, DEFAULT_CAP, ranks);
        let report = m.validate();
        if let Some(v) = report.violations().first() {
            return Err(Error::Parameter(format!(
                "rank table violates {:?} (witness {:?})",
                v.axiom, v.witness
            )));
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The full ground set as a mask.
    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn rank(&self, x: SubsetMask) -> usize {
        debug_assert!(x.is_subset_of(self.ground()));
        self.ranks[x.0 as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.ranks[self.ranks.len() - 1] as usize
    }

    /// Rank in the dual: `r*(X) = |X| + r(E - X) - r(M)`.
    pub fn corank(&self, x: SubsetMask) -> usize {
        x.len() + self.rank(self.ground() - x) - self.full_rank()
    }

    pub fn dual_rank(&self) -> usize {
        self.n - self.full_rank()
    }

    pub fn is_independent(&self, x: SubsetMask) -> bool {
        self.rank(x) == x.len()
    }

    pub fn is_spanning(&self, x: SubsetMask) -> bool {
        self.rank(x) == self.full_rank()
    }

    /// `cl(X) = {e : r(X + e) = r(X)}`.
    pub fn closure(&self, x: SubsetMask) -> SubsetMask {
        let r = self.rank(x);
        let mut cl = x;
        for e in (self.ground() - x).iter() {
            if self.rank(x.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    pub fn is_flat(&self, x: SubsetMask) -> bool {
        self.closure(x) == x
    }

    /// All flats, in increasing numeric order.
    pub fn flats(&self) -> Vec<SubsetMask> {
        subsets_of(self.ground())
            .filter(|&x| self.is_flat(x))
            .collect()
    }

    /// The dual matroid. An involution, bit-exact on the table.
    pub fn dual(&self) -> Matroid {
        let ranks = (0..self.ranks.len())
            .map(|x| self.corank(SubsetMask(x as u32)) as u8)
            .collect();
        Matroid::from_parts(self.n, self.cap, ranks)
    }

    /// Deletes the elements of `gone`, re-indexing the survivors in
    /// increasing order. The map from old to new indices is returned so
    /// certificates can be transported.
    pub fn delete(&self, gone: SubsetMask) -> (Matroid, Reindex) {
        debug_assert!(gone.is_subset_of(self.ground()));
        let kept = self.ground() - gone;
        let map = Reindex::keeping(self.n, kept);
        let kept_positions = kept.indices();
        let n2 = kept_positions.len();
        let ranks = (0u32..1 << n2)
            .map(|bits| {
                let old = expand(bits, &kept_positions);
                self.ranks[old.0 as usize]
            })
            .collect();
        (Matroid::from_parts(n2, self.cap, ranks), map)
    }

    /// Contracts the elements of `gone`: `r'(X) = r(X + T) - r(T)` on the
    /// remaining ground set, re-indexed.
    pub fn contract(&self, gone: SubsetMask) -> (Matroid, Reindex) {
        debug_assert!(gone.is_subset_of(self.ground()));
        let kept = self.ground() - gone;
        let map = Reindex::keeping(self.n, kept);
        let kept_positions = kept.indices();
        let n2 = kept_positions.len();
        let base = self.rank(gone) as u8;
        let ranks = (0u32..1 << n2)
            .map(|bits| {
                let old = expand(bits, &kept_positions);
                self.ranks[(old | gone).0 as usize] - base
            })
            .collect();
        (Matroid::from_parts(n2, self.cap, ranks), map)
    }

    /// Direct sum; the second summand is re-indexed above the first.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        let cap = self.cap.max(other.cap);
        check_cap(n, cap)?;
        let ranks = (0u32..1 << n)
            .map(|bits| {
                let left = bits & SubsetMask::full(self.n).0;
                let right = bits >> self.n;
                self.ranks[left as usize] + other.ranks[right as usize]
            })
            .collect();
        Ok(Matroid::from_parts(n, cap, ranks))
    }

    /// Checks the rank axioms exhaustively: normalization (r(empty) = 0 and
    /// r(X) <= |X|), unit increase, and local submodularity over all subsets
    /// and element pairs. Local submodularity implies the full axiom.
    pub fn validate(&self) -> ValidationReport {
        const LIMIT: usize = 1024;
        let mut violations = Vec::new();
        let mut truncated = false;
        let push = |violations: &mut Vec<Violation>, v: Violation| {
            if violations.len() < LIMIT {
                violations.push(v);
                true
            } else {
                false
            }
        };

        'scan: for bits in 0..self.ranks.len() {
            let x = SubsetMask(bits as u32);
            let rx = self.ranks[bits] as usize;
            if rx > x.len()
                && !push(
                    &mut violations,
                    Violation {
                        axiom: Axiom::Normalization,
                        witness: vec![x],
                    },
                ) {
                    truncated = true;
                    break 'scan;
                }
            let outside = self.ground() - x;
            for e in outside.iter() {
                let re = self.ranks[bits | 1 << e] as usize;
                if (re < rx || re > rx + 1)
                    && !push(
                        &mut violations,
                        Violation {
                            axiom: Axiom::UnitIncrease,
                            witness: vec![x, SubsetMask::singleton(e)],
                        },
                    ) {
                        truncated = true;
                        break 'scan;
                    }
                for f in outside.iter() {
                    if f <= e {
                        continue;
                    }
                    let rf = self.ranks[bits | 1 << f] as usize;
                    let ref_ = self.ranks[bits | 1 << e | 1 << f] as usize;
                    if re + rf < ref_ + rx
                        && !push(
                            &mut violations,
                            Violation {
                                axiom: Axiom::LocalSubmodularity,
                                witness: vec![x, SubsetMask::singleton(e), SubsetMask::singleton(f)],
                            },
                        ) {
                            truncated = true;
                            break 'scan;
                        }
                }
            }
        }
        ValidationReport {
            violations,
            truncated,
        }
    }

    /// Raw table access, mainly for bit-exact comparisons.
    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }
}

fn expand(bits: u32, positions: &[usize]) -> SubsetMask {
    let mut out = 0u32;
    let mut rest = bits;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << positions[i];
        rest &= rest - 1;
    }
    SubsetMask(out)
}

/// Old-to-new index map produced by minor operations.
#[derive(Clone, Debug)]
pub struct Reindex {
    old_to_new: Vec<Option<usize>>,
}

impl Reindex {
    fn keeping(n: usize, kept: SubsetMask) -> Reindex {
        let mut old_to_new = vec![None; n];
        for (new, old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        Reindex { old_to_new }
    }

    pub fn element(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Transports a mask; `None` if it touches a removed element.
    pub fn mask(&self, m: SubsetMask) -> Option<SubsetMask> {
        let mut out = SubsetMask::EMPTY;
        for old in m.iter() {
            out = out.with(self.element(old)?);
        }
        Some(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Normalization,
    UnitIncrease,
    LocalSubmodularity,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<SubsetMask>,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    violations: Vec<Violation>,
    truncated: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }
}
