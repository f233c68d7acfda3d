//! Modular cuts and single-element extensions.
//!
//! A modular cut is a family of flats that is closed upward (every flat
//! containing a member is in the family) and closed under intersecting
//! modular pairs; each one determines a single-element extension in which
//! the new element lies in the closure of exactly the sets whose closure is
//! in the cut.

use crate::error::{Error, Result};
use crate::mask::{subsets_of, SubsetMask};
use crate::matroid::Matroid;

#[derive(Clone, Debug)]
pub enum CutViolation {
    /// `superflat` contains the member `member` but is not listed.
    NotUpwardClosed {
        member: SubsetMask,
        superflat: SubsetMask,
    },
    /// A modular pair of members whose intersection is not listed.
    MissingModularIntersection {
        first: SubsetMask,
        second: SubsetMask,
        meet: SubsetMask,
    },
}

impl std::fmt::Display for CutViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CutViolation::NotUpwardClosed { member, superflat } => write!(
                f,
                "flat {superflat:?} contains member {member:?} but is not listed"
            ),
            CutViolation::MissingModularIntersection { first, second, meet } => write!(
                f,
                "modular pair {first:?}, {second:?} has unlisted intersection {meet:?}"
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CutCheck {
    pub violation: Option<CutViolation>,
}

impl CutCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks whether an explicit family of flats is a modular cut. Listing a
/// non-flat is an error; a failed closure condition is reported with a
/// witness.
pub fn is_modular_cut(m: &Matroid, flats: &[SubsetMask]) -> Result<CutCheck> {
    for &f in flats {
        if !f.is_subset_of(m.ground()) {
            return Err(Error::Parameter(format!(
                "{f:?} is outside the ground set"
            )));
        }
        if !m.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
    }
    let mut members: Vec<SubsetMask> = flats.to_vec();
    members.sort();
    members.dedup();
    let listed = |x: SubsetMask| members.binary_search(&x).is_ok();

    // upward closure against the full flat lattice
    for g in subsets_of(m.ground()) {
        if !m.is_flat(g) || listed(g) {
            continue;
        }
        if let Some(&member) = members.iter().find(|&&f| f.is_subset_of(g)) {
            return Ok(CutCheck {
                violation: Some(CutViolation::NotUpwardClosed {
                    member,
                    superflat: g,
                }),
            });
        }
    }

    // modular pairs: r(F1) + r(F2) = r(F1 u F2) + r(F1 n F2)
    for (i, &f1) in members.iter().enumerate() {
        for &f2 in &members[i + 1..] {
            if m.rank(f1) + m.rank(f2) == m.rank(f1 | f2) + m.rank(f1 & f2) {
                let meet = f1 & f2;
                if !listed(meet) {
                    return Ok(CutCheck {
                        violation: Some(CutViolation::MissingModularIntersection {
                            first: f1,
                            second: f2,
                            meet,
                        }),
                    });
                }
            }
        }
    }
    Ok(CutCheck { violation: None })
}

/// A validated modular cut, stored by its minimal members. Membership of an
/// arbitrary flat is tested against the minimal members; the full family is
/// expanded on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCut {
    minimal: Vec<SubsetMask>,
    n: usize,
}

impl ModularCut {
    /// Builds a cut from an explicit member list, validating both closure
    /// conditions.
    pub fn from_members(m: &Matroid, members: &[SubsetMask]) -> Result<ModularCut> {
        let check = is_modular_cut(m, members)?;
        if let Some(v) = check.violation {
            return Err(Error::NotAModularCut(v.to_string()));
        }
        Ok(ModularCut::from_members_unchecked(m.n(), members))
    }

    pub(crate) fn from_members_unchecked(n: usize, members: &[SubsetMask]) -> ModularCut {
        let mut minimal: Vec<SubsetMask> = Vec::new();
        for &f in members {
            if members.iter().any(|&g| g != f && g.is_subset_of(f)) {
                continue;
            }
            if !minimal.contains(&f) {
                minimal.push(f);
            }
        }
        minimal.sort();
        ModularCut { minimal, n }
    }

    /// The principal cut: all flats containing the given flat. Always a
    /// modular cut.
    pub fn principal(m: &Matroid, f: SubsetMask) -> Result<ModularCut> {
        if !m.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
        Ok(ModularCut {
            minimal: vec![f],
            n: m.n(),
        })
    }

    /// The cut containing only the ground set; its extension adds a free
    /// element.
    pub fn trivial(m: &Matroid) -> ModularCut {
        ModularCut {
            minimal: vec![m.ground()],
            n: m.n(),
        }
    }

    /// The cut of all flats; its extension adds a loop.
    pub fn all_flats(m: &Matroid) -> ModularCut {
        ModularCut {
            minimal: vec![m.closure(SubsetMask::EMPTY)],
            n: m.n(),
        }
    }

    /// The empty cut; its extension adds a coloop.
    pub fn empty(n: usize) -> ModularCut {
        ModularCut {
            minimal: Vec::new(),
            n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.minimal.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minimal_members(&self) -> &[SubsetMask] {
        &self.minimal
    }

    /// Membership test for a flat.
    pub fn contains_flat(&self, f: SubsetMask) -> bool {
        self.minimal.iter().any(|&g| g.is_subset_of(f))
    }

    /// Expands the full member family against the host's flats.
    pub fn members(&self, m: &Matroid) -> Vec<SubsetMask> {
        debug_assert_eq!(m.n(), self.n);
        subsets_of(m.ground())
            .filter(|&g| m.is_flat(g) && self.contains_flat(g))
            .collect()
    }
}

/// Single-element extension by a modular cut. The new element gets index n.
/// For subsets X of the old ground set: r'(X) = r(X), and r'(X + e) = r(X)
/// when cl(X) is in the cut, r(X) + 1 otherwise.
pub fn extend_by_modular_cut(m: &Matroid, cut: &ModularCut) -> Result<Matroid> {
    if cut.n() != m.n() {
        return Err(Error::Parameter(format!(
            "cut is over {} elements, matroid has {}",
            cut.n(),
            m.n()
        )));
    }
    let n = m.n();
    if n + 1 > m.cap() {
        return Err(Error::CapExceeded {
            n: n + 1,
            cap: m.cap(),
        });
    }
    let size = 1usize << n;
    let mut ranks = vec![0u8; size << 1];
    for bits in 0..size {
        let x = SubsetMask(bits as u32);
        let r = m.rank(x) as u8;
        ranks[bits] = r;
        let bump = if cut.contains_flat(m.closure(x)) { 0 } else { 1 };
        ranks[bits | size] = r + bump;
    }
    let out = Matroid::from_rank_table_with_cap_unchecked(n + 1, m.cap(), ranks);
    Ok(out)
}

/// Extension by the trivial cut: the new element is free (in no closure
/// short of a spanning one).
pub fn free_extension(m: &Matroid) -> Result<Matroid> {
    extend_by_modular_cut(m, &ModularCut::trivial(m))
}

/// Every modular cut of the host, found by walking all antichains of its
/// flat lattice and keeping those whose upward closure intersects modular
/// pairs inside itself. Exponential; meant for small hosts.
pub fn enumerate_modular_cuts(m: &Matroid) -> Vec<ModularCut> {
    let flats = m.flats();
    let k = flats.len();
    // up[i] = indices of flats containing flats[i]
    let up: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| flats[i].is_subset_of(flats[j]))
                .collect()
        })
        .collect();
    let index_of = |f: SubsetMask| flats.binary_search(&f).expect("meet of flats is a flat");

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    // DFS over antichains in index order
    fn walk(
        start: usize,
        flats: &[SubsetMask],
        up: &[Vec<usize>],
        index_of: &dyn Fn(SubsetMask) -> usize,
        m: &Matroid,
        chosen: &mut Vec<usize>,
        out: &mut Vec<ModularCut>,
    ) {
        // emit the current antichain
        let mut member_flags = vec![false; flats.len()];
        for &c in chosen.iter() {
            for &j in &up[c] {
                member_flags[j] = true;
            }
        }
        let members: Vec<usize> = (0..flats.len()).filter(|&i| member_flags[i]).collect();
        let mut ok = true;
        'pairs: for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let (f1, f2) = (flats[i], flats[j]);
                if m.rank(f1) + m.rank(f2) == m.rank(f1 | f2) + m.rank(f1 & f2)
                    && !member_flags[index_of(f1 & f2)]
                {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            let minimal: Vec<SubsetMask> = chosen.iter().map(|&i| flats[i]).collect();
            out.push(ModularCut {
                minimal,
                n: m.n(),
            });
        }
        for i in start..flats.len() {
            let comparable = chosen
                .iter()
                .any(|&c| flats[c].is_subset_of(flats[i]) || flats[i].is_subset_of(flats[c]));
            if !comparable {
                chosen.push(i);
                walk(i + 1, flats, up, index_of, m, chosen, out);
                chosen.pop();
            }
        }
    }
    walk(0, &flats, &up, &index_of, m, &mut chosen, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cut_gives_free_extension() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        let ext = free_extension(&u12).unwrap();
        assert_eq!(ext, Matroid::uniform(1, 3).unwrap());
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(free_extension(&u24).unwrap(), Matroid::uniform(2, 5).unwrap());
    }

    #[test]
    fn all_flats_cut_adds_a_loop() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let ext = extend_by_modular_cut(&u24, &ModularCut::all_flats(&u24)).unwrap();
        assert_eq!(ext.rank(SubsetMask::singleton(4)), 0);
        assert!(ext.validate().passed());
    }

    #[test]
    fn empty_cut_adds_a_coloop() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let ext = extend_by_modular_cut(&u24, &ModularCut::empty(4)).unwrap();
        assert_eq!(ext.full_rank(), 3);
        assert!(ext.is_cocircuit(SubsetMask::singleton(4)));
        assert!(ext.validate().passed());
    }

    #[test]
    fn ground_set_family_is_a_modular_cut_everywhere() {
        for m in [
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(1, 3).unwrap(),
        ] {
            let check = is_modular_cut(&m, &[m.ground()]).unwrap();
            assert!(check.holds());
        }
    }

    #[test]
    fn non_flat_member_is_an_error() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        // a 2-element set spans U(2,4), so it is not closed
        let err = is_modular_cut(&u24, &[SubsetMask::from_indices([0, 1])]).unwrap_err();
        assert!(matches!(err, Error::NotAFlat(_)));
    }

    #[test]
    fn missing_top_breaks_upward_closure() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        // {0} is a flat; the family {{0}} misses every larger flat above it
        let check = is_modular_cut(&u24, &[SubsetMask::singleton(0)]).unwrap();
        assert!(!check.holds());
        assert!(matches!(
            check.violation,
            Some(CutViolation::NotUpwardClosed { .. })
        ));
    }

    #[test]
    fn extension_closure_matches_cut_membership() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let cut = ModularCut::principal(&u24, SubsetMask::singleton(0)).unwrap();
        let ext = extend_by_modular_cut(&u24, &cut).unwrap();
        assert!(ext.validate().passed());
        for bits in 0..(1u32 << 4) {
            let x = SubsetMask(bits);
            let e_in_closure = ext.closure(x).contains(4);
            assert_eq!(e_in_closure, cut.contains_flat(u24.closure(x)), "x = {x:?}");
        }
    }

    #[test]
    fn two_lines_generators_need_their_upward_closure() {
        let m = crate::corpus::two_disjoint_lines();
        let line1 = SubsetMask::from_indices([0, 1, 2, 3]);
        let line2 = SubsetMask::from_indices([4, 5, 6, 7]);
        // bare generator lists miss the flats above them
        for family in [vec![line1], vec![line1, line2]] {
            let check = is_modular_cut(&m, &family).unwrap();
            assert!(matches!(
                check.violation,
                Some(CutViolation::NotUpwardClosed { .. })
            ));
        }
        // closed upward, the two disjoint lines do form a modular cut: they
        // are not a modular pair (2 + 2 > 3 + 0), so no intersection is owed
        let check = is_modular_cut(&m, &[line1, line2, m.ground()]).unwrap();
        assert!(check.holds());
    }

    #[test]
    fn enumeration_finds_all_cuts_of_a_small_uniform() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        // flats: {}, {0}, {1}, {0,1}... for U(1,2) the flats are {} and {0,1}
        let cuts = enumerate_modular_cuts(&u12);
        // antichains of the 2-chain lattice: {}, {bottom}, {top};
        // all three satisfy the modular condition
        assert_eq!(cuts.len(), 3);
        for cut in &cuts {
            let ext = extend_by_modular_cut(&u12, cut).unwrap();
            assert!(ext.validate().passed());
        }
    }
}
