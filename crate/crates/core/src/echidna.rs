//! Echidnas and coechidnas: pair partitions whose k-fold unions are circuits
//! (respectively cocircuits), plus the verified facts connecting them.

use crate::artifact::dump_counterexample;
use crate::certificate::SpikeCertificate;
use crate::error::{Error, Result};
use crate::mask::k_subsets;
use crate::matroid::Matroid;
use crate::partition::PairPartition;
use crate::property::has_property;

/// True iff the union of every `k` pairs is a circuit of `m` (of the dual
/// when `co` is set). Vacuously true when the partition has fewer than `k`
/// pairs.
pub fn is_echidna(m: &Matroid, partition: &PairPartition, k: usize, co: bool) -> bool {
    debug_assert!(k >= 1);
    debug_assert!(partition.covered().is_subset_of(m.ground()));
    for ids in k_subsets(partition.order(), k) {
        let union = partition.union_of(ids);
        let ok = if co {
            m.is_cocircuit(union)
        } else {
            m.is_circuit(union)
        };
        if !ok {
            return false;
        }
    }
    true
}

fn require_property(m: &Matroid, s: usize, t: usize) -> Result<()> {
    let report = has_property(m, s, 2 * s, t, 2 * t)?;
    if !report.holds {
        return Err(Error::Hypothesis(format!(
            "matroid lacks the ({s},{},{t},{})-property (witness {:?} in no {} of that size)",
            2 * s,
            2 * t,
            report.failing_subset.unwrap_or_default(),
            match report.missing_kind {
                Some(crate::property::WitnessKind::Cocircuit) => "cocircuit",
                _ => "circuit",
            },
        )));
    }
    Ok(())
}

/// Verifies, on a concrete instance, that an s-echidna of order at least
/// s + 2t - 1 in a matroid with the (s,2s,t,2t)-property is also a
/// t-coechidna. This must always hold; a `false` return means the instance
/// contradicts that fact and has been dumped as a counterexample.
pub fn verify_coechidna_implication(
    m: &Matroid,
    partition: &PairPartition,
    s: usize,
    t: usize,
) -> Result<bool> {
    if s < 1 || t < 1 {
        return Err(Error::Parameter("s and t must be positive".into()));
    }
    if !partition.covered().is_subset_of(m.ground()) {
        return Err(Error::Parameter(
            "partition is not inside the ground set".into(),
        ));
    }
    require_property(m, s, t)?;
    if !is_echidna(m, partition, s, false) {
        return Err(Error::Hypothesis(format!(
            "partition is not an {s}-echidna"
        )));
    }
    let needed = s + 2 * t - 1;
    if partition.order() < needed {
        return Err(Error::Hypothesis(format!(
            "echidna order {} is below s + 2t - 1 = {needed}",
            partition.order()
        )));
    }
    if is_echidna(m, partition, t, true) {
        Ok(true)
    } else {
        dump_counterexample(
            "coechidna",
            m,
            &format!("s={s} t={t} order={}", partition.order()),
        );
        Ok(false)
    }
}

/// Grows an s-echidna pair by pair until it covers the ground set, then
/// certifies the result as an (s,t)-spike.
///
/// Each step takes the smallest uncovered element z, finds the first
/// 2s-element circuit (in family order) consisting of s-1 full spines, z,
/// and one further uncovered element z', and adds {z, z'} as a new spine.
/// The hypotheses guarantee such a circuit exists and that the final
/// partition is both an s-echidna and a t-coechidna; failure at either point
/// is dumped as a counterexample.
pub fn extend_echidna(
    m: &Matroid,
    partial: &PairPartition,
    s: usize,
    t: usize,
) -> Result<SpikeCertificate> {
    if s < 1 || t < 1 {
        return Err(Error::Parameter("s and t must be positive".into()));
    }
    if !partial.covered().is_subset_of(m.ground()) {
        return Err(Error::Parameter(
            "partition is not inside the ground set".into(),
        ));
    }
    require_property(m, s, t)?;
    if !is_echidna(m, partial, s, false) {
        return Err(Error::Hypothesis(format!(
            "partition is not an {s}-echidna"
        )));
    }
    let needed = (s + 2 * t - 1).max(2 * s + t - 1).max((3 * s + t).saturating_sub(3));
    if partial.order() < needed {
        return Err(Error::Hypothesis(format!(
            "echidna order {} is below the extension threshold {needed}",
            partial.order()
        )));
    }

    let circuits = m.circuits_of_size(2 * s);
    let mut pairs = partial.pairs().to_vec();
    let mut covered = partial.covered();
    while covered != m.ground() {
        let z = (m.ground() - covered).min_element().unwrap();
        let mut found = None;
        'search: for &c in &circuits {
            if !c.contains(z) {
                continue;
            }
            let outside = c - covered;
            if outside.len() != 2 || !outside.contains(z) {
                continue;
            }
            // the covered part must be exactly s-1 full spines
            let mut full_spines = 0usize;
            for &p in &pairs {
                if p.is_subset_of(c) {
                    full_spines += 1;
                } else if p.intersects(c) {
                    continue 'search;
                }
            }
            if full_spines != s - 1 {
                continue;
            }
            found = Some(outside.without(z).min_element().unwrap());
            break;
        }
        let Some(partner) = found else {
            let artifact = dump_counterexample(
                "echidna-extension",
                m,
                &format!("s={s} t={t} stuck at element {z}, covered {covered:?}"),
            );
            return Err(Error::InvariantViolation {
                check: "echidna extension step".into(),
                artifact,
            });
        };
        let pair = crate::mask::SubsetMask::from_indices([z, partner]);
        covered = covered | pair;
        pairs.push(pair);
    }

    let partition = PairPartition::new(pairs)?;
    let cert = SpikeCertificate::new(s, t, partition)?;
    if let Err(failure) = cert.certifies(m) {
        let artifact = dump_counterexample(
            "echidna-extension",
            m,
            &format!(
                "s={s} t={t}: extended partition fails on arm set {:?}",
                failure.arm_set
            ),
        );
        return Err(Error::InvariantViolation {
            check: "extended partition certifies the spike".into(),
            artifact,
        });
    }
    Ok(cert)
}
