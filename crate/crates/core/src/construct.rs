//! Building spikes: the elementary-quotient step that turns an (s,t)-spike
//! into an (s,t+1)-spike, its dual lift, tip extensions, and the factory
//! that assembles any (s,t)-spike of order m >= s+t from a direct sum of
//! two-element circuits.

use crate::artifact::dump_counterexample;
use crate::certificate::SpikeCertificate;
use crate::error::{Error, Result};
use crate::mask::{k_subsets, subsets_of, SubsetMask};
use crate::matroid::{Matroid, DEFAULT_CAP};
use crate::modular_cut::{extend_by_modular_cut, ModularCut};
use crate::partition::PairPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOp {
    Quotient,
    Lift,
}

impl StepOp {
    pub fn as_str(self) -> &'static str {
        match self {
            StepOp::Quotient => "quotient",
            StepOp::Lift => "lift",
        }
    }
}

/// One applied construction step, with the parameters it produced.
#[derive(Clone, Debug)]
pub struct BuildStep {
    pub op: StepOp,
    pub s: usize,
    pub t: usize,
    pub rank: usize,
}

/// The build history of a factory spike: the initial order, then one entry
/// per quotient or lift applied. A build of an (s,t)-spike takes exactly
/// (t-1) + (s-1) steps.
#[derive(Clone, Debug)]
pub struct BuildTrace {
    pub initial_order: usize,
    pub steps: Vec<BuildStep>,
}

impl BuildTrace {
    /// `step <k> op=<quotient|lift> s=<s'> t=<t'> rank=<r>` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "step {} op={} s={} t={} rank={}\n",
                k + 1,
                step.op.as_str(),
                step.s,
                step.t,
                step.rank
            ));
        }
        out
    }
}

/// The (1,1)-spike of order m: a direct sum of m two-element circuits.
/// Every pair is simultaneously a circuit and a cocircuit, and the rank is m.
pub fn spike_11(arms: usize) -> Result<(Matroid, SpikeCertificate)> {
    spike_11_with_cap(arms, DEFAULT_CAP)
}

pub fn spike_11_with_cap(arms: usize, cap: usize) -> Result<(Matroid, SpikeCertificate)> {
    if arms < 1 {
        return Err(Error::Parameter("need at least one arm".into()));
    }
    let u12 = Matroid::uniform_with_cap(1, 2, cap)?;
    let mut m = u12.clone();
    for _ in 1..arms {
        m = m.direct_sum(&u12)?;
    }
    let pairs: Vec<(usize, usize)> = (0..arms).map(|i| (2 * i, 2 * i + 1)).collect();
    let cert = SpikeCertificate::new(1, 1, PairPartition::from_index_pairs(&pairs)?)?;
    debug_assert!(cert.certifies(&m).is_ok());
    Ok((m, cert))
}

fn check_certificate(m: &Matroid, cert: &SpikeCertificate) -> Result<()> {
    cert.check_against(m)?;
    if let Err(failure) = cert.certifies(m) {
        return Err(Error::InvalidCertificate(format!(
            "arm set {:?} fails the {:?} condition",
            failure.arm_set, failure.kind
        )));
    }
    Ok(())
}

fn certify_or_dump(
    m: &Matroid,
    s: usize,
    t: usize,
    partition: PairPartition,
    check: &str,
) -> Result<SpikeCertificate> {
    let cert = SpikeCertificate::new(s, t, partition)?;
    if let Err(failure) = cert.certifies(m) {
        let artifact = dump_counterexample(
            check,
            m,
            &format!(
                "s={s} t={t}: arm set {:?} fails the {:?} condition",
                failure.arm_set, failure.kind
            ),
        );
        return Err(Error::InvariantViolation {
            check: check.to_string(),
            artifact,
        });
    }
    Ok(cert)
}

/// The elementary quotient step: extend by an element that blocks every
/// cocircuit formed by t arms, then contract it. The arm partition of the
/// input certifies the output as an (s,t+1)-spike and the rank drops by one.
///
/// With no blocker given, the free extension is used (it always blocks).
/// A supplied blocker is verified against every union-of-t-arms cocircuit
/// rather than trusted.
pub fn quotient_step(
    m: &Matroid,
    cert: &SpikeCertificate,
    blocker: Option<&ModularCut>,
) -> Result<(Matroid, SpikeCertificate)> {
    check_certificate(m, cert)?;
    let (s, t, order) = (cert.s(), cert.t(), cert.order());
    if order < s + t {
        return Err(Error::Hypothesis(format!(
            "quotient construction needs order m >= s + t (m = {order}, s + t = {})",
            s + t
        )));
    }
    let trivial = ModularCut::trivial(m);
    let cut = blocker.unwrap_or(&trivial);
    if cut.is_empty() {
        return Err(Error::Hypothesis(
            "blocker is the empty modular cut; the new element would be a coloop and \
             the quotient could not drop the rank"
                .into(),
        ));
    }
    // blocking: the new element must avoid the closure of every hyperplane
    // complementary to a union-of-t-arms cocircuit
    for ids in k_subsets(order, t) {
        let cocircuit = cert.partition().union_of(ids);
        let hyperplane = m.ground() - cocircuit;
        if cut.contains_flat(m.closure(hyperplane)) {
            return Err(Error::BlockerFailsBlocking(cocircuit));
        }
    }
    let extended = extend_by_modular_cut(m, cut)?;
    let (contracted, _map) = extended.contract(SubsetMask::singleton(m.n()));
    // the new element had the top index, so arm labels are unchanged
    let out_cert = certify_or_dump(
        &contracted,
        s,
        t + 1,
        cert.partition().clone(),
        "quotient-step",
    )?;
    if contracted.full_rank() + 1 != m.full_rank() {
        let artifact = dump_counterexample(
            "quotient-step-rank",
            &contracted,
            &format!("s={s} t={t} rank went {} -> {}", m.full_rank(), contracted.full_rank()),
        );
        return Err(Error::InvariantViolation {
            check: "quotient step drops the rank by exactly one".into(),
            artifact,
        });
    }
    Ok((contracted, out_cert))
}

/// The dual construction: a quotient step on the dual, dualized back.
/// Turns an (s,t)-spike into an (s+1,t)-spike and raises the rank by one.
pub fn lift_step(m: &Matroid, cert: &SpikeCertificate) -> Result<(Matroid, SpikeCertificate)> {
    let (q, qcert) = quotient_step(&m.dual(), &cert.dual(), None)?;
    let out = q.dual();
    let out_cert = certify_or_dump(
        &out,
        cert.s() + 1,
        cert.t(),
        qcert.partition().clone(),
        "lift-step",
    )?;
    Ok((out, out_cert))
}

/// Builds a certified (s,t)-spike of order m: start from the (1,1)-spike,
/// apply the quotient step t-1 times, then the lift step s-1 times. The
/// result has 2m elements and rank m + s - t. Orders below s + t are
/// rejected so every intermediate step satisfies its own hypothesis.
pub fn build_spike(s: usize, t: usize, arms: usize) -> Result<(Matroid, SpikeCertificate, BuildTrace)> {
    build_spike_with_cap(s, t, arms, DEFAULT_CAP)
}

pub fn build_spike_with_cap(
    s: usize,
    t: usize,
    arms: usize,
    cap: usize,
) -> Result<(Matroid, SpikeCertificate, BuildTrace)> {
    if s < 1 || t < 1 {
        return Err(Error::Parameter("s and t must be positive".into()));
    }
    if arms < s + t {
        return Err(Error::Hypothesis(format!(
            "the factory needs order m >= s + t (m = {arms}, s + t = {})",
            s + t
        )));
    }
    let (mut m, mut cert) = spike_11_with_cap(arms, cap)?;
    let mut trace = BuildTrace {
        initial_order: arms,
        steps: Vec::new(),
    };
    for _ in 1..t {
        let (next, next_cert) = quotient_step(&m, &cert, None)?;
        m = next;
        cert = next_cert;
        trace.steps.push(BuildStep {
            op: StepOp::Quotient,
            s: cert.s(),
            t: cert.t(),
            rank: m.full_rank(),
        });
    }
    for _ in 1..s {
        let (next, next_cert) = lift_step(&m, &cert)?;
        m = next;
        cert = next_cert;
        trace.steps.push(BuildStep {
            op: StepOp::Lift,
            s: cert.s(),
            t: cert.t(),
            rank: m.full_rank(),
        });
    }
    Ok((m, cert, trace))
}

/// Adds a tip: the single-element extension by the modular cut of all flats
/// containing at least s-1 full arms. The new element lands in the closure
/// of exactly those flats. Rejected for s = 1, where the cut degenerates to
/// all flats and the tip would be a loop.
pub fn tip_extension(m: &Matroid, cert: &SpikeCertificate) -> Result<Matroid> {
    check_certificate(m, cert)?;
    let (s, t, order) = (cert.s(), cert.t(), cert.order());
    if s < 2 {
        return Err(Error::Hypothesis(
            "tip extension needs s >= 2: for s = 1 every flat would contain the \
             required zero arms and the tip would be a loop"
                .into(),
        ));
    }
    let full_arm_count = |x: SubsetMask| (0..order).filter(|&i| cert.arm(i).is_subset_of(x)).count();
    let members: Vec<SubsetMask> = subsets_of(m.ground())
        .filter(|&x| m.is_flat(x) && full_arm_count(x) + 1 >= s)
        .collect();
    let cut = match ModularCut::from_members(m, &members) {
        Ok(cut) => cut,
        Err(e) => {
            let artifact = dump_counterexample(
                "tip-cut",
                m,
                &format!("s={s} t={t} order={order}: {e}"),
            );
            return Err(Error::InvariantViolation {
                check: "tip family is a modular cut".into(),
                artifact,
            });
        }
    };
    let extended = extend_by_modular_cut(m, &cut)?;
    if extended.n() <= 16 {
        // the defining closure property, checked on every subset
        for x in subsets_of(m.ground()) {
            let has_tip = extended.closure(x).contains(m.n());
            let qualifies = full_arm_count(m.closure(x)) + 1 >= s;
            if has_tip != qualifies {
                let artifact = dump_counterexample(
                    "tip-closure",
                    m,
                    &format!("s={s} t={t}: set {x:?} breaks the tip closure property"),
                );
                return Err(Error::InvariantViolation {
                    check: "tip closure property".into(),
                    artifact,
                });
            }
        }
    }
    Ok(extended)
}

/// Tips the spike and contracts the tip. The arm partition then certifies
/// the result as an (s-1,t)-spike and the rank drops by one.
pub fn untip(m: &Matroid, cert: &SpikeCertificate) -> Result<(Matroid, SpikeCertificate)> {
    let extended = tip_extension(m, cert)?;
    let (contracted, _map) = extended.contract(SubsetMask::singleton(m.n()));
    let out_cert = certify_or_dump(
        &contracted,
        cert.s() - 1,
        cert.t(),
        cert.partition().clone(),
        "untip",
    )?;
    if contracted.full_rank() + 1 != m.full_rank() {
        let artifact = dump_counterexample(
            "untip-rank",
            &contracted,
            &format!("rank went {} -> {}", m.full_rank(), contracted.full_rank()),
        );
        return Err(Error::InvariantViolation {
            check: "untip drops the rank by exactly one".into(),
            artifact,
        });
    }
    Ok((contracted, out_cert))
}
