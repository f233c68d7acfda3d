//! Structural verification of certified spikes.
//!
//! Every check here is an instance-level, exhaustive verification of a fact
//! that holds for all (s,t)-spikes: the order bound, the rank and dual rank,
//! the two-clause classification of circuits, the three-case rank formula on
//! arm unions, the connectivity values of arm unions, small-set connectivity,
//! and Tutte connectivity. Checks whose order hypotheses are unmet are
//! marked not-applicable rather than failed.

use crate::artifact::dump_counterexample;
use crate::certificate::SpikeCertificate;
use crate::error::{Error, Result};
use crate::mask::{k_subsets, k_subsets_of, subsets_of, SubsetMask};
use crate::matroid::Matroid;
use crate::property::has_property;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "na",
        }
    }
}

#[derive(Clone, Debug)]
pub struct StructureCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub witness: Option<SubsetMask>,
    pub expected: Option<usize>,
    pub actual: Option<usize>,
}

impl StructureCheck {
    fn pass(name: &'static str) -> StructureCheck {
        StructureCheck {
            name,
            status: CheckStatus::Pass,
            witness: None,
            expected: None,
            actual: None,
        }
    }

    fn na(name: &'static str) -> StructureCheck {
        StructureCheck {
            name,
            status: CheckStatus::NotApplicable,
            witness: None,
            expected: None,
            actual: None,
        }
    }

    fn fail(name: &'static str, witness: Option<SubsetMask>) -> StructureCheck {
        StructureCheck {
            name,
            status: CheckStatus::Fail,
            witness,
            expected: None,
            actual: None,
        }
    }

    fn with_values(mut self, expected: usize, actual: usize) -> StructureCheck {
        self.expected = Some(expected);
        self.actual = Some(actual);
        self
    }

    /// One `check=<name> status=<pass|fail|na> witness=<mask-or-dash>` line.
    pub fn render(&self) -> String {
        let witness = match self.witness {
            Some(w) => w.0.to_string(),
            None => "-".to_string(),
        };
        let mut line = format!(
            "check={} status={} witness={witness}",
            self.name,
            self.status.as_str()
        );
        if let (Some(e), Some(a)) = (self.expected, self.actual) {
            line.push_str(&format!(" expected={e} actual={a}"));
        }
        line
    }
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn checks(&self) -> &[StructureCheck] {
        &self.checks
    }

    /// Overall pass: no check failed (not-applicable checks do not count
    /// against it).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.render());
            out.push('\n');
        }
        out
    }
}

/// Expected rank of a union of `j` arms in an (s,t)-spike of order m.
fn expected_arm_rank(s: usize, t: usize, m: usize, j: usize) -> usize {
    if j < s {
        2 * j
    } else if j + t <= m + 1 {
        s + j - 1
    } else {
        m + s - t
    }
}

/// Expected connectivity of a union of arms whose smaller side has `j` arms.
fn expected_arm_connectivity(s: usize, t: usize, m: usize, j: usize) -> usize {
    if j < t {
        expected_arm_rank(s, t, m, j)
    } else if j + s <= m {
        if j < s {
            t + j - 1
        } else {
            s + t - 2
        }
    } else {
        m - s + t
    }
}

/// Runs every structural check enabled by the certificate's order, marking
/// checks whose hypotheses on m are unmet as not-applicable. A certificate
/// whose arms do not partition the ground set is an error; one that fits the
/// matroid but fails the circuit or cocircuit condition yields a report
/// whose `certificate` check fails (no further checks are run).
pub fn verify_spike_structure(m: &Matroid, cert: &SpikeCertificate) -> Result<StructureReport> {
    cert.check_against(m)?;
    let mut checks = Vec::new();

    if let Err(failure) = cert.certifies(m) {
        checks.push(StructureCheck::fail("certificate", Some(failure.union)));
        return Ok(StructureReport { checks });
    }
    checks.push(StructureCheck::pass("certificate"));

    let (s, t, order) = (cert.s(), cert.t(), cert.order());

    // order-bound: m >= s + t - 1
    checks.push(if order + 1 >= s + t {
        StructureCheck::pass("order-bound").with_values(s + t - 1, order)
    } else {
        StructureCheck::fail("order-bound", None).with_values(s + t - 1, order)
    });

    // rank: r(M) = m + s - t, dual-rank: r*(M) = m - s + t
    let expected_rank = order + s - t;
    checks.push(if m.full_rank() == expected_rank {
        StructureCheck::pass("rank").with_values(expected_rank, m.full_rank())
    } else {
        StructureCheck::fail("rank", None).with_values(expected_rank, m.full_rank())
    });
    let expected_dual = order + t - s;
    checks.push(if m.dual_rank() == expected_dual {
        StructureCheck::pass("dual-rank").with_values(expected_dual, m.dual_rank())
    } else {
        StructureCheck::fail("dual-rank", None).with_values(expected_dual, m.dual_rank())
    });

    checks.push(circuit_classification(m, cert));
    checks.push(rank_function(m, cert));
    checks.push(lambda_table(m, cert));

    // small-set connectivity needs order >= 3 max(s,t) - 2
    checks.push(if order + 2 >= 3 * s.max(t) {
        small_set_lambda(m, cert)
    } else {
        StructureCheck::na("small-set-lambda")
    });

    // Tutte connectivity needs min(s,t) >= 2 and order >= max(3s+t, s+3t) - 4
    let conn_threshold = (3 * s + t).max(s + 3 * t) - 4;
    checks.push(if s.min(t) >= 2 && order >= conn_threshold {
        let k = 2 * s.min(t) - 1;
        match m.separation_below(k) {
            None => StructureCheck::pass("connectivity").with_values(k, k),
            Some(sep) => StructureCheck::fail("connectivity", Some(sep.side))
                .with_values(k, sep.order),
        }
    } else {
        StructureCheck::na("connectivity")
    });

    Ok(StructureReport { checks })
}

/// Every circuit satisfies exactly one clause: it is the union of some s
/// arms, or it meets at least m - (t - 2) arms and contains fewer than s
/// full arms.
fn circuit_classification(m: &Matroid, cert: &SpikeCertificate) -> StructureCheck {
    let (s, t, order) = (cert.s(), cert.t(), cert.order());
    for c in m.circuits().iter() {
        let mut meets = 0usize;
        let mut full = SubsetMask::EMPTY;
        let mut full_count = 0usize;
        for i in 0..order {
            let arm = cert.arm(i);
            if arm.is_subset_of(c) {
                full = full | arm;
                full_count += 1;
                meets += 1;
            } else if arm.intersects(c) {
                meets += 1;
            }
        }
        let union_of_s_arms = full_count == s && c == full;
        let big = meets + t >= order + 2 && full_count < s;
        if union_of_s_arms == big {
            return StructureCheck::fail("circuit-classification", Some(c));
        }
    }
    StructureCheck::pass("circuit-classification")
}

/// r(A_J) follows the three-case formula for every J.
fn rank_function(m: &Matroid, cert: &SpikeCertificate) -> StructureCheck {
    let (s, t, order) = (cert.s(), cert.t(), cert.order());
    for bits in 0u32..1 << order {
        let ids = SubsetMask(bits);
        let union = cert.partition().union_of(ids);
        let expected = expected_arm_rank(s, t, order, ids.len());
        if m.rank(union) != expected {
            return StructureCheck::fail("rank-function", Some(union))
                .with_values(expected, m.rank(union));
        }
    }
    StructureCheck::pass("rank-function")
}

/// lambda(A_J) follows the three-case connectivity formula for every J,
/// evaluated on the smaller side of the induced arm bipartition.
fn lambda_table(m: &Matroid, cert: &SpikeCertificate) -> StructureCheck {
    let (s, t, order) = (cert.s(), cert.t(), cert.order());
    for bits in 0u32..1 << order {
        let ids = SubsetMask(bits);
        let union = cert.partition().union_of(ids);
        let smaller = ids.len().min(order - ids.len());
        let expected = expected_arm_connectivity(s, t, order, smaller);
        if m.connectivity(union) != expected {
            return StructureCheck::fail("lambda-table", Some(union))
                .with_values(expected, m.connectivity(union));
        }
    }
    StructureCheck::pass("lambda-table")
}

/// lambda(X) = |X| for every set of at most 2 min(s,t) - 1 elements.
fn small_set_lambda(m: &Matroid, cert: &SpikeCertificate) -> StructureCheck {
    let bound = (2 * cert.s().min(cert.t()) - 1).min(m.n());
    for k in 0..=bound {
        for x in k_subsets(m.n(), k) {
            if m.connectivity(x) != k {
                return StructureCheck::fail("small-set-lambda", Some(x))
                    .with_values(k, m.connectivity(x));
            }
        }
    }
    StructureCheck::pass("small-set-lambda")
}

/// Exhaustively confirms the low-rank picture in a matroid with the
/// (s,2s,t,2t)-property: every set of rank below s is independent, and every
/// set of rank exactly s is uniform-like (all its s-subsets independent) with
/// fewer than s + 2t elements. Must always hold; `false` means the instance
/// contradicts it and has been dumped.
pub fn check_low_rank_property(m: &Matroid, s: usize, t: usize) -> Result<bool> {
    if s < 1 || t < 1 {
        return Err(Error::Parameter("s and t must be positive".into()));
    }
    let report = has_property(m, s, 2 * s, t, 2 * t)?;
    if !report.holds {
        return Err(Error::Hypothesis(format!(
            "matroid lacks the ({s},{},{t},{})-property",
            2 * s,
            2 * t
        )));
    }
    for x in subsets_of(m.ground()) {
        let r = m.rank(x);
        if r < s && r != x.len() {
            dump_counterexample("low-rank", m, &format!("s={s} t={t} dependent set {x:?}"));
            return Ok(false);
        }
        if r == s {
            if x.len() >= s + 2 * t {
                dump_counterexample(
                    "low-rank",
                    m,
                    &format!("s={s} t={t} rank-s set {x:?} has {} elements", x.len()),
                );
                return Ok(false);
            }
            if k_subsets_of(x, s).any(|y| !m.is_independent(y)) {
                dump_counterexample(
                    "low-rank",
                    m,
                    &format!("s={s} t={t} restriction to {x:?} is not uniform"),
                );
                return Ok(false);
            }
        }
    }
    Ok(true)
}
