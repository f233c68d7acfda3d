//! Spike certificates: a pair partition plus the (s, t) parameters it is
//! claimed to certify.

use crate::error::{Error, Result};
use crate::mask::{k_subsets, SubsetMask};
use crate::matroid::Matroid;
use crate::partition::PairPartition;
use crate::property::WitnessKind;

/// Certifies that a matroid is an (s,t)-spike: the partition covers the
/// ground set, the union of every s arms is a circuit, and the union of
/// every t arms is a cocircuit. The number of arms is the order m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpikeCertificate {
    s: usize,
    t: usize,
    partition: PairPartition,
}

/// Why a certificate failed its semantic check.
#[derive(Clone, Debug)]
pub struct CertificateFailure {
    pub kind: WitnessKind,
    /// Mask over arm indices.
    pub arm_set: SubsetMask,
    /// Union of those arms in the ground set.
    pub union: SubsetMask,
}

impl SpikeCertificate {
    pub fn new(s: usize, t: usize, partition: PairPartition) -> Result<SpikeCertificate> {
        if s < 1 || t < 1 {
            return Err(Error::InvalidCertificate(format!(
                "spike parameters must be positive, got s={s}, t={t}"
            )));
        }
        if partition.order() < s.max(t) {
            return Err(Error::InvalidCertificate(format!(
                "order {} below max(s,t) = {}",
                partition.order(),
                s.max(t)
            )));
        }
        Ok(SpikeCertificate { s, t, partition })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// The order m: number of arms.
    pub fn order(&self) -> usize {
        self.partition.order()
    }

    pub fn partition(&self) -> &PairPartition {
        &self.partition
    }

    pub fn arm(&self, i: usize) -> SubsetMask {
        self.partition.pair(i)
    }

    /// The same partition read as a certificate for the dual matroid.
    pub fn dual(&self) -> SpikeCertificate {
        SpikeCertificate {
            s: self.t,
            t: self.s,
            partition: self.partition.clone(),
        }
    }

    /// Shape check against a matroid: the arms must partition exactly the
    /// ground set.
    pub fn check_against(&self, m: &Matroid) -> Result<()> {
        if self.partition.covered() != m.ground() {
            return Err(Error::InvalidCertificate(format!(
                "arms cover {:?} but the ground set is {:?}",
                self.partition.covered(),
                m.ground()
            )));
        }
        Ok(())
    }

    /// Semantic check: every union of s arms is a circuit and every union of
    /// t arms is a cocircuit.
    pub fn certifies(&self, m: &Matroid) -> std::result::Result<(), CertificateFailure> {
        let order = self.order();
        for ids in k_subsets(order, self.s) {
            let union = self.partition.union_of(ids);
            if !m.is_circuit(union) {
                return Err(CertificateFailure {
                    kind: WitnessKind::Circuit,
                    arm_set: ids,
                    union,
                });
            }
        }
        for ids in k_subsets(order, self.t) {
            let union = self.partition.union_of(ids);
            if !m.is_cocircuit(union) {
                return Err(CertificateFailure {
                    kind: WitnessKind::Cocircuit,
                    arm_set: ids,
                    union,
                });
            }
        }
        Ok(())
    }

    /// Serializes as a `spike s=<s> t=<t>` line followed by one arm per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("spike s={} t={}\n", self.s, self.t);
        for (a, b) in self.partition.index_pairs() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<SpikeCertificate> {
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or_else(|| err(1, "empty certificate"))?;
        let rest = header
            .strip_prefix("spike s=")
            .ok_or_else(|| err(line, "expected 'spike s=<s> t=<t>'"))?;
        let (s_word, t_part) = rest
            .split_once(" t=")
            .ok_or_else(|| err(line, "expected 'spike s=<s> t=<t>'"))?;
        let s: usize = s_word.parse().map_err(|_| err(line, "bad s"))?;
        let t: usize = t_part.trim().parse().map_err(|_| err(line, "bad t"))?;
        let mut pairs = Vec::new();
        for (line, l) in lines {
            let (a, b) = l
                .split_once(' ')
                .ok_or_else(|| err(line, "arm lines hold two indices"))?;
            let a: usize = a.trim().parse().map_err(|_| err(line, "bad index"))?;
            let b: usize = b.trim().parse().map_err(|_| err(line, "bad index"))?;
            if a == b {
                return Err(err(line, "arm indices must differ"));
            }
            pairs.push((a, b));
        }
        let partition = PairPartition::from_index_pairs(&pairs)
            .map_err(|e| err(1, &format!("bad arm list: {e}")))?;
        SpikeCertificate::new(s, t, partition).map_err(|e| err(1, &e.to_string()))
    }
}
