//! The (s,u,t,v)-property: every s-element subset lies in a u-element
//! circuit and every t-element subset lies in a v-element cocircuit.

use crate::error::{Error, Result};
use crate::mask::{k_subsets_lex, SubsetMask};
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Circuit,
    Cocircuit,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub holds: bool,
    /// Lexicographically first failing subset, when the property fails.
    pub failing_subset: Option<SubsetMask>,
    pub missing_kind: Option<WitnessKind>,
}

impl PropertyReport {
    fn holds() -> PropertyReport {
        PropertyReport {
            holds: true,
            failing_subset: None,
            missing_kind: None,
        }
    }

    fn fails(subset: SubsetMask, kind: WitnessKind) -> PropertyReport {
        PropertyReport {
            holds: false,
            failing_subset: Some(subset),
            missing_kind: Some(kind),
        }
    }
}

/// Checks the (s,u,t,v)-property. Subsets are scanned in lexicographic
/// order of their index sequences; the first subset with no enclosing
/// u-circuit (or, failing that side, no enclosing v-cocircuit) is reported.
pub fn has_property(
    m: &Matroid,
    s: usize,
    u: usize,
    t: usize,
    v: usize,
) -> Result<PropertyReport> {
    if s < 1 || t < 1 {
        return Err(Error::Parameter(format!(
            "property parameters must be positive, got s={s}, t={t}"
        )));
    }
    if u < s || v < t {
        return Err(Error::Parameter(format!(
            "need u >= s and v >= t, got ({s},{u},{t},{v})"
        )));
    }
    if s > m.n() || t > m.n() {
        return Err(Error::Parameter(format!(
            "need s and t at most n = {}, got s={s}, t={t}",
            m.n()
        )));
    }

    let circuits = m.circuits_of_size(u);
    for x in k_subsets_lex(m.n(), s) {
        if !circuits.iter().any(|&c| x.is_subset_of(c)) {
            return Ok(PropertyReport::fails(x, WitnessKind::Circuit));
        }
    }
    let cocircuits = m.cocircuits_of_size(v);
    for x in k_subsets_lex(m.n(), t) {
        if !cocircuits.iter().any(|&c| x.is_subset_of(c)) {
            return Ok(PropertyReport::fails(x, WitnessKind::Cocircuit));
        }
    }
    Ok(PropertyReport::holds())
}
