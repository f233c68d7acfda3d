//! Exact computation with small matroids, centered on spikes.
//!
//! A matroid here is a full rank table over bitmask subsets of a ground set
//! of at most a couple dozen elements, which makes every classical query
//! (closure, duality, minors, circuits, connectivity) exact and cheap. On
//! top of the engine sit:
//!
//! - the (s,u,t,v)-property checker: every s-subset in a u-element circuit,
//!   every t-subset in a v-element cocircuit;
//! - echidnas and coechidnas (partial pair partitions whose k-fold unions
//!   are circuits, respectively cocircuits) and spike certificates (pair
//!   partitions of the whole ground set that are simultaneously an s-echidna
//!   and a t-coechidna);
//! - a complete recognizer and a brute-force cross-check oracle;
//! - instance-level verification of the structural facts that hold for every
//!   (s,t)-spike (rank, circuit classification, connectivity values);
//! - modular cuts, single-element extensions, and the quotient/lift pipeline
//!   that builds an (s,t)-spike of any order m >= s+t from a direct sum of
//!   two-element circuits.

pub mod artifact;
pub mod certificate;
pub mod circuits;
pub mod connectivity;
pub mod construct;
pub mod corpus;
pub mod echidna;
pub mod error;
pub mod mask;
pub mod matroid;
pub mod modular_cut;
pub mod partition;
pub mod property;
pub mod recognize;
pub mod structure;
pub mod text;

pub use certificate::{CertificateFailure, SpikeCertificate};
pub use circuits::CircuitFamily;
pub use connectivity::Separation;
pub use construct::{
    build_spike, build_spike_with_cap, lift_step, quotient_step, spike_11, spike_11_with_cap,
    tip_extension, untip, BuildStep, BuildTrace, StepOp,
};
pub use echidna::{extend_echidna, is_echidna, verify_coechidna_implication};
pub use error::{Error, Result};
pub use mask::SubsetMask;
pub use matroid::{Matroid, Reindex, ValidationReport, DEFAULT_CAP, MAX_CAP};
pub use modular_cut::{
    enumerate_modular_cuts, extend_by_modular_cut, free_extension, is_modular_cut, CutCheck,
    CutViolation, ModularCut,
};
pub use partition::PairPartition;
pub use property::{has_property, PropertyReport, WitnessKind};
pub use recognize::{all_spike_partitions, recognize_spike};
pub use structure::{
    check_low_rank_property, verify_spike_structure, CheckStatus, StructureCheck, StructureReport,
};
