//! Exact-arithmetic certificates for group actions on pencils of cubic
//! surfaces through a line.
//!
//! The crate re-derives, over the cyclotomic field Q(zeta24), a chain of
//! computer-checkable facts about finite matrix groups and their linear
//! representations: a stabilizer in general position, its normalizer,
//! ineffectivity kernels, symmetric-group character decompositions, generic
//! freeness of the induced actions, fixed loci in the Hesse pencil of plane
//! cubics, and the genus/dimension bookkeeping tying those facts together.
//! Every check runs in exact arithmetic and is packaged as a [`report::Certificate`]
//! with machine-readable witnesses.
//!
//! Start with the runnable examples (`cargo run --example json_report`) or the
//! `verify` binary (`verify all --format json`).

pub mod field;
pub mod linalg;
pub mod groups;
pub mod reps;
pub mod certificates;
pub mod report;
