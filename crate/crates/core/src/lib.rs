//! Exact word calculus for the framed circular braid group on six disks.
//!
//! Layers, bottom up:
//!
//! - [`word`], [`automorphism`]: reduced free-group words and endomorphisms.
//! - [`braid`]: braid words and their Artin action, the equality oracle.
//! - [`framed`]: framing vectors ⋊ `B_6` modulo the full-twist relation,
//!   with the named elements `σ_i`, `R`, `ρ`, `α₁`, `α₂`.
//! - [`labels`]: the action on the 180 wedge labels (disk, branch).
//! - [`dsl`]: the word language used by the CLI and trace files.
//! - [`lemma`], [`trace`]: relation suites and certified derivations.

pub mod automorphism;
pub mod braid;
pub mod dsl;
pub mod framed;
pub mod labels;
pub mod lemma;
pub mod report;
pub mod trace;
#[cfg(feature = "testkit")]
pub mod testkit;
pub mod word;

pub use automorphism::FreeAutomorphism;
pub use braid::{ArtinConvention, BraidPermutation, BraidWord};
pub use dsl::{parse, Atom, Expr};
pub use framed::{Evidence, FramingTransport, FramingVector, Model, ModelConfig, ModelElement, ModelError};
pub use labels::{LabelAction, WedgeLabel};
pub use word::{Letter, Sign, Word, WordError};
