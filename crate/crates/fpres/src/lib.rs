//! Toolkit for finitely presented groups with a handle-calculus bent.
//!
//! The crate provides free-group words and presentations ([`word`],
//! [`presentation`]), typed Tietze-style transformation moves with a
//! derivation-replay engine ([`tietze`]), Todd-Coxeter coset enumeration
//! ([`coset`]), exact integer linear algebra for abelianization via Smith
//! normal form ([`abelian`]), handle-count tables with Euler-characteristic
//! arithmetic ([`handles`]), a small permutation-group engine ([`perm`]),
//! and a registry of facts about a specific family of knotted spheres in
//! `S^n x S^2` and the Mazur-type contractible manifolds built from them,
//! together with a one-command verification suite ([`registry`]).
//!
//! The `fpres` binary exposes the toolkit on the command line; see the
//! repository README for the file formats and exit codes.

pub mod abelian;
pub mod coset;
pub mod handles;
pub mod perm;
pub mod presentation;
pub mod registry;
pub mod text;
pub mod tietze;
pub mod word;

pub use presentation::{Generator, Presentation, PresentationError};
pub use word::{Letter, Word, WordError};
