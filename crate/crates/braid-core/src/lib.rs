//! Garside-theoretic algorithms for Artin's braid groups, centered on the
//! conjugacy decision and search problems for periodic braids.
//!
//! The crate provides:
//!
//! - words and permutations ([`word`], [`perm`]);
//! - left normal forms, cycling/decycling, summit reduction and desk-scale
//!   ultra summit sets in both the classical and the band-generator Garside
//!   structures ([`garside`]);
//! - periodicity detection and classification ([`periodic`]);
//! - closed-form descriptions of the ultra summit sets of the two rotation
//!   braids δ and ε, with explicit conjugators ([`uss`]);
//! - the translation network between braids fixing puncture 2, the type-B
//!   Artin-Tits group, and symmetric braids on 2n−2 strands ([`bridge`]);
//! - a polynomial-time conjugacy solver for periodic braids ([`solver`]);
//! - a deterministic instance generator and benchmark harness ([`harness`]).
//!
//! All values are immutable after construction and safe to share across
//! threads; there is no global state.

pub mod bridge;
pub mod error;
pub mod garside;
pub mod harness;
pub mod periodic;
pub mod perm;
pub mod solver;
pub mod uss;
pub mod word;

pub use error::{Error, Result};
pub use garside::band::{Band, Ncp, NormalFormB};
pub use garside::classical::{Classical, NormalFormA, PermBraid};
pub use garside::{ConjStep, NormalForm, Structure};
pub use periodic::PeriodicClass;
pub use perm::Permutation;
pub use solver::ConjugacyCertificate;
pub use word::{ArtinWord, BandLetter, BandWord, TypeBWord};
