//! Local actions of braid groups on free groups.
//!
//! A local representation sends the braid generator `sigma_i` to an automorphism
//! of `F_n` that only moves `x_i` and `x_{i+1}`. This crate checks the defining
//! equations for such representations, enumerates them at bounded word length,
//! applies them to braids, and builds the closed-braid group presentations
//! together with computable fingerprints of those groups.

pub mod autf2;
pub mod braid;
pub mod cli;
pub mod error;
pub mod invariant;
pub mod localrep;
pub mod word;

pub use autf2::AutF2;
pub use braid::{BraidWord, Endo};
pub use error::{Error, Result};
pub use localrep::{FamilyId, LocalRep, Quad};
pub use word::Word;
