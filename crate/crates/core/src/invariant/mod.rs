//! The group of a closed braid under a local representation, Markov moves,
//! and computable fingerprints of finitely presented groups.

mod fingerprint;
mod groups;
mod presentation;
mod snf;
mod stab;
mod tietze;

pub use fingerprint::{fingerprint, Fingerprint};
pub use groups::{count_homs, count_homs_with_budget, default_groups, FiniteGroupTable, DEFAULT_BUDGET};
pub use presentation::{markov_conjugate, markov_stabilize, presentation, GroupPresentation};
pub use snf::{abelianization, smith_diagonal};
pub use stab::{check_s1, stabilization_report, S1Report, S1Status, StabReport};
pub use tietze::tietze_simplify;
