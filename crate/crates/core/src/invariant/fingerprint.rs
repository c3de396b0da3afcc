use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::invariant::groups::{count_homs, FiniteGroupTable};
use crate::invariant::presentation::{presentation, GroupPresentation};
use crate::invariant::snf::abelianization;
use crate::invariant::tietze::tietze_simplify;
use crate::localrep::LocalRep;

/// Isomorphism invariants of a finitely presented group. Equal fingerprints
/// are consistent with isomorphic groups; unequal ones prove the groups differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    /// Invariant factors other than 1; `0` is a free factor.
    pub abelianization: Vec<i64>,
    pub hom_counts: BTreeMap<String, u64>,
}

impl Fingerprint {
    /// Fingerprint of an arbitrary presentation. Counting runs on the
    /// Tietze-simplified form, which has the same counts.
    pub fn of(p: &GroupPresentation, groups: &[FiniteGroupTable]) -> Result<Self> {
        let simple = tietze_simplify(p);
        let abelianization = abelianization(&simple)?
            .into_iter()
            .filter(|&d| d != 1)
            .collect();
        let mut hom_counts = BTreeMap::new();
        for g in groups {
            hom_counts.insert(g.name().to_string(), count_homs(&simple, g)?);
        }
        Ok(Fingerprint {
            abelianization,
            hom_counts,
        })
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ab: Vec<String> = self
            .abelianization
            .iter()
            .map(|d| if *d == 0 { "Z".to_string() } else { format!("Z{d}") })
            .collect();
        let ab = if ab.is_empty() { "1".to_string() } else { ab.join(" + ") };
        write!(f, "abelianization: {ab}")?;
        for (name, n) in &self.hom_counts {
            write!(f, "\nhom({name}): {n}")?;
        }
        Ok(())
    }
}

pub fn fingerprint(rep: &LocalRep, b: &BraidWord, groups: &[FiniteGroupTable]) -> Result<Fingerprint> {
    Fingerprint::of(&presentation(rep, b, false)?, groups)
}
