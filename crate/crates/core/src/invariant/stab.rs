use std::fmt;

use serde::Serialize;

use crate::autf2::AutF2;
use crate::invariant::presentation::GroupPresentation;
use crate::invariant::snf::abelianization;
use crate::invariant::tietze::tietze_simplify;
use crate::localrep::{can_extend, extensions, LocalRep};
use crate::word::Word;

/// Ordered from best to worst, so `max` combines two results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum S1Status {
    Holds,
    HoldsUpToInversion,
    Unknown,
    Fails,
}

impl fmt::Display for S1Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            S1Status::Holds => "holds",
            S1Status::HoldsUpToInversion => "holds-up-to-inversion",
            S1Status::Unknown => "unknown",
            S1Status::Fails => "fails",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct S1Report {
    pub core: AutF2,
    pub status: S1Status,
    /// One line per quotient: relator, simplified presentation, conclusion.
    pub witness: Vec<String>,
}

fn one_side(label: &str, core: &AutF2) -> (S1Status, String) {
    let relator = core.image_b().concat(&Word::generator(2).inverse());
    let p = GroupPresentation::new(2, vec![relator.clone()]).expect("rank 2");
    let head = format!("{label}: relator {relator}");
    if relator.is_empty() {
        return (S1Status::Fails, format!("{head}; quotient is free of rank 2"));
    }
    let ab = abelianization(&p).expect("2x2 exponent matrix cannot overflow");
    if ab != [1, 0] {
        return (S1Status::Fails, format!("{head}; abelianization {ab:?} is not Z"));
    }
    let simple = tietze_simplify(&p);
    let tail = format!("{head}; simplified to {simple}");
    if simple.generator_count() != 1 || !simple.relators().is_empty() {
        return (S1Status::Unknown, format!("{tail}; not recognised as Z"));
    }
    let e = (relator.exponent_sum(1), relator.exponent_sum(2));
    match e {
        (1, -1) | (-1, 1) => (S1Status::Holds, format!("{tail}; a = b")),
        (1, 1) | (-1, -1) => (S1Status::HoldsUpToInversion, format!("{tail}; a = b^-1")),
        _ => (S1Status::Fails, format!("{tail}; a = b^k with exponents {e:?}")),
    }
}

/// Whether `<a, b | (b)tau = b>` and the same for `tau^-1` are infinite cyclic
/// with `a = b`. A semi-decision: `Unknown` when simplification stalls.
pub fn check_s1(core: &AutF2) -> S1Report {
    let (s1, w1) = one_side("core", core);
    let (s2, w2) = one_side("inverse", &core.invert());
    S1Report {
        core: core.clone(),
        status: s1.max(s2),
        witness: vec![w1, w2],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StabReport {
    pub s1: Vec<S1Report>,
    /// Worst status over all cores.
    pub s1_status: S1Status,
    pub s2: bool,
    pub extensions: Vec<AutF2>,
}

pub fn stabilization_report(rep: &LocalRep) -> StabReport {
    let s1: Vec<S1Report> = rep.cores().iter().map(check_s1).collect();
    let s1_status = s1.iter().map(|r| r.status).max().unwrap_or(S1Status::Holds);
    StabReport {
        s1,
        s1_status,
        s2: can_extend(rep),
        extensions: extensions(rep),
    }
}
