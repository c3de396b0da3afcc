//! The fourteen families of solutions and the symmetry decorations on them.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};
use crate::localrep::quad::{raw_backward, raw_inverse, raw_swap, Quad};
use crate::word::{w, Word};

/// An element of the group generated by the three commuting involutions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    pub inverse: bool,
    pub swap: bool,
    pub backward: bool,
}

impl Decoration {
    pub const NONE: Decoration = Decoration::new(false, false, false);
    pub const INVERSE: Decoration = Decoration::new(true, false, false);
    pub const SWAP: Decoration = Decoration::new(false, true, false);
    pub const BACKWARD: Decoration = Decoration::new(false, false, true);

    /// All eight elements, in the order used to pick labels.
    pub const ALL: [Decoration; 8] = [
        Decoration::new(false, false, false),
        Decoration::new(true, false, false),
        Decoration::new(false, true, false),
        Decoration::new(false, false, true),
        Decoration::new(true, true, false),
        Decoration::new(true, false, true),
        Decoration::new(false, true, true),
        Decoration::new(true, true, true),
    ];

    pub const fn new(inverse: bool, swap: bool, backward: bool) -> Self {
        Decoration { inverse, swap, backward }
    }

    pub fn is_identity(self) -> bool {
        self == Decoration::NONE
    }

    /// Applies the involutions to a valid quad.
    pub fn apply(self, q: &Quad) -> Quad {
        let mut out = q.clone();
        if self.inverse {
            out = raw_inverse(&out);
        }
        if self.swap {
            out = raw_swap(&out);
        }
        if self.backward {
            out = raw_backward(&out);
        }
        out
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            f.write_str("-")?;
        }
        if self.swap {
            f.write_str("s")?;
        }
        if self.backward {
            f.write_str("bw")?;
        }
        Ok(())
    }
}

impl FromStr for Decoration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut d = Decoration::NONE;
        let mut rest = s;
        while !rest.is_empty() {
            let (flag, tail) = if let Some(t) = rest.strip_prefix('-') {
                (&mut d.inverse, t)
            } else if let Some(t) = rest.strip_prefix("bw") {
                (&mut d.backward, t)
            } else if let Some(t) = rest.strip_prefix('s') {
                (&mut d.swap, t)
            } else {
                return Err(parse_err("decoration", s, "expected a combination of '-', 's', 'bw'"));
            };
            if *flag {
                return Err(parse_err("decoration", s, "repeated symmetry"));
            }
            *flag = true;
            rest = tail;
        }
        Ok(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T,
    TPrime,
    A1,
    A2,
    A3,
    B1,
    B2,
    C1,
    C2,
    C3,
    D1,
    D2,
    D3,
    D4,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::T,
        Family::TPrime,
        Family::A1,
        Family::A2,
        Family::A3,
        Family::B1,
        Family::B2,
        Family::C1,
        Family::C2,
        Family::C3,
        Family::D1,
        Family::D2,
        Family::D3,
        Family::D4,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::T => "T",
            Family::TPrime => "T'",
            Family::A1 => "A1",
            Family::A2 => "A2",
            Family::A3 => "A3",
            Family::B1 => "B1",
            Family::B2 => "B2",
            Family::C1 => "C1",
            Family::C2 => "C2",
            Family::C3 => "C3",
            Family::D1 => "D1",
            Family::D2 => "D2",
            Family::D3 => "D3",
            Family::D4 => "D4",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(self, Family::A1 | Family::A2 | Family::A3)
    }

    /// The undecorated quad; `r` is ignored outside the A families.
    pub fn quad(self, r: u32) -> Quad {
        let a = w("a");
        let conj = |x: &str, k: i64| {
            let p = a.pow(k);
            p.concat(&w(x)).concat(&p.inverse())
        };
        let r = r as i64;
        let q = |s: [Word; 4]| {
            let [a, b, c, d] = s;
            Quad::new(a, b, c, d)
        };
        match self {
            Family::T => q([w("a"), w("b"), w("a"), w("b")]),
            Family::TPrime => q([w("a"), w("B"), w("A"), w("b")]),
            Family::A1 => q([conj("b", r), w("a"), conj("b", r), w("a")]),
            Family::A2 => q([conj("b", r), w("a"), conj("B", r), w("A")]),
            Family::A3 => q([conj("B", r), w("A"), conj("B", -r), w("A")]),
            Family::B1 => q([w("B"), w("a"), w("B"), w("a")]),
            Family::B2 => q([w("B"), w("a"), w("b"), w("A")]),
            Family::C1 => q([w("aBa"), w("a"), w("aBa"), w("a")]),
            Family::C2 => q([w("aBa"), w("a"), w("aba"), w("A")]),
            Family::C3 => q([w("aba"), w("A"), w("aba"), w("A")]),
            Family::D1 => q([w("ABa"), w("bba"), w("ABa"), w("bba")]),
            Family::D2 => q([w("abA"), w("bbA"), w("ABa"), w("bba")]),
            Family::D3 => q([w("ABa"), w("bba"), w("Aba"), w("Abb")]),
            Family::D4 => q([w("abA"), w("bbA"), w("Aba"), w("Abb")]),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family, its parameter and a symmetry decoration, e.g. `A2:r=1:-s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub r: u32,
    pub decoration: Decoration,
}

impl FamilyId {
    pub fn new(family: Family, r: u32, decoration: Decoration) -> Self {
        let r = if family.is_parametric() { r } else { 0 };
        FamilyId { family, r, decoration }
    }

    pub fn plain(family: Family) -> Self {
        FamilyId::new(family, 0, Decoration::NONE)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.tag())?;
        if self.family.is_parametric() {
            write!(f, ":r={}", self.r)?;
        }
        if !self.decoration.is_identity() {
            write!(f, ":{}", self.decoration)?;
        }
        Ok(())
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let family: Family = parts.next().unwrap_or_default().parse()?;
        let mut r = None;
        let mut decoration = None;
        for part in parts {
            if let Some(k) = part.strip_prefix("r=") {
                if r.is_some() || decoration.is_some() {
                    return Err(parse_err("family id", s, "misplaced parameter"));
                }
                let k: u32 = k
                    .parse()
                    .map_err(|_| parse_err("family id", s, "r must be a non-negative integer"))?;
                if !family.is_parametric() {
                    return Err(parse_err("family id", s, "only A families take r"));
                }
                r = Some(k);
            } else if decoration.is_none() {
                decoration = Some(part.parse::<Decoration>()?);
            } else {
                return Err(parse_err("family id", s, "too many parts"));
            }
        }
        Ok(FamilyId::new(
            family,
            r.unwrap_or(0),
            decoration.unwrap_or_default(),
        ))
    }
}

pub fn catalog(id: &FamilyId) -> Quad {
    id.decoration.apply(&id.family.quad(id.r))
}

/// First family id (in family, parameter, decoration order) whose quad is `q`.
pub fn identify(q: &Quad) -> Option<FamilyId> {
    let max_r = q.max_len() as u32;
    for family in Family::ALL {
        let rs = if family.is_parametric() { 0..=max_r } else { 0..=0 };
        for r in rs {
            let base = family.quad(r);
            if base.max_len() > q.max_len() {
                continue;
            }
            for decoration in Decoration::ALL {
                if &decoration.apply(&base) == q {
                    return Some(FamilyId::new(family, r, decoration));
                }
            }
        }
    }
    None
}
