//! Automorphisms of F_2 = <a, b> given by the images of `a` and `b`.
//!
//! Composition follows the right-action convention: `x.(phi psi) = (x.phi).psi`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_err, Error, Result};
use crate::word::{w, Word};

/// Which entry of the pair a Nielsen move changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Slot {
    First,
    Second,
}

/// Elementary Nielsen moves on a pair `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NielsenMove {
    /// Replace the entry by its inverse.
    Invert(Slot),
    /// `u <- u * v^e` (or `v <- v * u^e` for `Second`), `e = -1` when `inverse`.
    MulRight { target: Slot, inverse: bool },
    /// `u <- v^e * u`.
    MulLeft { target: Slot, inverse: bool },
    Swap,
}

impl NielsenMove {
    /// Fixed enumeration order used when several moves shorten the pair.
    pub const ORDER: [NielsenMove; 11] = [
        NielsenMove::Invert(Slot::First),
        NielsenMove::Invert(Slot::Second),
        NielsenMove::MulRight { target: Slot::First, inverse: false },
        NielsenMove::MulRight { target: Slot::First, inverse: true },
        NielsenMove::MulLeft { target: Slot::First, inverse: false },
        NielsenMove::MulLeft { target: Slot::First, inverse: true },
        NielsenMove::MulRight { target: Slot::Second, inverse: false },
        NielsenMove::MulRight { target: Slot::Second, inverse: true },
        NielsenMove::MulLeft { target: Slot::Second, inverse: false },
        NielsenMove::MulLeft { target: Slot::Second, inverse: true },
        NielsenMove::Swap,
    ];

    pub fn apply(self, (u, v): (&Word, &Word)) -> (Word, Word) {
        let pick = |x: &Word, inv: bool| if inv { x.inverse() } else { x.clone() };
        match self {
            NielsenMove::Invert(Slot::First) => (u.inverse(), v.clone()),
            NielsenMove::Invert(Slot::Second) => (u.clone(), v.inverse()),
            NielsenMove::MulRight { target: Slot::First, inverse } => {
                (u.concat(&pick(v, inverse)), v.clone())
            }
            NielsenMove::MulRight { target: Slot::Second, inverse } => {
                (u.clone(), v.concat(&pick(u, inverse)))
            }
            NielsenMove::MulLeft { target: Slot::First, inverse } => {
                (pick(v, inverse).concat(u), v.clone())
            }
            NielsenMove::MulLeft { target: Slot::Second, inverse } => {
                (u.clone(), pick(u, inverse).concat(v))
            }
            NielsenMove::Swap => (v.clone(), u.clone()),
        }
    }
}

/// Greedy Nielsen reduction: apply the first strictly shortening move until none exists.
pub fn nielsen_reduce(a: &Word, b: &Word) -> ((Word, Word), Vec<NielsenMove>) {
    let mut pair = (a.clone(), b.clone());
    let mut moves = Vec::new();
    loop {
        let total = pair.0.len() + pair.1.len();
        let step = NielsenMove::ORDER.iter().find_map(|&m| {
            let next = m.apply((&pair.0, &pair.1));
            (next.0.len() + next.1.len() < total).then_some((m, next))
        });
        match step {
            Some((m, next)) => {
                moves.push(m);
                pair = next;
            }
            None => return (pair, moves),
        }
    }
}

fn over_ab(x: &Word) -> bool {
    x.max_generator() <= 2
}

/// Commutator criterion: `a -> A, b -> B` is an automorphism iff
/// `[A, B]` is conjugate to `[a, b]` or its inverse.
pub fn is_basis(a: &Word, b: &Word) -> bool {
    if !over_ab(a) || !over_ab(b) {
        return false;
    }
    let comm = a.concat(b).concat(&a.inverse()).concat(&b.inverse());
    let standard = w("abAB");
    comm.is_conjugate(&standard) || comm.is_conjugate(&standard.inverse())
}

/// Basis test through Nielsen reduction: the reduced pair is `(x^{+-1}, y^{+-1})`
/// for distinct generators.
pub fn is_basis_nielsen(a: &Word, b: &Word) -> bool {
    if !over_ab(a) || !over_ab(b) {
        return false;
    }
    let ((u, v), _) = nielsen_reduce(a, b);
    u.len() == 1 && v.len() == 1 && u.letters()[0].generator() != v.letters()[0].generator()
}

/// Determinant of the abelianized 2x2 matrix of `(A, B)`.
pub fn abelian_determinant(a: &Word, b: &Word) -> i64 {
    a.exponent_sum(1) * b.exponent_sum(2) - a.exponent_sum(2) * b.exponent_sum(1)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AutF2 {
    image_a: Word,
    image_b: Word,
}

impl AutF2 {
    pub fn new(image_a: Word, image_b: Word) -> Result<Self> {
        if !is_basis(&image_a, &image_b) {
            return Err(Error::NotABasis {
                image_a: image_a.to_string(),
                image_b: image_b.to_string(),
            });
        }
        Ok(AutF2 { image_a, image_b })
    }

    /// Skips the basis test; callers must already know the pair is a basis.
    pub(crate) fn new_unchecked(image_a: Word, image_b: Word) -> Self {
        debug_assert!(is_basis(&image_a, &image_b));
        AutF2 { image_a, image_b }
    }

    pub fn identity() -> Self {
        AutF2::new_unchecked(w("a"), w("b"))
    }

    /// `a <-> b`.
    pub fn swap() -> Self {
        AutF2::new_unchecked(w("b"), w("a"))
    }

    /// The Artin core `(aba^-1, a)`.
    pub fn artin() -> Self {
        AutF2::new_unchecked(w("abA"), w("a"))
    }

    pub fn image_a(&self) -> &Word {
        &self.image_a
    }

    pub fn image_b(&self) -> &Word {
        &self.image_b
    }

    pub fn images(&self) -> [Word; 2] {
        [self.image_a.clone(), self.image_b.clone()]
    }

    /// Image of an arbitrary word over `{a, b}`.
    pub fn apply(&self, x: &Word) -> Result<Word> {
        x.substitute(&self.images())
    }

    /// `x -> (x.self).other`.
    pub fn compose(&self, other: &AutF2) -> AutF2 {
        let imgs = other.images();
        let a = self.image_a.substitute(&imgs).expect("rank-2 images");
        let b = self.image_b.substitute(&imgs).expect("rank-2 images");
        assert!(
            is_basis(&a, &b),
            "composition of automorphisms left Aut(F_2): ({a}, {b})"
        );
        AutF2 { image_a: a, image_b: b }
    }

    /// Inverse through the Nielsen reduction of `(A, B)`.
    ///
    /// The moves are replayed on formal words `(a, b)`, tracking which word in
    /// the original basis each entry is. At the end entry `u` has image
    /// `x^{+-1}`, so `x` is the image of `u^{+-1}` under the inverse.
    pub fn invert(&self) -> AutF2 {
        let ((p, q), moves) = nielsen_reduce(&self.image_a, &self.image_b);
        let mut formal = (w("a"), w("b"));
        for m in &moves {
            formal = m.apply((&formal.0, &formal.1));
        }
        assert!(p.len() == 1 && q.len() == 1, "invert called on a non-basis");
        let mut inv_images: [Option<Word>; 2] = [None, None];
        for (image, pre) in [(&p, &formal.0), (&q, &formal.1)] {
            let l = image.letters()[0];
            let pre = if l.is_inverse() { pre.inverse() } else { pre.clone() };
            inv_images[l.generator() as usize - 1] = Some(pre);
        }
        let [ia, ib] = inv_images;
        AutF2::new_unchecked(ia.expect("image of a"), ib.expect("image of b"))
    }

    pub fn is_identity(&self) -> bool {
        self == &AutF2::identity()
    }

    /// Largest word length of the two images.
    pub fn max_len(&self) -> usize {
        self.image_a.len().max(self.image_b.len())
    }
}

/// Equality of reduced image words.
pub fn aut_equal(phi: &AutF2, psi: &AutF2) -> bool {
    phi == psi
}

impl fmt::Display for AutF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.image_a, self.image_b)
    }
}

impl fmt::Debug for AutF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AutF2({})", self)
    }
}

impl FromStr for AutF2 {
    type Err = Error;

    /// `"A,B"`, e.g. `"abA,a"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 2 {
            return Err(parse_err("core", s, "expected two comma-separated words"));
        }
        let a: Word = parts[0].parse()?;
        let b: Word = parts[1].parse()?;
        if !over_ab(&a) || !over_ab(&b) {
            return Err(parse_err("core", s, "core images must be words over a, b"));
        }
        AutF2::new(a, b)
    }
}
