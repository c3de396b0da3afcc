use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::autf2::{is_basis, AutF2};
use crate::braid::Endo;
use crate::error::{parse_err, Error, Result};
use crate::localrep::catalog::Decoration;
use crate::word::Word;

/// Images `(tau(a), tau(b), kappa(a), kappa(b))` of a pair of cores.
///
/// The derived order compares the four words in turn under shortlex, which is
/// the order `canonicalize` minimises.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quad {
    pub a: Word,
    pub b: Word,
    pub c: Word,
    pub d: Word,
}

impl Quad {
    pub fn new(a: Word, b: Word, c: Word, d: Word) -> Self {
        Quad { a, b, c, d }
    }

    pub fn from_cores(tau: &AutF2, kappa: &AutF2) -> Self {
        Quad::new(
            tau.image_a().clone(),
            tau.image_b().clone(),
            kappa.image_a().clone(),
            kappa.image_b().clone(),
        )
    }

    pub fn tau(&self) -> Result<AutF2> {
        AutF2::new(self.a.clone(), self.b.clone())
    }

    pub fn kappa(&self) -> Result<AutF2> {
        AutF2::new(self.c.clone(), self.d.clone())
    }

    pub fn words(&self) -> [&Word; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn max_len(&self) -> usize {
        self.words().iter().map(|x| x.len()).max().unwrap_or(0)
    }

    pub fn is_valid(&self) -> bool {
        check_quad(self).is_valid()
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad({})", self)
    }
}

impl FromStr for Quad {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(parse_err("quad", s, "expected four comma-separated words"));
        }
        let ws = parts
            .iter()
            .map(|p| p.parse::<Word>())
            .collect::<Result<Vec<_>>>()?;
        if ws.iter().any(|x| x.max_generator() > 2) {
            return Err(parse_err("quad", s, "quad entries must be words over a, b"));
        }
        let mut it = ws.into_iter();
        let mut next = || it.next().expect("four words");
        Ok(Quad::new(next(), next(), next(), next()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// Image of `x`.
    T,
    /// Image of `y`.
    M,
    /// Image of `z`.
    B,
    /// `(A, B)` is a basis.
    AutTau,
    /// `(C, D)` is a basis.
    AutKappa,
}

/// Outcome of `check_quad`, with both sides of every equation.
#[derive(Clone, Debug, Serialize)]
pub struct QuadReport {
    pub basis_tau: bool,
    pub basis_kappa: bool,
    pub t: (Word, Word),
    pub m: (Word, Word),
    pub b: (Word, Word),
}

impl QuadReport {
    pub fn is_valid(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<Condition> {
        let mut out = Vec::new();
        if self.t.0 != self.t.1 {
            out.push(Condition::T);
        }
        if self.m.0 != self.m.1 {
            out.push(Condition::M);
        }
        if self.b.0 != self.b.1 {
            out.push(Condition::B);
        }
        if !self.basis_tau {
            out.push(Condition::AutTau);
        }
        if !self.basis_kappa {
            out.push(Condition::AutKappa);
        }
        out
    }
}

fn x() -> Word {
    Word::generator(1)
}
fn y() -> Word {
    Word::generator(2)
}
fn z() -> Word {
    Word::generator(3)
}

fn sub(word: &Word, first: &Word, second: &Word) -> Word {
    word.substitute(&[first.clone(), second.clone()])
        .expect("quad words are over a, b")
}

/// Both sides of the three equations in `F_3 = <x, y, z>`:
///
/// ```text
/// [T]  A(A(x,y), C(B(x,y),z)) = A(x, C(y,z))
/// [M]  B(A(x,y), C(B(x,y),z)) = C(B(x, C(y,z)), D(y,z))
/// [B]  D(B(x,y), z)           = D(B(x, C(y,z)), D(y,z))
/// ```
struct Sides {
    axy: Word,
    bxy: Word,
    cyz: Word,
    dyz: Word,
}

impl Sides {
    fn new(q: &Quad) -> Self {
        Sides {
            axy: sub(&q.a, &x(), &y()),
            bxy: sub(&q.b, &x(), &y()),
            cyz: sub(&q.c, &y(), &z()),
            dyz: sub(&q.d, &y(), &z()),
        }
    }

    fn t(&self, q: &Quad) -> (Word, Word) {
        let inner = sub(&q.c, &self.bxy, &z());
        (sub(&q.a, &self.axy, &inner), sub(&q.a, &x(), &self.cyz))
    }

    fn m(&self, q: &Quad) -> (Word, Word) {
        let inner = sub(&q.c, &self.bxy, &z());
        let b_x_c = sub(&q.b, &x(), &self.cyz);
        (sub(&q.b, &self.axy, &inner), sub(&q.c, &b_x_c, &self.dyz))
    }

    fn b(&self, q: &Quad) -> (Word, Word) {
        let b_x_c = sub(&q.b, &x(), &self.cyz);
        (sub(&q.d, &self.bxy, &z()), sub(&q.d, &b_x_c, &self.dyz))
    }
}

pub fn check_quad(q: &Quad) -> QuadReport {
    let s = Sides::new(q);
    QuadReport {
        basis_tau: is_basis(&q.a, &q.b),
        basis_kappa: is_basis(&q.c, &q.d),
        t: s.t(q),
        m: s.m(q),
        b: s.b(q),
    }
}

/// Short-circuit test of [B], then [T], then [M]; no basis checks.
pub fn equations_hold(q: &Quad) -> bool {
    let s = Sides::new(q);
    let eq = |(l, r): (Word, Word)| l == r;
    eq(s.b(q)) && eq(s.t(q)) && eq(s.m(q))
}

/// Same question as `check_quad`, answered by composing the embedded
/// endomorphisms of `F_3` and comparing `s1 s2 s1` with `s2 s1 s2`.
pub fn check_pair_via_braid(tau: &AutF2, kappa: &AutF2) -> bool {
    let s1 = Endo::local(tau, 1, 3);
    let s2 = Endo::local(kappa, 2, 3);
    s1.compose(&s2).compose(&s1) == s2.compose(&s1).compose(&s2)
}

fn require_valid(q: &Quad) -> Result<()> {
    if q.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidQuad(q.to_string()))
    }
}

/// Cores of `sigma_1^-1` and `sigma_2^-1`.
pub fn inverse_rep(q: &Quad) -> Result<Quad> {
    require_valid(q)?;
    Ok(Decoration::INVERSE.apply(q))
}

/// `(D^s, C^s, B^s, A^s)` with `a`, `b` interchanged.
pub fn swap_dual(q: &Quad) -> Result<Quad> {
    require_valid(q)?;
    Ok(Decoration::SWAP.apply(q))
}

/// Every word read backwards.
pub fn backward_dual(q: &Quad) -> Result<Quad> {
    require_valid(q)?;
    Ok(Decoration::BACKWARD.apply(q))
}

/// Least element of the symmetry orbit. Callers must pass a valid quad.
pub fn canonicalize(q: &Quad) -> Quad {
    Decoration::ALL
        .iter()
        .map(|d| d.apply(q))
        .min()
        .expect("orbit is nonempty")
}

pub(crate) fn raw_inverse(q: &Quad) -> Quad {
    let tau = AutF2::new_unchecked(q.a.clone(), q.b.clone()).invert();
    let kappa = AutF2::new_unchecked(q.c.clone(), q.d.clone()).invert();
    Quad::from_cores(&tau, &kappa)
}

pub(crate) fn raw_swap(q: &Quad) -> Quad {
    let s = |x: &Word| x.swap_letters().expect("quad words are over a, b");
    Quad::new(s(&q.d), s(&q.c), s(&q.b), s(&q.a))
}

pub(crate) fn raw_backward(q: &Quad) -> Quad {
    Quad::new(q.a.reverse(), q.b.reverse(), q.c.reverse(), q.d.reverse())
}
