//! Reduced words in free groups of arbitrary finite rank.
//!
//! Generators are numbered from 1. In rank two the letters `a`, `b` stand for
//! generators 1 and 2 and the upper-case letters for their inverses; in general
//! rank words are written as whitespace-separated tokens `x3 X1 x2`. The
//! identity prints as `1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};

/// A generator or its inverse.
///
/// The derived order is the letter order used for canonical forms:
/// `x1 < x1^-1 < x2 < x2^-1 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: u32,
    inverse: bool,
}

impl Letter {
    pub fn new(generator: u32, inverse: bool) -> Self {
        assert!(generator >= 1, "generator indices start at 1");
        Letter { generator, inverse }
    }

    /// `+k` is `x_k`, `-k` is `x_k^-1`.
    pub fn from_signed(k: i32) -> Self {
        assert!(k != 0, "letter 0 does not exist");
        Letter::new(k.unsigned_abs(), k < 0)
    }

    pub fn generator(self) -> u32 {
        self.generator
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn signed(self) -> i32 {
        let g = self.generator as i32;
        if self.inverse {
            -g
        } else {
            g
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// A freely reduced word. Immutable: every operation returns a new value.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Free reduction with a single stack pass.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for l in raw {
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    Word { letters: stack }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(k: u32) -> Self {
        Word {
            letters: vec![Letter::new(k, false)],
        }
    }

    /// Builds a reduced word from signed generator indices.
    pub fn from_signed(raw: &[i32]) -> Self {
        reduce(raw.iter().map(|&k| Letter::from_signed(k)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index occurring, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    pub fn contains_generator(&self, k: u32) -> bool {
        self.letters.iter().any(|l| l.generator == k)
    }

    /// Number of letters `x_k^{+-1}` in the word, ignoring signs.
    pub fn occurrences(&self, k: u32) -> usize {
        self.letters.iter().filter(|l| l.generator == k).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        // Only the junction can cancel.
        let mut overlap = 0;
        while overlap < self.len()
            && overlap < other.len()
            && self.letters[self.len() - 1 - overlap].cancels(other.letters[overlap])
        {
            overlap += 1;
        }
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * overlap);
        letters.extend_from_slice(&self.letters[..self.len() - overlap]);
        letters.extend_from_slice(&other.letters[overlap..]);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.concat(&base))
    }

    /// Replaces each letter `x_i^{+-1}` by `images[i-1]^{+-1}` and reduces.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut out = Vec::new();
        for l in &self.letters {
            let img = images
                .get(l.generator as usize - 1)
                .ok_or(Error::MissingImage {
                    generator: l.generator,
                    available: images.len(),
                })?;
            if l.inverse {
                out.extend(img.letters.iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(&img.letters);
            }
        }
        Ok(reduce(out))
    }

    /// Letters in reverse order with signs kept.
    pub fn reverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Interchanges `a` and `b`. Only defined on words over `{a, b}`.
    pub fn swap_letters(&self) -> Result<Word> {
        let letters = self
            .letters
            .iter()
            .map(|l| match l.generator {
                1 => Ok(Letter::new(2, l.inverse)),
                2 => Ok(Letter::new(1, l.inverse)),
                g => Err(Error::Rank {
                    generator: g,
                    rank: 2,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }

    /// Splits `self = conjugator * core * conjugator^-1` with `core`
    /// cyclically reduced.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].cancels(self.letters[n - 1 - k]) {
            k += 1;
        }
        let core = Word {
            letters: self.letters[k..n - k].to_vec(),
        };
        let conjugator = Word {
            letters: self.letters[..k].to_vec(),
        };
        (core, conjugator)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) if self.len() > 1 => !f.cancels(l),
            _ => true,
        }
    }

    /// Conjugacy in a free group: the cyclic cores are rotations of each other.
    pub fn is_conjugate(&self, other: &Word) -> bool {
        let (u, _) = self.cyclically_reduce();
        let (v, _) = other.cyclically_reduce();
        if u.len() != v.len() {
            return false;
        }
        if u.is_empty() {
            return true;
        }
        let doubled: Vec<Letter> = u.letters.iter().chain(u.letters.iter()).copied().collect();
        doubled.windows(v.len()).any(|w| w == v.letters.as_slice())
    }

    pub fn exponent_sum(&self, k: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == k)
            .map(|l| l.sign())
            .sum()
    }

    /// Cyclic rotation moving the letter at `start` to the front.
    pub fn rotate(&self, start: usize) -> Word {
        let mut letters = self.letters[start..].to_vec();
        letters.extend_from_slice(&self.letters[..start]);
        reduce(letters)
    }

    /// Letter syntax (`abA`); panics on generators above 2.
    pub fn to_letter_string(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| match (l.generator, l.inverse) {
                (1, false) => 'a',
                (1, true) => 'A',
                (2, false) => 'b',
                (2, true) => 'B',
                _ => panic!("letter syntax only covers rank 2"),
            })
            .collect()
    }

    /// Token syntax (`x1 X2`).
    pub fn to_token_string(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| format!("{}{}", if l.inverse { 'X' } else { 'x' }, l.generator))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for Word {
    /// Shortlex: length first, then letters in the `Letter` order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.max_generator() <= 2 {
            f.write_str(&self.to_letter_string())
        } else {
            f.write_str(&self.to_token_string())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `1`, letter syntax over `aAbB`, or `x`/`X` tokens.
    fn from_str(s: &str) -> Result<Word> {
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(Word::identity());
        }
        let mut raw = Vec::new();
        if t.starts_with(['x', 'X']) {
            for tok in t.split_whitespace() {
                let inverse = tok.starts_with('X');
                if !tok.starts_with(['x', 'X']) {
                    return Err(parse_err("word", s, format!("bad token {tok:?}")));
                }
                let k: u32 = tok[1..]
                    .parse()
                    .map_err(|_| parse_err("word", s, format!("bad token {tok:?}")))?;
                if k == 0 {
                    return Err(parse_err("word", s, "generator indices start at 1"));
                }
                raw.push(Letter::new(k, inverse));
            }
        } else {
            for c in t.chars() {
                let l = match c {
                    'a' => Letter::new(1, false),
                    'A' => Letter::new(1, true),
                    'b' => Letter::new(2, false),
                    'B' => Letter::new(2, true),
                    c if c.is_whitespace() => continue,
                    c => return Err(parse_err("word", s, format!("unexpected character {c:?}"))),
                };
                raw.push(l);
            }
        }
        Ok(reduce(raw))
    }
}

/// Shorthand for tests and tables: parses a word, panicking on bad input.
pub fn w(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

/// All reduced words over `{a, b}` of exactly the given length, in shortlex order.
pub fn rank2_words_of_length(len: usize) -> Vec<Word> {
    let alphabet = [
        Letter::new(1, false),
        Letter::new(1, true),
        Letter::new(2, false),
        Letter::new(2, true),
    ];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(layer.len() * 3);
        for prefix in &layer {
            for &l in &alphabet {
                if prefix.last().is_some_and(|p| p.cancels(l)) {
                    continue;
                }
                let mut v = prefix.clone();
                v.push(l);
                next.push(v);
            }
        }
        layer = next;
    }
    layer.into_iter().map(|letters| Word { letters }).collect()
}
