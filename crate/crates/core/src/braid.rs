use std::fmt;

use crate::autf2::AutF2;
use crate::error::{parse_err, Error, Result};
use crate::localrep::LocalRep;
use crate::word::Word;

/// A word in `sigma_1, ..., sigma_{n-1}`; letter `k` is `sigma_k`, `-k` its
/// inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::StrandMismatch {
                expected: 1,
                found: 0,
            });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::BraidIndex {
                    index: l as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    /// Whitespace- or comma-separated signed indices, e.g. `"1 1 1"`, `"-2,1"`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| parse_err("braid", text, format!("bad token {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent `sigma_i sigma_i^-1` pairs; no braid relations.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other.strands)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// The same braid on strands `k+1, ..., k+n` of `B_{n+k}`.
    pub fn shift(&self, k: usize) -> BraidWord {
        let k = k as i32;
        BraidWord {
            strands: self.strands + k as usize,
            letters: self
                .letters
                .iter()
                .map(|&l| if l > 0 { l + k } else { l - k })
                .collect(),
        }
    }

    /// Same letters viewed in `B_m`, `m >= n`.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                found: strands,
            });
        }
        Ok(BraidWord {
            strands,
            letters: self.letters.clone(),
        })
    }

    pub(crate) fn check_strands(&self, found: usize) -> Result<()> {
        if found == self.strands {
            Ok(())
        } else {
            Err(Error::StrandMismatch {
                expected: self.strands,
                found,
            })
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Endomorphism of `F_n` given by the images of `x_1, ..., x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endo {
    images: Vec<Word>,
}

impl Endo {
    pub fn identity(rank: usize) -> Self {
        Endo {
            images: (1..=rank as u32).map(Word::generator).collect(),
        }
    }

    pub fn from_images(images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        for img in &images {
            if img.max_generator() as usize > rank {
                return Err(Error::Rank {
                    generator: img.max_generator(),
                    rank,
                });
            }
        }
        Ok(Endo { images })
    }

    /// `core` acting on `x_i, x_{i+1}` of `F_n`, identity elsewhere.
    pub fn local(core: &AutF2, i: usize, rank: usize) -> Self {
        assert!(i >= 1 && i < rank, "local position {i} outside 1..{rank}");
        let pair = [Word::generator(i as u32), Word::generator(i as u32 + 1)];
        let mut images = Endo::identity(rank).images;
        images[i - 1] = core.image_a().substitute(&pair).expect("core over a, b");
        images[i] = core.image_b().substitute(&pair).expect("core over a, b");
        Endo { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_k` (1-based).
    pub fn image(&self, k: usize) -> &Word {
        &self.images[k - 1]
    }

    pub fn apply(&self, x: &Word) -> Result<Word> {
        x.substitute(&self.images)
    }

    /// Right action: `x -> (x.self).other`.
    pub fn compose(&self, other: &Endo) -> Endo {
        Endo {
            images: self
                .images
                .iter()
                .map(|x| x.substitute(&other.images).expect("equal ranks"))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, x)| *x == Word::generator(k as u32 + 1))
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(k, x)| format!("x{} -> {}", k + 1, x.to_token_string()))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// `Theta(sigma_i^sign)` for the representation `rep`.
pub fn local_endo(rep: &LocalRep, i: usize, sign: i32) -> Endo {
    let core = if sign >= 0 {
        rep.core(i)
    } else {
        rep.inverse_core(i)
    };
    Endo::local(core, i, rep.strands())
}

/// Right-action product of the letters of `b`, in word order.
pub fn endo_of_braid(rep: &LocalRep, b: &BraidWord) -> Result<Endo> {
    b.check_strands(rep.strands())?;
    let mut cache: Vec<Option<Endo>> = vec![None; 2 * rep.strands()];
    let mut acc = Endo::identity(rep.strands());
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let slot = 2 * i + usize::from(l < 0);
        let step = cache[slot].get_or_insert_with(|| local_endo(rep, i, l.signum()));
        acc = acc.compose(step);
    }
    Ok(acc)
}

/// Braid and far-commutation relations on generator images.
pub fn verify_braid_relations(rep: &LocalRep) -> bool {
    let n = rep.strands();
    let s: Vec<Endo> = (1..n).map(|i| local_endo(rep, i, 1)).collect();
    for i in 0..s.len() {
        if i + 1 < s.len() {
            let lhs = s[i].compose(&s[i + 1]).compose(&s[i]);
            let rhs = s[i + 1].compose(&s[i]).compose(&s[i + 1]);
            if lhs != rhs {
                return false;
            }
        }
        for j in i + 2..s.len() {
            if s[i].compose(&s[j]) != s[j].compose(&s[i]) {
                return false;
            }
        }
    }
    true
}
