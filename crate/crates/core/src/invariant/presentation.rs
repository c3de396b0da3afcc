use std::fmt;

use serde::Serialize;

use crate::braid::{endo_of_braid, BraidWord};
use crate::error::{Error, Result};
use crate::localrep::LocalRep;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.max_generator() as usize > generator_count {
                return Err(Error::Rank {
                    generator: r.max_generator(),
                    rank: generator_count,
                });
            }
        }
        Ok(GroupPresentation {
            generator_count,
            relators,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Rows are relators, columns generators.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                (1..=self.generator_count as u32)
                    .map(|k| r.exponent_sum(k))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_token_string()).collect();
        write!(f, "gens: {}; relators: {}", self.generator_count, rels.join(", "))
    }
}

impl Serialize for GroupPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_token_string()).collect();
        let mut st = s.serialize_struct("GroupPresentation", 2)?;
        st.serialize_field("generators", &self.generator_count)?;
        st.serialize_field("relators", &rels)?;
        st.end()
    }
}

/// `< x_1..x_n | (x_i)Theta(b) x_i^-1 >`. Empty relators are dropped unless
/// `keep_trivial` is set.
pub fn presentation(rep: &LocalRep, b: &BraidWord, keep_trivial: bool) -> Result<GroupPresentation> {
    let endo = endo_of_braid(rep, b)?;
    let relators = endo
        .images()
        .iter()
        .enumerate()
        .map(|(k, img)| img.concat(&Word::generator(k as u32 + 1).inverse()))
        .filter(|r| keep_trivial || !r.is_empty())
        .collect();
    GroupPresentation::new(rep.strands(), relators)
}

/// `g^-1 b g`.
pub fn markov_conjugate(b: &BraidWord, g: &BraidWord) -> Result<BraidWord> {
    g.inverse().concat(b)?.concat(g)
}

/// `b sigma_n^{sign}` in `B_{n+1}`.
pub fn markov_stabilize(b: &BraidWord, sign: i32) -> BraidWord {
    let n = b.strands();
    let mut letters = b.letters().to_vec();
    letters.push(if sign < 0 { -(n as i32) } else { n as i32 });
    BraidWord::new(n + 1, letters).expect("stabilized letters are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_presentations() {
        let p = presentation(&LocalRep::artin(1), &BraidWord::empty(1), false).unwrap();
        assert_eq!((p.generator_count(), p.relators().len()), (1, 0));
        let p = presentation(&LocalRep::artin(2), &BraidWord::empty(2), false).unwrap();
        assert_eq!(p.to_string(), "gens: 2; relators: ");
        let p = presentation(&LocalRep::artin(2), &BraidWord::empty(2), true).unwrap();
        assert_eq!(p.relators().len(), 2);
        let tre = BraidWord::parse("1 1 1", 2).unwrap();
        assert_eq!(presentation(&LocalRep::artin(2), &tre, false).unwrap().relators().len(), 2);
        assert!(presentation(&LocalRep::artin(3), &tre, false).is_err());
    }

    #[test]
    fn markov_moves() {
        let b = BraidWord::parse("1 1 1", 2).unwrap();
        let g = BraidWord::parse("1", 2).unwrap();
        let c = markov_conjugate(&b, &g).unwrap();
        assert_eq!(c.letters(), &[-1, 1, 1, 1, 1]);
        assert_eq!(c.free_reduce(), b);
        let s = markov_stabilize(&b, 1);
        assert_eq!((s.strands(), s.letters()), (3, &[1, 1, 1, 2][..]));
        let u = markov_stabilize(&BraidWord::empty(1), 1);
        assert_eq!((u.strands(), u.letters()), (2, &[1][..]));
        assert_eq!(markov_stabilize(&b, -1).letters(), &[1, 1, 1, -2]);
    }
}
