use std::fmt;

use serde::Serialize;

use crate::autf2::AutF2;
use crate::error::{Error, Result};
use crate::localrep::quad::{check_quad, Quad};

/// Cores `(tau_1, ..., tau_{n-1})` of a local representation of `B_n`.
///
/// Every adjacent pair satisfies the local-representation equations; far
/// commutation holds automatically. `n = 1` (no cores) is allowed so that the
/// trivial 1-strand braid has a representation.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct LocalRep {
    strands: usize,
    cores: Vec<AutF2>,
    #[serde(skip)]
    inverses: Vec<AutF2>,
}

impl LocalRep {
    pub fn new(strands: usize, cores: Vec<AutF2>) -> Result<Self> {
        let needed = strands.saturating_sub(1);
        if strands == 0 || cores.len() != needed {
            return Err(Error::CoreCount {
                needed,
                given: cores.len(),
            });
        }
        for (i, pair) in cores.windows(2).enumerate() {
            if !check_quad(&Quad::from_cores(&pair[0], &pair[1])).is_valid() {
                return Err(Error::MissingEdge {
                    index: i + 1,
                    next: i + 2,
                    from: pair[0].to_string(),
                    to: pair[1].to_string(),
                });
            }
        }
        let inverses = cores.iter().map(AutF2::invert).collect();
        Ok(LocalRep {
            strands,
            cores,
            inverses,
        })
    }

    /// Wada-type representation: the same core at every position.
    pub fn constant(core: &AutF2, strands: usize) -> Result<Self> {
        LocalRep::new(strands, vec![core.clone(); strands.saturating_sub(1)])
    }

    /// The Artin representation of `B_n`.
    pub fn artin(strands: usize) -> Self {
        LocalRep::constant(&AutF2::artin(), strands).expect("Artin core has a self-loop")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn cores(&self) -> &[AutF2] {
        &self.cores
    }

    /// Core of `sigma_i` (1-based).
    pub fn core(&self, i: usize) -> &AutF2 {
        &self.cores[i - 1]
    }

    /// Core of `sigma_i^-1` (1-based).
    pub fn inverse_core(&self, i: usize) -> &AutF2 {
        &self.inverses[i - 1]
    }

    pub fn last_core(&self) -> Option<&AutF2> {
        self.cores.last()
    }

    /// Representation of `B_{n+1}` with `core` appended.
    pub fn extend(&self, core: &AutF2) -> Result<LocalRep> {
        let mut cores = self.cores.clone();
        cores.push(core.clone());
        LocalRep::new(self.strands + 1, cores)
    }

    /// Restriction to the first `strands` strands.
    pub fn prefix(&self, strands: usize) -> Result<LocalRep> {
        if strands == 0 || strands > self.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                found: strands,
            });
        }
        LocalRep::new(strands, self.cores[..strands - 1].to_vec())
    }
}

impl fmt::Display for LocalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cores: Vec<String> = self.cores.iter().map(|c| c.to_string()).collect();
        write!(f, "B_{}[{}]", self.strands, cores.join("; "))
    }
}

impl fmt::Debug for LocalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalRep({})", self)
    }
}
