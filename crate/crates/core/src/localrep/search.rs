//! Bounded exhaustive search for quads satisfying the local-representation
//! equations.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::autf2::{abelian_determinant, is_basis};
use crate::localrep::catalog::{catalog, Decoration, Family, FamilyId};
use crate::localrep::quad::{canonicalize, equations_hold, Quad};
use crate::word::{rank2_words_of_length, Word};

/// All pairs `(A, B)` of nonempty reduced words of length `<= max_len` forming
/// a basis of `F_2`. The determinant filter runs before the commutator test.
pub fn rank2_basis_pairs(max_len: usize) -> Vec<(Word, Word)> {
    let words: Vec<Word> = (1..=max_len).flat_map(rank2_words_of_length).collect();
    words
        .par_iter()
        .flat_map_iter(|a| {
            words
                .iter()
                .filter(move |b| abelian_determinant(a, b).abs() == 1 && is_basis(a, b))
                .map(move |b| (a.clone(), b.clone()))
        })
        .collect()
}

/// Canonical forms of every valid quad whose four words have length `<= max_len`.
///
/// Work is split by the first pair `(A, B)`; the merged set does not depend on
/// the number of workers. `jobs = None` uses the global rayon pool.
pub fn classify_search(max_len: usize, jobs: Option<usize>) -> BTreeSet<Quad> {
    let run = || {
        let pairs = rank2_basis_pairs(max_len);
        pairs
            .par_iter()
            .map(|(a, b)| {
                let mut found = BTreeSet::new();
                for (c, d) in &pairs {
                    let q = Quad::new(a.clone(), b.clone(), c.clone(), d.clone());
                    if equations_hold(&q) {
                        found.insert(canonicalize(&q));
                    }
                }
                found
            })
            .reduce(BTreeSet::new, |mut acc, part| {
                acc.extend(part);
                acc
            })
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

/// Canonical forms of all decorated catalog quads with every word of length
/// `<= max_len`, using `r <= (max_len - 1) / 2` for the A families.
pub fn truncated_catalog(max_len: usize) -> BTreeSet<Quad> {
    let max_r = (max_len.saturating_sub(1) / 2) as u32;
    let mut out = BTreeSet::new();
    for family in Family::ALL {
        let rs = if family.is_parametric() { 0..=max_r } else { 0..=0 };
        for r in rs {
            for decoration in Decoration::ALL {
                let q = catalog(&FamilyId::new(family, r, decoration));
                if q.max_len() <= max_len {
                    out.insert(canonicalize(&q));
                }
            }
        }
    }
    out
}
