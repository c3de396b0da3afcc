use std::collections::BTreeSet;

use crate::invariant::presentation::GroupPresentation;
use crate::word::Word;

const MAX_ROUNDS: usize = 1000;

/// Cyclically reduced and relabelled so the least rotation of `r` or `r^-1`
/// represents it; used to spot duplicates.
fn cyclic_key(r: &Word) -> Word {
    let mut best: Option<Word> = None;
    for v in [r.clone(), r.inverse()] {
        for k in 0..v.len().max(1) {
            let rot = if v.is_empty() { v.clone() } else { v.rotate(k) };
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn tidy(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    relators
        .into_iter()
        .map(|r| r.cyclically_reduce().0)
        .filter(|r| !r.is_empty())
        .filter(|r| seen.insert(cyclic_key(r)))
        .collect()
}

/// A relator containing some `x_j` exactly once, rewritten as `x_j = w`.
fn find_elimination(relators: &[Word], gens: usize) -> Option<(usize, u32, Word)> {
    let mut best: Option<(usize, u32, Word)> = None;
    for (idx, r) in relators.iter().enumerate() {
        for j in 1..=gens as u32 {
            if r.occurrences(j) != 1 {
                continue;
            }
            let pos = r
                .letters()
                .iter()
                .position(|l| l.generator() == j)
                .expect("occurs once");
            let rot = r.rotate(pos);
            // rot = x_j^e w
            let rest = Word::from_signed(
                &rot.letters()[1..].iter().map(|l| l.signed()).collect::<Vec<_>>(),
            );
            let value = if rot.letters()[0].is_inverse() {
                rest
            } else {
                rest.inverse()
            };
            let better = best.as_ref().map_or(true, |(i, _, _)| r.len() < relators[*i].len());
            if better {
                best = Some((idx, j, value));
            }
        }
    }
    best
}

/// Eliminates generators that occur exactly once in some relator, drops
/// empty and duplicate relators, and cyclically reduces, until nothing
/// changes or the round cap is hit. Every step is a Tietze move.
pub fn tietze_simplify(p: &GroupPresentation) -> GroupPresentation {
    let mut gens = p.generator_count();
    let mut relators = tidy(p.relators().to_vec());
    for _ in 0..MAX_ROUNDS {
        let Some((idx, j, value)) = find_elimination(&relators, gens) else {
            break;
        };
        relators.remove(idx);
        // x_k -> x_{k-1} above j; `value` does not mention x_j
        let renumber: Vec<Word> = (1..=gens as u32)
            .map(|k| if k > j { Word::generator(k - 1) } else { Word::generator(k) })
            .collect();
        let mut images = renumber.clone();
        images[j as usize - 1] = value.substitute(&renumber).expect("images cover all generators");
        relators = relators
            .iter()
            .map(|r| r.substitute(&images).expect("images cover all generators"))
            .collect();
        gens -= 1;
        relators = tidy(relators);
    }
    GroupPresentation::new(gens, relators).expect("generators renumbered consistently")
}
