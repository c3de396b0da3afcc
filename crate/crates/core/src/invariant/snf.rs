use crate::error::{Error, Result};
use crate::invariant::presentation::GroupPresentation;

fn add_mul(x: i64, q: i64, y: i64) -> Result<i64> {
    // x - q*y
    q.checked_mul(y)
        .and_then(|p| x.checked_sub(p))
        .ok_or(Error::Overflow)
}

/// Invariant factors of an integer matrix with `cols` columns: the Smith
/// diagonal padded with zeros to length `cols`, nonzero entries first and
/// forming a divisibility chain. Overflow is reported, never wrapped.
pub fn smith_diagonal(matrix: &[Vec<i64>], cols: usize) -> Result<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = matrix.to_vec();
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero magnitude in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].unsigned_abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut dirty = false;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            for j in t..cols {
                m[i][j] = add_mul(m[i][j], q, m[t][j])?;
            }
            dirty |= m[i][t] != 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            for row in m.iter_mut().skip(t) {
                row[j] = add_mul(row[j], q, row[t])?;
            }
            dirty |= m[t][j] != 0;
        }
        if dirty {
            continue;
        }
        let p = m[t][t];
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
        if let Some(i) = bad {
            for j in t..cols {
                m[t][j] = m[t][j].checked_add(m[i][j]).ok_or(Error::Overflow)?;
            }
            continue;
        }
        diag.push(p.checked_abs().ok_or(Error::Overflow)?);
        t += 1;
    }
    diag.resize(cols, 0);
    Ok(diag)
}

/// Smith diagonal of the relator exponent matrix; `1` entries are kept.
pub fn abelianization(p: &GroupPresentation) -> Result<Vec<i64>> {
    smith_diagonal(&p.exponent_matrix(), p.generator_count())
}
