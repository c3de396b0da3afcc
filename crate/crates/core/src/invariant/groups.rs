use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::invariant::presentation::GroupPresentation;

/// Default refusal threshold on `|G|^generators`.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A finite group as a validated multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroupTable {
    /// `table[i * order + j]` is the product `i * j`.
    pub fn from_table(name: &str, order: usize, table: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::GroupTable(format!("{name}: {msg}")));
        if order == 0 {
            return bad("order must be positive".into());
        }
        if table.len() != order * order {
            return bad(format!("expected {} entries, found {}", order * order, table.len()));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= order) {
            return bad(format!("entry {x} out of range"));
        }
        let mul = |i: usize, j: usize| table[i * order + j];
        let Some(identity) =
            (0..order).find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
        else {
            return bad("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(order);
        for x in 0..order {
            match (0..order).find(|&y| mul(x, y) == identity && mul(y, x) == identity) {
                Some(y) => inverses.push(y),
                None => return bad(format!("element {x} has no inverse")),
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            name: name.to_string(),
            order,
            table,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        FiniteGroupTable::from_table(&format!("Z{n}"), n, table).expect("cyclic table")
    }

    /// Symmetric group on `k` points; elements are permutations in
    /// lexicographic order, product is "apply left, then right".
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let n = perms.len();
        let mut table = Vec::with_capacity(n * n);
        for p in &perms {
            for q in &perms {
                let pq: Vec<usize> = (0..k).map(|i| q[p[i]]).collect();
                table.push(index(&pq));
            }
        }
        FiniteGroupTable::from_table(&format!("S{k}"), n, table).expect("symmetric table")
    }

    /// Dihedral group of order `2n`; element `2i + j` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        let mut table = Vec::with_capacity(4 * n * n);
        for x in 0..2 * n {
            for y in 0..2 * n {
                let (i, j) = (x / 2, x % 2);
                let (k, l) = (y / 2, y % 2);
                // r^i s^j r^k s^l = r^{i +- k} s^{j+l}
                let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                table.push(2 * rot + (j + l) % 2);
            }
        }
        FiniteGroupTable::from_table(&format!("D{n}"), 2 * n, table).expect("dihedral table")
    }

    /// `Z<n>`, `S<k>` (k <= 5), `D<n>` (order 2n).
    pub fn builtin(name: &str) -> Result<Self> {
        let unknown = || Error::GroupTable(format!("unknown group {name:?}"));
        let (kind, num) = name.split_at(name.len().min(1));
        let k: usize = num.parse().map_err(|_| unknown())?;
        match (kind, k) {
            ("Z", 1..=64) => Ok(FiniteGroupTable::cyclic(k)),
            ("S", 1..=5) => Ok(FiniteGroupTable::symmetric(k)),
            ("D", 2..=32) => Ok(FiniteGroupTable::dihedral(k)),
            _ => Err(unknown()),
        }
    }

    /// Whitespace-separated integers: the order `N`, then `N*N` 0-based
    /// entries in row-major order.
    pub fn parse_table(name: &str, text: &str) -> Result<Self> {
        let nums = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::GroupTable(format!("{name}: bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let Some((&order, rest)) = nums.split_first() else {
            return Err(Error::GroupTable(format!("{name}: empty table")));
        };
        FiniteGroupTable::from_table(name, order, rest.to_vec())
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        FiniteGroupTable::parse_table(&name, &text)
    }

    /// A built-in name, or else a path to a table file.
    pub fn resolve(spec: &str) -> Result<Self> {
        FiniteGroupTable::builtin(spec).or_else(|e| {
            let path = Path::new(spec);
            if path.exists() {
                FiniteGroupTable::from_file(path)
            } else {
                Err(e)
            }
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &out {
            for x in (0..k).filter(|x| !p.contains(x)) {
                let mut q: Vec<usize> = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// `Z2..Z6, S3, S4, D4, D5`.
pub fn default_groups() -> Vec<FiniteGroupTable> {
    ["Z2", "Z3", "Z4", "Z5", "Z6", "S3", "S4", "D4", "D5"]
        .iter()
        .map(|n| FiniteGroupTable::builtin(n).expect("built-in group"))
        .collect()
}

pub fn count_homs(p: &GroupPresentation, g: &FiniteGroupTable) -> Result<u64> {
    count_homs_with_budget(p, g, DEFAULT_BUDGET)
}

/// Relator letters as `(generator index, inverse)`, grouped by the largest
/// generator they mention so each is checked as soon as it is determined.
struct Plan {
    gens: usize,
    checks: Vec<Vec<Vec<(usize, bool)>>>,
}

impl Plan {
    fn new(p: &GroupPresentation) -> Self {
        let gens = p.generator_count();
        let mut checks = vec![Vec::new(); gens + 1];
        for r in p.relators() {
            let letters: Vec<(usize, bool)> = r
                .letters()
                .iter()
                .map(|l| (l.generator() as usize - 1, l.is_inverse()))
                .collect();
            checks[r.max_generator() as usize].push(letters);
        }
        Plan { gens, checks }
    }

    fn holds(&self, g: &FiniteGroupTable, level: usize, assign: &[usize]) -> bool {
        self.checks[level].iter().all(|rel| {
            rel.iter().fold(g.identity(), |acc, &(k, inv)| {
                let x = assign[k];
                g.mul(acc, if inv { g.inv(x) } else { x })
            }) == g.identity()
        })
    }

    fn count(&self, g: &FiniteGroupTable, assign: &mut Vec<usize>) -> u64 {
        let level = assign.len();
        if !self.holds(g, level, assign) {
            return 0;
        }
        if level == self.gens {
            return 1;
        }
        let mut total = 0;
        for x in 0..g.order() {
            assign.push(x);
            total += self.count(g, assign);
            assign.pop();
        }
        total
    }
}

/// Number of tuples of group elements, one per generator, killing every
/// relator. Refuses when `|G|^generators` exceeds `budget`.
pub fn count_homs_with_budget(p: &GroupPresentation, g: &FiniteGroupTable, budget: u128) -> Result<u64> {
    let candidates = (g.order() as u128)
        .checked_pow(p.generator_count() as u32)
        .unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    let plan = Plan::new(p);
    if plan.gens == 0 {
        return Ok(plan.count(g, &mut Vec::new()));
    }
    Ok((0..g.order())
        .into_par_iter()
        .map(|x| {
            let mut assign = vec![x];
            plan.count(g, &mut assign)
        })
        .sum())
}
