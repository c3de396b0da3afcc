//! Reference implementations used to cross-check the library. Nothing here
//! calls into the algorithms under test: words are plain `Vec<i32>` with
//! `k` for `x_k` and `-k` for its inverse.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;

pub type W = Vec<i32>;

pub fn red(w: &[i32]) -> W {
    let mut out: W = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn inv(w: &[i32]) -> W {
    w.iter().rev().map(|l| -l).collect()
}

pub fn cat(u: &[i32], v: &[i32]) -> W {
    let mut x = u.to_vec();
    x.extend_from_slice(v);
    red(&x)
}

/// Replace `x_k` by `imgs[k-1]`.
pub fn sub(w: &[i32], imgs: &[W]) -> W {
    let mut out = Vec::new();
    for &l in w {
        let img = &imgs[l.unsigned_abs() as usize - 1];
        if l > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(inv(img));
        }
    }
    red(&out)
}

/// Letter syntax over a, b: `a`=1, `A`=-1, `b`=2, `B`=-2.
pub fn ab(s: &str) -> W {
    s.chars()
        .map(|c| match c {
            'a' => 1,
            'A' => -1,
            'b' => 2,
            'B' => -2,
            _ => panic!("bad letter {c}"),
        })
        .collect()
}

pub fn ab_string(w: &[i32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|l| match l {
            1 => 'a',
            -1 => 'A',
            2 => 'b',
            -2 => 'B',
            _ => panic!("rank 2 only"),
        })
        .collect()
}

fn gen(k: i32) -> W {
    vec![k]
}

/// Right-action composition of endomorphisms given by image lists.
pub fn compose(e: &[W], f: &[W]) -> Vec<W> {
    e.iter().map(|x| sub(x, f)).collect()
}

pub fn local(core: &[W; 2], i: usize, n: usize) -> Vec<W> {
    let mut imgs: Vec<W> = (1..=n as i32).map(gen).collect();
    let pair = [gen(i as i32), gen(i as i32 + 1)];
    imgs[i - 1] = sub(&core[0], &pair);
    imgs[i] = sub(&core[1], &pair);
    imgs
}

/// `s1 s2 s1 = s2 s1 s2` on F_3 with `tau` at position 1, `kappa` at 2.
pub fn braid_relation(tau: &[W; 2], kappa: &[W; 2]) -> bool {
    let s1 = local(tau, 1, 3);
    let s2 = local(kappa, 2, 3);
    compose(&compose(&s1, &s2), &s1) == compose(&compose(&s2, &s1), &s2)
}

/// All relations of `B_n` for the given cores, on generator images.
pub fn braid_relations(cores: &[[W; 2]]) -> bool {
    let n = cores.len() + 1;
    let s: Vec<Vec<W>> = cores.iter().enumerate().map(|(i, c)| local(c, i + 1, n)).collect();
    for i in 0..s.len() {
        if i + 1 < s.len()
            && compose(&compose(&s[i], &s[i + 1]), &s[i])
                != compose(&compose(&s[i + 1], &s[i]), &s[i + 1])
        {
            return false;
        }
        for j in i + 2..s.len() {
            if compose(&s[i], &s[j]) != compose(&s[j], &s[i]) {
                return false;
            }
        }
    }
    true
}

/// Every basis `(A, B)` of F_2 with `|A|, |B| <= max_len`, found by breadth-first
/// search over Nielsen moves from the length-one bases. A shortening
/// Nielsen move never lengthens either entry, so the bounded search is complete.
pub fn bases_up_to(max_len: usize) -> BTreeSet<(W, W)> {
    let mut seen: HashSet<(W, W)> = HashSet::new();
    let mut queue = VecDeque::new();
    for (x, y) in [(1, 2), (2, 1)] {
        for sx in [1, -1] {
            for sy in [1, -1] {
                let p = (vec![sx * x], vec![sy * y]);
                seen.insert(p.clone());
                queue.push_back(p);
            }
        }
    }
    while let Some((u, v)) = queue.pop_front() {
        let next = [
            (inv(&u), v.clone()),
            (u.clone(), inv(&v)),
            (v.clone(), u.clone()),
            (cat(&u, &v), v.clone()),
            (cat(&u, &inv(&v)), v.clone()),
            (cat(&v, &u), v.clone()),
            (cat(&inv(&v), &u), v.clone()),
            (u.clone(), cat(&v, &u)),
            (u.clone(), cat(&v, &inv(&u))),
            (u.clone(), cat(&u, &v)),
            (u.clone(), cat(&inv(&u), &v)),
        ];
        for p in next {
            if p.0.len() <= max_len && p.1.len() <= max_len && seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every quad `(A, B, C, D)` with all words of length `<= max_len` whose
/// pairs are bases and that satisfies the braid relation on F_3.
pub fn valid_quads(max_len: usize) -> Vec<[W; 4]> {
    let bases: Vec<(W, W)> = bases_up_to(max_len).into_iter().collect();
    let mut out = Vec::new();
    for (a, b) in &bases {
        for (c, d) in &bases {
            if braid_relation(&[a.clone(), b.clone()], &[c.clone(), d.clone()]) {
                out.push([a.clone(), b.clone(), c.clone(), d.clone()]);
            }
        }
    }
    out
}

/// Images of `x_1..x_n` under the braid, one letter at a time, using the
/// explicit cores of each generator and of its inverse.
pub fn braid_images(cores: &[[W; 2]], inverse_cores: &[[W; 2]], letters: &[i32]) -> Vec<W> {
    let n = cores.len() + 1;
    let mut imgs: Vec<W> = (1..=n as i32).map(gen).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize;
        let core = if l > 0 { &cores[i - 1] } else { &inverse_cores[i - 1] };
        let step = local(core, i, n);
        imgs = imgs.iter().map(|x| sub(x, &step)).collect();
    }
    imgs
}

/// Artin images in closed form: `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`
/// and the inverse `x_i -> x_{i+1}`, `x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}`.
pub fn artin_images(n: usize, letters: &[i32]) -> Vec<W> {
    let mut imgs: Vec<W> = (1..=n as i32).map(gen).collect();
    for &l in letters {
        let i = l.abs();
        let mut step: Vec<W> = (1..=n as i32).map(gen).collect();
        if l > 0 {
            step[i as usize - 1] = vec![i, i + 1, -i];
            step[i as usize] = vec![i];
        } else {
            step[i as usize - 1] = vec![i + 1];
            step[i as usize] = vec![-(i + 1), i, i + 1];
        }
        imgs = imgs.iter().map(|x| sub(x, &step)).collect();
    }
    imgs
}

/// Relators `(x_i)image * x_i^-1`, empty ones dropped.
pub fn relators(imgs: &[W]) -> Vec<W> {
    imgs.iter()
        .enumerate()
        .map(|(k, x)| cat(x, &[-(k as i32 + 1)]))
        .filter(|r| !r.is_empty())
        .collect()
}

/// A permutation group, listed by closure under its generators.
pub struct PermGroup {
    pub name: String,
    pub elements: Vec<Vec<u8>>,
}

fn perm_mul(p: &[u8], q: &[u8]) -> Vec<u8> {
    // apply p, then q
    p.iter().map(|&i| q[i as usize]).collect()
}

fn perm_inv(p: &[u8]) -> Vec<u8> {
    let mut out = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j as usize] = i as u8;
    }
    out
}

impl PermGroup {
    pub fn generated(name: &str, degree: usize, gens: &[Vec<u8>]) -> Self {
        let id: Vec<u8> = (0..degree as u8).collect();
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let x = perm_mul(&elements[i], g);
                if !elements.contains(&x) {
                    elements.push(x);
                }
            }
            i += 1;
        }
        PermGroup {
            name: name.to_string(),
            elements,
        }
    }

    pub fn cyclic(n: usize) -> Self {
        let shift: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        PermGroup::generated(&format!("Z{n}"), n, &[shift])
    }

    pub fn symmetric(k: usize) -> Self {
        let mut cycle: Vec<u8> = (1..k as u8).collect();
        cycle.push(0);
        let mut swap: Vec<u8> = (0..k as u8).collect();
        swap.swap(0, 1);
        PermGroup::generated(&format!("S{k}"), k, &[cycle, swap])
    }

    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        let refl: Vec<u8> = (0..n).map(|i| ((n - i) % n) as u8).collect();
        PermGroup::generated(&format!("D{n}"), n, &[rot, refl])
    }

    /// Odometer over all tuples; no pruning.
    pub fn count_homs(&self, gens: usize, rels: &[W]) -> u64 {
        let m = self.elements.len();
        let invs: Vec<Vec<u8>> = self.elements.iter().map(|p| perm_inv(p)).collect();
        let id = &self.elements[0];
        let mut idx = vec![0usize; gens];
        let mut count = 0;
        loop {
            let ok = rels.iter().all(|r| {
                let mut acc = id.clone();
                for &l in r {
                    let k = idx[l.unsigned_abs() as usize - 1];
                    let x = if l > 0 { &self.elements[k] } else { &invs[k] };
                    acc = perm_mul(&acc, x);
                }
                &acc == id
            });
            count += u64::from(ok);
            let mut pos = 0;
            loop {
                if pos == gens {
                    return count;
                }
                idx[pos] += 1;
                if idx[pos] < m {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}

pub fn perm_group(name: &str) -> PermGroup {
    let k: usize = name[1..].parse().unwrap();
    match &name[..1] {
        "Z" => PermGroup::cyclic(k),
        "S" => PermGroup::symmetric(k),
        "D" => PermGroup::dihedral(k),
        _ => panic!("unknown group {name}"),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors `d_k` (gcd of k-minors),
/// padded with zeros to `cols`.
pub fn invariant_factors(m: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=rows.min(cols) {
        let mut g: i128 = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / prev) as i64);
        prev = g;
    }
    out.resize(cols, 0);
    out
}

pub fn exponent_matrix(gens: usize, rels: &[W]) -> Vec<Vec<i64>> {
    rels.iter()
        .map(|r| {
            (1..=gens as i32)
                .map(|k| r.iter().filter(|l| l.abs() == k).map(|l| l.signum() as i64).sum())
                .collect()
        })
        .collect()
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> Vec<i32> {
    if strands < 2 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, gens: i32, max_len: usize) -> W {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let k = rng.gen_range(1..=gens);
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect()
}
