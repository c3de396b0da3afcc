//! The directed graph of cores: an edge `v -> w` exists exactly when
//! `(tau_v, tau_w)` satisfies the local-representation equations, and
//! representations of `B_n` are edge-paths through `n - 1` vertices.

use std::collections::BTreeSet;
use std::fmt::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::autf2::AutF2;
use crate::error::{parse_err, Error, Result};
use crate::localrep::catalog::{catalog, identify, Decoration, Family, FamilyId};
use crate::localrep::quad::{check_quad, Quad};
use crate::localrep::rep::LocalRep;
use crate::word::{w, Word};

/// The drawn connected components of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    T,
    TPrime,
    A(u32),
    B,
    C,
    D,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::T => f.write_str("[T]"),
            Component::TPrime => f.write_str("[T']"),
            Component::A(r) => write!(f, "[A_{r}]"),
            Component::B => f.write_str("[B]"),
            Component::C => f.write_str("[C]"),
            Component::D => f.write_str("[D]"),
        }
    }
}

impl Component {
    /// `"T"`, `"T'"`, `"A"` (with the given `r`), `"B"`, `"C"`, `"D"`.
    pub fn parse(tag: &str, r: u32) -> Result<Self> {
        match tag.trim_matches(|c| c == '[' || c == ']') {
            "T" => Ok(Component::T),
            "T'" => Ok(Component::TPrime),
            "A" | "A_r" => Ok(Component::A(r)),
            "B" => Ok(Component::B),
            "C" => Ok(Component::C),
            "D" => Ok(Component::D),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl FromStr for Component {
    type Err = Error;

    /// Accepts `A:r=K` for the A components.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(":r=") {
            Some((tag, k)) => {
                let r = k
                    .parse()
                    .map_err(|_| parse_err("component", s, "r must be a non-negative integer"))?;
                Component::parse(tag, r)
            }
            None => Component::parse(s, 0),
        }
    }
}

/// Vertices and labelled edges of one component as drawn.
#[derive(Clone, Debug)]
pub struct FigureComponent {
    pub component: Component,
    pub vertices: Vec<AutF2>,
    /// `(from, to, label)` indexing into `vertices`.
    pub edges: Vec<(usize, usize, FamilyId)>,
}

fn core(a: Word, b: Word) -> AutF2 {
    AutF2::new(a, b).expect("figure vertices are bases")
}

fn label(s: &str, r: u32) -> FamilyId {
    let mut id: FamilyId = s.parse().expect("figure label");
    if id.family.is_parametric() {
        id.r = r;
    }
    id
}

/// The component as drawn, with two misprints in the drawing corrected: the
/// lower A-vertices have second entry `a^{+-1}`, and the top D-vertex is
/// `(a^-1 b^-1 a, b^2 a)`, as the edge labels require.
pub fn figure_component(component: Component) -> FigureComponent {
    let (vertices, edges): (Vec<AutF2>, Vec<(usize, usize, &str)>) = match component {
        Component::T => (vec![core(w("a"), w("b"))], vec![(0, 0, "T")]),
        Component::TPrime => (
            vec![core(w("a"), w("B")), core(w("A"), w("b"))],
            vec![(0, 1, "T'")],
        ),
        Component::A(r) => {
            let p = w("a").pow(r as i64);
            let conj = |x: &str, e: &Word| e.concat(&w(x)).concat(&e.inverse());
            (
                vec![
                    core(conj("b", &p), w("a")),
                    core(conj("B", &p), w("A")),
                    core(conj("B", &p.inverse()), w("A")),
                    core(conj("b", &p.inverse()), w("a")),
                ],
                vec![
                    (0, 0, "A1"),
                    (0, 1, "A2"),
                    (1, 3, "A2:-s"),
                    (1, 2, "A3"),
                    (2, 0, "A2:-sbw"),
                    (2, 1, "A3:bw"),
                    (3, 2, "A2:bw"),
                    (3, 3, "A1:bw"),
                ],
            )
        }
        Component::B => (
            vec![core(w("B"), w("a")), core(w("b"), w("A"))],
            vec![(0, 0, "B1"), (0, 1, "B2"), (1, 1, "B1:s"), (1, 0, "B2:-")],
        ),
        Component::C => (
            vec![core(w("aBa"), w("a")), core(w("aba"), w("A"))],
            vec![(0, 0, "C1"), (0, 1, "C2"), (1, 1, "C3"), (1, 0, "C2:-s")],
        ),
        Component::D => (
            vec![
                core(w("ABa"), w("bba")),
                core(w("abA"), w("bbA")),
                core(w("Aba"), w("Abb")),
                core(w("aBA"), w("abb")),
            ],
            vec![
                (0, 0, "D1"),
                (0, 2, "D2:-sbw"),
                (1, 0, "D3:-sbw"),
                (1, 2, "D4:-sbw"),
                (2, 1, "D4:-s"),
                (2, 3, "D3:-s"),
                (3, 3, "D1:-s"),
                (3, 1, "D2:-s"),
            ],
        ),
    };
    let r = match component {
        Component::A(r) => r,
        _ => 0,
    };
    FigureComponent {
        component,
        vertices,
        edges: edges
            .into_iter()
            .map(|(i, j, s)| (i, j, label(s, r)))
            .collect(),
    }
}

impl FigureComponent {
    /// Edge set as pairs of cores (duplicates collapse when vertices coincide).
    pub fn edge_set(&self) -> BTreeSet<(AutF2, AutF2)> {
        self.edges
            .iter()
            .map(|&(i, j, _)| (self.vertices[i].clone(), self.vertices[j].clone()))
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaEdge {
    pub from: usize,
    pub to: usize,
    /// First catalog id expanding to the edge's quad, if any.
    pub label: Option<FamilyId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaGraph {
    pub vertices: Vec<AutF2>,
    pub edges: Vec<GammaEdge>,
}

/// Complete edge relation, self-loops included, on the given cores.
/// Repeated vertices are merged, keeping first-occurrence order.
pub fn build_gamma(vertex_set: &[AutF2]) -> GammaGraph {
    let mut vertices: Vec<AutF2> = Vec::new();
    for v in vertex_set {
        if !vertices.contains(v) {
            vertices.push(v.clone());
        }
    }
    let mut edges = Vec::new();
    for (i, v) in vertices.iter().enumerate() {
        for (j, u) in vertices.iter().enumerate() {
            let q = Quad::from_cores(v, u);
            if check_quad(&q).is_valid() {
                edges.push(GammaEdge {
                    from: i,
                    to: j,
                    label: identify(&q),
                });
            }
        }
    }
    GammaGraph { vertices, edges }
}

impl GammaGraph {
    pub fn index_of(&self, v: &AutF2) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    pub fn edge_set(&self) -> BTreeSet<(AutF2, AutF2)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.from].clone(), self.vertices[e.to].clone()))
            .collect()
    }

    pub fn self_loops(&self) -> usize {
        self.edges.iter().filter(|e| e.from == e.to).count()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph gamma {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"({v})\"];");
        }
        for e in &self.edges {
            let lab = e.label.map(|l| l.to_string()).unwrap_or_else(|| "?".into());
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, lab);
        }
        out.push_str("}\n");
        out
    }
}

/// Local representation along a vertex path `v_1, ..., v_{n-1}`.
pub fn rep_from_path(graph: &GammaGraph, path: &[AutF2]) -> Result<LocalRep> {
    let idx = path
        .iter()
        .map(|v| {
            graph
                .index_of(v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    for (k, pair) in idx.windows(2).enumerate() {
        if !graph.has_edge(pair[0], pair[1]) {
            return Err(Error::MissingEdge {
                index: k + 1,
                next: k + 2,
                from: path[k].to_string(),
                to: path[k + 1].to_string(),
            });
        }
    }
    LocalRep::new(path.len() + 1, path.to_vec())
}

fn catalog_pool(max_r: u32) -> impl Iterator<Item = Quad> {
    Family::ALL.into_iter().flat_map(move |family| {
        let rs = if family.is_parametric() { 0..=max_r } else { 0..=0 };
        rs.flat_map(move |r| {
            Decoration::ALL
                .into_iter()
                .map(move |d| catalog(&FamilyId::new(family, r, d)))
        })
    })
}

/// Every `w` with an edge `v -> w`. Neighbours of a core with words of length
/// `L` come from catalog entries with `r <= L`, each confirmed by `check_quad`.
pub fn outgoing(v: &AutF2) -> Vec<AutF2> {
    let set: BTreeSet<AutF2> = catalog_pool(v.max_len() as u32)
        .filter(|q| &q.a == v.image_a() && &q.b == v.image_b())
        .filter_map(|q| q.kappa().ok())
        .filter(|k| check_quad(&Quad::from_cores(v, k)).is_valid())
        .collect();
    set.into_iter().collect()
}

/// Every `u` with an edge `u -> v`.
pub fn incoming(v: &AutF2) -> Vec<AutF2> {
    let set: BTreeSet<AutF2> = catalog_pool(v.max_len() as u32)
        .filter(|q| &q.c == v.image_a() && &q.d == v.image_b())
        .filter_map(|q| q.tau().ok())
        .filter(|t| check_quad(&Quad::from_cores(t, v)).is_valid())
        .collect();
    set.into_iter().collect()
}

/// The drawn component containing `v`, if `v` is one of the drawn vertices.
pub fn component_of(v: &AutF2) -> Option<Component> {
    let fixed = [
        Component::T,
        Component::TPrime,
        Component::B,
        Component::C,
        Component::D,
    ];
    let a_range = (0..=v.max_len() as u32).map(Component::A);
    fixed
        .into_iter()
        .chain(a_range)
        .find(|&c| figure_component(c).vertices.contains(v))
}

/// Cores that can be appended to `rep`. With no cores yet (one strand) any
/// core works; the drawn vertices are offered.
pub fn extensions(rep: &LocalRep) -> Vec<AutF2> {
    match rep.last_core() {
        Some(last) => outgoing(last),
        None => {
            let comps = [
                Component::T,
                Component::TPrime,
                Component::A(1),
                Component::B,
                Component::C,
                Component::D,
            ];
            let set: BTreeSet<AutF2> = comps
                .into_iter()
                .flat_map(|c| figure_component(c).vertices)
                .collect();
            set.into_iter().collect()
        }
    }
}

pub fn can_extend(rep: &LocalRep) -> bool {
    rep.last_core().is_none() || !extensions(rep).is_empty()
}
