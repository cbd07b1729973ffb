//! Directed acyclic graphs, acyclic directed mixed graphs, d/m-separation and
//! latent projection.
//!
//! Vertices are addressed by their position in the declared vertex list;
//! every iteration order in this module derives from that declaration order.

mod projection;
mod separation;
mod statements;

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

pub use projection::latent_project;
pub(crate) use projection::project_indices;
pub use separation::{d_separated_bruteforce, separated_bruteforce};
pub use statements::{enumerate_statements, enumerate_statements_with_limit, vertex_limit, SeparationStatement};

/// Hard cap on graph size imposed by the bitset representation.
pub const MAX_GRAPH_VERTICES: usize = 64;

/// Set of vertex indices, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current.wrapping_sub(full)) & full)
            };
            Some(VertexSet(current))
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Read access shared by [`Dag`] and [`Admg`]; everything separation-related
/// is written once against this trait.
pub trait SeparationGraph {
    fn labels(&self) -> &[String];
    fn parents(&self, v: usize) -> VertexSet;
    fn children(&self, v: usize) -> VertexSet;
    /// Endpoints of bidirected edges at `v`; always empty for a DAG.
    fn siblings(&self, v: usize) -> VertexSet;

    fn vertex_count(&self) -> usize {
        self.labels().len()
    }

    fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    fn index_of(&self, label: &str) -> Result<usize> {
        self.labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    fn label(&self, v: usize) -> &str {
        &self.labels()[v]
    }

    fn labels_of(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels()[v].clone()).collect()
    }

    /// `s` together with every vertex that has a directed path into `s`.
    fn ancestors(&self, s: VertexSet) -> VertexSet {
        let mut result = s;
        let mut frontier: Vec<usize> = s.iter().collect();
        while let Some(v) = frontier.pop() {
            for p in self.parents(v).difference(result).iter() {
                result.insert(p);
                frontier.push(p);
            }
        }
        result
    }

    fn descendants(&self, s: VertexSet) -> VertexSet {
        let mut result = s;
        let mut frontier: Vec<usize> = s.iter().collect();
        while let Some(v) = frontier.pop() {
            for c in self.children(v).difference(result).iter() {
                result.insert(c);
                frontier.push(c);
            }
        }
        result
    }

    /// Separation of single vertices `a` and `b` given `c` (d-separation for a
    /// DAG, m-separation for an ADMG), decided by reachability.
    fn separated(&self, a: usize, b: usize, c: VertexSet) -> bool {
        !separation::connected(self, a, b, c)
    }

    /// Set-level separation: every pair across `a` and `b` is separated.
    fn sets_separated(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> bool {
        a.iter().all(|x| b.iter().all(|y| self.separated(x, y, c)))
    }

    /// Whether any path at all joins `a` and `b`.
    fn adjacent_component(&self, a: usize, b: usize) -> bool {
        let mut seen = VertexSet::singleton(a);
        let mut frontier = vec![a];
        while let Some(v) = frontier.pop() {
            let nb = self.parents(v).union(self.children(v)).union(self.siblings(v));
            for w in nb.difference(seen).iter() {
                seen.insert(w);
                frontier.push(w);
            }
        }
        seen.contains(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Vertices {
    labels: Vec<String>,
}

impl Vertices {
    fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_GRAPH_VERTICES {
            return Err(Error::SizeLimit {
                what: "graph",
                size: labels.len(),
                limit: MAX_GRAPH_VERTICES,
            });
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        Ok(Vertices { labels })
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    fn edge(&self, tail: &str, head: &str) -> Result<(usize, usize)> {
        let (t, h) = (self.index(tail)?, self.index(head)?);
        if t == h {
            return Err(Error::SelfLoop(tail.to_string()));
        }
        Ok((t, h))
    }
}

/// Kahn's procedure; among ready vertices the earliest declared goes first.
fn kahn_order(labels: &[String], parents: &[VertexSet]) -> Result<Vec<usize>> {
    let n = labels.len();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&v| !placed.contains(v) && parents[v].is_subset(placed));
        match next {
            Some(v) => {
                placed.insert(v);
                order.push(v);
            }
            None => {
                let stuck = (0..n).find(|&v| !placed.contains(v)).unwrap_or(0);
                return Err(Error::Cycle(labels[stuck].clone()));
            }
        }
    }
    Ok(order)
}

fn invert(parents: &[VertexSet]) -> Vec<VertexSet> {
    let mut children = vec![VertexSet::EMPTY; parents.len()];
    for (v, ps) in parents.iter().enumerate() {
        for p in ps.iter() {
            children[p].insert(v);
        }
    }
    children
}

/// Random DAG on `n` vertices labelled `V0, V1, ..`: every pair is joined
/// with probability `edge_probability`, oriented along a random permutation.
pub fn random_dag(n: usize, edge_probability: f64, rng: &mut crate::rng::SeededRng) -> Result<Dag> {
    use rand::seq::SliceRandom;
    use rand::Rng;

    if n > MAX_GRAPH_VERTICES {
        return Err(Error::SizeLimit { what: "graph", size: n, limit: MAX_GRAPH_VERTICES });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut parents = vec![VertexSet::EMPTY; n];
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            if rng.gen_bool(edge_probability) {
                parents[v].insert(u);
            }
        }
    }
    Dag::from_parents((0..n).map(|i| format!("V{i}")).collect(), parents)
}

/// Directed acyclic graph over labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    vertices: Vertices,
    parents: Vec<VertexSet>,
    children: Vec<VertexSet>,
    order: Vec<usize>,
}

impl Dag {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let vertices = Vertices::new(vertices.iter().map(|v| v.as_ref().to_string()).collect())?;
        let mut parents = vec![VertexSet::EMPTY; vertices.labels.len()];
        for (t, h) in edges {
            let (t, h) = vertices.edge(t.as_ref(), h.as_ref())?;
            parents[h].insert(t);
        }
        Self::assemble(vertices, parents)
    }

    /// Builds from per-vertex parent sets given as indices.
    pub fn from_parents(labels: Vec<String>, parents: Vec<VertexSet>) -> Result<Self> {
        let vertices = Vertices::new(labels)?;
        if parents.len() != vertices.labels.len() {
            return Err(Error::InvalidArgument("one parent set per vertex is required".into()));
        }
        let all = VertexSet::full(parents.len());
        for (v, ps) in parents.iter().enumerate() {
            if !ps.is_subset(all) {
                return Err(Error::InvalidArgument(format!("parent index out of range at vertex {v}")));
            }
            if ps.contains(v) {
                return Err(Error::SelfLoop(vertices.labels[v].clone()));
            }
        }
        Self::assemble(vertices, parents)
    }

    fn assemble(vertices: Vertices, parents: Vec<VertexSet>) -> Result<Self> {
        let order = kahn_order(&vertices.labels, &parents)?;
        let children = invert(&parents);
        Ok(Dag { vertices, parents, children, order })
    }

    /// Deterministic topological order (ties broken by declaration order).
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn topological_labels(&self) -> Vec<&str> {
        self.order.iter().map(|&v| self.vertices.labels[v].as_str()).collect()
    }

    /// Edges as `(tail, head)` index pairs, ordered by head then tail.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|h| self.parents[h].iter().map(move |t| (t, h)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.parents.iter().map(|p| p.len()).sum()
    }

    /// d-separation of `a` and `b` given `c`, by label.
    pub fn d_separated(&self, a: &str, b: &str, c: &[&str]) -> Result<bool> {
        let (a, b, c) = statements::resolve_query(self, a, b, c)?;
        Ok(self.separated(a, b, c))
    }

    /// Same graph viewed as an ADMG without bidirected edges.
    pub fn to_admg(&self) -> Admg {
        Admg {
            vertices: self.vertices.clone(),
            parents: self.parents.clone(),
            children: self.children.clone(),
            siblings: vec![VertexSet::EMPTY; self.vertex_count()],
        }
    }

    /// Same vertices with a subset of the edges kept.
    pub fn subgraph_edges(&self, keep: impl Fn(usize, usize) -> bool) -> Dag {
        let parents = (0..self.vertex_count())
            .map(|h| self.parents[h].iter().filter(|&t| keep(t, h)).collect())
            .collect();
        Dag::from_parents(self.vertices.labels.clone(), parents).expect("edge subset of a DAG is a DAG")
    }
}

impl SeparationGraph for Dag {
    fn labels(&self) -> &[String] {
        &self.vertices.labels
    }

    fn parents(&self, v: usize) -> VertexSet {
        self.parents[v]
    }

    fn children(&self, v: usize) -> VertexSet {
        self.children[v]
    }

    fn siblings(&self, _v: usize) -> VertexSet {
        VertexSet::EMPTY
    }
}

/// Acyclic directed mixed graph: directed edges plus unordered bidirected edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admg {
    vertices: Vertices,
    parents: Vec<VertexSet>,
    children: Vec<VertexSet>,
    siblings: Vec<VertexSet>,
}

impl Admg {
    pub fn new<S: AsRef<str>>(vertices: &[S], directed: &[(S, S)], bidirected: &[(S, S)]) -> Result<Self> {
        let vertices = Vertices::new(vertices.iter().map(|v| v.as_ref().to_string()).collect())?;
        let n = vertices.labels.len();
        let mut parents = vec![VertexSet::EMPTY; n];
        let mut siblings = vec![VertexSet::EMPTY; n];
        for (t, h) in directed {
            let (t, h) = vertices.edge(t.as_ref(), h.as_ref())?;
            parents[h].insert(t);
        }
        for (x, y) in bidirected {
            let (x, y) = vertices.edge(x.as_ref(), y.as_ref())?;
            siblings[x].insert(y);
            siblings[y].insert(x);
        }
        Self::assemble(vertices, parents, siblings)
    }

    fn assemble(vertices: Vertices, parents: Vec<VertexSet>, siblings: Vec<VertexSet>) -> Result<Self> {
        kahn_order(&vertices.labels, &parents)?;
        let children = invert(&parents);
        Ok(Admg { vertices, parents, children, siblings })
    }

    pub(crate) fn from_parts(labels: Vec<String>, parents: Vec<VertexSet>, siblings: Vec<VertexSet>) -> Result<Self> {
        Self::assemble(Vertices::new(labels)?, parents, siblings)
    }

    /// Directed edges as `(tail, head)` index pairs, ordered by head then tail.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|h| self.parents[h].iter().map(move |t| (t, h)))
            .collect()
    }

    /// Bidirected edges as `(x, y)` with `x < y`, ordered lexicographically.
    pub fn bidirected_edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|x| self.siblings[x].iter().filter(move |&y| y > x).map(move |y| (x, y)))
            .collect()
    }

    /// m-separation of `a` and `b` given `c`, by label.
    pub fn m_separated(&self, a: &str, b: &str, c: &[&str]) -> Result<bool> {
        let (a, b, c) = statements::resolve_query(self, a, b, c)?;
        Ok(self.separated(a, b, c))
    }
}

impl SeparationGraph for Admg {
    fn labels(&self) -> &[String] {
        &self.vertices.labels
    }

    fn parents(&self, v: usize) -> VertexSet {
        self.parents[v]
    }

    fn children(&self, v: usize) -> VertexSet {
        self.children[v]
    }

    fn siblings(&self, v: usize) -> VertexSet {
        self.siblings[v]
    }
}
