//! Small undirected multigraphs.
//!
//! A [`Graph`] is an immutable value on at most [`MAX_VERTICES`] dense vertex
//! ids. Parallel edges are stored as multiplicities; loops are rejected. Every
//! operation that "changes" a graph returns a new value, so graphs can be
//! shared freely between sieve workers.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 20;

/// Largest parallel-edge multiplicity a graph may carry. Canonical codes store
/// one nibble per vertex pair.
pub const MAX_MULTIPLICITY: u8 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    A,
    B,
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    /// Row-major `n * n` symmetric multiplicity matrix, zero diagonal.
    mult: Vec<u8>,
    /// Neighbour bitmasks, parallel edges collapsed.
    adj: Vec<u32>,
    edge_count: usize,
    parts: Option<Vec<Part>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs become parallel edges.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::with_vertices(vertex_count)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.add_edge_in_place(u, v)?;
        }
        Ok(g)
    }

    pub fn empty() -> Graph {
        Graph { n: 0, mult: Vec::new(), adj: Vec::new(), edge_count: 0, parts: None }
    }

    pub(crate) fn with_vertices(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        Ok(Graph { n, mult: vec![0; n * n], adj: vec![0; n], edge_count: 0, parts: None })
    }

    /// Builds a graph from a full symmetric multiplicity matrix.
    pub(crate) fn from_matrix(n: usize, mult: Vec<u8>) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        debug_assert_eq!(mult.len(), n * n);
        let mut adj = vec![0u32; n];
        let mut edge_count = 0usize;
        for u in 0..n {
            if mult[u * n + u] != 0 {
                return Err(Error::Loop(u));
            }
            for v in 0..n {
                let m = mult[u * n + v];
                debug_assert_eq!(m, mult[v * n + u]);
                if m > MAX_MULTIPLICITY {
                    return Err(Error::MultiplicityOverflow(u, v));
                }
                if m > 0 {
                    adj[u] |= 1 << v;
                    if u < v {
                        edge_count += m as usize;
                    }
                }
            }
        }
        Ok(Graph { n, mult, adj, edge_count, parts: None })
    }

    pub(crate) fn add_edge_in_place(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n;
        let m = self.mult[u * n + v];
        if m >= MAX_MULTIPLICITY {
            return Err(Error::MultiplicityOverflow(u.min(v), u.max(v)));
        }
        self.mult[u * n + v] = m + 1;
        self.mult[v * n + u] = m + 1;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.edge_count += 1;
        Ok(())
    }

    /// Attaches part labels, checking that every edge crosses between parts.
    pub fn with_parts(mut self, parts: Vec<Part>) -> Result<Graph> {
        if parts.len() != self.n {
            return Err(Error::PartLabelLength { got: parts.len(), expected: self.n });
        }
        for (u, v) in self.edge_pairs() {
            if parts[u] == parts[v] {
                return Err(Error::InvalidPartLabels(u, v));
            }
        }
        self.parts = Some(parts);
        Ok(self)
    }

    pub fn parts(&self) -> Option<&[Part]> {
        self.parts.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.mult[u * self.n + v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Distinct neighbours of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        let row = &self.mult[v * self.n..(v + 1) * self.n];
        row.iter().map(|&m| m as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// Distinct adjacent pairs `(u, v)` with `u < v`.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] & !((2u32 << u) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// All edges `(u, v)` with `u < v`, repeated according to multiplicity.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, v) in self.edge_pairs() {
            for _ in 0..self.multiplicity(u, v) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn matrix(&self) -> &[u8] {
        &self.mult
    }

    /// Two-colouring of every component, or `None` if an odd cycle exists.
    ///
    /// Vertex 0 lands in `A`; in each later component the smallest vertex
    /// lands in `A`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side: Vec<Option<Part>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(Part::A);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are coloured");
                let other = if su == Part::A { Part::B } else { Part::A };
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(other);
                            queue.push_back(w);
                        }
                        Some(s) if s == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (v, s) in side.into_iter().enumerate() {
            match s {
                Some(Part::A) => a.push(v),
                _ => b.push(v),
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Collapses every class of parallel edges to a single edge.
    pub fn simple_underlying(&self) -> Graph {
        let mult = self.mult.iter().map(|&m| m.min(1)).collect();
        let mut g = Graph::from_matrix(self.n, mult).expect("collapsing keeps invariants");
        g.parts = self.parts.clone();
        g
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u32;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Applies `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match vertex count");
        let n = self.n;
        let mut mult = vec![0u8; n * n];
        for u in 0..n {
            for v in 0..n {
                mult[perm[u] * n + perm[v]] = self.mult[u * n + v];
            }
        }
        let mut g = Graph::from_matrix(n, mult).expect("relabeling keeps invariants");
        if let Some(parts) = &self.parts {
            let mut p = vec![Part::A; n];
            for v in 0..n {
                p[perm[v]] = parts[v];
            }
            g.parts = Some(p);
        }
        g
    }

    /// Returns a copy with one more `u`-`v` edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, vertex_count: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut g = self.clone();
        g.parts = None;
        g.add_edge_in_place(u, v)?;
        Ok(g)
    }

    /// Returns a copy with one `u`-`v` edge removed (vertex set unchanged).
    pub fn without_edge(&self, u: usize, v: usize) -> Option<Graph> {
        if u >= self.n || v >= self.n || self.multiplicity(u, v) == 0 {
            return None;
        }
        let mut g = self.clone();
        let n = self.n;
        let m = g.mult[u * n + v] - 1;
        g.mult[u * n + v] = m;
        g.mult[v * n + u] = m;
        if m == 0 {
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
        }
        g.edge_count -= 1;
        Some(g)
    }

    /// Induced subgraph on the vertices *not* in `remove`, ids re-densified in
    /// increasing order. Returns the graph and the kept original ids.
    pub fn remove_vertices(&self, remove: u32) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|&v| remove >> v & 1 == 0).collect();
        (self.induced(&kept), kept)
    }

    /// Induced subgraph on `kept`, vertex `kept[i]` becoming `i`.
    pub fn induced(&self, kept: &[usize]) -> Graph {
        let k = kept.len();
        let mut mult = vec![0u8; k * k];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                mult[i * k + j] = self.mult[u * self.n + v];
            }
        }
        let mut g = Graph::from_matrix(k, mult).expect("induced subgraph keeps invariants");
        if let Some(parts) = &self.parts {
            g.parts = Some(kept.iter().map(|&v| parts[v]).collect());
        }
        g
    }

    /// Graph with the same edges and no part labels.
    pub fn unlabeled(&self) -> Graph {
        let mut g = self.clone();
        g.parts = None;
        g
    }
}

/// Equality compares vertex count and edge multiplicities; part labels are
/// annotations and do not participate.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mult == other.mult
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        let mut first = true;
        for (u, v) in self.edge_pairs() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match self.multiplicity(u, v) {
                1 => write!(f, "{u}-{v}")?,
                m => write!(f, "{u}-{v}x{m}")?,
            }
        }
        write!(f, ")")
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

pub fn mask_of(vertices: &[usize]) -> u32 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}
