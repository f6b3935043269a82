//! ∇Y and Y∇ moves, cousin families, and the named graphs used as IK
//! certificates.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_VERTICES};

pub const DEFAULT_FAMILY_CAP: usize = 10_000;

/// Replaces the triangle `t` by a new vertex joined to its corners.
pub fn nabla_y(g: &Graph, t: [usize; 3]) -> Result<Graph> {
    let n = g.vertex_count();
    let [a, b, c] = t;
    if t.iter().any(|&v| v >= n) || a == b || b == c || a == c {
        return Err(Error::NotTriangle(t));
    }
    if !(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) {
        return Err(Error::NotTriangle(t));
    }
    if n + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices { got: n + 1, max: MAX_VERTICES });
    }
    let mut edges = g.edges();
    for (u, v) in [(a, b), (b, c), (a, c)] {
        let i = edges
            .iter()
            .position(|&(x, y)| (x, y) == (u.min(v), u.max(v)))
            .expect("triangle edge present");
        edges.swap_remove(i);
    }
    edges.extend([(a, n), (b, n), (c, n)]);
    Graph::new(n + 1, &edges)
}

/// Removes the degree-3 vertex `v` and joins its neighbours pairwise. A pair
/// that is already adjacent keeps a single edge.
pub fn y_nabla(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, vertex_count: n });
    }
    let nb = g.neighbor_mask(v);
    if g.degree(v) != 3 || nb.count_ones() != 3 {
        return Err(Error::NotYVertex { vertex: v, degree: g.degree(v) });
    }
    let corners: Vec<usize> = bits(nb).collect();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&(x, y)| x != v && y != v).collect();
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let (x, y) = (corners[i], corners[j]);
        if !g.adjacent(x, y) {
            edges.push((x, y));
        }
    }
    let shift = |w: usize| if w > v { w - 1 } else { w };
    let edges: Vec<_> = edges.into_iter().map(|(x, y)| (shift(x), shift(y))).collect();
    Graph::new(n - 1, &edges)
}

/// Pairwise-adjacent vertex triples `u < v < w`.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for v in bits(g.neighbor_mask(u) >> (u + 1) << (u + 1)) {
            for w in bits(g.neighbor_mask(u) & g.neighbor_mask(v) >> (v + 1) << (v + 1)) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Vertices where a Y∇ move applies.
pub fn y_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 3 && g.neighbor_mask(v).count_ones() == 3).collect()
}

/// Closure of a seed under both moves, keyed by canonical code.
#[derive(Clone, Debug)]
pub struct Family {
    pub seed_name: String,
    pub member_graphs: BTreeMap<CanonicalCode, Graph>,
}

impl Family {
    pub fn len(&self) -> usize {
        self.member_graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member_graphs.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.member_graphs.keys()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.member_graphs.values()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.member_graphs.contains_key(&canonical_code(g))
    }
}

pub fn cousins(seed: &Graph) -> Result<Family> {
    cousins_named(seed, "graph", DEFAULT_FAMILY_CAP)
}

/// Breadth-first closure; fails once more than `cap` members are found.
pub fn cousins_named(seed: &Graph, seed_name: &str, cap: usize) -> Result<Family> {
    let mut seen = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical_code(seed), seed.clone());
    queue.push_back(seed.clone());
    while let Some(g) = queue.pop_front() {
        let moves = triangles(&g)
            .into_iter()
            .map(|t| nabla_y(&g, t))
            .chain(y_vertices(&g).into_iter().map(|v| y_nabla(&g, v)));
        for next in moves {
            let next = next?;
            let code = canonical_code(&next);
            if seen.contains_key(&code) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::FamilyTooLarge { seed: seed_name.to_string(), cap });
            }
            seen.insert(code, next.clone());
            queue.push_back(next);
        }
    }
    Ok(Family { seed_name: seed_name.to_string(), member_graphs: seen })
}

/// Closure of a seed under ∇Y moves only.
pub fn nabla_y_descendants(seed: &Graph, seed_name: &str, cap: usize) -> Result<Family> {
    let mut seen = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical_code(seed), seed.clone());
    queue.push_back(seed.clone());
    while let Some(g) = queue.pop_front() {
        for t in triangles(&g) {
            let next = nabla_y(&g, t)?;
            let code = canonical_code(&next);
            if seen.contains_key(&code) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::FamilyTooLarge { seed: seed_name.to_string(), cap });
            }
            seen.insert(code, next.clone());
            queue.push_back(next);
        }
    }
    Ok(Family { seed_name: seed_name.to_string(), member_graphs: seen })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Catalog {
    K7,
    K5,
    K33,
    K55,
    K3311,
    Heawood,
    Cousin110,
}

impl Catalog {
    pub const ALL: [Catalog; 7] =
        [Catalog::K7, Catalog::K5, Catalog::K33, Catalog::K55, Catalog::K3311, Catalog::Heawood, Catalog::Cousin110];

    pub fn name(self) -> &'static str {
        match self {
            Catalog::K7 => "K7",
            Catalog::K5 => "K5",
            Catalog::K33 => "K33",
            Catalog::K55 => "K55",
            Catalog::K3311 => "K3311",
            Catalog::Heawood => "HEAWOOD",
            Catalog::Cousin110 => "COUSIN110",
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Catalog::K7 => complete_multipartite(&[1; 7]),
            Catalog::K5 => complete_multipartite(&[1; 5]),
            Catalog::K33 => complete_multipartite(&[3, 3]),
            Catalog::K55 => complete_multipartite(&[5, 5]),
            Catalog::K3311 => complete_multipartite(&[3, 3, 1, 1]),
            Catalog::Heawood => heawood(),
            Catalog::Cousin110 => cousin110(),
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Catalog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Catalog> {
        Catalog::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCatalogName(s.to_string()))
    }
}

pub fn catalog(name: &str) -> Result<Graph> {
    name.parse::<Catalog>().map(Catalog::graph)
}

/// Complete multipartite graph; parts are consecutive vertex ranges.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(i).take(s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("complete multipartite graph is valid")
}

/// Fano plane incidence graph: points `0..7`, line `7 + i` = `{i, i+1, i+3}` mod 7.
fn heawood() -> Graph {
    let mut edges = Vec::with_capacity(21);
    for i in 0..7 {
        for d in [0, 1, 3] {
            edges.push(((i + d) % 7, 7 + i));
        }
    }
    Graph::new(14, &edges).expect("Heawood edges are valid")
}

/// K5,5 (a_i = i, b_i = 5 + i) minus the path b0 - a0 - b1 - a1.
fn cousin110() -> Graph {
    let removed = [(0, 5), (0, 6), (1, 6)];
    let edges: Vec<_> = (0..5)
        .flat_map(|a| (5..10).map(move |b| (a, b)))
        .filter(|e| !removed.contains(e))
        .collect();
    Graph::new(10, &edges).expect("Cousin 110 edges are valid")
}
