//! Exact planarity testing and the small-graph classifier used on reduced
//! graphs `Ĝ_{a,b}`.
//!
//! [`is_planar`] splits the simple underlying graph into biconnected blocks
//! and runs the Demoucron–Malgrange–Pertuiset path embedding on each block
//! that survives the Euler bound.

use std::fmt;
use std::sync::OnceLock;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let s = g.simple_underlying();
    let n = s.vertex_count();
    let m = s.edge_count();
    // a Kuratowski subdivision needs at least 9 edges
    if m < 9 || n < 5 {
        return true;
    }
    let active = (0..n).filter(|&v| s.neighbor_mask(v) != 0).count();
    if active >= 3 && m > 3 * active - 6 {
        return false;
    }
    blocks(&s).into_iter().filter(|b| b.len() >= 9).all(|b| block_is_planar(&b))
}

/// Edge sets of the biconnected components (Tarjan, edge stack).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(st: &mut State, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for w in bits(st.g.neighbor_mask(u)) {
            if Some(w) == parent {
                continue;
            }
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                dfs(st, w, Some(u));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let mut st = State { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if st.disc[v] == 0 && g.neighbor_mask(v) != 0 {
            dfs(&mut st, v, None);
        }
    }
    st.out
}

/// Demoucron–Malgrange–Pertuiset on a 2-connected simple graph.
fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let mut adj = [0u32; 32];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let total = edges.len();
    let mut placed = [0u32; 32];
    let is_placed = |placed: &[u32; 32], u: usize, v: usize| placed[u] >> v & 1 == 1;

    // initial cycle: edge (u, v) closed by a shortest u-v path avoiding it
    let (u0, v0) = edges[0];
    let Some(path) = bfs_path(&adj, u0, v0, u32::MAX, Some((u0, v0))) else {
        return true;
    };
    let mut faces: Vec<Vec<usize>> = vec![path.clone(), path.clone()];
    let mut embedded_v = 0u32;
    for w in path.windows(2) {
        placed[w[0]] |= 1 << w[1];
        placed[w[1]] |= 1 << w[0];
    }
    placed[u0] |= 1 << v0;
    placed[v0] |= 1 << u0;
    for &v in &path {
        embedded_v |= 1 << v;
    }
    let mut embedded_e = path.len();

    while embedded_e < total {
        // fragments: (attachment mask, chord or component mask)
        let mut fragments: Vec<(u32, Fragment)> = Vec::new();
        for v in bits(embedded_v) {
            for w in bits(adj[v] & embedded_v) {
                if v < w && !is_placed(&placed, v, w) {
                    fragments.push((1 << v | 1 << w, Fragment::Chord(v, w)));
                }
            }
        }
        let all_v = edges.iter().fold(0u32, |m, &(u, v)| m | 1 << u | 1 << v);
        let mut free = all_v & !embedded_v;
        while free != 0 {
            let start = free.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= adj[v] & !embedded_v;
                }
                frontier = next & !comp;
                comp |= next;
            }
            free &= !comp;
            let attach = bits(comp).fold(0u32, |m, v| m | adj[v]) & embedded_v;
            fragments.push((attach, Fragment::Component(comp)));
        }

        let face_masks: Vec<u32> = faces.iter().map(|f| f.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, &(attach, _)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> =
                face_masks.iter().enumerate().filter(|&(_, &fm)| attach & fm == attach).map(|(k, _)| k).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unembedded edges imply at least one fragment");
        let (attach, fragment) = fragments[fi];
        let path = match fragment {
            Fragment::Chord(v, w) => vec![v, w],
            Fragment::Component(comp) => {
                let a1 = attach.trailing_zeros() as usize;
                let x = (adj[a1] & comp).trailing_zeros() as usize;
                // walk inside the component to a vertex touching another attachment
                let others = attach & !(1 << a1);
                let targets = bits(comp).filter(|&y| adj[y] & others != 0).fold(0u32, |m, y| m | 1 << y);
                let inner = bfs_to_set(&adj, x, targets, comp).expect("2-connected fragment reaches a second attachment");
                let y = *inner.last().unwrap();
                let a2 = (adj[y] & others).trailing_zeros() as usize;
                let mut p = vec![a1];
                p.extend(inner);
                p.push(a2);
                p
            }
        };
        for w in path.windows(2) {
            placed[w[0]] |= 1 << w[1];
            placed[w[1]] |= 1 << w[0];
        }
        embedded_e += path.len() - 1;
        for &v in &path {
            embedded_v |= 1 << v;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

#[derive(Clone, Copy)]
enum Fragment {
    Chord(usize, usize),
    Component(u32),
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a1 = path[0];
    let a2 = *path.last().unwrap();
    let interior = &path[1..path.len() - 1];
    let len = face.len();
    let i = face.iter().position(|&v| v == a1).expect("attachment lies on face");
    let j = face.iter().position(|&v| v == a2).expect("attachment lies on face");
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        out
    };
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

fn bfs_path(adj: &[u32; 32], from: usize, to: usize, allowed: u32, skip_edge: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let mut prev = [usize::MAX; 32];
    let mut seen = 1u32 << from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut p = vec![to];
            let mut c = to;
            while c != from {
                c = prev[c];
                p.push(c);
            }
            p.reverse();
            return Some(p);
        }
        for w in bits(adj[u] & allowed & !seen) {
            if skip_edge.is_some_and(|(a, b)| (u, w) == (a, b) || (u, w) == (b, a)) {
                continue;
            }
            seen |= 1 << w;
            prev[w] = u;
            queue.push_back(w);
        }
    }
    None
}

fn bfs_to_set(adj: &[u32; 32], from: usize, targets: u32, allowed: u32) -> Option<Vec<usize>> {
    let mut prev = [usize::MAX; 32];
    let mut seen = 1u32 << from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if targets >> u & 1 == 1 {
            let mut p = vec![u];
            let mut c = u;
            while c != from {
                c = prev[c];
                p.push(c);
            }
            p.reverse();
            return Some(p);
        }
        for w in bits(adj[u] & allowed & !seen) {
            seen |= 1 << w;
            prev[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// The non-planar reduced graphs with at most ten edges.
pub struct NonplanarCatalog;

impl NonplanarCatalog {
    pub fn k33() -> Graph {
        let e: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        Graph::new(6, &e).expect("static graph")
    }

    pub fn k5() -> Graph {
        let e: Vec<_> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        Graph::new(5, &e).expect("static graph")
    }

    /// `K_{3,3}` with one edge doubled.
    pub fn k33_e1() -> Graph {
        Self::k33().with_edge(0, 3).expect("static graph")
    }

    /// `K_{3,3}` with an extra edge inside one part.
    pub fn k33_e2() -> Graph {
        Self::k33().with_edge(0, 1).expect("static graph")
    }

    pub fn all() -> [(Prop21Verdict, Graph); 4] {
        [
            (Prop21Verdict::K33, Self::k33()),
            (Prop21Verdict::K5, Self::k5()),
            (Prop21Verdict::K33E1, Self::k33_e1()),
            (Prop21Verdict::K33E2, Self::k33_e2()),
        ]
    }

    fn codes() -> &'static [(Prop21Verdict, CanonicalCode); 4] {
        static CODES: OnceLock<[(Prop21Verdict, CanonicalCode); 4]> = OnceLock::new();
        CODES.get_or_init(|| Self::all().map(|(v, g)| (v, canonical_code(&g))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prop21Verdict {
    Planar,
    K33,
    K5,
    K33E1,
    K33E2,
    GeneralNonplanar,
}

impl Prop21Verdict {
    pub fn is_planar(self) -> bool {
        self == Prop21Verdict::Planar
    }
}

impl fmt::Display for Prop21Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prop21Verdict::Planar => "PLANAR",
            Prop21Verdict::K33 => "K33",
            Prop21Verdict::K5 => "K5",
            Prop21Verdict::K33E1 => "K33_E1",
            Prop21Verdict::K33E2 => "K33_E2",
            Prop21Verdict::GeneralNonplanar => "GENERAL_NONPLANAR",
        })
    }
}

/// Classifies a reduced graph by edge count: at most 8 edges is planar, 9 or
/// 10 edges is planar unless it is one of the catalog graphs, and larger
/// graphs go to the exact test.
pub fn prop21_classify(g: &Graph) -> Result<Prop21Verdict> {
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        if d < 3 {
            return Err(Error::NotReduced { vertex: v, degree: d });
        }
    }
    let m = g.edge_count();
    Ok(match m {
        0..=8 => Prop21Verdict::Planar,
        9 | 10 => {
            let code = canonical_code(g);
            NonplanarCatalog::codes()
                .iter()
                .find(|(_, c)| *c == code)
                .map_or(Prop21Verdict::Planar, |(v, _)| *v)
        }
        _ => {
            if is_planar(g) {
                Prop21Verdict::Planar
            } else {
                Prop21Verdict::GeneralNonplanar
            }
        }
    })
}
