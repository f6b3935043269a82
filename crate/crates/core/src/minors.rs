//! Minor and topological-minor containment for small simple graphs, and IK
//! certification through the Heawood graph and Cousin 110.
//!
//! Hosts and targets are compared through their simple underlying graphs.

use std::collections::HashSet;
use std::fmt;

use crate::canon::{are_isomorphic, canonical_code, CanonicalCode};
use crate::families::Catalog;
use crate::graph::{bits, Graph};

/// One step of a minor script. Vertex ids refer to the graph produced by the
/// preceding steps; deleting or contracting shifts every higher id down by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorOp {
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
    /// Merges the second endpoint into the first.
    ContractEdge(usize, usize),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MinorOp::DeleteEdge(u, v) => write!(f, "DELETE_EDGE {u} {v}"),
            MinorOp::DeleteVertex(v) => write!(f, "DELETE_VERTEX {v}"),
            MinorOp::ContractEdge(u, v) => write!(f, "CONTRACT_EDGE {u} {v}"),
        }
    }
}

impl MinorOp {
    /// Applies the step to a simple graph. Returns `None` if the step does not
    /// fit the graph.
    pub fn apply(self, g: &Graph) -> Option<Graph> {
        let n = g.vertex_count();
        match self {
            MinorOp::DeleteEdge(u, v) => {
                if u >= n || v >= n || !g.adjacent(u, v) {
                    return None;
                }
                let edges: Vec<_> = g.edges().into_iter().filter(|&e| e != (u.min(v), u.max(v))).collect();
                Graph::new(n, &edges).ok()
            }
            MinorOp::DeleteVertex(v) => {
                if v >= n {
                    return None;
                }
                Some(g.remove_vertices(1 << v).0)
            }
            MinorOp::ContractEdge(u, v) => {
                if u >= n || v >= n || !g.adjacent(u, v) {
                    return None;
                }
                let mut set = HashSet::new();
                for (x, y) in g.edges() {
                    let x = if x == v { u } else { x };
                    let y = if y == v { u } else { y };
                    if x != y {
                        set.insert((x.min(y), x.max(y)));
                    }
                }
                let shift = |w: usize| if w > v { w - 1 } else { w };
                let mut edges: Vec<_> = set.into_iter().map(|(x, y)| (shift(x), shift(y))).collect();
                edges.sort_unstable();
                Graph::new(n - 1, &edges).ok()
            }
        }
    }
}

/// A script turning the host into a graph isomorphic to the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub target_name: String,
    pub operation_script: Vec<MinorOp>,
}

impl MinorWitness {
    /// Result of running the script on the host's simple underlying graph.
    pub fn replay(&self, host: &Graph) -> Option<Graph> {
        self.operation_script.iter().try_fold(host.simple_underlying(), |g, op| op.apply(&g))
    }

    pub fn validates(&self, host: &Graph, target: &Graph) -> bool {
        self.replay(host).is_some_and(|g| are_isomorphic(&g, &target.simple_underlying()))
    }

    pub fn edge_deletions(&self) -> usize {
        self.operation_script.iter().filter(|op| matches!(op, MinorOp::DeleteEdge(..))).count()
    }

    /// True when every step deletes an edge.
    pub fn is_edge_deletion_only(&self) -> bool {
        self.edge_deletions() == self.operation_script.len()
    }
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.target_name)?;
        for op in &self.operation_script {
            write!(f, "; {op}")?;
        }
        Ok(())
    }
}

/// Searches for `h` as a minor of `g`.
pub fn has_minor(g: &Graph, h: &Graph) -> Option<MinorWitness> {
    has_minor_named(g, h, "target")
}

pub fn has_minor_named(g: &Graph, h: &Graph, target_name: &str) -> Option<MinorWitness> {
    let host = g.simple_underlying();
    let target = h.simple_underlying();
    let mut search = MinorSearch::new(&target);
    let mut script = Vec::new();
    if !search.run(&host, &mut script) {
        return None;
    }
    let w = MinorWitness { target_name: target_name.to_string(), operation_script: script };
    assert!(w.validates(g, h), "minor witness failed replay");
    Some(w)
}

struct MinorSearch {
    target_n: usize,
    target_m: usize,
    target_degrees: Vec<usize>,
    target_code: CanonicalCode,
    failed: HashSet<CanonicalCode>,
}

impl MinorSearch {
    fn new(target: &Graph) -> MinorSearch {
        let mut target_degrees = target.degrees();
        target_degrees.sort_unstable_by(|a, b| b.cmp(a));
        MinorSearch {
            target_n: target.vertex_count(),
            target_m: target.edge_count(),
            target_degrees,
            target_code: canonical_code(target),
            failed: HashSet::new(),
        }
    }

    fn run(&mut self, g: &Graph, script: &mut Vec<MinorOp>) -> bool {
        let (n, m) = (g.vertex_count(), g.edge_count());
        if n < self.target_n || m < self.target_m {
            return false;
        }
        if n == self.target_n {
            let mut d = g.degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            if d.iter().zip(&self.target_degrees).any(|(x, y)| x < y) {
                return false;
            }
        }
        let code = canonical_code(g);
        if n == self.target_n && m == self.target_m {
            return code == self.target_code;
        }
        if self.failed.contains(&code) {
            return false;
        }
        let edges = g.edges();
        let mut ops: Vec<MinorOp> = Vec::new();
        if n > self.target_n {
            ops.extend((0..n).map(MinorOp::DeleteVertex));
            ops.extend(edges.iter().map(|&(u, v)| MinorOp::ContractEdge(u, v)));
        }
        ops.extend(edges.iter().map(|&(u, v)| MinorOp::DeleteEdge(u, v)));
        for op in ops {
            let next = op.apply(g).expect("op built from the graph's own edges");
            script.push(op);
            if self.run(&next, script) {
                return true;
            }
            script.pop();
        }
        self.failed.insert(code);
        false
    }
}

/// True when `g` contains a subdivision of `h`.
pub fn has_topological_minor(g: &Graph, h: &Graph) -> bool {
    let g = g.simple_underlying();
    let h = h.simple_underlying();
    if h.max_degree().unwrap_or(0) <= 3 {
        return has_minor(&g, &h).is_some();
    }
    subdivision_search(&g, &h)
}

/// Branches over images of `h`'s vertices, then routes `h`'s edges along
/// internally disjoint paths.
pub fn subdivision_search(g: &Graph, h: &Graph) -> bool {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    if hn > gn || h.edge_count() > g.edge_count() {
        return false;
    }
    let mut order: Vec<usize> = (0..hn).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut image = vec![usize::MAX; hn];
    place_branch(g, h, &order, 0, &mut image, 0)
}

fn place_branch(g: &Graph, h: &Graph, order: &[usize], i: usize, image: &mut [usize], used: u32) -> bool {
    if i == order.len() {
        let edges = h.edges();
        return route(g, &edges, 0, image, used);
    }
    let x = order[i];
    for v in 0..g.vertex_count() {
        if used >> v & 1 == 1 || g.degree(v) < h.degree(x) {
            continue;
        }
        image[x] = v;
        if place_branch(g, h, order, i + 1, image, used | 1 << v) {
            return true;
        }
    }
    image[x] = usize::MAX;
    false
}

fn route(g: &Graph, edges: &[(usize, usize)], k: usize, image: &[usize], used: u32) -> bool {
    let Some(&(x, y)) = edges.get(k) else {
        return true;
    };
    let (s, t) = (image[x], image[y]);
    let mut path_used = used;
    paths(g, s, t, &mut path_used, &mut |inner| route(g, edges, k + 1, image, inner))
}

/// Calls `f` with `used` extended by the interior of each simple s-t path that
/// avoids `used`; stops at the first `true`.
fn paths(g: &Graph, s: usize, t: usize, used: &mut u32, f: &mut impl FnMut(u32) -> bool) -> bool {
    if g.adjacent(s, t) && f(*used) {
        return true;
    }
    for w in bits(g.neighbor_mask(s) & !*used) {
        if w == t {
            continue;
        }
        *used |= 1 << w;
        let found = paths(g, w, t, used, f);
        *used &= !(1 << w);
        if found {
            return true;
        }
    }
    false
}

/// Specialized Heawood test: delete `m - 21` edges (at most two), reduce,
/// compare with the Heawood graph.
pub fn heawood_by_edge_deletion(g: &Graph) -> Option<MinorWitness> {
    let host = g.simple_underlying();
    let heawood = Catalog::Heawood.graph();
    let surplus = host.edge_count().checked_sub(heawood.edge_count())?;
    if surplus > 2 {
        return None;
    }
    let code = canonical_code(&heawood);
    let edges = host.edges();
    let try_subset = |del: &[(usize, usize)]| -> Option<MinorWitness> {
        let mut script: Vec<MinorOp> = del.iter().map(|&(u, v)| MinorOp::DeleteEdge(u, v)).collect();
        let mut cur = script.iter().try_fold(host.clone(), |h, op| op.apply(&h))?;
        cur = reduce_logged(&cur, &mut script);
        (cur.edge_count() == heawood.edge_count() && canonical_code(&cur) == code).then(|| MinorWitness {
            target_name: Catalog::Heawood.name().to_string(),
            operation_script: script,
        })
    };
    let found = match surplus {
        0 => try_subset(&[]),
        1 => edges.iter().find_map(|&e| try_subset(&[e])),
        _ => (0..edges.len()).find_map(|i| (i + 1..edges.len()).find_map(|j| try_subset(&[edges[i], edges[j]]))),
    };
    if let Some(w) = &found {
        assert!(w.validates(g, &heawood), "Heawood witness failed replay");
    }
    found
}

/// Degree 0/1 deletion and degree-2 contraction on a simple graph, recorded
/// as minor steps.
fn reduce_logged(g: &Graph, script: &mut Vec<MinorOp>) -> Graph {
    let mut cur = g.clone();
    loop {
        let n = cur.vertex_count();
        let op = if let Some(v) = (0..n).find(|&v| cur.degree(v) <= 1) {
            MinorOp::DeleteVertex(v)
        } else if let Some(v) = (0..n).find(|&v| cur.degree(v) == 2) {
            let w = cur.neighbors(v).next().expect("degree-2 vertex has a neighbour");
            MinorOp::ContractEdge(w, v)
        } else {
            return cur;
        };
        cur = op.apply(&cur).expect("reduction step fits the graph");
        script.push(op);
    }
}

/// Looks for the Heawood graph, then Cousin 110, as a minor of `g`.
pub fn ik_by_catalog(g: &Graph) -> Option<(Catalog, MinorWitness)> {
    let heawood = Catalog::Heawood.graph();
    let surplus = g.simple_underlying().edge_count().saturating_sub(heawood.edge_count());
    let hw = if surplus <= 2 {
        heawood_by_edge_deletion(g)
    } else {
        has_minor_named(g, &heawood, Catalog::Heawood.name())
    };
    if let Some(w) = hw {
        return Some((Catalog::Heawood, w));
    }
    has_minor_named(g, &Catalog::Cousin110.graph(), Catalog::Cousin110.name()).map(|w| (Catalog::Cousin110, w))
}
