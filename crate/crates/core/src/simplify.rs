//! Vertex-pair deletion and the degree-1 / degree-2 reduction cascade that
//! produces `Ĝ_{a,b}`, together with the edge bookkeeping of the count
//! equation.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_MULTIPLICITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemovalReason {
    DeletedWithPair,
    Degree1Prune,
    Degree2Suppress,
    Isolated,
}

impl fmt::Display for RemovalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RemovalReason::DeletedWithPair => "deleted-with-pair",
            RemovalReason::Degree1Prune => "degree1-prune",
            RemovalReason::Degree2Suppress => "degree2-suppress",
            RemovalReason::Isolated => "isolated",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Removal {
    pub vertex: usize,
    pub reason: RemovalReason,
}

/// Result of deleting a vertex set: the remaining graph (isolated vertices
/// dropped) and, for each new id, the original vertex.
#[derive(Clone, Debug)]
pub struct Deletion {
    pub graph: Graph,
    pub kept: Vec<usize>,
    pub isolated: Vec<usize>,
}

/// Output of [`reduce`]: the reduced graph, the original ids of its vertices,
/// and the removal log in cascade order.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub kept: Vec<usize>,
    pub removed: Vec<Removal>,
}

/// Bookkeeping for one `Ĝ_{a,b}` computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub removed_pair: (usize, usize),
    /// `|E(a) ∪ E(b)|`.
    pub ne: usize,
    /// `|V_3(a) ∪ V_3(b)|`, not counting `a` and `b` themselves.
    pub nv3: usize,
    /// `|V_4(a) ∩ V_4(b)|`.
    pub nv4: usize,
    /// Vertices adjacent to neither `a` nor `b` that were pruned at degree 1
    /// or suppressed at degree 2. Vertices dropped at degree 0 remove no edge
    /// and are not counted.
    pub nvy: usize,
    pub original_edges: usize,
    pub predicted_edges: isize,
    pub actual_edges: usize,
    pub removed_vertices: Vec<Removal>,
}

impl ReductionTrace {
    pub fn matches(&self) -> bool {
        self.predicted_edges == self.actual_edges as isize
    }

    pub const TSV_HEADER: &'static str = "a\tb\tNE\tNV3\tNV4\tNVY\tpredicted\tactual";

    pub fn tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.removed_pair.0,
            self.removed_pair.1,
            self.ne,
            self.nv3,
            self.nv4,
            self.nvy,
            self.predicted_edges,
            self.actual_edges
        )
    }
}

/// `V_n(v)`: neighbours of `v` whose degree is exactly `n`.
pub fn neighbors_of_degree(g: &Graph, v: usize, n: usize) -> Vec<usize> {
    g.neighbors(v).filter(|&w| g.degree(w) == n).collect()
}

fn neighbor_degree_mask(g: &Graph, v: usize, n: usize) -> u32 {
    bits(g.neighbor_mask(v)).filter(|&w| g.degree(w) == n).fold(0, |m, w| m | 1 << w)
}

/// `V_n(a, b) = V_n(a) ∩ V_n(b)`.
pub fn common_neighbors_of_degree(g: &Graph, a: usize, b: usize, n: usize) -> Vec<usize> {
    bits(neighbor_degree_mask(g, a, n) & neighbor_degree_mask(g, b, n)).collect()
}

/// Number of edges incident to `a` or `b`, counted with multiplicity.
pub fn incident_edge_count(g: &Graph, a: usize, b: usize) -> usize {
    g.degree(a) + g.degree(b) - g.multiplicity(a, b) as usize
}

/// Removes the vertices in `set` and any vertex left isolated.
pub fn delete_vertices(g: &Graph, set: &[usize]) -> Deletion {
    let remove = set.iter().fold(0u32, |m, &v| m | 1 << v);
    let mut isolated = Vec::new();
    let kept: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| remove >> v & 1 == 0)
        .filter(|&v| {
            let keep = g.neighbor_mask(v) & !remove != 0;
            if !keep {
                isolated.push(v);
            }
            keep
        })
        .collect();
    Deletion { graph: g.induced(&kept), kept, isolated }
}

/// Deletes degree 0/1 vertices and suppresses degree-2 vertices until the
/// minimum degree is at least 3 or nothing is left. Degree 0/1 vertices go
/// before degree-2 vertices; ties go to the smallest vertex id.
pub fn reduce(g: &Graph) -> Reduction {
    let order: Vec<usize> = (0..g.vertex_count()).collect();
    cascade(g, &order, true)
}

/// The same cascade with an arbitrary processing order: the qualifying
/// vertex (any degree up to 2) with the smallest `priority[v]` goes first.
/// The reduced graph is the same up to isomorphism; the log may differ.
pub fn reduce_with_priority(g: &Graph, priority: &[usize]) -> Reduction {
    cascade(g, priority, false)
}

fn cascade(g: &Graph, priority: &[usize], prune_first: bool) -> Reduction {
    let n = g.vertex_count();
    assert_eq!(priority.len(), n);
    let mut by_priority: Vec<usize> = (0..n).collect();
    by_priority.sort_by_key(|&v| priority[v]);

    let mut mult = g.matrix().to_vec();
    let mut deg: Vec<usize> = g.degrees();
    let mut alive = vec![true; n];
    let mut removed = Vec::new();

    let dec = |mult: &mut [u8], u: usize, v: usize, k: u8| {
        mult[u * n + v] -= k;
        mult[v * n + u] -= k;
    };

    let next = |alive: &[bool], deg: &[usize]| {
        let low = if prune_first { by_priority.iter().copied().find(|&v| alive[v] && deg[v] <= 1) } else { None };
        low.or_else(|| by_priority.iter().copied().find(|&v| alive[v] && deg[v] <= 2))
    };
    while let Some(v) = next(&alive, &deg) {
        let nbrs: Vec<usize> = (0..n).filter(|&w| mult[v * n + w] > 0).collect();
        let reason = match deg[v] {
            0 => RemovalReason::Isolated,
            1 => {
                let u = nbrs[0];
                dec(&mut mult, v, u, 1);
                deg[u] -= 1;
                RemovalReason::Degree1Prune
            }
            _ => {
                if nbrs.len() == 1 {
                    // both edges run to one neighbour: drop them, keep no loop
                    let u = nbrs[0];
                    dec(&mut mult, v, u, 2);
                    deg[u] -= 2;
                } else {
                    let (u, w) = (nbrs[0], nbrs[1]);
                    dec(&mut mult, v, u, 1);
                    dec(&mut mult, v, w, 1);
                    let m = mult[u * n + w] + 1;
                    assert!(m <= MAX_MULTIPLICITY, "internal error: multiplicity cap exceeded during reduction");
                    mult[u * n + w] = m;
                    mult[w * n + u] = m;
                }
                RemovalReason::Degree2Suppress
            }
        };
        deg[v] = 0;
        alive[v] = false;
        removed.push(Removal { vertex: v, reason });
    }

    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let k = kept.len();
    let mut out = vec![0u8; k * k];
    for (i, &u) in kept.iter().enumerate() {
        for (j, &w) in kept.iter().enumerate() {
            out[i * k + j] = mult[u * n + w];
        }
    }
    let graph = Graph::from_matrix(k, out).expect("reduction preserves graph invariants");
    assert!(
        graph.min_degree().is_none_or(|d| d >= 3),
        "reduce postcondition violated: minimum degree below 3"
    );
    Reduction { graph, kept, removed }
}

/// Computes `Ĝ_{a,b}` and its count-equation trace.
///
/// The cascade prunes degree 0/1 vertices before suppressing degree-2
/// vertices, and within each class handles neighbours of `a` or `b` first.
pub fn hat(g: &Graph, a: usize, b: usize) -> Result<(Graph, ReductionTrace)> {
    let n = g.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, vertex_count: n });
        }
    }
    if a == b {
        return Err(Error::SamePair(a));
    }
    let pair = 1u32 << a | 1u32 << b;
    let touched = g.neighbor_mask(a) | g.neighbor_mask(b);

    let ne = incident_edge_count(g, a, b);
    let nv3 = ((neighbor_degree_mask(g, a, 3) | neighbor_degree_mask(g, b, 3)) & !pair).count_ones() as usize;
    let nv4 = ((neighbor_degree_mask(g, a, 4) & neighbor_degree_mask(g, b, 4)) & !pair).count_ones() as usize;

    let deletion = delete_vertices(g, &[a.min(b), a.max(b)]);
    // neighbours of a or b are handled before the vertices their removal exposes
    let priority: Vec<usize> = deletion
        .kept
        .iter()
        .map(|&v| if touched >> v & 1 == 1 { v } else { n + v })
        .collect();
    let reduction = cascade(&deletion.graph, &priority, true);

    let mut removed = vec![
        Removal { vertex: a, reason: RemovalReason::DeletedWithPair },
        Removal { vertex: b, reason: RemovalReason::DeletedWithPair },
    ];
    removed.extend(deletion.isolated.iter().map(|&v| Removal { vertex: v, reason: RemovalReason::Isolated }));
    removed.extend(
        reduction
            .removed
            .iter()
            .map(|r| Removal { vertex: deletion.kept[r.vertex], reason: r.reason }),
    );
    let nvy = removed
        .iter()
        .filter(|r| matches!(r.reason, RemovalReason::Degree1Prune | RemovalReason::Degree2Suppress))
        .filter(|r| touched >> r.vertex & 1 == 0)
        .count();

    let original_edges = g.edge_count();
    let predicted_edges = original_edges as isize - (ne + nv3 + nv4 + nvy) as isize;
    let actual_edges = reduction.graph.edge_count();
    let trace = ReductionTrace {
        removed_pair: (a, b),
        ne,
        nv3,
        nv4,
        nvy,
        original_edges,
        predicted_edges,
        actual_edges,
        removed_vertices: removed,
    };
    Ok((reduction.graph, trace))
}

/// One count-equation check for an unordered vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountAudit {
    pub pair: (usize, usize),
    pub predicted: isize,
    pub actual: usize,
}

impl CountAudit {
    pub fn matches(&self) -> bool {
        self.predicted == self.actual as isize
    }
}

/// Compares the count-equation prediction with the actual reduction for
/// every unordered vertex pair.
pub fn audit_count_equation(g: &Graph) -> Vec<CountAudit> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            let (_, t) = hat(g, a, b).expect("pairs are in range and distinct");
            out.push(CountAudit { pair: (a, b), predicted: t.predicted_edges, actual: t.actual_edges });
        }
    }
    out
}
