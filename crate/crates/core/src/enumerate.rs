//! Exhaustive generation of bipartite graphs by degree combination.
//!
//! Each combination fixes the degree multiset of both parts. Biadjacency
//! matrices are built row by row with rows of equal degree in non-increasing
//! lexicographic order and columns of equal degree in non-increasing
//! lexicographic order (every matrix has such a doubly lexical arrangement),
//! then deduplicated by canonical code.

use std::collections::BTreeMap;
use std::fmt;

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::{Graph, Part};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeCombination {
    /// Degrees of part A, descending.
    pub deg_a: Vec<usize>,
    /// Degrees of part B, descending.
    pub deg_b: Vec<usize>,
}

impl DegreeCombination {
    /// Normalizes to descending order with `deg_a >= deg_b`.
    pub fn new(mut deg_a: Vec<usize>, mut deg_b: Vec<usize>) -> DegreeCombination {
        deg_a.sort_unstable_by(|x, y| y.cmp(x));
        deg_b.sort_unstable_by(|x, y| y.cmp(x));
        if deg_a < deg_b {
            std::mem::swap(&mut deg_a, &mut deg_b);
        }
        DegreeCombination { deg_a, deg_b }
    }

    pub fn edge_budget(&self) -> usize {
        self.deg_a.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.deg_a.iter().chain(&self.deg_b).copied().max().unwrap_or(0)
    }

    /// Counts of each degree from `high` down to `low`, e.g. `[|A5|, |A4|, |A3|]`.
    pub fn grouped(degrees: &[usize], high: usize, low: usize) -> Vec<usize> {
        (low..=high).rev().map(|d| degrees.iter().filter(|&&x| x == d).count()).collect()
    }

    /// Cache file stem: degrees joined by dots, parts joined by an underscore.
    pub fn file_stem(&self) -> String {
        let join = |d: &[usize]| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".");
        format!("A{}_B{}", join(&self.deg_a), join(&self.deg_b))
    }

    /// Gale–Ryser test for the existence of a simple bipartite realization.
    pub fn is_realizable(&self) -> bool {
        if self.deg_a.iter().sum::<usize>() != self.deg_b.iter().sum::<usize>() {
            return false;
        }
        let mut lhs = 0;
        for (k, &a) in self.deg_a.iter().enumerate() {
            lhs += a;
            let rhs: usize = self.deg_b.iter().map(|&b| b.min(k + 1)).sum();
            if lhs > rhs {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for DegreeCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.file_stem())
    }
}

/// All partitions of `total` into parts `>= min_part`, each descending.
fn partitions(total: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

/// Every unordered pair of degree multisets with the given edge budget whose
/// degrees are at least `min_degree` and at most the opposite part's size.
pub fn degree_combinations(edge_budget: usize, min_degree: usize) -> Vec<DegreeCombination> {
    let parts = partitions(edge_budget, min_degree);
    let mut out = Vec::new();
    for p in &parts {
        for q in &parts {
            if p < q {
                continue;
            }
            if p[0] <= q.len() && q[0] <= p.len() {
                out.push(DegreeCombination { deg_a: p.clone(), deg_b: q.clone() });
            }
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// Every simple bipartite graph realizing `dc`, once per isomorphism class,
/// in canonical-code order. Part A occupies vertices `0..|A|`.
pub fn enumerate_bipartite(dc: &DegreeCombination) -> Vec<Graph> {
    enumerate_bipartite_coded(dc).into_values().collect()
}

/// [`enumerate_bipartite`] keyed by canonical code.
pub fn enumerate_bipartite_coded(dc: &DegreeCombination) -> BTreeMap<CanonicalCode, Graph> {
    let mut out = BTreeMap::new();
    for_each_biadjacency(&dc.deg_a, &dc.deg_b, |rows| {
        let g = biadjacency_graph(rows, dc.deg_b.len());
        debug_assert!(degrees_match(&g, dc));
        out.entry(canonical_code(&g)).or_insert(g);
    });
    out
}

fn degrees_match(g: &Graph, dc: &DegreeCombination) -> bool {
    let r = dc.deg_a.len();
    let mut a: Vec<usize> = (0..r).map(|v| g.degree(v)).collect();
    let mut b: Vec<usize> = (r..g.vertex_count()).map(|v| g.degree(v)).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    a == dc.deg_a && b == dc.deg_b
}

/// Row masks (bit `j` = column `j`) to a labelled bipartite graph.
pub fn biadjacency_graph(rows: &[u32], cols: usize) -> Graph {
    let r = rows.len();
    let mut edges = Vec::new();
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..cols {
            if row >> j & 1 == 1 {
                edges.push((i, r + j));
            }
        }
    }
    let parts = (0..r + cols).map(|v| if v < r { Part::A } else { Part::B }).collect();
    Graph::new(r + cols, &edges)
        .and_then(|g| g.with_parts(parts))
        .expect("biadjacency rows describe a bipartite graph")
}

/// Calls `visit` with the rows of every biadjacency matrix that has row sums
/// `deg_a`, column sums `deg_b` (both descending) and is doubly lexically
/// ordered within equal-degree blocks.
pub fn for_each_biadjacency(deg_a: &[usize], deg_b: &[usize], mut visit: impl FnMut(&[u32])) {
    let r = deg_a.len();
    let c = deg_b.len();
    if deg_a.iter().sum::<usize>() != deg_b.iter().sum::<usize>()
        || deg_a.iter().any(|&d| d > c)
        || deg_b.iter().any(|&d| d > r)
    {
        return;
    }
    // candidate rows per degree, lexicographically descending (column 0 most significant)
    let mut candidates: Vec<Vec<u32>> = vec![Vec::new(); c + 1];
    for mask in 0u32..(1 << c) {
        candidates[mask.count_ones() as usize].push(mask);
    }
    for list in &mut candidates {
        list.sort_unstable_by_key(|&m| std::cmp::Reverse(lex_key(m)));
    }
    // bit j set: columns j and j+1 share a degree and are equal so far
    let mut tied = 0u32;
    for j in 0..c.saturating_sub(1) {
        if deg_b[j] == deg_b[j + 1] {
            tied |= 1 << j;
        }
    }
    let mut state = Backtrack {
        deg_a,
        candidates,
        remaining: deg_b.to_vec(),
        rows: Vec::with_capacity(r),
    };
    state.place(tied, &mut visit);
}

fn lex_key(mask: u32) -> u32 {
    mask.reverse_bits()
}

struct Backtrack<'a> {
    deg_a: &'a [usize],
    candidates: Vec<Vec<u32>>,
    remaining: Vec<usize>,
    rows: Vec<u32>,
}

impl Backtrack<'_> {
    fn place(&mut self, tied: u32, visit: &mut impl FnMut(&[u32])) {
        let i = self.rows.len();
        if i == self.deg_a.len() {
            visit(&self.rows);
            return;
        }
        let rows_left = self.deg_a.len() - i;
        let mut full = 0u32;
        let mut forced = 0u32;
        for (j, &rem) in self.remaining.iter().enumerate() {
            if rem == 0 {
                full |= 1 << j;
            } else if rem == rows_left {
                forced |= 1 << j;
            }
        }
        let bound = if i > 0 && self.deg_a[i] == self.deg_a[i - 1] { Some(lex_key(self.rows[i - 1])) } else { None };
        let d = self.deg_a[i];
        for k in 0..self.candidates[d].len() {
            let cand = self.candidates[d][k];
            if bound.is_some_and(|b| lex_key(cand) > b) {
                continue;
            }
            if cand & full != 0 || cand & forced != forced {
                continue;
            }
            // a tied pair (j, j+1) may not see 0 in column j and 1 in column j+1
            if tied & !cand & (cand >> 1) != 0 {
                continue;
            }
            let next_tied = tied & !(cand & !(cand >> 1));
            for j in crate::graph::bits(cand) {
                self.remaining[j] -= 1;
            }
            self.rows.push(cand);
            self.place(next_tied, visit);
            self.rows.pop();
            for j in crate::graph::bits(cand) {
                self.remaining[j] += 1;
            }
        }
    }
}

/// Lazily enumerates the whole domain, one degree combination at a time.
/// With `connected_only`, disconnected graphs are skipped.
pub fn enumerate_domain(
    edge_budget: usize,
    min_degree: usize,
    connected_only: bool,
) -> impl Iterator<Item = Graph> {
    degree_combinations(edge_budget, min_degree)
        .into_iter()
        .flat_map(|dc| enumerate_bipartite(&dc))
        .filter(move |g| !connected_only || g.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn normalization() {
        let dc = DegreeCombination::new(vec![3, 4, 4], vec![5, 3, 3]);
        assert_eq!(dc.deg_a, vec![5, 3, 3]);
        assert_eq!(dc.deg_b, vec![4, 4, 3]);
        assert_eq!(dc.file_stem(), "A5.3.3_B4.4.3");
    }

    #[test]
    fn grouping() {
        assert_eq!(DegreeCombination::grouped(&[5, 5, 4, 3, 3, 3], 5, 3), vec![2, 1, 3]);
    }

    #[test]
    fn budget_nine_has_only_k33_combination() {
        let combos = degree_combinations(9, 3);
        assert_eq!(combos, vec![DegreeCombination { deg_a: vec![3, 3, 3], deg_b: vec![3, 3, 3] }]);
    }

    #[test]
    fn k33_unique() {
        let dc = DegreeCombination::new(vec![3, 3, 3], vec![3, 3, 3]);
        let gs = enumerate_bipartite(&dc);
        assert_eq!(gs.len(), 1);
        assert!(are_isomorphic(&gs[0], &crate::planarity::NonplanarCatalog::k33()));
    }

    #[test]
    fn c4_unique() {
        let gs = enumerate_bipartite(&DegreeCombination::new(vec![2, 2], vec![2, 2]));
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].edge_count(), 4);
    }

    #[test]
    fn infeasible_is_empty() {
        let dc = DegreeCombination::new(vec![3, 3], vec![2, 2]);
        assert!(enumerate_bipartite(&dc).is_empty());
        let dc = DegreeCombination::new(vec![4, 1, 1], vec![2, 2, 2]);
        assert!(!dc.is_realizable());
        assert!(enumerate_bipartite(&dc).is_empty());
    }

    #[test]
    fn parts_are_labelled() {
        let gs = enumerate_bipartite(&DegreeCombination::new(vec![3, 3, 3], vec![3, 3, 3]));
        let parts = gs[0].parts().unwrap();
        assert_eq!(parts.iter().filter(|&&p| p == Part::A).count(), 3);
    }
}
