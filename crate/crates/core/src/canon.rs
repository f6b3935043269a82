//! Canonical labeling by equitable partition refinement and a backtracking
//! search over individualizations, pruned with discovered automorphisms.
//!
//! The code of a graph is the lexicographically least upper-triangle
//! multiplicity sequence over all leaves of the (label-invariant) search
//! tree, so equal codes mean isomorphic graphs, parallel edges included.

use std::fmt;

use crate::graph::{bits, Graph};

/// Order-invariant fingerprint of a multigraph: vertex count followed by the
/// canonical upper-triangle multiplicities packed two per byte.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Box<[u8]>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    fn pack(n: usize, entries: &[u8]) -> CanonicalCode {
        let mut out = Vec::with_capacity(1 + entries.len().div_ceil(2));
        out.push(n as u8);
        for pair in entries.chunks(2) {
            let hi = pair[0];
            let lo = pair.get(1).copied().unwrap_or(0);
            out.push(hi << 4 | lo);
        }
        CanonicalCode(out.into_boxed_slice())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0.iter() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

/// Canonical code plus the labeling that realizes it: `labeling[i]` is the
/// original vertex placed at canonical position `i`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub labeling: Vec<usize>,
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).code
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.vertex_count();
    if n == 0 {
        return CanonicalForm { code: CanonicalCode::pack(0, &[]), labeling: Vec::new() };
    }
    let mut search = Search { g, simple: g.is_simple(), best: None, autos: Vec::new() };
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut cells = vec![all];
    search.refine(&mut cells, vec![all]);
    let mut prefix = Vec::with_capacity(n);
    search.descend(cells, &mut prefix);
    let (entries, labeling) = search.best.expect("search visits at least one leaf");
    CanonicalForm { code: CanonicalCode::pack(n, &entries), labeling }
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let form = canonical_form(g);
    let mut perm = vec![0; g.vertex_count()];
    for (pos, &v) in form.labeling.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_code(g) == canonical_code(h)
}

struct Search<'a> {
    g: &'a Graph,
    simple: bool,
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms found so far, as `image[v]`.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn count(&self, v: usize, splitter: u32) -> u32 {
        if self.simple {
            (self.g.neighbor_mask(v) & splitter).count_ones()
        } else {
            bits(self.g.neighbor_mask(v) & splitter).map(|w| self.g.multiplicity(v, w) as u32).sum()
        }
    }

    /// Refines `cells` until equitable with respect to every splitter in
    /// `queue` and every cell produced on the way.
    fn refine(&self, cells: &mut Vec<u32>, mut queue: Vec<u32>) {
        let n = self.g.vertex_count();
        let mut qi = 0;
        let mut groups: Vec<(u32, u32)> = Vec::with_capacity(n);
        while qi < queue.len() && cells.len() < n {
            let splitter = queue[qi];
            qi += 1;
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                groups.clear();
                for v in bits(cell) {
                    let k = self.count(v, splitter);
                    match groups.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() == 1 {
                    i += 1;
                    continue;
                }
                groups.sort_unstable_by_key(|&(k, _)| k);
                cells.splice(i..=i, groups.iter().map(|&(_, m)| m));
                queue.extend(groups.iter().map(|&(_, m)| m));
                i += groups.len();
            }
        }
    }

    fn descend(&mut self, cells: Vec<u32>, prefix: &mut Vec<usize>) {
        let n = self.g.vertex_count();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let t = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[t];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !tried.is_empty() && self.same_orbit_as_tried(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            child.splice(t..=t, [1u32 << v, target & !(1u32 << v)]);
            self.refine(&mut child, vec![1u32 << v]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// True when `v` is mapped onto an already explored sibling by the group
    /// generated by known automorphisms fixing `prefix` pointwise.
    fn same_orbit_as_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, cells: &[u32]) {
        let n = self.g.vertex_count();
        let labeling: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut entries = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                entries.push(self.g.multiplicity(labeling[i], labeling[j]));
            }
        }
        match &self.best {
            None => self.best = Some((entries, labeling)),
            Some((best, best_labeling)) => match entries.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((entries, labeling)),
                std::cmp::Ordering::Equal => {
                    let mut image = vec![0; n];
                    for i in 0..n {
                        image[best_labeling[i]] = labeling[i];
                    }
                    if image.iter().enumerate().any(|(v, &w)| v != w) {
                        self.autos.push(image);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}
