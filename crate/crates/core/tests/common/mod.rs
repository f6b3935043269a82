//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use ik_sieve::graph::bits;
use ik_sieve::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, max_n: usize, p: f64) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e).unwrap()
}

/// Shortest cycle length by BFS from every vertex; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Isomorphism by backtracking over vertex maps that respect degrees and
/// multiplicities. No canonical labeling involved.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(g: &Graph, h: &Graph, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let n = g.vertex_count();
        if i == n {
            return true;
        }
        for t in 0..n {
            if used[t] || g.degree(i) != h.degree(t) {
                continue;
            }
            if (0..i).any(|j| g.multiplicity(i, j) != h.multiplicity(t, map[j])) {
                continue;
            }
            map[i] = t;
            used[t] = true;
            if extend(g, h, i + 1, map, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    extend(g, h, 0, &mut map, &mut used)
}

/// True when `g` contains a subdivision of K5 or K3,3, searched by choosing
/// branch vertices and routing internally disjoint paths.
pub fn kuratowski_oracle(g: &Graph) -> bool {
    let g = g.simple_underlying();
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    contains_subdivision(&g, 5, &k5) || contains_subdivision(&g, 6, &k33)
}

fn contains_subdivision(g: &Graph, k: usize, pattern: &[(usize, usize)]) -> bool {
    let n = g.vertex_count();
    if n < k {
        return false;
    }
    let need = pattern.iter().filter(|&&(a, _)| a == 0).count();
    let mut image = vec![0usize; k];
    fn assign(g: &Graph, k: usize, need: usize, pattern: &[(usize, usize)], i: usize, image: &mut [usize], used: u32) -> bool {
        if i == k {
            return route(g, pattern, 0, image, used);
        }
        for v in 0..g.vertex_count() {
            if used >> v & 1 == 0 && g.degree(v) >= need {
                image[i] = v;
                if assign(g, k, need, pattern, i + 1, image, used | 1 << v) {
                    return true;
                }
            }
        }
        false
    }
    fn route(g: &Graph, pattern: &[(usize, usize)], j: usize, image: &[usize], used: u32) -> bool {
        let Some(&(a, b)) = pattern.get(j) else {
            return true;
        };
        walk(g, image[a], image[b], used, &mut |u| route(g, pattern, j + 1, image, u))
    }
    fn walk(g: &Graph, s: usize, t: usize, used: u32, k: &mut dyn FnMut(u32) -> bool) -> bool {
        if g.adjacent(s, t) && k(used) {
            return true;
        }
        for w in bits(g.neighbor_mask(s) & !used) {
            if w != t && walk(g, w, t, used | 1 << w, k) {
                return true;
            }
        }
        false
    }
    assign(g, k, need, pattern, 0, &mut image, 0)
}

/// A: a1..a6 = 0..6, B: b1..b6 = 6..12. a1 has degree 6, a2 and a3 degree 4,
/// the rest degree 3; b6 is the only degree-3 vertex of B.
pub fn restoring_example() -> Graph {
    let (a, b) = (|i: usize| i - 1, |i: usize| i + 5);
    let mut e = Vec::new();
    for j in 1..=6 {
        e.push((a(1), b(j)));
    }
    for j in [1, 2, 3, 6] {
        e.push((a(2), b(j)));
    }
    e.extend([
        (a(3), b(6)),
        (a(3), b(4)),
        (a(3), b(1)),
        (a(3), b(2)),
        (a(4), b(4)),
        (a(4), b(5)),
        (a(4), b(2)),
        (a(5), b(4)),
        (a(5), b(5)),
        (a(5), b(3)),
        (a(6), b(5)),
        (a(6), b(1)),
        (a(6), b(3)),
    ]);
    Graph::new(12, &e).unwrap()
}

/// The survivor with A = {b1..b5, c1}, B = {b'1..b'5, c'1}:
/// b1~{b'1,b'2,b'3,b'4}, b2~{b'1,b'2,b'3,b'5}, b3~{b'1,b'2,b'4,b'5},
/// b4,b5~{b'3,b'4,b'5,c'1}, and c1~{c'1,b'1,b'2} to complete the degrees.
pub fn undetermined_survivor() -> Graph {
    let (b, c1) = (|i: usize| i - 1, 5);
    let (bp, cp1) = (|i: usize| i + 5, 11);
    let mut e = Vec::new();
    let rows: [(usize, [usize; 4]); 3] = [(1, [1, 2, 3, 4]), (2, [1, 2, 3, 5]), (3, [1, 2, 4, 5])];
    for (i, js) in rows {
        for j in js {
            e.push((b(i), bp(j)));
        }
    }
    for i in [4, 5] {
        for j in [3, 4, 5] {
            e.push((b(i), bp(j)));
        }
        e.push((b(i), cp1));
    }
    e.extend([(c1, cp1), (c1, bp(1)), (c1, bp(2))]);
    Graph::new(12, &e).unwrap()
}

/// Every multigraph with at most `max_edges` edges and minimum degree at least
/// `min_degree`, deduplicated by canonical code. Built by distributing edge
/// multiplicities over vertex pairs.
pub fn small_multigraphs(max_edges: usize, min_degree: usize) -> Vec<Graph> {
    use std::collections::BTreeMap;
    let mut out = BTreeMap::new();
    let max_n = 2 * max_edges / min_degree.max(1);
    for n in 2..=max_n.min(ik_sieve::graph::MAX_VERTICES) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut mult = vec![0usize; pairs.len()];
        let mut deg = vec![0usize; n];
        fill(&pairs, 0, max_edges, min_degree, &mut mult, &mut deg, &mut |m| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(m).flat_map(|(&p, &k)| std::iter::repeat(p).take(k)).collect();
            let g = Graph::new(n, &edges).unwrap();
            out.entry(ik_sieve::canonical_code(&g)).or_insert(g);
        });
    }
    out.into_values().collect()
}

fn fill(
    pairs: &[(usize, usize)],
    i: usize,
    left: usize,
    min_degree: usize,
    mult: &mut [usize],
    deg: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    let deficit: usize = deg.iter().map(|&d| min_degree.saturating_sub(d)).sum();
    if deficit > 2 * left {
        return;
    }
    if i == pairs.len() {
        if deficit == 0 {
            emit(mult);
        }
        return;
    }
    // a vertex whose last pair has passed must already be complete
    let (u, v) = pairs[i];
    if i > 0 && pairs[i - 1].0 != u {
        let done = pairs[i - 1].0;
        if deg[done] < min_degree {
            return;
        }
    }
    for k in 0..=left {
        mult[i] = k;
        deg[u] += k;
        deg[v] += k;
        fill(pairs, i + 1, left - k, min_degree, mult, deg, emit);
        deg[u] -= k;
        deg[v] -= k;
    }
    mult[i] = 0;
}

/// Grouped `[|X5|, |X4|, |X3|]` views of the 23-edge degree combinations,
/// under the filters used to split the case analysis. Each entry is a label,
/// the generator's set, and the expected set.
pub fn case_tree_checks() -> Vec<(&'static str, Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    use ik_sieve::enumerate::{degree_combinations, DegreeCombination};
    use std::collections::BTreeSet;
    let combos = degree_combinations(23, 3);
    let sides = |dc: &DegreeCombination| [(dc.deg_a.clone(), dc.deg_b.clone()), (dc.deg_b.clone(), dc.deg_a.clone())];
    let g5 = |d: &[usize]| DegreeCombination::grouped(d, 5, 3);
    let digits = |s: &str| -> Vec<usize> { s.bytes().map(|b| (b - b'0') as usize).collect() };
    let collect = |f: &dyn Fn(&[usize], &[usize]) -> Option<Vec<usize>>| -> Vec<Vec<usize>> {
        let set: BTreeSet<Vec<usize>> =
            combos.iter().flat_map(|dc| sides(dc)).filter_map(|(x, y)| f(&x, &y)).collect();
        set.into_iter().collect()
    };
    let sorted = |mut v: Vec<Vec<usize>>| {
        v.sort();
        v
    };
    let max = |d: &[usize]| d.iter().copied().max().unwrap_or(0);

    vec![
        (
            "degree 7 present, other side",
            collect(&|x, y| (max(x) == 7).then(|| y.to_vec())),
            sorted(vec![digits("5333333"), digits("4433333")]),
        ),
        (
            "seven-vertex side opposite a degree >= 6 vertex",
            collect(&|x, y| (max(x) >= 6 && y.len() == 7).then(|| y.to_vec())),
            sorted(vec![digits("5333333"), digits("4433333")]),
        ),
        (
            "degree 6 then 5 with six vertices opposite, A side",
            collect(&|x, y| (max(x) == 6 && x[1] == 5 && y.len() == 6).then(|| x.to_vec())),
            sorted(vec![digits("65543"), digits("65444"), digits("653333")]),
        ),
        (
            "degree 6 then 5, opposite side with at most three 3s and at most four 3s or 4s",
            collect(&|x, y| {
                let threes = y.iter().filter(|&&d| d == 3).count();
                let low = y.iter().filter(|&&d| d <= 4).count();
                (max(x) == 6 && x[1] == 5 && y.len() == 6 && max(y) <= 5 && threes <= 3 && low <= 4).then(|| y.to_vec())
            }),
            vec![digits("554333")],
        ),
        (
            "644333 opposite six vertices, max 4, or max 5 with at most two 3s",
            collect(&|x, y| {
                let threes = y.iter().filter(|&&d| d == 3).count();
                (x == digits("644333").as_slice()
                    && y.len() == 6
                    && (max(y) == 4 || (max(y) == 5 && threes <= 2)))
                    .then(|| y.to_vec())
            }),
            sorted(vec![digits("444443"), digits("544433")]),
        ),
        (
            "max degree 5, sides with a degree 5 vertex",
            collect(&|x, y| (max(x) == 5 && max(y) <= 5).then(|| g5(x))),
            sorted(vec![vec![4, 0, 1], vec![3, 2, 0], vec![2, 1, 3], vec![1, 3, 2], vec![1, 0, 6]]),
        ),
        (
            "max degree 5, sides without one",
            collect(&|x, y| (max(x) == 5 && max(y) < 5).then(|| g5(y))),
            sorted(vec![vec![0, 5, 1], vec![0, 2, 5]]),
        ),
        (
            "max degree 4, every side",
            collect(&|x, y| (max(x) <= 4 && max(y) <= 4).then(|| g5(x))),
            sorted(vec![vec![0, 5, 1], vec![0, 2, 5]]),
        ),
    ]
}

/// The bipartite 23-edge graphs with a catalog minor: two over Cousin110,
/// four over the Heawood graph.
pub const COUSIN_PARENTED: [&str; 2] = ["I?B~vro{?", "I?B~vroy?"];
pub const HEAWOOD_PARENTED: [&str; 4] = ["M???FbKodOQ_H_E_?", "M???FbgpCcHOH_F??", "M???FakqCKKOT?E_?", "M???DpewCgPOS_R??"];
pub const UNDETERMINED_23: [&str; 1] = ["K??FNJWmBoB_"];

pub fn g6(text: &str) -> Graph {
    ik_sieve::decode_graph6(text).unwrap()
}

/// Every minor of a small simple graph (isolated vertices included), by
/// exhaustive single-step closure.
pub fn all_minors(g: &Graph) -> std::collections::HashSet<ik_sieve::CanonicalCode> {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![g.clone()];
    seen.insert(ik_sieve::canonical_code(g));
    while let Some(h) = stack.pop() {
        let n = h.vertex_count();
        let edges = h.edges();
        let mut next = Vec::new();
        for (i, _) in edges.iter().enumerate() {
            let rest: Vec<_> = edges.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
            next.push(Graph::new(n, &rest).unwrap());
        }
        for &(u, v) in &edges {
            // merge v into u, drop v
            let relabel = |w: usize| {
                let w = if w == v { u } else { w };
                if w > v { w - 1 } else { w }
            };
            let mut merged: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(x, y)| (relabel(x), relabel(y)))
                .filter(|&(x, y)| x != y)
                .map(|(x, y)| (x.min(y), x.max(y)))
                .collect();
            merged.sort_unstable();
            merged.dedup();
            next.push(Graph::new(n - 1, &merged).unwrap());
        }
        for v in 0..n {
            let keep = |w: usize| if w > v { w - 1 } else { w };
            let rest: Vec<_> = edges.iter().filter(|&&(x, y)| x != v && y != v).map(|&(x, y)| (keep(x), keep(y))).collect();
            next.push(Graph::new(n - 1, &rest).unwrap());
        }
        for m in next {
            if seen.insert(ik_sieve::canonical_code(&m)) {
                stack.push(m);
            }
        }
    }
    seen
}
