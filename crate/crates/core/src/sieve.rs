//! The 2-apex sieve over `Ĝ_{a,b}` and the end-to-end classification run.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use rayon::prelude::*;

use crate::cache;
use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate::{degree_combinations, enumerate_bipartite, DegreeCombination};
use crate::error::{Error, Result};
use crate::families::Catalog;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::minors::{ik_by_catalog, MinorWitness};
use crate::planarity::{is_planar, prop21_classify, Prop21Verdict};
use crate::simplify::hat;

/// Intrinsically knotted graphs have at least this many edges.
pub const IK_MIN_EDGES: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Eliminated,
    IkByMinor,
    Undetermined,
    NotIkComponentBound,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Eliminated => "ELIMINATED",
            Outcome::IkByMinor => "IK_BY_MINOR",
            Outcome::Undetermined => "UNDETERMINED",
            Outcome::NotIkComponentBound => "NOT_IK_COMPONENT_BOUND",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Pair(usize, usize),
    Minor(Catalog, MinorWitness),
    /// Edge counts of the components, all below [`IK_MIN_EDGES`].
    Components(Vec<usize>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(a, b) => write!(f, "{a},{b}"),
            Witness::Minor(_, w) => write!(f, "{w}"),
            Witness::Components(sizes) => {
                let parts: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "components {}", parts.join("+"))
            }
        }
    }
}

/// One row of the per-pair table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HatRow {
    pub pair: (usize, usize),
    pub predicted_edges: isize,
    pub actual_edges: usize,
    pub verdict: Prop21Verdict,
}

#[derive(Clone, Debug)]
pub struct SieveVerdict {
    pub graph_code: CanonicalCode,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Every vertex pair in lexicographic order.
    pub hat_summary: Vec<HatRow>,
}

/// `Ĝ_{a,b}` rows for all pairs.
pub fn hat_table(g: &Graph) -> Vec<HatRow> {
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            let (h, t) = hat(g, a, b).expect("pairs are in range and distinct");
            let verdict = prop21_classify(&h).expect("reduced graph has minimum degree 3");
            rows.push(HatRow { pair: (a, b), predicted_edges: t.predicted_edges, actual_edges: t.actual_edges, verdict });
        }
    }
    rows
}

/// Lexicographically first pair whose `Ĝ_{a,b}` classifies as planar.
pub fn two_apex_witness(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            let (h, _) = hat(g, a, b).expect("pairs are in range and distinct");
            if prop21_classify(&h).expect("reduced graph has minimum degree 3").is_planar() {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn sieve_graph(g: &Graph) -> SieveVerdict {
    let graph_code = canonical_code(g);
    let hat_summary = hat_table(g);
    let (outcome, witness) = match hat_summary.iter().find(|r| r.verdict.is_planar()) {
        Some(r) => (Outcome::Eliminated, Some(Witness::Pair(r.pair.0, r.pair.1))),
        None => match ik_by_catalog(g) {
            Some((c, w)) => (Outcome::IkByMinor, Some(Witness::Minor(c, w))),
            None => (Outcome::Undetermined, None),
        },
    };
    SieveVerdict { graph_code, outcome, witness, hat_summary }
}

/// Component edge counts when `g` is disconnected and every component is
/// too small to be intrinsically knotted.
pub fn component_bound(g: &Graph) -> Option<Vec<usize>> {
    let comps = g.components();
    if comps.len() < 2 {
        return None;
    }
    let sizes: Vec<usize> = comps
        .iter()
        .map(|&mask| g.edge_pairs().iter().filter(|&&(u, _)| mask >> u & 1 == 1).map(|&(u, v)| g.multiplicity(u, v) as usize).sum())
        .collect();
    sizes.iter().all(|&s| s < IK_MIN_EDGES).then_some(sizes)
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub edge_budget: usize,
    pub min_degree: usize,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
    pub connected_only: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            edge_budget: 23,
            min_degree: 3,
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            cache_dir: None,
            out_dir: None,
            connected_only: true,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        if self.edge_budget == 0 {
            return Err(Error::Config("edge budget must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct GraphRecord {
    pub graph: Graph,
    pub graph6: String,
    pub combination: DegreeCombination,
    pub verdict: SieveVerdict,
}

#[derive(Clone, Debug, Default)]
pub struct CombinationSummary {
    pub combination: DegreeCombination,
    pub classes: usize,
    pub disconnected: usize,
    pub eliminated: usize,
    pub ik: usize,
    pub undetermined: usize,
    pub component_bound: usize,
    pub from_cache: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct CorollaryEntry {
    pub graph6: String,
    pub deleted_edge: (usize, usize),
    pub catalog: Catalog,
    pub witness: MinorWitness,
}

#[derive(Clone, Debug, Default)]
pub struct SpotCheck {
    pub sampled: usize,
    pub planar_confirmed: usize,
    pub catalog_witness_found: usize,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub edge_budget: usize,
    pub min_degree: usize,
    pub connected_only: bool,
    pub combinations: Vec<CombinationSummary>,
    pub records: Vec<GraphRecord>,
    /// One entry per IK graph, `None` when no single-edge deletion stays IK.
    pub corollary: Vec<(String, Option<CorollaryEntry>)>,
    pub spot_check: SpotCheck,
}

pub fn run_theorem(edge_budget: usize, jobs: usize) -> Result<TheoremReport> {
    run_with_config(&RunConfig { edge_budget, jobs, ..RunConfig::default() })
}

pub fn run_with_config(cfg: &RunConfig) -> Result<TheoremReport> {
    cfg.validate()?;
    let combos = degree_combinations(cfg.edge_budget, cfg.min_degree);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let results: Vec<(CombinationSummary, Vec<GraphRecord>)> = pool.install(|| {
        combos
            .par_iter()
            .map(|dc| match catch_unwind(AssertUnwindSafe(|| process_combination(dc, cfg))) {
                Ok(Ok(r)) => r,
                Ok(Err(e)) => failed(dc, e.to_string()),
                Err(_) => failed(dc, "worker panicked".into()),
            })
            .collect()
    });

    // a disconnected graph can be realized under several part assignments
    let mut seen_disconnected = std::collections::HashSet::new();
    let mut combinations = Vec::with_capacity(results.len());
    let mut records = Vec::new();
    for (mut summary, recs) in results {
        for r in recs {
            if !r.graph.is_connected() && !seen_disconnected.insert(r.verdict.graph_code.clone()) {
                continue;
            }
            match r.verdict.outcome {
                Outcome::Eliminated => summary.eliminated += 1,
                Outcome::IkByMinor => summary.ik += 1,
                Outcome::Undetermined => summary.undetermined += 1,
                Outcome::NotIkComponentBound => summary.component_bound += 1,
            }
            records.push(r);
        }
        combinations.push(summary);
    }

    let corollary = pool.install(|| {
        records
            .par_iter()
            .filter(|r| r.verdict.outcome == Outcome::IkByMinor)
            .map(|r| (r.graph6.clone(), corollary_witness(&r.graph, &r.graph6)))
            .collect()
    });
    let spot_check = spot_check(&records, 100);
    Ok(TheoremReport {
        edge_budget: cfg.edge_budget,
        min_degree: cfg.min_degree,
        connected_only: cfg.connected_only,
        combinations,
        records,
        corollary,
        spot_check,
    })
}

fn failed(dc: &DegreeCombination, error: String) -> (CombinationSummary, Vec<GraphRecord>) {
    (CombinationSummary { combination: dc.clone(), error: Some(error), ..Default::default() }, Vec::new())
}

fn process_combination(dc: &DegreeCombination, cfg: &RunConfig) -> Result<(CombinationSummary, Vec<GraphRecord>)> {
    let (graphs, from_cache) = match &cfg.cache_dir {
        Some(dir) => cache::load_or_enumerate(dir, dc)?,
        None => (enumerate_bipartite(dc), false),
    };
    let mut summary = CombinationSummary { combination: dc.clone(), classes: graphs.len(), from_cache, ..Default::default() };
    let mut records = Vec::new();
    for g in graphs {
        let connected = g.is_connected();
        if !connected {
            summary.disconnected += 1;
            if cfg.connected_only {
                continue;
            }
        }
        let verdict = match component_bound(&g) {
            Some(sizes) => SieveVerdict {
                graph_code: canonical_code(&g),
                outcome: Outcome::NotIkComponentBound,
                witness: Some(Witness::Components(sizes)),
                hat_summary: Vec::new(),
            },
            None => sieve_graph(&g),
        };
        let graph6 = encode_graph6(&g)?;
        records.push(GraphRecord { graph: g, graph6, combination: dc.clone(), verdict });
    }
    Ok((summary, records))
}

/// First single-edge deletion of `g` that still has a catalog witness.
pub fn corollary_witness(g: &Graph, graph6: &str) -> Option<CorollaryEntry> {
    g.edge_pairs().into_iter().find_map(|(u, v)| {
        let h = g.without_edge(u, v)?;
        ik_by_catalog(&h).map(|(catalog, witness)| CorollaryEntry {
            graph6: graph6.to_string(),
            deleted_edge: (u, v),
            catalog,
            witness,
        })
    })
}

/// Re-verifies every `stride`-th eliminated graph with the exact planarity
/// test and checks it has no catalog witness.
pub fn spot_check(records: &[GraphRecord], stride: usize) -> SpotCheck {
    let mut out = SpotCheck::default();
    for r in records.iter().filter(|r| r.verdict.outcome == Outcome::Eliminated).step_by(stride.max(1)) {
        let Some(Witness::Pair(a, b)) = r.verdict.witness else {
            continue;
        };
        out.sampled += 1;
        let (h, _) = hat(&r.graph, a, b).expect("witness pair is valid");
        if is_planar(&h) {
            out.planar_confirmed += 1;
        }
        if ik_by_catalog(&r.graph).is_some() {
            out.catalog_witness_found += 1;
        }
    }
    out
}

impl TheoremReport {
    pub fn total_classes(&self) -> usize {
        self.records.len()
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.records.iter().filter(|r| r.verdict.outcome == outcome).count()
    }

    pub fn with_outcome(&self, outcome: Outcome) -> impl Iterator<Item = &GraphRecord> {
        self.records.iter().filter(move |r| r.verdict.outcome == outcome)
    }

    pub fn ik_graphs(&self) -> impl Iterator<Item = (&GraphRecord, Catalog, &MinorWitness)> {
        self.records.iter().filter_map(|r| match &r.verdict.witness {
            Some(Witness::Minor(c, w)) if r.verdict.outcome == Outcome::IkByMinor => Some((r, *c, w)),
            _ => None,
        })
    }

    /// IK graphs whose witness against `parent` deletes exactly `k` edges and
    /// nothing else.
    pub fn parented_by(&self, parent: Catalog, k: usize) -> Vec<&GraphRecord> {
        self.ik_graphs()
            .filter(|(_, c, w)| *c == parent && w.is_edge_deletion_only() && w.edge_deletions() == k)
            .map(|(r, _, _)| r)
            .collect()
    }

    pub fn errors(&self) -> Vec<&CombinationSummary> {
        self.combinations.iter().filter(|c| c.error.is_some()).collect()
    }

    /// Checks the known classification at budgets 21, 22 and 23. `None` for
    /// other budgets.
    pub fn known_result_holds(&self) -> Option<bool> {
        if !self.errors().is_empty() || self.min_degree != 3 {
            return Some(false);
        }
        let ik: Vec<_> = self.ik_graphs().collect();
        match self.edge_budget {
            21 => Some(ik.len() == 1 && ik[0].1 == Catalog::Heawood && ik[0].2.operation_script.is_empty()),
            22 => Some(
                !ik.is_empty()
                    && ik.iter().all(|(_, c, w)| {
                        (*c == Catalog::Heawood && w.is_edge_deletion_only() && w.edge_deletions() == 1)
                            || (*c == Catalog::Cousin110 && w.operation_script.is_empty())
                    })
                    && ik.iter().any(|(_, c, _)| *c == Catalog::Cousin110)
                    && ik.iter().any(|(_, c, _)| *c == Catalog::Heawood),
            ),
            23 => {
                let heawood = self.parented_by(Catalog::Heawood, 2);
                let cousin = self.parented_by(Catalog::Cousin110, 1);
                let mut combos: Vec<(Vec<usize>, Vec<usize>)> = cousin
                    .iter()
                    .map(|r| {
                        let dc = &r.combination;
                        let mut sides = [
                            DegreeCombination::grouped(&dc.deg_a, 5, 3),
                            DegreeCombination::grouped(&dc.deg_b, 5, 3),
                        ];
                        sides.sort();
                        sides.reverse();
                        let [x, y] = sides;
                        (x, y)
                    })
                    .collect();
                combos.sort();
                let expected = vec![(vec![3, 2, 0], vec![3, 2, 0]), (vec![4, 0, 1], vec![3, 2, 0])];
                Some(
                    ik.len() == 6
                        && heawood.len() == 4
                        && cousin.len() == 2
                        && combos == expected
                        && self.corollary.iter().all(|(_, c)| c.is_some()),
                )
            }
            _ => None,
        }
    }
}
