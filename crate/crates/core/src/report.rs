//! Text renderings of a [`TheoremReport`] and the files written under `--out`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::enumerate::DegreeCombination;
use crate::error::{Error, Result};
use crate::families::Catalog;
use crate::sieve::{Outcome, TheoremReport, IK_MIN_EDGES};

pub const VERDICT_FILE: &str = "verdicts.tsv";
pub const SUMMARY_FILE: &str = "summary.txt";

/// One line per graph: graph6, verdict, witness.
pub fn verdict_tsv(report: &TheoremReport) -> String {
    let mut out = String::from("graph6\tverdict\twitness\n");
    for r in &report.records {
        let witness = r.verdict.witness.as_ref().map_or_else(|| "-".to_string(), |w| w.to_string());
        let _ = writeln!(out, "{}\t{}\t{}", r.graph6, r.verdict.outcome, witness);
    }
    out
}

fn grouped(dc: &DegreeCombination) -> String {
    let hi = dc.max_degree().max(3);
    format!(
        "[A]={:?} [B]={:?}",
        DegreeCombination::grouped(&dc.deg_a, hi, 3),
        DegreeCombination::grouped(&dc.deg_b, hi, 3)
    )
}

pub fn summary_text(report: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "edge budget {}  min degree {}", report.edge_budget, report.min_degree);
    let _ = writeln!(s, "degree combinations {}", report.combinations.len());
    let _ = writeln!(s, "isomorphism classes sieved {}", report.total_classes());
    if report.connected_only {
        let skipped: usize = report.combinations.iter().map(|c| c.disconnected).sum();
        let _ = writeln!(
            s,
            "disconnected classes skipped {skipped} (every component has fewer than {IK_MIN_EDGES} edges, the minimum for intrinsic knotting)"
        );
    }
    for outcome in [Outcome::Eliminated, Outcome::IkByMinor, Outcome::Undetermined, Outcome::NotIkComponentBound] {
        let _ = writeln!(s, "{outcome} {}", report.count(outcome));
    }
    for c in report.errors() {
        let _ = writeln!(s, "ERROR {} {}", c.combination, c.error.as_deref().unwrap_or(""));
    }

    let _ = writeln!(s, "\nintrinsically knotted (catalog minor witness)");
    for (r, _, w) in report.ik_graphs() {
        let _ = writeln!(s, "  {}  {}  {}  {}", r.graph6, r.combination, grouped(&r.combination), w);
    }
    let _ = writeln!(
        s,
        "  parent {}: {} graphs by deleting exactly 2 edges",
        Catalog::Heawood,
        report.parented_by(Catalog::Heawood, 2).len()
    );
    let _ = writeln!(
        s,
        "  parent {}: {} graphs by deleting exactly 1 edge",
        Catalog::Cousin110,
        report.parented_by(Catalog::Cousin110, 1).len()
    );

    let _ = writeln!(s, "\nproper minors still certified (one edge deleted)");
    for (g6, entry) in &report.corollary {
        match entry {
            Some(e) => {
                let _ = writeln!(s, "  {g6}  delete {}-{}  {}", e.deleted_edge.0, e.deleted_edge.1, e.witness);
            }
            None => {
                let _ = writeln!(s, "  {g6}  none");
            }
        }
    }

    let _ = writeln!(s, "\nundetermined (no planar Ĝ for any pair, no catalog witness; new census, not decided here)");
    for r in report.with_outcome(Outcome::Undetermined) {
        let _ = writeln!(s, "  {}  {}  {}", r.graph6, r.combination, grouped(&r.combination));
    }

    let sc = &report.spot_check;
    let _ = writeln!(
        s,
        "\nspot check: {} eliminated graphs re-tested, {} planar by exact test, {} with a catalog witness",
        sc.sampled, sc.planar_confirmed, sc.catalog_witness_found
    );
    let _ = writeln!(
        s,
        "note: the graph obtained from a survivor by deleting two edges is read as the Heawood graph (C14 = the 14-vertex Heawood graph)"
    );
    match report.known_result_holds() {
        Some(true) => s.push_str("known classification reproduced\n"),
        Some(false) => s.push_str("known classification NOT reproduced\n"),
        None => {}
    }
    s
}

pub fn per_combination_tsv(report: &TheoremReport) -> String {
    let mut out = String::from("combination\tclasses\tdisconnected\teliminated\tik\tundetermined\tcomponent_bound\n");
    for c in &report.combinations {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            c.combination, c.classes, c.disconnected, c.eliminated, c.ik, c.undetermined, c.component_bound
        );
    }
    out
}

/// Writes the verdict table, the per-combination counts and the summary.
pub fn write_report(report: &TheoremReport, out_dir: &Path) -> Result<()> {
    fs::create_dir_all(out_dir).map_err(|e| Error::Io(format!("{}: {e}", out_dir.display())))?;
    let write = |name: &str, body: String| {
        let path = out_dir.join(name);
        fs::write(&path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    };
    write(VERDICT_FILE, verdict_tsv(report))?;
    write("combinations.tsv", per_combination_tsv(report))?;
    write(SUMMARY_FILE, summary_text(report))
}
