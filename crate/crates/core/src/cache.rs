//! Per-combination graph6 cache files.
//!
//! A file holds one graph6 line per graph and ends with `#done <count>`.
//! Files without a matching marker are treated as partial and rebuilt.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::enumerate::{enumerate_bipartite, DegreeCombination};
use crate::error::{Error, Result};
use crate::graph::{Graph, Part};
use crate::graph6::{decode_graph6, encode_graph6};

pub const DONE_MARKER: &str = "#done";

pub fn combination_path(dir: &Path, dc: &DegreeCombination) -> PathBuf {
    dir.join(format!("{}.g6", dc.file_stem()))
}

/// Complete cache contents, or `None` when the file is missing or partial.
pub fn read_complete(path: &Path, dc: &DegreeCombination) -> Result<Option<Vec<Graph>>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(cache_error(path, e.to_string())),
    };
    let mut lines: Vec<&str> = text.lines().collect();
    let Some(last) = lines.pop() else {
        return Ok(None);
    };
    let Some(count) = last.strip_prefix(DONE_MARKER).map(str::trim) else {
        return Ok(None);
    };
    let count: usize = count.parse().map_err(|_| cache_error(path, format!("bad marker line {last:?}")))?;
    if count != lines.len() {
        return Err(cache_error(path, format!("marker says {count} graphs, file has {}", lines.len())));
    }
    let r = dc.deg_a.len();
    lines
        .iter()
        .map(|line| {
            let g = decode_graph6(line).map_err(|e| cache_error(path, e.to_string()))?;
            let parts = (0..g.vertex_count()).map(|v| if v < r { Part::A } else { Part::B }).collect();
            g.with_parts(parts).map_err(|e| cache_error(path, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Writes the graphs and the completion marker through a temporary file.
pub fn write(path: &Path, graphs: &[Graph]) -> Result<()> {
    let tmp = path.with_extension("g6.partial");
    let mut f = fs::File::create(&tmp).map_err(|e| cache_error(&tmp, e.to_string()))?;
    let mut body = String::new();
    for g in graphs {
        body.push_str(&encode_graph6(g)?);
        body.push('\n');
    }
    body.push_str(&format!("{DONE_MARKER} {}\n", graphs.len()));
    f.write_all(body.as_bytes()).map_err(|e| cache_error(&tmp, e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| cache_error(path, e.to_string()))
}

/// Reads a complete cache file or enumerates and writes one. The flag is
/// true when the cache was reused.
pub fn load_or_enumerate(dir: &Path, dc: &DegreeCombination) -> Result<(Vec<Graph>, bool)> {
    fs::create_dir_all(dir).map_err(|e| cache_error(dir, e.to_string()))?;
    let path = combination_path(dir, dc);
    if let Some(graphs) = read_complete(&path, dc)? {
        return Ok((graphs, true));
    }
    let graphs = enumerate_bipartite(dc);
    write(&path, &graphs)?;
    Ok((graphs, false))
}

fn cache_error(path: &Path, reason: String) -> Error {
    Error::Cache { path: path.display().to_string(), reason }
}
