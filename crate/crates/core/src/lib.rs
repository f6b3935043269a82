//! Exhaustive verification tooling for bipartite intrinsically knotted graphs.
//!
//! The pipeline enumerates bipartite graphs with a given edge budget and
//! minimum degree, discards every graph that is 2-apex (some pair of vertices
//! whose deletion leaves a planar graph), and certifies the survivors through
//! minor containment of known intrinsically knotted graphs.

pub mod cache;
pub mod canon;
pub mod error;
pub mod graph;
pub mod enumerate;
pub mod families;
pub mod graph6;
pub mod minors;
pub mod planarity;
pub mod report;
pub mod sieve;
pub mod simplify;

pub use canon::{are_isomorphic, canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{Graph, Part};
pub use graph6::{decode_graph6, encode_graph6};
