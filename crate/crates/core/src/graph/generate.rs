//! Exhaustive isomorph-free generation of small connected graphs.

use std::collections::BTreeSet;

use super::canon::canonical_form;
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_BUILTIN_ORDER: usize = 7;

/// All graphs on `n` vertices up to isomorphism, by adding one vertex to each
/// class on `n - 1` vertices and canonicalising.
fn all_graphs(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let mut level: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    level.insert(Vec::new());
    for k in 1..n {
        let mut next = BTreeSet::new();
        for edges in &level {
            for mask in 0u32..(1 << k) {
                let extra = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| (i, k));
                let g = Graph::new(k + 1, edges.iter().copied().chain(extra))
                    .expect("extension is simple");
                next.insert(canonical_form(&g).edges().to_vec());
            }
        }
        level = next;
    }
    level
}

/// Every connected simple graph on `n` vertices, one per isomorphism class,
/// in a deterministic order. Refuses `n > 7`; larger censuses should be
/// ingested as graph6.
pub fn builtin_generate(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::Precondition(format!(
            "builtin generator supports 1 <= n <= {MAX_BUILTIN_ORDER}; for n = {n} feed graph6 lines (for example geng output) instead"
        )));
    }
    Ok(all_graphs(n)
        .into_iter()
        .map(|edges| Graph::new(n, edges).expect("canonical edges"))
        .filter(Graph::is_connected)
        .collect())
}
