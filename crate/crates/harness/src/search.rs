use std::time::Instant;

use indpoly_core::analysis::is_symmetric;
use indpoly_core::engine::PolyEngine;
use indpoly_core::graph::canonical_form;
use indpoly_core::Graph;
use rayon::prelude::*;

use crate::report::{ConjectureCandidate, SearchReport};
use crate::suites::graphs_up_to;
use crate::{HarnessError, Result};

pub const MAX_SEARCH_H_ORDER: usize = 6;

pub const VERDICT_SCOPE: &str = "survived_pool means no graph in the finite G pool gives a \
non-palindromic corona polynomial; it is not a proof of symmetry for every G";

/// Default witness pool: every class with `1..=5` vertices plus the paths
/// and cycles on 6 and 7 vertices.
pub fn default_pool() -> Result<Vec<Graph>> {
    let mut pool = graphs_up_to(5)?;
    for n in 6..=7 {
        pool.push(Graph::path(n));
        pool.push(Graph::cycle(n)?);
    }
    Ok(pool)
}

pub fn projected_instances(max_h_order: usize, pool: usize) -> Result<usize> {
    Ok(graphs_up_to(max_h_order)?.len() * pool)
}

// On r vertices exactly one class has C(r,2) - 1 edges.
fn is_complete_minus_edge(h: &Graph) -> bool {
    let r = h.order();
    r >= 2 && h.size() == r * (r - 1) / 2 - 1
}

/// Looks, for every class `H` with `1..=max_h_order` vertices, for a pool
/// graph `G` whose corona `G ∘ H` has a non-palindromic independence
/// polynomial. The first such `G` in pool order is the witness.
pub fn conjecture_search(
    engine: &dyn PolyEngine,
    max_h_order: usize,
    pool: &[Graph],
) -> Result<SearchReport> {
    if max_h_order > MAX_SEARCH_H_ORDER {
        return Err(HarnessError::Usage(format!(
            "max-h {max_h_order} exceeds the search guard {MAX_SEARCH_H_ORDER}"
        )));
    }
    let start = Instant::now();
    let hs = graphs_up_to(max_h_order)?;
    let mut candidates: Vec<ConjectureCandidate> = hs
        .par_iter()
        .map(|h| {
            let witness = pool.iter().find_map(|g| {
                let p = engine.indpoly_corona(g, h);
                (!is_symmetric(&p)).then_some((g, p))
            });
            let key = canonical_form(h).expect("search graphs are within the canonical guard");
            let kme = is_complete_minus_edge(h);
            ConjectureCandidate {
                h_descriptor: key.to_string(),
                h_expr: h.descriptor(),
                h_order: h.order(),
                h_size: h.size(),
                is_complete_minus_edge: kme,
                survived_pool: witness.is_none(),
                witness_g: witness.as_ref().map(|(g, _)| g.descriptor()),
                witness_expr: witness
                    .as_ref()
                    .map(|(g, _)| format!("corona({}, {})", g.descriptor(), h.descriptor())),
                witness_polynomial: witness.map(|(_, p)| p),
            }
        })
        .collect();
    candidates.sort_by(|a, b| {
        (a.h_order, a.h_size, &a.h_descriptor).cmp(&(b.h_order, b.h_size, &b.h_descriptor))
    });
    let survivors = candidates.iter().filter(|c| c.survived_pool).count();
    Ok(SearchReport {
        max_h_order,
        pool_size: pool.len(),
        verdict_scope: VERDICT_SCOPE.to_string(),
        survivors,
        eliminated: candidates.len() - survivors,
        candidates,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
