//! Maximum clique by branch and bound with a greedy-coloring bound.

use super::Graph;
use crate::bitset::{to_u128, Mask, VertexSet, INLINE_BITS};

/// Size of a largest clique of `g`. Exponential in the worst case; meant
/// for graphs up to a few dozen vertices.
pub fn clique_number(g: &Graph) -> usize {
    if g.order() <= INLINE_BITS {
        let rows: Vec<u128> = g.adj.iter().map(to_u128).collect();
        let all = if g.order() == INLINE_BITS {
            u128::MAX
        } else {
            (1u128 << g.order()) - 1
        };
        max_clique(&rows, all)
    } else {
        max_clique(&g.adj, VertexSet::full(g.order()))
    }
}

fn max_clique<M: Mask>(rows: &[M], all: M) -> usize {
    let mut best = 0;
    expand(rows, 0, all, &mut best);
    best
}

fn expand<M: Mask>(rows: &[M], size: usize, candidates: M, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = color_sort(rows, &candidates);
    let mut cand = candidates;
    // Highest color first: a vertex colored k can extend the clique by at
    // most k.
    for (&v, &k) in order.iter().zip(&colors).rev() {
        if size + k <= *best {
            return;
        }
        expand(rows, size + 1, cand.and(&rows[v]), best);
        cand = cand.without(v);
    }
}

/// Greedy sequential coloring of the candidates; returns vertices in color
/// order together with their (1-based) color.
fn color_sort<M: Mask>(rows: &[M], candidates: &M) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = candidates.clone();
    let mut order = Vec::with_capacity(candidates.count());
    let mut colors = Vec::with_capacity(candidates.count());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.lowest() {
            uncolored = uncolored.without(v);
            avail = avail.without(v).and_not(&rows[v]);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}
