//! Isomorph-free enumeration of all simple graphs of a given order.
//!
//! Every graph on `n` vertices arises from a graph on `n - 1` vertices by
//! adding one vertex with some neighborhood, so extending each class
//! representative of order `n - 1` in all `2^(n-1)` ways and keeping one
//! graph per canonical key visits every class of order `n` exactly once.

use std::collections::BTreeSet;

use super::canonical::{canonical_labeling, CanonicalKey};
use super::Graph;
use crate::error::{Error, Result};

/// Default guard for [`enumerate_graphs`] (1044 classes at order 7).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One representative (in canonical labeling) per isomorphism class of
/// graphs on `n` vertices, ordered by edge count and then canonical key.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_with_guard(n, MAX_ENUMERATION_ORDER)
}

pub fn enumerate_graphs_with_guard(n: usize, guard: usize) -> Result<Vec<Graph>> {
    if n > guard {
        return Err(Error::TooLarge {
            what: "enumeration order",
            limit: guard,
            actual: n,
        });
    }
    let mut reps = vec![Graph::empty_graph(0)];
    for k in 0..n {
        let mut next: BTreeSet<(usize, CanonicalKey)> = BTreeSet::new();
        for r in &reps {
            for subset in 0u32..1 << k {
                let mut g = r.clone();
                g.adj.push(Default::default());
                for u in (0..k).filter(|u| subset >> u & 1 == 1) {
                    g.link(u, k);
                }
                let (key, _) = canonical_labeling(&g);
                next.insert((g.size(), key));
            }
        }
        reps = next.into_iter().map(|(_, key)| key.to_graph()).collect();
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, canonical_form};
    use std::collections::HashSet;

    // Oracle: every edge subset of K_n, deduplicated by brute-force
    // isomorphism testing over all vertex permutations.
    fn brute_force_class_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        let perms = permutations(n);
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let mut classes = 0;
        for mask in 0u64..1 << pairs.len() {
            let has = |u: usize, v: usize| {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                let idx = pairs.iter().position(|&p| p == (a, b)).unwrap();
                mask >> idx & 1 == 1
            };
            let matrix: Vec<bool> = pairs.iter().map(|&(i, j)| has(i, j)).collect();
            if seen.contains(&matrix) {
                continue;
            }
            classes += 1;
            for p in &perms {
                seen.insert(pairs.iter().map(|&(i, j)| has(p[i], p[j])).collect());
            }
        }
        classes
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn counts_match_brute_force_oracle() {
        for n in 0..=5 {
            assert_eq!(
                enumerate_graphs(n).unwrap().len(),
                brute_force_class_count(n),
                "order {n}"
            );
        }
    }

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn representatives_pairwise_non_isomorphic() {
        let gs = enumerate_graphs(5).unwrap();
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!are_isomorphic(a, b).unwrap());
            }
        }
        let keys: HashSet<_> = enumerate_graphs(6)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(keys.len(), 156);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            enumerate_graphs(8),
            Err(Error::TooLarge { limit: 7, actual: 8, .. })
        ));
        assert_eq!(enumerate_graphs_with_guard(3, 3).unwrap().len(), 4);
    }
}
