//! Canonical labeling of small graphs.
//!
//! Vertices are first partitioned by color refinement (degree, then the
//! multiset of neighbor colors, iterated to a fixpoint). Labelings that list
//! the cells in color order are then searched exhaustively for the one whose
//! upper-triangle adjacency bit string is lexicographically largest. Swapping
//! two twin vertices is an automorphism, so only one twin of each pair is
//! tried at every position.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 10;

// Upper triangle of a 16-vertex graph is 120 bits.
const HARD_LIMIT: usize = 16;

/// Isomorphism-invariant key of a graph: equal iff the graphs are
/// isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    order: u8,
    bits: u128,
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty_graph(n);
        let total = n * n.saturating_sub(1) / 2;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - idx) & 1 == 1 {
                    g.link(i, j);
                }
                idx += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:x}", self.order, self.bits)
    }
}

impl FromStr for CanonicalKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            position: 0,
            message: format!("{message} in canonical key {s:?}"),
        };
        let (n, bits) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let order: u8 = n.parse().map_err(|_| bad("bad order"))?;
        let bits = u128::from_str_radix(bits, 16).map_err(|_| bad("bad bit string"))?;
        if order as usize > HARD_LIMIT {
            return Err(bad("order too large"));
        }
        let total = order as usize * (order as usize).saturating_sub(1) / 2;
        if total < 128 && bits >> total != 0 {
            return Err(bad("bits beyond the upper triangle"));
        }
        Ok(Self { order, bits })
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge {
            what: "canonical form order",
            limit: MAX_CANONICAL_ORDER,
            actual: g.order(),
        });
    }
    Ok(canonical_labeling(g).0)
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

/// Returns the key and the labeling: `perm[position] = original vertex`.
pub(crate) fn canonical_labeling(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let n = g.order();
    assert!(n <= HARD_LIMIT);
    let colors = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let cell_of_position: Vec<usize> = order.iter().map(|&v| colors[v]).collect();

    let mut search = Search {
        g,
        colors: &colors,
        cell_of_position,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0, Ordering::Equal);
    let (bits, perm) = search.best.expect("at least one labeling");
    (
        CanonicalKey {
            order: n as u8,
            bits,
        },
        perm,
    )
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colors = sigs
            .iter()
            .map(|s| uniq.binary_search(s).unwrap())
            .collect();
        let now = uniq.len();
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    cell_of_position: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn twins(&self, u: usize, w: usize) -> bool {
        let mut a = self.g.neighbors(u).clone();
        let mut b = self.g.neighbors(w).clone();
        a.remove(w);
        b.remove(u);
        a == b
    }

    // `prefix` holds the bits emitted so far; `state` compares it with the
    // same-length prefix of the best key found so far.
    fn run(&mut self, pos: usize, prefix: u128, state: Ordering) {
        let n = self.g.order();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => prefix > *b,
            };
            if better {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let cell = self.cell_of_position[pos];
        let total = n * (n - 1) / 2;
        let emitted_after = (pos + 1) * pos / 2;
        for v in 0..n {
            if self.used[v] || self.colors[v] != cell {
                continue;
            }
            let shadowed = (0..v).any(|u| {
                !self.used[u] && self.colors[u] == cell && self.twins(u, v)
            });
            if shadowed {
                continue;
            }
            let mut next = prefix;
            for i in 0..pos {
                next = next << 1 | self.g.has_edge(self.perm[i], v) as u128;
            }
            let next_state = match (state, &self.best) {
                (Ordering::Equal, Some((b, _))) => {
                    let best_prefix = b >> (total - emitted_after);
                    next.cmp(&best_prefix)
                }
                (s, _) => s,
            };
            if next_state == Ordering::Less {
                continue;
            }
            self.used[v] = true;
            self.perm.push(v);
            self.run(pos + 1, next, next_state);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.order(), &edges).unwrap()
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
    fn named_isomorphisms() {
        let p3 = Graph::path(3);
        let k3e = Graph::complete_minus_edge(3).unwrap();
        assert!(are_isomorphic(&p3, &k3e).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        let k4e = Graph::complete_minus_edge(4).unwrap();
        assert!(!are_isomorphic(&c4, &k4e).unwrap());
    }

    #[test]
    fn c5_key_stable_under_all_relabelings() {
        let c5 = Graph::cycle(5).unwrap();
        let key = canonical_form(&c5).unwrap();
        let perms = permutations(5);
        assert_eq!(perms.len(), 120);
        for p in perms {
            assert_eq!(canonical_form(&relabel(&c5, &p)).unwrap(), key);
        }
    }

    #[test]
    fn key_round_trips_through_graph_and_text() {
        let g = Graph::corona(&Graph::path(2), &Graph::complete(2));
        let key = canonical_form(&g).unwrap();
        assert!(are_isomorphic(&key.to_graph(), &g).unwrap());
        assert_eq!(canonical_form(&key.to_graph()).unwrap(), key);
        assert_eq!(key.to_string().parse::<CanonicalKey>().unwrap(), key);
        assert!("x".parse::<CanonicalKey>().is_err());
    }

    #[test]
    fn size_guard() {
        let err = canonical_form(&Graph::complete(11)).unwrap_err();
        assert!(matches!(err, Error::TooLarge { limit: 10, .. }));
    }

    #[test]
    fn regular_graphs_distinguished() {
        // C6 and 2C3 are both 2-regular on 6 vertices; refinement alone
        // cannot separate them.
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 = Graph::copies(&Graph::cycle(3).unwrap(), 2);
        assert!(!are_isomorphic(&c6, &two_c3).unwrap());
        let shifted = relabel(&c6, &[3, 1, 4, 0, 5, 2]);
        assert!(are_isomorphic(&c6, &shifted).unwrap());
    }
}
