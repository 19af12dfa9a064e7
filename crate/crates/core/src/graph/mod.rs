//! Finite simple graphs and the operations used to build composite graphs.

mod canonical;
mod clique;
pub mod dsl;
pub mod edgelist;
mod enumerate;
mod perfect;

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub use canonical::{are_isomorphic, canonical_form, CanonicalKey, MAX_CANONICAL_ORDER};
pub use clique::clique_number;
pub use enumerate::{enumerate_graphs, enumerate_graphs_with_guard, MAX_ENUMERATION_ORDER};
pub use perfect::{has_odd_hole, is_perfect, MAX_PERFECT_ORDER};

/// A finite simple graph on the vertices `0..order()`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex and is always
/// symmetric and loop-free. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", self.descriptor())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices (`nK_1`).
    pub fn empty_graph(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty_graph(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let order = self.order();
        for w in [u, v] {
            if w >= order {
                return Err(Error::VertexOutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    // infallible variant for internal construction with known-good indices
    fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty_graph(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty_graph(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        let mut g = Self::path(n);
        g.link(n - 1, 0);
        Ok(g)
    }

    /// `K_r` with the edge `{0, 1}` removed.
    pub fn complete_minus_edge(r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::CompleteMinusEdgeTooSmall(r));
        }
        let mut g = Self::complete(r);
        g.adj[0].remove(1);
        g.adj[1].remove(0);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `g1 ∪ g2`; vertices of `g2` are shifted by `g1.order()`.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
        let n1 = g1.order();
        let mut g = Self::empty_graph(n1 + g2.order());
        for (u, v) in g1.edges() {
            g.link(u, v);
        }
        for (u, v) in g2.edges() {
            g.link(n1 + u, n1 + v);
        }
        g
    }

    /// `k` disjoint copies of `g`.
    pub fn copies(g: &Graph, k: usize) -> Graph {
        (0..k).fold(Graph::empty_graph(0), |acc, _| Graph::disjoint_union(&acc, g))
    }

    /// Zykov sum `g1 + g2`: the disjoint union plus every edge between the
    /// two sides.
    pub fn zykov_sum(g1: &Graph, g2: &Graph) -> Graph {
        let n1 = g1.order();
        let mut g = Self::disjoint_union(g1, g2);
        for u in 0..n1 {
            for v in 0..g2.order() {
                g.link(u, n1 + v);
            }
        }
        g
    }

    /// Corona `g ∘ h`.
    ///
    /// Vertices `0..n` are the vertices of `g`; the copy of `h` attached to
    /// vertex `v` occupies `n + v*|h| .. n + (v+1)*|h|`.
    pub fn corona(g: &Graph, h: &Graph) -> Graph {
        let n = g.order();
        let p = h.order();
        let mut out = Self::empty_graph(n * (1 + p));
        for (u, v) in g.edges() {
            out.link(u, v);
        }
        for v in 0..n {
            let base = n + v * p;
            for (a, b) in h.edges() {
                out.link(base + a, base + b);
            }
            for a in 0..p {
                out.link(v, base + a);
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Self::empty_graph(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// Subgraph spanned by `keep`, relabeled to `0..|keep|` in increasing
    /// order of the original labels.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        if keep.bound() > self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: keep.bound() - 1,
                order: self.order(),
            });
        }
        let members: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Self::empty_graph(members.len());
        for (i, &v) in members.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.link(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = VertexSet::full(self.order());
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = VertexSet::full(self.order());
        keep.remove(v);
        for w in self.adj[v].iter() {
            keep.remove(w);
        }
        self.induced_subgraph(&keep)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.adj[u].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Literal expression `edges(n,u-v,...)` that the DSL parses back to
    /// this exact graph.
    pub fn descriptor(&self) -> String {
        let mut s = format!("edges({}", self.order());
        for (u, v) in self.edges() {
            s.push_str(&format!(",{u}-{v}"));
        }
        s.push(')');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn constructors() {
        assert_eq!((k(1).order(), k(1).size()), (1, 0));
        assert_eq!(k(3).size(), 3);
        assert_eq!(k(7).size(), 21);
        assert_eq!(k(0).order(), 0);
        let p3 = Graph::path(3);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(Graph::cycle(5).unwrap().size(), 5);
        assert!(Graph::cycle(5).unwrap().has_edge(4, 0));
        assert_eq!(Graph::cycle(2), Err(Error::CycleTooShort(2)));
        assert_eq!(Graph::empty_graph(2).size(), 0);
        assert_eq!(Graph::path(0).order(), 0);
    }

    #[test]
    fn complete_minus_edge_shapes() {
        assert_eq!(Graph::complete_minus_edge(2).unwrap(), Graph::empty_graph(2));
        assert!(are_isomorphic(&Graph::complete_minus_edge(3).unwrap(), &Graph::path(3)).unwrap());
        let k4e = Graph::complete_minus_edge(4).unwrap();
        assert_eq!((k4e.order(), k4e.size()), (4, 5));
        assert_eq!(
            Graph::complete_minus_edge(1),
            Err(Error::CompleteMinusEdgeTooSmall(1))
        );
    }

    #[test]
    fn complement_of_complete_minus_edge_is_single_edge() {
        // Direct edge-set complement for r = 4: only the removed pair remains.
        let c = Graph::complete_minus_edge(4).unwrap().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let expected = Graph::disjoint_union(&k(2), &Graph::empty_graph(2));
        assert!(are_isomorphic(&c, &expected).unwrap());
    }

    #[test]
    fn unions_and_sums() {
        assert_eq!(Graph::disjoint_union(&k(1), &k(1)), Graph::empty_graph(2));
        assert_eq!(Graph::zykov_sum(&k(1), &k(1)), k(2));
        assert_eq!(
            Graph::zykov_sum(&Graph::empty_graph(1), &Graph::empty_graph(1)).size(),
            1
        );
        let three_k7 = Graph::copies(&k(7), 3);
        assert_eq!((three_k7.order(), three_k7.size()), (21, 63));
        let g = Graph::zykov_sum(&k(43), &three_k7);
        assert_eq!(g.size(), 43 * 42 / 2 + 63 + 43 * 21);
    }

    #[test]
    fn corona_layout() {
        let h = Graph::complete_minus_edge(3).unwrap();
        assert!(are_isomorphic(
            &Graph::corona(&k(1), &h),
            &Graph::complete_minus_edge(4).unwrap()
        )
        .unwrap());
        let h = Graph::disjoint_union(&k(2), &k(1));
        let c = Graph::corona(&Graph::path(3), &h);
        assert_eq!(c.order(), 12);
        // copy of H for vertex 1 occupies 6..9
        assert!(c.has_edge(1, 6) && c.has_edge(1, 8) && c.has_edge(6, 7));
        assert!(!c.has_edge(0, 6));
        assert_eq!(Graph::corona(&Graph::empty_graph(0), &h).order(), 0);
    }

    #[test]
    fn deletions() {
        assert_eq!(k(2).delete_vertex(0).unwrap(), k(1));
        assert_eq!(Graph::path(3).delete_closed_neighborhood(1).unwrap().order(), 0);
        assert_eq!(
            Graph::path(3).delete_closed_neighborhood(0).unwrap(),
            Graph::empty_graph(1)
        );
        assert_eq!(
            k(2).delete_vertex(2),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        );
        let s: VertexSet = [0, 2, 3].into_iter().collect();
        let sub = Graph::cycle(4).unwrap().induced_subgraph(&s).unwrap();
        assert!(are_isomorphic(&sub, &Graph::path(3)).unwrap());
    }

    #[test]
    fn components() {
        let sizes = |g: &Graph| {
            g.connected_components()
                .iter()
                .map(VertexSet::len)
                .collect::<Vec<_>>()
        };
        assert_eq!(sizes(&Graph::empty_graph(2)), vec![1, 1]);
        assert_eq!(sizes(&Graph::disjoint_union(&k(2), &k(1))), vec![2, 1]);
        assert_eq!(sizes(&Graph::corona(&Graph::path(3), &k(1))), vec![6]);
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, order: 2 })
        );
    }

    #[test]
    fn descriptor_names_every_edge() {
        assert_eq!(Graph::path(3).descriptor(), "edges(3,0-1,1-2)");
        assert_eq!(Graph::empty_graph(0).descriptor(), "edges(0)");
    }
}
