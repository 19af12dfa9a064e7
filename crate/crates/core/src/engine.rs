//! Exact computation of the independence polynomial `I(G;x)`.
//!
//! [`indpoly`] branches on a vertex, `I(G) = I(G - v) + x * I(G - N[v])`,
//! after splitting the surviving vertex set into connected components
//! (`I(G1 ∪ G2) = I(G1) * I(G2)`). Results are memoized per call, keyed by
//! the surviving vertex set of the original graph. [`indpoly_bruteforce`]
//! is the independent oracle: it walks every independent set.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::bitset::{to_u128, Mask, VertexSet, INLINE_BITS};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{IntPolynomial, Integer};

/// Largest order accepted by [`indpoly_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 30;

/// Largest order handled with fixed-width `u128` memo keys; larger graphs
/// use heap-backed [`VertexSet`] keys.
pub const MEMO_BITMASK_LIMIT: usize = INLINE_BITS;

/// Counts independent sets of every size by backtracking.
pub fn indpoly_bruteforce(g: &Graph) -> Result<IntPolynomial> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force order",
            limit: BRUTE_FORCE_LIMIT,
            actual: n,
        });
    }
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, w| acc | 1 << w))
        .collect();
    let mut counts = vec![0u64; n + 1];
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    walk(&rows, all, 0, &mut counts);
    Ok(IntPolynomial::new(counts.into_iter().map(Integer::from).collect()))
}

// `cand` holds the vertices that may still be added: higher-indexed than
// everything chosen so far and non-adjacent to all of it.
fn walk(rows: &[u64], cand: u64, size: usize, counts: &mut [u64]) {
    counts[size] += 1;
    let mut c = cand;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        walk(rows, c & !rows[v], size + 1, counts);
    }
}

/// `I(G;x)` by memoized branching. Never fails; graphs wider than
/// [`MEMO_BITMASK_LIMIT`] take the general-set path.
pub fn indpoly(g: &Graph) -> IntPolynomial {
    if g.order() <= MEMO_BITMASK_LIMIT {
        let rows: Vec<u128> = (0..g.order()).map(|v| to_u128(g.neighbors(v))).collect();
        let all = match g.order() {
            0 => 0,
            n => u128::MAX >> (128 - n),
        };
        Brancher::new(rows).solve(all)
    } else {
        let rows: Vec<VertexSet> = (0..g.order()).map(|v| g.neighbors(v).clone()).collect();
        Brancher::new(rows).solve(VertexSet::full(g.order()))
    }
}

/// Memo table of one top-level [`indpoly`] call: surviving vertex set of
/// the root graph → `I` of the subgraph it induces.
pub struct MemoTable<M> {
    entries: HashMap<M, IntPolynomial>,
}

impl<M: Mask> MemoTable<M> {
    fn new() -> Self {
        Self {
            entries: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &IntPolynomial)> {
        self.entries.iter()
    }
}

pub(crate) struct Brancher<M> {
    rows: Vec<M>,
    memo: MemoTable<M>,
}

impl<M: Mask> Brancher<M> {
    pub(crate) fn new(rows: Vec<M>) -> Self {
        Self {
            rows,
            memo: MemoTable::new(),
        }
    }

    pub(crate) fn solve(&mut self, alive: M) -> IntPolynomial {
        if alive.is_empty() {
            return IntPolynomial::one();
        }
        if let Some(p) = self.memo.entries.get(&alive) {
            return p.clone();
        }
        let p = self.compute(&alive);
        self.memo.entries.insert(alive, p.clone());
        p
    }

    fn degree_in(&self, v: usize, alive: &M) -> usize {
        self.rows[v].and(alive).count()
    }

    fn component_of(&self, start: usize, alive: &M) -> M {
        let mut reach = M::singleton(start);
        let mut frontier = reach.clone();
        while let Some(u) = frontier.lowest() {
            frontier = frontier.without(u);
            let fresh = self.rows[u].and(alive).and_not(&reach);
            reach = reach.or(&fresh);
            frontier = frontier.or(&fresh);
        }
        reach
    }

    fn compute(&mut self, alive: &M) -> IntPolynomial {
        let start = alive.lowest().expect("nonempty");
        let first = self.component_of(start, alive);
        if first != *alive {
            return self.split(alive, first);
        }
        let size = alive.count();
        let members = alive.members();
        let degrees: Vec<usize> = members.iter().map(|&v| self.degree_in(v, alive)).collect();
        // cliques (including single vertices and isolated edges): 1 + size*x
        if degrees.iter().all(|&d| d + 1 == size) {
            return IntPolynomial::new(vec![Integer::one(), Integer::from(size)]);
        }
        // max degree, lowest index on ties
        let (mut v, mut best) = (members[0], degrees[0]);
        for (&u, &d) in members.iter().zip(&degrees) {
            if d > best {
                (v, best) = (u, d);
            }
        }
        let without_v = alive.without(v);
        let without_closed = without_v.and_not(&self.rows[v]);
        let a = self.solve(without_v);
        let b = self.solve(without_closed);
        &a + &b.shift(1)
    }

    fn split(&mut self, alive: &M, first: M) -> IntPolynomial {
        let mut rest = alive.and_not(&first);
        let mut comps = vec![first];
        while let Some(s) = rest.lowest() {
            let c = self.component_of(s, &rest);
            rest = rest.and_not(&c);
            comps.push(c);
        }
        // isolated vertices and edges in closed form
        let singles = comps.iter().filter(|c| c.count() == 1).count();
        let pairs = comps.iter().filter(|c| c.count() == 2).count();
        let mut product = IntPolynomial::from_slice(&[1, 1])
            .pow(singles)
            .mul(IntPolynomial::from_slice(&[1, 2]).pow(pairs));
        for c in comps.into_iter().filter(|c| c.count() > 2) {
            product = &product * &self.solve(c);
        }
        product
    }

    #[cfg(test)]
    pub(crate) fn memo(&self) -> &MemoTable<M> {
        &self.memo
    }
}

use std::ops::Mul as _;

/// `I(G1 + G2) = I(G1) + I(G2) - 1` for the Zykov sum.
pub fn indpoly_zykov(p1: &IntPolynomial, p2: &IntPolynomial) -> Result<IntPolynomial> {
    for p in [p1, p2] {
        if !p.coefficient(0).is_one() {
            return Err(Error::NotIndependencePolynomial);
        }
    }
    Ok(&(p1 + p2) - &IntPolynomial::one())
}

/// `I(G ∘ H)` from `I(G)` and `I(H)`, with the substitution
/// `I(H)^n * I(G; x / I(H))` cleared of denominators:
/// `sum_k s_k(G) * x^k * I(H)^(n-k)`.
pub fn corona_from_polynomials(ig: &IntPolynomial, ih: &IntPolynomial, n: usize) -> IntPolynomial {
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(IntPolynomial::one());
    for j in 1..=n {
        powers.push(&powers[j - 1] * ih);
    }
    let mut acc = IntPolynomial::zero();
    for (k, s) in ig.coeffs().iter().enumerate().take(n + 1) {
        if s.is_zero() {
            continue;
        }
        acc = &acc + &powers[n - k].scale(s).shift(k);
    }
    acc
}

/// `I(G ∘ H)` without building the corona.
pub fn indpoly_corona(g: &Graph, h: &Graph) -> IntPolynomial {
    corona_from_polynomials(&indpoly(g), &indpoly(h), g.order())
}

/// `α(G)`, the degree of `I(G;x)`.
pub fn independence_number(g: &Graph) -> usize {
    indpoly(g).degree()
}

/// A source of independence polynomials. The verification harness is
/// written against this trait so an engine can be swapped out, e.g. for a
/// deliberately broken one in tests.
pub trait PolyEngine: Sync {
    fn indpoly(&self, g: &Graph) -> IntPolynomial;

    fn indpoly_corona(&self, g: &Graph, h: &Graph) -> IntPolynomial {
        corona_from_polynomials(&self.indpoly(g), &self.indpoly(h), g.order())
    }
}

/// The memoized branching engine.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactEngine;

impl PolyEngine for ExactEngine {
    fn indpoly(&self, g: &Graph) -> IntPolynomial {
        indpoly(g)
    }
}
