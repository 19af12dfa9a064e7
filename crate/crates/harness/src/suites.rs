//! Verification sweeps. Every suite is written against [`PolyEngine`] so a
//! deliberately broken engine can be substituted; instances run in parallel
//! and the reported failure is the first one in instance order.

use std::ops::RangeInclusive;
use std::time::Instant;

use indpoly_core::analysis::{
    detect_f_symmetry, invariant_residual, is_symmetric, perfect_tail_check, unimodality,
    verify_f_symmetry, Invariant,
};
use indpoly_core::engine::{independence_number, indpoly_bruteforce, PolyEngine};
use indpoly_core::graph::{clique_number, dsl, enumerate_graphs, is_perfect};
use indpoly_core::{Graph, IntPolynomial, Integer, RatPolynomial, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::random::symmetric_unimodal;
use crate::report::{Failure, VerificationReport};
use crate::{HarnessError, Result};

pub const DEFAULT_SEED: u64 = 0x1d9_2016;

/// The five worked examples: DSL expression and expected coefficients.
pub const PAPER_EXAMPLES: [(&str, &[u32]); 5] = [
    ("join(K(127), union(K(7), union(K(7), K(7))))", &[1, 148, 147, 343]),
    ("join(K(43), union(K(7), union(K(7), K(7))))", &[1, 64, 147, 343]),
    ("join(K(18), join(union(K(3), union(K(3), K(3))), E(4)))", &[1, 31, 33, 31, 1]),
    ("join(K(52), join(union(K(4), union(K(4), K(4))), E(4)))", &[1, 68, 54, 68, 1]),
    ("corona(P(3), union(K(2), K(1)))", &[1, 12, 52, 105, 104, 48, 8]),
];

fn run<I: Sync>(
    theorem_id: &str,
    seed: Option<u64>,
    instances: &[I],
    check: impl Fn(&I) -> Option<Failure> + Sync,
) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<Option<Failure>> = instances.par_iter().map(&check).collect();
    let passes = outcomes.iter().filter(|o| o.is_none()).count();
    let first_failure = outcomes.into_iter().flatten().next();
    VerificationReport {
        theorem_id: theorem_id.to_string(),
        instances_checked: instances.len(),
        passes,
        seed,
        first_failure,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

fn failure(g: &Graph, h: Option<&Graph>, p: IntPolynomial, reason: String) -> Option<Failure> {
    Some(Failure {
        g: g.descriptor(),
        h: h.map(Graph::descriptor),
        polynomial: p,
        reason,
    })
}

/// All isomorphism classes with `1..=max` vertices.
pub fn graphs_up_to(max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

/// Classes with at most `max` vertices and independence number two.
pub fn alpha_two_graphs(max: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to(max)?
        .into_iter()
        .filter(|h| independence_number(h) == 2)
        .collect())
}

pub fn examples(engine: &dyn PolyEngine) -> VerificationReport {
    run("examples", None, &PAPER_EXAMPLES, |(expr, expected)| {
        let g = dsl::parse(expr).expect("built-in expression parses");
        let p = engine.indpoly(&g);
        let want = IntPolynomial::from_slice(expected);
        (p != want).then(|| Failure {
            g: expr.to_string(),
            h: None,
            reason: format!("expected {want}"),
            polynomial: p,
        })
    })
}

/// Engine against the independent brute force: every class up to
/// `exhaustive` vertices, then `random` seeded graphs on 7 or 8 vertices.
pub fn oracle(
    engine: &dyn PolyEngine,
    exhaustive: usize,
    random: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let mut graphs = graphs_up_to(exhaustive)?;
    graphs.insert(0, Graph::empty_graph(0));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let n = rng.gen_range(7..=8);
        let density: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(density))
            .collect();
        graphs.push(Graph::from_edges(n, &edges)?);
    }
    Ok(run("oracle", Some(seed), &graphs, |g| {
        let got = engine.indpoly(g);
        let want = indpoly_bruteforce(g).expect("oracle graphs are small");
        (got != want).then(|| failure(g, None, got, format!("brute force gives {want}")))?
    }))
}

/// f-symmetry of `G ∘ H` with constant `p(p-1)/2 - q` for every `H` with
/// independence number two.
pub fn thm3(engine: &dyn PolyEngine, max_g: usize, max_h: usize) -> Result<VerificationReport> {
    let gs = graphs_up_to(max_g)?;
    let hs = alpha_two_graphs(max_h)?;
    let grid: Vec<(&Graph, &Graph)> = gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h))).collect();
    Ok(run("thm3", None, &grid, |&(g, h)| {
        let p = engine.indpoly(&Graph::corona(g, h));
        let n = h.order();
        let m = Rational::from_integer(Integer::from(n * (n - 1) / 2) - Integer::from(h.size()));
        let reason = if p.degree() != 2 * g.order() {
            Some(format!("degree {} != 2|V(G)| = {}", p.degree(), 2 * g.order()))
        } else {
            let found = detect_f_symmetry(&p);
            let full = verify_f_symmetry(&p, &m).expect("m > 0 when alpha(H) = 2");
            if found.constant_c.as_ref() != Some(&m) {
                Some(format!("detected c = {:?}, predicted {m}", found.constant_c.map(|c| c.to_string())))
            } else if !full.f_symmetric {
                Some(format!("identity fails at indices {:?} for c = {m}", full.failures))
            } else {
                None
            }
        };
        reason.and_then(|r| failure(g, Some(h), p, r))
    }))
}

/// Palindromic, unimodal, unique mode `|V(G)|` and degree `2|V(G)|` for
/// `G ∘ (K_r - e)`.
pub fn thm5(
    engine: &dyn PolyEngine,
    id: &str,
    max_g: usize,
    r: RangeInclusive<usize>,
) -> Result<VerificationReport> {
    let gs = graphs_up_to(max_g)?;
    let hs = r
        .map(Graph::complete_minus_edge)
        .collect::<indpoly_core::Result<Vec<_>>>()?;
    let grid: Vec<(&Graph, &Graph)> = gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h))).collect();
    Ok(run(id, None, &grid, |&(g, h)| {
        let p = engine.indpoly(&Graph::corona(g, h));
        let n = g.order();
        let u = unimodality(&p);
        let reason = if p.degree() != 2 * n {
            Some(format!("degree {} != 2|V(G)| = {}", p.degree(), 2 * n))
        } else if !is_symmetric(&p) {
            Some("not palindromic".to_string())
        } else if !u.unimodal {
            Some("not unimodal".to_string())
        } else if u.modes != [n] {
            Some(format!("modes {:?}, expected [{n}]", u.modes))
        } else {
            None
        };
        reason.and_then(|r| failure(g, Some(h), p, r))
    }))
}

/// Monotone head and tail for `G ∘ (K_p ∪ K_q)`, `G` perfect.
pub fn prop_perfect(
    engine: &dyn PolyEngine,
    gs: &[Graph],
    ps: RangeInclusive<usize>,
    qs: RangeInclusive<usize>,
) -> Result<VerificationReport> {
    if ps.contains(&0) || qs.contains(&0) {
        return Err(HarnessError::Usage("p and q must be at least 1".into()));
    }
    let hs: Vec<(usize, usize, Graph)> = ps
        .flat_map(|p| qs.clone().map(move |q| (p, q)))
        .map(|(p, q)| (p, q, Graph::disjoint_union(&Graph::complete(p), &Graph::complete(q))))
        .collect();
    let grid: Vec<(&Graph, &(usize, usize, Graph))> =
        gs.iter().flat_map(|g| hs.iter().map(move |h| (g, h))).collect();
    Ok(run("prop-perfect", None, &grid, |&(g, (p, q, h))| {
        let poly = engine.indpoly(&Graph::corona(g, h));
        let omega = clique_number(g).max(*p).max(*q);
        match perfect_tail_check(&poly, omega, g.order()) {
            Ok(true) => None,
            Ok(false) => failure(g, Some(h), poly, format!("monotonicity fails for omega = {omega}")),
            Err(e) => failure(g, Some(h), poly, e.to_string()),
        }
    }))
}

/// Perfect classes with `1..=max` vertices.
pub fn perfect_graphs_up_to(max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for g in graphs_up_to(max)? {
        if is_perfect(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

fn lemma_failure(inputs: String, p: IntPolynomial, reason: &str) -> Option<Failure> {
    Some(Failure {
        g: inputs,
        h: None,
        polynomial: p,
        reason: reason.to_string(),
    })
}

/// `p + x s` with `p` of degree `r` and `s` of degree `r - 2`, both
/// symmetric unimodal: symmetric unimodal, with a unique mode whenever
/// either summand has one.
pub fn lem1(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<(IntPolynomial, IntPolynomial)> = (0..count)
        .map(|_| {
            let r = rng.gen_range(2..=12);
            let strict = rng.gen_bool(0.5);
            let p = symmetric_unimodal(&mut rng, r, strict);
            let s = symmetric_unimodal(&mut rng, r - 2, !strict);
            (p, s.shift(1))
        })
        .collect();
    run("lem1", Some(seed), &instances, |(p, q)| {
        let sum = p + q;
        let inputs = format!("p = {p}; q = {q}");
        let (up, uq, us) = (unimodality(p), unimodality(q), unimodality(&sum));
        if sum.degree() != p.degree() || !is_symmetric(&sum) {
            lemma_failure(inputs, sum, "sum is not symmetric of the same degree")
        } else if !us.unimodal {
            lemma_failure(inputs, sum, "sum is not unimodal")
        } else if (up.unique_mode || uq.unique_mode) && !us.unique_mode {
            lemma_failure(inputs, sum, "unique mode not inherited")
        } else {
            None
        }
    })
}

/// `(1 + a x + x^2) P` with `a > 1` and `P` symmetric of degree `2n` with
/// unique mode `n`: symmetric unimodal with unique mode `n + 1`.
pub fn lem2(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<(i64, IntPolynomial)> = (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=8);
            (rng.gen_range(2..=12), symmetric_unimodal(&mut rng, 2 * n, true))
        })
        .collect();
    run("lem2", Some(seed), &instances, |(a, p)| {
        let q = &IntPolynomial::from_slice(&[1, *a, 1]) * p;
        let n = p.degree() / 2;
        let u = unimodality(&q);
        let inputs = format!("a = {a}; P = {p}");
        if !is_symmetric(&q) {
            lemma_failure(inputs, q, "product is not symmetric")
        } else if !u.unimodal {
            lemma_failure(inputs, q, "product is not unimodal")
        } else if u.modes != [n + 1] {
            let reason = format!("modes {:?}, expected [{}]", u.modes, n + 1);
            lemma_failure(inputs, q, &reason)
        } else {
            None
        }
    })
}

fn random_rational<R: Rng>(rng: &mut R, nonzero: bool) -> Rational {
    loop {
        let r = Rational::new(Integer::from(rng.gen_range(-50..=50)), Integer::from(rng.gen_range(1..=20)));
        if !nonzero || !r.is_zero() {
            return r;
        }
    }
}

/// `x` and `b0/(b2 x)` leave `x / (b0 + b1 x + b2 x^2)` invariant; the
/// perturbed `2 b0/(b2 x)` does not.
pub fn lem3(count: usize, seed: u64) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<[Rational; 3]> = (0..count)
        .map(|_| {
            [
                random_rational(&mut rng, true),
                random_rational(&mut rng, false),
                random_rational(&mut rng, true),
            ]
        })
        .collect();
    run("lem3", Some(seed), &instances, |[b0, b1, b2]| {
        let perturbed = Invariant::Candidate {
            numerator: RatPolynomial::constant(b0 * Rational::from_integer(Integer::from(2))),
            denominator: RatPolynomial::monomial(b2.clone(), 1),
        };
        let inputs = format!("b = ({b0}, {b1}, {b2})");
        let residual = |w: &Invariant<Integer>| invariant_residual(b0, b1, b2, w).expect("b2 != 0");
        let numerators = |r: &RatPolynomial| {
            let lcm = r.coeffs().iter().fold(Integer::one(), |l, c| num_integer::lcm(l, c.denom().clone()));
            IntPolynomial::new(r.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect())
        };
        for (w, name) in [(Invariant::Identity, "x"), (Invariant::Reciprocal, "b0/(b2 x)")] {
            let r = residual(&w);
            if !r.is_zero() {
                return lemma_failure(inputs, numerators(&r), &format!("{name} leaves a residual"));
            }
        }
        let r = residual(&perturbed);
        r.is_zero().then(|| lemma_failure(inputs, numerators(&r), "perturbed candidate has zero residual"))?
    })
}
