use std::sync::atomic::{AtomicUsize, Ordering};

use indpoly_core::engine::{ExactEngine, PolyEngine};
use indpoly_core::graph::{canonical_form, enumerate_graphs};
use indpoly_core::{Graph, IntPolynomial};
use indpoly_harness::cache::PolyCache;
use rayon::prelude::*;

struct CountingEngine(AtomicUsize);

impl PolyEngine for CountingEngine {
    fn indpoly(&self, g: &Graph) -> IntPolynomial {
        self.0.fetch_add(1, Ordering::SeqCst);
        ExactEngine.indpoly(g)
    }
}

#[test]
fn put_then_get_and_restart() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.tsv");
    let c5 = Graph::cycle(5).unwrap();
    let key = canonical_form(&c5).unwrap();
    {
        let cache = PolyCache::open(&path).unwrap();
        assert!(cache.get(&key).is_none());
        cache.put(key, &IntPolynomial::from_slice(&[1, 5, 5])).unwrap();
        assert_eq!(cache.get(&key), Some(IntPolynomial::from_slice(&[1, 5, 5])));
    }
    let reopened = PolyCache::open(&path).unwrap();
    assert_eq!(reopened.get(&key), Some(IntPolynomial::from_slice(&[1, 5, 5])));
    assert_eq!(reopened.len(), 1);
}

#[test]
fn corrupt_records_are_ignored_and_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.tsv");
    let c5 = Graph::cycle(5).unwrap();
    let key = canonical_form(&c5).unwrap();
    std::fs::write(&path, format!("garbage\n{key}\t1,x,5\n5:zz\t1\n\u{0}\u{ff}\n")).unwrap();
    let cache = PolyCache::open(&path).unwrap();
    assert_eq!(cache.corrupt_lines(), 4);
    assert!(cache.is_empty());
    let engine = CountingEngine(AtomicUsize::new(0));
    assert_eq!(cache.indpoly(&engine, &c5).unwrap(), IntPolynomial::from_slice(&[1, 5, 5]));
    assert_eq!(cache.indpoly(&engine, &c5).unwrap(), IntPolynomial::from_slice(&[1, 5, 5]));
    assert_eq!(engine.0.load(Ordering::SeqCst), 1);
    let reopened = PolyCache::open(&path).unwrap();
    assert_eq!(reopened.get(&key), Some(IntPolynomial::from_slice(&[1, 5, 5])));
}

#[test]
fn isomorphic_graphs_share_an_entry() {
    let dir = tempfile::tempdir().unwrap();
    let cache = PolyCache::open(dir.path().join("c.tsv")).unwrap();
    let engine = CountingEngine(AtomicUsize::new(0));
    let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
    assert_eq!(cache.indpoly(&engine, &a).unwrap(), cache.indpoly(&engine, &b).unwrap());
    assert_eq!(engine.0.load(Ordering::SeqCst), 1);
}

#[test]
fn concurrent_writers_leave_a_consistent_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.tsv");
    let graphs = enumerate_graphs(6).unwrap();
    {
        let cache = PolyCache::open(&path).unwrap();
        graphs.par_iter().for_each(|g| {
            cache.indpoly(&ExactEngine, g).unwrap();
        });
        assert_eq!(cache.len(), graphs.len());
    }
    let reopened = PolyCache::open(&path).unwrap();
    assert_eq!(reopened.corrupt_lines(), 0);
    for g in &graphs {
        assert_eq!(reopened.get(&canonical_form(g).unwrap()), Some(ExactEngine.indpoly(g)));
    }
}

#[test]
fn graphs_beyond_the_canonical_guard_bypass_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = PolyCache::open(dir.path().join("c.tsv")).unwrap();
    let p = cache.indpoly(&ExactEngine, &Graph::path(20)).unwrap();
    assert_eq!(p, ExactEngine.indpoly(&Graph::path(20)));
    assert!(cache.is_empty());
}
