//! Brute-force perfectness test: no induced odd cycle of length at least 5
//! in the graph or in its complement.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`is_perfect`] (subset scan is `2^n`).
pub const MAX_PERFECT_ORDER: usize = 14;

pub fn is_perfect(g: &Graph) -> Result<bool> {
    if g.order() > MAX_PERFECT_ORDER {
        return Err(Error::TooLarge {
            what: "perfectness test order",
            limit: MAX_PERFECT_ORDER,
            actual: g.order(),
        });
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// True if some vertex subset of odd size `>= 5` induces a chordless cycle.
pub fn has_odd_hole(g: &Graph) -> bool {
    let n = g.order();
    assert!(n < 32, "odd hole scan is limited to fewer than 32 vertices");
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, w| acc | 1 << w))
        .collect();
    (0u32..1 << n)
        .filter(|s| s.count_ones() >= 5 && s.count_ones() % 2 == 1)
        .any(|s| induces_cycle(&rows, s))
}

// Connected and 2-regular on `s` means a single chordless cycle.
fn induces_cycle(rows: &[u32], s: u32) -> bool {
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if (rows[v] & s).count_ones() != 2 {
            return false;
        }
    }
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & s & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == s
}
