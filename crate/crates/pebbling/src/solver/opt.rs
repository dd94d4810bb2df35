//! Minimum-weight configurations that solve every target.
//!
//! Enumerates configurations by increasing weight, lexicographically within a
//! weight, so the first hit is the lex-least minimum-weight solution. The
//! all-ones configuration solves every target, which bounds the answer by the
//! order and guarantees termination.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::oracle;
use crate::solver::InvariantResult;

const CLOSURE_STATE_LIMIT: usize = 2_000_000;

struct OptSearch<'g> {
    g: &'g Graph,
    /// dist[r][v]
    dist: Vec<Vec<usize>>,
    ecc: Vec<usize>,
    cap: u32,
    budget: u64,
}

impl<'g> OptSearch<'g> {
    /// Exact all-targets check, cheapest test first.
    fn solves_all_targets(&self, counts: &[u32]) -> Result<bool> {
        let n = self.g.order();
        let mut all_ship = true;
        for r in 0..n {
            let dr = &self.dist[r];
            let mut ship = 0u64;
            let mut pot = 0u128;
            for v in 0..n {
                ship += (counts[v] as u64) >> dr[v].min(63);
                pot += (counts[v] as u128) << (self.ecc[r] - dr[v]);
            }
            if pot < 1u128 << self.ecc[r] {
                return Ok(false); // r is out of reach no matter the play
            }
            if ship == 0 {
                all_ship = false;
            }
        }
        if all_ship {
            return Ok(true);
        }
        let maxc = oracle::reach_max_counts(
            self.g,
            &Configuration::new(counts.to_vec()),
            CLOSURE_STATE_LIMIT,
        )?;
        Ok(maxc.iter().all(|&c| c >= 1))
    }

    /// Lexicographic enumeration of weight-`need` suffixes from vertex v.
    /// Ok(true) plus a filled `counts` on the first solving configuration.
    fn enumerate(&mut self, counts: &mut Vec<u32>, v: usize, need: u32) -> Result<bool> {
        let n = self.g.order();
        if v == n {
            if need > 0 {
                return Ok(false);
            }
            if self.budget == 0 {
                return Err(Error::BudgetExceeded {
                    lower: 0,
                    upper: 0,
                    witness: Vec::new(), // rewrapped by the caller
                });
            }
            self.budget -= 1;
            return self.solves_all_targets(counts);
        }
        let tail_cap = (self.cap as u64) * ((n - 1 - v) as u64);
        let lo = (need as u64).saturating_sub(tail_cap) as u32;
        let hi = self.cap.min(need);
        if lo > hi {
            return Ok(false);
        }
        for c in lo..=hi {
            counts[v] = c;
            if self.enumerate(counts, v + 1, need - c)? {
                return Ok(true);
            }
            counts[v] = 0;
        }
        Ok(false)
    }
}

/// Least total weight of a configuration from which every vertex is
/// reachable as a target, with per-vertex counts bounded by `cap` when
/// given. The witness is the lexicographically least optimal configuration.
pub fn optimal_pebbling(g: &Graph, cap: Option<u32>, budget: u64) -> Result<InvariantResult> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    if cap == Some(0) {
        return Err(Error::InvalidParameter(
            "per-vertex cap must be at least 1".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let dist = g.distance_matrix()?;
    let ecc: Vec<usize> = dist
        .iter()
        .map(|row| *row.iter().max().expect("nonempty row"))
        .collect();
    let mut search = OptSearch {
        g,
        dist,
        ecc,
        cap: cap.unwrap_or(u32::MAX).min(n as u32),
        budget,
    };
    for w in 1..=n as u32 {
        let mut counts = vec![0u32; n];
        match search.enumerate(&mut counts, 0, w) {
            Ok(true) => {
                return Ok(InvariantResult {
                    value: w as u64,
                    witness: Configuration::new(counts),
                    root: None,
                    exhaustive: true,
                });
            }
            Ok(false) => continue,
            Err(Error::BudgetExceeded { .. }) => {
                // weights below w are exhausted; all-ones is always enough
                return Err(Error::BudgetExceeded {
                    lower: w as u64,
                    upper: n as u64,
                    witness: vec![1; n],
                });
            }
            Err(e) => return Err(e),
        }
    }
    // the all-ones configuration always solves every target
    unreachable!("weight {n} must have succeeded");
}
