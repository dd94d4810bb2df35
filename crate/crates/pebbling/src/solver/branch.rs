//! Branch-and-bound search for extremal unsolvable configurations.
//!
//! Vertices are assigned in order of decreasing root distance. Every node of
//! the search tree keeps the partial configuration unsolvable, so the best
//! weight seen anywhere is the running maximum. Solvability is monotone in
//! each count, which gives a per-vertex threshold (found by binary search)
//! and lets whole subtrees be cut off by weight bounds.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::search::RootedSolver;

/// Result of an exhaustive or truncated search.
pub struct SearchOutcome {
    /// Largest weight of an unsolvable configuration found.
    pub max_weight: u64,
    /// A configuration attaining it.
    pub witness: Configuration,
    /// True when the search space was exhausted (the value is exact).
    pub exhaustive: bool,
}

struct Budget {
    left: u64,
}

impl Budget {
    fn new(limit: u64) -> Budget {
        Budget { left: limit }
    }

    /// Charges one unit; false when the budget is spent.
    fn charge(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

struct MaxSearch<'g> {
    solver: RootedSolver<'g>,
    /// Vertex ids ordered far-to-near (root last).
    order: Vec<usize>,
    /// Per-position count cap: t·2^dist − 1 away from the root, t − 1 on it.
    caps: Vec<u32>,
    /// caps summed over positions i.. (saturating).
    suffix_caps: Vec<u64>,
    /// Σ (2^dist − 1) over positions i.. .
    suffix_slack: Vec<u64>,
    /// Max dist among positions i.. .
    suffix_dmax: Vec<u32>,
    budget: Budget,
    counts: Vec<u32>,
    weight: u64,
    /// Σ floor(count/2^dist) of the assigned prefix; stays below t.
    prefix_ship: u64,
    best: u64,
    best_witness: Vec<u32>,
    weight_limit: Option<u64>,
    stop_at: Option<u64>,
    exhausted: bool,
    out_of_budget: bool,
}

impl<'g> MaxSearch<'g> {
    fn new(g: &'g Graph, r: usize, t: u32, budget: u64) -> Result<MaxSearch<'g>> {
        let solver = RootedSolver::new(g, r, t)?;
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(solver.distance(v)), v));
        let caps: Vec<u32> = order
            .iter()
            .map(|&v| {
                let d = solver.distance(v) as u32;
                if v == r {
                    t - 1
                } else {
                    // beyond t·2^d − 1 the vertex alone solves the target
                    ((t as u64) << d.min(32)).saturating_sub(1).min(u32::MAX as u64) as u32
                }
            })
            .collect();
        let mut suffix_caps = vec![0u64; n + 1];
        let mut suffix_slack = vec![0u64; n + 1];
        let mut suffix_dmax = vec![0u32; n + 1];
        for i in (0..n).rev() {
            let d = solver.distance(order[i]) as u32;
            suffix_caps[i] = suffix_caps[i + 1].saturating_add(caps[i] as u64);
            suffix_slack[i] = suffix_slack[i + 1].saturating_add((1u64 << d.min(62)) - 1);
            suffix_dmax[i] = suffix_dmax[i + 1].max(d);
        }
        Ok(MaxSearch {
            solver,
            order,
            caps,
            suffix_caps,
            suffix_slack,
            suffix_dmax,
            budget: Budget::new(budget),
            counts: vec![0; n],
            weight: 0,
            prefix_ship: 0,
            best: 0,
            best_witness: vec![0; n], // the zero configuration is always unsolvable
            weight_limit: None,
            stop_at: None,
            exhausted: true,
            out_of_budget: false,
        })
    }

    /// Upper bound on the weight the unassigned suffix can add while keeping
    /// the whole configuration unsolvable: the total shipping sum must stay
    /// below t, and each count is within 2^dist − 1 of a shipping multiple.
    fn suffix_bound(&self, idx: usize) -> u64 {
        let t = self.solver.t() as u64;
        let ship_room = t - 1 - self.prefix_ship;
        let by_ship = ship_room
            .saturating_mul(1u64 << self.suffix_dmax[idx].min(62))
            .saturating_add(self.suffix_slack[idx]);
        let by_caps = self.suffix_caps[idx];
        let mut bound = by_ship.min(by_caps);
        if let Some(limit) = self.weight_limit {
            bound = bound.min(limit.saturating_sub(self.weight));
        }
        bound
    }

    fn record(&mut self) {
        if self.weight > self.best {
            self.best = self.weight;
            self.best_witness.copy_from_slice(&self.counts);
        }
    }

    /// True means keep searching; false aborts (budget or stop_at).
    fn descend(&mut self, idx: usize) -> bool {
        self.record();
        if let Some(stop) = self.stop_at {
            if self.best >= stop {
                self.exhausted = false;
                return false;
            }
        }
        if idx == self.order.len() {
            return true;
        }
        if self.weight + self.suffix_bound(idx) <= self.best {
            return true;
        }
        let v = self.order[idx];
        let d = self.solver.distance(v) as u32;
        let cap = {
            let mut c = self.caps[idx] as u64;
            if let Some(limit) = self.weight_limit {
                c = c.min(limit.saturating_sub(self.weight));
            }
            c as u32
        };
        // binary search the largest x with prefix + x·v unsolvable
        let top = match self.threshold(v, cap) {
            Ok(th) => th,
            Err(()) => {
                self.exhausted = false;
                self.out_of_budget = true;
                return false;
            }
        };
        let mut x = top;
        loop {
            let ship = (x as u64) >> d.min(63);
            self.counts[v] = x;
            self.weight += x as u64;
            self.prefix_ship += ship;
            let keep = self.descend(idx + 1);
            self.counts[v] = 0;
            self.weight -= x as u64;
            self.prefix_ship -= ship;
            if !keep {
                return false;
            }
            if x == 0 {
                break;
            }
            x -= 1;
        }
        true
    }

    /// Largest x in 0..=cap keeping the prefix plus x pebbles on v
    /// unsolvable. Always defined: the prefix itself (x = 0) is unsolvable.
    /// Err(()) when the budget runs out.
    fn threshold(&mut self, v: usize, cap: u32) -> std::result::Result<u32, ()> {
        let probe = |s: &mut Self, x: u32| -> std::result::Result<bool, ()> {
            if !s.budget.charge() {
                return Err(());
            }
            s.counts[v] = x;
            let solvable = s
                .solver
                .is_solvable_counts(&s.counts)
                .expect("probe configurations stay within search limits");
            s.counts[v] = 0;
            Ok(solvable)
        };
        if !probe(self, cap)? {
            return Ok(cap);
        }
        // invariant: lo unsolvable, hi solvable
        let (mut lo, mut hi) = (0u32, cap);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if probe(self, mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(lo)
    }
}

/// Maximum weight of a t-fold r-unsolvable configuration, with witness.
///
/// `upper_hint` is an admissible exclusive upper bound on the weight (for
/// example from a weight-function certificate): configurations of weight
/// ≥ upper_hint are known solvable, so the search never explores them. The
/// search stays exhaustive. `stop_at` truncates the search as soon as an
/// unsolvable configuration of at least that weight is found (the outcome is
/// then marked non-exhaustive).
pub fn max_unsolvable(
    g: &Graph,
    r: usize,
    t: u32,
    budget: u64,
    upper_hint: Option<u64>,
    stop_at: Option<u64>,
) -> Result<SearchOutcome> {
    let mut search = MaxSearch::new(g, r, t, budget)?;
    search.weight_limit = upper_hint.map(|h| h.saturating_sub(1));
    search.stop_at = stop_at;
    search.descend(0);
    if search.out_of_budget {
        let upper = search
            .weight_limit
            .unwrap_or(search.suffix_caps[0])
            .saturating_add(1);
        return Err(Error::BudgetExceeded {
            lower: search.best + 1,
            upper,
            witness: search.best_witness,
        });
    }
    Ok(SearchOutcome {
        max_weight: search.best,
        witness: Configuration::new(search.best_witness.clone()),
        exhaustive: search.exhausted,
    })
}

/// Lexicographically least t-fold r-unsolvable configuration of weight
/// exactly `w`, or None if no such configuration exists.
///
/// Assigns vertices in id order with ascending counts, so the first complete
/// configuration found is the lex-least one. Partial configurations that are
/// already solvable are cut off (any extension stays solvable), as are
/// partials whose remaining capacity cannot reach w.
pub fn find_unsolvable_of_weight(
    g: &Graph,
    r: usize,
    t: u32,
    w: u64,
    budget: u64,
) -> Result<Option<Configuration>> {
    let mut solver = RootedSolver::new(g, r, t)?;
    let n = g.order();
    let caps: Vec<u64> = (0..n)
        .map(|v| {
            if v == r {
                (t - 1) as u64
            } else {
                ((t as u64) << (solver.distance(v) as u32).min(32)).saturating_sub(1)
            }
        })
        .collect();
    let mut suffix: Vec<u64> = vec![0; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1].saturating_add(caps[v]);
    }
    if w > suffix[0] {
        return Ok(None); // heavier than any unsolvable configuration can be
    }
    let mut budget = Budget::new(budget);
    let mut counts = vec![0u32; n];

    fn rec(
        solver: &mut RootedSolver<'_>,
        caps: &[u64],
        suffix: &[u64],
        budget: &mut Budget,
        counts: &mut Vec<u32>,
        v: usize,
        need: u64,
    ) -> std::result::Result<bool, ()> {
        if v == counts.len() {
            return Ok(need == 0);
        }
        let lo = need.saturating_sub(suffix[v + 1]);
        let hi = caps[v].min(need);
        if lo > hi {
            return Ok(false);
        }
        for x in lo..=hi {
            counts[v] = x as u32;
            if !budget.charge() {
                counts[v] = 0;
                return Err(());
            }
            let solvable = solver
                .is_solvable_counts(counts)
                .expect("probe configurations stay within search limits");
            if solvable {
                // counts are monotone: larger x stays solvable
                counts[v] = 0;
                return Ok(false);
            }
            if rec(solver, caps, suffix, budget, counts, v + 1, need - x)? {
                return Ok(true);
            }
            counts[v] = 0;
        }
        Ok(false)
    }

    match rec(
        &mut solver,
        &caps,
        &suffix,
        &mut budget,
        &mut counts,
        0,
        w,
    ) {
        Ok(true) => Ok(Some(Configuration::new(counts))),
        Ok(false) => Ok(None),
        // interval in terms of the rooted pebbling number: nothing was
        // learned beyond the trivial bounds
        Err(()) => Err(Error::BudgetExceeded {
            lower: 1,
            upper: suffix[0].saturating_add(1),
            witness: vec![0; n],
        }),
    }
}
