//! Exact pebbling invariants: solvability, pebbling numbers with extremal
//! witnesses, optimal configurations, and greedy play.

pub mod branch;
pub mod opt;
pub mod oracle;
pub mod search;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::config::{Configuration, MoveSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use branch::{find_unsolvable_of_weight, max_unsolvable, SearchOutcome};
pub use opt::optimal_pebbling;
pub use search::{
    is_solvable, is_solvable_all_targets, solve_with_moves, unsolvability_potential_test,
    PotentialVerdict, RootedSolver,
};

/// Value of an invariant together with the configuration that proves its
/// extremality and whether the search ran to completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: u64,
    /// For pebbling numbers: a maximum-weight unsolvable configuration (one
    /// less than the value). For optimal pebbling: a minimum-weight solving
    /// configuration. Lexicographically least among its kind.
    pub witness: Configuration,
    /// The root attaining the maximum, for rooted maxima over all roots.
    pub root: Option<usize>,
    pub exhaustive: bool,
}

/// t-fold pebbling number with the root fixed: one more than the largest
/// weight of a t-fold r-unsolvable configuration.
///
/// The budget bounds the number of solvability probes in each search phase
/// (value search, then lex-least witness search). If the witness phase runs
/// out the value is still exact and the witness from the value search is
/// returned instead of the lex-least one.
pub fn pebbling_number_rooted(g: &Graph, r: usize, t: u32, budget: u64) -> Result<InvariantResult> {
    let out = max_unsolvable(g, r, t, budget, None, None)?;
    let witness = match find_unsolvable_of_weight(g, r, t, out.max_weight, budget) {
        Ok(Some(w)) => w,
        _ => out.witness.clone(),
    };
    Ok(InvariantResult {
        value: out.max_weight + 1,
        witness,
        root: Some(r),
        exhaustive: out.exhaustive,
    })
}

/// t-fold pebbling number: the maximum of the rooted numbers over all roots,
/// with the first root attaining it recorded.
///
/// Every root gets the full budget. When some root exhausts its budget the
/// error interval combines what all roots established: the lower end is the
/// best proven lower bound, the upper end the worst upper bound.
pub fn pebbling_number(g: &Graph, t: u32, budget: u64) -> Result<InvariantResult> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let mut best: Option<InvariantResult> = None;
    let mut interval: Option<(u64, u64, Vec<u32>)> = None;
    let mut any_exhausted = false;
    for r in 0..g.order() {
        let (lower, upper, witness) = match pebbling_number_rooted(g, r, t, budget) {
            Ok(res) => {
                let trip = (res.value, res.value, res.witness.counts().to_vec());
                if best.as_ref().map_or(true, |b| res.value > b.value) {
                    best = Some(res);
                }
                trip
            }
            Err(Error::BudgetExceeded {
                lower,
                upper,
                witness,
            }) => {
                any_exhausted = true;
                (lower, upper, witness)
            }
            Err(e) => return Err(e),
        };
        let replace = interval
            .as_ref()
            .map_or(true, |(lo, up, _)| lower > *lo || (lower == *lo && upper > *up));
        if replace {
            let up = interval.as_ref().map_or(upper, |(_, u, _)| upper.max(*u));
            interval = Some((lower, up, witness));
        } else if let Some((_, up, _)) = interval.as_mut() {
            *up = (*up).max(upper);
        }
    }
    if any_exhausted {
        let (lower, upper, witness) = interval.expect("at least one root ran");
        return Err(Error::BudgetExceeded {
            lower,
            upper,
            witness,
        });
    }
    Ok(best.expect("at least one root ran"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    /// Pebbling number equals the order.
    Class0,
    /// Pebbling number exceeds the order by one.
    Class1,
    Neither,
}

pub fn classify(g: &Graph, budget: u64) -> Result<GraphClass> {
    let n = g.order() as u64;
    let res = pebbling_number(g, 1, budget)?;
    Ok(if res.value == n {
        GraphClass::Class0
    } else if res.value == n + 1 {
        GraphClass::Class1
    } else {
        GraphClass::Neither
    })
}

/// Searches for a solution using only moves that decrease the distance to
/// the root (strictly when `semigreedy` is false, weakly otherwise).
/// Sound but incomplete: None does not rule out an unrestricted solution.
pub fn greedy_solution(
    g: &Graph,
    f: &Configuration,
    r: usize,
    semigreedy: bool,
) -> Result<Option<MoveSequence>> {
    f.check_for(g)?;
    let dist = g.distances(r)?;

    fn rec(
        g: &Graph,
        dist: &[usize],
        r: usize,
        semigreedy: bool,
        counts: &mut Vec<u32>,
        failed: &mut HashSet<Vec<u32>>,
        trace: &mut Vec<(usize, usize)>,
    ) -> bool {
        if counts[r] >= 1 {
            return true;
        }
        if failed.contains(counts.as_slice()) {
            return false;
        }
        for u in 0..counts.len() {
            if counts[u] < 2 {
                continue;
            }
            for &v in g.neighbors(u) {
                let allowed = if semigreedy {
                    dist[v] <= dist[u]
                } else {
                    dist[v] < dist[u]
                };
                if !allowed {
                    continue;
                }
                counts[u] -= 2;
                counts[v] += 1;
                let hit = rec(g, dist, r, semigreedy, counts, failed, trace);
                counts[u] += 2;
                counts[v] -= 1;
                if hit {
                    trace.push((u, v));
                    return true;
                }
            }
        }
        failed.insert(counts.clone());
        false
    }

    let mut counts = f.counts().to_vec();
    let mut failed = HashSet::new();
    let mut trace = Vec::new();
    if rec(g, &dist, r, semigreedy, &mut counts, &mut failed, &mut trace) {
        trace.reverse();
        Ok(Some(MoveSequence(trace)))
    } else {
        Ok(None)
    }
}
