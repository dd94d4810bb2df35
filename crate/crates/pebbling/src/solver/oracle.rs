//! Reference solvability by exhaustive closure.
//!
//! Explores every configuration reachable from the start by single moves,
//! with no pruning or shortcuts. Exponentially expensive, but trivially
//! correct: the production engine is cross-validated against this on small
//! instances.

use std::collections::{HashSet, VecDeque};

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_STATE_LIMIT: usize = 4_000_000;

/// For every vertex, the largest pebble count it attains in any reachable
/// configuration. One closure answers t-fold solvability for every root and
/// every t at once: max_counts[r] >= t iff f is t-fold r-solvable.
pub fn reach_max_counts(g: &Graph, f: &Configuration, state_limit: usize) -> Result<Vec<u32>> {
    f.check_for(g)?;
    let start = f.counts().to_vec();
    let mut max_counts = start.clone();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for u in 0..cur.len() {
            if cur[u] < 2 {
                continue;
            }
            for &v in g.neighbors(u) {
                let mut next = cur.clone();
                next[u] -= 2;
                next[v] += 1;
                if max_counts[v] < next[v] {
                    max_counts[v] = next[v];
                }
                if !seen.contains(&next) {
                    if seen.len() >= state_limit {
                        return Err(Error::TooLarge(format!(
                            "closure exceeded {state_limit} configurations"
                        )));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(max_counts)
}

/// Exhaustive-closure answer to t-fold r-solvability.
pub fn is_solvable_oracle(g: &Graph, f: &Configuration, r: usize, t: u32) -> Result<bool> {
    g.check_vertex(r)?;
    Ok(reach_max_counts(g, f, DEFAULT_STATE_LIMIT)?[r] >= t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn closure_matches_hand_results() {
        let c6 = families::cycle(6).unwrap();
        let f = Configuration::new(vec![8, 0, 0, 0, 0, 0]);
        let maxc = reach_max_counts(&c6, &f, DEFAULT_STATE_LIMIT).unwrap();
        assert_eq!(maxc[0], 8);
        assert_eq!(maxc[3], 1);
        assert!(is_solvable_oracle(&c6, &f, 3, 1).unwrap());
        let g = Configuration::new(vec![7, 0, 0, 0, 0, 0]);
        assert!(!is_solvable_oracle(&c6, &g, 3, 1).unwrap());
    }

    #[test]
    fn state_limit_is_enforced() {
        let p2 = families::path(2).unwrap();
        let f = Configuration::new(vec![64, 0]);
        assert!(matches!(
            reach_max_counts(&p2, &f, 3),
            Err(Error::TooLarge(_))
        ));
    }
}
