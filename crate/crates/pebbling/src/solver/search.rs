//! Exact t-fold solvability decisions.
//!
//! Layered engine: cheap sound tests first (enough pebbles on the root, a
//! per-vertex shipping lower bound, the weight-potential upper bound), an
//! exact linear-time routine on trees, and finally memoized depth-first
//! search over single moves. Moves strictly decrease total weight, so the
//! search space is finite and acyclic.

use std::collections::HashMap;

use crate::config::{Configuration, MoveSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;

const MEMO_CAP: usize = 1 << 21;
const DFS_MAX_WEIGHT: u64 = 1 << 16;
const DFS_MAX_ORDER: usize = 64;
const DOMINANCE_CAP: usize = 256;

/// Hashable configuration key. Small configurations pack into a u128 (eight
/// bits per vertex); anything larger falls back to the full count vector.
#[derive(PartialEq, Eq, Hash)]
enum Key {
    Packed(u128),
    Wide(Box<[u32]>),
}

fn make_key(counts: &[u32]) -> Key {
    if counts.len() <= 16 && counts.iter().all(|&c| c <= 255) {
        let mut k = 0u128;
        for (i, &c) in counts.iter().enumerate() {
            k |= (c as u128) << (8 * i);
        }
        Key::Packed(k)
    } else {
        Key::Wide(counts.into())
    }
}

/// Reusable solvability engine for one (graph, root, t) triple. Reuse across
/// many configurations shares the memo table and dominance caches, which is
/// what makes the branch-and-bound searches affordable.
pub struct RootedSolver<'g> {
    g: &'g Graph,
    r: usize,
    t: u32,
    dist: Vec<usize>,
    ecc: usize,
    /// Minimum-id neighbor strictly closer to the root; parent of r is r.
    parent: Vec<usize>,
    /// Neighbors ordered root-ward first: tried first in the search.
    move_order: Vec<Vec<usize>>,
    /// Vertex ids by decreasing root distance: a postorder when g is a tree.
    far_to_near: Vec<usize>,
    is_tree: bool,
    memo: HashMap<Key, bool>,
    /// Antichain of pointwise-maximal configurations known unsolvable.
    known_unsolvable: Vec<Vec<u32>>,
    /// Antichain of pointwise-minimal configurations known solvable.
    known_solvable: Vec<Vec<u32>>,
}

impl<'g> RootedSolver<'g> {
    pub fn new(g: &'g Graph, r: usize, t: u32) -> Result<RootedSolver<'g>> {
        if t < 1 {
            return Err(Error::InvalidParameter("t must be at least 1".into()));
        }
        let dist = g.distances(r)?;
        let ecc = *dist.iter().max().expect("nonempty graph");
        let parent: Vec<usize> = (0..g.order())
            .map(|v| {
                if v == r {
                    r
                } else {
                    *g.neighbors(v)
                        .iter()
                        .find(|&&w| dist[w] + 1 == dist[v])
                        .expect("every vertex has a root-ward neighbor")
                }
            })
            .collect();
        let move_order: Vec<Vec<usize>> = (0..g.order())
            .map(|v| {
                let mut ns = g.neighbors(v).to_vec();
                ns.sort_by_key(|&w| (dist[w], w));
                ns
            })
            .collect();
        let mut far_to_near: Vec<usize> = (0..g.order()).collect();
        far_to_near.sort_by_key(|&v| (std::cmp::Reverse(dist[v]), v));
        Ok(RootedSolver {
            is_tree: g.is_tree(),
            g,
            r,
            t,
            dist,
            ecc,
            parent,
            move_order,
            far_to_near,
            memo: HashMap::new(),
            known_unsolvable: Vec::new(),
            known_solvable: Vec::new(),
        })
    }

    pub fn root(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn distance(&self, v: usize) -> usize {
        self.dist[v]
    }

    pub fn eccentricity(&self) -> usize {
        self.ecc
    }

    /// Σ floor(f(v) / 2^dist(v)): pebbles each vertex can ship to the root
    /// on its own. At least t means solvable.
    fn shipping_sum(&self, counts: &[u32]) -> u64 {
        counts
            .iter()
            .zip(&self.dist)
            .map(|(&c, &d)| (c as u64) >> d.min(63))
            .sum()
    }

    /// Σ f(v)·2^(ecc − dist(v)), the weight potential scaled to integers.
    /// Below t·2^ecc means unsolvable: no move ever increases it.
    fn potential(&self, counts: &[u32]) -> u128 {
        counts
            .iter()
            .zip(&self.dist)
            .map(|(&c, &d)| (c as u128) << (self.ecc - d))
            .sum()
    }

    fn potential_target(&self) -> u128 {
        (self.t as u128) << self.ecc
    }

    /// Exact answer on trees: each vertex forwards floor(total/2) root-ward,
    /// farthest first.
    fn tree_solvable(&self, counts: &[u32]) -> bool {
        let mut arrived = vec![0u64; counts.len()];
        for &v in &self.far_to_near {
            if v == self.r {
                continue;
            }
            let total = counts[v] as u64 + arrived[v];
            arrived[self.parent[v]] += total / 2;
        }
        counts[self.r] as u64 + arrived[self.r] >= self.t as u64
    }

    /// Cheap sound verdicts; None when only search can decide.
    fn fast_verdict(&self, counts: &[u32]) -> Option<bool> {
        if counts[self.r] as u64 >= self.t as u64 {
            return Some(true);
        }
        if self.shipping_sum(counts) >= self.t as u64 {
            return Some(true);
        }
        if self.potential(counts) < self.potential_target() {
            return Some(false);
        }
        if self.is_tree {
            return Some(self.tree_solvable(counts));
        }
        None
    }

    fn dominated_verdict(&self, counts: &[u32]) -> Option<bool> {
        if self
            .known_unsolvable
            .iter()
            .any(|u| counts.iter().zip(u).all(|(a, b)| a <= b))
        {
            return Some(false);
        }
        if self
            .known_solvable
            .iter()
            .any(|s| s.iter().zip(counts).all(|(a, b)| a <= b))
        {
            return Some(true);
        }
        None
    }

    fn remember_verdict(&mut self, counts: &[u32], solvable: bool) {
        let cache = if solvable {
            &mut self.known_solvable
        } else {
            &mut self.known_unsolvable
        };
        // keep each cache an antichain: solvable entries minimal, unsolvable
        // entries maximal
        if solvable {
            if cache.iter().any(|s| s.iter().zip(counts).all(|(a, b)| a <= b)) {
                return;
            }
            cache.retain(|s| !counts.iter().zip(s.iter()).all(|(a, b)| a <= b));
        } else {
            if cache.iter().any(|u| counts.iter().zip(u).all(|(a, b)| a <= b)) {
                return;
            }
            cache.retain(|u| !u.iter().zip(counts.iter()).all(|(a, b)| a <= b));
        }
        if cache.len() < DOMINANCE_CAP {
            cache.push(counts.to_vec());
        }
    }

    fn check_input(&self, counts: &[u32]) -> Result<()> {
        if counts.len() != self.g.order() {
            return Err(Error::InvalidParameter(format!(
                "configuration covers {} vertices, graph has {}",
                counts.len(),
                self.g.order()
            )));
        }
        Ok(())
    }

    pub fn is_solvable(&mut self, f: &Configuration) -> Result<bool> {
        self.is_solvable_counts(f.counts())
    }

    pub fn is_solvable_counts(&mut self, counts: &[u32]) -> Result<bool> {
        self.check_input(counts)?;
        if let Some(v) = self.fast_verdict(counts) {
            return Ok(v);
        }
        if let Some(v) = self.dominated_verdict(counts) {
            return Ok(v);
        }
        self.check_search_scale(counts)?;
        let mut work = counts.to_vec();
        let verdict = self.dfs(&mut work);
        self.remember_verdict(counts, verdict);
        Ok(verdict)
    }

    fn check_search_scale(&self, counts: &[u32]) -> Result<()> {
        let weight: u64 = counts.iter().map(|&c| c as u64).sum();
        if weight > DFS_MAX_WEIGHT || self.g.order() > DFS_MAX_ORDER {
            return Err(Error::TooLarge(format!(
                "solvability search on order {} with {} pebbles",
                self.g.order(),
                weight
            )));
        }
        Ok(())
    }

    fn dfs(&mut self, counts: &mut Vec<u32>) -> bool {
        if let Some(v) = self.fast_verdict(counts) {
            return v;
        }
        let key = make_key(counts);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let verdict = self.expand(counts, false, &mut Vec::new());
        if self.memo.len() < MEMO_CAP {
            self.memo.insert(key, verdict);
        }
        verdict
    }

    /// Tries every move; `trace` collects the successful move stack when
    /// `want_moves` is set.
    fn expand(&mut self, counts: &mut Vec<u32>, want_moves: bool, trace: &mut Vec<(usize, usize)>) -> bool {
        for u in 0..counts.len() {
            // moving pebbles off the root never helps; see the search notes
            if counts[u] < 2 || u == self.r {
                continue;
            }
            for i in 0..self.move_order[u].len() {
                let v = self.move_order[u][i];
                counts[u] -= 2;
                counts[v] += 1;
                let hit = if want_moves {
                    self.dfs_moves(counts, trace)
                } else {
                    self.dfs(counts)
                };
                counts[u] += 2;
                counts[v] -= 1;
                if hit {
                    if want_moves {
                        trace.push((u, v));
                    }
                    return true;
                }
            }
        }
        false
    }

    /// Like `dfs`, but reconstructs moves. Only negative memo entries are
    /// trusted here: a cached "solvable" has no move stack attached.
    fn dfs_moves(&mut self, counts: &mut Vec<u32>, trace: &mut Vec<(usize, usize)>) -> bool {
        if counts[self.r] as u64 >= self.t as u64 {
            return true;
        }
        if self.shipping_sum(counts) >= self.t as u64 {
            let mut ship = self.shipping_moves(counts);
            ship.reverse(); // trace is unwound in reverse below
            trace.extend(ship);
            return true;
        }
        if self.potential(counts) < self.potential_target() {
            return false;
        }
        if self.is_tree {
            if self.tree_solvable(counts) {
                let mut ship = self.tree_moves(counts);
                ship.reverse();
                trace.extend(ship);
                return true;
            }
            return false;
        }
        let key = make_key(counts);
        if let Some(&false) = self.memo.get(&key) {
            return false;
        }
        let verdict = self.expand(counts, true, trace);
        if !verdict && self.memo.len() < MEMO_CAP {
            self.memo.insert(key, false);
        }
        verdict
    }

    /// Moves realizing the shipping bound: each vertex halves its pile along
    /// a shortest path, nearest vertices first, until t pebbles have landed.
    fn shipping_moves(&self, counts: &[u32]) -> Vec<(usize, usize)> {
        let mut moves = Vec::new();
        let mut landed = counts[self.r] as u64;
        let mut by_dist: Vec<usize> = (0..counts.len()).filter(|&v| v != self.r).collect();
        by_dist.sort_by_key(|&v| (self.dist[v], v));
        for v in by_dist {
            if landed >= self.t as u64 {
                break;
            }
            let mut cur = v;
            let mut amt = counts[v] as u64;
            while cur != self.r && amt >= 2 {
                let next = self.parent[cur];
                let send = amt / 2;
                for _ in 0..send {
                    moves.push((cur, next));
                }
                amt = send;
                cur = next;
            }
            if cur == self.r {
                landed += amt;
            }
        }
        moves
    }

    /// Moves realizing the tree verdict: forward floor(total/2) root-ward in
    /// postorder.
    fn tree_moves(&self, counts: &[u32]) -> Vec<(usize, usize)> {
        let mut moves = Vec::new();
        let mut arrived = vec![0u64; counts.len()];
        for &v in &self.far_to_near {
            if v == self.r {
                continue;
            }
            let total = counts[v] as u64 + arrived[v];
            let send = total / 2;
            for _ in 0..send {
                moves.push((v, self.parent[v]));
            }
            arrived[self.parent[v]] += send;
        }
        moves
    }

    pub fn solve_with_moves(&mut self, f: &Configuration) -> Result<Option<MoveSequence>> {
        self.check_input(f.counts())?;
        // the move-free fast outs first
        if f.get(self.r) as u64 >= self.t as u64 {
            return Ok(Some(MoveSequence::default()));
        }
        if self.potential(f.counts()) < self.potential_target() {
            return Ok(None);
        }
        if self.shipping_sum(f.counts()) < self.t as u64 && !self.is_tree {
            self.check_search_scale(f.counts())?;
        }
        let mut work = f.counts().to_vec();
        let mut trace = Vec::new();
        if self.dfs_moves(&mut work, &mut trace) {
            trace.reverse();
            Ok(Some(MoveSequence(trace)))
        } else {
            Ok(None)
        }
    }
}

/// True iff some move sequence puts at least t pebbles on r.
pub fn is_solvable(g: &Graph, f: &Configuration, r: usize, t: u32) -> Result<bool> {
    f.check_for(g)?;
    RootedSolver::new(g, r, t)?.is_solvable(f)
}

/// Solvability decision plus a replayable witness sequence when solvable.
pub fn solve_with_moves(
    g: &Graph,
    f: &Configuration,
    r: usize,
    t: u32,
) -> Result<Option<MoveSequence>> {
    f.check_for(g)?;
    RootedSolver::new(g, r, t)?.solve_with_moves(f)
}

/// True iff f is r-solvable for every root r.
pub fn is_solvable_all_targets(g: &Graph, f: &Configuration) -> Result<bool> {
    f.check_for(g)?;
    for r in 0..g.order() {
        if !is_solvable(g, f, r, 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialVerdict {
    ProvenUnsolvable,
    Inconclusive,
}

/// Sound-but-incomplete unsolvability test: Σ f(v)·2^(−dist(v,r)) < 1 (for
/// t-fold targets, < t) proves unsolvability because no move increases the
/// sum. Computed in scaled integers, which is exact.
pub fn unsolvability_potential_test(
    g: &Graph,
    f: &Configuration,
    r: usize,
    t: u32,
) -> Result<PotentialVerdict> {
    f.check_for(g)?;
    let solver = RootedSolver::new(g, r, t)?;
    if solver.potential(f.counts()) < solver.potential_target() {
        Ok(PotentialVerdict::ProvenUnsolvable)
    } else {
        Ok(PotentialVerdict::Inconclusive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cfg(counts: &[u32]) -> Configuration {
        Configuration::new(counts.to_vec())
    }

    #[test]
    fn path_power_of_two() {
        let p3 = families::path(3).unwrap();
        assert!(is_solvable(&p3, &cfg(&[4, 0, 0]), 2, 1).unwrap());
        assert!(!is_solvable(&p3, &cfg(&[3, 0, 0]), 2, 1).unwrap());
    }

    #[test]
    fn six_cycle_far_target() {
        let c6 = families::cycle(6).unwrap();
        assert!(is_solvable(&c6, &cfg(&[8, 0, 0, 0, 0, 0]), 3, 1).unwrap());
        assert!(!is_solvable(&c6, &cfg(&[7, 0, 0, 0, 0, 0]), 3, 1).unwrap());
    }

    #[test]
    fn no_vertex_can_move() {
        let k3 = families::complete(3).unwrap();
        assert!(!is_solvable(&k3, &cfg(&[1, 1, 0]), 2, 1).unwrap());
        assert!(is_solvable(&k3, &cfg(&[1, 1, 0]), 0, 1).unwrap());
    }

    #[test]
    fn t_fold_counts() {
        let p2 = families::path(2).unwrap();
        assert!(is_solvable(&p2, &cfg(&[0, 5]), 1, 5).unwrap());
        assert!(is_solvable(&p2, &cfg(&[4, 3]), 1, 5).unwrap());
        assert!(!is_solvable(&p2, &cfg(&[4, 2]), 1, 5).unwrap());
    }

    #[test]
    fn odd_cycle_needs_search() {
        // configurations where no single vertex ships a pebble on its own and
        // the potential test is inconclusive, so only the search can decide
        let c5 = families::cycle(5).unwrap();
        // 3 at v0 feeds v1, which then reaches the root at v2
        assert!(is_solvable(&c5, &cfg(&[3, 1, 0, 0, 0]), 2, 1).unwrap());
        // same weight spread the wrong way is stuck
        assert!(!is_solvable(&c5, &cfg(&[3, 0, 0, 0, 1]), 2, 1).unwrap());
    }

    #[test]
    fn all_targets_examples() {
        let f23 = families::friendship(2, 3).unwrap();
        assert!(is_solvable_all_targets(&f23, &cfg(&[2, 0, 0, 0, 0])).unwrap());
        let c4 = families::cycle(4).unwrap();
        assert!(is_solvable_all_targets(&c4, &cfg(&[2, 0, 1, 0])).unwrap());
        assert!(!is_solvable_all_targets(&c4, &cfg(&[0, 0, 0, 0])).unwrap());
    }

    #[test]
    fn potential_test_examples() {
        let p3 = families::path(3).unwrap();
        assert_eq!(
            unsolvability_potential_test(&p3, &cfg(&[3, 0, 0]), 2, 1).unwrap(),
            PotentialVerdict::ProvenUnsolvable
        );
        assert_eq!(
            unsolvability_potential_test(&p3, &cfg(&[4, 0, 0]), 2, 1).unwrap(),
            PotentialVerdict::Inconclusive
        );
        let c5 = families::cycle(5).unwrap();
        assert_eq!(
            unsolvability_potential_test(&c5, &cfg(&[3, 0, 0, 0, 0]), 2, 1).unwrap(),
            PotentialVerdict::ProvenUnsolvable
        );
    }

    #[test]
    fn witness_moves_replay() {
        let cases: Vec<(crate::graph::Graph, Configuration, usize, u32)> = vec![
            (families::path(4).unwrap(), cfg(&[8, 0, 0, 0]), 3, 1),
            (families::cycle(5).unwrap(), cfg(&[0, 3, 0, 0, 2]), 2, 1),
            (families::cycle(6).unwrap(), cfg(&[9, 1, 0, 0, 0, 0]), 3, 1),
            (families::star(3).unwrap(), cfg(&[0, 2, 2, 0]), 3, 1),
            (families::friendship(2, 4).unwrap(), cfg(&[0, 0, 4, 0, 0, 4, 0]), 6, 2),
        ];
        for (g, f, r, t) in cases {
            let seq = solve_with_moves(&g, &f, r, t).unwrap().unwrap();
            let end = seq.replay(&g, &f).unwrap();
            assert!(end.get(r) >= t, "replay left {} on {r}", end.get(r));
        }
    }

    #[test]
    fn unsolvable_has_no_moves() {
        let p4 = families::path(4).unwrap();
        assert!(solve_with_moves(&p4, &cfg(&[7, 0, 0, 0]), 3, 1)
            .unwrap()
            .is_none());
    }

    #[test]
    fn solver_reuse_is_consistent() {
        let g = families::friendship(2, 4).unwrap();
        let mut solver = RootedSolver::new(&g, 2, 1).unwrap();
        let yes = cfg(&[0, 0, 0, 0, 0, 16, 0]);
        let no = cfg(&[0, 0, 0, 0, 0, 15, 0]);
        for _ in 0..3 {
            assert!(solver.is_solvable(&yes).unwrap());
            assert!(!solver.is_solvable(&no).unwrap());
        }
    }
}
