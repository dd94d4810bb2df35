//! Exhaustive enumeration of small labeled graphs and pebble distributions.
//!
//! Drives the brute-force validation suites: every labeled connected graph
//! on up to seven or so vertices, optionally deduplicated up to isomorphism,
//! and every distribution of a given weight.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::Graph;

/// Calls `visit` with the neighbor bitmasks of every labeled connected
/// simple graph on n vertices (1 <= n <= 7). adj[v] has bit w set iff vw is
/// an edge.
pub fn for_each_connected_bitmask(n: usize, visit: &mut dyn FnMut(&[u32])) {
    assert!((1..=7).contains(&n), "bitmask census supports 1..=7 vertices");
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    let m = pairs.len();
    let mut adj = vec![0u32; n];
    for mask in 0u32..(1u32 << m) {
        for a in adj.iter_mut() {
            *a = 0;
        }
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if bitmask_connected(&adj) {
            visit(&adj);
        }
    }
}

/// Connectivity of a neighbor-bitmask graph by bit-parallel flooding.
pub fn bitmask_connected(adj: &[u32]) -> bool {
    let n = adj.len();
    let all = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut reached = 1u32;
    loop {
        let mut next = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= adj[v];
        }
        if next == reached {
            return reached == all;
        }
        reached = next;
    }
}

pub fn bitmask_to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if adj[u] & (1 << v) != 0 {
                g.add_edge(u, v).expect("bitmask edges are simple");
            }
        }
    }
    g
}

/// All labeled connected graphs on n vertices (1 <= n <= 6; the labeled
/// counts grow fast: 1, 1, 4, 38, 728, 26704).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "materializing beyond n = 6 is too large");
    let mut out = Vec::new();
    for_each_connected_bitmask(n, &mut |adj| out.push(bitmask_to_graph(adj)));
    out
}

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 6; class counts: 1, 1, 2, 6, 21, 112).
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in connected_graphs(n) {
        if seen.insert(g.canonical_key()?) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Calls `visit` with every distribution of exactly `weight` pebbles on n
/// vertices with per-vertex counts at most `cap`, in lexicographic order.
pub fn for_each_distribution(
    n: usize,
    weight: u32,
    cap: u32,
    visit: &mut dyn FnMut(&[u32]),
) {
    fn rec(
        counts: &mut Vec<u32>,
        v: usize,
        need: u32,
        cap: u32,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        let n = counts.len();
        if v == n {
            if need == 0 {
                visit(counts);
            }
            return;
        }
        let tail = cap.saturating_mul((n - 1 - v) as u32);
        let lo = need.saturating_sub(tail);
        let hi = cap.min(need);
        if lo > hi {
            return;
        }
        for c in lo..=hi {
            counts[v] = c;
            rec(counts, v + 1, need - c, cap, visit);
            counts[v] = 0;
        }
    }
    let mut counts = vec![0u32; n];
    rec(&mut counts, 0, weight, cap, visit);
}
