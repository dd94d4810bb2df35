//! Domination invariants, used to classify when the 2-restricted optimal
//! pebbling number equals 5.
//!
//! Both operations run exhaustive bitmask searches and accept graphs of
//! order at most 16.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the bitmask subset searches accept.
pub const MAX_ORDER: usize = 16;

/// Open neighborhoods as bitmasks, after validating order and connectivity.
fn neighbor_masks(g: &Graph) -> Result<Vec<u32>> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "domination invariants need at least two vertices".into(),
        ));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(format!(
            "order {n} exceeds the subset-search limit {MAX_ORDER}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect())
}

/// Total domination number γ_t: the least size of a set S such that every
/// vertex of the graph (members of S included) has a neighbor in S.
pub fn total_domination_number(g: &Graph) -> Result<u32> {
    let nb = neighbor_masks(g)?;
    let n = g.order();
    let full: u32 = (1 << n) - 1;
    let mut best = u32::MAX;
    for mask in 1u32..(1 << n) {
        if mask.count_ones() >= best {
            continue;
        }
        let mut covered = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            covered |= nb[v];
            bits &= bits - 1;
        }
        if covered == full {
            best = mask.count_ones();
        }
    }
    // a connected graph on >= 2 vertices always has one (S = V works)
    Ok(best)
}

/// Whether the 2-restricted optimal pebbling number equals 5.
///
/// Five is the answer exactly when no four pebbles placed with at most two
/// per vertex can reach every target, but some five can. Both facts reduce
/// to domination statements about the coverage sets of such placements:
///
/// * every vertex needs a pebbled neighbor two placements can feed, which
///   fails below total domination number 4;
/// * a pair u,v carrying two pebbles each covers N[u] ∪ N[v] plus everything
///   a common neighbor can relay, so four pebbles suffice exactly when
///   {u,v} ∪ (N(u) ∩ N(v)) dominates for some pair — that must fail;
/// * five pebbles (two, two, one on u,v,w) suffice exactly when one of the
///   three relay patterns below dominates, depending on how w attaches.
pub fn pi_star2_eq5_characterization(g: &Graph) -> Result<bool> {
    if total_domination_number(g)? < 4 {
        return Ok(false);
    }
    let nb = neighbor_masks(g)?;
    let n = g.order();
    let full: u32 = (1 << n) - 1;
    let dominates = |s: u32| -> bool {
        // N[S] = V: every vertex is in s or adjacent to a member
        let mut covered = s;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            covered |= nb[v];
            bits &= bits - 1;
        }
        covered == full
    };
    // gate: no two vertices plus their common neighbors dominate
    for u in 0..n {
        for v in u + 1..n {
            let pair = (1 << u) | (1 << v);
            if dominates(pair | (nb[u] & nb[v])) {
                return Ok(false);
            }
        }
    }
    // pattern (a): w a common neighbor of u and v; all three pairwise
    // common neighborhoods relay
    for u in 0..n {
        for v in u + 1..n {
            let pair = (1u32 << u) | (1 << v);
            let c_uv = nb[u] & nb[v];
            let mut ws = c_uv;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                let s = pair | (1 << w) | c_uv | (nb[u] & nb[w]) | (nb[v] & nb[w]);
                if dominates(s) {
                    return Ok(true);
                }
            }
        }
    }
    // pattern (b): w a neighbor of v only; u-side common neighborhoods relay
    for u in 0..n {
        for v in 0..n {
            if v == u {
                continue;
            }
            let pair = (1u32 << u) | (1 << v);
            let c_uv = nb[u] & nb[v];
            let mut ws = nb[v] & !pair;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                let s = pair | (1 << w) | c_uv | (nb[u] & nb[w]);
                if dominates(s) {
                    return Ok(true);
                }
            }
        }
    }
    // pattern (c): w adjacent to a common neighbor of u and v
    for u in 0..n {
        for v in u + 1..n {
            let pair = (1u32 << u) | (1 << v);
            let c_uv = nb[u] & nb[v];
            if c_uv == 0 {
                continue;
            }
            let mut reach = 0u32;
            let mut bits = c_uv;
            while bits != 0 {
                let z = bits.trailing_zeros() as usize;
                reach |= nb[z];
                bits &= bits - 1;
            }
            let mut ws = reach & !pair;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                if dominates(pair | (1 << w) | c_uv) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}
