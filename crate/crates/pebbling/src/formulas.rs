//! Closed-form pebbling values and bounds for the supported graph families.
//!
//! Every function validates its stated domain and refuses out-of-range
//! inputs instead of extrapolating; values that would overflow a u64 are
//! refused as too large.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::SquareKind;
use crate::graph::Graph;
use crate::tree;

/// How a numeric result relates to the true invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
}

/// A formula result: the number, what kind of bound it is, and which
/// formula produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub value: u64,
    pub kind: BoundKind,
    pub source: String,
}

impl BoundValue {
    pub fn exact(value: u64, source: &str) -> Self {
        BoundValue {
            value,
            kind: BoundKind::Exact,
            source: source.into(),
        }
    }

    pub fn upper(value: u64, source: &str) -> Self {
        BoundValue {
            value,
            kind: BoundKind::Upper,
            source: source.into(),
        }
    }

    pub fn lower(value: u64, source: &str) -> Self {
        BoundValue {
            value,
            kind: BoundKind::Lower,
            source: source.into(),
        }
    }
}

/// 2^e, refused once it cannot take part in u64 arithmetic safely.
fn pow2(e: usize) -> Result<u64> {
    if e > 62 {
        return Err(Error::TooLarge(format!("2^{e} exceeds the supported range")));
    }
    Ok(1u64 << e)
}

fn checked_mul(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_mul(b)
        .ok_or_else(|| Error::TooLarge(format!("{what} exceeds the supported range")))
}

fn checked_add(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_add(b)
        .ok_or_else(|| Error::TooLarge(format!("{what} exceeds the supported range")))
}

/// Exact t-fold pebbling number of the cycle C_m.
///
/// Even cycles C_{2n} cost t·2^n. Odd cycles C_{2n+1} cost
/// (2^{n+2} − (−1)^n)/3 + 2^n(t−1); the division is exact because
/// 2^{n+2} ≡ (−1)^n (mod 3).
pub fn cycle_pi(m: usize, t: u32) -> Result<BoundValue> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycles need at least 3 vertices, got {m}"
        )));
    }
    if t < 1 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let n = m / 2;
    if m % 2 == 0 {
        let value = checked_mul(t as u64, pow2(n)?, "cycle value")?;
        Ok(BoundValue::exact(value, "cycle_even"))
    } else {
        let top = pow2(n + 2)?;
        let base = if n % 2 == 0 { (top - 1) / 3 } else { (top + 1) / 3 };
        let extra = checked_mul((t as u64) - 1, pow2(n)?, "cycle value")?;
        Ok(BoundValue::exact(
            checked_add(base, extra, "cycle value")?,
            "cycle_odd",
        ))
    }
}

/// Exact pebbling number of n even cycles C_{2k} sharing one hub vertex:
/// 2^{2k} + (2^k − 1)(n − 2) for n, k ≥ 2.
pub fn friendship_even_pi(n: usize, k: usize) -> Result<BoundValue> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidParameter(format!(
            "even-cycle friendship formula needs n, k >= 2, got n={n}, k={k}"
        )));
    }
    let per_cycle = pow2(k)? - 1;
    let value = checked_add(
        pow2(2 * k)?,
        checked_mul(per_cycle, (n - 2) as u64, "friendship value")?,
        "friendship value",
    )?;
    Ok(BoundValue::exact(value, "friendship_even"))
}

/// Exact pebbling number of the same graph when the target is the hub:
/// n(2^k − 1) + 1, by counting pebbles trapped per cycle.
pub fn friendship_hub_pi(n: usize, k: usize) -> Result<BoundValue> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidParameter(format!(
            "hub formula needs n, k >= 2, got n={n}, k={k}"
        )));
    }
    let value = checked_add(
        checked_mul(n as u64, pow2(k)? - 1, "hub value")?,
        1,
        "hub value",
    )?;
    Ok(BoundValue::exact(value, "friendship_hub"))
}

/// Exact pebbling number of n triangles sharing one vertex: 2n + 2 (n ≥ 2).
pub fn friendship3_pi(n: usize) -> Result<BoundValue> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "triangle friendship formula needs n >= 2, got {n}"
        )));
    }
    Ok(BoundValue::exact(2 * n as u64 + 2, "friendship_triangles"))
}

/// The three invariants of n squares sharing one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fn4Suite {
    pub pi: BoundValue,
    pub pi_star: BoundValue,
    pub pi_star_2: BoundValue,
}

/// π = 3n + 10, optimal π* = 4, and 2-restricted optimal π*₂ = 4, 5, 6 for
/// n = 2, n = 3, n ≥ 4 respectively.
pub fn fn4_suite(n: usize) -> Result<Fn4Suite> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "square friendship suite needs n >= 2, got {n}"
        )));
    }
    let pi_star_2 = match n {
        2 => 4,
        3 => 5,
        _ => 6,
    };
    Ok(Fn4Suite {
        pi: BoundValue::exact(3 * n as u64 + 10, "friendship_squares"),
        pi_star: BoundValue::exact(4, "friendship_squares_optimal"),
        pi_star_2: BoundValue::exact(pi_star_2, "friendship_squares_restricted"),
    })
}

/// Exact pebbling number of the chain of n triangles (consecutive triangles
/// sharing a cut vertex): 2^n + n; with a pendant edge at the far end,
/// 2^{n+1} + n.
pub fn triangular_chain_pi(n: usize, pendant: bool) -> Result<BoundValue> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "triangle chains need at least one triangle".into(),
        ));
    }
    let base = pow2(if pendant { n + 1 } else { n })?;
    let value = checked_add(base, n as u64, "triangle chain value")?;
    let source = if pendant {
        "triangular_chain_pendant"
    } else {
        "triangular_chain"
    };
    Ok(BoundValue::exact(value, source))
}

/// Exact pebbling number of a chain of n squares.
///
/// Para chains (cut vertices at opposite corners) cost 2^{2n}, or 2^{2n+1}
/// with a pendant edge. Ortho chains (cut vertices adjacent, n ≥ 2) cost
/// 2^{n+2} + 2n − 4; no pendant variant is supported.
pub fn square_chain_pi(n: usize, kind: SquareKind, pendant: bool) -> Result<BoundValue> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "square chains need at least one square".into(),
        ));
    }
    match kind {
        SquareKind::Para => {
            let e = if pendant { 2 * n + 1 } else { 2 * n };
            let source = if pendant {
                "square_chain_para_pendant"
            } else {
                "square_chain_para"
            };
            Ok(BoundValue::exact(pow2(e)?, source))
        }
        SquareKind::Ortho => {
            if n < 2 {
                return Err(Error::InvalidParameter(
                    "ortho square chains need at least two squares".into(),
                ));
            }
            if pendant {
                return Err(Error::InvalidParameter(
                    "no formula is supported for ortho chains with a pendant".into(),
                ));
            }
            let value = checked_add(pow2(n + 2)?, 2 * n as u64 - 4, "square chain value")?;
            Ok(BoundValue::exact(value, "square_chain_ortho"))
        }
    }
}

/// A pebbling number together with the optimal pebbling number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiAndOptimal {
    pub pi: BoundValue,
    pub pi_star: BoundValue,
}

/// Exact values for the corona of K_n (n > 2) with any graph of order
/// h ≥ 1: π = nh + 2n + 2 and π* = 4.
pub fn corona_complete_pi(n: usize, h: usize) -> Result<PiAndOptimal> {
    if n <= 2 {
        return Err(Error::InvalidParameter(format!(
            "corona formula needs n > 2, got {n}"
        )));
    }
    if h < 1 {
        return Err(Error::InvalidParameter(
            "corona formula needs h >= 1".into(),
        ));
    }
    let value = checked_add(
        checked_mul(n as u64, h as u64, "corona value")?,
        2 * n as u64 + 2,
        "corona value",
    )?;
    Ok(PiAndOptimal {
        pi: BoundValue::exact(value, "corona_complete"),
        pi_star: BoundValue::exact(4, "corona_complete_optimal"),
    })
}

/// Exact values for n copies of K_m each sharing one vertex with K_n
/// (n > 2, m ≥ 2): π = mn + n + 2 and π* = 4. This is the corona of K_n
/// with K_{m−1}, so it agrees with the corona formula at h = m − 1.
pub fn qnm_pi(n: usize, m: usize) -> Result<PiAndOptimal> {
    if n <= 2 {
        return Err(Error::InvalidParameter(format!(
            "clique cluster formula needs n > 2, got {n}"
        )));
    }
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "clique cluster formula needs m >= 2, got {m}"
        )));
    }
    let value = checked_add(
        checked_mul(m as u64, n as u64, "clique cluster value")?,
        n as u64 + 2,
        "clique cluster value",
    )?;
    Ok(PiAndOptimal {
        pi: BoundValue::exact(value, "clique_cluster"),
        pi_star: BoundValue::exact(4, "clique_cluster_optimal"),
    })
}

/// Exact rooted t-fold pebbling number of a tree, via the maximum root path
/// partition.
pub fn tree_pi(g: &Graph, r: usize, t: u32) -> Result<BoundValue> {
    Ok(BoundValue::exact(
        tree::tree_pebbling_number(g, r, t)?,
        "tree_path_partition",
    ))
}

/// Exact pebbling number of a tree: the rooted value maximized over roots.
pub fn tree_pi_global(g: &Graph) -> Result<BoundValue> {
    Ok(BoundValue::exact(
        tree::tree_pebbling_number_global(g, 1)?,
        "tree_path_partition",
    ))
}

/// Upper bound for a connected graph assembled from blocks sharing cut
/// vertices: the product of the blocks' pebbling numbers.
pub fn product_bound(pi_values: &[u64]) -> Result<BoundValue> {
    if pi_values.is_empty() {
        return Err(Error::InvalidParameter(
            "the product bound needs at least one value".into(),
        ));
    }
    let mut value = 1u64;
    for &p in pi_values {
        value = checked_mul(value, p, "product bound")?;
    }
    Ok(BoundValue::upper(value, "block_product"))
}

/// Upper bound when consecutive blocks are joined by bridge edges instead
/// of shared vertices: 2^{n−1} times the product, for n blocks.
pub fn link_bound(pi_values: &[u64]) -> Result<BoundValue> {
    if pi_values.is_empty() {
        return Err(Error::InvalidParameter(
            "the link bound needs at least one value".into(),
        ));
    }
    let product = product_bound(pi_values)?.value;
    let value = checked_mul(pow2(pi_values.len() - 1)?, product, "link bound")?;
    Ok(BoundValue::upper(value, "bridge_product"))
}

/// Upper bound when all blocks share a single vertex: with values sorted in
/// non-increasing order, π₁π₂ + Σ_{i≥3}(π_i − 1).
pub fn bouquet_bound(pi_values: &[u64]) -> Result<BoundValue> {
    if pi_values.len() < 2 {
        return Err(Error::InvalidParameter(
            "the bouquet bound needs at least two values".into(),
        ));
    }
    let mut sorted = pi_values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut value = checked_mul(sorted[0], sorted[1], "bouquet bound")?;
    for &p in &sorted[2..] {
        value = checked_add(value, p.saturating_sub(1), "bouquet bound")?;
    }
    Ok(BoundValue::upper(value, "shared_vertex_sum"))
}

/// Lower bound valid for every connected graph: max(|V|, 2^diameter).
pub fn lower_bounds(g: &Graph) -> Result<BoundValue> {
    let d = g.diameter()?;
    let value = (g.order() as u64).max(pow2(d)?);
    Ok(BoundValue::lower(value, "order_and_diameter"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cycle_values() {
        assert_eq!(cycle_pi(6, 1).unwrap().value, 8);
        assert_eq!(cycle_pi(5, 1).unwrap().value, 5);
        assert_eq!(cycle_pi(7, 3).unwrap().value, 27);
        assert_eq!(cycle_pi(3, 1).unwrap().value, 3);
        assert_eq!(cycle_pi(3, 2).unwrap().value, 5);
        assert_eq!(cycle_pi(4, 2).unwrap().value, 8);
        assert_eq!(cycle_pi(5, 2).unwrap().value, 9);
        assert_eq!(cycle_pi(7, 1).unwrap().value, 11);
        assert!(cycle_pi(2, 1).is_err());
        assert!(cycle_pi(5, 0).is_err());
        assert!(matches!(cycle_pi(200, 1), Err(Error::TooLarge(_))));
    }

    #[test]
    fn friendship_values() {
        assert_eq!(friendship_even_pi(2, 2).unwrap().value, 16);
        assert_eq!(friendship_even_pi(3, 2).unwrap().value, 19);
        assert_eq!(friendship_even_pi(4, 2).unwrap().value, 22);
        assert_eq!(friendship_even_pi(2, 3).unwrap().value, 64);
        assert!(friendship_even_pi(1, 2).is_err());
        assert!(friendship_even_pi(2, 1).is_err());
        assert_eq!(friendship_hub_pi(2, 2).unwrap().value, 7);
        assert_eq!(friendship_hub_pi(3, 2).unwrap().value, 10);
        assert!(friendship_hub_pi(1, 2).is_err());
        assert_eq!(friendship3_pi(2).unwrap().value, 6);
        assert_eq!(friendship3_pi(4).unwrap().value, 10);
        assert!(friendship3_pi(1).is_err());
    }

    #[test]
    fn square_friendship_suite() {
        let two = fn4_suite(2).unwrap();
        assert_eq!(
            (two.pi.value, two.pi_star.value, two.pi_star_2.value),
            (16, 4, 4)
        );
        let three = fn4_suite(3).unwrap();
        assert_eq!(
            (three.pi.value, three.pi_star.value, three.pi_star_2.value),
            (19, 4, 5)
        );
        let five = fn4_suite(5).unwrap();
        assert_eq!(
            (five.pi.value, five.pi_star.value, five.pi_star_2.value),
            (25, 4, 6)
        );
        assert!(fn4_suite(1).is_err());
        // the suite's pi agrees with the even-cycle friendship formula
        for n in 2..=8 {
            assert_eq!(
                fn4_suite(n).unwrap().pi.value,
                friendship_even_pi(n, 2).unwrap().value
            );
        }
    }

    #[test]
    fn chain_values() {
        assert_eq!(triangular_chain_pi(1, false).unwrap().value, 3);
        assert_eq!(triangular_chain_pi(4, false).unwrap().value, 20);
        assert_eq!(triangular_chain_pi(4, true).unwrap().value, 36);
        assert_eq!(triangular_chain_pi(1, true).unwrap().value, 5);
        assert!(triangular_chain_pi(0, false).is_err());
        assert_eq!(
            square_chain_pi(2, SquareKind::Para, false).unwrap().value,
            16
        );
        assert_eq!(
            square_chain_pi(3, SquareKind::Ortho, false).unwrap().value,
            34
        );
        assert_eq!(
            square_chain_pi(1, SquareKind::Para, true).unwrap().value,
            8
        );
        assert_eq!(
            square_chain_pi(2, SquareKind::Ortho, false).unwrap().value,
            16
        );
        assert!(square_chain_pi(1, SquareKind::Ortho, false).is_err());
        assert!(square_chain_pi(3, SquareKind::Ortho, true).is_err());
        assert!(square_chain_pi(0, SquareKind::Para, false).is_err());
    }

    #[test]
    fn corona_and_clique_cluster_values() {
        let c = corona_complete_pi(3, 2).unwrap();
        assert_eq!((c.pi.value, c.pi_star.value), (14, 4));
        assert_eq!(corona_complete_pi(3, 1).unwrap().pi.value, 11);
        assert!(corona_complete_pi(2, 1).is_err());
        assert!(corona_complete_pi(3, 0).is_err());
        let q = qnm_pi(3, 4).unwrap();
        assert_eq!((q.pi.value, q.pi_star.value), (17, 4));
        assert!(qnm_pi(2, 2).is_err());
        assert!(qnm_pi(3, 1).is_err());
        // the cluster of K_m copies is the corona with K_{m-1}
        for n in 3..=6 {
            for m in 2..=5 {
                assert_eq!(
                    qnm_pi(n, m).unwrap().pi.value,
                    corona_complete_pi(n, m - 1).unwrap().pi.value
                );
            }
        }
    }

    #[test]
    fn tree_wrappers() {
        let p4 = families::path(4).unwrap();
        assert_eq!(tree_pi(&p4, 0, 1).unwrap().value, 8);
        assert_eq!(tree_pi_global(&p4).unwrap().value, 8);
        let star = families::star(3).unwrap();
        assert_eq!(tree_pi(&star, 1, 1).unwrap().value, 5);
        let p3 = families::path(3).unwrap();
        assert_eq!(tree_pi(&p3, 0, 2).unwrap().value, 8);
    }

    #[test]
    fn composition_bounds() {
        assert_eq!(product_bound(&[3]).unwrap().value, 3);
        assert_eq!(product_bound(&[4, 4, 4]).unwrap().value, 64);
        assert!(product_bound(&[]).is_err());
        assert_eq!(link_bound(&[3]).unwrap().value, 3);
        assert_eq!(link_bound(&[3, 3]).unwrap().value, 18);
        assert_eq!(bouquet_bound(&[4, 4, 4, 4]).unwrap().value, 22);
        assert_eq!(bouquet_bound(&[2, 4, 3]).unwrap().value, 13);
        assert!(bouquet_bound(&[4]).is_err());
        assert!(matches!(
            product_bound(&[u64::MAX, 2]),
            Err(Error::TooLarge(_))
        ));
        // the bouquet bound is tight for squares sharing a vertex
        for n in 2..=6 {
            let vals = vec![4u64; n];
            assert_eq!(
                bouquet_bound(&vals).unwrap().value,
                fn4_suite(n).unwrap().pi.value
            );
        }
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(lower_bounds(&families::cycle(6).unwrap()).unwrap().value, 8);
        assert_eq!(lower_bounds(&families::path(5).unwrap()).unwrap().value, 16);
        assert_eq!(
            lower_bounds(&families::complete(4).unwrap()).unwrap().value,
            4
        );
        assert_eq!(
            lower_bounds(&families::cycle(6).unwrap()).unwrap().kind,
            BoundKind::Lower
        );
    }

    #[test]
    fn matching_interface_values_agree() {
        // one graph, four independent routes to the same number
        assert_eq!(friendship_even_pi(2, 2).unwrap().value, 16);
        assert_eq!(
            square_chain_pi(2, SquareKind::Para, false).unwrap().value,
            16
        );
        assert_eq!(
            square_chain_pi(2, SquareKind::Ortho, false).unwrap().value,
            16
        );
        assert_eq!(fn4_suite(2).unwrap().pi.value, 16);
    }

    #[test]
    fn serializes_with_kind_and_source() {
        let b = cycle_pi(6, 1).unwrap();
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["value"], 8);
        assert_eq!(json["kind"], "exact");
        assert_eq!(json["source"], "cycle_even");
    }
}
