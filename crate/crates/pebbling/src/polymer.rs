//! Point-attachment composition: building block graphs into larger ones by
//! identifying single vertices (or bridging them, for the link shape).
//!
//! A polymer is described by monomer graphs plus attachment instructions that
//! must form a tree over the monomer indices, which is exactly the "any two
//! blocks share at most one vertex" structure the invariant bounds rely on.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    General,
    Chain,
    Link,
    Bouquet,
}

/// One instruction: vertex `va` of monomer `a` meets vertex `vb` of monomer
/// `b`, by identification (point attachment) or by a bridge edge (link shape).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub a: usize,
    pub va: usize,
    pub b: usize,
    pub vb: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolymerSpec {
    pub shape: Shape,
    pub monomers: Vec<Graph>,
    pub attachments: Vec<Attachment>,
}

/// Identifies vertex `v1` of `g1` with vertex `v2` of `g2`.
///
/// The result keeps `g1`'s numbering; the surviving copies of `g2`'s vertices
/// follow in id order. The merged vertex keeps `v1`'s (lower) id and is
/// labeled "cut".
pub fn point_attach(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    let (g, _) = point_attach_with_map(g1, v1, g2, v2)?;
    Ok(g)
}

/// `point_attach` plus the map from `g2`'s vertex ids to ids in the result.
pub fn point_attach_with_map(
    g1: &Graph,
    v1: usize,
    g2: &Graph,
    v2: usize,
) -> Result<(Graph, Vec<usize>)> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let mut g = g1.clone();
    let map: Vec<usize> = (0..g2.order())
        .map(|w| {
            use std::cmp::Ordering::*;
            match w.cmp(&v2) {
                Less => g1.order() + w,
                Equal => v1,
                Greater => g1.order() + w - 1,
            }
        })
        .collect();
    for _ in 0..g2.order() - 1 {
        g.add_vertex();
    }
    for &(u, w) in g2.edges() {
        g.add_edge(map[u], map[w])?;
    }
    for (&w, label) in g2.labels() {
        if w != v2 {
            g.set_label(map[w], label.clone())?;
        }
    }
    g.set_label(v1, "cut")?;
    Ok((g, map))
}

/// Assembles the polymer, processing attachments in instruction order. Each
/// instruction must connect exactly one still-unplaced monomer to the growing
/// graph; anything else means the instructions are cyclic or leave the
/// polymer disconnected.
pub fn compose_polymer(spec: &PolymerSpec) -> Result<Graph> {
    Ok(compose_polymer_with_map(spec)?.0)
}

/// `compose_polymer` plus, per monomer, the map from its local vertex ids to
/// ids in the composed graph.
pub fn compose_polymer_with_map(spec: &PolymerSpec) -> Result<(Graph, Vec<Vec<usize>>)> {
    let k = spec.monomers.len();
    if k == 0 {
        return Err(Error::InvalidParameter("polymer needs at least one monomer".into()));
    }
    if spec.attachments.len() != k - 1 {
        return Err(Error::InvalidParameter(format!(
            "{} monomers need exactly {} attachments, got {}",
            k,
            k - 1,
            spec.attachments.len()
        )));
    }
    for att in &spec.attachments {
        for m in [att.a, att.b] {
            if m >= k {
                return Err(Error::InvalidParameter(format!(
                    "attachment references monomer {m}, but there are only {k}"
                )));
            }
        }
    }

    let base = spec.attachments.first().map_or(0, |att| att.a);
    let mut maps: Vec<Option<Vec<usize>>> = vec![None; k];
    maps[base] = Some((0..spec.monomers[base].order()).collect());
    let mut g = spec.monomers[base].clone();

    for att in &spec.attachments {
        let (placed, new, v_placed, v_new) = match (&maps[att.a], &maps[att.b]) {
            (Some(_), None) => (att.a, att.b, att.va, att.vb),
            (None, Some(_)) => (att.b, att.a, att.vb, att.va),
            (Some(_), Some(_)) => {
                return Err(Error::InvalidParameter(
                    "attachment instructions are cyclic: both monomers already placed".into(),
                ))
            }
            (None, None) => {
                return Err(Error::InvalidParameter(
                    "attachment instructions leave the polymer disconnected: \
                     neither monomer placed yet"
                        .into(),
                ))
            }
        };
        let monomer = &spec.monomers[new];
        monomer.check_vertex(v_new)?;
        let anchor_map = maps[placed].as_ref().expect("placed monomer has a map");
        let anchor = *anchor_map
            .get(v_placed)
            .ok_or(Error::VertexOutOfRange {
                vertex: v_placed,
                order: spec.monomers[placed].order(),
            })?;
        let map = match spec.shape {
            Shape::Link => {
                // bridge edge instead of identification
                let offset = g.order();
                for _ in 0..monomer.order() {
                    g.add_vertex();
                }
                for &(u, w) in monomer.edges() {
                    g.add_edge(offset + u, offset + w)?;
                }
                for (&w, label) in monomer.labels() {
                    g.set_label(offset + w, label.clone())?;
                }
                g.add_edge(anchor, offset + v_new)?;
                (0..monomer.order()).map(|w| offset + w).collect()
            }
            _ => {
                let (merged, map) = point_attach_with_map(&g, anchor, monomer, v_new)?;
                g = merged;
                map
            }
        };
        maps[new] = Some(map);
    }

    let maps: Vec<Vec<usize>> = maps
        .into_iter()
        .map(|m| {
            m.ok_or(Error::InvalidParameter(
                "attachment instructions leave the polymer disconnected".into(),
            ))
        })
        .collect::<Result<_>>()?;
    Ok((g, maps))
}

/// Chain spec: monomer i's vertex `from` is identified with monomer i-1's
/// vertex `to`.
pub fn chain_spec(monomer: &Graph, n: usize, to: usize, from: usize) -> PolymerSpec {
    PolymerSpec {
        shape: Shape::Chain,
        monomers: vec![monomer.clone(); n],
        attachments: (1..n)
            .map(|i| Attachment {
                a: i - 1,
                va: to,
                b: i,
                vb: from,
            })
            .collect(),
    }
}

/// Bouquet spec: every monomer's vertex `at` is identified with monomer 0's.
pub fn bouquet_spec(monomer: &Graph, n: usize, at: usize) -> PolymerSpec {
    PolymerSpec {
        shape: Shape::Bouquet,
        monomers: vec![monomer.clone(); n],
        attachments: (1..n)
            .map(|i| Attachment {
                a: 0,
                va: at,
                b: i,
                vb: at,
            })
            .collect(),
    }
}

/// Link spec: consecutive monomers joined by a bridge edge from vertex `to`
/// of the previous to vertex `from` of the next.
pub fn link_spec(monomer: &Graph, n: usize, to: usize, from: usize) -> PolymerSpec {
    PolymerSpec {
        shape: Shape::Link,
        ..chain_spec(monomer, n, to, from)
    }
}
