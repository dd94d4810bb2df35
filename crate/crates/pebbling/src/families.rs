//! Constructors for the graph families under study: cycles, paths, complete
//! graphs, hypercubes, friendship graphs, triangular and square cactus
//! chains, coronas, and the complete-corona family Q(n,m).
//!
//! Numbering is monomer-major and attachment vertices keep the lower id, so
//! every constructor is deterministic. Cut vertices, hubs, chain terminals,
//! and pendants carry labels for reproducible CLI output.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polymer::{bouquet_spec, chain_spec, compose_polymer, link_spec};

pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs m >= 3, got {m}")));
    }
    let mut g = Graph::new(m);
    for i in 0..m {
        g.add_edge(i, (i + 1) % m)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// d-dimensional hypercube: vertices are d-bit strings, edges flip one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidParameter("hypercube needs d >= 1".into()));
    }
    if d > 16 {
        return Err(Error::TooLarge(format!("hypercube dimension {d} > 16")));
    }
    let mut g = Graph::new(1 << d);
    for v in 0..1usize << d {
        for b in 0..d {
            let w = v | (1 << b);
            if w > v {
                g.add_edge(v, w)?;
            }
        }
    }
    Ok(g)
}

/// Star K_{1,k}: center 0, leaves 1..=k.
pub fn star(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k + 1);
    for leaf in 1..=k {
        g.add_edge(0, leaf)?;
    }
    Ok(g)
}

/// Spider: center 0 with one path of each given length attached.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    let mut g = Graph::new(1);
    for &len in legs {
        if len == 0 {
            return Err(Error::InvalidParameter("spider legs must have length >= 1".into()));
        }
        let mut prev = 0;
        for _ in 0..len {
            let v = g.add_vertex();
            g.add_edge(prev, v)?;
            prev = v;
        }
    }
    Ok(g)
}

/// Friendship graph F_{n,m}: n cycles of order m sharing one vertex, the hub.
pub fn friendship(n: usize, m: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("friendship needs n >= 1, got {n}")));
    }
    let mut g = compose_polymer(&bouquet_spec(&cycle(m)?, n, 0))?;
    g.set_label(0, "hub")?;
    Ok(g)
}

/// Chain of n triangles, consecutive ones sharing a cut vertex. `pendant`
/// appends one extra vertex at the far terminal corner (vertex 2n).
pub fn triangular_chain(n: usize, pendant: bool) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "triangular chain needs n >= 1, got {n}"
        )));
    }
    let mut g = compose_polymer(&chain_spec(&cycle(3)?, n, 2, 0))?;
    let terminal = 2 * n;
    g.set_label(terminal, "terminal")?;
    if pendant {
        attach_pendant(&mut g, terminal)?;
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareKind {
    /// Cut vertices of internal squares at distance 2 (opposite corners).
    Para,
    /// Cut vertices of internal squares adjacent.
    Ortho,
}

impl FromStr for SquareKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SquareKind> {
        match s {
            "para" => Ok(SquareKind::Para),
            "ortho" => Ok(SquareKind::Ortho),
            other => Err(Error::InvalidParameter(format!(
                "unknown square chain kind '{other}' (expected para or ortho)"
            ))),
        }
    }
}

/// Chain of n squares. Identified at cut vertices by default (3n+1 vertices);
/// `bridges` joins consecutive squares by edges instead (4n vertices).
/// `pendant` appends one extra vertex at the far terminal corner.
pub fn square_chain(n: usize, kind: SquareKind, pendant: bool, bridges: bool) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("square chain needs n >= 1, got {n}")));
    }
    let square = cycle(4)?;
    let to = match kind {
        SquareKind::Para => 2,
        SquareKind::Ortho => 1,
    };
    let (mut g, terminal) = if bridges {
        let g = compose_polymer(&link_spec(&square, n, to, 0))?;
        (g, 4 * (n - 1) + 2)
    } else {
        let g = compose_polymer(&chain_spec(&square, n, to, 0))?;
        (g, 3 * n - 1)
    };
    g.set_label(terminal, "terminal")?;
    if pendant {
        attach_pendant(&mut g, terminal)?;
    }
    Ok(g)
}

fn attach_pendant(g: &mut Graph, at: usize) -> Result<()> {
    let p = g.add_vertex();
    g.add_edge(at, p)?;
    g.set_label(p, "pendant")
}

/// Corona g ∘ h: one copy of g, |V(g)| copies of h, the i-th vertex of g
/// joined to every vertex of the i-th copy.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::InvalidParameter("corona factors must be nonempty".into()));
    }
    let n = g.order();
    let k = h.order();
    let mut result = Graph::new(n * (1 + k));
    for &(u, v) in g.edges() {
        result.add_edge(u, v)?;
    }
    for i in 0..n {
        let offset = n + i * k;
        for &(u, v) in h.edges() {
            result.add_edge(offset + u, offset + v)?;
        }
        for w in 0..k {
            result.add_edge(i, offset + w)?;
        }
    }
    Ok(result)
}

/// Q(n,m): each vertex of K_n identified with one vertex of its own K_m,
/// which is the corona K_n ∘ K_{m-1}.
pub fn qnm(n: usize, m: usize) -> Result<Graph> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "Q(n,m) needs n > 1 and m > 1, got ({n},{m})"
        )));
    }
    corona(&complete(n)?, &complete(m - 1)?)
}
