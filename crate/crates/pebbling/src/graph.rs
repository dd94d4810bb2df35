//! Simple undirected labeled graphs.
//!
//! Vertices are ids `0..order`. Adjacency lists are kept sorted; the edge
//! list preserves insertion order with endpoints normalized low-high, which
//! makes every constructor deterministic and serialization byte-stable.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub const UNREACHABLE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); order],
            edges: Vec::new(),
            labels: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts the edge {u, v}. Loops and duplicates are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("duplicate edge {u}-{v}")));
        }
        let pos_u = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos_u, v);
        let pos_v = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos_v, u);
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges in insertion order, endpoints normalized low-high.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// The unique vertex carrying `label`, if exactly one does.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        let mut found = None;
        for (&v, l) in &self.labels {
            if l == label {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
        }
        found
    }

    /// Breadth-first hop distances from `v`; UNREACHABLE marks other components.
    pub fn distances_raw(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.order()];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact hop distances from `v`. Errors when the graph is disconnected.
    pub fn distances(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let dist = self.distances_raw(v);
        if dist.contains(&UNREACHABLE) {
            Err(Error::Disconnected)
        } else {
            Ok(dist)
        }
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        Ok(*self.distances(v)?.iter().max().expect("nonempty graph"))
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.order() {
            best = best.max(self.eccentricity(v)?);
        }
        Ok(best)
    }

    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.order()).map(|v| self.distances(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && !self.distances_raw(0).contains(&UNREACHABLE)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order()
    }

    /// Image of this graph under the vertex bijection `perm` (old id -> new id).
    /// Edge insertion order follows the old order; labels move with vertices.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order() {
            return Err(Error::InvalidParameter(
                "permutation length differs from order".into(),
            ));
        }
        let mut seen = vec![false; self.order()];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("permutation not a bijection".into()));
            }
        }
        let mut g = Graph::new(self.order());
        for &(u, v) in &self.edges {
            g.add_edge(perm[u], perm[v])?;
        }
        for (&v, label) in &self.labels {
            g.set_label(perm[v], label.clone())?;
        }
        Ok(g)
    }

    /// Minimum adjacency key over all vertex permutations: equal keys mean
    /// isomorphic graphs. Exhaustive, so restricted to order <= 8.
    pub fn canonical_key(&self) -> Result<u64> {
        let n = self.order();
        if n > 8 {
            return Err(Error::TooLarge(format!(
                "canonical form is exhaustive over permutations; order {n} > 8"
            )));
        }
        let mut ids: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        permute_all(&mut ids, &mut |perm| {
            // perm[i] is the new id of old vertex i
            let mut key = 0u64;
            for &(u, v) in &self.edges {
                key |= 1 << (perm[u] * n + perm[v]);
                key |= 1 << (perm[v] * n + perm[u]);
            }
            best = best.min(key);
        });
        if n == 0 {
            best = 0;
        }
        Ok(best)
    }

    /// Exhaustive isomorphism test with degree pruning. Test utility; rejects
    /// graphs of order > 10.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.order() != other.order() || self.size() != other.size() {
            return Ok(false);
        }
        let n = self.order();
        if n > 10 {
            return Err(Error::TooLarge(format!(
                "isomorphism search is exhaustive; order {n} > 10"
            )));
        }
        let mut my_degs: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut their_degs: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        my_degs.sort_unstable();
        their_degs.sort_unstable();
        if my_degs != their_degs {
            return Ok(false);
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(self.extend_isomorphism(other, 0, &mut map, &mut used))
    }

    fn extend_isomorphism(
        &self,
        other: &Graph,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = self.order();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || self.degree(v) != other.degree(w) {
                continue;
            }
            // all previously mapped vertices must preserve adjacency with v
            let consistent = (0..v).all(|u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend_isomorphism(other, v + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
}

/// Calls `visit` on every permutation of `items` (Heap's algorithm).
pub fn permute_all<T, F: FnMut(&[T])>(items: &mut [T], visit: &mut F) {
    let n = items.len();
    if n == 0 {
        return;
    }
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn edge_insertion_is_normalized_and_ordered() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(0, 0).is_err());
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
    }

    #[test]
    fn distances_on_cycle() {
        let g = families::cycle(6).unwrap();
        let d = g.distances(0).unwrap();
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
        assert_eq!(g.eccentricity(0).unwrap(), 3);
        assert_eq!(g.diameter().unwrap(), 3);
    }

    #[test]
    fn disconnected_detected() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(g.distances(0), Err(Error::Disconnected)));
    }

    #[test]
    fn tree_recognition() {
        assert!(families::path(5).unwrap().is_tree());
        assert!(!families::cycle(5).unwrap().is_tree());
    }

    #[test]
    fn isomorphism_triangle_vs_complete() {
        let c3 = families::cycle(3).unwrap();
        let k3 = families::complete(3).unwrap();
        assert!(c3.is_isomorphic(&k3).unwrap());
        let p3 = families::path(3).unwrap();
        assert!(!c3.is_isomorphic(&p3).unwrap());
    }

    #[test]
    fn canonical_key_identifies_relabelings() {
        let p4 = families::path(4).unwrap();
        let shuffled = p4.permuted(&[2, 0, 3, 1]).unwrap();
        assert_eq!(
            p4.canonical_key().unwrap(),
            shuffled.canonical_key().unwrap()
        );
        let star = families::star(4).unwrap();
        assert_ne!(p4.canonical_key().unwrap(), star.canonical_key().unwrap());
    }

    #[test]
    fn permuted_preserves_labels() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.set_label(0, "hub").unwrap();
        let h = g.permuted(&[2, 1, 0]).unwrap();
        assert_eq!(h.label(2), Some("hub"));
        assert!(h.has_edge(2, 1));
    }
}
