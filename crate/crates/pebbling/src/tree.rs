//! Pebbling numbers of trees via maximum root path partitions.
//!
//! Root the tree at r and direct every edge toward r. A root path partition
//! splits the edge set into directed paths (each path climbs from a vertex
//! to one of its ancestors; in particular r, which has no parent, is an
//! endpoint of every path reaching it). Partitions are compared by their
//! non-increasing length sequences, lexicographically; the maximum one gives
//! the exact t-fold pebbling number:
//!
//!   t·2^(l1) + Σ_{i>=2} 2^(l_i) − m + 1
//!
//! The maximum partition is built greedily: peel the longest chain (root to
//! deepest leaf, ties to the smallest id), then peel each branch hanging off
//! the removed chain the same way, rooted where it attaches.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum root path partition: the sorted length sequence and the paths
/// as vertex walks, each starting at its topmost vertex (the one nearest r).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPartition {
    pub root: usize,
    /// Path lengths in edges, non-increasing.
    pub lengths: Vec<usize>,
    /// paths[i] realizes lengths[i], walking away from the root.
    pub paths: Vec<Vec<usize>>,
}

struct Peeler {
    children: Vec<Vec<usize>>,
    /// Longest downward chain below each vertex.
    height: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Peeler {
    /// Peels the branch of `top` entered through child `via`: the longest
    /// chain of that branch prefixed by `top`, then the branches hanging off
    /// the chain, each rooted at its attachment vertex.
    fn peel(&mut self, top: usize, via: usize) {
        let mut spine = vec![top, via];
        let mut cur = via;
        while let Some(&next) = self.children[cur]
            .iter()
            .max_by_key(|&&c| (self.height[c], std::cmp::Reverse(c)))
        {
            spine.push(next);
            cur = next;
        }
        for i in 1..spine.len() {
            let w = spine[i];
            let on_spine = spine.get(i + 1).copied();
            let hanging: Vec<usize> = self.children[w]
                .iter()
                .copied()
                .filter(|&c| Some(c) != on_spine)
                .collect();
            for c in hanging {
                self.peel(w, c);
            }
        }
        self.paths.push(spine);
    }
}

/// The maximum root path partition of a tree.
pub fn max_root_path_partition(g: &Graph, r: usize) -> Result<PathPartition> {
    g.check_vertex(r)?;
    if !g.is_tree() {
        return Err(Error::NotATree(
            "path partitions are defined on trees".into(),
        ));
    }
    let n = g.order();
    // children lists and a leaves-first sweep order from a BFS rooted at r
    let dist = g.distances(r)?;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            if dist[w] == dist[v] + 1 {
                children[v].push(w);
            }
        }
    }
    let mut by_depth: Vec<usize> = (0..n).collect();
    by_depth.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
    let mut height = vec![0usize; n];
    for &v in &by_depth {
        for &c in &children[v] {
            height[v] = height[v].max(height[c] + 1);
        }
    }
    let mut peeler = Peeler {
        children,
        height,
        paths: Vec::new(),
    };
    // the longest chain ends at r; peel it first, then r's other branches
    let mut r_children: Vec<usize> = peeler.children[r].clone();
    r_children.sort_by_key(|&c| (std::cmp::Reverse(peeler.height[c]), c));
    for c in r_children {
        peeler.peel(r, c);
    }
    let mut paths = peeler.paths;
    paths.sort_by_key(|w| (std::cmp::Reverse(w.len()), !w.contains(&r)));
    let lengths: Vec<usize> = paths.iter().map(|w| w.len() - 1).collect();
    Ok(PathPartition {
        root: r,
        lengths,
        paths,
    })
}

/// Exact t-fold pebbling number of a tree with root r, from the maximum
/// root path partition lengths.
pub fn tree_pebbling_number(g: &Graph, r: usize, t: u32) -> Result<u64> {
    if t < 1 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    if g.order() == 1 {
        if !g.is_tree() {
            return Err(Error::NotATree("the one-vertex graph is K1".into()));
        }
        g.check_vertex(r)?;
        return Ok(t as u64); // t pebbles must sit on the only vertex
    }
    let part = max_root_path_partition(g, r)?;
    let mut value: u64 = (t as u64) << part.lengths[0].min(62);
    for &l in &part.lengths[1..] {
        value += 1u64 << l.min(62);
    }
    Ok(value - part.lengths.len() as u64 + 1)
}

/// Exact t-fold pebbling number of a tree: the rooted value maximized over
/// all roots.
pub fn tree_pebbling_number_global(g: &Graph, t: u32) -> Result<u64> {
    let mut best = 0;
    for r in 0..g.order() {
        best = best.max(tree_pebbling_number(g, r, t)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Test oracle: lex-greatest length sequence over all directed path
    /// partitions, enumerated via per-vertex choices (each non-root vertex
    /// either chains its parent edge through one child edge or starts fresh).
    fn enumerated_max_lengths(g: &Graph, r: usize) -> Vec<usize> {
        let n = g.order();
        let dist = g.distances(r).unwrap();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        for v in 0..n {
            for &w in g.neighbors(v) {
                if dist[w] == dist[v] + 1 {
                    children[v].push(w);
                    parent[w] = Some(v);
                }
            }
        }
        // choice[v] for v != r: which child edge continues v's parent edge
        let mut choice: Vec<Option<usize>> = vec![None; n];
        let mut verts: Vec<usize> = (0..n).filter(|&v| v != r).collect();
        let mut best: Option<Vec<usize>> = None;
        fn rec(
            verts: &[usize],
            children: &Vec<Vec<usize>>,
            parent: &Vec<Option<usize>>,
            choice: &mut Vec<Option<usize>>,
            r: usize,
            best: &mut Option<Vec<usize>>,
        ) {
            match verts.split_first() {
                None => {
                    // chase chains: edge (v, parent v) continues into child
                    // choice[v]; count lengths from chain tops
                    let n = choice.len();
                    let mut lengths = Vec::new();
                    for v in 0..n {
                        if v == r {
                            continue;
                        }
                        // (v, parent) starts a chain iff nothing continues
                        // into it: v is not the chosen child of parent
                        let p = parent[v].unwrap();
                        let continued_into = p != r && choice[p] == Some(v);
                        if continued_into {
                            continue;
                        }
                        let mut len = 1;
                        let mut cur = v;
                        while let Some(c) = choice[cur] {
                            len += 1;
                            cur = c;
                        }
                        lengths.push(len);
                    }
                    lengths.sort_unstable_by(|a, b| b.cmp(a));
                    if best.as_ref().map_or(true, |b| lengths > *b) {
                        *best = Some(lengths);
                    }
                }
                Some((&v, rest)) => {
                    choice[v] = None;
                    rec(rest, children, parent, choice, r, best);
                    for i in 0..children[v].len() {
                        choice[v] = Some(children[v][i]);
                        rec(rest, children, parent, choice, r, best);
                    }
                    choice[v] = None;
                }
            }
        }
        verts.sort_unstable();
        rec(&verts, &children, &parent, &mut choice, r, &mut best);
        best.unwrap_or_default()
    }

    #[test]
    fn paths_from_an_end() {
        let p4 = families::path(4).unwrap();
        let part = max_root_path_partition(&p4, 0).unwrap();
        assert_eq!(part.lengths, vec![3]);
        assert_eq!(part.paths, vec![vec![0, 1, 2, 3]]);
        assert_eq!(tree_pebbling_number(&p4, 0, 1).unwrap(), 8);
        let p3 = families::path(3).unwrap();
        assert_eq!(tree_pebbling_number(&p3, 0, 2).unwrap(), 8);
    }

    #[test]
    fn path_from_the_middle() {
        // P5 from the center: two arms of length 2: 4t + 4 − 2 + 1
        let p5 = families::path(5).unwrap();
        let part = max_root_path_partition(&p5, 2).unwrap();
        assert_eq!(part.lengths, vec![2, 2]);
        assert!(part.paths.iter().all(|w| w[0] == 2));
        assert_eq!(tree_pebbling_number(&p5, 2, 1).unwrap(), 7);
    }

    #[test]
    fn star_from_center_and_leaf() {
        let star = families::star(3).unwrap();
        let center = max_root_path_partition(&star, 0).unwrap();
        assert_eq!(center.lengths, vec![1, 1, 1]);
        assert_eq!(tree_pebbling_number(&star, 0, 1).unwrap(), 4);
        let leaf = max_root_path_partition(&star, 1).unwrap();
        assert_eq!(leaf.lengths, vec![2, 1]);
        assert_eq!(tree_pebbling_number(&star, 1, 1).unwrap(), 5);
        assert_eq!(tree_pebbling_number_global(&star, 1).unwrap(), 5);
    }

    #[test]
    fn wide_star_paths_cannot_bend() {
        // K_{1,4} from a leaf: the two spare center edges cannot pair into
        // one path through the center, so the partition is [2,1,1], not [2,2]
        let star = families::star(4).unwrap();
        let part = max_root_path_partition(&star, 1).unwrap();
        assert_eq!(part.lengths, vec![2, 1, 1]);
        assert_eq!(tree_pebbling_number(&star, 1, 1).unwrap(), 6);
        let searched = crate::solver::pebbling_number_rooted(&star, 1, 1, 1_000_000).unwrap();
        assert_eq!(searched.value, 6);
    }

    #[test]
    fn spider_from_a_long_leg_tip() {
        // legs 3, 2, 2 rooted at the tip of the long leg: the longest path
        // runs through the center and down one short leg
        let spider = families::spider(&[3, 2, 2]).unwrap();
        // leg of length 3 is vertices 1, 2, 3 with tip 3
        let part = max_root_path_partition(&spider, 3).unwrap();
        assert_eq!(part.lengths, vec![5, 2]);
        assert_eq!(part.paths[0][0], 3);
        assert_eq!(tree_pebbling_number(&spider, 3, 1).unwrap(), 35);
    }

    #[test]
    fn branches_hanging_off_the_spine() {
        // r-a then a 3-chain and two leaves off a: the leaf edges stay
        // separate paths attached below the spine
        let mut g = Graph::new(7);
        // 0 = r, 1 = a, chain 2-3-4, leaves 5, 6
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (1, 6)] {
            g.add_edge(u, v).unwrap();
        }
        let part = max_root_path_partition(&g, 0).unwrap();
        assert_eq!(part.lengths, vec![4, 1, 1]);
        assert_eq!(part.paths[0], vec![0, 1, 2, 3, 4]);
        assert_eq!(tree_pebbling_number(&g, 0, 1).unwrap(), 18);
        let searched = crate::solver::pebbling_number_rooted(&g, 0, 1, 1_000_000).unwrap();
        assert_eq!(searched.value, 18);
    }

    #[test]
    fn non_tree_is_rejected() {
        let c4 = families::cycle(4).unwrap();
        assert!(matches!(
            max_root_path_partition(&c4, 0),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn singleton_needs_t() {
        let k1 = families::complete(1).unwrap();
        assert_eq!(tree_pebbling_number(&k1, 0, 3).unwrap(), 3);
    }

    #[test]
    fn greedy_matches_enumeration_on_all_small_trees() {
        for n in 2..=6 {
            for g in crate::census::connected_graphs_up_to_iso(n).unwrap() {
                if !g.is_tree() {
                    continue;
                }
                for r in 0..n {
                    let greedy = max_root_path_partition(&g, r).unwrap().lengths;
                    let brute = enumerated_max_lengths(&g, r);
                    assert_eq!(greedy, brute, "tree {:?} root {r}", g.edges());
                }
            }
        }
    }

    #[test]
    fn matches_search_on_every_tree_shape_up_to_six() {
        // all tree shapes on up to 6 vertices (the connected census filtered
        // to trees), every root: formula vs branch-and-bound
        for n in 2..=6 {
            for g in crate::census::connected_graphs_up_to_iso(n).unwrap() {
                if !g.is_tree() {
                    continue;
                }
                for r in 0..n {
                    for t in [1u32, 2] {
                        let formula = tree_pebbling_number(&g, r, t).unwrap();
                        let searched =
                            crate::solver::pebbling_number_rooted(&g, r, t, 10_000_000)
                                .unwrap();
                        assert_eq!(
                            formula, searched.value,
                            "tree {:?} root {r} t {t}",
                            g.edges()
                        );
                    }
                }
            }
        }
    }
}
