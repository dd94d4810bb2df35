//! Weighted-tree certificates for pebbling upper bounds.
//!
//! A *strategy* for a root `r` is a subtree of the host graph containing
//! `r`, together with positive rational weights on its non-root vertices
//! that at least double from child to parent (vertices whose tree parent is
//! `r` itself are exempt, since `r` carries weight zero).  Every
//! `r`-unsolvable configuration `f` then satisfies the linear inequality
//! `Σ w(v)·f(v) ≤ Σ w(v)`: throwing a pebble from `v` toward the root never
//! increases the weighted count, so if `f` beat the total, `f` could pay a
//! pebble onto `r`.  A family of strategies therefore yields a linear
//! program whose optimum, floored and incremented, bounds the rooted
//! pebbling number from above.
//!
//! This module builds, validates, decomposes, and serializes strategies;
//! solves the associated linear program in exact rational arithmetic with a
//! verified dual; and assembles two-sided certificates by pairing the upper
//! bound with an explicit unsolvable configuration, either supplied by the
//! caller or found by the branch-and-bound search.

pub mod simplex;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// 2^e as an exact rational.
fn pow2(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A weighted subtree rooted at the certificate target.
///
/// `parent[v]` is `Some(p)` exactly when `v` is a non-root tree vertex with
/// tree parent `p`; the root and all off-tree vertices have `None`.
/// `weights[v]` is zero at the root and off the tree, positive on tree
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    /// Target vertex; carries weight zero.
    pub root: usize,
    /// Tree parent per vertex; `None` at the root and off the tree.
    pub parent: Vec<Option<usize>>,
    /// Exact rational weight per vertex.
    pub weights: Vec<BigRational>,
}

impl Strategy {
    /// An empty strategy (no tree vertices yet) on `order` vertices.
    pub fn new(order: usize, root: usize) -> Result<Strategy> {
        if root >= order {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                order,
            });
        }
        Ok(Strategy {
            root,
            parent: vec![None; order],
            weights: vec![BigRational::zero(); order],
        })
    }

    /// Number of vertices of the host graph the strategy is shaped for.
    pub fn order(&self) -> usize {
        self.parent.len()
    }

    /// Adds `child` to the tree under `parent` with the given weight.
    pub fn attach(&mut self, child: usize, parent: usize, weight: BigRational) -> Result<()> {
        let order = self.order();
        for v in [child, parent] {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
        }
        if child == self.root {
            return Err(Error::InvalidStrategy(
                "the root cannot be attached below another vertex".into(),
            ));
        }
        if child == parent {
            return Err(Error::InvalidStrategy(format!(
                "vertex {child} cannot be its own parent"
            )));
        }
        self.parent[child] = Some(parent);
        self.weights[child] = weight;
        Ok(())
    }

    /// Builds the canonical doubling strategy along a path.
    ///
    /// `path[0]` is the root; the weight of `path[i]` is `2^(L-i)` where
    /// `L = path.len() - 1`, so the far end carries weight 1.
    pub fn from_path(order: usize, path: &[usize]) -> Result<Strategy> {
        if path.len() < 2 {
            return Err(Error::InvalidStrategy(
                "a path strategy needs at least one edge".into(),
            ));
        }
        let mut s = Strategy::new(order, path[0])?;
        let d = path.len() - 1;
        for i in 1..=d {
            if s.parent[path[i]].is_some() || path[i] == s.root {
                return Err(Error::InvalidStrategy(format!(
                    "path revisits vertex {}",
                    path[i]
                )));
            }
            s.attach(path[i], path[i - 1], pow2(d - i))?;
        }
        Ok(s)
    }

    /// Vertices in the tree beyond the root, in ascending id order.
    pub fn tree_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(|&v| self.parent[v].is_some())
    }

    /// Tree depth per vertex (root depth 0), or a reason the parent map is
    /// not a tree hanging from the root.
    fn depths(&self) -> std::result::Result<Vec<Option<usize>>, String> {
        let order = self.order();
        let mut depth: Vec<Option<usize>> = vec![None; order];
        depth[self.root] = Some(0);
        for v in 0..order {
            if self.parent[v].is_none() || depth[v].is_some() {
                continue;
            }
            // Walk toward the root, then assign depths along the way back.
            let mut chain = Vec::new();
            let mut cur = v;
            let base = loop {
                if let Some(d) = depth[cur] {
                    break d;
                }
                if chain.contains(&cur) {
                    return Err(format!("parent chain through vertex {v} contains a cycle"));
                }
                chain.push(cur);
                match self.parent[cur] {
                    Some(p) => cur = p,
                    None => {
                        return Err(format!(
                            "vertex {v} is not connected to the root through the tree"
                        ));
                    }
                }
            };
            for (i, &u) in chain.iter().enumerate() {
                depth[u] = Some(base + chain.len() - i);
            }
        }
        Ok(depth)
    }
}

/// Outcome of validating a strategy against its host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyVerdict {
    /// Valid, root has a single tree child, and every tree vertex at depth
    /// `i` weighs exactly `2^(d-i)` where `d` is the tree depth.
    Basic,
    /// Valid, but the weights deviate from the exact doubling profile.
    Nonbasic,
    /// Structurally unusable; the reason is human-readable.
    Invalid(String),
}

/// Checks every strategy invariant against the host graph.
///
/// A valid strategy has: tree edges that exist in `g`, a parent map forming
/// a tree that hangs from the root, weight zero at the root and off the
/// tree, positive weight on tree vertices, and `w(parent(v)) ≥ 2·w(v)` for
/// every tree vertex whose parent is not the root.
pub fn validate_strategy(g: &Graph, s: &Strategy) -> StrategyVerdict {
    match checked_kind(g, s) {
        Ok(true) => StrategyVerdict::Basic,
        Ok(false) => StrategyVerdict::Nonbasic,
        Err(reason) => StrategyVerdict::Invalid(reason),
    }
}

/// Validation that errors instead of reporting, for internal call sites.
fn require_valid(g: &Graph, s: &Strategy) -> Result<()> {
    checked_kind(g, s)
        .map(|_| ())
        .map_err(Error::InvalidStrategy)
}

fn checked_kind(g: &Graph, s: &Strategy) -> std::result::Result<bool, String> {
    let order = g.order();
    if s.order() != order || s.weights.len() != order {
        return Err(format!(
            "strategy is shaped for {} vertices but the graph has {}",
            s.order().max(s.weights.len()),
            order
        ));
    }
    if s.root >= order {
        return Err(format!("root {} is out of range", s.root));
    }
    if s.parent[s.root].is_some() {
        return Err("the root must not have a tree parent".into());
    }
    if !s.weights[s.root].is_zero() {
        return Err("the root must carry weight zero".into());
    }
    let mut tree_size = 0usize;
    for v in 0..order {
        match s.parent[v] {
            Some(p) => {
                tree_size += 1;
                if p >= order {
                    return Err(format!("parent {p} of vertex {v} is out of range"));
                }
                if !g.has_edge(v, p) {
                    return Err(format!("tree edge ({p}, {v}) does not exist in the graph"));
                }
                if !s.weights[v].is_positive() {
                    return Err(format!("tree vertex {v} must carry positive weight"));
                }
            }
            None => {
                if v != s.root && !s.weights[v].is_zero() {
                    return Err(format!("vertex {v} carries weight but is not in the tree"));
                }
            }
        }
    }
    if tree_size == 0 {
        return Err("strategy has no tree vertices beyond the root".into());
    }
    let depth = s.depths()?;
    for v in 0..order {
        if let Some(p) = s.parent[v] {
            if p != s.root && s.weights[p] < &s.weights[v] * rat(2) {
                return Err(format!(
                    "doubling fails at vertex {v}: parent weight {} < 2 × {}",
                    s.weights[p], s.weights[v]
                ));
            }
        }
    }
    // Basic: single child under the root, weights exactly 2^(d - depth).
    let root_children = (0..order)
        .filter(|&v| s.parent[v] == Some(s.root))
        .count();
    let d = (0..order)
        .filter_map(|v| s.parent[v].and(depth[v]))
        .max()
        .unwrap_or(0);
    let basic = root_children == 1
        && (0..order).all(|v| match (s.parent[v], depth[v]) {
            (Some(_), Some(i)) => s.weights[v] == pow2(d - i),
            _ => true,
        });
    Ok(basic)
}

/// Total weight of the strategy tree (the right-hand side of its
/// inequality).  Does not validate.
pub fn strategy_total(s: &Strategy) -> BigRational {
    s.weights.iter().sum()
}

/// Weighted value `Σ w(v)·f(v)` of a configuration under a strategy.
pub fn weight_of(s: &Strategy, f: &Configuration) -> Result<BigRational> {
    if f.len() != s.order() {
        return Err(Error::InvalidParameter(
            "configuration and strategy are shaped for different graphs".into(),
        ));
    }
    Ok((0..s.order())
        .map(|v| &s.weights[v] * rat(f.get(v) as u64))
        .sum())
}

/// Evaluates the certificate inequality `Σ w(v)·f(v) ≤ Σ w(v)`.
///
/// Returns true when satisfied.  Every root-unsolvable configuration
/// satisfies it, so a violation certifies that `f` is root-solvable.
pub fn check_wfl(s: &Strategy, f: &Configuration) -> Result<bool> {
    Ok(weight_of(s, f)? <= strategy_total(s))
}

/// Rewrites a valid strategy as an exact positive combination of basic
/// strategies on nested subtrees.
///
/// Repeatedly peels, from each child of the root, the maximal subtree with
/// remaining positive weight, scaled by the tightest ratio against the
/// doubling profile; the profile subtraction preserves every doubling slack,
/// so each round zeroes at least one vertex and the residue stays a
/// strategy.  Returns `(coefficient, basic strategy)` pairs whose weighted
/// sum reproduces the input weights vertexwise; a basic input yields itself
/// with coefficient one.
pub fn decompose_nonbasic(g: &Graph, s: &Strategy) -> Result<Vec<(BigRational, Strategy)>> {
    require_valid(g, s)?;
    let order = s.order();
    let depth = s.depths().map_err(Error::InvalidStrategy)?;
    let children: Vec<Vec<usize>> = {
        let mut c = vec![Vec::new(); order];
        for v in 0..order {
            if let Some(p) = s.parent[v] {
                c[p].push(v);
            }
        }
        c
    };
    let mut w = s.weights.clone();
    let mut out = Vec::new();
    for &top in &children[s.root] {
        while w[top].is_positive() {
            // Maximal positive subtree hanging from this child of the root.
            let mut comp = vec![top];
            let mut i = 0;
            while i < comp.len() {
                for &u in &children[comp[i]] {
                    if w[u].is_positive() {
                        comp.push(u);
                    }
                }
                i += 1;
            }
            let d = comp
                .iter()
                .map(|&v| depth[v].expect("tree vertices have depths"))
                .max()
                .expect("component is nonempty");
            let mut basic = Strategy::new(order, s.root)?;
            let mut coeff: Option<BigRational> = None;
            for &v in &comp {
                let profile = pow2(d - depth[v].expect("tree vertices have depths"));
                let ratio = &w[v] / &profile;
                if coeff.as_ref().is_none_or(|c| ratio < *c) {
                    coeff = Some(ratio);
                }
                basic.attach(v, s.parent[v].expect("component vertices are in the tree"), profile)?;
            }
            let coeff = coeff.expect("component is nonempty");
            for &v in &comp {
                let delta = &coeff * &basic.weights[v];
                w[v] -= delta;
            }
            out.push((coeff, basic));
        }
    }
    if w.iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidStrategy(
            "decomposition left residual weight; the input was not a valid strategy".into(),
        ));
    }
    Ok(out)
}

/// An unsolvable configuration witnessing a lower bound, stored with its
/// pebble count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerWitness {
    /// Pebble counts per vertex.
    pub counts: Vec<u32>,
    /// Total number of pebbles.
    pub weight: u64,
}

impl LowerWitness {
    fn from_configuration(f: &Configuration) -> LowerWitness {
        LowerWitness {
            counts: f.counts().to_vec(),
            weight: f.weight(),
        }
    }

    /// The witness as a solver configuration.
    pub fn configuration(&self) -> Configuration {
        Configuration::new(self.counts.clone())
    }
}

/// Whether a certificate pins the exact value or leaves a window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `lower == upper`: the rooted pebbling number is determined.
    Exact,
    /// The bounds do not meet.
    Gap,
}

/// A two-sided certificate for a rooted pebbling number.
///
/// The upper bound comes from the strategy linear program (sound whenever
/// all strategies validate, and audited here against an exact dual
/// solution); the lower bound from an explicitly stored unsolvable
/// configuration of weight `lower - 1`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundCertificate {
    /// Target vertex.
    pub root: usize,
    /// Strategies backing the upper bound.
    pub strategies: Vec<Strategy>,
    /// Exact optimum of the strategy linear program.
    #[serde(
        serialize_with = "serialize_rational",
        deserialize_with = "deserialize_rational"
    )]
    pub lp_optimum: BigRational,
    /// `floor(lp_optimum) + 1`, an upper bound on the rooted pebbling number.
    pub upper: u64,
    /// Dual multipliers certifying the optimum: nonnegative, dominate the
    /// objective on every column, and reproduce `lp_optimum` against the
    /// strategy totals.
    #[serde(
        serialize_with = "serialize_rationals",
        deserialize_with = "deserialize_rationals"
    )]
    pub dual: Vec<BigRational>,
    /// Proven lower bound on the rooted pebbling number
    /// (witness weight + 1).
    pub lower: u64,
    /// The unsolvable configuration behind `lower`.
    pub lower_witness: Option<LowerWitness>,
    /// True when the witness search provably enumerated every heavier
    /// configuration, making `lower` exact on its own.
    pub exhaustive: bool,
    /// `Exact` when the bounds meet.
    pub verdict: Verdict,
}

/// Solves the strategy linear program exactly and returns the certified
/// upper bound.
///
/// Maximizes `Σ_{v≠r} f(v)` over rational `f ≥ 0` subject to one inequality
/// per strategy.  Every vertex other than the root must receive positive
/// weight from at least one strategy; otherwise that vertex's variable is
/// unbounded and `Error::Uncovered` reports it.  The returned certificate
/// carries the trivial lower bound 1 (the empty configuration); use
/// [`certify_rooted`] to tighten it.
pub fn lp_bound(g: &Graph, r: usize, strategies: &[Strategy]) -> Result<BoundCertificate> {
    g.check_vertex(r)?;
    for s in strategies {
        if s.root != r {
            return Err(Error::InvalidStrategy(format!(
                "strategy is rooted at {} but the bound targets {r}",
                s.root
            )));
        }
        require_valid(g, s)?;
    }
    let order = g.order();
    let vars: Vec<usize> = (0..order).filter(|&v| v != r).collect();
    for &v in &vars {
        if !strategies.iter().any(|s| s.weights[v].is_positive()) {
            return Err(Error::Uncovered(v));
        }
    }
    let a: Vec<Vec<BigRational>> = strategies
        .iter()
        .map(|s| vars.iter().map(|&v| s.weights[v].clone()).collect())
        .collect();
    let b: Vec<BigRational> = strategies.iter().map(strategy_total).collect();
    let c: Vec<BigRational> = vec![BigRational::one(); vars.len()];
    let sol = simplex::maximize(&a, &b, &c)?;

    // Audit the dual certificate before trusting the optimum.
    let audit_failed = Error::InvalidParameter(
        "internal: duality audit failed for the certificate linear program".into(),
    );
    if sol.dual.iter().any(|y| y.is_negative()) {
        return Err(audit_failed);
    }
    for j in 0..vars.len() {
        let column: BigRational = sol.dual.iter().zip(&a).map(|(y, row)| y * &row[j]).sum();
        if column < c[j] {
            return Err(audit_failed);
        }
    }
    let dual_value: BigRational = sol.dual.iter().zip(&b).map(|(y, t)| y * t).sum();
    if dual_value != sol.optimum {
        return Err(audit_failed);
    }

    let too_large = || Error::TooLarge("the certified upper bound overflows a 64-bit count".into());
    let floor = sol
        .optimum
        .floor()
        .to_integer()
        .to_u64()
        .ok_or_else(too_large)?;
    let upper = floor.checked_add(1).ok_or_else(too_large)?;
    let zero = Configuration::zeros(order);
    Ok(BoundCertificate {
        root: r,
        strategies: strategies.to_vec(),
        lp_optimum: sol.optimum,
        upper,
        dual: sol.dual,
        lower: 1,
        lower_witness: Some(LowerWitness::from_configuration(&zero)),
        exhaustive: false,
        verdict: if upper == 1 {
            Verdict::Exact
        } else {
            Verdict::Gap
        },
    })
}

/// Assembles a two-sided certificate for the rooted pebbling number.
///
/// The upper bound comes from [`lp_bound`] over the given strategies (or
/// [`default_strategies`] when none are supplied).  For the lower bound,
/// a supplied witness is verified unsolvable by the solver
/// (`Error::InvalidWitness` if it is solvable); otherwise the
/// branch-and-bound search looks for the heaviest unsolvable configuration,
/// seeded by the upper bound and stopping as soon as the bounds meet.  A
/// search that exceeds `budget` returns a certificate with a gap rather
/// than an error.
pub fn certify_rooted(
    g: &Graph,
    r: usize,
    strategies: Option<Vec<Strategy>>,
    witness: Option<&Configuration>,
    budget: u64,
) -> Result<BoundCertificate> {
    let strategies = match strategies {
        Some(list) => list,
        None => default_strategies(g, r)?,
    };
    let mut cert = lp_bound(g, r, &strategies)?;
    match witness {
        Some(f) => {
            f.check_for(g)?;
            if solver::is_solvable(g, f, r, 1)? {
                return Err(Error::InvalidWitness(
                    "the supplied configuration is root-solvable, so it witnesses no lower bound"
                        .into(),
                ));
            }
            cert.lower = f.weight() + 1;
            cert.lower_witness = Some(LowerWitness::from_configuration(f));
            cert.exhaustive = false;
        }
        None => {
            match solver::max_unsolvable(
                g,
                r,
                1,
                budget,
                Some(cert.upper),
                Some(cert.upper.saturating_sub(1)),
            ) {
                Ok(out) => {
                    cert.lower = out.max_weight + 1;
                    cert.lower_witness = Some(LowerWitness::from_configuration(&out.witness));
                    cert.exhaustive = out.exhaustive;
                }
                Err(Error::BudgetExceeded {
                    lower,
                    upper,
                    witness,
                }) => {
                    cert.lower = lower;
                    cert.upper = cert.upper.min(upper);
                    cert.lower_witness = Some(LowerWitness::from_configuration(
                        &Configuration::new(witness),
                    ));
                    cert.exhaustive = false;
                }
                Err(e) => return Err(e),
            }
        }
    }
    cert.verdict = if cert.lower == cert.upper {
        Verdict::Exact
    } else {
        Verdict::Gap
    };
    Ok(cert)
}

/// The two doubling path strategies of the chain of squares glued at
/// opposite corners, rooted at the free corner of the first square.
///
/// Each path runs from the root through one side of every square to the far
/// cut vertex, so each total is `2^(2n) - 1` and together they certify the
/// chain's pebbling number `2^(2n)`.
pub fn para_chain_strategies(n: usize) -> Result<Vec<Strategy>> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "the chain needs at least one square".into(),
        ));
    }
    let order = 3 * n + 1;
    let mut high = vec![0usize];
    let mut low = vec![0usize];
    for j in 1..=n {
        high.extend([3 * j - 2, 3 * j - 1]);
        low.extend([3 * j, 3 * j - 1]);
    }
    Ok(vec![
        Strategy::from_path(order, &high)?,
        Strategy::from_path(order, &low)?,
    ])
}

/// Two strategies for the chain of squares glued at adjacent corners,
/// rooted at the corner of the first square opposite the first weld.
///
/// Each spine runs to the far corner of the last square — one along the
/// weld chain, one detouring through the last square's free corner — and
/// both drape weight 1 over the two free corners of every interior square.
/// Each total is `2^(n+2) - 1 + 2(n-2)`, and the pair certifies the chain's
/// pebbling number `2^(n+2) + 2n - 4`.
pub fn ortho_chain_strategies(n: usize) -> Result<Vec<Strategy>> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "the chain needs at least two squares".into(),
        ));
    }
    let order = 3 * n + 1;
    let root = 3;
    let mut spine_a = vec![root, 0];
    for j in 1..=n {
        spine_a.push(3 * j - 2);
    }
    spine_a.push(3 * n - 1);
    let mut spine_b = vec![root, 2];
    for j in 1..n {
        spine_b.push(3 * j - 2);
    }
    spine_b.extend([3 * n, 3 * n - 1]);
    let mut a = Strategy::from_path(order, &spine_a)?;
    let mut b = Strategy::from_path(order, &spine_b)?;
    for j in 2..n {
        for s in [&mut a, &mut b] {
            s.attach(3 * j - 1, 3 * j - 2, BigRational::one())?;
            s.attach(3 * j, 3 * j - 5, BigRational::one())?;
        }
    }
    Ok(vec![a, b])
}

/// A general-purpose strategy family for an arbitrary root: the
/// breadth-first tree with doubling weights, plus one basic path strategy
/// per maximal simple path from the root (deterministic order, capped).
///
/// The breadth-first strategy alone covers every vertex, so the linear
/// program is always bounded; the path strategies tighten it.
pub fn default_strategies(g: &Graph, r: usize) -> Result<Vec<Strategy>> {
    g.check_vertex(r)?;
    let order = g.order();
    if order == 1 {
        return Ok(Vec::new());
    }
    let dist = g.distances(r)?;
    let ecc = *dist.iter().max().expect("graph is nonempty");
    let mut bfs = Strategy::new(order, r)?;
    for v in 0..order {
        if v == r {
            continue;
        }
        let p = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| dist[u] + 1 == dist[v])
            .min()
            .expect("connected graph has a breadth-first parent");
        bfs.attach(v, p, pow2(ecc - dist[v]))?;
    }
    let mut out = vec![bfs];

    const PATH_CAP: usize = 512;
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if found.len() >= PATH_CAP {
            return;
        }
        let v = *path.last().expect("path starts at the root");
        let mut next: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !on_path[u])
            .collect();
        next.sort_unstable();
        if next.is_empty() {
            found.push(path.clone());
            return;
        }
        for u in next {
            path.push(u);
            on_path[u] = true;
            extend(g, path, on_path, found);
            on_path[u] = false;
            path.pop();
        }
    }
    let mut found = Vec::new();
    let mut on_path = vec![false; order];
    on_path[r] = true;
    extend(g, &mut vec![r], &mut on_path, &mut found);
    for path in found {
        out.push(Strategy::from_path(order, &path)?);
    }
    Ok(out)
}

fn serialize_rational<S: Serializer>(r: &BigRational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

fn deserialize_rational<'de, D: Deserializer<'de>>(
    de: D,
) -> std::result::Result<BigRational, D::Error> {
    let text = String::deserialize(de)?;
    text.parse()
        .map_err(|e| D::Error::custom(format!("invalid rational {text:?}: {e}")))
}

fn serialize_rationals<S: Serializer>(
    rs: &[BigRational],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<String> = rs.iter().map(ToString::to_string).collect();
    strings.serialize(ser)
}

fn deserialize_rationals<'de, D: Deserializer<'de>>(
    de: D,
) -> std::result::Result<Vec<BigRational>, D::Error> {
    let strings = Vec::<String>::deserialize(de)?;
    strings
        .iter()
        .map(|text| {
            text.parse()
                .map_err(|e| D::Error::custom(format!("invalid rational {text:?}: {e}")))
        })
        .collect()
}

/// Wire form of a strategy: tree edges plus the full weight vector as
/// exact-rational strings.
#[derive(Serialize, Deserialize)]
struct StrategyWire {
    root: usize,
    order: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<String>,
}

impl Serialize for Strategy {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let edges: Vec<(usize, usize)> = (0..self.order())
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
            .collect();
        StrategyWire {
            root: self.root,
            order: self.order(),
            edges,
            weights: self.weights.iter().map(ToString::to_string).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Strategy {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Strategy, D::Error> {
        let wire = StrategyWire::deserialize(de)?;
        if wire.root >= wire.order {
            return Err(D::Error::custom("strategy root is out of range"));
        }
        if wire.weights.len() != wire.order {
            return Err(D::Error::custom(
                "strategy weight vector length differs from the order",
            ));
        }
        let mut s = Strategy {
            root: wire.root,
            parent: vec![None; wire.order],
            weights: Vec::with_capacity(wire.order),
        };
        for text in &wire.weights {
            s.weights.push(
                text.parse()
                    .map_err(|e| D::Error::custom(format!("invalid rational {text:?}: {e}")))?,
            );
        }
        for (p, v) in wire.edges {
            if p >= wire.order || v >= wire.order {
                return Err(D::Error::custom("strategy edge endpoint is out of range"));
            }
            if v == wire.root {
                return Err(D::Error::custom("strategy root cannot have a parent"));
            }
            if s.parent[v].is_some() {
                return Err(D::Error::custom(format!("vertex {v} has two parents")));
            }
            s.parent[v] = Some(p);
        }
        Ok(s)
    }
}
