//! Hosoya index (total number of matchings) computed straight from the graph.
//!
//! Two independent routes:
//!
//! * [`hosoya_by_definition`] enumerates every matching and sums `p(G, k)`.
//! * [`hosoya`] factors over components, runs a rooted tree DP on forests and
//!   otherwise splits on a cycle edge with `Z(G) = Z(G - e) + Z(G - {u, v})`,
//!   memoised per call on [`Multigraph::canonical_key`].
//!
//! Neither route looks at continued fractions, which is what makes them
//! usable as ground truth for the continued-fraction identities.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Enumeration is allowed when either bound holds.
pub const ENUM_MAX_VERTICES: usize = 16;
pub const ENUM_MAX_MULTIPLICITY: u64 = 24;
/// Upper bound on total multiplicity accepted by [`hosoya_trace`].
pub const TRACE_MAX_MULTIPLICITY: u64 = 40;

fn check_enum_guard(g: &Multigraph) -> Result<()> {
    if g.n_vertices() <= ENUM_MAX_VERTICES || g.total_multiplicity() <= ENUM_MAX_MULTIPLICITY {
        Ok(())
    } else {
        Err(Error::SizeLimit(format!(
            "{} vertices and total multiplicity {} exceed {} / {}",
            g.n_vertices(),
            g.total_multiplicity(),
            ENUM_MAX_VERTICES,
            ENUM_MAX_MULTIPLICITY
        )))
    }
}

/// `p(G, k)` for every `k`, by explicit enumeration of matchings. Each
/// matching of the underlying simple graph is weighted by the product of its
/// edge multiplicities, which counts parallel copies as distinct edges.
pub fn matching_polynomial(g: &Multigraph) -> Result<Vec<BigInt>> {
    check_enum_guard(g)?;
    let edges: Vec<(usize, usize, u64)> = g.edges().collect();
    let mut counts = vec![BigInt::zero(); g.n_vertices() / 2 + 1];
    let mut used = vec![false; g.n_vertices()];

    fn walk(
        edges: &[(usize, usize, u64)],
        from: usize,
        used: &mut [bool],
        size: usize,
        weight: &BigInt,
        counts: &mut [BigInt],
    ) {
        counts[size] += weight;
        for i in from..edges.len() {
            let (u, v, m) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            walk(edges, i + 1, used, size + 1, &(weight * m), counts);
            used[u] = false;
            used[v] = false;
        }
    }

    walk(&edges, 0, &mut used, 0, &BigInt::one(), &mut counts);
    while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
        counts.pop();
    }
    Ok(counts)
}

/// Number of `k`-edge matchings.
pub fn matching_count(g: &Multigraph, k: usize) -> Result<BigInt> {
    Ok(matching_polynomial(g)?.get(k).cloned().unwrap_or_default())
}

/// `Σ_k p(G, k)` by enumeration.
pub fn hosoya_by_definition(g: &Multigraph) -> Result<BigInt> {
    Ok(matching_polynomial(g)?.into_iter().sum())
}

/// Exact Hosoya index.
pub fn hosoya(g: &Multigraph) -> BigInt {
    Evaluator::new(false).eval(g)
}

/// Same value as [`hosoya`] but never takes the tree DP shortcut: every
/// component with an edge is split with the edge identity. Exponential in
/// general; meant for cross-checking the DP on small graphs.
pub fn hosoya_by_recursion(g: &Multigraph) -> BigInt {
    Evaluator::new(true).eval(g)
}

struct Evaluator {
    memo: HashMap<Vec<u8>, BigInt>,
    recursion_only: bool,
}

impl Evaluator {
    fn new(recursion_only: bool) -> Self {
        Evaluator { memo: HashMap::new(), recursion_only }
    }

    fn eval(&mut self, g: &Multigraph) -> BigInt {
        if g.simple_edge_count() == 0 {
            return BigInt::one();
        }
        if g.component_count() == 1 {
            return self.eval_connected(g);
        }
        g.components().iter().map(|c| self.eval_connected(c)).product()
    }

    fn eval_connected(&mut self, g: &Multigraph) -> BigInt {
        if g.simple_edge_count() == 0 {
            return BigInt::one();
        }
        let split =
            if self.recursion_only { g.edges().next().map(|(u, v, _)| (u, v)) } else { g.underlying_cycle_edge() };
        let Some((u, v)) = split else {
            return tree_dp(g);
        };
        let key = g.canonical_key();
        if let Some(z) = self.memo.get(&key) {
            return z.clone();
        }
        let without_edge = g.delete_edge_copy(u, v).expect("split edge exists");
        let without_ends = g.delete_vertices(&[u, v]).expect("split vertices exist");
        let z = self.eval(&without_edge) + self.eval(&without_ends);
        self.memo.insert(key, z.clone());
        z
    }
}

/// Rooted DP over a forest. For each vertex keeps the matchings of its
/// subtree that leave it free and all matchings of its subtree; a child `c`
/// joined by a `t`-fold bond updates
/// `all ← all·all(c) + t·free·free(c)` and `free ← free·all(c)`.
fn tree_dp(g: &Multigraph) -> BigInt {
    let n = g.n_vertices();
    let adj = g.adjacency();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut roots = Vec::new();
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        roots.push(r);
        let mut stack = vec![r];
        while let Some(x) = stack.pop() {
            order.push(x);
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
    }

    let mut all = vec![BigInt::one(); n];
    let mut free = vec![BigInt::one(); n];
    for &x in order.iter().rev() {
        let p = parent[x];
        if p == usize::MAX {
            continue;
        }
        let t = g.multiplicity(p, x);
        let new_all = &all[p] * &all[x] + &free[p] * &free[x] * t;
        let new_free = &free[p] * &all[x];
        all[p] = new_all;
        free[p] = new_free;
    }
    roots.iter().map(|&r| all[r].clone()).product()
}

/// One step of a Hosoya derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// No edges: only the empty matching.
    Edgeless,
    /// Product over connected components.
    Components(Vec<Trace>),
    /// `Z(G) = Z(G - e) + Z(G - {u, v})` on one copy of `uv`.
    EdgeSplit { u: usize, v: usize, without_edge: Box<Trace>, without_ends: Box<Trace> },
}

/// A derivation tree together with the value it proves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub value: BigInt,
    pub n_vertices: usize,
    pub total_multiplicity: u64,
    pub step: Step,
}

impl Trace {
    /// Recomputes the value from the leaves up, ignoring stored values.
    pub fn replay(&self) -> BigInt {
        match &self.step {
            Step::Edgeless => BigInt::one(),
            Step::Components(parts) => parts.iter().map(Trace::replay).product(),
            Step::EdgeSplit { without_edge, without_ends, .. } => without_edge.replay() + without_ends.replay(),
        }
    }

    pub fn count_splits(&self) -> usize {
        match &self.step {
            Step::Edgeless => 0,
            Step::Components(parts) => parts.iter().map(Trace::count_splits).sum(),
            Step::EdgeSplit { without_edge, without_ends, .. } => {
                1 + without_edge.count_splits() + without_ends.count_splits()
            }
        }
    }

    pub fn has_factorization(&self) -> bool {
        match &self.step {
            Step::Edgeless => false,
            Step::Components(_) => true,
            Step::EdgeSplit { without_edge, without_ends, .. } => {
                without_edge.has_factorization() || without_ends.has_factorization()
            }
        }
    }

    /// Indented text outline, two spaces per level.
    pub fn outline(&self) -> String {
        let mut out = String::new();
        self.write_outline(&mut out, 0, "G");
        out
    }

    fn write_outline(&self, out: &mut String, depth: usize, label: &str) {
        let pad = "  ".repeat(depth);
        let size = format!("[{} vertices, {} edges]", self.n_vertices, self.total_multiplicity);
        match &self.step {
            Step::Edgeless => {
                let _ = writeln!(out, "{pad}{label}: Z = 1 edgeless {size}");
            }
            Step::Components(parts) => {
                let _ = writeln!(out, "{pad}{label}: Z = {} product of {} components {size}", self.value, parts.len());
                for (i, p) in parts.iter().enumerate() {
                    p.write_outline(out, depth + 1, &format!("component {}", i + 1));
                }
            }
            Step::EdgeSplit { u, v, without_edge, without_ends } => {
                let _ = writeln!(out, "{pad}{label}: Z = {} split on edge ({u},{v}) {size}", self.value);
                without_edge.write_outline(out, depth + 1, "G-e");
                without_ends.write_outline(out, depth + 1, "G-{u,v}");
            }
        }
    }
}

/// Hosoya index with the full tree of deletion and factorization steps.
pub fn hosoya_trace(g: &Multigraph) -> Result<(BigInt, Trace)> {
    if g.total_multiplicity() > TRACE_MAX_MULTIPLICITY {
        return Err(Error::SizeLimit(format!(
            "trace needs total multiplicity <= {TRACE_MAX_MULTIPLICITY}, got {}",
            g.total_multiplicity()
        )));
    }
    let t = trace(g);
    Ok((t.value.clone(), t))
}

fn trace(g: &Multigraph) -> Trace {
    let leaf = |g: &Multigraph, value: BigInt, step: Step| Trace {
        value,
        n_vertices: g.n_vertices(),
        total_multiplicity: g.total_multiplicity(),
        step,
    };
    if g.simple_edge_count() == 0 {
        return leaf(g, BigInt::one(), Step::Edgeless);
    }
    if g.component_count() > 1 {
        let parts: Vec<Trace> = g.components().iter().map(trace).collect();
        let value = parts.iter().map(|p| p.value.clone()).product();
        return leaf(g, value, Step::Components(parts));
    }
    let (u, v) = g.underlying_cycle_edge().unwrap_or_else(|| balanced_edge(g));
    let without_edge = trace(&g.delete_edge_copy(u, v).expect("edge exists"));
    let without_ends = trace(&g.delete_vertices(&[u, v]).expect("vertices exist"));
    let value = &without_edge.value + &without_ends.value;
    leaf(g, value, Step::EdgeSplit { u, v, without_edge: Box::new(without_edge), without_ends: Box::new(without_ends) })
}

/// Edge of a tree whose removal leaves the smallest larger side.
fn balanced_edge(g: &Multigraph) -> (usize, usize) {
    let n = g.n_vertices();
    let adj = g.adjacency();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &(y, _) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                order.push(y);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &x in order.iter().rev() {
        if parent[x] != usize::MAX {
            size[parent[x]] += size[x];
        }
    }
    order
        .iter()
        .skip(1)
        .map(|&x| (size[x].max(n - size[x]), parent[x].min(x), parent[x].max(x)))
        .min()
        .map(|(_, a, b)| (a, b))
        .expect("connected component with an edge")
}
