//! Undirected multigraphs with aggregated edge multiplicities.
//!
//! Parallel edges between `u` and `v` are stored once as `(u, v, mult)`.
//! Loops are rejected. Every operation returns a fresh value.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Edge multiplicity.
pub type Mult = u64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    // keyed by (min, max)
    edges: BTreeMap<(usize, usize), Mult>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: BTreeMap::new() }
    }

    /// Builds a graph from an edge list, rejecting loops, zero multiplicities
    /// and repeated unordered pairs.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, Mult)>) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for (u, v, m) in edges {
            g.check_pair(u, v)?;
            if m == 0 {
                return Err(Error::ZeroMultiplicity(u, v));
            }
            if g.edges.insert(ordered(u, v), m).is_some() {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// Appends a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Adds `mult` parallel copies of `uv`, merging with any existing copies.
    pub fn add_edge(&mut self, u: usize, v: usize, mult: Mult) -> Result<()> {
        self.check_pair(u, v)?;
        if mult == 0 {
            return Err(Error::ZeroMultiplicity(u, v));
        }
        *self.edges.entry(ordered(u, v)).or_insert(0) += mult;
        Ok(())
    }

    /// Hangs `count` new pendant vertices on `v`.
    pub fn add_pendants(&mut self, v: usize, count: u64) -> Result<()> {
        for _ in 0..count {
            let p = self.add_vertex();
            self.add_edge(v, p, 1)?;
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Stored edges as `(u, v, mult)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Mult)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> Mult {
        self.edges.get(&ordered(u, v)).copied().unwrap_or(0)
    }

    /// Number of distinct adjacent pairs.
    pub fn simple_edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn total_multiplicity(&self) -> Mult {
        self.edges.values().sum()
    }

    /// Neighbour lists with multiplicities, each sorted by neighbour id.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Mult)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (&(u, v), &m) in &self.edges {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Removes one parallel copy of `uv`.
    pub fn delete_edge_copy(&self, u: usize, v: usize) -> Result<Multigraph> {
        let key = ordered(u, v);
        let mut g = self.clone();
        match g.edges.get_mut(&key) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                g.edges.remove(&key);
            }
            None => return Err(Error::MissingEdge(u, v)),
        }
        Ok(g)
    }

    /// Induced subgraph on the vertices not in `vs`, re-indexed densely in
    /// increasing order of the surviving ids.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Multigraph> {
        let removed: BTreeSet<usize> = vs.iter().copied().collect();
        if let Some(&bad) = removed.iter().find(|&&v| v >= self.n) {
            return Err(Error::UnknownVertex(bad));
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on `keep` (ascending), relabelled to `0..keep.len()`.
    fn induced(&self, keep: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(&(u, v), _)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(&(u, v), &m)| (ordered(index[u], index[v]), m))
            .collect();
        Multigraph { n: keep.len(), edges }
    }

    /// Connected-component label of every vertex, labels numbered in order
    /// of first appearance.
    fn component_labels(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(y, _) in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// Connected components (isolated vertices included), ordered by their
    /// smallest vertex id. Each component keeps the relative vertex order.
    pub fn components(&self) -> Vec<Multigraph> {
        let (label, count) = self.component_labels();
        let mut members = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            members[c].push(v);
        }
        members.iter().map(|keep| self.induced(keep)).collect()
    }

    /// An edge on a cycle of the underlying simple graph, or `None` when that
    /// graph is a forest. Parallel copies do not form cycles here.
    pub fn underlying_cycle_edge(&self) -> Option<(usize, usize)> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in self.edges.keys() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Some((u, v));
            }
            parent[ru] = rv;
        }
        None
    }

    pub fn is_forest(&self) -> bool {
        self.underlying_cycle_edge().is_none()
    }

    /// Memoisation key. Vertices are relabelled by a breadth-first traversal
    /// whose start and neighbour order are driven by degree data, and the key
    /// encodes the full relabelled edge list, so equal keys imply isomorphic
    /// graphs. Isomorphic graphs usually, but not always, share a key.
    pub fn canonical_key(&self) -> Vec<u8> {
        let adj = self.adjacency();
        let weight: Vec<(Mult, usize)> = adj.iter().map(|nb| (nb.iter().map(|&(_, m)| m).sum(), nb.len())).collect();
        let min_weight = weight.iter().min().copied();
        let starts: Vec<usize> = match min_weight {
            Some(w) => (0..self.n).filter(|&v| weight[v] == w).collect(),
            None => Vec::new(),
        };
        let mut best: Option<Vec<u8>> = None;
        for &s in &starts {
            let key = self.key_from_start(s, &adj, &weight);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap_or_else(|| self.encode(&[]))
    }

    fn key_from_start(&self, start: usize, adj: &[Vec<(usize, Mult)>], weight: &[(Mult, usize)]) -> Vec<u8> {
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        let mut restarts: Vec<usize> = (0..self.n).collect();
        restarts.sort_by_key(|&v| (weight[v], v));
        let mut next_restart = restarts.into_iter();
        let mut root = Some(start);
        while let Some(r) = root {
            seen[r] = true;
            let mut queue = VecDeque::from([r]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                let mut nb: Vec<(usize, Mult)> = adj[x].iter().copied().filter(|&(y, _)| !seen[y]).collect();
                nb.sort_by_key(|&(y, m)| (m, weight[y], y));
                for (y, _) in nb {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
            root = next_restart.by_ref().find(|&v| !seen[v]);
        }
        self.encode(&order)
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<(usize, usize, Mult)> = self
            .edges
            .iter()
            .map(|(&(u, v), &m)| {
                let (a, b) = ordered(pos[u], pos[v]);
                (a, b, m)
            })
            .collect();
        edges.sort_unstable();
        let mut key = Vec::with_capacity(8 + edges.len() * 24);
        key.extend_from_slice(&(self.n as u64).to_le_bytes());
        for (a, b, m) in edges {
            key.extend_from_slice(&(a as u64).to_le_bytes());
            key.extend_from_slice(&(b as u64).to_le_bytes());
            key.extend_from_slice(&m.to_le_bytes());
        }
        key
    }

    /// Serializes to the `hgraph 1` text format.
    pub fn to_hgraph(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hgraph 1");
        let _ = writeln!(out, "vertices {}", self.n);
        for (u, v, m) in self.edges() {
            let _ = writeln!(out, "e {u} {v} {m}");
        }
        out
    }

    /// Parses the `hgraph 1` text format. Blank lines are ignored.
    pub fn from_hgraph(text: &str) -> Result<Multigraph> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| Error::Parse(format!("hgraph line {line}: {msg}"));

        match lines.next() {
            Some((_, "hgraph 1")) => {}
            Some((i, _)) => return Err(err(i, "expected header `hgraph 1`")),
            None => return Err(Error::Parse("hgraph: empty input".into())),
        }
        let n = match lines.next() {
            Some((i, l)) => {
                let mut parts = l.split_whitespace();
                match (parts.next(), parts.next(), parts.next()) {
                    (Some("vertices"), Some(k), None) => k.parse::<usize>().map_err(|_| err(i, "bad vertex count"))?,
                    _ => return Err(err(i, "expected `vertices N`")),
                }
            }
            None => return Err(Error::Parse("hgraph: missing `vertices` line".into())),
        };
        let mut edges = Vec::new();
        for (i, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "e" {
                return Err(err(i, "expected `e U V M`"));
            }
            let num = |s: &str| s.parse::<u64>().map_err(|_| err(i, "bad integer"));
            let (u, v, m) = (num(parts[1])? as usize, num(parts[2])? as usize, num(parts[3])?);
            edges.push((u, v, m));
        }
        Multigraph::from_edges(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

    fn path(n: usize) -> Multigraph {
        Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i, 1))).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Multigraph::from_edges(2, [(0, 0, 1)]), Err(Error::SelfLoop(0)));
        assert_eq!(Multigraph::from_edges(2, [(0, 2, 1)]), Err(Error::UnknownVertex(2)));
        assert_eq!(Multigraph::from_edges(2, [(0, 1, 0)]), Err(Error::ZeroMultiplicity(0, 1)));
        assert_eq!(Multigraph::from_edges(2, [(0, 1, 1), (1, 0, 2)]), Err(Error::DuplicateEdge(1, 0)));
    }

    #[test]
    fn delete_edge_copy_cases() {
        let g = triangle().delete_edge_copy(0, 1).unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.total_multiplicity(), 2);
        assert!(g.is_forest());

        let d = Multigraph::from_edges(2, [(0, 1, 2)]).unwrap();
        let d1 = d.delete_edge_copy(1, 0).unwrap();
        assert_eq!(d1.multiplicity(0, 1), 1);
        assert_eq!(d1.delete_edge_copy(0, 1).unwrap().simple_edge_count(), 0);
        assert_eq!(path(3).delete_edge_copy(0, 2), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn delete_vertices_cases() {
        let g = path(3).delete_vertices(&[1]).unwrap();
        assert_eq!((g.n_vertices(), g.simple_edge_count()), (2, 0));

        let t = triangle().delete_vertices(&[0, 1]).unwrap();
        assert_eq!((t.n_vertices(), t.simple_edge_count()), (1, 0));

        assert_eq!(path(3).delete_vertices(&[5]), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn delete_vertices_reindexes_in_order() {
        let g = Multigraph::from_edges(4, [(0, 1, 1), (2, 3, 3), (1, 3, 2)]).unwrap();
        let h = g.delete_vertices(&[1]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2, 3)]);
    }

    #[test]
    fn components_cases() {
        let two = Multigraph::from_edges(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.n_vertices() == 2));
        assert_eq!(triangle().components().len(), 1);

        let spine_cut = path(7).delete_vertices(&[3]).unwrap();
        let sizes: usize = spine_cut.components().iter().map(|c| c.n_vertices()).sum();
        assert_eq!(sizes, 6);
        assert_eq!(Multigraph::new(3).components().len(), 3);
    }

    #[test]
    fn cycle_edge_detection() {
        let star = Multigraph::from_edges(4, [(0, 1, 3), (0, 2, 1), (0, 3, 2)]).unwrap();
        assert_eq!(star.underlying_cycle_edge(), None);
        assert!(triangle().underlying_cycle_edge().is_some());
    }

    #[test]
    fn canonical_key_relabelled_paths_collide() {
        let a = path(4);
        let b = Multigraph::from_edges(4, [(2, 0, 1), (0, 3, 1), (3, 1, 1)]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_eq!(
            path(5).delete_vertices(&[0]).unwrap().canonical_key(),
            path(5).delete_vertices(&[4]).unwrap().canonical_key()
        );

        let doubled = Multigraph::from_edges(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_ne!(a.canonical_key(), doubled.canonical_key());
    }

    #[test]
    fn hgraph_round_trip_and_errors() {
        let g = Multigraph::from_edges(3, [(0, 1, 2), (1, 2, 1)]).unwrap();
        let text = g.to_hgraph();
        assert_eq!(text, "hgraph 1\nvertices 3\ne 0 1 2\ne 1 2 1\n");
        assert_eq!(Multigraph::from_hgraph(&text).unwrap(), g);

        assert!(Multigraph::from_hgraph("hgraph 2\nvertices 1\n").is_err());
        assert!(Multigraph::from_hgraph("hgraph 1\nvertices 2\ne 0 1 0\n").is_err());
        assert!(Multigraph::from_hgraph("hgraph 1\nvertices 2\ne 1 1 1\n").is_err());
        assert!(Multigraph::from_hgraph("hgraph 1\nvertices 2\ne 0 1 1\ne 1 0 1\n").is_err());
        assert!(Multigraph::from_hgraph("hgraph 1\nvertices 2\ne 0 1\n").is_err());
    }
}
