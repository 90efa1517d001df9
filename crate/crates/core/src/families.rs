//! Graph families and their continued-fraction transforms.
//!
//! * `S_n`, `C_n`: paths and cycles.
//! * `D_n(x; y)`: caterpillar-bond graphs. Spine vertex `i` carries `x_i − 1`
//!   pendants and spine edge `i` is a `y_i`-fold bond.
//! * `C_{n,a,b}`: cycles with `a` pendants per vertex and `b`-fold ring edges.
//! * `U_{n,m}^{(r,s)}`: even rings alternating `r`- and `s`-fold bonds with
//!   `m` pendants per ring vertex.
//! * radial and branched trees built from a [`TreeCFSpec`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::contfrac::{GeneralCF, TreeCFSpec};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

pub fn path_graph(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(param("path needs n >= 1"));
    }
    Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i, 1)))
}

pub fn cycle_graph(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(param("cycle needs n >= 3"));
    }
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, 1)))
}

/// Parameters of `D_n(x_1..x_n; y_1..y_{n−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarBondParams {
    pub xs: Vec<u64>,
    pub ys: Vec<u64>,
}

impl CaterpillarBondParams {
    pub fn new(xs: Vec<u64>, ys: Vec<u64>) -> Result<Self> {
        if xs.is_empty() {
            return Err(param("caterpillar-bond graph needs at least one spine vertex"));
        }
        if ys.len() + 1 != xs.len() {
            return Err(param(format!("expected {} bond entries, got {}", xs.len() - 1, ys.len())));
        }
        if xs.iter().chain(&ys).any(|&v| v == 0) {
            return Err(param("caterpillar-bond entries must be positive"));
        }
        Ok(CaterpillarBondParams { xs, ys })
    }

    pub fn spine_len(&self) -> usize {
        self.xs.len()
    }

    /// `x_1 + y_1/(x_2 + y_2/(… + y_{n−1}/x_n))`.
    pub fn to_cf(&self) -> GeneralCF {
        GeneralCF { a0: self.xs[0], terms: self.ys.iter().copied().zip(self.xs[1..].iter().copied()).collect() }
    }
}

impl fmt::Display for CaterpillarBondParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "D_{}({};{})", self.xs.len(), join(&self.xs), join(&self.ys))
    }
}

/// Spine vertices are `0..n`; pendants follow.
pub fn caterpillar_bond(params: &CaterpillarBondParams) -> Result<Multigraph> {
    let n = params.spine_len();
    let mut g = Multigraph::new(n);
    for (i, &y) in params.ys.iter().enumerate() {
        g.add_edge(i, i + 1, y)?;
    }
    for (i, &x) in params.xs.iter().enumerate() {
        g.add_pendants(i, x - 1)?;
    }
    Ok(g)
}

/// `C_n ↦ D_{n−1}(1,…,1,2; 2,1,…,1)`.
pub fn cycle_to_caterpillar_bond(n: usize) -> Result<CaterpillarBondParams> {
    if n < 3 {
        return Err(param("cycle transform needs n >= 3"));
    }
    let mut xs = vec![1; n - 1];
    xs[n - 2] = 2;
    let mut ys = vec![1; n - 2];
    ys[0] = 2;
    CaterpillarBondParams::new(xs, ys)
}

/// `C_{n,a,b}`: ring vertices `0..n`, pendants after.
pub fn comb_cyclic(n: usize, a: u64, b: u64) -> Result<Multigraph> {
    if n < 3 || b < 1 {
        return Err(param("comb needs n >= 3 and b >= 1"));
    }
    let mut g = Multigraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n, b)?;
    }
    for i in 0..n {
        g.add_pendants(i, a)?;
    }
    Ok(g)
}

/// `CV_n`, the comb with two branches per ring vertex and single bonds.
pub fn cv_graph(n: usize) -> Result<Multigraph> {
    comb_cyclic(n, 2, 1)
}

/// `C_{n,a,b} ↦ D_n(a+1,…,a+1; 2b, b,…,b)`.
pub fn comb_to_caterpillar_bond(n: usize, a: u64, b: u64) -> Result<CaterpillarBondParams> {
    if n < 3 || b < 1 {
        return Err(param("comb transform needs n >= 3 and b >= 1"));
    }
    let mut ys = vec![b; n - 1];
    ys[0] = 2 * b;
    CaterpillarBondParams::new(vec![a + 1; n], ys)
}

/// Parameters of `U_{n,m}^{(r,s)}`; `M = (m+1)² + r + s` is derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingParams {
    n: u64,
    m: u64,
    r: u64,
    s: u64,
}

impl RingParams {
    pub fn new(n: u64, m: u64, r: u64, s: u64) -> Result<Self> {
        if n < 1 || r < 1 || s < 1 {
            return Err(param("ring needs n, r, s >= 1"));
        }
        Ok(RingParams { n, m, r, s })
    }

    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn s(&self) -> u64 {
        self.s
    }

    #[allow(non_snake_case)]
    pub fn M(&self) -> u64 {
        (self.m + 1) * (self.m + 1) + self.r + self.s
    }

    pub fn rs(&self) -> u64 {
        self.r * self.s
    }

    pub fn with_n(&self, n: u64) -> Result<Self> {
        RingParams::new(n, self.m, self.r, self.s)
    }

    pub fn swapped(&self) -> Self {
        RingParams { r: self.s, s: self.r, ..*self }
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U_{{{},{}}}^({},{})", self.n, self.m, self.r, self.s)
    }
}

/// Ring vertices `0..2n` with edge `i → i+1` of multiplicity `r` for even `i`
/// and `s` for odd `i`; pendants follow. For `n = 1` the two ring vertices
/// share a single `(r+s)`-fold bond.
pub fn ring_graph(params: &RingParams) -> Result<Multigraph> {
    let ring = 2 * params.n as usize;
    let mut g = Multigraph::new(ring);
    if params.n == 1 {
        g.add_edge(0, 1, params.r + params.s)?;
    } else {
        for i in 0..ring {
            g.add_edge(i, (i + 1) % ring, if i % 2 == 0 { params.r } else { params.s })?;
        }
    }
    for i in 0..ring {
        g.add_pendants(i, params.m)?;
    }
    Ok(g)
}

/// `u_0 … u_{count−1}` with `u_0 = 2`, `u_1 = M`, `u_k = M u_{k−1} − rs u_{k−2}`.
pub fn ring_sequence(params: &RingParams, count: usize) -> Vec<BigInt> {
    let (m_value, rs) = (params.M(), params.rs());
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let next = match k {
            0 => BigInt::from(2u32),
            1 => BigInt::from(m_value),
            _ => &out[k - 1] * m_value - &out[k - 2] * rs,
        };
        out.push(next);
    }
    out
}

/// `u_n = α^n + β^n` for the roots of `x² − Mx + rs`, computed by the
/// power-sum recurrence. The ring size in `params` is ignored.
pub fn ring_hosoya_closed(params: &RingParams, n: u64) -> BigInt {
    ring_sequence(params, n as usize + 1).pop().expect("non-empty")
}

/// The two caterpillar-bond pieces of the ring after removing the `s`-fold
/// bond one copy at a time: `Z(U) = Z(f-part) + s·Z(g-part)`.
pub fn ring_decomposition_parts(params: &RingParams) -> Result<(CaterpillarBondParams, CaterpillarBondParams)> {
    let n = params.n as usize;
    if n < 2 {
        return Err(param("ring decomposition needs n >= 2"));
    }
    let x = params.m + 1;
    let alternate = |len: usize, first: u64, second: u64| -> Vec<u64> {
        (0..len).map(|i| if i % 2 == 0 { first } else { second }).collect()
    };
    let f_part = CaterpillarBondParams::new(vec![x; 2 * n], alternate(2 * n - 1, params.r, params.s))?;
    let g_part = CaterpillarBondParams::new(vec![x; 2 * n - 2], alternate(2 * n - 3, params.s, params.r))?;
    Ok((f_part, g_part))
}

/// Caterpillar-bond graph of the positive continued fraction equivalent to
/// the ring's negative one (valid when `M > 2rs`, `n ≥ 2`).
pub fn converted_ring_caterpillar(params: &RingParams) -> Result<CaterpillarBondParams> {
    let cf = crate::contfrac::negative_to_positive(params.M(), params.rs(), params.n)?;
    let mut xs = vec![cf.a0];
    let mut ys = Vec::new();
    for (b, a) in cf.terms {
        ys.push(b);
        xs.push(a);
    }
    CaterpillarBondParams::new(xs, ys)
}

/// Root gets `pendants` pendant vertices; each child `(b, c)` hangs the tree
/// of `c` from the root by a `b`-fold bond. The root is vertex 0.
pub fn tree_of_spec(spec: &TreeCFSpec) -> Result<Multigraph> {
    let mut g = Multigraph::new(1);
    attach(&mut g, 0, spec)?;
    Ok(g)
}

fn attach(g: &mut Multigraph, at: usize, spec: &TreeCFSpec) -> Result<()> {
    g.add_pendants(at, spec.pendants)?;
    for (b, child) in &spec.children {
        let c = g.add_vertex();
        g.add_edge(at, c, *b)?;
        attach(g, c, child)?;
    }
    Ok(())
}

pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0u32), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn lucas(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2u32), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// A named integer sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    pub name: String,
    pub values: Vec<BigInt>,
}

impl SequencePair {
    pub fn fibonacci(count: usize) -> Self {
        SequencePair { name: "F".into(), values: (0..count).map(fibonacci).collect() }
    }

    pub fn lucas(count: usize) -> Self {
        SequencePair { name: "L".into(), values: (0..count).map(lucas).collect() }
    }

    pub fn ring(params: &RingParams, count: usize) -> Self {
        SequencePair {
            name: format!("u[m={},r={},s={}]", params.m(), params.r(), params.s()),
            values: ring_sequence(params, count),
        }
    }

    /// True when every term from index 2 on equals `c1·t_{k−1} + c2·t_{k−2}`.
    pub fn satisfies(&self, c1: i64, c2: i64) -> bool {
        self.values.windows(3).all(|w| w[2] == &w[1] * c1 + &w[0] * c2)
    }
}

/// Carbon skeleton of naphthalene with its five drawn double bonds.
pub fn naphthalene_fixture() -> Multigraph {
    // 0 1: top pair; 2 3 4: upper row; 5 6 7: lower row; 8 9: bottom pair.
    // 3 and 6 are the fusion carbons.
    Multigraph::from_edges(
        10,
        [
            (0, 2, 2),
            (0, 3, 1),
            (1, 3, 1),
            (1, 4, 2),
            (2, 5, 1),
            (3, 6, 2),
            (4, 7, 1),
            (5, 8, 2),
            (6, 8, 1),
            (6, 9, 1),
            (7, 9, 2),
        ],
    )
    .expect("fixture is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::convergents;
    use crate::oracle::hosoya;

    fn z(g: &Multigraph) -> BigInt {
        hosoya(g)
    }

    fn p_last(c: &CaterpillarBondParams) -> BigInt {
        convergents(&c.to_cf()).pop().unwrap().p
    }

    #[test]
    fn paths_and_cycles() {
        let p1 = path_graph(1).unwrap();
        assert_eq!((p1.n_vertices(), p1.simple_edge_count()), (1, 0));
        assert_eq!(z(&p1), BigInt::from(1));
        assert_eq!(z(&path_graph(10).unwrap()), BigInt::from(89));
        assert_eq!(z(&cycle_graph(6).unwrap()), BigInt::from(18));
        assert!(path_graph(0).is_err());
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        let d5 = CaterpillarBondParams::new(vec![1, 1, 1, 1, 2], vec![2, 1, 1, 1]).unwrap();
        assert_eq!(z(&caterpillar_bond(&d5).unwrap()), BigInt::from(18));
        let d1 = CaterpillarBondParams::new(vec![5], vec![]).unwrap();
        assert_eq!(z(&caterpillar_bond(&d1).unwrap()), BigInt::from(5));
        let d4 = CaterpillarBondParams::new(vec![4, 4, 4, 4], vec![6, 3, 3]).unwrap();
        let g = caterpillar_bond(&d4).unwrap();
        assert_eq!(g.n_vertices(), 16);
        assert_eq!(z(&g), BigInt::from(466));
        assert_eq!(p_last(&d4), BigInt::from(466));
        assert!(CaterpillarBondParams::new(vec![1, 2], vec![]).is_err());
        assert!(CaterpillarBondParams::new(vec![1, 0], vec![1]).is_err());
    }

    #[test]
    fn cycle_transform_examples() {
        assert_eq!(cycle_to_caterpillar_bond(6).unwrap().to_string(), "D_5(1,1,1,1,2;2,1,1,1)");
        let d2 = cycle_to_caterpillar_bond(3).unwrap();
        assert_eq!(d2.to_string(), "D_2(1,2;2)");
        assert_eq!(p_last(&d2), BigInt::from(4));
        assert_eq!(p_last(&cycle_to_caterpillar_bond(4).unwrap()), BigInt::from(7));
        assert!(cycle_to_caterpillar_bond(2).is_err());
    }

    #[test]
    fn comb_examples() {
        assert_eq!(z(&comb_cyclic(4, 3, 3).unwrap()), BigInt::from(466));
        assert_eq!(comb_cyclic(5, 0, 1).unwrap(), cycle_graph(5).unwrap());
        assert_eq!(z(&cv_graph(4).unwrap()), BigInt::from(119));
        assert_eq!(comb_to_caterpillar_bond(4, 3, 3).unwrap().to_string(), "D_4(4,4,4,4;6,3,3)");
        assert_eq!(comb_to_caterpillar_bond(4, 2, 1).unwrap().to_string(), "D_4(3,3,3,3;2,1,1)");
        let degenerate = comb_to_caterpillar_bond(7, 0, 1).unwrap();
        assert_eq!(degenerate.spine_len(), 7);
        assert_eq!(p_last(&degenerate), lucas(7));
        assert!(comb_cyclic(2, 1, 1).is_err());
    }

    #[test]
    fn ring_examples() {
        let benzene = RingParams::new(3, 1, 2, 1).unwrap();
        assert_eq!(benzene.M(), 7);
        let g = ring_graph(&benzene).unwrap();
        assert_eq!(g.n_vertices(), 12);
        assert_eq!(z(&g), BigInt::from(301));
        for (m, r, s) in [(0, 1, 1), (2, 3, 1), (1, 4, 2)] {
            let p = RingParams::new(1, m, r, s).unwrap();
            assert_eq!(z(&ring_graph(&p).unwrap()), BigInt::from(p.M()));
        }
        let u = RingParams::new(2, 3, 1, 5).unwrap();
        assert_eq!(z(&ring_graph(&u).unwrap()), BigInt::from(474));
        assert!(RingParams::new(0, 1, 1, 1).is_err());
        assert!(RingParams::new(1, 1, 0, 1).is_err());
    }

    #[test]
    fn closed_form() {
        let benzene = RingParams::new(3, 1, 2, 1).unwrap();
        assert_eq!(ring_hosoya_closed(&benzene, 3), BigInt::from(301));
        assert_eq!(ring_hosoya_closed(&benzene, 0), BigInt::from(2));
        let a056236 = RingParams::new(1, 0, 1, 2).unwrap();
        let got: Vec<String> = (1..=10).map(|n| ring_hosoya_closed(&a056236, n).to_string()).collect();
        assert_eq!(got, ["4", "12", "40", "136", "464", "1584", "5408", "18464", "63040", "215232"]);
    }

    #[test]
    fn decomposition_examples() {
        let benzene = RingParams::new(3, 1, 2, 1).unwrap();
        let (f, g) = ring_decomposition_parts(&benzene).unwrap();
        assert_eq!(f.to_string(), "D_6(2,2,2,2,2,2;2,1,2,1,2)");
        assert_eq!(g.to_string(), "D_4(2,2,2,2;1,2,1)");
        assert_eq!(p_last(&f) + p_last(&g) * benzene.s(), BigInt::from(301));

        let small = RingParams::new(2, 0, 1, 2).unwrap();
        let (f, g) = ring_decomposition_parts(&small).unwrap();
        assert_eq!(f.to_string(), "D_4(1,1,1,1;1,2,1)");
        assert_eq!(g.to_string(), "D_2(1,1;2)");
        assert_eq!(p_last(&f), BigInt::from(6));
        assert_eq!(p_last(&g), BigInt::from(3));
        assert!(ring_decomposition_parts(&RingParams::new(1, 0, 1, 2).unwrap()).is_err());
    }

    #[test]
    fn tree_builder() {
        assert_eq!(tree_of_spec(&TreeCFSpec::leaf(0)).unwrap().n_vertices(), 1);
        let part = GeneralCF::new(2, vec![(2, 3), (3, 3)]).unwrap().to_tree_spec();
        let g = tree_of_spec(&part).unwrap();
        assert_eq!(g.n_vertices(), 8);
        assert_eq!(z(&g), BigInt::from(30));
    }

    #[test]
    fn sequences() {
        assert_eq!(fibonacci(11), BigInt::from(89));
        assert_eq!(fibonacci(0), BigInt::from(0));
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(6), BigInt::from(18));
        assert!(SequencePair::fibonacci(30).satisfies(1, 1));
        assert!(SequencePair::lucas(30).satisfies(1, 1));
        let p = RingParams::new(1, 1, 2, 1).unwrap();
        assert!(SequencePair::ring(&p, 12).satisfies(7, -2));
    }

    #[test]
    fn naphthalene_shape() {
        let g = naphthalene_fixture();
        assert_eq!(g.n_vertices(), 10);
        assert_eq!(g.total_multiplicity(), 16);
        assert_eq!(g.simple_edge_count(), 11);
        assert_eq!(g.component_count(), 1);
    }
}
