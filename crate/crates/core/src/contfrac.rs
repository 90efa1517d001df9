//! Finite continued fractions: generalized, negative (backward), branched and
//! multidimensional. Everything is evaluated with [`FormalFraction`], so the
//! numerators that come out are the unreduced convergent numerators.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigrat::FormalFraction;
use crate::error::{Error, Result};

/// `a0 + b1/(a1 + b2/(a2 + … + bn/an))` with every entry a positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneralCF {
    pub a0: u64,
    /// `(b_i, a_i)` for `i = 1..=n`.
    #[serde(default)]
    pub terms: Vec<(u64, u64)>,
}

impl GeneralCF {
    pub fn new(a0: u64, terms: Vec<(u64, u64)>) -> Result<Self> {
        let cf = GeneralCF { a0, terms };
        cf.validate()?;
        Ok(cf)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a0 == 0 {
            return Err(Error::Parameter("a0 must be positive".into()));
        }
        if let Some(i) = self.terms.iter().position(|&(b, a)| b == 0 || a == 0) {
            return Err(Error::Parameter(format!("term {} has a zero entry", i + 1)));
        }
        Ok(())
    }

    pub fn depth(&self) -> usize {
        self.terms.len()
    }

    /// The chain-shaped [`TreeCFSpec`] with the same value: each entry `a`
    /// becomes a node with `a - 1` pendants.
    pub fn to_tree_spec(&self) -> TreeCFSpec {
        let mut node = TreeCFSpec::leaf(self.terms.last().map_or(self.a0, |&(_, a)| a) - 1);
        for i in (0..self.terms.len()).rev() {
            let a_prev = if i == 0 { self.a0 } else { self.terms[i - 1].1 };
            node = TreeCFSpec { pendants: a_prev - 1, children: vec![(self.terms[i].0, node)] };
        }
        node
    }
}

/// Convergent pair `p_n / q_n`, not reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub p: BigInt,
    pub q: BigInt,
}

impl Convergent {
    pub fn to_fraction(&self) -> FormalFraction {
        FormalFraction::new(self.p.clone(), self.q.clone()).expect("positive denominator")
    }
}

impl std::fmt::Display for Convergent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// All convergents `(p_0, q_0) … (p_n, q_n)` from
/// `p_k = a_k p_{k-1} + b_k p_{k-2}` and the same for `q`, seeded with
/// `p_{-1} = 1, q_{-1} = 0`.
pub fn convergents(cf: &GeneralCF) -> Vec<Convergent> {
    let mut out = Vec::with_capacity(cf.terms.len() + 1);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (BigInt::from(cf.a0), BigInt::one());
    out.push(Convergent { p: p.clone(), q: q.clone() });
    for &(b, a) in &cf.terms {
        let p_next = &p * a + &p_prev * b;
        let q_next = &q * a + &q_prev * b;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push(Convergent { p: p.clone(), q: q.clone() });
    }
    out
}

/// Folds from the innermost entry outward with formal arithmetic.
pub fn eval_bottom_up(cf: &GeneralCF) -> Result<FormalFraction> {
    let mut value = FormalFraction::from_int(cf.terms.last().map_or(cf.a0, |&(_, a)| a));
    for i in (0..cf.terms.len()).rev() {
        let a_prev = if i == 0 { cf.a0 } else { cf.terms[i - 1].1 };
        value = FormalFraction::from_int(a_prev).add(&value.int_over(cf.terms[i].0)?);
    }
    Ok(value)
}

/// `M − rs/(M − rs/(… − rs/(M − M/2)))` with `n` occurrences of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NegativeCF {
    #[serde(rename = "M")]
    pub m_value: u64,
    pub rs: u64,
    pub n: u64,
}

impl NegativeCF {
    pub fn validate(&self) -> Result<()> {
        if self.m_value == 0 || self.rs == 0 || self.n == 0 {
            return Err(Error::Parameter("negative CF needs M, rs, n >= 1".into()));
        }
        Ok(())
    }

    pub fn eval(&self) -> Convergent {
        eval_negative_ring_cf(self.m_value, self.rs, self.n)
    }
}

/// `(u_n, u_{n-1})` from `u_k = M u_{k-1} − rs u_{k-2}`, `u_0 = 2`, `u_1 = M`.
/// The pair is the raw recurrence; it stays positive whenever `M² > 4rs`.
///
/// Panics when `n == 0`; the fraction has at least one `M`.
pub fn eval_negative_ring_cf(m_value: u64, rs: u64, n: u64) -> Convergent {
    assert!(n >= 1, "negative ring CF needs n >= 1");
    let (mut prev, mut cur) = (BigInt::from(2u32), BigInt::from(m_value));
    for _ in 1..n {
        let next = &cur * m_value - &prev * rs;
        prev = std::mem::replace(&mut cur, next);
    }
    Convergent { p: cur, q: prev }
}

/// The same negative continued fraction folded bottom-up with formal
/// subtraction, starting from `M − M/2`.
pub fn eval_negative_formal(m_value: u64, rs: u64, n: u64) -> Result<FormalFraction> {
    if n == 0 {
        return Err(Error::Parameter("negative CF needs n >= 1".into()));
    }
    let head = FormalFraction::from_int(m_value);
    let mut value = head.sub(&FormalFraction::new(m_value, 2u32)?);
    for _ in 1..n {
        value = head.sub(&value.int_over(rs)?);
    }
    Ok(value)
}

/// Positive continued fraction equal to `u_n / u_{n-1}` when `M > 2rs`:
/// `M−1 + 1/1 + rs/(M−rs−1) + 1/1 + … + 1/1 + 2rs/(M−2rs)` with `2n − 3`
/// alternating middle terms.
pub fn negative_to_positive(m_value: u64, rs: u64, n: u64) -> Result<GeneralCF> {
    if n < 2 {
        return Err(Error::Parameter(format!("conversion needs n >= 2, got {n}")));
    }
    if m_value <= 2 * rs {
        return Err(Error::Parameter(format!("conversion needs M > 2rs, got M={m_value}, rs={rs}")));
    }
    let mut terms = Vec::with_capacity(2 * n as usize - 2);
    for i in 0..(2 * n - 3) {
        terms.push(if i % 2 == 0 { (1, 1) } else { (rs, m_value - rs - 1) });
    }
    terms.push((2 * rs, m_value - 2 * rs));
    GeneralCF::new(m_value - 1, terms)
}

/// Branched / multidimensional continued fraction. The value of a node is
/// `(pendants + 1) + Σ_j b_j / value(child_j)`, summed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeCFSpec {
    pub pendants: u64,
    #[serde(default)]
    pub children: Vec<(u64, TreeCFSpec)>,
}

impl TreeCFSpec {
    pub fn leaf(pendants: u64) -> Self {
        TreeCFSpec { pendants, children: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        for (b, child) in &self.children {
            if *b == 0 {
                return Err(Error::Parameter("tree CF bond multiplicity must be positive".into()));
            }
            child.validate()?;
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|(_, c)| c.node_count()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        self.children.iter().map(|(_, c)| 1 + c.depth()).max().unwrap_or(0)
    }
}

pub fn eval_tree_cf(spec: &TreeCFSpec) -> Result<FormalFraction> {
    let mut value = FormalFraction::from_int(spec.pendants + 1);
    for (b, child) in &spec.children {
        value = value.add(&eval_tree_cf(child)?.int_over(*b)?);
    }
    Ok(value)
}

/// An entry `A_i` of a radial part: a plain integer or a nested branched CF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailEntry {
    Int(u64),
    Tree(TreeCFSpec),
}

impl TailEntry {
    fn to_spec(&self) -> Result<TreeCFSpec> {
        match self {
            TailEntry::Int(0) => Err(Error::Parameter("radial entry must be positive".into())),
            TailEntry::Int(a) => Ok(TreeCFSpec::leaf(a - 1)),
            TailEntry::Tree(t) => Ok(t.clone()),
        }
    }
}

/// Tree spec of the `m`-fold radial graph whose parts are
/// `a0 + b_1/A_1 + b_2/A_2 + … + b_n/A_n` glued at the `a0` vertex.
pub fn radial_spec(m: u64, a0: u64, tail: &[(u64, TailEntry)]) -> Result<TreeCFSpec> {
    if m == 0 || a0 == 0 {
        return Err(Error::Parameter("radial CF needs m >= 1 and a0 >= 1".into()));
    }
    let mut chain: Option<TreeCFSpec> = None;
    for (i, (_, entry)) in tail.iter().enumerate().rev() {
        let mut node = entry.to_spec()?;
        if let Some(next) = chain.take() {
            node.children.push((tail[i + 1].0, next));
        }
        chain = Some(node);
    }
    let children = match (chain, tail.first()) {
        (Some(part), Some(&(b1, _))) => vec![(b1, part); m as usize],
        _ => Vec::new(),
    };
    let spec = TreeCFSpec { pendants: m * (a0 - 1), children };
    spec.validate()?;
    Ok(spec)
}

/// Glues `m` copies of `part` at its root: the root's pendants and child
/// list are each repeated `m` times.
pub fn radial_repeat(m: u64, part: &TreeCFSpec) -> Result<TreeCFSpec> {
    if m == 0 {
        return Err(Error::Parameter("radial CF needs m >= 1".into()));
    }
    let children = (0..m).flat_map(|_| part.children.iter().cloned()).collect();
    Ok(TreeCFSpec { pendants: m * part.pendants, children })
}

/// `m(a0 − 1) + 1 + (b_1/A_1 + … + b_n/A_n)` repeated `m` times.
pub fn radial_cf(m: u64, a0: u64, tail: &[(u64, TailEntry)]) -> Result<FormalFraction> {
    eval_tree_cf(&radial_spec(m, a0, tail)?)
}

/// Any of the three JSON continued-fraction documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CfSpec {
    General(GeneralCF),
    Negative(NegativeCF),
    Tree(TreeCFSpec),
}

impl CfSpec {
    /// Parses a JSON document, telling the shapes apart by their keys
    /// (`a0`, `M`, `pendants`).
    pub fn from_json(text: &str) -> Result<CfSpec> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| Error::Parse("CF spec must be a JSON object".into()))?;
        let parse_err = |e: serde_json::Error| Error::Parse(e.to_string());
        let spec = if obj.contains_key("a0") {
            CfSpec::General(serde_json::from_value(value).map_err(parse_err)?)
        } else if obj.contains_key("M") {
            CfSpec::Negative(serde_json::from_value(value).map_err(parse_err)?)
        } else if obj.contains_key("pendants") {
            CfSpec::Tree(serde_json::from_value(value).map_err(parse_err)?)
        } else {
            return Err(Error::Parse("CF spec needs one of the keys a0, M, pendants".into()));
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        match self {
            CfSpec::General(g) => serde_json::to_string(g),
            CfSpec::Negative(n) => serde_json::to_string(n),
            CfSpec::Tree(t) => serde_json::to_string(t),
        }
        .expect("CF specs always serialize")
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CfSpec::General(g) => g.validate(),
            CfSpec::Negative(n) => n.validate(),
            CfSpec::Tree(t) => t.validate(),
        }
    }

    /// Value as a formal fraction; negative CFs give `u_n / u_{n-1}`.
    pub fn evaluate(&self) -> Result<FormalFraction> {
        match self {
            CfSpec::General(g) => eval_bottom_up(g),
            CfSpec::Negative(n) => Ok(n.eval().to_fraction()),
            CfSpec::Tree(t) => eval_tree_cf(t),
        }
    }

    /// The part's shape as a tree: general CFs become chains. Negative CFs
    /// have no tree form.
    pub fn as_tree(&self) -> Option<TreeCFSpec> {
        match self {
            CfSpec::General(g) => Some(g.to_tree_spec()),
            CfSpec::Tree(t) => Some(t.clone()),
            CfSpec::Negative(_) => None,
        }
    }
}
