//! Family spec strings such as `ring:n=3,m=1,r=2,s=1` or
//! `dbond:xs=1,1,2;ys=2,1`, and the two ways of getting `Z` from them.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;

use crate::contfrac::{self, CfSpec, TreeCFSpec};
use crate::error::{Error, Result};
use crate::families::{self, CaterpillarBondParams, RingParams};
use crate::multigraph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    DBond(CaterpillarBondParams),
    Comb { n: usize, a: u64, b: u64 },
    Ring(RingParams),
    Radial { m: u64, part: TreeCFSpec },
    Tree(TreeCFSpec),
    Naphthalene,
}

fn bad(msg: impl fmt::Display) -> Error {
    Error::Parse(msg.to_string())
}

/// Splits `k1=v1,k2=v2;k3=...`. A token without `=` continues the previous
/// value, so list values like `xs=1,1,2` survive the comma split.
fn fields(body: &str) -> Result<BTreeMap<String, String>> {
    let mut out: BTreeMap<String, String> = BTreeMap::new();
    let mut current: Option<String> = None;
    for token in body.split([',', ';']) {
        let token = token.trim();
        if let Some((k, v)) = token.split_once('=') {
            let k = k.trim().to_string();
            if out.contains_key(&k) {
                return Err(bad(format!("field `{k}` given twice")));
            }
            out.insert(k.clone(), v.trim().to_string());
            current = Some(k);
        } else {
            match &current {
                Some(k) if !token.is_empty() => {
                    let v = out.get_mut(k).expect("current key present");
                    v.push(',');
                    v.push_str(token);
                }
                _ => return Err(bad(format!("expected key=value, got `{token}`"))),
            }
        }
    }
    Ok(out)
}

struct Fields {
    family: &'static str,
    map: BTreeMap<String, String>,
}

impl Fields {
    fn new(family: &'static str, body: &str, allowed: &[&str]) -> Result<Self> {
        let map = fields(body)?;
        if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(bad(format!("{family}: unknown field `{k}`")));
        }
        Ok(Fields { family, map })
    }

    fn raw(&self, key: &str) -> Result<&str> {
        self.map.get(key).map(String::as_str).ok_or_else(|| bad(format!("{}: missing field `{key}`", self.family)))
    }

    fn int(&self, key: &str) -> Result<u64> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| bad(format!("{}: field `{key}` is not a nonnegative integer: `{v}`", self.family)))
    }

    fn list(&self, key: &str) -> Result<Vec<u64>> {
        let v = self.raw(key)?;
        if v.is_empty() {
            return Ok(Vec::new());
        }
        v.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad(format!("{}: field `{key}` has a bad entry `{t}`", self.family))))
            .collect()
    }
}

fn load_tree(path: &str) -> Result<TreeCFSpec> {
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| bad(format!("cannot read `{path}`: {e}")))?;
    CfSpec::from_json(&text)?
        .as_tree()
        .ok_or_else(|| bad(format!("`{path}` holds a negative CF, which has no tree shape")))
}

fn field_error(family: &str, e: Error) -> Error {
    match e {
        Error::Parameter(msg) => bad(format!("{family}: {msg}")),
        other => other,
    }
}

impl FamilySpec {
    /// Parses a spec string. `radial` and `tree` read their CF file here.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        if s == "naphthalene" {
            return Ok(FamilySpec::Naphthalene);
        }
        let (family, body) = s.split_once(':').ok_or_else(|| bad(format!("unknown family spec `{s}`")))?;
        let spec = match family {
            "path" => {
                let f = Fields::new("path", body, &["n"])?;
                FamilySpec::Path { n: f.int("n")? as usize }
            }
            "cycle" => {
                let f = Fields::new("cycle", body, &["n"])?;
                FamilySpec::Cycle { n: f.int("n")? as usize }
            }
            "dbond" => {
                let f = Fields::new("dbond", body, &["xs", "ys"])?;
                let ys = if f.map.contains_key("ys") { f.list("ys")? } else { Vec::new() };
                FamilySpec::DBond(CaterpillarBondParams::new(f.list("xs")?, ys).map_err(|e| field_error("dbond", e))?)
            }
            "comb" => {
                let f = Fields::new("comb", body, &["n", "a", "b"])?;
                FamilySpec::Comb { n: f.int("n")? as usize, a: f.int("a")?, b: f.int("b")? }
            }
            "ring" => {
                let f = Fields::new("ring", body, &["n", "m", "r", "s"])?;
                let p = RingParams::new(f.int("n")?, f.int("m")?, f.int("r")?, f.int("s")?)
                    .map_err(|e| field_error("ring", e))?;
                FamilySpec::Ring(p)
            }
            "radial" => {
                let f = Fields::new("radial", body, &["m", "part"])?;
                let m = f.int("m")?;
                if m == 0 {
                    return Err(bad("radial: field `m` must be positive"));
                }
                FamilySpec::Radial { m, part: load_tree(f.raw("part")?)? }
            }
            "tree" => FamilySpec::Tree(load_tree(body.trim())?),
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        // range checks live in the builders
        spec.graph().map_err(|e| field_error(family, e))?;
        Ok(spec)
    }

    pub fn graph(&self) -> Result<Multigraph> {
        match self {
            FamilySpec::Path { n } => families::path_graph(*n),
            FamilySpec::Cycle { n } => families::cycle_graph(*n),
            FamilySpec::DBond(p) => families::caterpillar_bond(p),
            FamilySpec::Comb { n, a, b } => families::comb_cyclic(*n, *a, *b),
            FamilySpec::Ring(p) => families::ring_graph(p),
            FamilySpec::Radial { m, part } => families::tree_of_spec(&contfrac::radial_repeat(*m, part)?),
            FamilySpec::Tree(t) => families::tree_of_spec(t),
            FamilySpec::Naphthalene => Ok(families::naphthalene_fixture()),
        }
    }

    /// `Z` as a continued-fraction numerator, or `None` when the family has
    /// no continued fraction.
    pub fn cf_hosoya(&self) -> Result<Option<BigInt>> {
        let numerator = |p: &CaterpillarBondParams| contfrac::convergents(&p.to_cf()).pop().map(|c| c.p);
        Ok(match self {
            FamilySpec::Path { n } => {
                let p = CaterpillarBondParams::new(vec![1; *n], vec![1; n.saturating_sub(1)])?;
                numerator(&p)
            }
            FamilySpec::Cycle { n } => numerator(&families::cycle_to_caterpillar_bond(*n)?),
            FamilySpec::DBond(p) => numerator(p),
            FamilySpec::Comb { n, a, b } => numerator(&families::comb_to_caterpillar_bond(*n, *a, *b)?),
            FamilySpec::Ring(p) => Some(contfrac::eval_negative_ring_cf(p.M(), p.rs(), p.n()).p),
            FamilySpec::Radial { m, part } => {
                Some(contfrac::eval_tree_cf(&contfrac::radial_repeat(*m, part)?)?.into_parts().0)
            }
            FamilySpec::Tree(t) => Some(contfrac::eval_tree_cf(t)?.into_parts().0),
            FamilySpec::Naphthalene => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_inline_family() {
        assert_eq!(FamilySpec::parse("path:n=10").unwrap(), FamilySpec::Path { n: 10 });
        assert_eq!(FamilySpec::parse("cycle:n=6").unwrap(), FamilySpec::Cycle { n: 6 });
        assert_eq!(
            FamilySpec::parse("dbond:xs=1,1,1,1,2;ys=2,1,1,1").unwrap(),
            FamilySpec::DBond(CaterpillarBondParams::new(vec![1, 1, 1, 1, 2], vec![2, 1, 1, 1]).unwrap())
        );
        assert_eq!(FamilySpec::parse("comb:n=4,a=3,b=3").unwrap(), FamilySpec::Comb { n: 4, a: 3, b: 3 });
        assert_eq!(
            FamilySpec::parse("ring:n=3,m=1,r=2,s=1").unwrap(),
            FamilySpec::Ring(RingParams::new(3, 1, 2, 1).unwrap())
        );
        assert_eq!(FamilySpec::parse("naphthalene").unwrap(), FamilySpec::Naphthalene);
        assert_eq!(FamilySpec::parse("dbond:xs=5").unwrap().cf_hosoya().unwrap(), Some(BigInt::from(5)));
    }

    #[test]
    fn errors_name_the_field() {
        let msg = |s: &str| FamilySpec::parse(s).unwrap_err().to_string();
        assert!(msg("ring:n=3,m=1,r=2").contains("`s`"));
        assert!(msg("ring:n=3,m=1,r=x,s=1").contains("`r`"));
        assert!(msg("path:n=1,q=2").contains("`q`"));
        assert!(msg("cycle:n=2").contains("cycle"));
        assert!(msg("dbond:xs=1,2;ys=1,1").contains("dbond"));
        assert!(msg("hexagon:n=2").contains("hexagon"));
        assert!(msg("radial:m=2,part=/nonexistent.json").contains("nonexistent"));
    }

    #[test]
    fn both_routes_agree_on_inline_families() {
        for s in [
            "path:n=1",
            "path:n=10",
            "cycle:n=6",
            "dbond:xs=4,4,4,4;ys=6,3,3",
            "comb:n=4,a=2,b=1",
            "ring:n=3,m=1,r=2,s=1",
        ] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.cf_hosoya().unwrap(), Some(crate::oracle::hosoya(&spec.graph().unwrap())), "{s}");
        }
        assert_eq!(FamilySpec::Naphthalene.cf_hosoya().unwrap(), None);
    }
}
