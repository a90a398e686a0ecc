//! Named graph families behind a common trait, looked up by name at runtime.
//!
//! Each family takes `key=value` parameters; integer parameters may also be
//! inclusive ranges `a..b`, in which case the family yields one graph per
//! value (or combination of values).

use std::collections::BTreeMap;
use std::fmt;

use super::{EnumerateOptions, GenError};
use crate::designs;
use crate::graphs::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(u64),
    Range(u64, u64),
}

impl ParamValue {
    fn values(&self) -> Vec<u64> {
        match *self {
            ParamValue::Int(v) => vec![v],
            ParamValue::Range(a, b) => (a..=b).collect(),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Range(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

/// Parsed family parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyArgs(BTreeMap<String, ParamValue>);

impl FamilyArgs {
    /// Parses `k=3,n=4..14` (comma separated; empty string gives no params).
    pub fn parse(text: &str) -> Result<Self, GenError> {
        let mut map = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) =
                item.split_once('=').ok_or_else(|| GenError::BadParam(format!("expected key=value, got `{item}`")))?;
            map.insert(key.trim().to_string(), Self::parse_value(value.trim())?);
        }
        Ok(FamilyArgs(map))
    }

    pub fn parse_value(value: &str) -> Result<ParamValue, GenError> {
        let int =
            |s: &str| s.parse::<u64>().map_err(|_| GenError::BadParam(format!("`{s}` is not a non-negative integer")));
        match value.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (int(a)?, int(b)?);
                if a > b {
                    return Err(GenError::BadParam(format!("empty range {a}..{b}")));
                }
                Ok(ParamValue::Range(a, b))
            }
            None => Ok(ParamValue::Int(int(value)?)),
        }
    }

    pub fn insert(&mut self, key: impl Into<String>, value: ParamValue) {
        self.0.insert(key.into(), value);
    }

    fn values(&self, key: &str, default: Option<u64>) -> Result<Vec<u64>, GenError> {
        match (self.0.get(key), default) {
            (Some(v), _) => Ok(v.values()),
            (None, Some(d)) => Ok(vec![d]),
            (None, None) => Err(GenError::BadParam(format!("missing parameter `{key}`"))),
        }
    }

    fn is_range(&self, key: &str) -> bool {
        matches!(self.0.get(key), Some(ParamValue::Range(..)))
    }

    fn check_keys(&self, family: &dyn Family) -> Result<(), GenError> {
        for key in self.0.keys() {
            if !family.params().contains(&key.as_str()) {
                return Err(GenError::BadParam(format!(
                    "family `{}` takes {:?}, not `{key}`",
                    family.name(),
                    family.params()
                )));
            }
        }
        Ok(())
    }
}

/// A named generator of one or more graphs.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    fn params(&self) -> &'static [&'static str];
    fn summary(&self) -> &'static str;
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError>;
}

/// Family with one integer parameter.
struct Unary {
    name: &'static str,
    param: &'static [&'static str],
    summary: &'static str,
    make: fn(usize) -> Result<Graph, GenError>,
}

impl Family for Unary {
    fn name(&self) -> &'static str {
        self.name
    }
    fn params(&self) -> &'static [&'static str] {
        self.param
    }
    fn summary(&self) -> &'static str {
        self.summary
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        args.values(self.param[0], None)?.into_iter().map(|v| (self.make)(v as usize)).collect()
    }
}

/// Parameterless family.
struct Fixed {
    name: &'static str,
    summary: &'static str,
    make: fn() -> Graph,
}

impl Family for Fixed {
    fn name(&self) -> &'static str {
        self.name
    }
    fn params(&self) -> &'static [&'static str] {
        &[]
    }
    fn summary(&self) -> &'static str {
        self.summary
    }
    fn build(&self, _: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        Ok(vec![(self.make)()])
    }
}

struct CompleteBipartite;

impl Family for CompleteBipartite {
    fn name(&self) -> &'static str {
        "complete-bipartite"
    }
    fn params(&self) -> &'static [&'static str] {
        &["a", "b"]
    }
    fn summary(&self) -> &'static str {
        "K_{a,b}"
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        let mut out = Vec::new();
        for a in args.values("a", None)? {
            for b in args.values("b", None)? {
                out.push(super::complete_bipartite(a as usize, b as usize)?);
            }
        }
        Ok(out)
    }
}

struct ProjectivePlane;

impl Family for ProjectivePlane {
    fn name(&self) -> &'static str {
        "pg"
    }
    fn params(&self) -> &'static [&'static str] {
        &["q"]
    }
    fn summary(&self) -> &'static str {
        "incidence graph of PG(2,q); ranges skip non-prime-powers"
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        let skip = args.is_range("q");
        let mut out = Vec::new();
        for q in args.values("q", None)? {
            match designs::projective_plane(q as u32) {
                Ok(s) => out.push(designs::incidence_graph(&s)),
                Err(designs::DesignError::Field(crate::fields::FieldError::NotAPrimePower(_))) if skip => {}
                Err(e) => return Err(e.into()),
            }
        }
        Ok(out)
    }
}

struct Biplane;

impl Family for Biplane {
    fn name(&self) -> &'static str {
        "biplane"
    }
    fn params(&self) -> &'static [&'static str] {
        &["k"]
    }
    fn summary(&self) -> &'static str {
        "incidence graph of the (4,3,2), (7,4,2) or (11,5,2) biplane, chosen by block size k"
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        args.values("k", None)?
            .into_iter()
            .map(|k| {
                let s = match k {
                    3 => designs::biplane_4_3_2(),
                    4 => designs::biplane_7_4_2(),
                    5 => designs::biplane_11_5_2(),
                    _ => return Err(GenError::BadParam(format!("no stored biplane with k = {k}"))),
                };
                Ok(designs::incidence_graph(&s))
            })
            .collect()
    }
}

struct DifferenceSet;

impl Family for DifferenceSet {
    fn name(&self) -> &'static str {
        "difference-set"
    }
    fn params(&self) -> &'static [&'static str] {
        &["m", "base"]
    }
    fn summary(&self) -> &'static str {
        "incidence graph of the translates of a base set mod m; base is a bitmask of residues"
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        let mut out = Vec::new();
        for m in args.values("m", None)? {
            for mask in args.values("base", None)? {
                let base: Vec<usize> = (0..64).filter(|b| mask >> b & 1 == 1).collect();
                out.push(designs::incidence_graph(&designs::difference_set_design(m as usize, &base)?));
            }
        }
        Ok(out)
    }
}

struct RandomRegular;

impl Family for RandomRegular {
    fn name(&self) -> &'static str {
        "random-regular"
    }
    fn params(&self) -> &'static [&'static str] {
        &["n", "d", "seed", "count"]
    }
    fn summary(&self) -> &'static str {
        "count pairing-model d-regular graphs on n vertices, seeds seed, seed+1, ..."
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        let seed = args.values("seed", Some(0))?[0];
        let count = args.values("count", Some(1))?[0];
        let mut out = Vec::new();
        for n in args.values("n", None)? {
            for d in args.values("d", None)? {
                for i in 0..count {
                    out.push(super::random_regular(n as usize, d as usize, seed + i)?);
                }
            }
        }
        Ok(out)
    }
}

struct Enumerate;

impl Family for Enumerate {
    fn name(&self) -> &'static str {
        "regular"
    }
    fn params(&self) -> &'static [&'static str] {
        &["n", "d", "girth", "connected"]
    }
    fn summary(&self) -> &'static str {
        "all d-regular graphs on n vertices up to isomorphism (connected=1 by default)"
    }
    fn build(&self, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        let opts = EnumerateOptions {
            connected: args.values("connected", Some(1))?[0] != 0,
            min_girth: args.values("girth", Some(3))?[0] as usize,
        };
        let mut out = Vec::new();
        for d in args.values("d", None)? {
            for n in args.values("n", None)? {
                let (n, d) = (n as usize, d as usize);
                // Ranges over n skip orders with no d-regular graph.
                if args.is_range("n") && (n * d % 2 == 1 || d >= n) {
                    continue;
                }
                out.extend(super::enumerate_regular(n, d, opts)?);
            }
        }
        Ok(out)
    }
}

type UnarySpec = (&'static str, &'static [&'static str], &'static str, fn(usize) -> Result<Graph, GenError>);
type FixedSpec = (&'static str, &'static str, fn() -> Graph);

/// Name -> family lookup.
pub struct FamilyRegistry {
    families: Vec<Box<dyn Family>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry { families: Vec::new() }
    }

    pub fn register(&mut self, family: Box<dyn Family>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        let unary: [UnarySpec; 8] = [
            ("cycle", &["n"], "cycle C_n", super::cycle),
            ("path", &["n"], "path on n vertices", super::path),
            ("complete", &["n"], "complete graph K_n", super::complete),
            ("hypercube", &["k"], "k-dimensional cube", super::hypercube),
            ("friendship", &["k"], "k triangles sharing a vertex", super::friendship),
            ("book", &["k"], "k paths of length 3 between two poles", super::book),
            ("windmill", &["d"], "d copies of K_d sharing a vertex", super::windmill),
            ("prism", &["n"], "circular ladder C_n x K_2", super::prism),
        ];
        for (name, param, summary, make) in unary {
            r.register(Box::new(Unary { name, param, summary, make }));
        }
        let fixed: [FixedSpec; 4] = [
            ("heawood", "the (3,6)-cage", super::heawood),
            ("mcgee", "the (3,7)-cage", super::mcgee),
            ("tutte-coxeter", "the (3,8)-cage", super::tutte_coxeter),
            ("petersen", "the (3,5)-cage", super::petersen),
        ];
        for (name, summary, make) in fixed {
            r.register(Box::new(Fixed { name, summary, make }));
        }
        r.register(Box::new(CompleteBipartite));
        r.register(Box::new(ProjectivePlane));
        r.register(Box::new(Biplane));
        r.register(Box::new(DifferenceSet));
        r.register(Box::new(RandomRegular));
        r.register(Box::new(Enumerate));
        r
    }

    pub fn get(&self, name: &str) -> Option<&dyn Family> {
        self.families.iter().find(|f| f.name() == name).map(|f| f.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.iter().map(|f| f.name())
    }

    pub fn families(&self) -> impl Iterator<Item = &dyn Family> + '_ {
        self.families.iter().map(|f| f.as_ref())
    }

    pub fn build(&self, name: &str, args: &FamilyArgs) -> Result<Vec<Graph>, GenError> {
        let family = self.get(name).ok_or_else(|| GenError::UnknownFamily(name.to_string()))?;
        args.check_keys(family)?;
        family.build(args)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_args() {
        let args = FamilyArgs::parse("k=3, n=4..14").unwrap();
        assert_eq!(args.values("k", None).unwrap(), vec![3]);
        assert_eq!(args.values("n", None).unwrap().len(), 11);
        assert!(FamilyArgs::parse("k").is_err());
        assert!(FamilyArgs::parse("k=5..2").is_err());
        assert!(FamilyArgs::parse("k=-1").is_err());
        assert_eq!(FamilyArgs::parse("").unwrap(), FamilyArgs::default());
    }

    #[test]
    fn registry_lookup() {
        let r = FamilyRegistry::with_defaults();
        let gs = r.build("friendship", &FamilyArgs::parse("k=1..10").unwrap()).unwrap();
        assert_eq!(gs.len(), 10);
        let pg = r.build("pg", &FamilyArgs::parse("q=2..9").unwrap()).unwrap();
        assert_eq!(pg.len(), 7);
        assert!(r.build("pg", &FamilyArgs::parse("q=6").unwrap()).is_err());
        assert!(matches!(r.build("nope", &FamilyArgs::default()), Err(GenError::UnknownFamily(_))));
        assert!(matches!(r.build("heawood", &FamilyArgs::parse("k=1").unwrap()), Err(GenError::BadParam(_))));
        assert_eq!(r.build("regular", &FamilyArgs::parse("n=4..8,d=3").unwrap()).unwrap().len(), 1 + 2 + 5);
        let bip = r.build("biplane", &FamilyArgs::parse("k=3..5").unwrap()).unwrap();
        assert_eq!(bip.iter().map(Graph::order).collect::<Vec<_>>(), vec![8, 14, 22]);
        // base {1,2,4} as bitmask 0b10110.
        let fano = r.build("difference-set", &FamilyArgs::parse("m=7,base=22").unwrap()).unwrap();
        assert_eq!(fano[0].order(), 14);
    }

    #[test]
    fn registering_replaces_by_name() {
        let mut r = FamilyRegistry::with_defaults();
        let before = r.names().count();
        r.register(Box::new(Fixed { name: "heawood", summary: "", make: super::super::petersen }));
        assert_eq!(r.names().count(), before);
        assert_eq!(r.build("heawood", &FamilyArgs::default()).unwrap()[0].order(), 10);
    }
}
