//! The JSON document format: named algebras, morphisms, simplicial objects,
//! crossed structures and Lie structures, all resolved by name on load.
//!
//! Coefficients are integers reduced mod `p`; tensors are sparse
//! `[i, j, k, c]` lists with omitted entries zero. A morphism may be given
//! inline or by name wherever one is expected.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Element};
use crate::crossed::{
    CrossedModule, LiftingKey, ThreeCrossedModule, TwoCrossedModule, ACTION_KEYS,
};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lie::{LieAlgebra, LieThreeCrossedModule};
use crate::linalg::Matrix;
use crate::morphism::{BilinearMap, Morphism};
use crate::simplicial::TruncatedSimplicialAlgebra;
use crate::supply::SupplyConfig;

pub type Triples = Vec<[i64; 4]>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhaustive_bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chars: Vec<u32>,
}

/// Identity as a basis index or as a coefficient vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdentitySpec {
    Index(usize),
    Vector(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub p: u32,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub structure: Triples,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentitySpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub p: u32,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub bracket: Triples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    /// Row-major, target × source.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MorphismRef {
    Name(String),
    Inline(MorphismSpec),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialSpec {
    pub k: usize,
    pub levels: Vec<String>,
    /// Keyed `"n,i"`.
    pub faces: BTreeMap<String, MorphismRef>,
    pub degeneracies: BTreeMap<String, MorphismRef>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedSpec {
    pub boundary: MorphismRef,
    #[serde(default)]
    pub action: Triples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCrossedSpec {
    pub d2: MorphismRef,
    pub d1: MorphismRef,
    /// Keys `"0>1"`, `"0>2"`, `"1>2"`; missing actions are zero.
    #[serde(default)]
    pub actions: BTreeMap<String, Triples>,
    #[serde(default)]
    pub lifting: Triples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeCrossedSpec {
    pub d3: MorphismRef,
    pub d2: MorphismRef,
    pub d1: MorphismRef,
    #[serde(default)]
    pub actions: BTreeMap<String, Triples>,
    /// Keyed by lifting name (`"{}"`, `"(1,0)(2)"`, …); missing liftings
    /// are zero.
    #[serde(default)]
    pub liftings: BTreeMap<String, Triples>,
}

/// The raw document as it appears on disk.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentSpec {
    #[serde(default, skip_serializing_if = "is_default")]
    pub config: ConfigSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lie_algebras: BTreeMap<String, LieSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub simplicial: BTreeMap<String, SimplicialSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub crossed_modules: BTreeMap<String, CrossedSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub two_crossed_modules: BTreeMap<String, TwoCrossedSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub three_crossed_modules: BTreeMap<String, ThreeCrossedSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lie_crossed_modules: BTreeMap<String, CrossedSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lie_three_crossed_modules: BTreeMap<String, ThreeCrossedSpec>,
}

fn is_default(c: &ConfigSpec) -> bool {
    *c == ConfigSpec::default()
}

/// A loaded document with every name resolved.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub config: ConfigSpec,
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub lie_algebras: BTreeMap<String, LieAlgebra>,
    pub morphisms: BTreeMap<String, Morphism>,
    pub simplicial: BTreeMap<String, TruncatedSimplicialAlgebra>,
    pub crossed_modules: BTreeMap<String, CrossedModule>,
    pub two_crossed_modules: BTreeMap<String, TwoCrossedModule>,
    pub three_crossed_modules: BTreeMap<String, ThreeCrossedModule>,
    pub lie_crossed_modules: BTreeMap<String, CrossedModule>,
    pub lie_three_crossed_modules: BTreeMap<String, LieThreeCrossedModule>,
}

impl ConfigSpec {
    /// Applies the document's settings over `base`.
    pub fn apply(&self, base: SupplyConfig) -> SupplyConfig {
        SupplyConfig {
            seed: self.seed.unwrap_or(base.seed),
            budget: self.budget.unwrap_or(base.budget),
            exhaustive_bound: self.exhaustive_bound.unwrap_or(base.exhaustive_bound),
            ..base
        }
    }
}

fn reduce(c: i64, p: u32) -> u32 {
    c.rem_euclid(p as i64) as u32
}

fn unknown(name: &str, location: String) -> Error {
    Error::UnknownName {
        name: name.to_string(),
        location,
    }
}

fn dense(triples: &[[i64; 4]], dims: [usize; 3], p: u32, location: &str) -> Result<Vec<u32>> {
    let [a, b, c] = dims;
    let mut t = vec![0u32; a * b * c];
    for (n, &[i, j, k, v]) in triples.iter().enumerate() {
        let ok =
            (0..a as i64).contains(&i) && (0..b as i64).contains(&j) && (0..c as i64).contains(&k);
        if !ok {
            return Err(Error::Parse(format!(
                "{location}: entry {n} [{i},{j},{k}] outside {a}×{b}×{c}"
            )));
        }
        let idx = (i as usize * b + j as usize) * c + k as usize;
        t[idx] = (t[idx] + reduce(v, p)) % p;
    }
    Ok(t)
}

/// Nonzero tensor entries as `[i, j, k, c]`.
pub fn sparse(tensor: &[u32], dims: [usize; 3]) -> Triples {
    let [_, b, c] = dims;
    let mut out = Vec::new();
    for (idx, &v) in tensor.iter().enumerate() {
        if v != 0 {
            let (ij, k) = (idx / c, idx % c);
            out.push([(ij / b) as i64, (ij % b) as i64, k as i64, v as i64]);
        }
    }
    out
}

fn basis_names(basis: &Option<Vec<String>>, dim: usize, location: &str) -> Result<Vec<String>> {
    match basis {
        Some(b) if b.len() != dim => Err(Error::Parse(format!(
            "{location}: {} basis names for dim {dim}",
            b.len()
        ))),
        Some(b) => Ok(b.clone()),
        None => Ok(crate::algebra::names("e", dim)),
    }
}

fn load_algebra(name: &str, s: &AlgebraSpec) -> Result<Algebra> {
    let loc = format!("algebras.{name}");
    let f = PrimeField::new(s.p)?;
    let basis = basis_names(&s.basis, s.dim, &loc)?;
    let t = dense(&s.structure, [s.dim; 3], s.p, &format!("{loc}.structure"))?;
    let a = Algebra::new(f, basis, t)?;
    match &s.identity {
        None => Ok(a),
        Some(IdentitySpec::Index(i)) if *i < s.dim => a.with_identity(Element::unit(s.dim, *i)),
        Some(IdentitySpec::Index(i)) => Err(Error::Parse(format!(
            "{loc}.identity: index {i} outside dim {}",
            s.dim
        ))),
        Some(IdentitySpec::Vector(v)) => {
            a.with_identity(Element::new(v.iter().map(|&c| reduce(c, s.p)).collect()))
        }
    }
}

struct Resolver<'a> {
    spec: &'a DocumentSpec,
    doc: Document,
}

impl Resolver<'_> {
    /// Commutative and Lie algebras share one namespace.
    fn algebra(&self, name: &str, location: &str) -> Result<Arc<Algebra>> {
        if let Some(a) = self.doc.algebras.get(name) {
            return Ok(a.clone());
        }
        if let Some(l) = self.doc.lie_algebras.get(name) {
            return Ok(l.algebra().clone());
        }
        Err(unknown(name, location.to_string()))
    }

    fn morphism_spec(&self, s: &MorphismSpec, location: &str) -> Result<Morphism> {
        let src = self.algebra(&s.source, &format!("{location}.source"))?;
        let tgt = self.algebra(&s.target, &format!("{location}.target"))?;
        let p = src.field().modulus();
        if s.matrix.len() != tgt.dim() || s.matrix.iter().any(|r| r.len() != src.dim()) {
            return Err(Error::Parse(format!(
                "{location}.matrix: expected {}×{}",
                tgt.dim(),
                src.dim()
            )));
        }
        let rows: Vec<Vec<u32>> = s
            .matrix
            .iter()
            .map(|r| r.iter().map(|&c| reduce(c, p)).collect())
            .collect();
        let m = Matrix::from_rows(src.field(), src.dim(), &rows);
        Morphism::new(src, tgt, m)
    }

    fn morphism(&self, r: &MorphismRef, location: &str) -> Result<Morphism> {
        match r {
            MorphismRef::Name(n) => self
                .doc
                .morphisms
                .get(n)
                .cloned()
                .ok_or_else(|| unknown(n, location.to_string())),
            MorphismRef::Inline(s) => self.morphism_spec(s, location),
        }
    }

    fn bilinear(
        &self,
        t: Option<&Triples>,
        l: &Arc<Algebra>,
        r: &Arc<Algebra>,
        tgt: &Arc<Algebra>,
        location: &str,
    ) -> Result<BilinearMap> {
        let p = l.field().modulus();
        let dims = [l.dim(), r.dim(), tgt.dim()];
        let tensor = match t {
            Some(t) => dense(t, dims, p, location)?,
            None => vec![0; dims.iter().product()],
        };
        BilinearMap::new(l.clone(), r.clone(), tgt.clone(), tensor)
    }

    fn simplicial(&self, name: &str, s: &SimplicialSpec) -> Result<TruncatedSimplicialAlgebra> {
        let loc = format!("simplicial.{name}");
        if s.levels.len() != s.k + 1 {
            return Err(Error::Parse(format!(
                "{loc}: k = {} needs {} levels, found {}",
                s.k,
                s.k + 1,
                s.levels.len()
            )));
        }
        let levels = s
            .levels
            .iter()
            .enumerate()
            .map(|(n, l)| self.algebra(l, &format!("{loc}.levels[{n}]")))
            .collect::<Result<Vec<_>>>()?;
        let table = |map: &BTreeMap<String, MorphismRef>, what: &str, count: fn(usize) -> usize| {
            let mut out: Vec<Vec<Morphism>> = vec![Vec::new()];
            for n in 1..=s.k {
                let mut row = Vec::new();
                for i in 0..count(n) {
                    let key = format!("{n},{i}");
                    let at = format!("{loc}.{what}[\"{key}\"]");
                    let r = map
                        .get(&key)
                        .ok_or_else(|| Error::Parse(format!("{at} missing")))?;
                    row.push(self.morphism(r, &at)?);
                }
                out.push(row);
            }
            for key in map.keys() {
                let ok = key
                    .split_once(',')
                    .and_then(|(n, i)| {
                        Some((
                            n.trim().parse::<usize>().ok()?,
                            i.trim().parse::<usize>().ok()?,
                        ))
                    })
                    .is_some_and(|(n, i)| (1..=s.k).contains(&n) && i < count(n));
                if !ok {
                    return Err(Error::Parse(format!(
                        "{loc}.{what}: unexpected key {key:?}"
                    )));
                }
            }
            Ok::<_, Error>(out)
        };
        let faces = table(&s.faces, "faces", |n| n + 1)?;
        let degeneracies = table(&s.degeneracies, "degeneracies", |n| n)?;
        TruncatedSimplicialAlgebra::new(levels, faces, degeneracies)
    }

    fn crossed(&self, loc: &str, s: &CrossedSpec) -> Result<CrossedModule> {
        let d = self.morphism(&s.boundary, &format!("{loc}.boundary"))?;
        let action = self.bilinear(
            Some(&s.action),
            d.target(),
            d.source(),
            d.source(),
            &format!("{loc}.action"),
        )?;
        CrossedModule::new(d, action)
    }

    fn two_crossed(&self, loc: &str, s: &TwoCrossedSpec) -> Result<TwoCrossedModule> {
        check_keys(
            &s.actions,
            &["0>1", "0>2", "1>2"],
            &format!("{loc}.actions"),
        )?;
        let d2 = self.morphism(&s.d2, &format!("{loc}.d2"))?;
        let d1 = self.morphism(&s.d1, &format!("{loc}.d1"))?;
        let c = [
            d1.target().clone(),
            d1.source().clone(),
            d2.source().clone(),
        ];
        let act = |key: &str| {
            let (i, j) = crate::crossed::action_levels(key);
            self.bilinear(
                s.actions.get(key),
                &c[i],
                &c[j],
                &c[j],
                &format!("{loc}.actions[\"{key}\"]"),
            )
        };
        Ok(TwoCrossedModule {
            act01: act("0>1")?,
            act02: act("0>2")?,
            act12: act("1>2")?,
            lifting: self.bilinear(
                Some(&s.lifting),
                &c[1],
                &c[1],
                &c[2],
                &format!("{loc}.lifting"),
            )?,
            d2,
            d1,
        })
    }

    fn three_crossed(&self, loc: &str, s: &ThreeCrossedSpec) -> Result<ThreeCrossedModule> {
        check_keys(&s.actions, &ACTION_KEYS, &format!("{loc}.actions"))?;
        let mut liftings: BTreeMap<LiftingKey, &Triples> = BTreeMap::new();
        for (k, t) in &s.liftings {
            let key: LiftingKey = k
                .parse()
                .map_err(|_| Error::Parse(format!("{loc}.liftings: unknown key {k:?}")))?;
            if liftings.insert(key, t).is_some() {
                return Err(Error::Parse(format!("{loc}.liftings: {key} given twice")));
            }
        }
        let d3 = self.morphism(&s.d3, &format!("{loc}.d3"))?;
        let d2 = self.morphism(&s.d2, &format!("{loc}.d2"))?;
        let d1 = self.morphism(&s.d1, &format!("{loc}.d1"))?;
        let c = [
            d1.target().clone(),
            d1.source().clone(),
            d2.source().clone(),
            d3.source().clone(),
        ];
        let mut actions = Vec::new();
        for key in ACTION_KEYS {
            let (i, j) = crate::crossed::action_levels(key);
            actions.push(self.bilinear(
                s.actions.get(key),
                &c[i],
                &c[j],
                &c[j],
                &format!("{loc}.actions[\"{key}\"]"),
            )?);
        }
        let mut lifts = Vec::new();
        for key in LiftingKey::ALL {
            let (a, b, t) = key.degrees();
            lifts.push(self.bilinear(
                liftings.get(&key).copied(),
                &c[a],
                &c[b],
                &c[t],
                &format!("{loc}.liftings[\"{key}\"]"),
            )?);
        }
        ThreeCrossedModule::new(
            d3,
            d2,
            d1,
            actions.try_into().expect("six actions"),
            lifts.try_into().expect("seven liftings"),
        )
    }

    fn run(mut self) -> Result<Document> {
        let spec = self.spec;
        self.doc.config = spec.config.clone();
        for (name, s) in &spec.algebras {
            self.doc
                .algebras
                .insert(name.clone(), Arc::new(load_algebra(name, s)?));
        }
        for (name, s) in &spec.lie_algebras {
            if spec.algebras.contains_key(name) {
                return Err(Error::Parse(format!(
                    "lie_algebras.{name}: name already used by an algebra"
                )));
            }
            let loc = format!("lie_algebras.{name}");
            let f = PrimeField::new(s.p)?;
            let basis = basis_names(&s.basis, s.dim, &loc)?;
            let t = dense(&s.bracket, [s.dim; 3], s.p, &format!("{loc}.bracket"))?;
            self.doc
                .lie_algebras
                .insert(name.clone(), LieAlgebra::new(f, basis, t)?);
        }
        for (name, s) in &spec.morphisms {
            let m = self.morphism_spec(s, &format!("morphisms.{name}"))?;
            self.doc.morphisms.insert(name.clone(), m);
        }
        for (name, s) in &spec.simplicial {
            let e = self.simplicial(name, s)?;
            self.doc.simplicial.insert(name.clone(), e);
        }
        for (name, s) in &spec.crossed_modules {
            let cm = self.crossed(&format!("crossed_modules.{name}"), s)?;
            self.doc.crossed_modules.insert(name.clone(), cm);
        }
        for (name, s) in &spec.two_crossed_modules {
            let t = self.two_crossed(&format!("two_crossed_modules.{name}"), s)?;
            self.doc.two_crossed_modules.insert(name.clone(), t);
        }
        for (name, s) in &spec.three_crossed_modules {
            let t = self.three_crossed(&format!("three_crossed_modules.{name}"), s)?;
            self.doc.three_crossed_modules.insert(name.clone(), t);
        }
        for (name, s) in &spec.lie_crossed_modules {
            let cm = self.crossed(&format!("lie_crossed_modules.{name}"), s)?;
            self.doc.lie_crossed_modules.insert(name.clone(), cm);
        }
        for (name, s) in &spec.lie_three_crossed_modules {
            let loc = format!("lie_three_crossed_modules.{name}");
            let t = self.three_crossed(&loc, s)?;
            let lie = LieThreeCrossedModule::new(t.d3, t.d2, t.d1, t.actions, t.liftings)?;
            self.doc.lie_three_crossed_modules.insert(name.clone(), lie);
        }
        Ok(self.doc)
    }
}

fn check_keys(map: &BTreeMap<String, Triples>, allowed: &[&str], location: &str) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::Parse(format!("{location}: unknown key {k:?}"))),
        None => Ok(()),
    }
}

impl DocumentSpec {
    /// Merges `other` into `self`; a name defined twice is an error.
    pub fn merge(&mut self, other: DocumentSpec) -> Result<()> {
        fn join<T>(
            a: &mut BTreeMap<String, T>,
            b: BTreeMap<String, T>,
            section: &str,
        ) -> Result<()> {
            for (k, v) in b {
                if a.insert(k.clone(), v).is_some() {
                    return Err(Error::Parse(format!("{section}.{k} defined twice")));
                }
            }
            Ok(())
        }
        if other.config != ConfigSpec::default() {
            self.config = other.config;
        }
        join(&mut self.algebras, other.algebras, "algebras")?;
        join(&mut self.lie_algebras, other.lie_algebras, "lie_algebras")?;
        join(&mut self.morphisms, other.morphisms, "morphisms")?;
        join(&mut self.simplicial, other.simplicial, "simplicial")?;
        join(
            &mut self.crossed_modules,
            other.crossed_modules,
            "crossed_modules",
        )?;
        join(
            &mut self.two_crossed_modules,
            other.two_crossed_modules,
            "two_crossed_modules",
        )?;
        join(
            &mut self.three_crossed_modules,
            other.three_crossed_modules,
            "three_crossed_modules",
        )?;
        join(
            &mut self.lie_crossed_modules,
            other.lie_crossed_modules,
            "lie_crossed_modules",
        )?;
        join(
            &mut self.lie_three_crossed_modules,
            other.lie_three_crossed_modules,
            "lie_three_crossed_modules",
        )
    }

    pub fn resolve(&self) -> Result<Document> {
        Resolver {
            spec: self,
            doc: Document::default(),
        }
        .run()
    }
}

/// Keys marking a JSON line as report output rather than a document.
pub const REPORT_KEYS: [&str; 3] = ["check", "summary", "info"];

/// Parses a stream of JSON values. Objects carrying one of [`REPORT_KEYS`]
/// are report lines and are skipped, so the output of one command can be
/// piped into the next; every other value is a document and they are
/// merged.
pub fn parse_stream(text: &str) -> Result<DocumentSpec> {
    let mut spec = DocumentSpec::default();
    for (n, v) in serde_json::Deserializer::from_str(text)
        .into_iter::<Value>()
        .enumerate()
    {
        let v = v.map_err(|e| Error::Parse(format!("value {n}: {e}")))?;
        if let Value::Object(o) = &v {
            if REPORT_KEYS.iter().any(|k| o.contains_key(*k)) {
                continue;
            }
        }
        let part: DocumentSpec =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("value {n}: {e}")))?;
        spec.merge(part)?;
    }
    Ok(spec)
}

/// [`parse_stream`] followed by name resolution.
pub fn load(text: &str) -> Result<Document> {
    parse_stream(text)?.resolve()
}

/// Builds a [`DocumentSpec`] from in-memory objects, naming each algebra
/// once.
#[derive(Default)]
pub struct Writer {
    spec: DocumentSpec,
    named: Vec<(Arc<Algebra>, String, bool)>,
}

impl Writer {
    pub fn new() -> Self {
        Writer::default()
    }

    pub fn finish(self) -> DocumentSpec {
        self.spec
    }

    fn name_algebra(&mut self, a: &Arc<Algebra>, suggested: &str, lie: bool) -> String {
        if let Some((_, n, _)) = self
            .named
            .iter()
            .find(|(b, _, l)| *l == lie && (Arc::ptr_eq(a, b) || a == b))
        {
            return n.clone();
        }
        let mut name = suggested.to_string();
        let mut i = 1;
        while self.named.iter().any(|(_, n, _)| *n == name) {
            i += 1;
            name = format!("{suggested}#{i}");
        }
        let p = a.field().modulus();
        let dim = a.dim();
        let structure = sparse(a.structure(), [dim; 3]);
        let basis = Some(a.basis_names().to_vec());
        if lie {
            self.spec.lie_algebras.insert(
                name.clone(),
                LieSpec {
                    p,
                    dim,
                    basis,
                    bracket: structure,
                },
            );
        } else {
            let identity = a.identity().map(|e| match a.identity_index() {
                Some(i) => IdentitySpec::Index(i),
                None => IdentitySpec::Vector(e.iter().map(|&c| c as i64).collect()),
            });
            self.spec.algebras.insert(
                name.clone(),
                AlgebraSpec {
                    p,
                    dim,
                    basis,
                    structure,
                    identity,
                },
            );
        }
        self.named.push((a.clone(), name.clone(), lie));
        name
    }

    pub fn algebra(&mut self, a: &Arc<Algebra>, name: &str) -> String {
        self.name_algebra(a, name, false)
    }

    pub fn lie_algebra(&mut self, l: &LieAlgebra, name: &str) -> String {
        self.name_algebra(l.algebra(), name, true)
    }

    fn morphism(&mut self, m: &Morphism, src: &str, tgt: &str, lie: bool) -> MorphismRef {
        let source = self.name_algebra(m.source(), src, lie);
        let target = self.name_algebra(m.target(), tgt, lie);
        let mat = m.matrix();
        let matrix = (0..mat.rows())
            .map(|i| (0..mat.cols()).map(|j| mat.get(i, j) as i64).collect())
            .collect();
        MorphismRef::Inline(MorphismSpec {
            source,
            target,
            matrix,
        })
    }

    pub fn simplicial(&mut self, name: &str, e: &TruncatedSimplicialAlgebra) {
        let levels: Vec<String> = (0..=e.k())
            .map(|n| self.algebra(e.level(n), &format!("{name}.E{n}")))
            .collect();
        let mut faces = BTreeMap::new();
        let mut degeneracies = BTreeMap::new();
        for n in 1..=e.k() {
            for i in 0..=n {
                let m = self.morphism(e.face(n, i), &levels[n], &levels[n - 1], false);
                faces.insert(format!("{n},{i}"), m);
            }
            for i in 0..n {
                let m = self.morphism(e.degeneracy(n, i), &levels[n - 1], &levels[n], false);
                degeneracies.insert(format!("{n},{i}"), m);
            }
        }
        self.spec.simplicial.insert(
            name.to_string(),
            SimplicialSpec {
                k: e.k(),
                levels,
                faces,
                degeneracies,
            },
        );
    }

    fn crossed_spec(&mut self, name: &str, cm: &CrossedModule, lie: bool) -> CrossedSpec {
        let d = cm.boundary();
        let boundary = self.morphism(d, &format!("{name}.C"), &format!("{name}.R"), lie);
        let a = cm.action();
        CrossedSpec {
            boundary,
            action: sparse(
                a.tensor(),
                [a.left().dim(), a.right().dim(), a.target().dim()],
            ),
        }
    }

    pub fn crossed(&mut self, name: &str, cm: &CrossedModule) {
        let s = self.crossed_spec(name, cm, false);
        self.spec.crossed_modules.insert(name.to_string(), s);
    }

    pub fn lie_crossed(&mut self, name: &str, cm: &CrossedModule) {
        let s = self.crossed_spec(name, cm, true);
        self.spec.lie_crossed_modules.insert(name.to_string(), s);
    }

    pub fn two_crossed(&mut self, name: &str, t: &TwoCrossedModule) {
        let c = |n: usize| format!("{name}.C{n}");
        let d2 = self.morphism(&t.d2, &c(2), &c(1), false);
        let d1 = self.morphism(&t.d1, &c(1), &c(0), false);
        let mut actions = BTreeMap::new();
        for (k, a) in [("0>1", &t.act01), ("0>2", &t.act02), ("1>2", &t.act12)] {
            if !a.is_zero() {
                actions.insert(k.to_string(), bilinear_triples(a));
            }
        }
        self.spec.two_crossed_modules.insert(
            name.to_string(),
            TwoCrossedSpec {
                d2,
                d1,
                actions,
                lifting: bilinear_triples(&t.lifting),
            },
        );
    }

    fn three_spec(&mut self, name: &str, t: &ThreeCrossedModule, lie: bool) -> ThreeCrossedSpec {
        let level = if lie { "L" } else { "C" };
        let c = |n: usize| format!("{name}.{level}{n}");
        let d3 = self.morphism(&t.d3, &c(3), &c(2), lie);
        let d2 = self.morphism(&t.d2, &c(2), &c(1), lie);
        let d1 = self.morphism(&t.d1, &c(1), &c(0), lie);
        let mut actions = BTreeMap::new();
        for (k, a) in ACTION_KEYS.iter().zip(&t.actions) {
            if !a.is_zero() {
                actions.insert(k.to_string(), bilinear_triples(a));
            }
        }
        let mut liftings = BTreeMap::new();
        for (k, l) in LiftingKey::ALL.iter().zip(&t.liftings) {
            if !l.is_zero() {
                liftings.insert(k.to_string(), bilinear_triples(l));
            }
        }
        ThreeCrossedSpec {
            d3,
            d2,
            d1,
            actions,
            liftings,
        }
    }

    pub fn three_crossed(&mut self, name: &str, t: &ThreeCrossedModule) {
        let s = self.three_spec(name, t, false);
        self.spec.three_crossed_modules.insert(name.to_string(), s);
    }

    pub fn lie_three_crossed(&mut self, name: &str, t: &LieThreeCrossedModule) {
        let s = self.three_spec(name, t.inner(), true);
        self.spec
            .lie_three_crossed_modules
            .insert(name.to_string(), s);
    }
}

/// Every built-in example over `f` as one document: crossed modules
/// (with the CM2 mutant), simplicial objects, 2-crossed modules and the
/// Lie examples (with their mutants).
pub fn corpus_document(f: PrimeField) -> Result<DocumentSpec> {
    use crate::{corpus, lie};
    let mut w = Writer::new();
    for (name, cm) in corpus::crossed_modules(f)? {
        w.crossed(&name, &cm);
    }
    w.crossed("cm2-mutant", &corpus::cm2_mutant(f)?);
    for (name, e) in corpus::simplicial_objects(f)? {
        w.simplicial(&name, &e);
    }
    for (name, t) in corpus::two_crossed_modules(f)? {
        w.two_crossed(&name, &t);
    }
    for (name, l) in lie::lie_algebras(f) {
        w.lie_algebra(&l, name);
    }
    w.lie_algebra(&lie::alternating_mutant(f), "alternating-mutant");
    w.lie_crossed("heisenberg-ideal", &lie::heisenberg_ideal_cm(f)?);
    for (name, m) in lie::lie_chains(f)? {
        w.lie_three_crossed(name, &m);
    }
    w.lie_three_crossed(
        "heisenberg-chain-mutant",
        &lie::heisenberg_lifting_mutant(f)?,
    );
    Ok(w.finish())
}

fn bilinear_triples(b: &BilinearMap) -> Triples {
    sparse(
        b.tensor(),
        [b.left().dim(), b.right().dim(), b.target().dim()],
    )
}

#[cfg(test)]
mod tests;
