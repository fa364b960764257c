//! The interchange document: a JSON text with a version tag, named objects
//! of any carrier kind and optional named maps. Every object carries a
//! `type` field; all tables are index-based. Printing is canonical, so
//! `parse(print(d)) == d` and printing a parsed canonical text reproduces
//! it byte for byte.

use serde::{Deserialize, Serialize};

use crate::bisimp::{audit_bisimplicial, audit_symmetric, BiSimplicialSet, Space, SpaceMap, SymmetricSimplicialSpace};
use crate::category::{FinCategory, FinFunctor, FinGroupoid, Morphism};
use crate::error::{Error, Result};
use crate::presheaf::{check_natural, Diagram, OpKey, Shape, ShapeKind, SortKey, SortMap};
use crate::sgpd::{SimplicialFunctor, SimplicialGroupoid};
use crate::sset::{SimplicialMap, TruncatedSimplicialSet};

pub const VERSION: &str = "invsegal/1";

/// A carrier value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Sset(TruncatedSimplicialSet),
    Bisset(BiSimplicialSet),
    Symsset(SymmetricSimplicialSpace),
    Fincat(FinCategory),
    Fingpd(FinGroupoid),
    Sgpd(SimplicialGroupoid),
}

impl Carrier {
    pub fn kind(&self) -> &'static str {
        match self {
            Carrier::Sset(_) => "sset",
            Carrier::Bisset(_) => "bisset",
            Carrier::Symsset(_) => "symsset",
            Carrier::Fincat(_) => "fincat",
            Carrier::Fingpd(_) => "fingpd",
            Carrier::Sgpd(_) => "sgpd",
        }
    }

    /// The underlying presheaf, for the simplicial carriers.
    pub fn diagram(&self) -> Option<&Diagram> {
        match self {
            Carrier::Sset(x) => Some(x.diagram()),
            Carrier::Bisset(x) => Some(x.diagram()),
            Carrier::Symsset(x) => Some(x.diagram()),
            _ => None,
        }
    }
}

/// A map value; source and target are object names in the same document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapValue {
    /// Natural map between presheaf carriers of the same kind.
    Smap(SortMap),
    Functor(FinFunctor),
    Sfunctor(SimplicialFunctor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub value: MapValue,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub objects: Vec<(String, Carrier)>,
    pub maps: Vec<MapEntry>,
}

impl Document {
    pub fn single(name: &str, c: Carrier) -> Self {
        Document { objects: vec![(name.to_string(), c)], maps: Vec::new() }
    }

    pub fn push(&mut self, name: &str, c: Carrier) {
        self.objects.push((name.to_string(), c));
    }

    pub fn object(&self, name: &str) -> Result<&Carrier> {
        self.objects
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::UnknownReference(name.into()))
    }

    pub fn map(&self, name: &str) -> Result<&MapEntry> {
        self.maps.iter().find(|m| m.name == name).ok_or_else(|| Error::UnknownReference(name.into()))
    }

    /// The named object, or the only object when `name` is `None`.
    pub fn pick<'a>(&'a self, name: Option<&'a str>) -> Result<(&'a str, &'a Carrier)> {
        match name {
            Some(n) => Ok((n, self.object(n)?)),
            None => match self.objects.as_slice() {
                [(n, c)] => Ok((n, c)),
                [] => Err(Error::Invalid("document has no objects".into())),
                _ => Err(Error::Invalid("document has several objects; name one".into())),
            },
        }
    }

    /// The named map, or the only map when `name` is `None`.
    pub fn pick_map(&self, name: Option<&str>) -> Result<&MapEntry> {
        match name {
            Some(n) => self.map(n),
            None => match self.maps.as_slice() {
                [m] => Ok(m),
                [] => Err(Error::Invalid("document has no maps".into())),
                _ => Err(Error::Invalid("document has several maps; name one".into())),
            },
        }
    }

    pub fn simplicial_map(&self, m: &MapEntry) -> Result<SimplicialMap> {
        match (&m.value, self.object(&m.source)?, self.object(&m.target)?) {
            (MapValue::Smap(level), Carrier::Sset(s), Carrier::Sset(t)) => SimplicialMap::new(s.clone(), t.clone(), level.clone()),
            _ => Err(Error::ShapeMismatch(format!("{} is not a map of simplicial sets", m.name))),
        }
    }

    pub fn space_map(&self, m: &MapEntry) -> Result<SpaceMap> {
        let (s, t) = (self.object(&m.source)?, self.object(&m.target)?);
        match (&m.value, s.diagram(), t.diagram()) {
            (MapValue::Smap(level), Some(s), Some(t)) => SpaceMap::new(s.clone(), t.clone(), level.clone()),
            _ => Err(Error::ShapeMismatch(format!("{} is not a map of presheaves", m.name))),
        }
    }

    pub fn simplicial_functor(&self, m: &MapEntry) -> Result<SimplicialFunctor> {
        match &m.value {
            MapValue::Sfunctor(f) => Ok(f.clone()),
            _ => Err(Error::ShapeMismatch(format!("{} is not a simplicial functor", m.name))),
        }
    }
}

// ---- raw serialized form ----

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: String,
    objects: Vec<RawObject>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    maps: Vec<RawMap>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawObject {
    Sset {
        name: String,
        trunc: usize,
        cells: Vec<Vec<String>>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    },
    Bisset {
        name: String,
        #[serde(flatten)]
        body: RawBi,
    },
    Symsset {
        name: String,
        #[serde(flatten)]
        body: RawBi,
        transpositions: Vec<Vec<Vec<Vec<usize>>>>,
    },
    Fincat {
        name: String,
        #[serde(flatten)]
        body: RawCat,
    },
    Fingpd {
        name: String,
        #[serde(flatten)]
        body: RawCat,
        inverse: Vec<usize>,
    },
    Sgpd {
        name: String,
        trunc: usize,
        objects: Vec<String>,
        levels: Vec<RawLevel>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    },
}

#[derive(Serialize, Deserialize)]
struct RawBi {
    outer: usize,
    inner: usize,
    /// `cells[n][m]`
    cells: Vec<Vec<Vec<String>>>,
    /// `outer_face[n-1][m][i]`
    outer_face: Vec<Vec<Vec<Vec<usize>>>>,
    /// `outer_degen[n][m][i]`, `n < outer`
    outer_degen: Vec<Vec<Vec<Vec<usize>>>>,
    /// `inner_face[n][m-1][i]`
    inner_face: Vec<Vec<Vec<Vec<usize>>>>,
    /// `inner_degen[n][m][i]`, `m < inner`
    inner_degen: Vec<Vec<Vec<Vec<usize>>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    name: String,
    dom: usize,
    cod: usize,
}

#[derive(Serialize, Deserialize)]
struct RawCat {
    objects: Vec<String>,
    morphisms: Vec<RawMorphism>,
    identities: Vec<usize>,
    /// `[g, f, g∘f]` for every composable pair.
    compose: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLevel {
    morphisms: Vec<RawMorphism>,
    identities: Vec<usize>,
    compose: Vec<[usize; 3]>,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawMap {
    Smap {
        name: String,
        source: String,
        target: String,
        /// One table per sort, sorts in level order (`(n, m)` row-major).
        level: Vec<Vec<usize>>,
    },
    Functor {
        name: String,
        source: String,
        target: String,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    },
    Sfunctor {
        name: String,
        source: String,
        target: String,
        objects: Vec<usize>,
        level: Vec<Vec<usize>>,
    },
}

// ---- printing ----

pub fn print(doc: &Document) -> String {
    let raw = RawDocument {
        version: VERSION.into(),
        objects: doc.objects.iter().map(|(n, c)| raw_object(n, c)).collect(),
        maps: doc.maps.iter().map(raw_map).collect(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("documents serialize");
    s.push('\n');
    s
}

fn raw_object(name: &str, c: &Carrier) -> RawObject {
    let name = name.to_string();
    match c {
        Carrier::Sset(x) => {
            let t = x.trunc();
            RawObject::Sset {
                name,
                trunc: t,
                cells: (0..=t).map(|n| x.cells(n).to_vec()).collect(),
                face: (1..=t).map(|n| (0..=n).map(|i| x.face_table(n, i).to_vec()).collect()).collect(),
                degen: (0..t).map(|n| (0..=n).map(|i| x.degen_table(n, i).to_vec()).collect()).collect(),
            }
        }
        Carrier::Bisset(x) => RawObject::Bisset { name, body: raw_bi(x) },
        Carrier::Symsset(x) => {
            let (outer, inner) = x.truncs();
            let d = x.diagram();
            let transpositions = (1..=outer)
                .map(|n| {
                    (0..=inner)
                        .map(|m| (0..n).map(|i| d.table_by_key(OpKey::Transposition { n, m, i }).to_vec()).collect())
                        .collect()
                })
                .collect();
            RawObject::Symsset { name, body: raw_bi(x), transpositions }
        }
        Carrier::Fincat(c) => RawObject::Fincat { name, body: raw_cat(c) },
        Carrier::Fingpd(g) => RawObject::Fingpd { name, body: raw_cat(&g.cat), inverse: g.inv.clone() },
        Carrier::Sgpd(g) => {
            let t = g.trunc();
            RawObject::Sgpd {
                name,
                trunc: t,
                objects: g.objects().to_vec(),
                levels: g
                    .levels()
                    .iter()
                    .map(|l| {
                        let RawCat { morphisms, identities, compose, .. } = raw_cat(&l.cat);
                        RawLevel { morphisms, identities, compose, inverse: l.inv.clone() }
                    })
                    .collect(),
                face: (1..=t).map(|n| (0..=n).map(|i| g.face_table(n, i).to_vec()).collect()).collect(),
                degen: (0..t).map(|n| (0..=n).map(|i| g.degen_table(n, i).to_vec()).collect()).collect(),
            }
        }
    }
}

fn raw_bi<S: Space>(x: &S) -> RawBi {
    let (outer, inner) = x.truncs();
    let d = x.diagram();
    let tab = |k: OpKey| d.table_by_key(k).to_vec();
    RawBi {
        outer,
        inner,
        cells: (0..=outer).map(|n| (0..=inner).map(|m| x.cells(n, m).to_vec()).collect()).collect(),
        outer_face: (1..=outer)
            .map(|n| (0..=inner).map(|m| (0..=n).map(|i| tab(OpKey::OuterFace { n, m, i })).collect()).collect())
            .collect(),
        outer_degen: (0..outer)
            .map(|n| (0..=inner).map(|m| (0..=n).map(|i| tab(OpKey::OuterDegen { n, m, i })).collect()).collect())
            .collect(),
        inner_face: (0..=outer)
            .map(|n| (1..=inner).map(|m| (0..=m).map(|i| tab(OpKey::InnerFace { n, m, i })).collect()).collect())
            .collect(),
        inner_degen: (0..=outer)
            .map(|n| (0..inner).map(|m| (0..=m).map(|i| tab(OpKey::InnerDegen { n, m, i })).collect()).collect())
            .collect(),
    }
}

fn raw_cat(c: &FinCategory) -> RawCat {
    let mut compose: Vec<[usize; 3]> = c.composable_pairs().into_iter().map(|(g, f, h)| [g, f, h]).collect();
    compose.sort_unstable_by_key(|t| (t[1], t[0]));
    RawCat {
        objects: c.objects().to_vec(),
        morphisms: c.morphisms().iter().map(|m| RawMorphism { name: m.name.clone(), dom: m.dom, cod: m.cod }).collect(),
        identities: c.identities().to_vec(),
        compose,
    }
}

fn raw_map(m: &MapEntry) -> RawMap {
    let (name, source, target) = (m.name.clone(), m.source.clone(), m.target.clone());
    match &m.value {
        MapValue::Smap(level) => RawMap::Smap { name, source, target, level: level.clone() },
        MapValue::Functor(f) => {
            RawMap::Functor { name, source, target, objects: f.objects.clone(), morphisms: f.morphisms.clone() }
        }
        MapValue::Sfunctor(f) => {
            RawMap::Sfunctor { name, source, target, objects: f.objects.clone(), level: f.level.clone() }
        }
    }
}

// ---- parsing ----

pub fn parse(text: &str) -> Result<Document> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), msg: strip_position(&e.to_string()) })?;
    if raw.version != VERSION {
        return Err(Error::Invalid(format!("unsupported version {:?}, expected {VERSION:?}", raw.version)));
    }
    let mut doc = Document::default();
    for o in raw.objects {
        let (name, c) = cook_object(o)?;
        if doc.objects.iter().any(|(n, _)| *n == name) {
            return Err(Error::Invalid(format!("duplicate object name {name}")));
        }
        doc.objects.push((name, c));
    }
    for m in raw.maps {
        let entry = cook_map(&doc, m)?;
        if doc.maps.iter().any(|e| e.name == entry.name) {
            return Err(Error::Invalid(format!("duplicate map name {}", entry.name)));
        }
        doc.maps.push(entry);
    }
    Ok(doc)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn in_object<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Invalid(s) => Error::Invalid(format!("object {name}: {s}")),
        Error::NotNatural(s) => Error::NotNatural(format!("object {name}: {s}")),
        other => other,
    })
}

fn get<'a, T>(v: &'a [T], i: usize, what: &str) -> Result<&'a T> {
    v.get(i).ok_or_else(|| Error::Invalid(format!("{what}: missing entry {i}")))
}

fn cook_object(o: RawObject) -> Result<(String, Carrier)> {
    match o {
        RawObject::Sset { name, trunc, cells, face, degen } => {
            let x = in_object(&name, TruncatedSimplicialSet::new(trunc, cells, face, degen))?;
            Ok((name, Carrier::Sset(x)))
        }
        RawObject::Bisset { name, body } => {
            let d = in_object(&name, cook_bi(&body, None, false))?;
            let x = BiSimplicialSet::from_diagram(d)?;
            in_object(&name, audit_bisimplicial(&x))?;
            Ok((name, Carrier::Bisset(x)))
        }
        RawObject::Symsset { name, body, transpositions } => {
            let d = in_object(&name, cook_bi(&body, Some(&transpositions), true))?;
            let x = SymmetricSimplicialSpace::from_diagram(d)?;
            in_object(&name, audit_bisimplicial(&x))?;
            in_object(&name, audit_symmetric(&x, 3))?;
            Ok((name, Carrier::Symsset(x)))
        }
        RawObject::Fincat { name, body } => {
            let c = in_object(&name, cook_cat(body.objects, body.morphisms, body.identities, &body.compose))?;
            Ok((name, Carrier::Fincat(c)))
        }
        RawObject::Fingpd { name, body, inverse } => {
            let c = in_object(&name, cook_cat(body.objects, body.morphisms, body.identities, &body.compose))?;
            let g = in_object(&name, FinGroupoid::new(c, inverse))?;
            Ok((name, Carrier::Fingpd(g)))
        }
        RawObject::Sgpd { name, trunc, objects, levels, face, degen } => {
            if levels.len() != trunc + 1 {
                return Err(Error::Invalid(format!("object {name}: expected {} levels", trunc + 1)));
            }
            let levels = levels
                .into_iter()
                .map(|l| {
                    let c = cook_cat(objects.clone(), l.morphisms, l.identities, &l.compose)?;
                    FinGroupoid::new(c, l.inverse)
                })
                .collect::<Result<Vec<_>>>();
            let levels = in_object(&name, levels)?;
            let g = in_object(&name, SimplicialGroupoid::new(objects, levels, face, degen))?;
            Ok((name, Carrier::Sgpd(g)))
        }
    }
}

fn cook_cat(objects: Vec<String>, morphisms: Vec<RawMorphism>, ident: Vec<usize>, compose: &[[usize; 3]]) -> Result<FinCategory> {
    let morphisms = morphisms.into_iter().map(|m| Morphism { name: m.name, dom: m.dom, cod: m.cod }).collect();
    let table: Vec<(usize, usize, usize)> = compose.iter().map(|t| (t[0], t[1], t[2])).collect();
    FinCategory::from_table(objects, morphisms, ident, &table)
}

fn cook_bi(b: &RawBi, transpositions: Option<&Vec<Vec<Vec<Vec<usize>>>>>, symmetric: bool) -> Result<Diagram> {
    let (outer, inner) = (b.outer, b.inner);
    let kind = if symmetric { ShapeKind::Symmetric { outer, inner } } else { ShapeKind::Bisimplicial { outer, inner } };
    let shape = Shape::new(kind);
    if b.cells.len() != outer + 1 || b.cells.iter().any(|r| r.len() != inner + 1) {
        return Err(Error::Invalid(format!("cells must be indexed by (n, m) up to ({outer}, {inner})")));
    }
    let names: Vec<Vec<String>> = shape
        .sorts()
        .iter()
        .map(|s| match *s {
            SortKey::Bi(n, m) => b.cells[n][m].clone(),
            SortKey::Level(_) => unreachable!(),
        })
        .collect();
    let tables = shape
        .ops()
        .iter()
        .map(|op| {
            let t = match op.key {
                OpKey::OuterFace { n, m, i } => get(get(get(&b.outer_face, n - 1, "outer_face")?, m, "outer_face")?, i, "outer_face")?,
                OpKey::OuterDegen { n, m, i } => get(get(get(&b.outer_degen, n, "outer_degen")?, m, "outer_degen")?, i, "outer_degen")?,
                OpKey::InnerFace { n, m, i } => get(get(get(&b.inner_face, n, "inner_face")?, m - 1, "inner_face")?, i, "inner_face")?,
                OpKey::InnerDegen { n, m, i } => get(get(get(&b.inner_degen, n, "inner_degen")?, m, "inner_degen")?, i, "inner_degen")?,
                OpKey::Transposition { n, m, i } => {
                    let tr = transpositions.ok_or_else(|| Error::Invalid("transpositions missing".into()))?;
                    get(get(get(tr, n - 1, "transpositions")?, m, "transpositions")?, i, "transpositions")?
                }
                _ => unreachable!(),
            };
            Ok(t.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Diagram::new(shape, names, tables)
}

fn cook_map(doc: &Document, m: RawMap) -> Result<MapEntry> {
    let in_map = |name: &str, e: Error| match e {
        Error::Invalid(s) => Error::Invalid(format!("map {name}: {s}")),
        Error::NotNatural(s) => Error::NotNatural(format!("map {name}: {s}")),
        other => other,
    };
    match m {
        RawMap::Smap { name, source, target, level } => {
            let (s, t) = (doc.object(&source)?, doc.object(&target)?);
            let (Some(ds), Some(dt)) = (s.diagram(), t.diagram()) else {
                return Err(Error::ShapeMismatch(format!("map {name}: smap needs presheaf carriers")));
            };
            if ds.kind() != dt.kind() {
                return Err(Error::ShapeMismatch(format!("map {name}: {} vs {}", ds.kind(), dt.kind())));
            }
            if level.len() != ds.sizes().len() {
                return Err(Error::Invalid(format!("map {name}: expected {} level tables", ds.sizes().len())));
            }
            check_natural(ds, dt, &level).map_err(|e| in_map(&name, e))?;
            Ok(MapEntry { name, source, target, value: MapValue::Smap(level) })
        }
        RawMap::Functor { name, source, target, objects, morphisms } => {
            let cat = |c: &Carrier| match c {
                Carrier::Fincat(c) => Some(c.clone()),
                Carrier::Fingpd(g) => Some(g.cat.clone()),
                _ => None,
            };
            let (Some(s), Some(t)) = (cat(doc.object(&source)?), cat(doc.object(&target)?)) else {
                return Err(Error::ShapeMismatch(format!("map {name}: functor needs category carriers")));
            };
            let f = FinFunctor { objects, morphisms };
            f.check(&s, &t).map_err(|e| in_map(&name, e))?;
            Ok(MapEntry { name, source, target, value: MapValue::Functor(f) })
        }
        RawMap::Sfunctor { name, source, target, objects, level } => {
            let (Carrier::Sgpd(s), Carrier::Sgpd(t)) = (doc.object(&source)?, doc.object(&target)?) else {
                return Err(Error::ShapeMismatch(format!("map {name}: sfunctor needs sgpd carriers")));
            };
            let f = SimplicialFunctor::new(s.clone(), t.clone(), objects, level).map_err(|e| in_map(&name, e))?;
            Ok(MapEntry { name, source, target, value: MapValue::Sfunctor(f) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{irep, rep_outer};
    use crate::category::FinGroupoid;
    use crate::group::FinGroup;
    use crate::sset::{horn, standard_simplex};

    fn round_trip(doc: &Document) {
        let text = print(doc);
        let back = parse(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(print(&back), text);
    }

    #[test]
    fn every_carrier_round_trips() {
        let mut doc = Document::default();
        doc.push("D1", Carrier::Sset(standard_simplex(1, 2)));
        doc.push("E", Carrier::Sset(TruncatedSimplicialSet::empty(2)));
        doc.push("B", Carrier::Bisset(rep_outer(1, 2, 1)));
        doc.push("S", Carrier::Symsset(irep(1, 2, 1)));
        let g = FinGroupoid::connected(&FinGroup::cyclic(2), &["a", "b"]);
        doc.push("C", Carrier::Fincat(g.cat.clone()));
        doc.push("G", Carrier::Fingpd(g.clone()));
        doc.push("SG", Carrier::Sgpd(SimplicialGroupoid::constant(&g, 2)));
        round_trip(&doc);
    }

    #[test]
    fn maps_round_trip() {
        let (h, incl) = horn(2, 1, 2).unwrap();
        let mut doc = Document::default();
        doc.push("H", Carrier::Sset(h));
        doc.push("D2", Carrier::Sset(standard_simplex(2, 2)));
        doc.maps.push(MapEntry { name: "i".into(), source: "H".into(), target: "D2".into(), value: MapValue::Smap(incl.level) });
        let g = SimplicialGroupoid::point("x", 1);
        let f = SimplicialFunctor::identity(&g);
        doc.push("P", Carrier::Sgpd(g));
        doc.maps.push(MapEntry { name: "id".into(), source: "P".into(), target: "P".into(), value: MapValue::Sfunctor(f) });
        round_trip(&doc);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("{\n  \"version\": \"invsegal/1\",\n  \"objects\": [ }").unwrap_err();
        let Error::Parse { line, column, .. } = err else { panic!("{err:?}") };
        assert_eq!(line, 3);
        assert!(column > 0);
    }

    #[test]
    fn broken_identity_is_named() {
        let doc = Document::single("X", Carrier::Sset(standard_simplex(1, 2)));
        let text = print(&doc);
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        // d_0 of the degenerate 1-cell on vertex 0 now points at vertex 1
        v["objects"][0]["face"][0][0][0] = serde_json::json!(1);
        let err = parse(&v.to_string()).unwrap_err().to_string();
        assert!(err.starts_with("invalid structure: object X: simplicial identity"), "{err}");
        assert!(err.contains("(i=0, j=2) at level 2 cell 000"), "{err}");
    }

    #[test]
    fn empty_and_unknown_references() {
        round_trip(&Document::single("E", Carrier::Sset(TruncatedSimplicialSet::empty(0))));
        let bad = r#"{"version":"invsegal/1","objects":[],"maps":[{"type":"smap","name":"f","source":"A","target":"B","level":[]}]}"#;
        assert!(matches!(parse(bad), Err(Error::UnknownReference(_))));
        assert!(parse(r#"{"version":"x/0","objects":[]}"#).is_err());
    }
}
