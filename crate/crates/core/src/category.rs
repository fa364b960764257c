//! Finite categories and groupoids given by explicit composition tables,
//! functors between them, and the equivalence-of-categories decision.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::presheaf::Budget;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// A finite category. Composition is stored for every composable pair.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    ident: Vec<usize>,
    /// `comp[f][k]` = `g ∘ f` where `g = out[cod f][k]`.
    comp: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
    pos_out: Vec<usize>,
    homs: HashMap<(usize, usize), Vec<usize>>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.ident == other.ident
            && self.comp == other.comp
    }
}
impl Eq for FinCategory {}

impl FinCategory {
    /// Builds and validates a category; `compose(g, f)` is queried for every
    /// composable pair and must return `g ∘ f`.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        ident: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let nobj = objects.len();
        if ident.len() != nobj {
            return Err(Error::Invalid("identity table not total".into()));
        }
        if morphisms.iter().any(|m| m.dom >= nobj || m.cod >= nobj) {
            return Err(Error::Invalid("morphism endpoint out of range".into()));
        }
        let mut out = vec![Vec::new(); nobj];
        let mut pos_out = vec![0; morphisms.len()];
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            pos_out[i] = out[m.dom].len();
            out[m.dom].push(i);
            homs.entry((m.dom, m.cod)).or_default().push(i);
        }
        let mut comp = Vec::with_capacity(morphisms.len());
        for (f, mf) in morphisms.iter().enumerate() {
            let mut row = Vec::with_capacity(out[mf.cod].len());
            for &g in &out[mf.cod] {
                let h = compose(g, f).ok_or_else(|| {
                    Error::Invalid(format!(
                        "composition table missing {} ∘ {}",
                        morphisms[g].name, mf.name
                    ))
                })?;
                row.push(h);
            }
            comp.push(row);
        }
        let cat = FinCategory { objects, morphisms, ident, comp, out, pos_out, homs };
        cat.validate()?;
        Ok(cat)
    }

    /// Builds from an explicit exhaustive list of `(g, f, g∘f)` triples.
    pub fn from_table(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        ident: Vec<usize>,
        table: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let map: HashMap<(usize, usize), usize> = table.iter().map(|&(g, f, h)| ((g, f), h)).collect();
        if map.len() != table.len() {
            return Err(Error::Invalid("composition table has duplicate entries".into()));
        }
        let cat = Self::from_fn(objects, morphisms, ident, |g, f| map.get(&(g, f)).copied())?;
        if table.len() != cat.composable_pairs().len() {
            return Err(Error::Invalid("composition table lists non-composable pairs".into()));
        }
        Ok(cat)
    }

    fn validate(&self) -> Result<()> {
        for (x, &i) in self.ident.iter().enumerate() {
            let m = self
                .morphisms
                .get(i)
                .ok_or_else(|| Error::Invalid("identity out of range".into()))?;
            if m.dom != x || m.cod != x {
                return Err(Error::Invalid(format!("identity of {} has wrong endpoints", self.objects[x])));
            }
        }
        let names: std::collections::BTreeSet<&String> = self.morphisms.iter().map(|m| &m.name).collect();
        if names.len() != self.morphisms.len() {
            return Err(Error::Invalid("duplicate morphism name".into()));
        }
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (k, &g) in self.out[mf.cod].iter().enumerate() {
                let h = self.comp[f][k];
                let mh = self
                    .morphisms
                    .get(h)
                    .ok_or_else(|| Error::Invalid("composite out of range".into()))?;
                if mh.dom != mf.dom || mh.cod != self.morphisms[g].cod {
                    return Err(Error::Invalid(format!(
                        "{} ∘ {} has wrong endpoints",
                        self.morphisms[g].name, mf.name
                    )));
                }
            }
            if self.compose(self.ident[mf.cod], f) != f || self.compose(f, self.ident[mf.dom]) != f {
                return Err(Error::Invalid(format!("unit law fails at {}", mf.name)));
            }
        }
        for f in 0..self.morphisms.len() {
            for &g in &self.out[self.morphisms[f].cod] {
                let gf = self.compose(g, f);
                for &h in &self.out[self.morphisms[g].cod] {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        return Err(Error::Invalid(format!(
                            "associativity fails at ({}, {}, {})",
                            self.morphisms[h].name, self.morphisms[g].name, self.morphisms[f].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }
    pub fn identity(&self, x: usize) -> usize {
        self.ident[x]
    }
    pub fn identities(&self) -> &[usize] {
        &self.ident
    }
    pub fn dom(&self, f: usize) -> usize {
        self.morphisms[f].dom
    }
    pub fn cod(&self, f: usize) -> usize {
        self.morphisms[f].cod
    }
    /// Morphisms with the given domain.
    pub fn out_of(&self, x: usize) -> &[usize] {
        &self.out[x]
    }
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.homs.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }
    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn find_morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// `g ∘ f`; panics when not composable.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        assert_eq!(self.morphisms[g].dom, self.morphisms[f].cod, "not composable");
        self.comp[f][self.pos_out[g]]
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        (self.morphisms[g].dom == self.morphisms[f].cod).then(|| self.comp[f][self.pos_out[g]])
    }

    /// Every `(g, f, g∘f)`, ordered by `f` then `g`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.morphisms.len() {
            for (k, &g) in self.out[self.morphisms[f].cod].iter().enumerate() {
                out.push((g, f, self.comp[f][k]));
            }
        }
        out
    }

    /// Two-sided inverse of `f`, if any.
    pub fn inverse_of(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == self.ident[a] && self.compose(f, g) == self.ident[b])
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.morphisms.len()).all(|f| self.inverse_of(f).is_some())
    }

    pub fn to_groupoid(&self) -> Option<FinGroupoid> {
        let inv: Option<Vec<usize>> = (0..self.morphisms.len()).map(|f| self.inverse_of(f)).collect();
        inv.map(|inv| FinGroupoid { cat: self.clone(), inv })
    }

    /// The category with one object and one morphism.
    pub fn terminal() -> Self {
        Self::discrete(&["*"])
    }

    pub fn discrete(names: &[&str]) -> Self {
        let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism { name: format!("id_{o}"), dom: i, cod: i })
            .collect();
        let ident = (0..objects.len()).collect();
        Self::from_fn(objects, morphisms, ident, |g, _| Some(g)).unwrap()
    }

    /// The poset `[1] = {a → b}`.
    pub fn walking_arrow() -> Self {
        Self::poset(&["a", "b"], &[(0, 1)])
    }

    /// Poset on the named elements with the reflexive–transitive closure of
    /// the given relations (must be antisymmetric).
    pub fn poset(names: &[&str], rel: &[(usize, usize)]) -> Self {
        let n = names.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in rel {
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        let mut morphisms = Vec::new();
        let mut idx = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                if le[i][j] {
                    let name = if i == j {
                        format!("id_{}", names[i])
                    } else {
                        format!("{}<{}", names[i], names[j])
                    };
                    idx.insert((i, j), morphisms.len());
                    morphisms.push(Morphism { name, dom: i, cod: j });
                }
            }
        }
        let ident = (0..n).map(|i| idx[&(i, i)]).collect();
        let ms = morphisms.clone();
        Self::from_fn(names.iter().map(|s| s.to_string()).collect(), morphisms, ident, |g, f| {
            idx.get(&(ms[f].dom, ms[g].cod)).copied()
        })
        .unwrap()
    }

    /// Disjoint union of categories; object and morphism names get the
    /// given prefixes when they would collide.
    pub fn disjoint_union(parts: &[&FinCategory]) -> Self {
        let mut objects = Vec::new();
        let mut morphisms = Vec::new();
        let mut ident = Vec::new();
        let mut offsets = Vec::new();
        let mut used_o = std::collections::BTreeSet::new();
        let mut used_m = std::collections::BTreeSet::new();
        for (p, c) in parts.iter().enumerate() {
            let (oo, mo) = (objects.len(), morphisms.len());
            offsets.push((oo, mo));
            for o in &c.objects {
                let mut name = o.clone();
                if !used_o.insert(name.clone()) {
                    name = format!("{p}:{o}");
                    used_o.insert(name.clone());
                }
                objects.push(name);
            }
            for m in &c.morphisms {
                let mut name = m.name.clone();
                if !used_m.insert(name.clone()) {
                    name = format!("{p}:{}", m.name);
                    used_m.insert(name.clone());
                }
                morphisms.push(Morphism { name, dom: m.dom + oo, cod: m.cod + oo });
            }
            ident.extend(c.ident.iter().map(|&i| i + mo));
        }
        let owner: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(p, c)| std::iter::repeat_n(p, c.morphisms.len()))
            .collect();
        Self::from_fn(objects, morphisms, ident, |g, f| {
            let p = owner[f];
            let (_, mo) = offsets[p];
            parts[p].try_compose(g - mo, f - mo).map(|h| h + mo)
        })
        .unwrap()
    }
}

/// A finite category with a chosen inverse for every morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroupoid {
    pub cat: FinCategory,
    pub inv: Vec<usize>,
}

impl FinGroupoid {
    pub fn new(cat: FinCategory, inv: Vec<usize>) -> Result<Self> {
        if inv.len() != cat.num_morphisms() {
            return Err(Error::Invalid("inverse table not total".into()));
        }
        for (f, &g) in inv.iter().enumerate() {
            let ok = g < cat.num_morphisms()
                && cat.try_compose(g, f) == Some(cat.identity(cat.dom(f)))
                && cat.try_compose(f, g) == Some(cat.identity(cat.cod(f)));
            if !ok {
                return Err(Error::Invalid(format!("bad inverse for {}", cat.morphisms()[f].name)));
            }
        }
        Ok(FinGroupoid { cat, inv })
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inv[f]
    }

    /// A group as a one-object groupoid.
    pub fn from_group(g: &FinGroup, object: &str) -> Self {
        Self::connected(g, &[object])
    }

    /// Connected groupoid on the given objects with vertex group `g`:
    /// morphism `(i, j, k)` goes from object `i` to object `j`, composition
    /// multiplies the labels.
    pub fn connected(g: &FinGroup, objects: &[&str]) -> Self {
        let r = objects.len();
        let n = g.order();
        let single = r == 1;
        let mut morphisms = Vec::with_capacity(r * r * n);
        for i in 0..r {
            for j in 0..r {
                for k in 0..n {
                    let name = if single {
                        g.elements[k].clone()
                    } else {
                        format!("{}>{}:{}", objects[i], objects[j], g.elements[k])
                    };
                    morphisms.push(Morphism { name, dom: i, cod: j });
                }
            }
        }
        let id = |i: usize, j: usize, k: usize| (i * r + j) * n + k;
        let ident = (0..r).map(|i| id(i, i, g.identity)).collect();
        let cat = FinCategory::from_fn(
            objects.iter().map(|s| s.to_string()).collect(),
            morphisms,
            ident,
            |gm, fm| {
                let (fi, fj, fk) = (fm / (r * n), (fm / n) % r, fm % n);
                let (gi, gj, gk) = (gm / (r * n), (gm / n) % r, gm % n);
                (gi == fj).then(|| id(fi, gj, g.mul[gk][fk]))
            },
        )
        .unwrap();
        let inv = (0..r * r * n)
            .map(|m| {
                let (i, j, k) = (m / (r * n), (m / n) % r, m % n);
                id(j, i, g.inverse(k))
            })
            .collect();
        FinGroupoid::new(cat, inv).unwrap()
    }

    /// The walking isomorphism: objects `x`, `y`, one morphism in each hom-set.
    pub fn walking_iso() -> Self {
        let objects = vec!["x".to_string(), "y".to_string()];
        let morphisms = vec![
            Morphism { name: "id_x".into(), dom: 0, cod: 0 },
            Morphism { name: "h".into(), dom: 0, cod: 1 },
            Morphism { name: "h'".into(), dom: 1, cod: 0 },
            Morphism { name: "id_y".into(), dom: 1, cod: 1 },
        ];
        let hom = |a: usize, b: usize| a * 2 + b;
        let ms = morphisms.clone();
        let cat = FinCategory::from_fn(objects, morphisms, vec![0, 3], |g, f| {
            (ms[g].dom == ms[f].cod).then(|| hom(ms[f].dom, ms[g].cod))
        })
        .unwrap();
        FinGroupoid::new(cat, vec![0, 2, 1, 3]).unwrap()
    }

    pub fn disjoint_union(parts: &[&FinGroupoid]) -> Self {
        let cats: Vec<&FinCategory> = parts.iter().map(|p| &p.cat).collect();
        let cat = FinCategory::disjoint_union(&cats);
        let mut inv = Vec::new();
        let mut off = 0;
        for p in parts {
            inv.extend(p.inv.iter().map(|&i| i + off));
            off += p.cat.num_morphisms();
        }
        FinGroupoid::new(cat, inv).unwrap()
    }
}

/// A functor given by object and morphism tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl FinFunctor {
    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            objects: (0..c.num_objects()).collect(),
            morphisms: (0..c.num_morphisms()).collect(),
        }
    }

    pub fn check(&self, src: &FinCategory, tgt: &FinCategory) -> Result<()> {
        if self.objects.len() != src.num_objects() || self.morphisms.len() != src.num_morphisms() {
            return Err(Error::Invalid("functor tables not total".into()));
        }
        if self.objects.iter().any(|&o| o >= tgt.num_objects())
            || self.morphisms.iter().any(|&m| m >= tgt.num_morphisms())
        {
            return Err(Error::Invalid("functor table out of range".into()));
        }
        for f in 0..src.num_morphisms() {
            let ff = self.morphisms[f];
            if tgt.dom(ff) != self.objects[src.dom(f)] || tgt.cod(ff) != self.objects[src.cod(f)] {
                return Err(Error::Invalid(format!("functor breaks endpoints of {}", src.morphisms()[f].name)));
            }
        }
        for x in 0..src.num_objects() {
            if self.morphisms[src.identity(x)] != tgt.identity(self.objects[x]) {
                return Err(Error::Invalid("functor does not preserve identities".into()));
            }
        }
        for (g, f, h) in src.composable_pairs() {
            if tgt.compose(self.morphisms[g], self.morphisms[f]) != self.morphisms[h] {
                return Err(Error::Invalid("functor does not preserve composition".into()));
            }
        }
        Ok(())
    }

    pub fn compose(&self, next: &FinFunctor) -> FinFunctor {
        FinFunctor {
            objects: self.objects.iter().map(|&o| next.objects[o]).collect(),
            morphisms: self.morphisms.iter().map(|&m| next.morphisms[m]).collect(),
        }
    }
}

/// Why a functor fails to be an equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceWitness {
    /// `Hom(a, b) -> Hom(Fa, Fb)` misses a morphism.
    NotFull { a: String, b: String, missed: String },
    /// `Hom(a, b) -> Hom(Fa, Fb)` identifies two morphisms.
    NotFaithful { a: String, b: String, first: String, second: String },
    /// No object in the image is isomorphic to this one.
    NotEssentiallySurjective { object: String },
}

impl std::fmt::Display for EquivalenceWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EquivalenceWitness::NotFull { a, b, missed } => {
                write!(f, "not full on Hom({a},{b}): {missed} not hit")
            }
            EquivalenceWitness::NotFaithful { a, b, first, second } => {
                write!(f, "not faithful on Hom({a},{b}): {first} and {second} collapse")
            }
            EquivalenceWitness::NotEssentiallySurjective { object } => {
                write!(f, "not essentially surjective: {object} not in the essential image")
            }
        }
    }
}

/// Decides whether `F` is full, faithful and essentially surjective.
pub fn cat_equivalence_check(
    src: &FinCategory,
    tgt: &FinCategory,
    f: &FinFunctor,
) -> std::result::Result<(), EquivalenceWitness> {
    for a in 0..src.num_objects() {
        for b in 0..src.num_objects() {
            let (fa, fb) = (f.objects[a], f.objects[b]);
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for &m in src.hom(a, b) {
                if let Some(prev) = seen.insert(f.morphisms[m], m) {
                    return Err(EquivalenceWitness::NotFaithful {
                        a: src.objects[a].clone(),
                        b: src.objects[b].clone(),
                        first: src.morphisms[prev].name.clone(),
                        second: src.morphisms[m].name.clone(),
                    });
                }
            }
            if let Some(&missed) = tgt.hom(fa, fb).iter().find(|t| !seen.contains_key(t)) {
                return Err(EquivalenceWitness::NotFull {
                    a: src.objects[a].clone(),
                    b: src.objects[b].clone(),
                    missed: tgt.morphisms[missed].name.clone(),
                });
            }
        }
    }
    for z in 0..tgt.num_objects() {
        let reached = f.objects.iter().any(|&fx| {
            fx == z || tgt.hom(fx, z).iter().any(|&m| tgt.inverse_of(m).is_some())
        });
        if !reached {
            return Err(EquivalenceWitness::NotEssentiallySurjective { object: tgt.objects[z].clone() });
        }
    }
    Ok(())
}

/// Enumerates all functors `src -> tgt` by assigning objects, then
/// morphisms hom-set by hom-set with composition checks.
pub fn enumerate_functors(src: &FinCategory, tgt: &FinCategory, budget: &mut Budget) -> Result<Vec<FinFunctor>> {
    let mut out = Vec::new();
    let mut objs = vec![0; src.num_objects()];
    enum_objects(src, tgt, 0, &mut objs, budget, &mut out)?;
    Ok(out)
}

fn enum_objects(
    src: &FinCategory,
    tgt: &FinCategory,
    i: usize,
    objs: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<FinFunctor>,
) -> Result<()> {
    if i == src.num_objects() {
        let mut mors = vec![usize::MAX; src.num_morphisms()];
        for x in 0..src.num_objects() {
            mors[src.identity(x)] = tgt.identity(objs[x]);
        }
        return enum_morphisms(src, tgt, 0, objs, &mut mors, budget, out);
    }
    for o in 0..tgt.num_objects() {
        budget.tick()?;
        objs[i] = o;
        enum_objects(src, tgt, i + 1, objs, budget, out)?;
    }
    Ok(())
}

fn enum_morphisms(
    src: &FinCategory,
    tgt: &FinCategory,
    f: usize,
    objs: &[usize],
    mors: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<FinFunctor>,
) -> Result<()> {
    if f == src.num_morphisms() {
        let func = FinFunctor { objects: objs.to_vec(), morphisms: mors.clone() };
        if func.check(src, tgt).is_ok() {
            out.push(func);
        }
        return Ok(());
    }
    if mors[f] != usize::MAX {
        return enum_morphisms(src, tgt, f + 1, objs, mors, budget, out);
    }
    let cands = tgt.hom(objs[src.dom(f)], objs[src.cod(f)]).to_vec();
    for c in cands {
        budget.tick()?;
        mors[f] = c;
        // prune: check composites among assigned morphisms involving f
        let ok = (0..f).chain(std::iter::once(f)).all(|g| {
            let mut fine = true;
            if let Some(h) = src.try_compose(g, f) {
                if mors[h] != usize::MAX && h <= f && mors[g] != usize::MAX {
                    fine &= tgt.compose(mors[g], mors[f]) == mors[h];
                }
            }
            if let Some(h) = src.try_compose(f, g) {
                if mors[h] != usize::MAX && h <= f && mors[g] != usize::MAX {
                    fine &= tgt.compose(mors[f], mors[g]) == mors[h];
                }
            }
            fine
        });
        if ok {
            enum_morphisms(src, tgt, f + 1, objs, mors, budget, out)?;
        }
        mors[f] = usize::MAX;
    }
    Ok(())
}

/// Finds an isomorphism of categories (bijective functor) if one exists.
pub fn find_category_isomorphism(a: &FinCategory, b: &FinCategory, budget: &mut Budget) -> Result<Option<FinFunctor>> {
    if a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() {
        return Ok(None);
    }
    let all = enumerate_functors(a, b, budget)?;
    Ok(all.into_iter().find(|f| {
        let mut o = f.objects.clone();
        o.sort();
        o.dedup();
        let mut m = f.morphisms.clone();
        m.sort();
        m.dedup();
        o.len() == b.num_objects() && m.len() == b.num_morphisms()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_functor_is_equivalence() {
        let c = FinCategory::walking_arrow();
        assert!(cat_equivalence_check(&c, &c, &FinFunctor::identity(&c)).is_ok());
    }

    #[test]
    fn point_into_walking_iso_is_equivalence() {
        let p = FinCategory::discrete(&["x"]);
        let f = FinGroupoid::walking_iso();
        let func = FinFunctor { objects: vec![0], morphisms: vec![0] };
        func.check(&p, &f.cat).unwrap();
        assert!(cat_equivalence_check(&p, &f.cat, &func).is_ok());
    }

    #[test]
    fn arrow_to_terminal_is_not_full() {
        let c = FinCategory::walking_arrow();
        let t = FinCategory::terminal();
        let func = FinFunctor { objects: vec![0, 0], morphisms: vec![0; 3] };
        func.check(&c, &t).unwrap();
        match cat_equivalence_check(&c, &t, &func) {
            Err(EquivalenceWitness::NotFull { a, b, .. }) => assert_eq!((a.as_str(), b.as_str()), ("b", "a")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn discrete_two_to_terminal_is_not_full() {
        let c = FinCategory::discrete(&["p", "q"]);
        let t = FinCategory::terminal();
        let func = FinFunctor { objects: vec![0, 0], morphisms: vec![0, 0] };
        assert!(matches!(cat_equivalence_check(&c, &t, &func), Err(EquivalenceWitness::NotFull { .. })));
    }

    #[test]
    fn functor_counts() {
        let mut b = Budget::default();
        let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "*");
        let z4 = FinGroupoid::from_group(&FinGroup::cyclic(4), "*");
        // homomorphisms Z4 -> Z2: 2 ; Z2 -> Z4: 2
        assert_eq!(enumerate_functors(&z4.cat, &z2.cat, &mut b).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&z2.cat, &z4.cat, &mut b).unwrap().len(), 2);
        let arrow = FinCategory::walking_arrow();
        let f = FinGroupoid::walking_iso();
        assert_eq!(enumerate_functors(&arrow, &f.cat, &mut b).unwrap().len(), 4);
    }

    #[test]
    fn connected_groupoid_is_valid() {
        let g = FinGroupoid::connected(&FinGroup::symmetric3(), &["a", "b", "c"]);
        assert_eq!(g.cat.num_morphisms(), 54);
        assert!(g.cat.is_groupoid());
    }
}
