//! Simplicial groupoids on finite object sets, simplicial functors, mapping
//! spaces, components, Dwyer-Kan equivalences and fibrations.

use std::collections::HashMap;

use serde::Serialize;

use crate::category::{cat_equivalence_check, FinCategory, FinFunctor, FinGroupoid, Morphism};
use crate::error::{Error, Result};
use crate::kan::{kan_fibration_check, HornWitness};
use crate::oracle::{weak_equiv_oracle, EquivalenceVerdict};
use crate::presheaf;
use crate::sset::{boundary, horn, pi0, standard_simplex, Components, SimplicialMap, TruncatedSimplicialSet};

/// A simplicial object in groupoids with constant object set. The
/// morphisms of all levels form a simplicial set whose faces and
/// degeneracies are functors fixing objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGroupoid {
    objects: Vec<String>,
    levels: Vec<FinGroupoid>,
    morphisms: TruncatedSimplicialSet,
}

impl SimplicialGroupoid {
    /// `face[n-1][i]` and `degen[n][i]` are morphism tables between levels.
    pub fn new(
        objects: Vec<String>,
        levels: Vec<FinGroupoid>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Invalid("a simplicial groupoid needs level 0".into()));
        }
        let trunc = levels.len() - 1;
        for (n, l) in levels.iter().enumerate() {
            if l.cat.objects() != objects.as_slice() {
                return Err(Error::Invalid(format!("level {n} has a different object set")));
            }
        }
        let cells = levels.iter().map(|l| l.cat.morphisms().iter().map(|m| m.name.clone()).collect()).collect();
        let morphisms = TruncatedSimplicialSet::new(trunc, cells, face, degen)?;
        let g = SimplicialGroupoid { objects, levels, morphisms };
        g.check_functorial()?;
        Ok(g)
    }

    fn check_functorial(&self) -> Result<()> {
        let shape = self.morphisms.diagram().shape().clone();
        for op in shape.ops() {
            let (src, dst) = (&self.levels[op.src].cat, &self.levels[op.dst].cat);
            let t = self.morphisms.diagram().table(shape.op(op.key));
            for f in 0..src.num_morphisms() {
                if dst.dom(t[f]) != src.dom(f) || dst.cod(t[f]) != src.cod(f) {
                    return Err(Error::NotNatural(format!("{:?} moves the endpoints of {}", op.key, src.morphisms()[f].name)));
                }
            }
            for x in 0..src.num_objects() {
                if t[src.identity(x)] != dst.identity(x) {
                    return Err(Error::NotNatural(format!("{:?} does not preserve identities", op.key)));
                }
            }
            for (g, f, h) in src.composable_pairs() {
                if dst.compose(t[g], t[f]) != t[h] {
                    return Err(Error::NotNatural(format!("{:?} does not preserve composition", op.key)));
                }
            }
        }
        Ok(())
    }

    pub fn trunc(&self) -> usize {
        self.morphisms.trunc()
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn level(&self, n: usize) -> &FinGroupoid {
        &self.levels[n]
    }
    pub fn levels(&self) -> &[FinGroupoid] {
        &self.levels
    }
    /// All morphisms as a simplicial set.
    pub fn morphism_sset(&self) -> &TruncatedSimplicialSet {
        &self.morphisms
    }
    pub fn find_object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        self.morphisms.face_table(n, i)
    }
    pub fn degen_table(&self, n: usize, i: usize) -> &[usize] {
        self.morphisms.degen_table(n, i)
    }

    /// Levelwise constant simplicial groupoid.
    pub fn constant(g: &FinGroupoid, trunc: usize) -> Self {
        let m = g.cat.num_morphisms();
        let id: Vec<usize> = (0..m).collect();
        SimplicialGroupoid::new(
            g.cat.objects().to_vec(),
            vec![g.clone(); trunc + 1],
            (1..=trunc).map(|n| vec![id.clone(); n + 1]).collect(),
            (0..trunc).map(|n| vec![id.clone(); n + 1]).collect(),
        )
        .expect("constant object is valid")
    }

    pub fn empty(trunc: usize) -> Self {
        Self::constant(&FinGroupoid::new(FinCategory::discrete(&[]), Vec::new()).unwrap(), trunc)
    }

    /// The one-object groupoid `{x}`.
    pub fn point(name: &str, trunc: usize) -> Self {
        Self::constant(&FinGroupoid::from_group(&crate::group::FinGroup::trivial(), name), trunc)
    }

    /// Mapping space `Map(x, y)`; cells are named as morphisms.
    pub fn map_space(&self, x: usize, y: usize) -> (TruncatedSimplicialSet, Vec<Vec<usize>>) {
        let keep: Vec<Vec<bool>> = self
            .levels
            .iter()
            .map(|l| (0..l.cat.num_morphisms()).map(|f| l.cat.dom(f) == x && l.cat.cod(f) == y).collect())
            .collect();
        let (d, incl) = presheaf::subobject(self.morphisms.diagram(), &keep).expect("homs are closed");
        (TruncatedSimplicialSet::from_diagram(d).unwrap(), incl)
    }

    /// "Čech" simplicial groupoid of a congruence on `g`: level `n`
    /// morphisms are `(n+1)`-tuples of congruent parallel morphisms,
    /// composed componentwise. Mapping spaces are nerves of codiscrete
    /// groupoids on the congruence classes.
    pub fn cech(g: &FinGroupoid, class: &[usize], trunc: usize) -> Result<Self> {
        let c = &g.cat;
        let nm = c.num_morphisms();
        if class.len() != nm {
            return Err(Error::Invalid("class table not total".into()));
        }
        for f in 0..nm {
            for f2 in 0..nm {
                if class[f] == class[f2] && (c.dom(f) != c.dom(f2) || c.cod(f) != c.cod(f2)) {
                    return Err(Error::Invalid("congruent morphisms must be parallel".into()));
                }
            }
        }
        for (g1, f1, h1) in c.composable_pairs() {
            for &g2 in c.hom(c.dom(g1), c.cod(g1)).iter().filter(|&&m| class[m] == class[g1]) {
                for &f2 in c.hom(c.dom(f1), c.cod(f1)).iter().filter(|&&m| class[m] == class[f1]) {
                    if class[c.compose(g2, f2)] != class[h1] {
                        return Err(Error::Invalid("relation is not a congruence".into()));
                    }
                }
            }
        }
        // tuples per level
        let mut tuples: Vec<Vec<Vec<usize>>> = vec![(0..nm).map(|f| vec![f]).collect()];
        for _ in 1..=trunc {
            let prev = tuples.last().unwrap();
            let mut next = Vec::new();
            for t in prev {
                for f in c.hom(c.dom(t[0]), c.cod(t[0])) {
                    if class[*f] == class[t[0]] {
                        let mut u = t.clone();
                        u.push(*f);
                        next.push(u);
                    }
                }
            }
            tuples.push(next);
        }
        // order each level by (first component's hom, tuple) for readability
        let index: Vec<HashMap<Vec<usize>, usize>> =
            tuples.iter().map(|ts| ts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect()).collect();
        let mut levels = Vec::with_capacity(trunc + 1);
        for (n, ts) in tuples.iter().enumerate() {
            let morphisms: Vec<Morphism> = ts
                .iter()
                .map(|t| Morphism {
                    name: if n == 0 {
                        c.morphisms()[t[0]].name.clone()
                    } else {
                        t.iter().map(|&f| c.morphisms()[f].name.as_str()).collect::<Vec<_>>().join(";")
                    },
                    dom: c.dom(t[0]),
                    cod: c.cod(t[0]),
                })
                .collect();
            let ident = (0..c.num_objects()).map(|x| index[n][&vec![c.identity(x); n + 1]]).collect();
            let cat = FinCategory::from_fn(c.objects().to_vec(), morphisms, ident, |gg, ff| {
                let (a, b) = (&ts[gg], &ts[ff]);
                if c.dom(a[0]) != c.cod(b[0]) {
                    return None;
                }
                let t: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| c.compose(x, y)).collect();
                index[n].get(&t).copied()
            })?;
            let inv = ts
                .iter()
                .map(|t| index[n][&t.iter().map(|&f| g.inverse(f)).collect::<Vec<_>>()])
                .collect();
            levels.push(FinGroupoid::new(cat, inv)?);
        }
        let face = (1..=trunc)
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        tuples[n]
                            .iter()
                            .map(|t| {
                                let mut u = t.clone();
                                u.remove(i);
                                index[n - 1][&u]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let degen = (0..trunc)
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        tuples[n]
                            .iter()
                            .map(|t| {
                                let mut u = t.clone();
                                u.insert(i, t[i]);
                                index[n + 1][&u]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SimplicialGroupoid::new(c.objects().to_vec(), levels, face, degen)
    }

    /// Disjoint union.
    pub fn coproduct(a: &Self, b: &Self) -> Result<Self> {
        if a.trunc() != b.trunc() {
            return Err(Error::TruncationMismatch(format!("{}", a.trunc()), format!("{}", b.trunc())));
        }
        let levels: Vec<FinGroupoid> =
            a.levels.iter().zip(&b.levels).map(|(x, y)| FinGroupoid::disjoint_union(&[x, y])).collect();
        let objects = levels[0].cat.objects().to_vec();
        let shift = |n: usize| a.levels[n].cat.num_morphisms();
        let face = (1..=a.trunc())
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        let mut t = a.face_table(n, i).to_vec();
                        t.extend(b.face_table(n, i).iter().map(|&v| v + shift(n - 1)));
                        t
                    })
                    .collect()
            })
            .collect();
        let degen = (0..a.trunc())
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        let mut t = a.degen_table(n, i).to_vec();
                        t.extend(b.degen_table(n, i).iter().map(|&v| v + shift(n + 1)));
                        t
                    })
                    .collect()
            })
            .collect();
        SimplicialGroupoid::new(objects, levels, face, degen)
    }

    /// Object indices of each connected component (via level-0 morphisms).
    pub fn components(&self) -> Vec<usize> {
        let c = &self.levels[0].cat;
        let mut comp: Vec<usize> = (0..c.num_objects()).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for f in 0..c.num_morphisms() {
                let (a, b) = (comp[c.dom(f)], comp[c.cod(f)]);
                if a != b {
                    let m = a.min(b);
                    comp[c.dom(f)] = m;
                    comp[c.cod(f)] = m;
                    changed = true;
                }
            }
        }
        comp
    }

    /// Freely adjoins an isomorphism `a -> b`, when the component of `b`
    /// is thin (every hom-set a singleton at every level) and differs
    /// from that of `a`. The result is computed as a retraction of `b`'s
    /// component onto `a`: `Hom(p, q) = Hom(r p, r q)`.
    pub fn adjoin_iso(&self, a: usize, b: usize) -> Result<Self> {
        let comp = self.components();
        if comp[a] == comp[b] {
            return Err(Error::Invalid("objects already connected".into()));
        }
        let thin = (0..=self.trunc()).all(|n| {
            let c = &self.levels[n].cat;
            (0..c.num_objects())
                .filter(|&p| comp[p] == comp[b])
                .all(|p| (0..c.num_objects()).filter(|&q| comp[q] == comp[b]).all(|q| c.hom(p, q).len() == 1))
        });
        if !thin {
            return Err(Error::Invalid("component of the target object is not thin".into()));
        }
        let r = |p: usize| if comp[p] == comp[b] { a } else { p };
        let no = self.num_objects();
        // morphisms of level n: (p, q, m) with m: r p -> r q, in order of (p, q, m)
        let mut all: Vec<Vec<(usize, usize, usize)>> = Vec::new();
        let mut index: Vec<HashMap<(usize, usize, usize), usize>> = Vec::new();
        let mut levels = Vec::new();
        for n in 0..=self.trunc() {
            let c = &self.levels[n].cat;
            let mut ms = Vec::new();
            for p in 0..no {
                for q in 0..no {
                    if comp[r(p)] != comp[r(q)] {
                        continue;
                    }
                    for &m in c.hom(r(p), r(q)) {
                        ms.push((p, q, m));
                    }
                }
            }
            let idx: HashMap<(usize, usize, usize), usize> = ms.iter().enumerate().map(|(i, t)| (*t, i)).collect();
            let morphisms = ms
                .iter()
                .map(|&(p, q, m)| Morphism {
                    name: if r(p) == p && r(q) == q {
                        c.morphisms()[m].name.clone()
                    } else {
                        format!("{}>{}:{}", self.objects[p], self.objects[q], c.morphisms()[m].name)
                    },
                    dom: p,
                    cod: q,
                })
                .collect();
            let ident = (0..no).map(|p| idx[&(p, p, c.identity(r(p)))]).collect();
            let cat = FinCategory::from_fn(self.objects.clone(), morphisms, ident, |g, f| {
                let ((p, q, mf), (q2, s, mg)) = (ms[f], ms[g]);
                (q == q2).then(|| idx[&(p, s, c.compose(mg, mf))])
            })?;
            let inv = ms.iter().map(|&(p, q, m)| idx[&(q, p, self.levels[n].inverse(m))]).collect();
            levels.push(FinGroupoid::new(cat, inv)?);
            all.push(ms);
            index.push(idx);
        }
        let face = (1..=self.trunc())
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        all[n].iter().map(|&(p, q, m)| index[n - 1][&(p, q, self.face_table(n, i)[m])]).collect()
                    })
                    .collect()
            })
            .collect();
        let degen = (0..self.trunc())
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        all[n].iter().map(|&(p, q, m)| index[n + 1][&(p, q, self.degen_table(n, i)[m])]).collect()
                    })
                    .collect()
            })
            .collect();
        SimplicialGroupoid::new(self.objects.clone(), levels, face, degen)
    }
}

/// A simplicial functor: object map plus morphism tables on every level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFunctor {
    pub source: SimplicialGroupoid,
    pub target: SimplicialGroupoid,
    pub objects: Vec<usize>,
    pub level: Vec<Vec<usize>>,
}

impl SimplicialFunctor {
    pub fn new(
        source: SimplicialGroupoid,
        target: SimplicialGroupoid,
        objects: Vec<usize>,
        level: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if source.trunc() != target.trunc() {
            return Err(Error::TruncationMismatch(format!("{}", source.trunc()), format!("{}", target.trunc())));
        }
        if level.len() != source.trunc() + 1 {
            return Err(Error::Invalid("one morphism table per level required".into()));
        }
        for n in 0..=source.trunc() {
            FinFunctor { objects: objects.clone(), morphisms: level[n].clone() }
                .check(&source.levels[n].cat, &target.levels[n].cat)?;
        }
        presheaf::check_natural(source.morphisms.diagram(), target.morphisms.diagram(), &level)?;
        Ok(SimplicialFunctor { source, target, objects, level })
    }

    pub fn identity(g: &SimplicialGroupoid) -> Self {
        SimplicialFunctor {
            source: g.clone(),
            target: g.clone(),
            objects: (0..g.num_objects()).collect(),
            level: presheaf::identity_map(g.morphisms.diagram()),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SimplicialFunctor) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::ShapeMismatch("functors are not composable".into()));
        }
        Ok(SimplicialFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            objects: self.objects.iter().map(|&o| next.objects[o]).collect(),
            level: presheaf::compose(&self.level, &next.level),
        })
    }

    /// Functor determined by its object map into a target whose hom-sets
    /// are all singletons.
    pub fn into_thin(source: &SimplicialGroupoid, target: &SimplicialGroupoid, objects: Vec<usize>) -> Result<Self> {
        let level = (0..=source.trunc())
            .map(|n| {
                let (s, t) = (&source.levels[n].cat, &target.levels[n].cat);
                (0..s.num_morphisms())
                    .map(|f| match t.hom(objects[s.dom(f)], objects[s.cod(f)]) {
                        [m] => Ok(*m),
                        _ => Err(Error::Invalid("target hom-set is not a singleton".into())),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source.clone(), target.clone(), objects, level)
    }

    /// `Map(x, y) -> Map(fx, fy)`.
    pub fn map_space_map(&self, x: usize, y: usize) -> SimplicialMap {
        let (sm, si) = self.source.map_space(x, y);
        let (tm, ti) = self.target.map_space(self.objects[x], self.objects[y]);
        let pos: Vec<HashMap<usize, usize>> =
            ti.iter().map(|t| t.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
        let level = si
            .iter()
            .enumerate()
            .map(|(n, t)| t.iter().map(|&m| pos[n][&self.level[n][m]]).collect())
            .collect();
        SimplicialMap { source: sm, target: tm, level }
    }

    pub fn is_isomorphism(&self) -> bool {
        let bij_obj = {
            let mut o = self.objects.clone();
            o.sort();
            o.dedup();
            o.len() == self.objects.len() && o.len() == self.target.num_objects()
        };
        bij_obj && presheaf::is_bijective(&self.level, &self.target.morphisms.sizes())
    }
}

/// The category of components: hom-sets are `π₀ Map(x, y)`.
#[derive(Clone, Debug)]
pub struct ComponentCategory {
    pub groupoid: FinGroupoid,
    /// `class[f]` for each level-0 morphism `f`: the morphism of `groupoid`.
    pub class: Vec<usize>,
}

pub fn pi0_category(g: &SimplicialGroupoid) -> Result<ComponentCategory> {
    if g.trunc() == 0 {
        return Err(Error::OutOfRange("pi0_category needs truncation at least 1".into()));
    }
    let l0 = &g.levels[0];
    let no = g.num_objects();
    let mut class = vec![usize::MAX; l0.cat.num_morphisms()];
    let mut morphisms = Vec::new();
    let mut reps = Vec::new();
    for x in 0..no {
        for y in 0..no {
            let (m, incl) = g.map_space(x, y);
            let Components { class: cl, reps: rs } = pi0(&m)?;
            let base = morphisms.len();
            for &r in &rs {
                let f = incl[0][r];
                morphisms.push(Morphism { name: format!("[{}]", l0.cat.morphisms()[f].name), dom: x, cod: y });
                reps.push(f);
            }
            for (v, &c) in cl.iter().enumerate() {
                class[incl[0][v]] = base + c;
            }
        }
    }
    // composition on representatives, checked on all members
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (gg, ff, h) in l0.cat.composable_pairs() {
        let key = (class[gg], class[ff]);
        if let Some(&prev) = table.get(&key) {
            if prev != class[h] {
                return Err(Error::Invalid("composition is not well defined on components".into()));
            }
        } else {
            table.insert(key, class[h]);
        }
    }
    let ident = (0..no).map(|x| class[l0.cat.identity(x)]).collect();
    let cat = FinCategory::from_fn(l0.cat.objects().to_vec(), morphisms, ident, |a, b| table.get(&(a, b)).copied())?;
    let inv = reps.iter().map(|&f| class[l0.inverse(f)]).collect();
    Ok(ComponentCategory { groupoid: FinGroupoid::new(cat, inv)?, class })
}

/// The functor induced on categories of components.
pub fn pi0_functor(f: &SimplicialFunctor, a: &ComponentCategory, b: &ComponentCategory) -> FinFunctor {
    let mut morphisms = vec![0; a.groupoid.cat.num_morphisms()];
    for (m, &c) in a.class.iter().enumerate() {
        morphisms[c] = b.class[f.level[0][m]];
    }
    FinFunctor { objects: f.objects.clone(), morphisms }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub x: String,
    pub y: String,
    pub verdict: EquivalenceVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct DkReport {
    pub pairs: Vec<PairVerdict>,
    /// `None` when the induced functor is an equivalence.
    pub w2_witness: Option<String>,
    pub verdict: EquivalenceVerdict,
}

/// Dwyer-Kan equivalence: (W1) weak equivalences on all mapping spaces and
/// (W2) an equivalence on categories of components.
pub fn dk_equivalence_check(f: &SimplicialFunctor, upto: usize) -> Result<DkReport> {
    let s = &f.source;
    let mut pairs = Vec::new();
    for x in 0..s.num_objects() {
        for y in 0..s.num_objects() {
            pairs.push(PairVerdict {
                x: s.objects[x].clone(),
                y: s.objects[y].clone(),
                verdict: weak_equiv_oracle(&f.map_space_map(x, y), upto),
            });
        }
    }
    let (a, b) = (pi0_category(&f.source)?, pi0_category(&f.target)?);
    let func = pi0_functor(f, &a, &b);
    let w2_witness = cat_equivalence_check(&a.groupoid.cat, &b.groupoid.cat, &func).err().map(|w| w.to_string());
    let mut verdict = EquivalenceVerdict::combine(pairs.iter().map(|p| &p.verdict));
    if let Some(w) = &w2_witness {
        if !verdict.is_fail() {
            verdict = EquivalenceVerdict::fail(format!("W2: {w}"));
        }
    }
    Ok(DkReport { pairs, w2_witness, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct F2Witness {
    pub x: String,
    pub g: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FibrationReport {
    /// Horn dimension checked for (F1); a pass is necessary only.
    pub level: usize,
    pub f1_failure: Option<(String, String, String)>,
    pub f2_failure: Option<F2Witness>,
    pub passed: bool,
}

/// (F1): every mapping-space map is a Kan fibration (horns up to `upto`);
/// (F2): level-0 morphisms out of `f(x)` lift to morphisms out of `x`.
pub fn fibration_check(f: &SimplicialFunctor, upto: usize) -> Result<FibrationReport> {
    let s = &f.source;
    let mut f1_failure = None;
    'outer: for x in 0..s.num_objects() {
        for y in 0..s.num_objects() {
            let r = kan_fibration_check(&f.map_space_map(x, y), upto)?;
            if let Some(w) = r.witness {
                f1_failure = Some((s.objects[x].clone(), s.objects[y].clone(), describe(&w)));
                break 'outer;
            }
        }
    }
    let f2_failure = f2_check(f);
    let passed = f1_failure.is_none() && f2_failure.is_none();
    Ok(FibrationReport { level: upto, f1_failure, f2_failure, passed })
}

fn describe(w: &HornWitness) -> String {
    w.to_string()
}

fn f2_check(f: &SimplicialFunctor) -> Option<F2Witness> {
    let (s, t) = (&f.source.levels[0].cat, &f.target.levels[0].cat);
    for x in 0..s.num_objects() {
        let images: std::collections::HashSet<usize> = s.out_of(x).iter().map(|&d| f.level[0][d]).collect();
        for &g in t.out_of(f.objects[x]) {
            if !images.contains(&g) {
                return Some(F2Witness { x: s.objects()[x].clone(), g: t.morphisms()[g].name.clone() });
            }
        }
    }
    None
}

/// `U_G(X)`: objects `x`, `y`, `Map(x,y) = Map(y,x) = X`, endomorphisms
/// trivial. Only a groupoid when `X` has at most one cell per level, so
/// only `X = ∅` and `X = Δ[0]` are materialized; everything else goes
/// through the universal property (see [`GeneratingMap`]).
pub fn ug(x: &TruncatedSimplicialSet) -> Result<SimplicialGroupoid> {
    if x.sizes().iter().any(|&s| s > 1) {
        return Err(Error::Invalid(
            "U_G(X) with a level of more than one cell is a free groupoid with infinite hom-sets".into(),
        ));
    }
    let trunc = x.trunc();
    if x.len(0) == 0 {
        Ok(SimplicialGroupoid::constant(&FinGroupoid::new(FinCategory::discrete(&["x", "y"]), vec![0, 1]).unwrap(), trunc))
    } else {
        Ok(walking_iso_groupoid(trunc))
    }
}

/// `𝓕`: two objects, every mapping space `Δ[0]`.
pub fn walking_iso_groupoid(trunc: usize) -> SimplicialGroupoid {
    SimplicialGroupoid::constant(&FinGroupoid::walking_iso(), trunc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    C1,
    C2,
    A1,
    A2,
}

/// A generating map. Maps `U_G A -> U_G B` are carried by the inclusion
/// `A -> B`: a functor `U_G A -> C` is a pair of objects `(c1, c2)` and a
/// simplicial map `A -> Map_C(c1, c2)`.
#[derive(Clone, Debug)]
pub enum GeneratingMap {
    Ug { label: String, inclusion: SimplicialMap },
    Functor { label: String, map: SimplicialFunctor },
}

impl GeneratingMap {
    pub fn label(&self) -> &str {
        match self {
            GeneratingMap::Ug { label, .. } | GeneratingMap::Functor { label, .. } => label,
        }
    }
}

/// The generating sets with `1 ≤ n ≤ nmax`, at truncation `trunc`.
pub fn generating_maps(kind: GeneratorKind, nmax: usize, trunc: usize) -> Vec<GeneratingMap> {
    match kind {
        GeneratorKind::C1 => (1..=nmax)
            .map(|n| GeneratingMap::Ug { label: format!("C1(n={n})"), inclusion: boundary(n, trunc).1 })
            .collect(),
        GeneratorKind::A1 => (1..=nmax)
            .flat_map(|n| {
                (0..=n).map(move |k| GeneratingMap::Ug {
                    label: format!("A1(n={n},k={k})"),
                    inclusion: horn(n, k, trunc).unwrap().1,
                })
            })
            .collect(),
        GeneratorKind::C2 => {
            let e = SimplicialGroupoid::empty(trunc);
            let p = SimplicialGroupoid::point("x", trunc);
            let level = vec![Vec::new(); trunc + 1];
            vec![GeneratingMap::Functor {
                label: "C2".into(),
                map: SimplicialFunctor::new(e, p, Vec::new(), level).unwrap(),
            }]
        }
        GeneratorKind::A2 => {
            let p = SimplicialGroupoid::point("x", trunc);
            let f = walking_iso_groupoid(trunc);
            vec![GeneratingMap::Functor { label: "A2".into(), map: SimplicialFunctor::into_thin(&p, &f, vec![0]).unwrap() }]
        }
    }
}

/// `U_G ∂Δ[0] -> U_G Δ[0]`, the extra member needed in the acyclic
/// fibration characterization.
pub fn c1_zero(trunc: usize) -> GeneratingMap {
    GeneratingMap::Ug { label: "C1(n=0)".into(), inclusion: boundary(0, trunc).1 }
}

/// Explicit composite `{x} -> {x} ⊔ {y} -> 𝓕`: a pushout along `∅ -> {x}`
/// followed by a pushout along `U_G ∂Δ[0] -> U_G Δ[0]`. Returns both steps.
pub fn a2_decomposition(trunc: usize) -> Result<(SimplicialFunctor, SimplicialFunctor)> {
    let p = SimplicialGroupoid::point("x", trunc);
    let step1 = SimplicialGroupoid::coproduct(&p, &SimplicialGroupoid::point("y", trunc))?;
    let i1 = SimplicialFunctor::new(
        p.clone(),
        step1.clone(),
        vec![0],
        (0..=trunc).map(|_| vec![0]).collect(),
    )?;
    let step2 = step1.adjoin_iso(0, 1)?;
    let level = (0..=trunc)
        .map(|n| {
            let c = &step1.levels[n].cat;
            let d = &step2.levels[n].cat;
            // step 1 is discrete: every morphism is an identity
            (0..c.num_morphisms()).map(|m| d.identity(c.dom(m))).collect()
        })
        .collect();
    let i2 = SimplicialFunctor::new(step1, step2, vec![0, 1], level)?;
    Ok((i1, i2))
}

/// Builds a simplicial set as the mapping space of a named pair, for
/// diagnostics and the interchange format.
pub fn map_space_by_name(g: &SimplicialGroupoid, x: &str, y: &str) -> Result<TruncatedSimplicialSet> {
    let xi = g.find_object(x).ok_or_else(|| Error::UnknownReference(x.into()))?;
    let yi = g.find_object(y).ok_or_else(|| Error::UnknownReference(y.into()))?;
    Ok(g.map_space(xi, yi).0)
}

/// Simplicial set with one cell per level (`Δ[0]`) or none.
pub fn point_or_empty(nonempty: bool, trunc: usize) -> TruncatedSimplicialSet {
    if nonempty {
        standard_simplex(0, trunc)
    } else {
        TruncatedSimplicialSet::empty(trunc)
    }
}

/// `U_G` on a map between materializable inputs (`∅` or `Δ[0]`).
pub fn ug_map(f: &SimplicialMap) -> Result<SimplicialFunctor> {
    let (a, b) = (ug(&f.source)?, ug(&f.target)?);
    SimplicialFunctor::new(a.clone(), b.clone(), vec![0, 1], {
        (0..=a.trunc())
            .map(|n| {
                let (ca, cb) = (&a.levels[n].cat, &b.levels[n].cat);
                (0..ca.num_morphisms())
                    .map(|m| cb.hom(ca.dom(m), ca.cod(m))[0])
                    .collect()
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;

    fn cech_connected(h: &FinGroup, objs: &[&str], normal: &[usize], trunc: usize) -> SimplicialGroupoid {
        let g = FinGroupoid::connected(h, objs);
        let n = h.order();
        let coset: Vec<usize> = (0..n).map(|k| normal.iter().map(|&m| h.mul[k][m]).min().unwrap()).collect();
        let class = (0..g.cat.num_morphisms()).map(|m| (m / n) * n + coset[m % n]).collect::<Vec<_>>();
        SimplicialGroupoid::cech(&g, &class, trunc).unwrap()
    }

    #[test]
    fn constant_and_cech() {
        let z2 = FinGroup::cyclic(2);
        let g = cech_connected(&z2, &["a", "b"], &[0, 1], 2);
        assert_eq!(g.level(0).cat.num_morphisms(), 8);
        assert_eq!(g.level(2).cat.num_morphisms(), 4 * 8);
        let (m, _) = g.map_space(0, 1);
        assert_eq!(m.sizes(), vec![2, 4, 8]);
        assert!(crate::oracle::recognize_nerve(&m).unwrap().is_groupoid());
        let pc = pi0_category(&g).unwrap();
        assert_eq!(pc.groupoid.cat.num_morphisms(), 4);
    }

    #[test]
    fn ug_values() {
        let f = ug(&standard_simplex(0, 2)).unwrap();
        assert_eq!(f, walking_iso_groupoid(2));
        let (b, _) = boundary(1, 2);
        assert!(ug(&b).is_err());
        assert_eq!(pi0(&b).unwrap().count(), 2);
        let e = ug(&TruncatedSimplicialSet::empty(2)).unwrap();
        assert_eq!(e.level(0).cat.num_morphisms(), 2);
    }

    #[test]
    fn a2_checks() {
        let gens = generating_maps(GeneratorKind::A2, 2, 2);
        let GeneratingMap::Functor { map, .. } = &gens[0] else { panic!() };
        let dk = dk_equivalence_check(map, 1).unwrap();
        assert!(dk.verdict.is_pass() && dk.verdict.conclusive);
        let fib = fibration_check(map, 2).unwrap();
        assert!(fib.f2_failure.is_some());
        let f = walking_iso_groupoid(2);
        let t = SimplicialGroupoid::point("*", 2);
        let to_t = SimplicialFunctor::into_thin(&f, &t, vec![0, 0]).unwrap();
        assert!(fibration_check(&to_t, 2).unwrap().passed);
        assert!(fibration_check(&SimplicialFunctor::identity(&f), 2).unwrap().passed);
    }

    #[test]
    fn generating_counts() {
        assert_eq!(generating_maps(GeneratorKind::C1, 2, 2).len(), 2);
        assert_eq!(generating_maps(GeneratorKind::A1, 2, 2).len(), 5);
        assert_eq!(generating_maps(GeneratorKind::A2, 2, 2).len(), 1);
    }

    #[test]
    fn decomposition_is_a2() {
        let (i1, i2) = a2_decomposition(2).unwrap();
        let comp = i1.then(&i2).unwrap();
        let f = walking_iso_groupoid(2);
        let iso = SimplicialFunctor::into_thin(&comp.target, &f, vec![0, 1]).unwrap();
        assert!(iso.is_isomorphism());
        let GeneratingMap::Functor { map, .. } = &generating_maps(GeneratorKind::A2, 1, 2)[0] else { panic!() };
        assert_eq!(comp.then(&iso).unwrap().level, map.level);
    }

    #[test]
    fn collapse_fails_w1() {
        let (b, _) = boundary(1, 2);
        let p = standard_simplex(0, 2);
        let f = SimplicialMap::new(b, p, vec![vec![0; 2], vec![0; 2], vec![0; 2]]).unwrap();
        let v = weak_equiv_oracle(&f, 1);
        assert!(v.is_fail());
    }
}
