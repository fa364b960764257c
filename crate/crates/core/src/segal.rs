//! Segal and Bousfield-Segal maps, completeness, mapping objects, mapping
//! spaces, homotopy categories and the reduction `(-)_r`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bisimp::{
    irep, BiSimplicialSet, BiView, BousfieldIndex, Space, SpaceMap, SymmetricSimplicialSpace,
};
use crate::category::{cat_equivalence_check, FinCategory, FinFunctor, Morphism};
use crate::combinat::monotone_maps;
use crate::error::{Error, Result};
use crate::kan::kan_check;
use crate::oracle::{weak_equiv_oracle, EquivalenceVerdict};
use crate::presheaf::{self, Budget, Diagram, Equation, HomSearch, Limit, ShapeKind, SortMap};
use crate::report::{CheckReport, Outcome};
use crate::sgpd::{DkReport, PairVerdict};
use crate::sset::{pi0, standard_simplex, SimplicialMap, TruncatedSimplicialSet};

/// Which family of Segal-type maps to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// `ξ_k` along the edges `β^i: i -> i+1` of a symmetric space.
    Invertible,
    /// `φ_k` along the spine of a simplicial space.
    Plain,
    /// `χ_k` along the cone edges `γ^i: 0 -> i+1`.
    Bousfield,
}

/// The canonical map from row `k` to a fiber product of copies of row 1.
#[derive(Clone, Debug)]
pub struct SegalMap {
    pub k: usize,
    /// Edges `[1] -> [k]` used for the factors.
    pub edges: Vec<[usize; 2]>,
    pub map: SimplicialMap,
    pub verdict: EquivalenceVerdict,
}

/// Fiber product of `edges.len()` copies of row 1, glued wherever two
/// edges share an endpoint, with the map from row `k`.
pub fn edge_map<S: Space>(x: &S, k: usize, edges: &[[usize; 2]]) -> Result<SimplicialMap> {
    if k > x.outer() {
        return Err(Error::OutOfRange(format!("level {k} above outer truncation {}", x.outer())));
    }
    if x.outer() < 1 {
        return Err(Error::OutOfRange("Segal-type maps need outer truncation at least 1".into()));
    }
    let row1 = x.row(1);
    let row_k = x.row(k);
    // endpoint p of an edge is its face d_{1-p}
    let vertex: Vec<SortMap> = (0..2).map(|p| x.monotone_row_map(&[p], 1).level).collect();
    let mut eqs = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            for p in 0..2 {
                for q in 0..2 {
                    if edges[a][p] == edges[b][q] {
                        eqs.push(Equation { left: a, left_map: &vertex[p], right: b, right_map: &vertex[q] });
                    }
                }
            }
        }
    }
    let factors: Vec<&Diagram> = vec![row1.diagram(); edges.len()];
    let lim = Limit::tuples(&factors, &eqs)?;
    let legs: Vec<SortMap> = edges.iter().map(|e| x.monotone_row_map(e, k).level).collect();
    let leg_refs: Vec<&SortMap> = legs.iter().collect();
    let level = lim.mediate(&leg_refs)?;
    let target = TruncatedSimplicialSet::from_diagram(lim.diagram)?;
    SimplicialMap::new(row_k, target, level)
}

fn finish(k: usize, edges: Vec<[usize; 2]>, map: SimplicialMap, upto: usize) -> SegalMap {
    let verdict = weak_equiv_oracle(&map, upto);
    SegalMap { k, edges, map, verdict }
}

/// `ξ_k` (or `φ_k`): along the edges `i -> i+1`.
pub fn segal_map<S: Space>(x: &S, k: usize) -> Result<SegalMap> {
    if k < 2 {
        return Err(Error::OutOfRange("Segal maps need k ≥ 2".into()));
    }
    let edges: Vec<[usize; 2]> = (0..k).map(|i| [i, i + 1]).collect();
    let map = edge_map(x, k, &edges)?;
    Ok(finish(k, edges, map, x.inner()))
}

/// `χ_n`: along the cone edges `0 -> j`.
pub fn bousfield_map<S: Space>(x: &S, n: usize, index: BousfieldIndex) -> Result<SegalMap> {
    if n < 2 {
        return Err(Error::OutOfRange("Bousfield-Segal maps need n ≥ 2".into()));
    }
    let edges: Vec<[usize; 2]> = index.cone_targets(n).into_iter().map(|j| [0, j]).collect();
    let map = edge_map(x, n, &edges)?;
    Ok(finish(n, edges, map, x.inner()))
}

/// Segal-type verdicts for `2 ≤ k ≤ kmax`, plus levelwise Kan checks on
/// the rows, which are necessary for fibrancy and reported as partial.
pub fn segal_condition_report<S: Space>(
    x: &S,
    kmax: usize,
    flavor: Flavor,
    index: BousfieldIndex,
) -> Result<CheckReport> {
    if kmax > x.outer() {
        return Err(Error::OutOfRange(format!("kmax {kmax} above outer truncation {}", x.outer())));
    }
    let mut r = CheckReport::new(match flavor {
        Flavor::Bousfield => "check-bousfield",
        _ => "check-segal",
    });
    for k in 2..=kmax {
        let (name, m) = match flavor {
            Flavor::Invertible => (format!("xi_{k}"), segal_map(x, k)?),
            Flavor::Plain => (format!("phi_{k}"), segal_map(x, k)?),
            Flavor::Bousfield => (format!("chi_{k}"), bousfield_map(x, k, index)?),
        };
        r.push(
            Outcome::from_verdict(name, &m.verdict)
                .detail("source_cells", m.map.source.sizes())
                .detail("target_cells", m.map.target.sizes()),
        );
    }
    if x.inner() >= 1 {
        for n in 0..=x.outer() {
            let kr = kan_check(&x.row(n), x.inner())?;
            let w = kr.witness.map(|w| w.to_string());
            r.push(Outcome::decided(format!("row_{n}_kan"), kr.passed, w).with_level(kr.level).partial());
        }
        r.note("row Kan checks are necessary conditions for fibrancy only");
    } else {
        r.note("inner truncation 0: no horn checks on rows");
    }
    if flavor == Flavor::Bousfield && index == BousfieldIndex::Paper {
        r.note("cone edges 0 -> j for j = 2..n as printed");
    }
    Ok(r)
}

/// Completeness: `s₀: W₀ -> W₁` is a weak equivalence.
pub fn completeness_check<S: Space>(w: &S, upto: usize) -> Result<EquivalenceVerdict> {
    if w.outer() < 1 {
        return Err(Error::OutOfRange("completeness needs outer truncation at least 1".into()));
    }
    Ok(weak_equiv_oracle(&w.monotone_row_map(&[0, 0], 0), upto))
}

/// The objects `W_{0,0}`.
pub fn objects<S: Space>(w: &S) -> Vec<String> {
    w.cells(0, 0).to_vec()
}

/// `map_W(x, y)`: the fiber of `(d₁, d₀): W₁ -> W₀ × W₀` over `(x, y)`,
/// with its inclusion into row 1. When row 0 is not discrete the fiber is
/// taken over the inner total degeneracies of `x` and `y`, and the flag is set.
#[derive(Clone, Debug)]
pub struct MapSpace {
    pub space: TruncatedSimplicialSet,
    pub inclusion: SortMap,
    pub row0_not_discrete: bool,
}

pub fn map_space<S: Space>(w: &S, x: usize, y: usize) -> Result<MapSpace> {
    if w.outer() < 1 {
        return Err(Error::OutOfRange("mapping spaces need outer truncation at least 1".into()));
    }
    let n0 = w.len(0, 0);
    if x >= n0 || y >= n0 {
        return Err(Error::UnknownReference(format!("object index {} not in W_0,0", x.max(y))));
    }
    let row0 = w.row(0);
    let row1 = w.row(1);
    let src = w.monotone_row_map(&[0], 1).level;
    let tgt = w.monotone_row_map(&[1], 1).level;
    let total = |m: usize, v: usize| {
        let mut c = v;
        for j in 0..m {
            c = row0.degen(j, 0, c);
        }
        c
    };
    let keep: Vec<Vec<bool>> = (0..=w.inner())
        .map(|m| (0..row1.len(m)).map(|e| src[m][e] == total(m, x) && tgt[m][e] == total(m, y)).collect())
        .collect();
    let (d, inclusion) = presheaf::subobject(row1.diagram(), &keep)?;
    Ok(MapSpace {
        space: TruncatedSimplicialSet::from_diagram(d)?,
        inclusion,
        row0_not_discrete: !w.is_discrete_row0(),
    })
}

/// Path components, treating a 0-truncated simplicial set as discrete.
pub(crate) fn components(x: &TruncatedSimplicialSet) -> (Vec<usize>, Vec<usize>) {
    if x.trunc() == 0 {
        ((0..x.len(0)).collect(), (0..x.len(0)).collect())
    } else {
        let c = pi0(x).expect("truncation at least 1");
        (c.class, c.reps)
    }
}

/// `Ho(W)`: objects `W_{0,0}`, morphisms `π₀ map_W(x, y)`, composition
/// through 2-cells.
#[derive(Clone, Debug)]
pub struct HoCategory {
    pub category: FinCategory,
    /// Morphism of `category` for each cell of `W_{1,0}`.
    pub class: Vec<usize>,
}

pub fn ho_category<S: Space>(w: &S) -> Result<HoCategory> {
    if w.outer() < 2 {
        return Err(Error::OutOfRange("Ho(W) needs outer truncation at least 2".into()));
    }
    let n0 = w.len(0, 0);
    let mut class = vec![usize::MAX; w.len(1, 0)];
    let mut morphisms = Vec::new();
    for x in 0..n0 {
        for y in 0..n0 {
            let ms = map_space(w, x, y)?;
            let (cl, reps) = components(&ms.space);
            let base = morphisms.len();
            for &r in &reps {
                let e = ms.inclusion[0][r];
                morphisms.push(Morphism { name: format!("[{}]", w.cells(1, 0)[e]), dom: x, cod: y });
            }
            for (v, &c) in cl.iter().enumerate() {
                class[ms.inclusion[0][v]] = base + c;
            }
        }
    }
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for s in 0..w.len(2, 0) {
        let f = w.act_monotone(&[0, 1], 2, 0, s);
        let g = w.act_monotone(&[1, 2], 2, 0, s);
        let h = w.act_monotone(&[0, 2], 2, 0, s);
        let key = (class[g], class[f]);
        match table.get(&key) {
            Some(&prev) if prev != class[h] => {
                return Err(Error::SegalPi0(format!(
                    "{} ∘ {} has two values {} and {}",
                    morphisms[class[g]].name, morphisms[class[f]].name, morphisms[prev].name, morphisms[class[h]].name
                )))
            }
            _ => {
                table.insert(key, class[h]);
            }
        }
    }
    for f in 0..morphisms.len() {
        for g in 0..morphisms.len() {
            if morphisms[f].cod == morphisms[g].dom && !table.contains_key(&(g, f)) {
                return Err(Error::SegalPi0(format!(
                    "no 2-cell composes {} and {}",
                    morphisms[f].name, morphisms[g].name
                )));
            }
        }
    }
    let ident = (0..n0).map(|x| class[w.act_monotone(&[0, 0], 0, 0, x)]).collect();
    let category = FinCategory::from_fn(objects(w), morphisms, ident, |g, f| table.get(&(g, f)).copied())
        .map_err(|e| Error::SegalPi0(e.to_string()))?;
    Ok(HoCategory { category, class })
}

/// Every morphism of `Ho(W)` is invertible; the witness names a class
/// without inverse.
pub fn hoequiv_check<S: Space>(w: &S) -> Result<(bool, Option<String>)> {
    let ho = ho_category(w)?;
    let c = &ho.category;
    for m in 0..c.num_morphisms() {
        if c.inverse_of(m).is_none() {
            return Ok((false, Some(c.morphisms()[m].name.clone())));
        }
    }
    Ok((true, None))
}

/// Dwyer-Kan equivalence of Segal-type objects: mapping-space maps and the
/// induced functor on homotopy categories.
pub fn dk_equiv_segal(f: &SpaceMap, upto: usize) -> Result<DkReport> {
    let s = BiView(&f.source);
    let t = BiView(&f.target);
    let obj: Vec<usize> = f.level[s.sort(0, 0)].clone();
    let mut pairs = Vec::new();
    for x in 0..s.len(0, 0) {
        for y in 0..s.len(0, 0) {
            let a = map_space(&s, x, y)?;
            let b = map_space(&t, obj[x], obj[y])?;
            let back: Vec<HashMap<usize, usize>> =
                b.inclusion.iter().map(|l| l.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect();
            let level = (0..=s.inner())
                .map(|m| {
                    let row1 = &f.level[s.sort(1, m)];
                    a.inclusion[m].iter().map(|&c| back[m][&row1[c]]).collect()
                })
                .collect();
            let map = SimplicialMap::new(a.space, b.space, level)?;
            pairs.push(PairVerdict {
                x: s.cells(0, 0)[x].clone(),
                y: s.cells(0, 0)[y].clone(),
                verdict: weak_equiv_oracle(&map, upto),
            });
        }
    }
    let (hs, ht) = (ho_category(&s)?, ho_category(&t)?);
    let mut morphisms = vec![usize::MAX; hs.category.num_morphisms()];
    for (e, &c) in hs.class.iter().enumerate() {
        morphisms[c] = ht.class[f.level[s.sort(1, 0)][e]];
    }
    let func = FinFunctor { objects: obj, morphisms };
    let w2_witness = cat_equivalence_check(&hs.category, &ht.category, &func).err().map(|w| w.to_string());
    let mut verdict = EquivalenceVerdict::combine(pairs.iter().map(|p| &p.verdict));
    if let Some(w) = &w2_witness {
        if !verdict.is_fail() {
            verdict = EquivalenceVerdict::fail(format!("Ho: {w}"));
        }
    }
    Ok(DkReport { pairs, w2_witness, verdict })
}

/// A constant-in-the-outer-direction object of the given kind.
pub fn constant_like(kind: ShapeKind, k: &TruncatedSimplicialSet) -> Diagram {
    match kind {
        ShapeKind::Bisimplicial { outer, .. } => BiSimplicialSet::constant(k, outer).into_diagram(),
        ShapeKind::Symmetric { outer, .. } => SymmetricSimplicialSpace::constant(k, outer).into_diagram(),
        ShapeKind::Simplicial { .. } => panic!("not a bisimplicial kind"),
    }
}

/// `X_r` with the quotient map `X -> X_r`.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub diagram: Diagram,
    pub unit: SortMap,
}

/// Pushout of `C(π₀ X₀) <- C(X₀) -> X`, the right leg given by total
/// outer degeneracies. Row 0 of the result is discrete.
pub fn reduce(x: &Diagram) -> Result<Reduced> {
    let v = BiView(x);
    let k = v.row(0);
    let (class, reps) = components(&k);
    let disc = TruncatedSimplicialSet::discrete(&reps.iter().map(|&r| k.cells(0)[r].clone()).collect::<Vec<_>>(), k.trunc());
    let c0 = constant_like(x.kind(), &k);
    let c1 = constant_like(x.kind(), &disc);
    let sorts = x.shape().sorts().to_vec();
    let to_disc: SortMap = sorts
        .iter()
        .map(|s| {
            let crate::presheaf::SortKey::Bi(_, m) = *s else { unreachable!() };
            (0..k.len(m)).map(|c| class[k.vertex(m, c, 0)]).collect()
        })
        .collect();
    let to_x: SortMap = sorts
        .iter()
        .map(|s| {
            let crate::presheaf::SortKey::Bi(n, m) = *s else { unreachable!() };
            (0..k.len(m)).map(|c| v.act_monotone(&vec![0; n + 1], 0, m, c)).collect()
        })
        .collect();
    let po = presheaf::pushout(&c0, &c1, &to_disc, x, &to_x)?;
    Ok(Reduced { diagram: po.diagram, unit: po.right })
}

/// Maps `A × Δ[n] -> X` for `n ≤ upto`, with `Δ[n]` constant in the outer
/// direction, as a simplicial set (faces and degeneracies by precomposition).
#[derive(Clone, Debug)]
pub struct MappingObject {
    pub space: TruncatedSimplicialSet,
    /// The maps themselves, per level, in cell order.
    pub maps: Vec<Vec<SortMap>>,
}

fn product_with_simplex(a: &Diagram, n: usize, inner: usize) -> Result<Limit> {
    let d = constant_like(a.kind(), &standard_simplex(n, inner));
    presheaf::product(a, &d)
}

/// Map `A × Δ[n'] -> A × Δ[n]` induced by a monotone `θ: [n'] -> [n]`.
fn simplex_action(a: &Diagram, p_src: &Limit, p_tgt: &Limit, theta: &[usize], n: usize) -> SortMap {
    let n_src = theta.len() - 1;
    a.shape()
        .sorts()
        .iter()
        .enumerate()
        .map(|(s, key)| {
            let crate::presheaf::SortKey::Bi(_, m) = *key else { unreachable!() };
            let src_maps = monotone_maps(m, n_src);
            let tgt_index: HashMap<Vec<usize>, usize> =
                monotone_maps(m, n).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
            (0..p_src.diagram.len(s))
                .map(|c| {
                    let (ac, dc) = (p_src.projections[0][s][c], p_src.projections[1][s][c]);
                    let img = crate::combinat::compose(theta, &src_maps[dc]);
                    p_tgt.cell_of(s, &[ac, tgt_index[&img]]).expect("product cell")
                })
                .collect()
        })
        .collect()
}

pub fn mapping_object(a: &Diagram, x: &Diagram, upto: usize, budget: &mut Budget) -> Result<MappingObject> {
    if a.kind() != x.kind() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", a.kind(), x.kind())));
    }
    let inner = BiView(x).inner();
    let products: Vec<Limit> = (0..=upto).map(|n| product_with_simplex(a, n, inner)).collect::<Result<_>>()?;
    let mut maps = Vec::with_capacity(upto + 1);
    for p in &products {
        maps.push(HomSearch::new(&p.diagram, x)?.all(budget)?);
    }
    let index: Vec<HashMap<&SortMap, usize>> =
        maps.iter().map(|l| l.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();
    let pre = |theta: &[usize], n: usize, f: &SortMap| -> usize {
        let n_src = theta.len() - 1;
        let act = simplex_action(a, &products[n_src], &products[n], theta, n);
        let g = presheaf::compose(&act, f);
        index[n_src][&g]
    };
    let face = (1..=upto)
        .map(|n| {
            (0..=n)
                .map(|i| maps[n].iter().map(|f| pre(&crate::combinat::coface(n, i), n, f)).collect())
                .collect()
        })
        .collect();
    let degen = (0..upto)
        .map(|n| {
            (0..=n)
                .map(|i| maps[n].iter().map(|f| pre(&crate::combinat::codegeneracy(n, i), n, f)).collect())
                .collect()
        })
        .collect();
    let names = maps.iter().enumerate().map(|(n, l)| (0..l.len()).map(|j| format!("m{n}.{j}")).collect()).collect();
    let space = TruncatedSimplicialSet::new(upto, names, face, degen)?;
    Ok(MappingObject { space, maps })
}

/// Restriction `Map(B, X) -> Map(A, X)` along `i: A -> B`.
pub fn restrict_mapping(
    a: &Diagram,
    b: &Diagram,
    i: &SortMap,
    ma: &MappingObject,
    mb: &MappingObject,
) -> Result<SimplicialMap> {
    let upto = ma.space.trunc();
    let x_inner = match a.kind() {
        ShapeKind::Bisimplicial { inner, .. } | ShapeKind::Symmetric { inner, .. } => inner,
        _ => unreachable!(),
    };
    let mut level = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let pa = product_with_simplex(a, n, x_inner)?;
        let pb = product_with_simplex(b, n, x_inner)?;
        let ixid = pb.mediate(&[&presheaf::compose(&pa.projections[0], i), &pa.projections[1]])?;
        let index: HashMap<&SortMap, usize> = ma.maps[n].iter().enumerate().map(|(j, f)| (f, j)).collect();
        level.push(
            mb.maps[n]
                .iter()
                .map(|f| index.get(&presheaf::compose(&ixid, f)).copied().ok_or_else(|| Error::NotNatural("restriction".into())))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    SimplicialMap::new(mb.space.clone(), ma.space.clone(), level)
}

/// `ψ`-locality: `Map(E^t, W) -> Map(Δ[0]^t, W) ≅ W₀` is a weak equivalence.
/// `E^t` is `IΔ[1]^t` (restricted to `Δ` for non-symmetric `W`).
pub fn psi_locality_check(w: &Diagram, upto: usize, budget: &mut Budget) -> Result<EquivalenceVerdict> {
    let (outer, inner) = crate::bisimp::truncs_of(w);
    let (e, pt) = match w.kind() {
        ShapeKind::Symmetric { .. } => (irep(1, outer, inner).into_diagram(), irep(0, outer, inner).into_diagram()),
        _ => (irep(1, outer, inner).restrict().into_diagram(), irep(0, outer, inner).restrict().into_diagram()),
    };
    // ψ picks the vertex 0: constant functions to 0
    let psi: SortMap = pt
        .shape()
        .sorts()
        .iter()
        .enumerate()
        .map(|(s, _)| {
            let name = pt.name(s, 0).to_string();
            vec![e.find(s, &name).expect("constant 0 function")]
        })
        .collect();
    let me = mapping_object(&e, w, upto, budget)?;
    let mp = mapping_object(&pt, w, upto, budget)?;
    let r = restrict_mapping(&pt, &e, &psi, &mp, &me)?;
    Ok(weak_equiv_oracle(&r, upto.saturating_sub(1).min(inner)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{nerve_sgpd, rep_inner_times_outer, rep_outer, truncs_of};
    use crate::category::{find_category_isomorphism, FinGroupoid};
    use crate::group::FinGroup;
    use crate::sgpd::{pi0_category, walking_iso_groupoid, SimplicialGroupoid};
    use crate::sset::nerve_category;

    fn outer_nerve(c: &FinCategory, outer: usize, inner: usize) -> BiSimplicialSet {
        let k = nerve_category(c, outer);
        BiSimplicialSet::build(outer, inner, |n, _| k.cells(n).to_vec(), |key, x| match key {
            crate::presheaf::OpKey::OuterFace { n, i, .. } => k.face(n, i, x),
            crate::presheaf::OpKey::OuterDegen { n, i, .. } => k.degen(n, i, x),
            _ => x,
        })
        .unwrap()
    }

    #[test]
    fn chi2_on_arrow_fails_four_vs_five() {
        let x = outer_nerve(&FinCategory::walking_arrow(), 3, 1);
        let m = bousfield_map(&x, 2, BousfieldIndex::Corrected).unwrap();
        assert_eq!((m.map.source.len(0), m.map.target.len(0)), (4, 5));
        assert!(m.verdict.is_fail() && m.verdict.conclusive);
        assert!(segal_map(&x, 2).unwrap().verdict.is_exact());
    }

    #[test]
    fn chi2_on_z2_bijection() {
        let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "*");
        let x = outer_nerve(&z2.cat, 3, 1);
        let m = bousfield_map(&x, 2, BousfieldIndex::Corrected).unwrap();
        assert_eq!((m.map.source.len(0), m.map.target.len(0)), (4, 4));
        assert!(m.verdict.is_exact());
    }

    #[test]
    fn nerve_of_sgpd_is_strict() {
        let g = SimplicialGroupoid::constant(&FinGroupoid::connected(&FinGroup::cyclic(2), &["a", "b"]), 1);
        let n = nerve_sgpd(&g, 3);
        for k in 2..=3 {
            assert!(segal_map(&n, k).unwrap().verdict.is_exact());
            assert!(bousfield_map(&n, k, BousfieldIndex::Corrected).unwrap().verdict.is_exact());
        }
        assert_eq!(hoequiv_check(&n).unwrap(), (true, None));
        let ho = ho_category(&n).unwrap();
        let pc = pi0_category(&g).unwrap();
        let mut b = Budget::default();
        assert!(find_category_isomorphism(&ho.category, &pc.groupoid.cat, &mut b).unwrap().is_some());
    }

    #[test]
    fn arrow_is_not_hoequiv() {
        let x = outer_nerve(&FinCategory::walking_arrow(), 2, 1);
        let (ok, w) = hoequiv_check(&x).unwrap();
        assert!(!ok);
        let arrow = FinCategory::walking_arrow();
        let u = (0..arrow.num_morphisms()).find(|&m| arrow.dom(m) != arrow.cod(m)).unwrap();
        assert_eq!(w.unwrap(), format!("[{}]", arrow.morphisms()[u].name));
    }

    #[test]
    fn completeness() {
        let k = standard_simplex(1, 2);
        let c = SymmetricSimplicialSpace::constant(&k, 2);
        assert!(completeness_check(&c, 1).unwrap().is_exact());
        let f = nerve_sgpd(&walking_iso_groupoid(1), 2);
        let v = completeness_check(&f, 1).unwrap();
        assert!(v.is_fail() && v.conclusive);
        let p = nerve_sgpd(&SimplicialGroupoid::point("*", 1), 2);
        assert!(completeness_check(&p, 1).unwrap().is_exact());
    }

    #[test]
    fn map_spaces() {
        let f = nerve_sgpd(&walking_iso_groupoid(1), 2);
        assert_eq!(map_space(&f, 0, 0).unwrap().space.sizes(), vec![1, 1]);
        assert_eq!(map_space(&f, 0, 1).unwrap().space.sizes(), vec![1, 1]);
        assert_eq!(objects(&f), vec!["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn reduction() {
        let x = rep_inner_times_outer(1, 1, 2, 2);
        let r = reduce(x.diagram()).unwrap();
        let rv = BiView(&r.diagram);
        assert!(rv.is_discrete_row0());
        assert_eq!(rv.len(0, 0), 2);
        let rr = reduce(&r.diagram).unwrap();
        assert!(presheaf::is_bijective(&rr.unit, &rr.diagram.sizes()));
        // a Segal pregroupoid is unchanged
        let n = nerve_sgpd(&walking_iso_groupoid(1), 2);
        let rn = reduce(n.diagram()).unwrap();
        assert!(presheaf::is_bijective(&rn.unit, &rn.diagram.sizes()));
    }

    #[test]
    fn mapping_objects() {
        let mut b = Budget::default();
        let x = nerve_sgpd(&walking_iso_groupoid(1), 2);
        let (o, i) = truncs_of(x.diagram());
        let pt = irep(0, o, i);
        let m = mapping_object(pt.diagram(), x.diagram(), 1, &mut b).unwrap();
        assert_eq!(m.space.sizes(), x.row(0).sizes());
        let two = crate::sset::boundary(1, 1).0;
        let c = crate::bisimp::cosk0_space(&two, 2);
        let src = SymmetricSimplicialSpace::constant(&two, 2);
        let m = mapping_object(src.diagram(), c.diagram(), 1, &mut b).unwrap();
        assert_eq!(m.space.len(0), 4);
        // the nerve of 𝓕 is not complete, and not ψ-local either
        let v = psi_locality_check(x.diagram(), 1, &mut b).unwrap();
        assert!(v.is_fail());
        let k = SymmetricSimplicialSpace::constant(&standard_simplex(1, 1), 2);
        assert!(psi_locality_check(k.diagram(), 1, &mut b).unwrap().is_pass());
        let m = mapping_object(rep_outer(0, 2, 1).diagram(), k.restrict().diagram(), 1, &mut b).unwrap();
        assert_eq!(m.space.sizes(), vec![2, 3]);
    }
}
