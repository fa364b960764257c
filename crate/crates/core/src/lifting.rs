//! Lifting problems, generating sets on the space side and bounded
//! localization by iterated pushouts.

use std::collections::HashMap;

use serde::Serialize;

use crate::bisimp::{h, ig, irep, rep_outer, truncs_of, BiView, BousfieldIndex, Space};
use crate::category::{enumerate_functors, FinFunctor};
use crate::combinat::{all_maps, is_surjective, monotone_maps};
use crate::error::{Error, Result};
use crate::oracle::{weak_equiv_oracle, EquivalenceVerdict};
use crate::presheaf::{
    self, check_natural, compose, identity_map, is_injective, product, pushout, subobject, Budget, Diagram,
    HomSearch, ShapeKind, SortKey, SortMap,
};
use crate::report::{CheckReport, Outcome};
use crate::segal::{bousfield_map, components, constant_like, reduce, segal_map};
use crate::sgpd::{
    c1_zero, dk_equivalence_check, fibration_check, generating_maps, GeneratingMap, GeneratorKind, SimplicialFunctor,
};
use crate::sset::{boundary, horn, standard_simplex, SimplicialMap};

/// A natural map between presheaves of the same kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: Diagram,
    pub target: Diagram,
    pub map: SortMap,
}

impl Arrow {
    pub fn new(source: Diagram, target: Diagram, map: SortMap) -> Result<Self> {
        if source.kind() != target.kind() {
            return Err(Error::ShapeMismatch(format!("{} vs {}", source.kind(), target.kind())));
        }
        check_natural(&source, &target, &map)?;
        Ok(Arrow { source, target, map })
    }

    pub fn identity(d: &Diagram) -> Self {
        Arrow { source: d.clone(), target: d.clone(), map: identity_map(d) }
    }

    pub fn from_simplicial(f: &SimplicialMap) -> Self {
        Arrow { source: f.source.diagram().clone(), target: f.target.diagram().clone(), map: f.level.clone() }
    }

    pub fn is_mono(&self) -> bool {
        is_injective(&self.map, &self.target.sizes())
    }
}

/// A commuting square `top: A -> X`, `bottom: B -> Y` over `i: A -> B`
/// and `p: X -> Y`.
#[derive(Clone, Debug)]
pub struct LiftingProblem<'a> {
    pub left: &'a Arrow,
    pub right: &'a Arrow,
    pub top: SortMap,
    pub bottom: SortMap,
}

impl<'a> LiftingProblem<'a> {
    pub fn new(left: &'a Arrow, right: &'a Arrow, top: SortMap, bottom: SortMap) -> Result<Self> {
        if left.source.kind() != right.source.kind() {
            return Err(Error::ShapeMismatch(format!("{} vs {}", left.source.kind(), right.source.kind())));
        }
        check_natural(&left.source, &right.source, &top)?;
        check_natural(&left.target, &right.target, &bottom)?;
        if compose(&top, &right.map) != compose(&left.map, &bottom) {
            return Err(Error::NotNatural("square does not commute".into()));
        }
        Ok(LiftingProblem { left, right, top, bottom })
    }

    /// A diagonal `B -> X`, if one exists. A found lift is re-checked on both
    /// triangles; a negative answer is confirmed by a search in reverse order.
    pub fn solve(&self, budget: &mut Budget) -> Result<Option<SortMap>> {
        let base = self.right.target.sizes();
        let search = HomSearch::new(&self.left.target, &self.right.source)?
            .fix_along(&self.left.map, &self.top)
            .over(&self.right.map, &self.bottom, &base);
        match search.first(budget)? {
            Some(d) => {
                if compose(&self.left.map, &d) != self.top || compose(&d, &self.right.map) != self.bottom {
                    return Err(Error::Invalid("lift fails a triangle".into()));
                }
                Ok(Some(d))
            }
            None => {
                let again = HomSearch::new(&self.left.target, &self.right.source)?
                    .fix_along(&self.left.map, &self.top)
                    .over(&self.right.map, &self.bottom, &base)
                    .reversed();
                if again.first(budget)?.is_some() {
                    return Err(Error::Invalid("lift searches disagree".into()));
                }
                Ok(None)
            }
        }
    }
}

/// Outcome of a lifting-property check. Exhaustion is never read as "no lift".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RlpOutcome {
    Holds { squares: usize },
    Fails { squares: usize, witness: String },
    Exhausted { squares: usize, at: String },
}

impl RlpOutcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            RlpOutcome::Holds { .. } => Some(true),
            RlpOutcome::Fails { .. } => Some(false),
            RlpOutcome::Exhausted { .. } => None,
        }
    }
    fn squares(&self) -> usize {
        match self {
            RlpOutcome::Holds { squares } | RlpOutcome::Fails { squares, .. } | RlpOutcome::Exhausted { squares, .. } => {
                *squares
            }
        }
    }
    pub fn to_outcome(&self, name: &str) -> Outcome {
        match self {
            RlpOutcome::Holds { squares } => Outcome::decided(name, true, None).detail("squares", squares),
            RlpOutcome::Fails { squares, witness } => {
                Outcome::decided(name, false, Some(witness.clone())).detail("squares", squares)
            }
            RlpOutcome::Exhausted { squares, at } => {
                Outcome::inconclusive(name, format!("budget exhausted at {at}")).detail("squares", squares)
            }
        }
    }
}

fn square_label(label: &str, top: &SortMap, bottom: &SortMap) -> String {
    format!("{label}: top {top:?}, bottom {bottom:?}")
}

/// Right lifting property of `p` against one map `i`, over every square.
pub fn rlp_arrow(i: &Arrow, p: &Arrow, label: &str, budget: &mut Budget) -> Result<RlpOutcome> {
    if i.source.kind() != p.source.kind() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", i.source.kind(), p.source.kind())));
    }
    let mut squares = 0;
    let run = |budget: &mut Budget, squares: &mut usize| -> Result<Option<String>> {
        let base = p.target.sizes();
        for v in HomSearch::new(&i.target, &p.target)?.all(budget)? {
            let vi = compose(&i.map, &v);
            for u in HomSearch::new(&i.source, &p.source)?.over(&p.map, &vi, &base).all(budget)? {
                *squares += 1;
                let prob = LiftingProblem { left: i, right: p, top: u, bottom: v.clone() };
                if prob.solve(budget)?.is_none() {
                    return Ok(Some(square_label(label, &prob.top, &prob.bottom)));
                }
            }
        }
        Ok(None)
    };
    match run(budget, &mut squares) {
        Ok(None) => Ok(RlpOutcome::Holds { squares }),
        Ok(Some(witness)) => Ok(RlpOutcome::Fails { squares, witness }),
        Err(Error::BudgetExhausted(_)) => Ok(RlpOutcome::Exhausted { squares, at: label.into() }),
        Err(e) => Err(e),
    }
}

/// Which family a generating set belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SetLabel {
    C1,
    C2,
    A1,
    A2,
    Ic,
    If,
    LocInv,
    LocBousfield,
}

#[derive(Clone, Debug)]
pub enum Member {
    Arrow(Arrow),
    Sgpd(GeneratingMap),
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub member: Member,
}

#[derive(Clone, Debug)]
pub struct GeneratingSet {
    pub labels: Vec<SetLabel>,
    pub generators: Vec<Generator>,
}

impl GeneratingSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
    pub fn union(mut self, other: GeneratingSet) -> Self {
        self.labels.extend(other.labels);
        self.generators.extend(other.generators);
        self
    }
}

/// A generating set of simplicial-groupoid maps; `nmax` bounds `n` in the
/// `U_G` families.
pub fn sgpd_set(kinds: &[GeneratorKind], nmax: usize, trunc: usize, with_c1_zero: bool) -> GeneratingSet {
    let mut generators = Vec::new();
    let mut labels = Vec::new();
    for &kind in kinds {
        labels.push(match kind {
            GeneratorKind::C1 => SetLabel::C1,
            GeneratorKind::C2 => SetLabel::C2,
            GeneratorKind::A1 => SetLabel::A1,
            GeneratorKind::A2 => SetLabel::A2,
        });
        if kind == GeneratorKind::C1 && with_c1_zero {
            generators.push(Generator { label: "C1(n=0)".into(), m: None, n: Some(0), k: None, member: Member::Sgpd(c1_zero(trunc)) });
        }
        for g in generating_maps(kind, nmax, trunc) {
            let (n, k) = parse_nk(g.label());
            generators.push(Generator { label: g.label().to_string(), m: None, n, k, member: Member::Sgpd(g) });
        }
    }
    GeneratingSet { labels, generators }
}

fn parse_nk(label: &str) -> (Option<usize>, Option<usize>) {
    let grab = |key: &str| {
        label.split([',', '(', ')']).find_map(|part| part.strip_prefix(key).and_then(|v| v.parse().ok()))
    };
    (grab("n="), grab("k="))
}

/// The right-hand side of a lifting check.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Arrow(&'a Arrow),
    Sgpd(&'a SimplicialFunctor),
}

/// `p` has the right lifting property against every member of `set`.
/// Stops at the first unliftable square; generators are visited in order.
pub fn rlp_check(p: Target<'_>, set: &GeneratingSet, budget: &mut Budget) -> Result<RlpOutcome> {
    let mut total = 0;
    for g in &set.generators {
        let r = match (&g.member, p) {
            (Member::Arrow(i), Target::Arrow(p)) => rlp_arrow(i, p, &g.label, budget)?,
            (Member::Sgpd(m), Target::Sgpd(f)) => rlp_sgpd(m, f, budget)?,
            _ => return Err(Error::ShapeMismatch(format!("generator {} and target live in different categories", g.label))),
        };
        total += r.squares();
        match r {
            RlpOutcome::Holds { .. } => {}
            RlpOutcome::Fails { witness, .. } => return Ok(RlpOutcome::Fails { squares: total, witness }),
            RlpOutcome::Exhausted { at, .. } => return Ok(RlpOutcome::Exhausted { squares: total, at }),
        }
    }
    Ok(RlpOutcome::Holds { squares: total })
}

/// Lifting for simplicial groupoids. A square against `U_G A -> U_G B` is a
/// pair of objects of the source plus a square of simplicial sets against
/// the mapping-space map. Squares against functors between constant
/// groupoids are determined by level 0.
pub fn rlp_sgpd(g: &GeneratingMap, f: &SimplicialFunctor, budget: &mut Budget) -> Result<RlpOutcome> {
    match g {
        GeneratingMap::Ug { label, inclusion } => {
            let i = Arrow::from_simplicial(inclusion);
            let s = &f.source;
            let mut squares = 0;
            for c1 in 0..s.num_objects() {
                for c2 in 0..s.num_objects() {
                    let p = Arrow::from_simplicial(&f.map_space_map(c1, c2));
                    let tag = format!("{label} at ({}, {})", s.objects()[c1], s.objects()[c2]);
                    let r = rlp_arrow(&i, &p, &tag, budget)?;
                    squares += r.squares();
                    match r {
                        RlpOutcome::Holds { .. } => {}
                        RlpOutcome::Fails { witness, .. } => return Ok(RlpOutcome::Fails { squares, witness }),
                        RlpOutcome::Exhausted { at, .. } => return Ok(RlpOutcome::Exhausted { squares, at }),
                    }
                }
            }
            Ok(RlpOutcome::Holds { squares })
        }
        GeneratingMap::Functor { label, map: j } => {
            let run = |budget: &mut Budget| -> Result<(usize, Option<String>)> {
                let (g0, g1) = (&j.source.level(0).cat, &j.target.level(0).cat);
                let (c0, d0) = (&f.source.level(0).cat, &f.target.level(0).cat);
                let jf = FinFunctor { objects: j.objects.clone(), morphisms: j.level[0].clone() };
                let ff = FinFunctor { objects: f.objects.clone(), morphisms: f.level[0].clone() };
                let tops = enumerate_functors(g0, c0, budget)?;
                let lifts = enumerate_functors(g1, c0, budget)?;
                let mut squares = 0;
                for v in enumerate_functors(g1, d0, budget)? {
                    let vj = jf.compose(&v);
                    for u in tops.iter().filter(|u| u.compose(&ff) == vj) {
                        budget.tick()?;
                        squares += 1;
                        let found = lifts.iter().any(|w| jf.compose(w) == *u && w.compose(&ff) == v);
                        if !found {
                            return Ok((
                                squares,
                                Some(format!("{label}: top objects {:?}, bottom objects {:?}", u.objects, v.objects)),
                            ));
                        }
                    }
                }
                Ok((squares, None))
            };
            match run(budget) {
                Ok((squares, None)) => Ok(RlpOutcome::Holds { squares }),
                Ok((squares, Some(witness))) => Ok(RlpOutcome::Fails { squares, witness }),
                Err(Error::BudgetExhausted(_)) => Ok(RlpOutcome::Exhausted { squares: 0, at: label.clone() }),
                Err(e) => Err(e),
            }
        }
    }
}

/// Membership in the class of acyclic cofibrations: a monomorphism whose
/// rows are weak equivalences (a simplicial set map is its own row).
pub fn j_member(a: &Arrow, upto: usize) -> Result<EquivalenceVerdict> {
    if !a.is_mono() {
        return Ok(EquivalenceVerdict::fail("not a monomorphism"));
    }
    match a.source.kind() {
        ShapeKind::Simplicial { .. } => {
            let f = SimplicialMap::new(
                crate::sset::TruncatedSimplicialSet::from_diagram(a.source.clone())?,
                crate::sset::TruncatedSimplicialSet::from_diagram(a.target.clone())?,
                a.map.clone(),
            )?;
            Ok(weak_equiv_oracle(&f, upto))
        }
        _ => {
            let f = crate::bisimp::SpaceMap::new(a.source.clone(), a.target.clone(), a.map.clone())?;
            let outer = truncs_of(&a.source).0;
            let vs: Vec<EquivalenceVerdict> =
                (0..=outer).map(|n| weak_equiv_oracle(&f.row_map(n), upto)).collect();
            Ok(EquivalenceVerdict::combine(vs.iter()))
        }
    }
}

/// The representable in the outer direction: `IΔ[n]^t` for symmetric
/// spaces, `Δ[n]^t` otherwise.
fn outer_rep(kind: ShapeKind, n: usize) -> Diagram {
    let (outer, inner) = match kind {
        ShapeKind::Bisimplicial { outer, inner } | ShapeKind::Symmetric { outer, inner } => (outer, inner),
        ShapeKind::Simplicial { .. } => panic!("not a space kind"),
    };
    match kind {
        ShapeKind::Symmetric { .. } => irep(n, outer, inner).into_diagram(),
        _ => rep_outer(n, outer, inner).into_diagram(),
    }
}

/// Sequences `[k] -> [n]` naming the cells of [`outer_rep`] at outer level `k`.
fn rep_seqs(kind: ShapeKind, n: usize, k: usize) -> Vec<Vec<usize>> {
    match kind {
        ShapeKind::Symmetric { .. } => all_maps(k, n),
        _ => monotone_maps(k, n),
    }
}

fn keep_rep(r: &Diagram, n: usize, pred: impl Fn(&[usize]) -> bool) -> Vec<Vec<bool>> {
    r.shape()
        .sorts()
        .iter()
        .map(|s| {
            let SortKey::Bi(k, _) = *s else { unreachable!() };
            rep_seqs(r.kind(), n, k).iter().map(|a| pred(a)).collect()
        })
        .collect()
}

fn keep_from_inclusion(r: &Diagram, incl: &SortMap) -> Vec<Vec<bool>> {
    (0..r.shape().sorts().len())
        .map(|s| {
            let mut k = vec![false; r.len(s)];
            for &c in &incl[s] {
                k[c] = true;
            }
            k
        })
        .collect()
}

fn inner_of(kind: ShapeKind) -> usize {
    match kind {
        ShapeKind::Bisimplicial { inner, .. } | ShapeKind::Symmetric { inner, .. } => inner,
        ShapeKind::Simplicial { .. } => panic!("not a space kind"),
    }
}

/// `K × R ∪ Δ[m] × S -> Δ[m] × R` for sub-objects `K ⊆ Δ[m]` (constant in
/// the outer direction) and `S ⊆ R`, given by kept cells.
fn pushout_product(m: usize, left: &SimplicialMap, r: &Diagram, right: &[Vec<bool>]) -> Result<Arrow> {
    let inner = inner_of(r.kind());
    let simplex = constant_like(r.kind(), &standard_simplex(m, inner));
    let p = product(&simplex, r)?;
    let left_keep: Vec<Vec<bool>> = (0..=inner)
        .map(|j| {
            let mut k = vec![false; left.target.len(j)];
            for &c in &left.level[j] {
                k[c] = true;
            }
            k
        })
        .collect();
    let keep: Vec<Vec<bool>> = p
        .diagram
        .shape()
        .sorts()
        .iter()
        .enumerate()
        .map(|(s, key)| {
            let SortKey::Bi(_, j) = *key else { unreachable!() };
            (0..p.diagram.len(s))
                .map(|c| left_keep[j][p.projections[0][s][c]] || right[s][p.projections[1][s][c]])
                .collect()
        })
        .collect();
    let (a, incl) = subobject(&p.diagram, &keep)?;
    Ok(Arrow { source: a, target: p.diagram, map: incl })
}

/// The map between reductions induced by `f`.
pub fn reduce_map(f: &Arrow) -> Result<Arrow> {
    let (ra, rb) = (reduce(&f.source)?, reduce(&f.target)?);
    let map: SortMap = (0..ra.unit.len())
        .map(|s| {
            let mut t = vec![usize::MAX; ra.diagram.len(s)];
            for (c, &img) in ra.unit[s].iter().enumerate() {
                t[img] = rb.unit[s][f.map[s][c]];
            }
            t
        })
        .collect();
    if map.iter().flatten().any(|&v| v == usize::MAX) {
        return Err(Error::Invalid("reduction unit not surjective".into()));
    }
    Arrow::new(ra.diagram, rb.diagram, map)
}

/// Whether the generating sets use `IΔ` (invertible) or `Δ` (plain).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepFlavor {
    Invertible,
    Plain,
}

impl RepFlavor {
    fn kind(self, outer: usize, inner: usize) -> ShapeKind {
        match self {
            RepFlavor::Invertible => ShapeKind::Symmetric { outer, inner },
            RepFlavor::Plain => ShapeKind::Bisimplicial { outer, inner },
        }
    }
}

/// `IP_{m,n}`, `IQ_{m,n}` and `I_{m,n}: IP -> IQ`: `∂Δ[m] × R` (resp.
/// `Δ[m] × R`) with `∂Δ[m] × R₀` (resp. `Δ[m] × R₀`) collapsed onto `R₀`.
pub fn build_ip_iq(m: usize, n: usize, outer: usize, inner: usize, flavor: RepFlavor) -> Result<Arrow> {
    let kind = flavor.kind(outer, inner);
    let r = outer_rep(kind, n);
    let (v, v_incl) = subobject(&r, &keep_rep(&r, n, |a| a.iter().all(|&x| x == a[0])))?;
    let (bd, bd_incl) = boundary(m, inner);
    let full = standard_simplex(m, inner);
    let make = |k: &Diagram| -> Result<(presheaf::Limit, presheaf::Limit, presheaf::Pushout)> {
        let kv = product(k, &v)?;
        let kr = product(k, &r)?;
        let g = kr.mediate(&[&kv.projections[0], &compose(&kv.projections[1], &v_incl)])?;
        let po = pushout(&kv.diagram, &v, &kv.projections[1], &kr.diagram, &g)?;
        Ok((kv, kr, po))
    };
    let cbd = constant_like(kind, &bd);
    let cfull = constant_like(kind, &full);
    let (_, p_kr, p) = make(&cbd)?;
    let (_, q_kr, q) = make(&cfull)?;
    let lift: SortMap = cbd
        .shape()
        .sorts()
        .iter()
        .map(|s| {
            let SortKey::Bi(_, j) = *s else { unreachable!() };
            bd_incl.level[j].clone()
        })
        .collect();
    let my = q_kr.mediate(&[&compose(&p_kr.projections[0], &lift), &p_kr.projections[1]])?;
    let map = p.induced(&q, &identity_map(&v), &my);
    Arrow::new(p.diagram, q.diagram, map)
}

/// `I_c`: `(∂Δ[m] × R ∪ Δ[m] × ∂R)_r -> (Δ[m] × R)_r` for `m ≥ 0` when
/// `n ≥ 1`, and `n = m = 0`, with `R = IΔ[n]^t` or `Δ[n]^t`.
pub fn build_ic(flavor: RepFlavor, mmax: usize, nmax: usize, outer: usize, inner: usize) -> Result<GeneratingSet> {
    let kind = flavor.kind(outer, inner);
    let mut generators = Vec::new();
    let mut push = |m: usize, n: usize| -> Result<()> {
        let r = outer_rep(kind, n);
        let right = keep_rep(&r, n, |a| !is_surjective(a, n));
        let a = pushout_product(m, &boundary(m, inner).1, &r, &right)?;
        generators.push(Generator {
            label: format!("I_c(m={m},n={n})"),
            m: Some(m),
            n: Some(n),
            k: None,
            member: Member::Arrow(reduce_map(&a)?),
        });
        Ok(())
    };
    push(0, 0)?;
    for n in 1..=nmax {
        for m in 0..=mmax {
            push(m, n)?;
        }
    }
    Ok(GeneratingSet { labels: vec![SetLabel::Ic], generators })
}

/// `I_f = { I_{m,n} : IP_{m,n} -> IQ_{m,n} | m, n ≥ 0 }` within bounds.
pub fn build_if(flavor: RepFlavor, mmax: usize, nmax: usize, outer: usize, inner: usize) -> Result<GeneratingSet> {
    let mut generators = Vec::new();
    for m in 0..=mmax {
        for n in 0..=nmax {
            generators.push(Generator {
                label: format!("I_f(m={m},n={n})"),
                m: Some(m),
                n: Some(n),
                k: None,
                member: Member::Arrow(build_ip_iq(m, n, outer, inner, flavor)?),
            });
        }
    }
    Ok(GeneratingSet { labels: vec![SetLabel::If], generators })
}

/// Localization flavor: invertible Segal (`IG(n)`) or Bousfield-Segal (`H(n)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocFlavor {
    Invertible,
    Bousfield,
}

/// Which localization set. `Paper` is `V[m,k] × R ∪ Δ[m] × S` with
/// `m ≥ 1, 0 ≤ k ≤ m, n ≥ 1`. `Boundary` is `∂Δ[m] × R ∪ Δ[m] × S` with
/// `m ≥ 0, n ≥ 1`; its `m = 0` members are the bare inclusions `S -> R`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocRange {
    #[default]
    Paper,
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocBounds {
    pub mmax: usize,
    pub nmax: usize,
}

impl Default for LocBounds {
    fn default() -> Self {
        LocBounds { mmax: 1, nmax: 2 }
    }
}

/// `V[m,k] × R ∪ Δ[m] × S -> Δ[m] × R` with `(R, S) = (IΔ[n]^t, IG(n)^t)`
/// or `(Δ[n]^t, H(n)^t)`.
pub fn localization_set(
    flavor: LocFlavor,
    range: LocRange,
    bounds: LocBounds,
    outer: usize,
    inner: usize,
    index: BousfieldIndex,
) -> Result<GeneratingSet> {
    let mut generators = Vec::new();
    for n in 1..=bounds.nmax.min(outer) {
        let (r, s_incl) = match flavor {
            LocFlavor::Invertible => (irep(n, outer, inner).into_diagram(), ig(n, outer, inner)?.1),
            LocFlavor::Bousfield => (rep_outer(n, outer, inner).into_diagram(), h(n, outer, inner, index)?.1),
        };
        let right = keep_from_inclusion(&r, &s_incl);
        match range {
            LocRange::Paper => {
                for m in 1..=bounds.mmax {
                    for k in 0..=m {
                        let a = pushout_product(m, &horn(m, k, inner)?.1, &r, &right)?;
                        generators.push(Generator {
                            label: format!("V(m={m},k={k},n={n})"),
                            m: Some(m),
                            n: Some(n),
                            k: Some(k),
                            member: Member::Arrow(a),
                        });
                    }
                }
            }
            LocRange::Boundary => {
                for m in 0..=bounds.mmax {
                    let a = pushout_product(m, &boundary(m, inner).1, &r, &right)?;
                    generators.push(Generator {
                        label: format!("B(m={m},n={n})"),
                        m: Some(m),
                        n: Some(n),
                        k: None,
                        member: Member::Arrow(a),
                    });
                }
            }
        }
    }
    let label = match flavor {
        LocFlavor::Invertible => SetLabel::LocInv,
        LocFlavor::Bousfield => SetLabel::LocBousfield,
    };
    Ok(GeneratingSet { labels: vec![label], generators })
}

/// `π₀`-level agreement of the degree-2 Segal-type map: how many components
/// of the fiber product are hit, and whether distinct components of row 2
/// stay distinct. `strict_hits` counts hit cells at inner level 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub hit: usize,
    pub total: usize,
    pub injective: bool,
    pub strict_hits: usize,
    pub strict_total: usize,
}

impl Agreement {
    /// Strictly better: a larger hit fraction, or injectivity gained
    /// without losing hit fraction.
    pub fn improves_on(&self, before: &Agreement) -> bool {
        let (a, b) = (self.hit * before.total.max(1), before.hit * self.total.max(1));
        a > b || (a == b && self.injective && !before.injective)
    }
}

pub fn agreement(x: &Diagram, flavor: LocFlavor, index: BousfieldIndex) -> Result<Agreement> {
    let v = BiView(x);
    let f = match flavor {
        LocFlavor::Invertible => segal_map(&v, 2)?.map,
        LocFlavor::Bousfield => bousfield_map(&v, 2, index)?.map,
    };
    let (sc, _) = components(&f.source);
    let (tc, treps) = components(&f.target);
    let mut hit = vec![false; treps.len()];
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut injective = true;
    for (c, &img) in f.level[0].iter().enumerate() {
        let t = tc[img];
        hit[t] = true;
        if let Some(&prev) = seen.get(&t) {
            injective &= prev == sc[c];
        } else {
            seen.insert(t, sc[c]);
        }
    }
    let mut strict = vec![false; f.target.len(0)];
    for &img in &f.level[0] {
        strict[img] = true;
    }
    Ok(Agreement {
        hit: hit.iter().filter(|&&b| b).count(),
        total: treps.len(),
        injective,
        strict_hits: strict.iter().filter(|&&b| b).count(),
        strict_total: strict.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTrace {
    pub round: usize,
    pub squares: usize,
    pub attached: Vec<String>,
    pub sizes: Vec<usize>,
    pub agreement: Agreement,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationReport {
    pub flavor: LocFlavor,
    pub range: LocRange,
    pub bounds: LocBounds,
    pub initial: Agreement,
    pub rounds: Vec<RoundTrace>,
    /// A round found no unliftable square.
    pub stabilized: bool,
    /// The budget ran out; the trace is partial.
    pub exhausted: bool,
}

impl LocalizationReport {
    /// Rounds that attached something.
    pub fn attaching_rounds(&self) -> usize {
        self.rounds.iter().filter(|r| !r.attached.is_empty()).count()
    }
    /// Some round among the first `rounds` improves on the input.
    pub fn improved_within(&self, rounds: usize) -> bool {
        self.rounds.iter().take(rounds).any(|r| r.agreement.improves_on(&self.initial))
    }
    pub fn final_agreement(&self) -> Agreement {
        self.rounds.last().map(|r| r.agreement).unwrap_or(self.initial)
    }
}

/// `steps` rounds of: find every square against the localization set that
/// has no lift (in generator order, then search order) and attach the
/// codomain along each.
pub fn bounded_localize(
    x: &Diagram,
    flavor: LocFlavor,
    range: LocRange,
    steps: usize,
    bounds: LocBounds,
    index: BousfieldIndex,
    budget: &mut Budget,
) -> Result<(Diagram, LocalizationReport)> {
    let expected = match flavor {
        LocFlavor::Invertible => "symmetric",
        LocFlavor::Bousfield => "bisimplicial",
    };
    let (outer, inner) = match (flavor, x.kind()) {
        (LocFlavor::Invertible, ShapeKind::Symmetric { outer, inner })
        | (LocFlavor::Bousfield, ShapeKind::Bisimplicial { outer, inner }) => (outer, inner),
        (_, k) => return Err(Error::ShapeMismatch(format!("expected a {expected} space, got {k}"))),
    };
    if !BiView(x).is_discrete_row0() {
        return Err(Error::Invalid("localization needs a discrete row 0".into()));
    }
    let set = localization_set(flavor, range, bounds, outer, inner, index)?;
    let initial = agreement(x, flavor, index)?;
    let mut report =
        LocalizationReport { flavor, range, bounds, initial, rounds: Vec::new(), stabilized: false, exhausted: false };
    let mut cur = x.clone();
    for round in 1..=steps {
        let mut found: Vec<(usize, SortMap)> = Vec::new();
        let mut squares = 0;
        let scan = |budget: &mut Budget, found: &mut Vec<(usize, SortMap)>, squares: &mut usize| -> Result<()> {
            for (gi, g) in set.generators.iter().enumerate() {
                let Member::Arrow(i) = &g.member else { unreachable!() };
                for u in HomSearch::new(&i.source, &cur)?.all(budget)? {
                    *squares += 1;
                    if HomSearch::new(&i.target, &cur)?.fix_along(&i.map, &u).first(budget)?.is_none() {
                        found.push((gi, u));
                    }
                }
            }
            Ok(())
        };
        match scan(budget, &mut found, &mut squares) {
            Ok(()) => {}
            Err(Error::BudgetExhausted(_)) => {
                report.exhausted = true;
                break;
            }
            Err(e) => return Err(e),
        }
        if found.is_empty() {
            report.stabilized = true;
            report.rounds.push(RoundTrace {
                round,
                squares,
                attached: Vec::new(),
                sizes: cur.sizes(),
                agreement: agreement(&cur, flavor, index)?,
            });
            break;
        }
        let mut next = cur.clone();
        let mut leg = identity_map(&cur);
        let mut attached = Vec::new();
        for (j, (gi, u)) in found.iter().enumerate() {
            let g = &set.generators[*gi];
            let Member::Arrow(i) = &g.member else { unreachable!() };
            let tag = format!("r{round}.{j}:");
            let b = i.target.renamed(|_, n| format!("{tag}{n}"))?;
            let po = pushout(&i.source, &next, &compose(u, &leg), &b, &i.map)?;
            if !is_injective(&po.left, &po.diagram.sizes()) {
                return Err(Error::Invalid("attaching map is not a monomorphism".into()));
            }
            leg = compose(&leg, &po.left);
            next = po.diagram;
            attached.push(g.label.clone());
        }
        if !BiView(&next).is_discrete_row0() {
            return Err(Error::Invalid("row 0 lost discreteness".into()));
        }
        cur = next;
        report.rounds.push(RoundTrace {
            round,
            squares,
            attached,
            sizes: cur.sizes(),
            agreement: agreement(&cur, flavor, index)?,
        });
    }
    Ok((cur, report))
}

/// Per functor: `rlp(A1 ∪ A2)` against (F1 ∧ F2), and `rlp(C1 ∪ C2)`
/// against fibration plus Dwyer-Kan equivalence.
pub fn crosscheck_props(corpus: &[SimplicialFunctor], nmax: usize, budget: &mut Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("crosscheck");
    let mut agree = [0usize; 2];
    let mut decided = [0usize; 2];
    for (idx, f) in corpus.iter().enumerate() {
        let trunc = f.source.trunc();
        let upto = nmax.min(trunc);
        let a_set = sgpd_set(&[GeneratorKind::A1, GeneratorKind::A2], upto, trunc, false);
        let c_set = sgpd_set(&[GeneratorKind::C1, GeneratorKind::C2], upto, trunc, true);
        let fib = fibration_check(f, upto)?;
        let dk = dk_equivalence_check(f, upto)?;
        let rows = [
            ("fibration", rlp_check(Target::Sgpd(f), &a_set, budget)?, Some(fib.passed)),
            (
                "acyclic_fibration",
                rlp_check(Target::Sgpd(f), &c_set, budget)?,
                if dk.verdict.conclusive || !fib.passed { Some(fib.passed && dk.verdict.is_pass()) } else { None },
            ),
        ];
        for (slot, (what, rlp, prop)) in rows.into_iter().enumerate() {
            let name = format!("functor_{idx}_{what}");
            let o = match (rlp.holds(), prop) {
                (Some(a), Some(b)) => {
                    decided[slot] += 1;
                    if a == b {
                        agree[slot] += 1;
                    }
                    Outcome::decided(&name, a == b, (a != b).then(|| format!("rlp {a}, properties {b}")))
                        .detail("rlp", a)
                        .detail("properties", b)
                }
                (None, _) => Outcome::inconclusive(&name, "lifting search exhausted the budget"),
                (_, None) => Outcome::inconclusive(&name, "weak-equivalence verdict not conclusive"),
            };
            report.push(o);
        }
    }
    report.data("fibration_agreement", format!("{}/{}", agree[0], decided[0]));
    report.data("acyclic_fibration_agreement", format!("{}/{}", agree[1], decided[1]));
    report.data("corpus_size", corpus.len());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{nerve_sgpd, SymmetricSimplicialSpace};
    use crate::category::FinGroupoid;
    use crate::group::FinGroup;
    use crate::sgpd::{walking_iso_groupoid, SimplicialGroupoid};

    fn terminal_map(g: &SimplicialGroupoid) -> SimplicialFunctor {
        let p = SimplicialGroupoid::point("*", g.trunc());
        SimplicialFunctor::into_thin(g, &p, vec![0; g.num_objects()]).unwrap()
    }

    #[test]
    fn identity_has_every_lift() {
        let x = standard_simplex(2, 2);
        let id = Arrow::identity(x.diagram());
        let mut b = Budget::default();
        for (n, k) in [(1, 0), (2, 1)] {
            let i = Arrow::from_simplicial(&horn(n, k, 2).unwrap().1);
            assert_eq!(rlp_arrow(&i, &id, "h", &mut b).unwrap().holds(), Some(true));
        }
    }

    #[test]
    fn kan_fibration_lifts_match_horn_fillers() {
        // Λ²₀ with edges 0->1 and 0->0 needs the edge 1->0
        let x = standard_simplex(1, 2);
        let pt = standard_simplex(0, 2);
        let p = Arrow::new(x.diagram().clone(), pt.diagram().clone(), x.sizes().iter().map(|&s| vec![0; s]).collect()).unwrap();
        let mut b = Budget::default();
        let i = Arrow::from_simplicial(&horn(2, 0, 2).unwrap().1);
        assert_eq!(rlp_arrow(&i, &p, "h", &mut b).unwrap().holds(), Some(false));
        let i = Arrow::from_simplicial(&horn(2, 1, 2).unwrap().1);
        assert_eq!(rlp_arrow(&i, &p, "h", &mut b).unwrap().holds(), Some(true));
    }

    #[test]
    fn walking_iso_to_point_is_acyclic_fibration() {
        let f = terminal_map(&walking_iso_groupoid(2));
        let mut b = Budget::default();
        let set = sgpd_set(&[GeneratorKind::C1, GeneratorKind::C2], 2, 2, true);
        assert_eq!(rlp_check(Target::Sgpd(&f), &set, &mut b).unwrap().holds(), Some(true));
    }

    #[test]
    fn point_into_walking_iso_misses_an_object() {
        let p = SimplicialGroupoid::point("x", 2);
        let f = SimplicialFunctor::into_thin(&p, &walking_iso_groupoid(2), vec![0]).unwrap();
        let mut b = Budget::default();
        let set = sgpd_set(&[GeneratorKind::C2], 2, 2, false);
        assert_eq!(rlp_check(Target::Sgpd(&f), &set, &mut b).unwrap().holds(), Some(false));
        let r = crosscheck_props(&[f], 2, &mut b).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
    }

    #[test]
    fn crosscheck_on_small_maps() {
        let g = FinGroupoid::from_group(&FinGroup::cyclic(2), "a");
        let c = SimplicialGroupoid::constant(&g, 2);
        let maps = vec![SimplicialFunctor::identity(&c), terminal_map(&c), terminal_map(&walking_iso_groupoid(2))];
        let mut b = Budget::default();
        let r = crosscheck_props(&maps, 2, &mut b).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
    }

    #[test]
    fn ip_iq_examples() {
        let q00 = build_ip_iq(0, 0, 2, 1, RepFlavor::Invertible).unwrap();
        assert!(q00.target.sizes().iter().all(|&s| s == 1));
        for n in 0..=2 {
            let a = build_ip_iq(0, n, 2, 1, RepFlavor::Invertible).unwrap();
            let v = BiView(&a.source);
            assert!(v.is_discrete_row0());
            assert_eq!(v.len(0, 0), n + 1);
        }
        for m in 0..=2 {
            for n in 0..=2 {
                assert!(build_ip_iq(m, n, 2, 1, RepFlavor::Invertible).unwrap().is_mono(), "m={m} n={n}");
            }
        }
        assert_eq!(build_if(RepFlavor::Plain, 1, 1, 2, 1).unwrap().len(), 4);
    }

    #[test]
    fn ic_members_are_reduced() {
        let set = build_ic(RepFlavor::Invertible, 1, 1, 2, 1).unwrap();
        assert_eq!(set.generators[0].label, "I_c(m=0,n=0)");
        for g in &set.generators {
            let Member::Arrow(a) = &g.member else { unreachable!() };
            assert!(BiView(&a.source).is_discrete_row0() && BiView(&a.target).is_discrete_row0(), "{}", g.label);
            assert!(a.is_mono(), "{}", g.label);
        }
    }

    #[test]
    fn localization_generators_are_acyclic_monos() {
        let set = localization_set(LocFlavor::Invertible, LocRange::Paper, LocBounds::default(), 2, 1, BousfieldIndex::default())
            .unwrap();
        for g in &set.generators {
            let Member::Arrow(a) = &g.member else { unreachable!() };
            assert!(j_member(a, 1).unwrap().is_pass(), "{}", g.label);
        }
    }

    #[test]
    fn nerve_is_already_local() {
        let g = FinGroupoid::from_group(&FinGroup::cyclic(2), "a");
        let x = nerve_sgpd(&SimplicialGroupoid::constant(&g, 1), 2).into_diagram();
        let mut b = Budget::default();
        let (y, r) =
            bounded_localize(&x, LocFlavor::Invertible, LocRange::Paper, 2, LocBounds::default(), BousfieldIndex::default(), &mut b)
                .unwrap();
        assert!(r.stabilized && r.attaching_rounds() == 0);
        assert_eq!(y, x);
    }

    #[test]
    fn zero_steps_is_identity() {
        let (x, _) = ig(2, 2, 1).unwrap();
        let x = x.into_diagram();
        let mut b = Budget::default();
        let (y, r) =
            bounded_localize(&x, LocFlavor::Invertible, LocRange::Paper, 0, LocBounds::default(), BousfieldIndex::default(), &mut b)
                .unwrap();
        assert_eq!(y, x);
        assert!(r.rounds.is_empty() && !r.stabilized);
    }

    #[test]
    fn spine_glue_needs_the_boundary_set() {
        let (x, _) = ig(2, 2, 1).unwrap();
        let x: SymmetricSimplicialSpace = x;
        let x = reduce(x.diagram()).unwrap().diagram;
        let mut b = Budget::default();
        let (_, paper) =
            bounded_localize(&x, LocFlavor::Invertible, LocRange::Paper, 2, LocBounds::default(), BousfieldIndex::default(), &mut b)
                .unwrap();
        assert!(paper.stabilized && paper.attaching_rounds() == 0);
        let (_, wide) =
            bounded_localize(&x, LocFlavor::Invertible, LocRange::Boundary, 2, LocBounds::default(), BousfieldIndex::default(), &mut b)
                .unwrap();
        assert!(wide.attaching_rounds() >= 1);
        assert!(!paper.improved_within(2));
        assert!(wide.improved_within(2), "{wide:?}");
        eprintln!("{wide:?}");
    }
}
