//! The adjoint pairs `C ⊣ T`, `I ⊣ R`, `invert ⊣ restrict` and `F ⊣ N`,
//! with finite verification of hom-bijections, naturality and triangle
//! identities.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use serde::Serialize;

use crate::bisimp::{
    cosk0_space, nerve_sgpd, BiSimplicialSet, BiView, Space, SymmetricSimplicialSpace,
};
use crate::category::{enumerate_functors, FinCategory, FinFunctor, Morphism};
use crate::combinat::all_maps;
use crate::error::{Error, Result};
use crate::kan_ext::{counit as invert_counit, invert, Inverted};
use crate::oracle::{recognize_nerve, weak_equiv_oracle, EquivalenceVerdict};
use crate::presheaf::{check_natural, compose, identity_map, pullback, Budget, Diagram, HomSearch, Limit, ShapeKind, SortKey, SortMap};
use crate::report::{CheckReport, Outcome};
use crate::segal::{hoequiv_check, segal_map};
use crate::sgpd::{SimplicialFunctor, SimplicialGroupoid};
use crate::sset::{composable_strings, TruncatedSimplicialSet};

/// An invertible simplicial space whose row 0 is discrete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegalPregroupoid(SymmetricSimplicialSpace);

impl SegalPregroupoid {
    pub fn new(x: SymmetricSimplicialSpace) -> Result<Self> {
        if !x.is_discrete_row0() {
            return Err(Error::Invalid("row 0 is not discrete".into()));
        }
        Ok(SegalPregroupoid(x))
    }
    pub fn space(&self) -> &SymmetricSimplicialSpace {
        &self.0
    }
    pub fn diagram(&self) -> &Diagram {
        self.0.diagram()
    }
}

pub fn inclusion_i(x: &SegalPregroupoid) -> SymmetricSimplicialSpace {
    x.0.clone()
}

fn sort_nm(d: &Diagram, s: usize) -> (usize, usize) {
    let SortKey::Bi(n, m) = d.shape().sorts()[s] else { unreachable!() };
    (n, m)
}

/// Point of `W_{0,0}` under a cell of `W_{0,m}` (repeated `d_0`).
fn base_point<S: Space>(w: &S, m: usize, mut c: usize) -> usize {
    for j in (1..=m).rev() {
        c = w.inner_face(0, j, 0, c);
    }
    c
}

/// Total inner degeneracy of a point of `W_{0,0}` at inner level `m`.
fn lift_point<S: Space>(w: &S, m: usize, mut c: usize) -> usize {
    for j in 0..m {
        c = w.inner_degen(0, j, 0, c);
    }
    c
}

fn vertices<S: Space>(w: &S, n: usize, m: usize, x: usize) -> Vec<usize> {
    (0..=n).map(|j| w.act_monotone(&[j], n, m, x)).collect()
}

fn tuple_index(len: usize, n: usize) -> HashMap<Vec<usize>, usize> {
    if len == 0 {
        return HashMap::new();
    }
    all_maps(n, len - 1).into_iter().enumerate().map(|(i, t)| (t, i)).collect()
}

/// `RW = W ×_{cosk₀ W₀} cosk₀(W_{0,0})`, with the leg to `W`.
#[derive(Clone, Debug)]
pub struct RObject {
    pub pregroupoid: SegalPregroupoid,
    pub limit: Limit,
    pub points: usize,
}

impl RObject {
    pub fn counit(&self) -> &SortMap {
        &self.limit.projections[0]
    }
}

pub fn r_functor(w: &SymmetricSimplicialSpace) -> Result<RObject> {
    let (outer, inner) = w.truncs();
    let points = w.cells(0, 0).to_vec();
    let v = cosk0_space(&TruncatedSimplicialSet::discrete(&points, inner), outer);
    let d = w.diagram();
    let mut to_u = Vec::new();
    let mut v_to_u = Vec::new();
    for s in 0..d.shape().sorts().len() {
        let (n, m) = sort_nm(d, s);
        let ui = tuple_index(w.len(0, m), n);
        to_u.push((0..w.len(n, m)).map(|x| ui[&vertices(w, n, m, x)]).collect());
        let tuples = if points.is_empty() { Vec::new() } else { all_maps(n, points.len() - 1) };
        v_to_u.push(tuples.iter().map(|t| ui[&t.iter().map(|&p| lift_point(w, m, p)).collect::<Vec<_>>()]).collect());
    }
    let limit = pullback(d, &to_u, v.diagram(), &v_to_u)?;
    let sp = SymmetricSimplicialSpace::from_diagram(limit.diagram.clone())?;
    Ok(RObject { pregroupoid: SegalPregroupoid::new(sp)?, limit, points: points.len() })
}

/// `R(g)` for `g: W -> W'`.
pub fn r_map(rw: &RObject, rw2: &RObject, g: &SortMap) -> SortMap {
    let d = &rw.limit.diagram;
    (0..d.shape().sorts().len())
        .map(|s| {
            let n = sort_nm(d, s).0;
            let tuples = if rw.points == 0 { Vec::new() } else { all_maps(n, rw.points - 1) };
            let ti = tuple_index(rw2.points, n);
            let g00 = &g[0];
            (0..d.len(s))
                .map(|c| {
                    let (x, t) = (rw.limit.projections[0][s][c], rw.limit.projections[1][s][c]);
                    let t2: Vec<usize> = tuples[t].iter().map(|&p| g00[p]).collect();
                    rw2.limit.cell_of(s, &[g[s][x], ti[&t2]]).expect("image lies in the pullback")
                })
                .collect()
        })
        .collect()
}

/// Unit `X -> R(I(X))`: a cell goes to itself with its vertex points.
pub fn r_unit(x: &SegalPregroupoid, rx: &RObject) -> SortMap {
    let sp = x.space();
    let d = x.diagram();
    (0..d.shape().sorts().len())
        .map(|s| {
            let (n, m) = sort_nm(d, s);
            let ti = tuple_index(rx.points, n);
            (0..d.len(s))
                .map(|c| {
                    let t: Vec<usize> = vertices(sp, n, m, c).into_iter().map(|v| base_point(sp, m, v)).collect();
                    rx.limit.cell_of(s, &[c, ti[&t]]).expect("cell with its vertices")
                })
                .collect()
        })
        .collect()
}

/// `T(W) = W₀`, the row 0.
pub fn t_functor(w: &SymmetricSimplicialSpace) -> TruncatedSimplicialSet {
    w.row(0)
}

/// `C(K)`: `K` in every outer degree with identity operators.
pub fn c_functor(k: &TruncatedSimplicialSet, outer: usize) -> SymmetricSimplicialSpace {
    SymmetricSimplicialSpace::constant(k, outer)
}

/// Counit `C(T(W)) -> W` by total outer degeneracies.
pub fn ct_counit(w: &SymmetricSimplicialSpace) -> SortMap {
    let d = w.diagram();
    (0..d.shape().sorts().len())
        .map(|s| {
            let (n, m) = sort_nm(d, s);
            (0..w.len(0, m)).map(|c| w.act_monotone(&vec![0; n + 1], 0, m, c)).collect()
        })
        .collect()
}

/// Whether `C(T(W)) -> W` is a weak equivalence row by row; `None` unless
/// the counit is levelwise surjective on cells, i.e. all rows agree with
/// `W₀` through total degeneracies.
pub fn ct_counit_verdict(w: &SymmetricSimplicialSpace) -> Option<EquivalenceVerdict> {
    let e = ct_counit(w);
    let d = w.diagram();
    let sizes = d.sizes();
    if !crate::presheaf::is_surjective(&e, &sizes) {
        return None;
    }
    let ctw = c_functor(&t_functor(w), w.outer());
    let f = crate::bisimp::SpaceMap::new(ctw.into_diagram(), d.clone(), e).ok()?;
    let vs: Vec<EquivalenceVerdict> = (0..=w.outer()).map(|n| weak_equiv_oracle(&f.row_map(n), w.inner())).collect();
    Some(EquivalenceVerdict::combine(vs.iter()))
}

/// Which adjoint pair a certificate is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairLabel {
    #[serde(rename = "I-R")]
    IR,
    #[serde(rename = "C-T")]
    CT,
    #[serde(rename = "F-N")]
    FN,
    #[serde(rename = "invert-restrict")]
    InvertRestrict,
    #[serde(rename = "id-id")]
    Identity,
}

impl PairLabel {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "I-R" | "IR" | "I⊣R" => PairLabel::IR,
            "C-T" | "CT" | "C⊣T" => PairLabel::CT,
            "F-N" | "FN" | "F⊣N" => PairLabel::FN,
            "invert-restrict" | "invert⊣restrict" => PairLabel::InvertRestrict,
            "id-id" | "id⊣id" => PairLabel::Identity,
            _ => return None,
        })
    }
}

/// Checks on one instance `(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceCheck {
    pub label: String,
    /// `|Hom(LX, Y)|`.
    pub left_hom: usize,
    /// `|Hom(X, RY)|`.
    pub right_hom: usize,
    /// The transposes are mutually inverse and land in the right sets.
    pub bijection: bool,
    pub naturality_squares: usize,
    pub naturality: bool,
    pub triangle_left: bool,
    pub triangle_right: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exhausted: bool,
}

impl InstanceCheck {
    pub fn passed(&self) -> bool {
        !self.exhausted && self.bijection && self.naturality && self.triangle_left && self.triangle_right
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjunctionCertificate {
    pub pair: PairLabel,
    pub instances: Vec<InstanceCheck>,
}

impl AdjunctionCertificate {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(InstanceCheck::passed)
    }

    pub fn to_report(&self) -> CheckReport {
        let mut r = CheckReport::new("verify-adjunction");
        r.data("pair", self.pair);
        for i in &self.instances {
            let o = if i.exhausted {
                Outcome::inconclusive(&i.label, "budget exhausted")
            } else {
                let failed = [
                    (!i.bijection).then_some("bijection"),
                    (!i.naturality).then_some("naturality"),
                    (!i.triangle_left).then_some("left triangle"),
                    (!i.triangle_right).then_some("right triangle"),
                ]
                .into_iter()
                .flatten()
                .collect::<Vec<_>>();
                Outcome::decided(&i.label, failed.is_empty(), (!failed.is_empty()).then(|| failed.join(", ")))
            };
            r.push(
                o.detail("left_hom", i.left_hom)
                    .detail("right_hom", i.right_hom)
                    .detail("naturality_squares", i.naturality_squares),
            );
        }
        r
    }
}

/// An adjunction `L ⊣ R` given by its action on objects and maps and by
/// unit and counit. Objects carry whatever data their maps need.
pub trait AdjointPair {
    type Left: Clone;
    type Right: Clone;
    fn label(&self) -> PairLabel;
    fn left_diagram<'a>(&self, x: &'a Self::Left) -> &'a Diagram;
    fn right_diagram<'a>(&self, y: &'a Self::Right) -> &'a Diagram;
    fn apply_left(&self, x: &Self::Left) -> Result<Self::Right>;
    fn apply_right(&self, y: &Self::Right) -> Result<Self::Left>;
    /// `L(f)` for `f: x -> x2`.
    fn left_map(&self, x: &Self::Left, lx: &Self::Right, lx2: &Self::Right, f: &SortMap) -> Result<SortMap>;
    /// `R(g)` for `g: y -> y2`.
    fn right_map(&self, y: &Self::Right, ry: &Self::Left, ry2: &Self::Left, g: &SortMap) -> Result<SortMap>;
    /// `X -> R L X`.
    fn unit(&self, x: &Self::Left, lx: &Self::Right, rlx: &Self::Left) -> Result<SortMap>;
    /// `L R Y -> Y`.
    fn counit(&self, y: &Self::Right, ry: &Self::Left, lry: &Self::Right) -> Result<SortMap>;
}

const TEST_MAPS: usize = 4;

fn some_maps(a: &Diagram, b: &Diagram, budget: &mut Budget) -> Result<Vec<SortMap>> {
    let mut out = Vec::new();
    HomSearch::new(a, b)?.for_each(budget, |f| {
        out.push(f.clone());
        out.len() < TEST_MAPS
    })?;
    Ok(out)
}

/// Verifies one instance: both hom-sets enumerated, transposition
/// `f ↦ R(f) ∘ η` and `g ↦ ε ∘ L(g)` checked mutually inverse, unit and
/// counit natural along a few endomaps, both triangle identities.
pub fn verify_instance<P: AdjointPair>(
    p: &P,
    label: &str,
    x: &P::Left,
    y: &P::Right,
    budget: &mut Budget,
) -> Result<InstanceCheck> {
    let run = |budget: &mut Budget| -> Result<InstanceCheck> {
        let lx = p.apply_left(x)?;
        let ry = p.apply_right(y)?;
        let rlx = p.apply_right(&lx)?;
        let lry = p.apply_left(&ry)?;
        let (xd, yd, lxd, ryd) = (p.left_diagram(x), p.right_diagram(y), p.right_diagram(&lx), p.left_diagram(&ry));
        let eta = p.unit(x, &lx, &rlx)?;
        let eps = p.counit(y, &ry, &lry)?;
        check_natural(xd, p.left_diagram(&rlx), &eta)?;
        check_natural(p.right_diagram(&lry), yd, &eps)?;

        let left: Vec<SortMap> = HomSearch::new(lxd, yd)?.all(budget)?;
        let right: Vec<SortMap> = HomSearch::new(xd, ryd)?.all(budget)?;
        let right_set: HashSet<&SortMap> = right.iter().collect();
        let left_set: HashSet<&SortMap> = left.iter().collect();
        let mut bijection = left.len() == right.len();
        for f in &left {
            let g = compose(&eta, &p.right_map(&lx, &rlx, &ry, f)?);
            let back = compose(&p.left_map(x, &lx, &lry, &g)?, &eps);
            bijection &= right_set.contains(&g) && back == *f;
        }
        for g in &right {
            let f = compose(&p.left_map(x, &lx, &lry, g)?, &eps);
            let again = compose(&eta, &p.right_map(&lx, &rlx, &ry, &f)?);
            bijection &= left_set.contains(&f) && again == *g;
        }

        let mut squares = 0;
        let mut naturality = true;
        for a in some_maps(xd, xd, budget)? {
            squares += 1;
            let rla = p.right_map(&lx, &rlx, &rlx, &p.left_map(x, &lx, &lx, &a)?)?;
            naturality &= compose(&a, &eta) == compose(&eta, &rla);
        }
        for b in some_maps(yd, yd, budget)? {
            squares += 1;
            let lrb = p.left_map(&ry, &lry, &lry, &p.right_map(y, &ry, &ry, &b)?)?;
            naturality &= compose(&lrb, &eps) == compose(&eps, &b);
        }

        let lrlx = p.apply_left(&rlx)?;
        let eps_lx = p.counit(&lx, &rlx, &lrlx)?;
        let triangle_left = compose(&p.left_map(x, &lx, &lrlx, &eta)?, &eps_lx) == identity_map(lxd);
        let rlry = p.apply_right(&lry)?;
        let eta_ry = p.unit(&ry, &lry, &rlry)?;
        let triangle_right = compose(&eta_ry, &p.right_map(&lry, &rlry, &ry, &eps)?) == identity_map(ryd);

        Ok(InstanceCheck {
            label: label.into(),
            left_hom: left.len(),
            right_hom: right.len(),
            bijection,
            naturality_squares: squares,
            naturality,
            triangle_left,
            triangle_right,
            exhausted: false,
        })
    };
    match run(budget) {
        Err(Error::BudgetExhausted(_)) => Ok(InstanceCheck {
            label: label.into(),
            left_hom: 0,
            right_hom: 0,
            bijection: false,
            naturality_squares: 0,
            naturality: false,
            triangle_left: false,
            triangle_right: false,
            exhausted: true,
        }),
        other => other,
    }
}

pub fn verify_adjunction<P: AdjointPair>(
    p: &P,
    instances: &[(String, P::Left, P::Right)],
    budget: &mut Budget,
) -> Result<AdjunctionCertificate> {
    let instances =
        instances.iter().map(|(l, x, y)| verify_instance(p, l, x, y, budget)).collect::<Result<Vec<_>>>()?;
    Ok(AdjunctionCertificate { pair: p.label(), instances })
}

/// `C ⊣ T` between simplicial sets and symmetric simplicial spaces of a
/// fixed outer truncation.
pub struct ConstantRow0 {
    pub outer: usize,
}

impl AdjointPair for ConstantRow0 {
    type Left = TruncatedSimplicialSet;
    type Right = SymmetricSimplicialSpace;
    fn label(&self) -> PairLabel {
        PairLabel::CT
    }
    fn left_diagram<'a>(&self, x: &'a Self::Left) -> &'a Diagram {
        x.diagram()
    }
    fn right_diagram<'a>(&self, y: &'a Self::Right) -> &'a Diagram {
        y.diagram()
    }
    fn apply_left(&self, k: &Self::Left) -> Result<Self::Right> {
        Ok(c_functor(k, self.outer))
    }
    fn apply_right(&self, w: &Self::Right) -> Result<Self::Left> {
        Ok(t_functor(w))
    }
    fn left_map(&self, _: &Self::Left, lx: &Self::Right, _: &Self::Right, f: &SortMap) -> Result<SortMap> {
        let d = lx.diagram();
        Ok((0..d.shape().sorts().len()).map(|s| f[sort_nm(d, s).1].clone()).collect())
    }
    fn right_map(&self, y: &Self::Right, _: &Self::Left, _: &Self::Left, g: &SortMap) -> Result<SortMap> {
        Ok((0..=y.inner()).map(|m| g[y.sort(0, m)].clone()).collect())
    }
    fn unit(&self, x: &Self::Left, _: &Self::Right, _: &Self::Left) -> Result<SortMap> {
        Ok(identity_map(x.diagram()))
    }
    fn counit(&self, y: &Self::Right, _: &Self::Left, _: &Self::Right) -> Result<SortMap> {
        Ok(ct_counit(y))
    }
}

/// `I ⊣ R` between Segal pregroupoids and symmetric simplicial spaces.
pub struct InclusionR;

/// A symmetric space, remembering its pullback structure when it is `R(W)`.
#[derive(Clone, Debug)]
pub struct Pregroupoid {
    pub x: SegalPregroupoid,
    pub r: Option<Rc<(SymmetricSimplicialSpace, RObject)>>,
}

impl AdjointPair for InclusionR {
    type Left = Pregroupoid;
    type Right = SymmetricSimplicialSpace;
    fn label(&self) -> PairLabel {
        PairLabel::IR
    }
    fn left_diagram<'a>(&self, x: &'a Self::Left) -> &'a Diagram {
        x.x.diagram()
    }
    fn right_diagram<'a>(&self, y: &'a Self::Right) -> &'a Diagram {
        y.diagram()
    }
    fn apply_left(&self, x: &Self::Left) -> Result<Self::Right> {
        Ok(inclusion_i(&x.x))
    }
    fn apply_right(&self, w: &Self::Right) -> Result<Self::Left> {
        let r = r_functor(w)?;
        Ok(Pregroupoid { x: r.pregroupoid.clone(), r: Some(Rc::new((w.clone(), r))) })
    }
    fn left_map(&self, _: &Self::Left, _: &Self::Right, _: &Self::Right, f: &SortMap) -> Result<SortMap> {
        Ok(f.clone())
    }
    fn right_map(&self, _: &Self::Right, ry: &Self::Left, ry2: &Self::Left, g: &SortMap) -> Result<SortMap> {
        let (a, b) = (ry.r.as_ref().expect("R object"), ry2.r.as_ref().expect("R object"));
        Ok(r_map(&a.1, &b.1, g))
    }
    fn unit(&self, x: &Self::Left, _: &Self::Right, rlx: &Self::Left) -> Result<SortMap> {
        Ok(r_unit(&x.x, &rlx.r.as_ref().expect("R object").1))
    }
    fn counit(&self, _: &Self::Right, ry: &Self::Left, _: &Self::Right) -> Result<SortMap> {
        Ok(ry.r.as_ref().expect("R object").1.counit().clone())
    }
}

impl Pregroupoid {
    pub fn new(x: SegalPregroupoid) -> Self {
        Pregroupoid { x, r: None }
    }
}

/// `invert ⊣ restrict` between simplicial spaces and symmetric ones.
pub struct InvertRestrict;

#[derive(Clone, Debug)]
pub struct SymObject {
    pub space: SymmetricSimplicialSpace,
    pub inverted: Option<Rc<Inverted>>,
}

impl SymObject {
    pub fn new(space: SymmetricSimplicialSpace) -> Self {
        SymObject { space, inverted: None }
    }
}

impl AdjointPair for InvertRestrict {
    type Left = BiSimplicialSet;
    type Right = SymObject;
    fn label(&self) -> PairLabel {
        PairLabel::InvertRestrict
    }
    fn left_diagram<'a>(&self, x: &'a Self::Left) -> &'a Diagram {
        x.diagram()
    }
    fn right_diagram<'a>(&self, y: &'a Self::Right) -> &'a Diagram {
        y.space.diagram()
    }
    fn apply_left(&self, x: &Self::Left) -> Result<Self::Right> {
        let inv = invert(x, &mut Budget::default())?;
        Ok(SymObject { space: inv.space.clone(), inverted: Some(Rc::new(inv)) })
    }
    fn apply_right(&self, y: &Self::Right) -> Result<Self::Left> {
        Ok(y.space.restrict())
    }
    fn left_map(&self, _: &Self::Left, lx: &Self::Right, lx2: &Self::Right, f: &SortMap) -> Result<SortMap> {
        let (a, b) = (lx.inverted.as_ref().expect("inverted"), lx2.inverted.as_ref().expect("inverted"));
        Ok(a.induced(b, f))
    }
    fn right_map(&self, _: &Self::Right, _: &Self::Left, _: &Self::Left, g: &SortMap) -> Result<SortMap> {
        Ok(g.clone())
    }
    fn unit(&self, _: &Self::Left, lx: &Self::Right, _: &Self::Left) -> Result<SortMap> {
        Ok(lx.inverted.as_ref().expect("inverted").unit.clone())
    }
    fn counit(&self, y: &Self::Right, _: &Self::Left, lry: &Self::Right) -> Result<SortMap> {
        Ok(invert_counit(&y.space, lry.inverted.as_ref().expect("inverted")))
    }
}

/// `id ⊣ id` on symmetric simplicial spaces.
pub struct IdentityPair;

impl AdjointPair for IdentityPair {
    type Left = SymmetricSimplicialSpace;
    type Right = SymmetricSimplicialSpace;
    fn label(&self) -> PairLabel {
        PairLabel::Identity
    }
    fn left_diagram<'a>(&self, x: &'a Self::Left) -> &'a Diagram {
        x.diagram()
    }
    fn right_diagram<'a>(&self, y: &'a Self::Right) -> &'a Diagram {
        y.diagram()
    }
    fn apply_left(&self, x: &Self::Left) -> Result<Self::Right> {
        Ok(x.clone())
    }
    fn apply_right(&self, y: &Self::Right) -> Result<Self::Left> {
        Ok(y.clone())
    }
    fn left_map(&self, _: &Self::Left, _: &Self::Right, _: &Self::Right, f: &SortMap) -> Result<SortMap> {
        Ok(f.clone())
    }
    fn right_map(&self, _: &Self::Right, _: &Self::Left, _: &Self::Left, g: &SortMap) -> Result<SortMap> {
        Ok(g.clone())
    }
    fn unit(&self, x: &Self::Left, _: &Self::Right, _: &Self::Left) -> Result<SortMap> {
        Ok(identity_map(x.diagram()))
    }
    fn counit(&self, y: &Self::Right, _: &Self::Left, _: &Self::Right) -> Result<SortMap> {
        Ok(identity_map(y.diagram()))
    }
}

/// `Hom(F(X), H)`, realized as `Hom(X, N(H))`.
pub fn f_eval(x: &SegalPregroupoid, h: &SimplicialGroupoid, budget: &mut Budget) -> Result<Vec<SortMap>> {
    let outer = x.space().outer();
    if h.trunc() != x.space().inner() {
        return Err(Error::TruncationMismatch(format!("{}", x.space().inner()), format!("{}", h.trunc())));
    }
    let nh = nerve_sgpd(h, outer);
    HomSearch::new(x.diagram(), nh.diagram())?.all(budget)
}

/// All simplicial functors `G -> H`, level by level with face and
/// degeneracy compatibility.
pub fn simplicial_functors(
    g: &SimplicialGroupoid,
    h: &SimplicialGroupoid,
    budget: &mut Budget,
) -> Result<Vec<SimplicialFunctor>> {
    if g.trunc() != h.trunc() {
        return Err(Error::TruncationMismatch(format!("{}", g.trunc()), format!("{}", h.trunc())));
    }
    let trunc = g.trunc();
    let per_level: Vec<Vec<FinFunctor>> = (0..=trunc)
        .map(|n| enumerate_functors(&g.level(n).cat, &h.level(n).cat, budget))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    fn extend(
        g: &SimplicialGroupoid,
        h: &SimplicialGroupoid,
        per_level: &[Vec<FinFunctor>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<SimplicialFunctor>,
        budget: &mut Budget,
    ) -> Result<()> {
        let n = chosen.len();
        if n == per_level.len() {
            let objects = per_level[0][chosen[0]].objects.clone();
            let level = chosen.iter().enumerate().map(|(k, &c)| per_level[k][c].morphisms.clone()).collect();
            out.push(SimplicialFunctor::new(g.clone(), h.clone(), objects, level)?);
            return Ok(());
        }
        for (ci, cand) in per_level[n].iter().enumerate() {
            budget.tick()?;
            if n > 0 {
                let prev = &per_level[n - 1][chosen[n - 1]];
                if cand.objects != prev.objects {
                    continue;
                }
                let faces_ok = (0..=n).all(|i| {
                    let (dg, dh) = (g.face_table(n, i), h.face_table(n, i));
                    (0..cand.morphisms.len()).all(|f| dh[cand.morphisms[f]] == prev.morphisms[dg[f]])
                });
                let degens_ok = (0..n).all(|i| {
                    let (sg, sh) = (g.degen_table(n - 1, i), h.degen_table(n - 1, i));
                    (0..prev.morphisms.len()).all(|f| cand.morphisms[sg[f]] == sh[prev.morphisms[f]])
                });
                if !faces_ok || !degens_ok {
                    continue;
                }
            }
            chosen.push(ci);
            extend(g, h, per_level, chosen, out, budget)?;
            chosen.pop();
        }
        Ok(())
    }
    extend(g, h, &per_level, &mut Vec::new(), &mut out, budget)?;
    Ok(out)
}

/// `N(φ)` for a simplicial functor `φ`.
pub fn nerve_map(f: &SimplicialFunctor, outer: usize) -> SortMap {
    let (g, h) = (&f.source, &f.target);
    let inner = g.trunc();
    let mut out = Vec::new();
    for n in 0..=outer {
        for m in 0..=inner {
            let src = composable_strings(&g.level(m).cat, n).swap_remove(n);
            let tgt = composable_strings(&h.level(m).cat, n).swap_remove(n);
            let index: HashMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(i, s)| (s, i)).collect();
            out.push(
                src.iter()
                    .map(|s| {
                        let t: Vec<usize> =
                            if n == 0 { vec![f.objects[s[0]]] } else { s.iter().map(|&x| f.level[m][x]).collect() };
                        index[&t]
                    })
                    .collect(),
            );
        }
    }
    out
}

/// `F ⊣ N` on `(N(G), H)`: `Hom(N G, N H)` is exactly the set of nerves of
/// simplicial functors `G -> H`, and precomposition is respected.
pub fn verify_fn_instance(
    label: &str,
    g: &SimplicialGroupoid,
    h: &SimplicialGroupoid,
    outer: usize,
    budget: &mut Budget,
) -> Result<InstanceCheck> {
    let run = |budget: &mut Budget| -> Result<InstanceCheck> {
        let ng = SegalPregroupoid::new(nerve_sgpd(g, outer))?;
        let homs = f_eval(&ng, h, budget)?;
        let funs = simplicial_functors(g, h, budget)?;
        let nerves: Vec<SortMap> = funs.iter().map(|f| nerve_map(f, outer)).collect();
        let hom_set: HashSet<&SortMap> = homs.iter().collect();
        let nerve_set: HashSet<&SortMap> = nerves.iter().collect();
        let bijection = homs.len() == funs.len() && nerve_set.len() == nerves.len() && nerves.iter().all(|n| hom_set.contains(n));
        let mut squares = 0;
        let mut naturality = true;
        for a in simplicial_functors(g, g, budget)?.into_iter().take(TEST_MAPS) {
            let na = nerve_map(&a, outer);
            for f in funs.iter().take(TEST_MAPS) {
                squares += 1;
                naturality &= nerve_map(&a.then(f)?, outer) == compose(&na, &nerve_map(f, outer));
            }
        }
        Ok(InstanceCheck {
            label: label.into(),
            left_hom: funs.len(),
            right_hom: homs.len(),
            bijection,
            naturality_squares: squares,
            naturality,
            triangle_left: true,
            triangle_right: true,
            exhausted: false,
        })
    };
    match run(budget) {
        Err(Error::BudgetExhausted(_)) => Ok(InstanceCheck {
            label: label.into(),
            left_hom: 0,
            right_hom: 0,
            bijection: false,
            naturality_squares: 0,
            naturality: false,
            triangle_left: false,
            triangle_right: false,
            exhausted: true,
        }),
        other => other,
    }
}

/// The simplicial groupoid whose nerve is `X`, when `X` is strictly Segal
/// with invertible homotopy category; `None` otherwise.
pub fn rigidify_strict(x: &SegalPregroupoid) -> Result<Option<SimplicialGroupoid>> {
    let sp = x.space();
    let (outer, inner) = sp.truncs();
    if outer < 2 {
        return Err(Error::OutOfRange("rigidification needs outer truncation at least 2".into()));
    }
    for k in 2..=outer {
        if !segal_map(sp, k)?.map.is_levelwise_bijection() {
            return Ok(None);
        }
    }
    if !hoequiv_check(sp)?.0 {
        return Ok(None);
    }
    let objects = sp.cells(0, 0).to_vec();
    let mut levels = Vec::with_capacity(inner + 1);
    for m in 0..=inner {
        let Some(c) = recognize_nerve(&sp.column(m)) else { return Ok(None) };
        let obj: Vec<usize> = (0..c.num_objects()).map(|o| base_point(sp, m, o)).collect();
        let mut ident = vec![0; objects.len()];
        for (o, &p) in obj.iter().enumerate() {
            ident[p] = c.identity(o);
        }
        let morphisms: Vec<Morphism> = c
            .morphisms()
            .iter()
            .map(|f| Morphism { name: f.name.clone(), dom: obj[f.dom], cod: obj[f.cod] })
            .collect();
        let cat = FinCategory::from_fn(objects.clone(), morphisms, ident, |g, f| c.try_compose(g, f))?;
        let Some(gpd) = cat.to_groupoid() else { return Ok(None) };
        levels.push(gpd);
    }
    let face = (1..=inner)
        .map(|m| (0..=m).map(|i| (0..sp.len(1, m)).map(|e| sp.inner_face(1, m, i, e)).collect()).collect())
        .collect();
    let degen = (0..inner)
        .map(|m| (0..=m).map(|i| (0..sp.len(1, m)).map(|e| sp.inner_degen(1, m, i, e)).collect()).collect())
        .collect();
    Ok(SimplicialGroupoid::new(objects, levels, face, degen).ok())
}

/// Whether a space is of the kind the left side of `I ⊣ R` accepts.
pub fn is_pregroupoid(d: &Diagram) -> bool {
    matches!(d.kind(), ShapeKind::Symmetric { .. }) && BiView(d).is_discrete_row0()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{irep, rep_outer};
    use crate::category::FinGroupoid;
    use crate::group::FinGroup;
    use crate::presheaf::find_isomorphism;
    use crate::sgpd::walking_iso_groupoid;
    use crate::sset::{boundary, standard_simplex};

    fn z2(trunc: usize) -> SimplicialGroupoid {
        SimplicialGroupoid::constant(&FinGroupoid::from_group(&FinGroup::cyclic(2), "a"), trunc)
    }

    #[test]
    fn c_t_on_simplex() {
        let p = ConstantRow0 { outer: 2 };
        let k = standard_simplex(1, 1);
        let w = c_functor(&k, 2);
        let mut b = Budget::default();
        let c = verify_instance(&p, "d1", &k, &w, &mut b).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.left_hom, 3);
        assert_eq!(t_functor(&c_functor(&k, 2)), k);
    }

    #[test]
    fn i_r_on_walking_iso() {
        let x = SegalPregroupoid::new(nerve_sgpd(&walking_iso_groupoid(1), 2)).unwrap();
        let two = TruncatedSimplicialSet::discrete(&["a".to_string(), "b".to_string()], 1);
        let w = cosk0_space(&two, 2);
        let mut b = Budget::default();
        let c = verify_instance(&InclusionR, "F,cosk", &Pregroupoid::new(x.clone()), &w, &mut b).unwrap();
        assert!(c.passed(), "{c:?}");
        let rx = r_functor(&inclusion_i(&x)).unwrap();
        let u = r_unit(&x, &rx);
        assert!(crate::presheaf::is_bijective(&u, &rx.limit.diagram.sizes()));
    }

    #[test]
    fn r_of_point_and_cosk() {
        let pt = irep(0, 2, 1);
        assert!(r_functor(&pt).unwrap().pregroupoid.diagram().sizes().iter().all(|&s| s == 1));
        let k = standard_simplex(1, 1);
        let r = r_functor(&cosk0_space(&k, 2)).unwrap();
        let pts = cosk0_space(&TruncatedSimplicialSet::discrete(&["0".into(), "1".into()], 1), 2);
        let mut b = Budget::default();
        assert!(find_isomorphism(r.pregroupoid.diagram(), pts.diagram(), &mut b).unwrap().is_some());
    }

    #[test]
    fn invert_restrict_on_simplex() {
        let x = rep_outer(1, 2, 1);
        let y = SymObject::new(irep(1, 2, 1));
        let mut b = Budget::default();
        let c = verify_instance(&InvertRestrict, "d1", &x, &y, &mut b).unwrap();
        assert!(c.passed(), "{c:?}");
    }

    #[test]
    fn f_n_on_groups() {
        let mut b = Budget::default();
        let c = verify_fn_instance("z2", &z2(1), &z2(1), 2, &mut b).unwrap();
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.left_hom, 2);
        let pt = SimplicialGroupoid::point("*", 1);
        let x = SegalPregroupoid::new(nerve_sgpd(&z2(1), 2)).unwrap();
        assert_eq!(f_eval(&x, &pt, &mut b).unwrap().len(), 1);
    }

    #[test]
    fn rigidify_round_trip() {
        for g in [z2(1), walking_iso_groupoid(1), SimplicialGroupoid::point("*", 1)] {
            let x = SegalPregroupoid::new(nerve_sgpd(&g, 2)).unwrap();
            let r = rigidify_strict(&x).unwrap().expect("strict");
            let mut b = Budget::default();
            let n = nerve_sgpd(&r, 2);
            assert!(find_isomorphism(n.diagram(), x.diagram(), &mut b).unwrap().is_some());
        }
    }

    #[test]
    fn rigidify_rejects_non_strict() {
        let k = standard_simplex(1, 1);
        let p = crate::presheaf::product(c_functor(&k, 2).diagram(), irep(1, 2, 1).diagram()).unwrap();
        let red = crate::segal::reduce(&p.diagram).unwrap().diagram;
        let x = SegalPregroupoid::new(SymmetricSimplicialSpace::from_diagram(red).unwrap()).unwrap();
        assert!(rigidify_strict(&x).unwrap().is_none());
    }

    #[test]
    fn ct_counit_detects_constant() {
        let w = c_functor(&boundary(1, 1).0, 2);
        assert!(ct_counit_verdict(&w).unwrap().is_exact());
        assert!(ct_counit_verdict(&irep(1, 2, 1)).is_none());
    }
}
