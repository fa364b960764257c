//! Tiered decision procedure for weak equivalences between finite truncated
//! simplicial sets, and recovery of categories from nerves.

use std::collections::HashMap;

use serde::Serialize;

use crate::category::{cat_equivalence_check, FinCategory, FinFunctor, Morphism};
use crate::homology::homology;
use crate::presheaf;
use crate::sset::{nerve_category, pi0_map, SimplicialMap, TruncatedSimplicialSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tier", rename_all = "snake_case")]
pub enum Tier {
    ExactIso,
    ExactGroupoid,
    NecessaryPass { level: usize },
    Fail { witness: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    #[serde(flatten)]
    pub tier: Tier,
    pub conclusive: bool,
}

impl EquivalenceVerdict {
    pub fn exact_iso() -> Self {
        EquivalenceVerdict { tier: Tier::ExactIso, conclusive: true }
    }
    pub fn exact_groupoid() -> Self {
        EquivalenceVerdict { tier: Tier::ExactGroupoid, conclusive: true }
    }
    pub fn necessary(level: usize) -> Self {
        EquivalenceVerdict { tier: Tier::NecessaryPass { level }, conclusive: false }
    }
    pub fn fail(witness: impl Into<String>) -> Self {
        EquivalenceVerdict { tier: Tier::Fail { witness: witness.into() }, conclusive: true }
    }
    pub fn is_fail(&self) -> bool {
        matches!(self.tier, Tier::Fail { .. })
    }
    pub fn is_pass(&self) -> bool {
        !self.is_fail()
    }
    /// Conclusive pass.
    pub fn is_exact(&self) -> bool {
        matches!(self.tier, Tier::ExactIso | Tier::ExactGroupoid)
    }
    pub fn label(&self) -> &'static str {
        match self.tier {
            Tier::ExactIso => "ExactIso",
            Tier::ExactGroupoid => "ExactGroupoid",
            Tier::NecessaryPass { .. } => "NecessaryPass",
            Tier::Fail { .. } => "Fail",
        }
    }

    /// Weakest of several verdicts: any failure wins, then any inconclusive
    /// pass, then `ExactGroupoid`, then `ExactIso`.
    pub fn combine<'a>(vs: impl IntoIterator<Item = &'a EquivalenceVerdict>) -> EquivalenceVerdict {
        let mut out = EquivalenceVerdict::exact_iso();
        for v in vs {
            let rank = |t: &Tier| match t {
                Tier::ExactIso => 0,
                Tier::ExactGroupoid => 1,
                Tier::NecessaryPass { .. } => 2,
                Tier::Fail { .. } => 3,
            };
            if rank(&v.tier) > rank(&out.tier) {
                out = v.clone();
            } else if let (Tier::NecessaryPass { level: a }, Tier::NecessaryPass { level: b }) = (&mut out.tier, &v.tier)
            {
                *a = (*a).min(*b);
            }
        }
        out
    }
}

impl std::fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.tier {
            Tier::ExactIso | Tier::ExactGroupoid => write!(f, "{}", self.label()),
            Tier::NecessaryPass { level } => write!(f, "NecessaryPass(level {level}, inconclusive)"),
            Tier::Fail { witness } => write!(f, "Fail({witness})"),
        }
    }
}

/// Cell of `X` on the vertices listed in `keep` (increasing) of an `n`-cell.
pub fn sub_face(x: &TruncatedSimplicialSet, n: usize, cell: usize, keep: &[usize]) -> usize {
    let mut cur = cell;
    let mut level = n;
    for i in (0..=n).rev() {
        if !keep.contains(&i) {
            cur = x.face(level, i, cur);
            level -= 1;
        }
    }
    cur
}

/// The spine `(x_{01}, x_{12}, ...)` of an `n`-cell, or `[vertex]` for `n = 0`.
pub fn spine(x: &TruncatedSimplicialSet, n: usize, cell: usize) -> Vec<usize> {
    if n == 0 {
        return vec![cell];
    }
    (0..n).map(|j| sub_face(x, n, cell, &[j, j + 1])).collect()
}

/// Category recovered from `X` when `X` is the nerve of one: objects are
/// vertices, morphisms edges, composites the unique 2-cell fillers of
/// composable pairs. Returns the category with the isomorphism
/// `X -> N(C)` verified on every level.
pub fn recognize_nerve(x: &TruncatedSimplicialSet) -> Option<FinCategory> {
    if x.trunc() < 2 {
        return None;
    }
    let objects = x.cells(0).to_vec();
    let morphisms: Vec<Morphism> = (0..x.len(1))
        .map(|e| Morphism { name: x.cells(1)[e].clone(), dom: x.face(1, 1, e), cod: x.face(1, 0, e) })
        .collect();
    let ident: Vec<usize> = (0..x.len(0)).map(|v| x.degen(0, 0, v)).collect();
    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    for s in 0..x.len(2) {
        let (f, g) = (x.face(2, 2, s), x.face(2, 0, s));
        if comp.insert((g, f), x.face(2, 1, s)).is_some() {
            return None;
        }
    }
    let cat = FinCategory::from_fn(objects, morphisms, ident, |g, f| comp.get(&(g, f)).copied()).ok()?;
    if comp.len() != cat.composable_pairs().len() {
        return None;
    }
    let nerve = nerve_category(&cat, x.trunc());
    // compare through spines
    let lookup: Vec<HashMap<Vec<usize>, usize>> = (0..=x.trunc())
        .map(|n| (0..nerve.len(n)).map(|c| (spine(&nerve, n, c), c)).collect())
        .collect();
    let mut level = Vec::with_capacity(x.trunc() + 1);
    for n in 0..=x.trunc() {
        if x.len(n) != nerve.len(n) {
            return None;
        }
        let mut t = Vec::with_capacity(x.len(n));
        for c in 0..x.len(n) {
            t.push(*lookup[n].get(&spine(x, n, c))?);
        }
        level.push(t);
    }
    if !presheaf::is_bijective(&level, &nerve.sizes()) {
        return None;
    }
    presheaf::check_natural(x.diagram(), nerve.diagram(), &level).ok()?;
    Some(cat)
}

/// Decides whether `f` is a weak equivalence, as far as the truncation allows.
pub fn weak_equiv_oracle(f: &SimplicialMap, upto: usize) -> EquivalenceVerdict {
    if f.is_levelwise_bijection() {
        return EquivalenceVerdict::exact_iso();
    }
    let (x, y) = (&f.source, &f.target);
    if let (Some(cx), Some(cy)) = (recognize_nerve(x), recognize_nerve(y)) {
        if cx.is_groupoid() && cy.is_groupoid() {
            let func = FinFunctor { objects: f.level[0].clone(), morphisms: f.level[1].clone() };
            return match cat_equivalence_check(&cx, &cy, &func) {
                Ok(()) => EquivalenceVerdict::exact_groupoid(),
                Err(w) => EquivalenceVerdict::fail(w.to_string()),
            };
        }
    }
    if x.trunc() == 0 {
        return EquivalenceVerdict::fail(format!(
            "discrete sets of sizes {} and {} are not in bijection",
            x.len(0),
            y.len(0)
        ));
    }
    let (a, b, m) = pi0_map(f).expect("truncation at least 1");
    if a.count() != b.count() {
        return EquivalenceVerdict::fail(format!("pi0: {} != {}", a.count(), b.count()));
    }
    let mut hit = vec![false; b.count()];
    for &c in &m {
        hit[c] = true;
    }
    if hit.iter().any(|h| !h) {
        return EquivalenceVerdict::fail("pi0: induced map is not a bijection");
    }
    let level = upto.min(x.trunc() - 1);
    let hx = homology(x, level).expect("level below truncation");
    let hy = homology(y, level).expect("level below truncation");
    for (k, (p, q)) in hx.iter().zip(&hy).enumerate() {
        if p != q {
            return EquivalenceVerdict::fail(format!("H_{k}: {p} != {q}"));
        }
    }
    EquivalenceVerdict::necessary(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FinGroupoid;
    use crate::group::FinGroup;
    use crate::sset::{boundary, standard_simplex, walking_iso_nerve};

    #[test]
    fn identity_is_exact_iso() {
        let x = standard_simplex(2, 3);
        assert_eq!(weak_equiv_oracle(&SimplicialMap::identity(&x), 2), EquivalenceVerdict::exact_iso());
    }

    #[test]
    fn point_into_e_is_groupoid_equivalence() {
        let p = standard_simplex(0, 3);
        let e = walking_iso_nerve(3);
        let level: Vec<Vec<usize>> = (0..=3)
            .map(|n| {
                let name = if n == 0 { "x".to_string() } else { vec!["id_x"; n].join("|") };
                vec![e.find(n, &name).unwrap()]
            })
            .collect();
        let f = SimplicialMap::new(p, e, level).unwrap();
        assert_eq!(weak_equiv_oracle(&f, 2), EquivalenceVerdict::exact_groupoid());
    }

    #[test]
    fn two_points_to_one_fails() {
        let (b, _) = boundary(1, 3);
        let p = standard_simplex(0, 3);
        let level = (0..=3).map(|n| vec![0; b.len(n)]).collect();
        let f = SimplicialMap::new(b, p, level).unwrap();
        let v = weak_equiv_oracle(&f, 2);
        assert!(v.is_fail() && v.conclusive);
    }

    #[test]
    fn recognition() {
        let z3 = FinGroupoid::from_group(&FinGroup::cyclic(3), "*");
        let c = recognize_nerve(&nerve_category(&z3.cat, 3)).unwrap();
        assert_eq!(c.num_morphisms(), 3);
        assert!(recognize_nerve(&boundary(2, 3).0).is_none());
        let e = recognize_nerve(&walking_iso_nerve(3)).unwrap();
        assert!(e.is_groupoid());
        assert_eq!((e.num_objects(), e.num_morphisms()), (2, 4));
        assert!(recognize_nerve(&standard_simplex(2, 3)).is_some());
    }

    #[test]
    fn contractible_inclusion_is_necessary_pass() {
        // vertex 0 into Δ[2]: both are nerves of posets, not groupoids
        let d = standard_simplex(2, 3);
        let p = standard_simplex(0, 3);
        let level = (0..=3).map(|n| vec![d.find(n, &"0".repeat(n + 1)).unwrap()]).collect();
        let f = SimplicialMap::new(p, d, level).unwrap();
        assert_eq!(weak_equiv_oracle(&f, 2), EquivalenceVerdict::necessary(2));
    }
}
