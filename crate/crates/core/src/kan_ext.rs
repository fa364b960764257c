//! `invert ⊣ restrict` between simplicial spaces and symmetric simplicial
//! spaces. `invert` is the pointwise left Kan extension along `Δ -> IΔ`.

use std::collections::HashMap;

use crate::bisimp::{BiSimplicialSet, Space, SymmetricSimplicialSpace};
use crate::combinat::{all_maps, codegeneracy, compose, is_surjective, seq_label};
use crate::error::Result;
use crate::presheaf::{Budget, OpKey, SortMap};

/// `restrict(Y)`: forget the transpositions.
pub fn restrict(y: &SymmetricSimplicialSpace) -> BiSimplicialSet {
    y.restrict()
}

/// `invert(X)` with the unit `X -> restrict(invert(X))`.
///
/// A cell at outer level `n` is a class of pairs `(ε, x)` with
/// `ε: [n] -> [k]` a surjective function and `x ∈ X_k`, under
/// `(ε, s_j x) ~ (σ^j ∘ ε, x)`. A function `β` acts by `ε ↦ ε ∘ β`,
/// re-normalized through its monotone image.
#[derive(Clone, Debug)]
pub struct Inverted {
    pub space: SymmetricSimplicialSpace,
    pub unit: SortMap,
    source: BiSimplicialSet,
    class_of: Vec<HashMap<(Vec<usize>, usize), usize>>,
}

/// Splits `α: [n] -> [k]` as `μ ∘ ε` with `ε` surjective and `μ` monotone
/// injective; returns `(ε, μ)`.
pub fn epi_mono(alpha: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut image: Vec<usize> = alpha.to_vec();
    image.sort_unstable();
    image.dedup();
    let eps = alpha.iter().map(|a| image.binary_search(a).unwrap()).collect();
    (eps, image)
}

impl Inverted {
    /// Class of `(α, x)` for any function `α: [n] -> [k]`, `x ∈ X_{k,m}`.
    pub fn class(&self, m: usize, alpha: &[usize], k: usize, x: usize) -> usize {
        let n = alpha.len() - 1;
        let (eps, mu) = epi_mono(alpha);
        let x2 = self.source.act_monotone(&mu, k, m, x);
        let s = self.space.sort(n, m);
        self.class_of[s][&(eps, x2)]
    }

    /// `invert(f)` for `f: X -> X'`, where `self` inverts `X`.
    pub fn induced(&self, other: &Inverted, f: &SortMap) -> SortMap {
        let (outer, inner) = self.space.truncs();
        let mut out = vec![Vec::new(); (outer + 1) * (inner + 1)];
        for n in 0..=outer {
            for m in 0..=inner {
                let s = self.space.sort(n, m);
                let mut t = vec![usize::MAX; self.space.len(n, m)];
                for ((eps, x), &c) in &self.class_of[s] {
                    let k = eps.iter().max().copied().unwrap_or(0);
                    t[c] = other.class(m, eps, k, f[self.space.sort(k, m)][*x]);
                }
                out[s] = t;
            }
        }
        out
    }
}

pub fn invert(x: &BiSimplicialSet, budget: &mut Budget) -> Result<Inverted> {
    let (outer, inner) = x.truncs();
    let nsorts = (outer + 1) * (inner + 1);
    let sort = |n: usize, m: usize| n * (inner + 1) + m;
    let mut class_of: Vec<HashMap<(Vec<usize>, usize), usize>> = vec![HashMap::new(); nsorts];
    let mut gens_of: Vec<Vec<(Vec<usize>, usize)>> = vec![Vec::new(); nsorts];
    for n in 0..=outer {
        let surj: Vec<Vec<Vec<usize>>> =
            (0..=n).map(|k| all_maps(n, k).into_iter().filter(|e| is_surjective(e, k)).collect()).collect();
        for m in 0..=inner {
            let mut gens: Vec<(Vec<usize>, usize)> = Vec::new();
            let mut index: HashMap<(Vec<usize>, usize), usize> = HashMap::new();
            for (k, eps_k) in surj.iter().enumerate() {
                for e in eps_k {
                    for c in 0..x.len(k, m) {
                        budget.tick()?;
                        index.insert((e.clone(), c), gens.len());
                        gens.push((e.clone(), c));
                    }
                }
            }
            let mut parent: Vec<usize> = (0..gens.len()).collect();
            fn root(p: &mut [usize], mut a: usize) -> usize {
                while p[a] != a {
                    p[a] = p[p[a]];
                    a = p[a];
                }
                a
            }
            for k in 0..n {
                for e in &surj[k + 1] {
                    for j in 0..=k {
                        let sigma = codegeneracy(k, j);
                        let e2 = compose(&sigma, e);
                        for c in 0..x.len(k, m) {
                            let a = index[&(e.clone(), x.outer_degen(k, m, j, c))];
                            let b = index[&(e2.clone(), c)];
                            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                            parent[ra.max(rb)] = ra.min(rb);
                        }
                    }
                }
            }
            let mut cls: HashMap<usize, usize> = HashMap::new();
            let mut reps = Vec::new();
            for g in 0..gens.len() {
                let r = root(&mut parent, g);
                let next = cls.len();
                let c = *cls.entry(r).or_insert_with(|| {
                    reps.push(g);
                    next
                });
                class_of[sort(n, m)].insert(gens[g].clone(), c);
            }
            gens_of[sort(n, m)] = reps.into_iter().map(|g| gens[g].clone()).collect();
        }
    }
    // identity classes keep their names; a clash (possible when X itself
    // came from `invert`) is broken with primes
    let names = |n: usize, m: usize| -> Vec<String> {
        let id: Vec<usize> = (0..=n).collect();
        let mut used = std::collections::HashSet::new();
        let mut out = vec![String::new(); gens_of[sort(n, m)].len()];
        let order = gens_of[sort(n, m)].iter().enumerate().filter(|(_, (e, _))| *e == id).chain(
            gens_of[sort(n, m)].iter().enumerate().filter(|(_, (e, _))| *e != id),
        );
        for (i, (e, c)) in order {
            let k = e.iter().max().copied().unwrap_or(0);
            let mut name = if *e == id {
                x.cells(k, m)[*c].clone()
            } else {
                format!("{}*{}", seq_label(e), x.cells(k, m)[*c])
            };
            while !used.insert(name.clone()) {
                name.push('\'');
            }
            out[i] = name;
        }
        out
    };
    let lookup = |m: usize, alpha: &[usize], k: usize, c: usize| -> usize {
        let n = alpha.len() - 1;
        let (eps, mu) = epi_mono(alpha);
        let c2 = x.act_monotone(&mu, k, m, c);
        class_of[sort(n, m)][&(eps, c2)]
    };
    let space = SymmetricSimplicialSpace::build(
        outer,
        inner,
        names,
        |beta, n, m, cell| {
            let (e, c) = &gens_of[sort(n, m)][cell];
            let k = e.iter().max().copied().unwrap_or(0);
            lookup(m, &compose(e, beta), k, *c)
        },
        |key, cell| match key {
            OpKey::InnerFace { n, m, i } => {
                let (e, c) = &gens_of[sort(n, m)][cell];
                let k = e.iter().max().copied().unwrap_or(0);
                lookup(m - 1, e, k, x.inner_face(k, m, i, *c))
            }
            OpKey::InnerDegen { n, m, i } => {
                let (e, c) = &gens_of[sort(n, m)][cell];
                let k = e.iter().max().copied().unwrap_or(0);
                lookup(m + 1, e, k, x.inner_degen(k, m, i, *c))
            }
            _ => unreachable!(),
        },
    )?;
    let unit = (0..=outer)
        .flat_map(|n| (0..=inner).map(move |m| (n, m)))
        .map(|(n, m)| {
            let id: Vec<usize> = (0..=n).collect();
            (0..x.len(n, m)).map(|c| class_of[sort(n, m)][&(id.clone(), c)]).collect()
        })
        .collect();
    Ok(Inverted { space, unit, source: x.clone(), class_of })
}

/// Counit `invert(restrict(Y)) -> Y`: `[(ε, y)] ↦ ε^* y`.
pub fn counit(y: &SymmetricSimplicialSpace, inv: &Inverted) -> SortMap {
    let (outer, inner) = y.truncs();
    let mut out = vec![Vec::new(); (outer + 1) * (inner + 1)];
    for n in 0..=outer {
        for m in 0..=inner {
            let s = y.sort(n, m);
            let mut t = vec![usize::MAX; inv.space.len(n, m)];
            for ((eps, c), &cls) in &inv.class_of[s] {
                let k = eps.iter().max().copied().unwrap_or(0);
                t[cls] = y.act(eps, k, m, *c);
            }
            out[s] = t;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimp::{irep, rep_outer};
    use crate::presheaf::{check_natural, is_bijective};

    #[test]
    fn invert_of_point_is_point() {
        let mut b = Budget::default();
        let inv = invert(&rep_outer(0, 2, 1), &mut b).unwrap();
        assert!(inv.space.diagram().sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn invert_of_simplex_is_irep() {
        let mut b = Budget::default();
        for n in 0..=2 {
            let inv = invert(&rep_outer(n, 3, 1), &mut b).unwrap();
            assert_eq!(inv.space.diagram().sizes(), irep(n, 3, 1).diagram().sizes());
        }
    }

    #[test]
    fn counit_is_natural_and_unit_splits() {
        let mut b = Budget::default();
        let y = irep(1, 2, 1);
        let ry = restrict(&y);
        let inv = invert(&ry, &mut b).unwrap();
        let e = counit(&y, &inv);
        check_natural(inv.space.diagram(), y.diagram(), &e).unwrap();
        check_natural(ry.diagram(), inv.space.restrict().diagram(), &inv.unit).unwrap();
        let composite = crate::presheaf::compose(&inv.unit, &e);
        assert!(is_bijective(&composite, &ry.diagram().sizes()));
    }
}
