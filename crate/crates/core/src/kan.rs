//! Horn filling and horn lifting, by enumerating compatible face tuples.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::sset::{SimplicialMap, TruncatedSimplicialSet};

/// An unfillable horn: faces `d_i` for `i ≠ k` (in order), and for the
/// relative check the `n`-cell of the base it must lie over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornWitness {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<String>,
    pub over: Option<String>,
}

impl std::fmt::Display for HornWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "V[{},{}] with faces [{}]", self.n, self.k, self.faces.join(", "))?;
        if let Some(o) = &self.over {
            write!(f, " over {o}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KanReport {
    pub passed: bool,
    /// Horns of dimension up to this level were checked.
    pub level: usize,
    pub horns_checked: usize,
    pub witness: Option<HornWitness>,
}

/// Calls `visit(n, k, tuple)` for every horn `V[n,k] -> X` (tuple of faces
/// indexed by `i ≠ k`) with `n ≤ upto`, in order of `(n, k)` then
/// lexicographically; stops when `visit` returns false.
pub fn for_each_horn(
    x: &TruncatedSimplicialSet,
    upto: usize,
    mut visit: impl FnMut(usize, usize, &[usize]) -> bool,
) -> Result<bool> {
    if upto > x.trunc() {
        return Err(Error::OutOfRange(format!("horn dimension {upto} above truncation {}", x.trunc())));
    }
    for n in 1..=upto {
        // fiber[i][v] = (n-1)-cells whose i-th face is v
        let fiber: Vec<HashMap<usize, Vec<usize>>> = if n >= 2 {
            (0..n)
                .map(|i| {
                    let mut m: HashMap<usize, Vec<usize>> = HashMap::new();
                    for c in 0..x.len(n - 1) {
                        m.entry(x.face(n - 1, i, c)).or_default().push(c);
                    }
                    m
                })
                .collect()
        } else {
            Vec::new()
        };
        for k in 0..=n {
            let idx: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
            let mut cur: Vec<usize> = Vec::with_capacity(n);
            if !horn_rec(x, n, &idx, &fiber, &mut cur, &mut |t| visit(n, k, t)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn horn_rec(
    x: &TruncatedSimplicialSet,
    n: usize,
    idx: &[usize],
    fiber: &[HashMap<usize, Vec<usize>>],
    cur: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let p = cur.len();
    if p == idx.len() {
        return visit(cur);
    }
    let j = idx[p];
    let empty = Vec::new();
    // compatibility with earlier faces i < j: d_i x_j = d_{j-1} x_i
    let cands: &[usize] = if p == 0 {
        &[]
    } else {
        let i = idx[0];
        fiber[i].get(&x.face(n - 1, j - 1, cur[0])).unwrap_or(&empty)
    };
    let all: Vec<usize>;
    let cands = if p == 0 {
        all = (0..x.len(n - 1)).collect();
        &all[..]
    } else {
        cands
    };
    'c: for &c in cands {
        for q in 1..p {
            let i = idx[q];
            if x.face(n - 1, i, c) != x.face(n - 1, j - 1, cur[q]) {
                continue 'c;
            }
        }
        cur.push(c);
        let go = horn_rec(x, n, idx, fiber, cur, visit);
        cur.pop();
        if !go {
            return false;
        }
    }
    true
}

fn horn_tuple(x: &TruncatedSimplicialSet, n: usize, k: usize, c: usize) -> Vec<usize> {
    (0..=n).filter(|&i| i != k).map(|i| x.face(n, i, c)).collect()
}

/// Every horn of dimension `≤ upto` has a filler. Horns of dimension `n`
/// only involve levels `n-1` and `n`, so `upto` may equal the truncation.
pub fn kan_check(x: &TruncatedSimplicialSet, upto: usize) -> Result<KanReport> {
    let mut fillable: Vec<Vec<HashSet<Vec<usize>>>> = vec![Vec::new()];
    for n in 1..=upto.min(x.trunc()) {
        fillable.push((0..=n).map(|k| (0..x.len(n)).map(|c| horn_tuple(x, n, k, c)).collect()).collect());
    }
    let mut count = 0;
    let mut witness = None;
    for_each_horn(x, upto, |n, k, t| {
        count += 1;
        if fillable[n][k].contains(t) {
            true
        } else {
            witness = Some(HornWitness {
                n,
                k,
                faces: t.iter().map(|&c| x.cells(n - 1)[c].clone()).collect(),
                over: None,
            });
            false
        }
    })?;
    Ok(KanReport { passed: witness.is_none(), level: upto, horns_checked: count, witness })
}

/// Every horn in the source with a filler of its image in the target lifts
/// to a filler over that cell.
pub fn kan_fibration_check(f: &SimplicialMap, upto: usize) -> Result<KanReport> {
    let (x, y) = (&f.source, &f.target);
    let mut lifts: Vec<Vec<HashSet<(Vec<usize>, usize)>>> = vec![Vec::new()];
    let mut base: Vec<Vec<HashMap<Vec<usize>, Vec<usize>>>> = vec![Vec::new()];
    for n in 1..=upto.min(x.trunc()) {
        lifts.push(
            (0..=n)
                .map(|k| (0..x.len(n)).map(|c| (horn_tuple(x, n, k, c), f.level[n][c])).collect())
                .collect(),
        );
        base.push(
            (0..=n)
                .map(|k| {
                    let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                    for c in 0..y.len(n) {
                        m.entry(horn_tuple(y, n, k, c)).or_default().push(c);
                    }
                    m
                })
                .collect(),
        );
    }
    let mut count = 0;
    let mut witness = None;
    for_each_horn(x, upto, |n, k, t| {
        let img: Vec<usize> = t.iter().map(|&c| f.level[n - 1][c]).collect();
        if let Some(ys) = base[n][k].get(&img) {
            for &yc in ys {
                count += 1;
                if !lifts[n][k].contains(&(t.to_vec(), yc)) {
                    witness = Some(HornWitness {
                        n,
                        k,
                        faces: t.iter().map(|&c| x.cells(n - 1)[c].clone()).collect(),
                        over: Some(y.cells(n)[yc].clone()),
                    });
                    return false;
                }
            }
        }
        true
    })?;
    Ok(KanReport { passed: witness.is_none(), level: upto, horns_checked: count, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{FinCategory, FinGroupoid};
    use crate::group::FinGroup;
    use crate::sset::{horn, nerve_category, standard_simplex};

    #[test]
    fn groupoid_nerves_are_kan() {
        let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "*");
        let r = kan_check(&nerve_category(&z2.cat, 3), 2).unwrap();
        assert!(r.passed);
        assert!(r.horns_checked > 0);
    }

    #[test]
    fn poset_nerve_fails_outer_horn() {
        let r = kan_check(&nerve_category(&FinCategory::walking_arrow(), 3), 2).unwrap();
        let w = r.witness.unwrap();
        assert_eq!((w.n, w.k), (2, 0));
    }

    #[test]
    fn identity_is_a_fibration() {
        let x = nerve_category(&FinCategory::walking_arrow(), 3);
        assert!(kan_fibration_check(&SimplicialMap::identity(&x), 3).unwrap().passed);
    }

    #[test]
    fn horn_inclusion_is_not_a_fibration_of_simplex() {
        // Δ[2] itself is not Kan (it is a nerve of a poset)
        assert!(!kan_check(&standard_simplex(2, 2), 2).unwrap().passed);
        let (h, incl) = horn(2, 1, 2).unwrap();
        assert!(h.len(1) > 0);
        assert!(!kan_fibration_check(&incl, 2).unwrap().passed);
    }
}
