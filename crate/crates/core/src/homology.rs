//! Integral homology of normalized chain complexes.

use crate::error::{Error, Result};
use crate::sset::TruncatedSimplicialSet;

/// `H_k ≅ ℤ^rank ⊕ ⊕ ℤ/t` for the listed torsion coefficients `t > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {:?})", self.rank, self.torsion)
    }
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn smith_invariants(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = matrix.first().map(Vec::len).unwrap_or(0);
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // divisibility of the remaining block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs() as i64);
        t += 1;
    }
    diag
}

/// Boundary matrix `∂_k: N_k -> N_{k-1}` on nondegenerate cells
/// (rows: `(k-1)`-cells, columns: `k`-cells).
pub fn boundary_matrix(x: &TruncatedSimplicialSet, k: usize) -> Vec<Vec<i64>> {
    let src = x.nondegenerate(k);
    let tgt = x.nondegenerate(k - 1);
    let pos: std::collections::HashMap<usize, usize> = tgt.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut m = vec![vec![0i64; src.len()]; tgt.len()];
    for (col, &c) in src.iter().enumerate() {
        for i in 0..=k {
            if let Some(&row) = pos.get(&x.face(k, i, c)) {
                m[row][col] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    m
}

/// `H_0, ..., H_upto` with integer coefficients.
pub fn homology(x: &TruncatedSimplicialSet, upto: usize) -> Result<Vec<HomologyGroup>> {
    if upto >= x.trunc() {
        return Err(Error::OutOfRange(format!(
            "homology up to degree {upto} needs truncation above {upto}, have {}",
            x.trunc()
        )));
    }
    let dims: Vec<usize> = (0..=upto + 1).map(|k| x.nondegenerate(k).len()).collect();
    // invariants of ∂_k for k = 1..=upto+1
    let inv: Vec<Vec<i64>> = (1..=upto + 1).map(|k| smith_invariants(&boundary_matrix(x, k))).collect();
    let rank_of = |k: usize| if k == 0 { 0 } else { inv[k - 1].len() };
    Ok((0..=upto)
        .map(|k| HomologyGroup {
            rank: dims[k] - rank_of(k) - rank_of(k + 1),
            torsion: inv[k].iter().copied().filter(|&d| d > 1).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FinGroupoid;
    use crate::group::FinGroup;
    use crate::sset::{nerve_category, standard_simplex};

    fn g(rank: usize, torsion: &[i64]) -> HomologyGroup {
        HomologyGroup { rank, torsion: torsion.to_vec() }
    }

    #[test]
    fn snf_small() {
        assert_eq!(smith_invariants(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_invariants(&[vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn contractible_and_rp_infinity() {
        assert_eq!(homology(&standard_simplex(2, 2), 1).unwrap(), vec![g(1, &[]), g(0, &[])]);
        let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "*");
        let n = nerve_category(&z2.cat, 3);
        assert_eq!(homology(&n, 2).unwrap(), vec![g(1, &[]), g(0, &[2]), g(0, &[])]);
        assert!(homology(&n, 3).is_err());
    }
}
