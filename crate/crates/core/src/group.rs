//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    pub name: String,
    pub elements: Vec<String>,
    /// `mul[a][b] = a·b`.
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FinGroup {
    pub fn new(name: impl Into<String>, elements: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 || mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Invalid("malformed group table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Invalid("group has no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| mul[a][b] == identity) {
                return Err(Error::Invalid(format!("{} has no inverse", elements[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Invalid("group table not associative".into()));
                    }
                }
            }
        }
        Ok(FinGroup { name: name.into(), elements, mul, identity })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul[a][b] == self.identity).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n).map(|i| format!("{i}")).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FinGroup::new(format!("Z{n}"), elements, mul).unwrap()
    }

    pub fn direct_product(a: &FinGroup, b: &FinGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let elements = (0..na * nb)
            .map(|i| format!("{}.{}", a.elements[i / nb], b.elements[i % nb]))
            .collect();
        let mul = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul[x / nb][y / nb] * nb + b.mul[x % nb][y % nb])
                    .collect()
            })
            .collect();
        FinGroup::new(format!("{}x{}", a.name, b.name), elements, mul).unwrap()
    }

    /// Dihedral group of order `2n`: `r^i` and `s r^i`.
    pub fn dihedral(n: usize) -> Self {
        let elements = (0..2 * n)
            .map(|x| if x < n { format!("r{x}") } else { format!("sr{}", x - n) })
            .collect();
        // element (f, i) = s^f r^i ; r^i s = s r^{-i}
        let mul = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (f1, i1) = (x / n, x % n);
                        let (f2, i2) = (y / n, y % n);
                        let i = if f2 == 0 { (i1 + i2) % n } else { (n - i1 + i2) % n };
                        ((f1 + f2) % 2) * n + i
                    })
                    .collect()
            })
            .collect();
        FinGroup::new(format!("D{n}"), elements, mul).unwrap()
    }

    pub fn quaternion() -> Self {
        // ±1, ±i, ±j, ±k encoded as sign*unit
        let units = ["1", "i", "j", "k"];
        let elements: Vec<String> = (0..8)
            .map(|x| format!("{}{}", if x >= 4 { "-" } else { "" }, units[x % 4]))
            .collect();
        // unit products: (sign, unit)
        let table = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mul = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, u) = table[x % 4][y % 4];
                        let sign = (s + x / 4 + y / 4) % 2;
                        sign * 4 + u
                    })
                    .collect()
            })
            .collect();
        FinGroup::new("Q8", elements, mul).unwrap()
    }

    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let elements = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = [a[b[0]], a[b[1]], a[b[2]]];
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        FinGroup::new("S3", elements, mul).unwrap()
    }

    /// One representative of each isomorphism class of groups of order ≤ 8.
    pub fn all_up_to_order_8() -> Vec<FinGroup> {
        let z2 = Self::cyclic(2);
        vec![
            Self::cyclic(1),
            Self::cyclic(2),
            Self::cyclic(3),
            Self::cyclic(4),
            Self::direct_product(&z2, &z2),
            Self::cyclic(5),
            Self::cyclic(6),
            Self::symmetric3(),
            Self::cyclic(7),
            Self::cyclic(8),
            Self::direct_product(&Self::cyclic(4), &z2),
            Self::direct_product(&Self::direct_product(&z2, &z2), &z2),
            Self::dihedral(4),
            Self::quaternion(),
        ]
    }

    /// All normal subgroups, each as a sorted element list.
    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & (1 << self.identity) == 0 {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let closed = set.iter().all(|&a| set.iter().all(|&b| mask & (1 << self.mul[a][b]) != 0));
            let normal = (0..n).all(|g| {
                let gi = self.inverse(g);
                set.iter().all(|&h| mask & (1 << self.mul[self.mul[g][h]][gi]) != 0)
            });
            if closed && normal {
                out.push(set);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_abelianness() {
        let gs = FinGroup::all_up_to_order_8();
        let orders: Vec<usize> = gs.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
        assert!(!FinGroup::symmetric3().is_abelian());
        assert!(!FinGroup::dihedral(4).is_abelian());
        assert!(!FinGroup::quaternion().is_abelian());
    }

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(FinGroup::symmetric3().normal_subgroups().len(), 3);
        assert_eq!(FinGroup::quaternion().normal_subgroups().len(), 6);
        assert_eq!(FinGroup::cyclic(4).normal_subgroups().len(), 3);
    }
}
