//! Deterministic test corpora: small groups, groupoids, simplicial
//! groupoids and pseudo-random simplicial functors. Every object is built
//! valid from group data; nothing is sampled and then rejected.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::FinGroupoid;
use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::sgpd::{SimplicialFunctor, SimplicialGroupoid};

/// Seed of the first random functor; functor `i` uses `BASE_SEED + i`.
pub const BASE_SEED: u64 = 0x5e6a_1000;

/// Largest level-0 hom-set in the random corpus.
pub const MAX_HOM: usize = 6;

/// Bound on `|H|·|N|²`, the size of a level-2 hom-set of a Čech block.
pub const MAX_HOM_TOP: usize = 36;

pub fn groups() -> Vec<FinGroup> {
    FinGroup::all_up_to_order_8()
}

/// Connected groupoids on one to three objects over the groups of order
/// at most four, and a few disjoint unions.
pub fn groupoids() -> Vec<(String, FinGroupoid)> {
    let names = ["a", "b", "c"];
    let mut out = Vec::new();
    for h in groups().into_iter().filter(|h| h.order() <= 4) {
        for r in 1..=3 {
            out.push((format!("{}x{r}", h.name), FinGroupoid::connected(&h, &names[..r])));
        }
    }
    let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "a");
    let pt = FinGroupoid::from_group(&FinGroup::trivial(), "b");
    let iso = FinGroupoid::connected(&FinGroup::trivial(), &["b", "c"]);
    out.push(("Z2+pt".into(), FinGroupoid::disjoint_union(&[&z2, &pt])));
    out.push(("Z2+F".into(), FinGroupoid::disjoint_union(&[&z2, &iso])));
    let three = ["a", "b", "c"].map(|o| FinGroupoid::from_group(&FinGroup::trivial(), o));
    out.push(("disc3".into(), FinGroupoid::disjoint_union(&[&three[0], &three[1], &three[2]])));
    out
}

/// A connected block: vertex group `h`, normal subgroup `normal`, and
/// object names.
#[derive(Clone, Debug)]
pub struct Block {
    pub group: FinGroup,
    pub normal: Vec<usize>,
    pub objects: Vec<String>,
}

impl Block {
    /// `k ↦ min(k·N)`, the coset of `k`.
    fn coset(&self) -> Vec<usize> {
        let h = &self.group;
        (0..h.order()).map(|k| self.normal.iter().map(|&m| h.mul[k][m]).min().unwrap()).collect()
    }

    pub fn groupoid(&self) -> FinGroupoid {
        let objs: Vec<&str> = self.objects.iter().map(String::as_str).collect();
        FinGroupoid::connected(&self.group, &objs)
    }

    /// The Čech simplicial groupoid of the congruence "same endpoints,
    /// same coset of `N`". Mapping spaces are nerves of codiscrete
    /// groupoids on the cosets.
    pub fn cech(&self, trunc: usize) -> Result<SimplicialGroupoid> {
        let g = self.groupoid();
        let n = self.group.order();
        let coset = self.coset();
        let class: Vec<usize> = (0..g.cat.num_morphisms()).map(|m| (m / n) * n + coset[m % n]).collect();
        SimplicialGroupoid::cech(&g, &class, trunc)
    }

    pub fn label(&self) -> String {
        format!("{}/{}x{}", self.group.name, self.normal.len(), self.objects.len())
    }
}

/// Coproduct of the Čech groupoids of the blocks, in block order.
pub fn assemble(blocks: &[Block], trunc: usize) -> Result<SimplicialGroupoid> {
    let mut acc = SimplicialGroupoid::empty(trunc);
    for b in blocks {
        acc = SimplicialGroupoid::coproduct(&acc, &b.cech(trunc)?)?;
    }
    Ok(acc)
}

/// Čech simplicial groupoids on one or two objects for every pair
/// `N ◁ H` with `|H| ≤ 6` and `|H|·|N|² ≤ 36`, plus two coproducts.
pub fn simplicial_groupoids(trunc: usize) -> Result<Vec<(String, SimplicialGroupoid)>> {
    let mut out = Vec::new();
    for (h, n) in block_pool() {
        for r in 1..=2 {
            let b = Block { group: h.clone(), normal: n.clone(), objects: object_names(0, r) };
            out.push((b.label(), b.cech(trunc)?));
        }
    }
    let z2 = Block { group: FinGroup::cyclic(2), normal: vec![0, 1], objects: object_names(0, 1) };
    let pt = Block { group: FinGroup::trivial(), normal: vec![0], objects: object_names(1, 2) };
    out.push(("Z2/2x1+1/1x2".into(), assemble(&[z2.clone(), pt], trunc)?));
    let z3 = Block { group: FinGroup::cyclic(3), normal: vec![0], objects: object_names(1, 1) };
    out.push(("Z2/2x1+Z3/1x1".into(), assemble(&[z2, z3], trunc)?));
    Ok(out)
}

/// Pairs `(H, N)` admissible as corpus blocks.
pub fn block_pool() -> Vec<(FinGroup, Vec<usize>)> {
    let mut out = Vec::new();
    for h in groups().into_iter().filter(|h| h.order() <= MAX_HOM) {
        for n in h.normal_subgroups() {
            if h.order() * n.len() * n.len() <= MAX_HOM_TOP {
                out.push((h.clone(), n));
            }
        }
    }
    out
}

fn object_names(block: usize, r: usize) -> Vec<String> {
    let letter = ['u', 'v', 'w'][block];
    (0..r).map(|i| format!("{letter}{i}")).collect()
}

/// All homomorphisms `h -> h2` sending `n` into `n2`.
pub fn homomorphisms(h: &FinGroup, n: &[usize], h2: &FinGroup, n2: &[usize]) -> Vec<Vec<usize>> {
    let k = h.order();
    let mut out = Vec::new();
    let mut psi = vec![usize::MAX; k];
    fn go(
        a: usize,
        psi: &mut Vec<usize>,
        h: &FinGroup,
        h2: &FinGroup,
        in_n: &[bool],
        in_n2: &[bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if a == h.order() {
            out.push(psi.clone());
            return;
        }
        for v in 0..h2.order() {
            if in_n[a] && !in_n2[v] {
                continue;
            }
            psi[a] = v;
            let ok = (0..=a).all(|b| {
                [(a, b), (b, a)].iter().all(|&(x, y)| {
                    let p = h.mul[x][y];
                    p > a || psi[p] == h2.mul[psi[x]][psi[y]]
                })
            });
            if ok {
                go(a + 1, psi, h, h2, in_n, in_n2, out);
            }
        }
        psi[a] = usize::MAX;
    }
    let in_n: Vec<bool> = (0..k).map(|a| n.contains(&a)).collect();
    let in_n2: Vec<bool> = (0..h2.order()).map(|a| n2.contains(&a)).collect();
    go(0, &mut psi, h, h2, &in_n, &in_n2, &mut out);
    out
}

/// Level-`n` morphisms keyed by their vertices: the level-0 morphisms
/// obtained by deleting all other positions.
fn vertex_index(g: &SimplicialGroupoid, n: usize) -> HashMap<Vec<usize>, usize> {
    (0..g.level(n).cat.num_morphisms()).map(|m| (vertices(g, n, m), m)).collect()
}

fn vertices(g: &SimplicialGroupoid, n: usize, m: usize) -> Vec<usize> {
    (0..=n)
        .map(|i| {
            let (mut cur, mut level, mut pos) = (m, n, i);
            while level > 0 {
                // delete the last position other than `pos`
                let j = if pos == level { level - 1 } else { level };
                cur = g.face_table(level, j)[cur];
                if j < pos {
                    pos -= 1;
                }
                level -= 1;
            }
            cur
        })
        .collect()
}

/// Functor between coproducts of Čech blocks given by a target block,
/// object map and homomorphism per source block. Higher levels act on
/// vertices.
pub fn block_functor(
    source: &[Block],
    target: &[Block],
    images: &[(usize, Vec<usize>, Vec<usize>)],
    trunc: usize,
) -> Result<SimplicialFunctor> {
    let (s, t) = (assemble(source, trunc)?, assemble(target, trunc)?);
    let offsets = |bs: &[Block]| -> Vec<(usize, usize)> {
        let mut acc = (0, 0);
        bs.iter()
            .map(|b| {
                let cur = acc;
                let r = b.objects.len();
                acc = (acc.0 + r, acc.1 + r * r * b.group.order());
                cur
            })
            .collect()
    };
    let to = offsets(target);
    let mut objects = Vec::new();
    let mut level0 = Vec::new();
    for (b, (tb, phi, psi)) in source.iter().zip(images) {
        let tgt = &target[*tb];
        if phi.len() != b.objects.len() || phi.iter().any(|&o| o >= tgt.objects.len()) {
            return Err(Error::Invalid("object map out of range".into()));
        }
        objects.extend(phi.iter().map(|&o| to[*tb].0 + o));
        let (r, n) = (b.objects.len(), b.group.order());
        let (r2, n2) = (tgt.objects.len(), tgt.group.order());
        for m in 0..r * r * n {
            let (i, j, k) = (m / (r * n), (m / n) % r, m % n);
            level0.push(to[*tb].1 + (phi[i] * r2 + phi[j]) * n2 + psi[k]);
        }
    }
    let mut level = vec![level0];
    for n in 1..=trunc {
        let idx = vertex_index(&t, n);
        let table = (0..s.level(n).cat.num_morphisms())
            .map(|m| {
                let v: Vec<usize> = vertices(&s, n, m).iter().map(|&f| level[0][f]).collect();
                idx.get(&v).copied().ok_or_else(|| Error::Invalid("homomorphism does not respect the congruence".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        level.push(table);
    }
    SimplicialFunctor::new(s, t, objects, level)
}

/// A named member of the random functor corpus.
#[derive(Clone, Debug)]
pub struct CorpusFunctor {
    pub name: String,
    pub seed: u64,
    pub functor: SimplicialFunctor,
}

/// `count` pseudo-random simplicial functors at truncation `trunc`, each
/// side with at most three objects. Functor `i` depends only on its seed.
pub fn random_functors(count: usize, trunc: usize) -> Result<Vec<CorpusFunctor>> {
    let pool = block_pool();
    (0..count as u64).map(|i| random_functor(BASE_SEED + i, &pool, trunc)).collect()
}

pub fn random_functor(seed: u64, pool: &[(FinGroup, Vec<usize>)], trunc: usize) -> Result<CorpusFunctor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = random_blocks(&mut rng, pool, 1, 2);
    let mode = rng.gen_range(0..8);
    let (source, images) = if mode == 0 {
        (Vec::new(), Vec::new())
    } else if mode <= 2 {
        // the target itself, each block over itself, objects shuffled
        let images = target
            .iter()
            .enumerate()
            .map(|(b, blk)| {
                let r = blk.objects.len();
                let phi = (0..r).map(|_| rng.gen_range(0..r)).collect();
                (b, phi, (0..blk.group.order()).collect())
            })
            .collect();
        (target.clone(), images)
    } else {
        let source = random_blocks(&mut rng, pool, 0, 2);
        let images = source
            .iter()
            .map(|blk| {
                let tb = rng.gen_range(0..target.len());
                let tgt = &target[tb];
                let phi = (0..blk.objects.len()).map(|_| rng.gen_range(0..tgt.objects.len())).collect();
                let homs = homomorphisms(&blk.group, &blk.normal, &tgt.group, &tgt.normal);
                (tb, phi, homs.choose(&mut rng).expect("the trivial homomorphism exists").clone())
            })
            .collect();
        (source, images)
    };
    let functor = block_functor(&source, &target, &images, trunc)?;
    let side = |bs: &[Block]| {
        if bs.is_empty() {
            "0".to_string()
        } else {
            bs.iter().map(Block::label).collect::<Vec<_>>().join("+")
        }
    };
    Ok(CorpusFunctor { name: format!("{} -> {}", side(&source), side(&target)), seed, functor })
}

/// Between `min_blocks` and two blocks, three objects in total at most.
fn random_blocks(rng: &mut ChaCha8Rng, pool: &[(FinGroup, Vec<usize>)], min_blocks: usize, max_blocks: usize) -> Vec<Block> {
    let nb = rng.gen_range(min_blocks..=max_blocks);
    let mut left = 3;
    let mut out = Vec::new();
    for b in 0..nb {
        let reserve = nb - b - 1;
        let r = rng.gen_range(1..=left - reserve);
        left -= r;
        let (h, n) = pool.choose(rng).unwrap().clone();
        out.push(Block { group: h, normal: n, objects: object_names(b, r) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homomorphism_counts() {
        let z2 = FinGroup::cyclic(2);
        let z4 = FinGroup::cyclic(4);
        let s3 = FinGroup::symmetric3();
        assert_eq!(homomorphisms(&z4, &[0], &z2, &[0, 1]).len(), 2);
        assert_eq!(homomorphisms(&z2, &[0], &s3, &[0]).len(), 4);
        assert_eq!(homomorphisms(&s3, &[0], &z2, &[0]).len(), 2);
        assert_eq!(homomorphisms(&s3, &[0], &s3, &[0]).len(), 10);
        // the normal subgroup must land inside the target one
        assert_eq!(homomorphisms(&z2, &[0, 1], &z4, &[0]).len(), 1);
    }

    #[test]
    fn blocks_obey_bounds() {
        let pool = block_pool();
        assert!(pool.iter().all(|(h, n)| h.order() <= MAX_HOM && h.order() * n.len().pow(2) <= MAX_HOM_TOP));
        assert!(pool.iter().any(|(_, n)| n.len() > 1));
    }

    #[test]
    fn vertices_determine_cech_morphisms() {
        let b = Block { group: FinGroup::cyclic(2), normal: vec![0, 1], objects: object_names(0, 2) };
        let g = b.cech(2).unwrap();
        for n in 0..=2 {
            assert_eq!(vertex_index(&g, n).len(), g.level(n).cat.num_morphisms());
        }
    }

    #[test]
    fn random_corpus_is_deterministic_and_bounded() {
        let a = random_functors(12, 2).unwrap();
        let b = random_functors(12, 2).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.functor, y.functor);
            for g in [&x.functor.source, &x.functor.target] {
                assert!(g.num_objects() <= 3);
                for p in 0..g.num_objects() {
                    for q in 0..g.num_objects() {
                        assert!(g.level(0).cat.hom(p, q).len() <= MAX_HOM);
                    }
                }
            }
        }
    }

    #[test]
    fn groupoid_corpus_has_at_most_three_objects() {
        assert!(groupoids().iter().all(|(_, g)| g.cat.num_objects() <= 3));
        assert!(simplicial_groupoids(2).unwrap().len() > 10);
    }
}
