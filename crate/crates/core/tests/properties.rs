mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use invsegal::bisimp::{cosk0_space, irep, nerve_sgpd, Space, SymmetricSimplicialSpace};
use invsegal::category::{find_category_isomorphism, FinCategory};
use invsegal::combinat::{all_maps, Factorization};
use invsegal::corpus::groupoids;
use invsegal::format::{parse, print, Carrier, Document};
use invsegal::homology::homology;
use invsegal::kan::kan_check;
use invsegal::oracle::{weak_equiv_oracle, Tier};
use invsegal::presheaf::{self, is_bijective, Budget, HomSearch};
use invsegal::segal::{bousfield_map, ho_category, reduce};
use invsegal::sgpd::{pi0_category, SimplicialGroupoid};
use invsegal::bisimp::BousfieldIndex;
use invsegal::sset::{boundary, horn, nerve_category, product, standard_simplex, TruncatedSimplicialSet};

fn sset_pool() -> Vec<TruncatedSimplicialSet> {
    let mut pool: Vec<TruncatedSimplicialSet> = (0..=2).map(|n| standard_simplex(n, 2)).collect();
    pool.push(boundary(1, 2).0);
    pool.push(boundary(2, 2).0);
    pool.push(horn(2, 1, 2).unwrap().0);
    pool.push(TruncatedSimplicialSet::discrete(&["a".into(), "b".into()], 2));
    pool.push(nerve_category(&FinCategory::walking_arrow(), 2));
    pool.push(nerve_category(&groupoids()[1].1.cat, 2));
    pool
}

fn sym_pool() -> Vec<SymmetricSimplicialSpace> {
    let mut pool = vec![irep(1, 3, 1), irep(2, 3, 1), cosk0_space(&standard_simplex(1, 1), 3)];
    for (_, g) in groupoids().into_iter().filter(|(_, g)| g.cat.num_morphisms() <= 4) {
        pool.push(nerve_sgpd(&SimplicialGroupoid::constant(&g, 1), 3));
    }
    pool
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn documents_round_trip(i in 0usize..9, seed in any::<u64>()) {
        let x = &sset_pool()[i];
        let y = common::relabelled(x, &mut ChaCha8Rng::seed_from_u64(seed)).target;
        let doc = Document::single("Y", Carrier::Sset(y));
        let text = print(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(print(&back), text);
    }

    #[test]
    fn products_satisfy_the_identities(a in 0usize..9, b in 0usize..9) {
        let pool = sset_pool();
        let (p, pa, pb) = product(&pool[a], &pool[b]).unwrap();
        prop_assert!(p.audit_identities().is_ok());
        prop_assert_eq!(p.len(1), pool[a].len(1) * pool[b].len(1));
        presheaf::check_natural(p.diagram(), pool[a].diagram(), &pa.level).unwrap();
        presheaf::check_natural(p.diagram(), pool[b].diagram(), &pb.level).unwrap();
    }

    #[test]
    fn bijections_are_never_rejected(i in 0usize..9, seed in any::<u64>()) {
        let f = common::relabelled(&sset_pool()[i], &mut ChaCha8Rng::seed_from_u64(seed));
        let v = weak_equiv_oracle(&f, 2);
        prop_assert_eq!(v.tier, Tier::ExactIso);
    }

    #[test]
    fn verdict_tiers_match_conclusiveness(a in 0usize..9, b in 0usize..9, pick in any::<prop::sample::Index>()) {
        let pool = sset_pool();
        let maps = HomSearch::new(pool[a].diagram(), pool[b].diagram()).unwrap().all(&mut Budget::new(1_000_000)).unwrap();
        prop_assume!(!maps.is_empty());
        let level = maps[pick.index(maps.len())].clone();
        let f = invsegal::sset::SimplicialMap::new(pool[a].clone(), pool[b].clone(), level).unwrap();
        let v = weak_equiv_oracle(&f, 2);
        prop_assert_eq!(v.conclusive, !matches!(v.tier, Tier::NecessaryPass { .. }));
        if v.tier == Tier::ExactIso || v.tier == Tier::ExactGroupoid {
            prop_assert_eq!(homology(&pool[a], 1).unwrap(), homology(&pool[b], 1).unwrap());
        }
    }

    #[test]
    fn symmetric_action_is_factorization_free(i in 0usize..8, k in 0usize..=3, n in 0usize..=3, pick in any::<prop::sample::Index>()) {
        let pool = sym_pool();
        let w = &pool[i % pool.len()];
        let maps = all_maps(k, n);
        let alpha = &maps[pick.index(maps.len())];
        for m in 0..=w.inner() {
            for x in 0..w.len(n, m) {
                prop_assert_eq!(
                    w.act_with(alpha, n, m, x, Factorization::Left),
                    w.act_with(alpha, n, m, x, Factorization::Right)
                );
            }
        }
    }

    #[test]
    fn pushouts_have_unique_mediating_maps(n in 1usize..=2, z in 0usize..9) {
        // ∂Δ[n] -> Δ[n] glued to a point, mapped into a pool object
        let (bd, incl) = boundary(n, 2);
        let pt = standard_simplex(0, 2);
        let collapse: presheaf::SortMap = (0..=2).map(|k| vec![0; bd.len(k)]).collect();
        let po = presheaf::pushout(bd.diagram(), standard_simplex(n, 2).diagram(), &incl.level, pt.diagram(), &collapse).unwrap();
        let target = &sset_pool()[z];
        let mut b = Budget::new(5_000_000);
        let xs = HomSearch::new(standard_simplex(n, 2).diagram(), target.diagram()).unwrap().all(&mut b).unwrap();
        let ys = HomSearch::new(pt.diagram(), target.diagram()).unwrap().all(&mut b).unwrap();
        let mediators = HomSearch::new(&po.diagram, target.diagram()).unwrap().all(&mut b).unwrap();
        for hx in &xs {
            for hy in &ys {
                if presheaf::compose(&incl.level, hx) != presheaf::compose(&collapse, hy) {
                    continue;
                }
                let count = mediators
                    .iter()
                    .filter(|m| presheaf::compose(&po.left, m) == *hx && presheaf::compose(&po.right, m) == *hy)
                    .count();
                prop_assert_eq!(count, 1);
            }
        }
    }
}

#[test]
fn groupoid_nerves_are_kan() {
    for (name, g) in groupoids() {
        let r = kan_check(&nerve_category(&g.cat, 3), 3).unwrap();
        assert!(r.passed, "{name}: {:?}", r.witness);
    }
}

#[test]
fn groupoid_inverse_laws() {
    for (name, g) in groupoids() {
        for f in 0..g.cat.num_morphisms() {
            let inv = g.inverse(f);
            assert_eq!(g.cat.compose(inv, f), g.cat.identity(g.cat.dom(f)), "{name}");
            assert_eq!(g.cat.compose(f, inv), g.cat.identity(g.cat.cod(f)), "{name}");
        }
    }
}

#[test]
fn chi2_rejects_non_groupoids() {
    let cats = [
        FinCategory::walking_arrow(),
        FinCategory::poset(&["a", "b", "c"], &[(0, 1), (1, 2), (0, 2)]),
        FinCategory::poset(&["a", "b", "c"], &[(0, 1), (0, 2)]),
    ];
    for c in &cats {
        let x = invsegal::bisimp::outer_discrete(&nerve_category(c, 3), 1);
        let v = bousfield_map(&x, 2, BousfieldIndex::Corrected).unwrap().verdict;
        assert!(v.is_fail() && v.conclusive, "{:?}", c.objects());
    }
}

#[test]
fn reduce_fixes_discrete_row0() {
    for w in sym_pool().into_iter().filter(|w| w.is_discrete_row0()) {
        let r = reduce(w.diagram()).unwrap();
        assert!(is_bijective(&r.unit, &r.diagram.sizes()));
    }
}

#[test]
fn ho_category_of_a_nerve_is_its_component_category() {
    let mut b = Budget::new(10_000_000);
    for (name, g) in groupoids().into_iter().filter(|(_, g)| g.cat.num_morphisms() <= 18) {
        let sg = SimplicialGroupoid::constant(&g, 1);
        let ho = ho_category(&nerve_sgpd(&sg, 2)).unwrap();
        let pc = pi0_category(&sg).unwrap();
        assert!(find_category_isomorphism(&ho.category, &pc.groupoid.cat, &mut b).unwrap().is_some(), "{name}");
    }
}
