#![allow(dead_code)]

use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::Rng;

use invsegal::adjunctions::c_functor;
use invsegal::bisimp::{nerve_sgpd, outer_discrete, rep_inner_times_outer, BiSimplicialSet, Space, SpaceMap};
use invsegal::category::{FinCategory, FinGroupoid};
use invsegal::corpus::random_functors;
use invsegal::format::{print, Carrier, Document, MapEntry, MapValue};
use invsegal::group::FinGroup;
use invsegal::sgpd::{walking_iso_groupoid, SimplicialFunctor, SimplicialGroupoid};
use invsegal::sset::{boundary, nerve_category, standard_simplex, SimplicialMap, TruncatedSimplicialSet};

pub fn functor_doc(f: &SimplicialFunctor) -> Document {
    let mut d = Document::default();
    d.push("G", Carrier::Sgpd(f.source.clone()));
    d.push("H", Carrier::Sgpd(f.target.clone()));
    d.maps.push(MapEntry { name: "f".into(), source: "G".into(), target: "H".into(), value: MapValue::Sfunctor(f.clone()) });
    d
}

pub fn smap_doc(f: &SimplicialMap) -> Document {
    let mut d = Document::default();
    d.push("X", Carrier::Sset(f.source.clone()));
    d.push("Y", Carrier::Sset(f.target.clone()));
    d.maps.push(MapEntry { name: "f".into(), source: "X".into(), target: "Y".into(), value: MapValue::Smap(f.level.clone()) });
    d
}

pub fn space_map_doc(source: Carrier, target: Carrier, f: &SpaceMap) -> Document {
    let mut d = Document::default();
    d.push("X", source);
    d.push("Y", target);
    d.maps.push(MapEntry { name: "f".into(), source: "X".into(), target: "Y".into(), value: MapValue::Smap(f.level.clone()) });
    d
}

pub fn z2() -> FinGroupoid {
    FinGroupoid::from_group(&FinGroup::cyclic(2), "x")
}

/// The documents the command-line goldens run on.
pub fn standard_corpus() -> Vec<(&'static str, Document)> {
    let nz2 = nerve_sgpd(&SimplicialGroupoid::constant(&z2(), 1), 3);
    let point = SimplicialGroupoid::point("x", 2);
    let iso = walking_iso_groupoid(2);
    let x_into_f = SimplicialFunctor::into_thin(&point, &iso, vec![0]).expect("object inclusion");
    let (bd, bd_incl) = boundary(2, 2);
    let _ = bd;
    let mut instances = Document::default();
    for (i, n) in [0usize, 1].into_iter().enumerate() {
        instances.push(&format!("K{i}"), Carrier::Sset(standard_simplex(n, 2)));
        instances.push(&format!("W{i}"), Carrier::Symsset(c_functor(&standard_simplex(1, 2), 2)));
    }
    let mut inv_instances = Document::default();
    inv_instances.push("D1", Carrier::Bisset(invsegal::bisimp::rep_outer(1, 2, 1)));
    inv_instances.push("ID1", Carrier::Symsset(invsegal::bisimp::irep(1, 2, 1)));
    inv_instances.push("N[1]", Carrier::Bisset(outer_discrete(&nerve_category(&FinCategory::walking_arrow(), 2), 1)));
    inv_instances.push("N(BZ2)", Carrier::Symsset(nerve_sgpd(&SimplicialGroupoid::constant(&z2(), 1), 2)));
    let mut ir_instances = Document::default();
    ir_instances.push("N(F)", Carrier::Symsset(nerve_sgpd(&walking_iso_groupoid(1), 2)));
    ir_instances.push("cosk0(D1)", Carrier::Symsset(invsegal::bisimp::cosk0_space(&standard_simplex(1, 1), 2)));
    let mut fn_instances = Document::default();
    fn_instances.push("BZ2", Carrier::Sgpd(SimplicialGroupoid::constant(&z2(), 1)));
    fn_instances.push("F", Carrier::Sgpd(walking_iso_groupoid(1)));
    let corpus = random_functors(3, 2).expect("corpus");
    vec![
        ("simplex1", Document::single("D1", Carrier::Sset(standard_simplex(1, 3)))),
        ("z2", Document::single("BZ2", Carrier::Fingpd(z2()))),
        ("poset1", Document::single("P1", Carrier::Fincat(FinCategory::walking_arrow()))),
        ("nerve_z2", Document::single("N(BZ2)", Carrier::Symsset(nz2.clone()))),
        ("nerve_poset1", Document::single("N[1]", Carrier::Bisset(outer_discrete(&nerve_category(&FinCategory::walking_arrow(), 3), 1)))),
        ("constant", Document::single("C(D1)", Carrier::Symsset(c_functor(&standard_simplex(1, 3), 2)))),
        ("square", Document::single("D1xD1t", Carrier::Bisset(rep_inner_times_outer(1, 1, 2, 1)))),
        ("empty", Document::single("E", Carrier::Bisset(BiSimplicialSet::empty(2, 1)))),
        ("point", Document::single("pt", Carrier::Sset(standard_simplex(0, 2)))),
        ("x_into_f", functor_doc(&x_into_f)),
        ("corpus0", functor_doc(&corpus[0].functor)),
        ("corpus1", functor_doc(&corpus[1].functor)),
        ("boundary2", smap_doc(&bd_incl)),
        (
            "nerve_z2_identity",
            space_map_doc(Carrier::Symsset(nz2.clone()), Carrier::Symsset(nz2.clone()), &SpaceMap::identity(nz2.diagram())),
        ),
        ("ct_instances", instances),
        ("inv_instances", inv_instances),
        ("ir_instances", ir_instances),
        ("fn_instances", fn_instances),
    ]
}

pub fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("invsegal-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch directory");
    dir
}

pub fn write_corpus(dir: &Path) {
    for (name, doc) in standard_corpus() {
        std::fs::write(dir.join(format!("{name}.json")), print(&doc)).expect("write document");
    }
}

/// Relabels every level of `x` by a random permutation and returns the
/// comparison map `x -> relabelled`, a levelwise bijection.
pub fn relabelled(x: &TruncatedSimplicialSet, rng: &mut impl Rng) -> SimplicialMap {
    let t = x.trunc();
    let perms: Vec<Vec<usize>> = (0..=t)
        .map(|n| {
            let mut p: Vec<usize> = (0..x.len(n)).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let mut cells = vec![Vec::new(); t + 1];
    for n in 0..=t {
        let mut c = vec![String::new(); x.len(n)];
        for (old, &new) in perms[n].iter().enumerate() {
            c[new] = format!("r{}", x.cells(n)[old]);
        }
        cells[n] = c;
    }
    let face = (1..=t)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let mut tab = vec![0; x.len(n)];
                    for old in 0..x.len(n) {
                        tab[perms[n][old]] = perms[n - 1][x.face(n, i, old)];
                    }
                    tab
                })
                .collect()
        })
        .collect();
    let degen = (0..t)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let mut tab = vec![0; x.len(n)];
                    for old in 0..x.len(n) {
                        tab[perms[n][old]] = perms[n + 1][x.degen(n, i, old)];
                    }
                    tab
                })
                .collect()
        })
        .collect();
    let y = TruncatedSimplicialSet::new(t, cells, face, degen).unwrap();
    SimplicialMap::new(x.clone(), y, perms).unwrap()
}
