//! One line per acceptance criterion. Criteria known to be out of reach
//! are still run and reported; they are listed in `EXPECTED_FAILURES`.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use invsegal::adjunctions::{
    c_functor, ct_counit_verdict, inclusion_i, r_functor, r_unit, t_functor, verify_adjunction, ConstantRow0,
    InclusionR, InvertRestrict, Pregroupoid, SegalPregroupoid, SymObject,
};
use invsegal::bisimp::{
    audit_bisimplicial, audit_symmetric, cosk0_space, ig, irep, nerve_sgpd, outer_discrete, rep_inner_times_outer, rep_outer,
    BiSimplicialSet, BiView, BousfieldIndex, Space, SymmetricSimplicialSpace,
};
use invsegal::category::{enumerate_functors, FinCategory, FinFunctor, FinGroupoid};
use invsegal::combinat::binomial;
use invsegal::corpus::{groupoids, random_functors};
use invsegal::group::FinGroup;
use invsegal::lifting::{bounded_localize, build_ic, crosscheck_props, LocBounds, LocFlavor, LocRange, Member, RepFlavor};
use invsegal::oracle::{weak_equiv_oracle, Tier};
use invsegal::presheaf::{is_bijective, Budget, OpKey, SortKey};
use invsegal::segal::{bousfield_map, completeness_check, hoequiv_check, reduce, segal_map};
use invsegal::sgpd::{a2_decomposition, generating_maps, walking_iso_groupoid, GeneratingMap, GeneratorKind, SimplicialFunctor, SimplicialGroupoid};
use invsegal::sset::{
    boundary, composable_strings, coproduct, horn, nerve_category, product, pullback, pushout, standard_simplex,
    SimplicialMap, TruncatedSimplicialSet,
};

const EXPECTED_FAILURES: &[usize] = &[10];

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn group_nerve(g: &FinGroup, trunc: usize) -> TruncatedSimplicialSet {
    nerve_category(&FinGroupoid::from_group(g, "*").cat, trunc)
}

fn small_groupoids() -> Vec<(String, FinGroupoid)> {
    groupoids().into_iter().filter(|(_, g)| g.cat.num_morphisms() <= 8).collect()
}

// 1. Simplicial identities hold on everything the tests build.
fn identity_audit() -> Verdict {
    let mut objects: Vec<(String, TruncatedSimplicialSet)> = Vec::new();
    for n in 0..=4 {
        objects.push((format!("D{n}"), standard_simplex(n, 4)));
    }
    for g in FinGroup::all_up_to_order_8() {
        objects.push((format!("N{}", g.name), group_nerve(&g, 4)));
    }
    for (name, g) in groupoids() {
        objects.push((format!("N({name})"), nerve_category(&g.cat, 3)));
    }
    let d1 = standard_simplex(1, 3);
    let d2 = standard_simplex(2, 3);
    let (bd1, bd1_incl) = boundary(1, 3);
    let (_, h_incl) = horn(2, 1, 3).unwrap();
    objects.push(("D1xD1".into(), product(&d1, &d1).unwrap().0));
    objects.push(("D1xD2".into(), product(&d1, &d2).unwrap().0));
    objects.push(("circle".into(), pushout(&bd1_incl, &to_point(&bd1)).unwrap().0));
    objects.push(("horn_pullback".into(), pullback(&h_incl, &h_incl).unwrap().0));
    objects.push(("D1+D2".into(), coproduct(&d1, &d2).unwrap()));
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, x) in &objects {
        match x.audit_identities() {
            Ok(n) => checked += n,
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let spaces: Vec<(String, Result<usize, invsegal::error::Error>)> = vec![
        ("ID2".into(), audit_symmetric(&irep(2, 3, 1), 3)),
        ("N(Z2)".into(), audit_symmetric(&nerve_sgpd(&SimplicialGroupoid::constant(&z2g(), 1), 3), 3)),
        ("D1xD1t".into(), audit_bisimplicial(&rep_inner_times_outer(1, 1, 2, 2))),
    ];
    for (name, r) in spaces {
        match r {
            Ok(n) => checked += n,
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    verdict(failures.is_empty(), format!("{} objects, {checked} identities checked; failures {failures:?}", objects.len() + 3))
}

fn to_point(x: &TruncatedSimplicialSet) -> SimplicialMap {
    let p = standard_simplex(0, x.trunc());
    let level = (0..=x.trunc()).map(|n| vec![0; x.len(n)]).collect();
    SimplicialMap::new(x.clone(), p, level).unwrap()
}

fn z2g() -> FinGroupoid {
    FinGroupoid::from_group(&FinGroup::cyclic(2), "x")
}

// 2. Cell counts of the two families of representables.
fn counting_oracle() -> Verdict {
    let mut bad = Vec::new();
    for n in 0..=4 {
        let d = standard_simplex(n, 4);
        let i = irep(n, 4, 0);
        for k in 0..=4 {
            if d.len(k) != binomial(n + k + 1, k + 1) {
                bad.push(format!("D[{n}]_{k} = {}", d.len(k)));
            }
            if i.len(k, 0) != (n + 1).pow(k as u32 + 1) {
                bad.push(format!("ID[{n}]_{k} = {}", i.len(k, 0)));
            }
        }
    }
    verdict(bad.is_empty(), format!("50 counts; mismatches {bad:?}"))
}

// 3. Nerves of groupoids are strictly Segal, Bousfield-Segal and hoequiv.
fn nerve_strictness() -> Verdict {
    let mut bad = Vec::new();
    let gs = groupoids();
    for (name, g) in &gs {
        let x = nerve_sgpd(&SimplicialGroupoid::constant(g, 1), 3);
        for k in 2..=3 {
            let xi = segal_map(&x, k).unwrap().verdict;
            let chi = bousfield_map(&x, k, BousfieldIndex::Corrected).unwrap().verdict;
            if xi.tier != Tier::ExactIso {
                bad.push(format!("{name} xi_{k}"));
            }
            if chi.tier != Tier::ExactIso {
                bad.push(format!("{name} chi_{k}"));
            }
        }
        if !hoequiv_check(&x).unwrap().0 {
            bad.push(format!("{name} hoequiv"));
        }
    }
    verdict(bad.is_empty(), format!("{} groupoids; failures {bad:?}", gs.len()))
}

// 4. chi_2 on the nerve of [1]: 4 against 5.
fn non_groupoid_detection() -> Verdict {
    let x = outer_discrete(&nerve_category(&FinCategory::walking_arrow(), 3), 1);
    let m = bousfield_map(&x, 2, BousfieldIndex::Corrected).unwrap();
    let (s, t) = (m.map.source.len(0), m.map.target.len(0));
    verdict(m.verdict.is_fail() && m.verdict.conclusive && (s, t) == (4, 5), format!("{} vs {}, {}", s, t, m.verdict.label()))
}

// 5. Both lifting characterizations on the random corpus.
fn lifting_crosscheck() -> Verdict {
    let functors: Vec<SimplicialFunctor> = random_functors(100, 2).unwrap().into_iter().map(|c| c.functor).collect();
    let r = crosscheck_props(&functors, 2, &mut Budget::new(50_000_000)).unwrap();
    let text = r.to_text();
    let line = |key: &str| text.lines().find(|l| l.trim_start().starts_with(key)).map(|l| l.trim().to_string()).unwrap_or_default();
    verdict(
        r.all_passed() && line("fibration_agreement") == "fibration_agreement: 100/100"
            && line("acyclic_fibration_agreement") == "acyclic_fibration_agreement: 100/100",
        format!("{}; {}", line("fibration_agreement"), line("acyclic_fibration_agreement")),
    )
}

// 6. The (A2) map is the composite of two cell attachments.
fn a2_decomposition_check() -> Verdict {
    let (i1, i2) = a2_decomposition(2).unwrap();
    let comp = i1.then(&i2).unwrap();
    let f = walking_iso_groupoid(2);
    let iso = SimplicialFunctor::into_thin(&comp.target, &f, vec![0, 1]).unwrap();
    let GeneratingMap::Functor { map, .. } = &generating_maps(GeneratorKind::A2, 1, 2)[0] else {
        return verdict(false, "A2 is not a functor");
    };
    let same = iso.is_isomorphism() && comp.then(&iso).unwrap().level == map.level && comp.objects == map.objects;
    verdict(same, format!("composite ≅ {{x}} -> F: {same}"))
}

// 7. Hom-bijections and triangle identities on instance pairs.
fn adjunction_certificates() -> Verdict {
    let mut b = Budget::new(200_000_000);
    let two = || TruncatedSimplicialSet::discrete(&["a".to_string(), "b".to_string()], 1);
    let sym_targets = || -> Vec<(String, SymmetricSimplicialSpace)> {
        vec![
            ("C(D1)".into(), c_functor(&standard_simplex(1, 1), 2)),
            ("ID1".into(), irep(1, 2, 1)),
            ("N(Z2)".into(), nerve_sgpd(&SimplicialGroupoid::constant(&z2g(), 1), 2)),
            ("cosk0(2)".into(), cosk0_space(&two(), 2)),
        ]
    };
    let ks: Vec<(String, TruncatedSimplicialSet)> =
        vec![("D0".into(), standard_simplex(0, 1)), ("D1".into(), standard_simplex(1, 1)), ("dD1".into(), boundary(1, 1).0)];
    let mut ct = Vec::new();
    for (kn, k) in &ks {
        for (wn, w) in sym_targets() {
            ct.push((format!("{kn}/{wn}"), k.clone(), w));
        }
    }
    let ct = verify_adjunction(&ConstantRow0 { outer: 2 }, &ct, &mut b).unwrap();

    let pregroupoids: Vec<(String, SegalPregroupoid)> = vec![
        ("N(pt)".into(), SegalPregroupoid::new(nerve_sgpd(&SimplicialGroupoid::point("x", 1), 2)).unwrap()),
        ("N(Z2)".into(), SegalPregroupoid::new(nerve_sgpd(&SimplicialGroupoid::constant(&z2g(), 1), 2)).unwrap()),
        ("N(F)".into(), SegalPregroupoid::new(nerve_sgpd(&walking_iso_groupoid(1), 2)).unwrap()),
    ];
    let mut ir = Vec::new();
    for (xn, x) in &pregroupoids {
        for (wn, w) in sym_targets() {
            ir.push((format!("{xn}/{wn}"), Pregroupoid::new(x.clone()), w));
        }
    }
    let ir = verify_adjunction(&InclusionR, &ir, &mut b).unwrap();

    let lefts: Vec<(String, BiSimplicialSet)> = vec![
        ("D0".into(), rep_outer(0, 2, 1)),
        ("D1".into(), rep_outer(1, 2, 1)),
        ("N[1]".into(), outer_discrete(&nerve_category(&FinCategory::walking_arrow(), 2), 1)),
    ];
    let mut inv = Vec::new();
    for (xn, x) in &lefts {
        for (wn, w) in sym_targets() {
            inv.push((format!("{xn}/{wn}"), x.clone(), SymObject::new(w)));
        }
    }
    let inv = verify_adjunction(&InvertRestrict, &inv, &mut b).unwrap();

    let mut units = 0;
    let mut unit_ok = true;
    for (_, x) in &pregroupoids {
        let rx = r_functor(&inclusion_i(x)).unwrap();
        unit_ok &= is_bijective(&r_unit(x, &rx), &rx.pregroupoid.diagram().sizes());
        units += 1;
    }
    let counts = [ct.instances.len(), ir.instances.len(), inv.instances.len()];
    let ok = ct.passed() && ir.passed() && inv.passed() && counts.iter().all(|&c| c >= 10) && unit_ok;
    verdict(
        ok,
        format!(
            "C-T {}/{}, I-R {}/{}, invert-restrict {}/{}; unit iso on {units} pregroupoids: {unit_ok}",
            ct.instances.iter().filter(|i| i.passed()).count(),
            counts[0],
            ir.instances.iter().filter(|i| i.passed()).count(),
            counts[1],
            inv.instances.iter().filter(|i| i.passed()).count(),
            counts[2],
        ),
    )
}

// 8. C(K) is an invertible complete Segal space and T C = id.
fn homotopy_hypothesis() -> Verdict {
    let mut bad = Vec::new();
    let ks = vec![
        ("D0", standard_simplex(0, 2)),
        ("D1", standard_simplex(1, 2)),
        ("N(Z2)", group_nerve(&FinGroup::cyclic(2), 2)),
    ];
    for (name, k) in &ks {
        let w = c_functor(k, 3);
        if completeness_check(&w, w.inner()).unwrap().tier != Tier::ExactIso {
            bad.push(format!("{name} completeness"));
        }
        for j in 2..=3 {
            if segal_map(&w, j).unwrap().verdict.tier != Tier::ExactIso {
                bad.push(format!("{name} xi_{j}"));
            }
        }
        if &t_functor(&w) != k {
            bad.push(format!("{name} TC"));
        }
    }
    let mut corpus: Vec<(String, SymmetricSimplicialSpace)> = ks.iter().map(|(n, k)| (format!("C({n})"), c_functor(k, 2))).collect();
    corpus.push(("C(dD1)".into(), c_functor(&boundary(1, 2).0, 2)));
    corpus.push(("ID1".into(), irep(1, 2, 1)));
    corpus.push(("N(Z2)".into(), nerve_sgpd(&SimplicialGroupoid::constant(&z2g(), 1), 2)));
    corpus.push(("cosk0(D1)".into(), cosk0_space(&standard_simplex(1, 1), 2)));
    let mut applicable = 0;
    for (name, w) in &corpus {
        if let Some(v) = ct_counit_verdict(w) {
            applicable += 1;
            if v.tier != Tier::ExactIso {
                bad.push(format!("counit on {name}"));
            }
        }
    }
    verdict(bad.is_empty(), format!("{} inputs, counit applicable on {applicable}; failures {bad:?}", ks.len()))
}

/// Cell counts of `reduce(X)` by a direct identification pass: per sort,
/// union total outer degeneracies of row-0 cells whose first vertices lie
/// in one component of row 0.
fn reduce_counts_by_union_find(x: &invsegal::presheaf::Diagram) -> Vec<usize> {
    fn find(p: &mut Vec<usize>, a: usize) -> usize {
        let mut r = a;
        while p[r] != r {
            r = p[r];
        }
        let mut a = a;
        while p[a] != r {
            let n = p[a];
            p[a] = r;
            a = n;
        }
        r
    }
    let shape = x.shape().clone();
    let inner = BiView(x).inner();
    let mut comp: Vec<usize> = (0..x.len(shape.sort(SortKey::Bi(0, 0)))).collect();
    if inner >= 1 {
        let s01 = shape.sort(SortKey::Bi(0, 1));
        for e in 0..x.len(s01) {
            let a = x.apply(OpKey::InnerFace { n: 0, m: 1, i: 1 }, e);
            let b = x.apply(OpKey::InnerFace { n: 0, m: 1, i: 0 }, e);
            let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
            comp[ra] = rb;
        }
    }
    let first_vertex = |m: usize, c: usize| -> usize {
        let mut c = c;
        for mm in (1..=m).rev() {
            c = x.apply(OpKey::InnerFace { n: 0, m: mm, i: mm }, c);
        }
        c
    };
    let mut out = Vec::new();
    for (s, key) in shape.sorts().iter().enumerate() {
        let SortKey::Bi(n, m) = *key else { unreachable!() };
        let mut p: Vec<usize> = (0..x.len(s)).collect();
        let mut rep_of_class: HashMap<usize, usize> = HashMap::new();
        for c in 0..x.len(shape.sort(SortKey::Bi(0, m))) {
            let mut y = c;
            for nn in 0..n {
                y = x.apply(OpKey::OuterDegen { n: nn, m, i: 0 }, y);
            }
            let class = find(&mut comp, first_vertex(m, c));
            match rep_of_class.get(&class) {
                Some(&r) => {
                    let (a, b) = (find(&mut p, y), find(&mut p, r));
                    p[a] = b;
                }
                None => {
                    rep_of_class.insert(class, y);
                }
            }
        }
        out.push((0..x.len(s)).filter(|&c| find(&mut p, c) == c).count());
    }
    out
}

// 9. Reduction: idempotent, discrete row 0, golden counts twice derived.
fn reduction_behaviour() -> Verdict {
    let mut bad = Vec::new();
    let mut corpus: Vec<(String, invsegal::presheaf::Diagram)> = vec![
        ("D1xD1t".into(), rep_inner_times_outer(1, 1, 2, 2).into_diagram()),
        ("ID2".into(), irep(2, 2, 1).into_diagram()),
        ("C(D1)".into(), c_functor(&standard_simplex(1, 1), 2).into_diagram()),
        ("N(Z2)".into(), nerve_sgpd(&SimplicialGroupoid::constant(&z2g(), 1), 2).into_diagram()),
        ("IG(2)".into(), ig(2, 2, 1).unwrap().0.into_diagram()),
    ];
    for flavor in [RepFlavor::Invertible, RepFlavor::Plain] {
        for g in build_ic(flavor, 1, 2, 2, 1).unwrap().generators {
            if let Member::Arrow(a) = g.member {
                corpus.push((format!("{} source", g.label), a.source));
                corpus.push((format!("{} target", g.label), a.target));
            }
        }
    }
    let mut ic_members = 0;
    for (name, d) in &corpus {
        let r = reduce(d).unwrap();
        if !BiView(&r.diagram).is_discrete_row0() {
            bad.push(format!("{name}: row 0 not discrete"));
        }
        let rr = reduce(&r.diagram).unwrap();
        if !is_bijective(&rr.unit, &rr.diagram.sizes()) {
            bad.push(format!("{name}: not idempotent"));
        }
        if name.ends_with("source") || name.ends_with("target") {
            ic_members += 1;
        }
    }
    let square = rep_inner_times_outer(1, 1, 2, 2).into_diagram();
    let counts = reduce(&square).unwrap().diagram.sizes();
    let rederived = reduce_counts_by_union_find(&square);
    if counts != rederived {
        bad.push(format!("quotient {counts:?} vs union-find {rederived:?}"));
    }
    let golden_path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/reduce_square_counts.txt");
    let rendered = format!("{counts:?}\n");
    if std::env::var_os("INVSEGAL_BLESS").is_some() {
        std::fs::write(&golden_path, &rendered).unwrap();
    } else if std::fs::read_to_string(&golden_path).unwrap_or_default() != rendered {
        bad.push(format!("golden counts differ: {counts:?}"));
    }
    verdict(
        bad.is_empty(),
        format!("{} objects ({ic_members} I_c ends); reduce(D1xD1t) sizes {counts:?}; failures {bad:?}", corpus.len()),
    )
}

// 10. Bounded localization: fixed on nerves, improves the spine-glue example.
fn bounded_localization() -> Verdict {
    let mut b = Budget::new(100_000_000);
    let mut moved = Vec::new();
    let gs = small_groupoids();
    for (name, g) in &gs {
        let x = nerve_sgpd(&SimplicialGroupoid::constant(g, 1), 2);
        let (_, r) = bounded_localize(
            x.diagram(),
            LocFlavor::Invertible,
            LocRange::Paper,
            2,
            LocBounds::default(),
            BousfieldIndex::default(),
            &mut b,
        )
        .unwrap();
        if r.attaching_rounds() != 0 || !r.stabilized {
            moved.push(name.clone());
        }
    }
    let glue = reduce(ig(2, 2, 1).unwrap().0.diagram()).unwrap().diagram;
    let (_, r) =
        bounded_localize(&glue, LocFlavor::Invertible, LocRange::Paper, 2, LocBounds::default(), BousfieldIndex::default(), &mut b)
            .unwrap();
    let fin = r.final_agreement();
    let (_, wide) =
        bounded_localize(&glue, LocFlavor::Invertible, LocRange::Boundary, 2, LocBounds::default(), BousfieldIndex::default(), &mut b)
            .unwrap();
    let trail: Vec<String> = wide.rounds.iter().map(|t| format!("{}/{}", t.agreement.hit, t.agreement.total)).collect();
    verdict(
        moved.is_empty() && r.improved_within(2),
        format!(
            "{} nerves fixed ({} moved); spine-glue: {} attaching rounds, agreement {}/{} -> {}/{} (with m = 0 generators: {})",
            gs.len() - moved.len(),
            moved.len(),
            r.attaching_rounds(),
            r.initial.hit,
            r.initial.total,
            fin.hit,
            fin.total,
            trail.join(" -> ")
        ),
    )
}

/// Nerve map of a functor between finite categories.
fn nerve_functor(c: &FinCategory, d: &FinCategory, f: &FinFunctor, trunc: usize) -> SimplicialMap {
    let nc = nerve_category(c, trunc);
    let nd = nerve_category(d, trunc);
    let sc = composable_strings(c, trunc);
    let sd = composable_strings(d, trunc);
    let mut level = vec![f.objects.clone()];
    for n in 1..=trunc {
        let index: HashMap<&Vec<usize>, usize> = sd[n].iter().enumerate().map(|(i, s)| (s, i)).collect();
        level.push(sc[n].iter().map(|s| index[&s.iter().map(|&m| f.morphisms[m]).collect::<Vec<_>>()]).collect());
    }
    SimplicialMap::new(nc, nd, level).unwrap()
}

/// Equivalence of groupoids decided from hom-set counts and reachability.
fn groupoid_functor_is_equivalence(c: &FinCategory, d: &FinCategory, f: &FinFunctor) -> bool {
    for a in 0..c.num_objects() {
        for b in 0..c.num_objects() {
            let mut img: Vec<usize> = c.morphisms().iter().enumerate().filter(|(_, m)| m.dom == a && m.cod == b).map(|(i, _)| f.morphisms[i]).collect();
            img.sort_unstable();
            img.dedup();
            let target = d.morphisms().iter().filter(|m| m.dom == f.objects[a] && m.cod == f.objects[b]).count();
            let source = c.morphisms().iter().filter(|m| m.dom == a && m.cod == b).count();
            if img.len() != source || source != target {
                return false;
            }
        }
    }
    (0..d.num_objects()).all(|y| d.morphisms().iter().any(|m| m.cod == y && f.objects.contains(&m.dom)))
}

// 11. The oracle never rejects a bijection and decides groupoid nerves exactly.
fn oracle_soundness() -> Verdict {
    let mut pool: Vec<TruncatedSimplicialSet> = (0..=3).map(|n| standard_simplex(n, 3)).collect();
    pool.push(boundary(2, 3).0);
    pool.push(horn(2, 0, 3).unwrap().0);
    pool.push(product(&standard_simplex(1, 3), &standard_simplex(1, 3)).unwrap().0);
    pool.push(nerve_category(&FinCategory::walking_arrow(), 3));
    for g in FinGroup::all_up_to_order_8().iter().filter(|g| g.order() <= 4) {
        pool.push(group_nerve(g, 3));
    }
    for (_, g) in small_groupoids() {
        pool.push(nerve_category(&g.cat, 3));
    }
    let mut fails = 0;
    let mut tiers: HashMap<&'static str, usize> = HashMap::new();
    for case in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0a11_0000 + case);
        let x = &pool[rng.gen_range(0..pool.len())];
        let f = common::relabelled(x, &mut rng);
        let v = weak_equiv_oracle(&f, 3);
        *tiers.entry(v.label()).or_default() += 1;
        if v.is_fail() {
            fails += 1;
        }
    }
    let gs = small_groupoids();
    let mut b = Budget::new(50_000_000);
    let (mut agree, mut total, mut exact_groupoid) = (0, 0, 0);
    for (_, g) in &gs {
        for (_, h) in &gs {
            for f in enumerate_functors(&g.cat, &h.cat, &mut b).unwrap() {
                let map = nerve_functor(&g.cat, &h.cat, &f, 3);
                let v = weak_equiv_oracle(&map, 3);
                let expected = groupoid_functor_is_equivalence(&g.cat, &h.cat, &f);
                if v.tier == Tier::ExactGroupoid {
                    exact_groupoid += 1;
                }
                total += 1;
                if v.conclusive && v.is_pass() == expected {
                    agree += 1;
                }
            }
        }
    }
    let mut tiers: Vec<_> = tiers.into_iter().collect();
    tiers.sort();
    verdict(
        fails == 0 && agree == total && exact_groupoid > 0,
        format!("1000 bijections, {fails} rejected, tiers {tiers:?}; groupoid functors {agree}/{total} agree ({exact_groupoid} ExactGroupoid)"),
    )
}

#[test]
fn acceptance() {
    let criteria: Vec<(usize, &str, fn() -> Verdict, Duration)> = vec![
        (1, "simplicial-identity audit", identity_audit, Duration::from_secs(30)),
        (2, "counting oracle", counting_oracle, Duration::from_secs(1)),
        (3, "nerve strictness", nerve_strictness, Duration::from_secs(60)),
        (4, "non-groupoid detection", non_groupoid_detection, Duration::from_secs(1)),
        (5, "lifting cross-checks", lifting_crosscheck, Duration::from_secs(300)),
        (6, "(A2) decomposition", a2_decomposition_check, Duration::from_secs(1)),
        (7, "adjunction certificates", adjunction_certificates, Duration::from_secs(300)),
        (8, "homotopy-hypothesis smoke test", homotopy_hypothesis, Duration::from_secs(30)),
        (9, "reduction behaviour", reduction_behaviour, Duration::from_secs(30)),
        (10, "bounded localization", bounded_localization, Duration::from_secs(120)),
        (11, "oracle soundness", oracle_soundness, Duration::from_secs(120)),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let ok = v.passed && took <= limit;
        println!(
            "criterion {id:>2} {}: {name} ({:.2}s, limit {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs(),
            v.detail
        );
        if ok == EXPECTED_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with an unexpected outcome: {unexpected:?}");
}
