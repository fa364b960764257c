//! Adjunction certificates: hom-set bijections, naturality and triangle
//! identities on concrete instances.

use invsegal::adjunctions::{
    c_functor, verify_adjunction, verify_fn_instance, ConstantRow0, InclusionR, InvertRestrict, Pregroupoid, SegalPregroupoid, SymObject,
};
use invsegal::bisimp::{cosk0_space, irep, nerve_sgpd, rep_outer};
use invsegal::category::FinGroupoid;
use invsegal::error::Result;
use invsegal::group::FinGroup;
use invsegal::presheaf::Budget;
use invsegal::sgpd::{walking_iso_groupoid, SimplicialGroupoid};
use invsegal::sset::standard_simplex;

pub fn main() -> Result<()> {
    let mut budget = Budget::new(100_000_000);
    let z2 = SimplicialGroupoid::constant(&FinGroupoid::from_group(&FinGroup::cyclic(2), "x"), 1);
    let w = nerve_sgpd(&z2, 2);

    let ct = verify_adjunction(
        &ConstantRow0 { outer: 2 },
        &[("Δ[1]/N(BZ2)".to_string(), standard_simplex(1, 1), w.clone()), ("Δ[1]/C(Δ[1])".into(), standard_simplex(1, 1), c_functor(&standard_simplex(1, 1), 2))],
        &mut budget,
    )?;
    report("C ⊣ T", ct.passed(), ct.instances.iter().map(|i| (i.label.clone(), i.left_hom)));

    let x = SegalPregroupoid::new(nerve_sgpd(&walking_iso_groupoid(1), 2))?;
    let ir = verify_adjunction(
        &InclusionR,
        &[("N(𝓕)/cosk0(Δ[1])".to_string(), Pregroupoid::new(x), cosk0_space(&standard_simplex(1, 1), 2))],
        &mut budget,
    )?;
    report("I ⊣ R", ir.passed(), ir.instances.iter().map(|i| (i.label.clone(), i.left_hom)));

    let inv = verify_adjunction(&InvertRestrict, &[("Δ[1]^t/IΔ[1]^t".to_string(), rep_outer(1, 2, 1), SymObject::new(irep(1, 2, 1)))], &mut budget)?;
    report("invert ⊣ restrict", inv.passed(), inv.instances.iter().map(|i| (i.label.clone(), i.left_hom)));

    let fnc = verify_fn_instance("BZ2/BZ2", &z2, &z2, 2, &mut budget)?;
    report("F ⊣ N", fnc.passed(), std::iter::once((fnc.label.clone(), fnc.left_hom)));
    Ok(())
}

fn report(pair: &str, passed: bool, homs: impl Iterator<Item = (String, usize)>) {
    let homs: Vec<String> = homs.map(|(l, n)| format!("{l}: {n} maps")).collect();
    println!("{pair}: {} [{}]", if passed { "verified" } else { "FAILED" }, homs.join(", "));
}
