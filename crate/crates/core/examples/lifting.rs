//! Right lifting properties against the generating sets, for a functor of
//! simplicial groupoids and for a map of spaces.

use invsegal::bisimp::{irep, Space};
use invsegal::error::Result;
use invsegal::lifting::{build_ic, rlp_check, sgpd_set, Arrow, RepFlavor, Target};
use invsegal::presheaf::Budget;
use invsegal::sgpd::{walking_iso_groupoid, GeneratorKind, SimplicialFunctor, SimplicialGroupoid};

pub fn main() -> Result<()> {
    let mut budget = Budget::new(10_000_000);
    let point = SimplicialGroupoid::point("x", 2);
    let iso = walking_iso_groupoid(2);
    let collapse = SimplicialFunctor::into_thin(&iso, &point, vec![0, 0])?;
    let include = SimplicialFunctor::into_thin(&point, &iso, vec![0])?;
    let a = sgpd_set(&[GeneratorKind::A1, GeneratorKind::A2], 2, 2, false);
    let c = sgpd_set(&[GeneratorKind::C1, GeneratorKind::C2], 2, 2, true);
    for (name, f) in [("𝓕 -> {x}", &collapse), ("{x} -> 𝓕", &include)] {
        let ra = rlp_check(Target::Sgpd(f), &a, &mut budget)?;
        let rc = rlp_check(Target::Sgpd(f), &c, &mut budget)?;
        println!("{name}: rlp(A1, A2) {:?}, rlp(C1, C2) {:?}", ra.holds(), rc.holds());
    }

    let w = irep(1, 2, 1);
    let id = Arrow::identity(w.diagram());
    let ic = build_ic(RepFlavor::Invertible, 1, 1, 2, 1)?;
    let r = rlp_check(Target::Arrow(&id), &ic, &mut budget)?;
    println!("identity of IΔ[1]^t against I_c ({} maps): {:?}", ic.len(), r.holds());
    Ok(())
}
