//! Bounded localization: a nerve is already local; the glued spine IG(2)
//! is only moved once the m = 0 boundary generators are allowed.

use invsegal::bisimp::{ig, nerve_sgpd, BousfieldIndex, Space};
use invsegal::category::FinGroupoid;
use invsegal::error::Result;
use invsegal::group::FinGroup;
use invsegal::lifting::{bounded_localize, LocBounds, LocFlavor, LocRange};
use invsegal::presheaf::Budget;
use invsegal::segal::reduce;
use invsegal::sgpd::SimplicialGroupoid;

pub fn main() -> Result<()> {
    let mut budget = Budget::new(100_000_000);
    let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "x");
    let n = nerve_sgpd(&SimplicialGroupoid::constant(&z2, 1), 2);
    let (_, r) =
        bounded_localize(n.diagram(), LocFlavor::Invertible, LocRange::Paper, 2, LocBounds::default(), BousfieldIndex::default(), &mut budget)?;
    println!("N(BZ2): stabilized {} after {} attaching rounds", r.stabilized, r.attaching_rounds());

    let glue = reduce(ig(2, 2, 1)?.0.diagram())?.diagram;
    for range in [LocRange::Paper, LocRange::Boundary] {
        let (out, r) = bounded_localize(&glue, LocFlavor::Invertible, range, 2, LocBounds::default(), BousfieldIndex::default(), &mut budget)?;
        let trail: Vec<String> = std::iter::once(&r.initial)
            .chain(r.rounds.iter().map(|t| &t.agreement))
            .map(|a| format!("{}/{}", a.hit, a.total))
            .collect();
        println!("spine glue, {range:?}: agreement {} ({} cells after)", trail.join(" -> "), out.total_cells());
    }
    Ok(())
}
