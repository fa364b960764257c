//! Standard simplices, boundaries and horns; a circle by pushout; its
//! homology and horn filling.

use invsegal::error::Result;
use invsegal::homology::homology;
use invsegal::kan::kan_check;
use invsegal::sset::{boundary, horn, nerve_category, pushout, standard_simplex, SimplicialMap};
use invsegal::category::FinGroupoid;
use invsegal::group::FinGroup;

pub fn main() -> Result<()> {
    let d2 = standard_simplex(2, 3);
    println!("Δ[2] cells per level: {:?}", d2.sizes());
    println!("∂Δ[2] cells per level: {:?}", boundary(2, 3).0.sizes());
    println!("Λ[2,1] cells per level: {:?}", horn(2, 1, 3)?.0.sizes());

    // Δ[1] with its endpoints glued: the simplicial circle
    let (bd, incl) = boundary(1, 3);
    let pt = standard_simplex(0, 3);
    let collapse = SimplicialMap::new(bd.clone(), pt, (0..=3).map(|n| vec![0; bd.len(n)]).collect())?;
    let (circle, _, _) = pushout(&incl, &collapse)?;
    let hs = homology(&circle, 2)?;
    println!("H_*(S¹) = {}", hs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));

    let simplex = kan_check(&standard_simplex(1, 3), 3)?;
    println!("Δ[1] Kan up to level 3: {} {}", simplex.passed, simplex.witness.map(|w| w.to_string()).unwrap_or_default());
    let bz3 = nerve_category(&FinGroupoid::from_group(&FinGroup::cyclic(3), "*").cat, 3);
    println!("B(Z/3) Kan up to level 3: {}", kan_check(&bz3, 3)?.passed);
    println!("H_*(B(Z/3)) = {}", homology(&bz3, 2)?.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    Ok(())
}
