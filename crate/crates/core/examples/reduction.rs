//! Collapsing row 0 of a space to its components.

use invsegal::bisimp::{rep_inner_times_outer, BiView, Space};
use invsegal::error::Result;
use invsegal::presheaf::is_bijective;
use invsegal::segal::reduce;

pub fn main() -> Result<()> {
    let x = rep_inner_times_outer(1, 1, 2, 2);
    println!("Δ[1] × Δ[1]^t cells per (n, m): {:?}", x.diagram().sizes());
    let r = reduce(x.diagram())?;
    println!("reduced: {:?}, row 0 discrete: {}", r.diagram.sizes(), BiView(&r.diagram).is_discrete_row0());
    let again = reduce(&r.diagram)?;
    println!("reducing again is the identity: {}", is_bijective(&again.unit, &again.diagram.sizes()));
    Ok(())
}
