//! Simplicial groupoids: Dwyer-Kan equivalences, the fibration conditions
//! and the two-step decomposition of {x} -> 𝓕.

use invsegal::error::Result;
use invsegal::sgpd::{a2_decomposition, dk_equivalence_check, fibration_check, walking_iso_groupoid, SimplicialFunctor, SimplicialGroupoid};

pub fn main() -> Result<()> {
    let point = SimplicialGroupoid::point("x", 2);
    let iso = walking_iso_groupoid(2);
    let f = SimplicialFunctor::into_thin(&point, &iso, vec![0])?;
    let dk = dk_equivalence_check(&f, 2)?;
    println!("{{x}} -> 𝓕 Dwyer-Kan equivalence: {}", dk.verdict);
    let fib = fibration_check(&f, 2)?;
    println!("{{x}} -> 𝓕 fibration: {} (F2 failure: {:?})", fib.passed, fib.f2_failure.map(|w| w.g));

    let g = SimplicialFunctor::into_thin(&iso, &point, vec![0, 0])?;
    println!("𝓕 -> {{x}} fibration: {}", fibration_check(&g, 2)?.passed);
    println!("𝓕 -> {{x}} Dwyer-Kan equivalence: {}", dk_equivalence_check(&g, 2)?.verdict);

    let (first, second) = a2_decomposition(2)?;
    let comp = first.then(&second)?;
    println!(
        "{{x}} -> {{x, y}} -> 𝓕: {} then {} objects, composite is a Dwyer-Kan equivalence: {}",
        first.target.num_objects(),
        second.target.num_objects(),
        dk_equivalence_check(&comp, 2)?.verdict
    );
    Ok(())
}
