//! Finite categories and groupoids: functor enumeration and equivalence
//! checking with witnesses.

use invsegal::category::{cat_equivalence_check, enumerate_functors, FinCategory, FinGroupoid};
use invsegal::error::Result;
use invsegal::group::FinGroup;
use invsegal::presheaf::Budget;

pub fn main() -> Result<()> {
    let z2 = FinGroup::cyclic(2);
    let one = FinGroupoid::from_group(&z2, "x");
    let two = FinGroupoid::connected(&z2, &["x", "y"]);
    let mut budget = Budget::default();
    let functors = enumerate_functors(&one.cat, &two.cat, &mut budget)?;
    println!("functors BZ2 -> (Z2 on x ≅ y): {}", functors.len());
    for f in &functors {
        match cat_equivalence_check(&one.cat, &two.cat, f) {
            Ok(()) => println!("  objects {:?}: equivalence", f.objects),
            Err(w) => println!("  objects {:?}: {w}", f.objects),
        }
    }
    let arrow = FinCategory::walking_arrow();
    println!("[1] is a groupoid: {}", arrow.is_groupoid());
    let back = enumerate_functors(&two.cat, &one.cat, &mut budget)?;
    let equivalences = back.iter().filter(|f| cat_equivalence_check(&two.cat, &one.cat, f).is_ok()).count();
    println!("equivalences back: {equivalences} of {}", back.len());
    Ok(())
}
