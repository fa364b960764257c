//! Segal, Bousfield-Segal and completeness conditions on nerves and
//! constant spaces.

use invsegal::adjunctions::c_functor;
use invsegal::bisimp::{nerve_sgpd, outer_discrete, BousfieldIndex};
use invsegal::category::{FinCategory, FinGroupoid};
use invsegal::error::Result;
use invsegal::group::FinGroup;
use invsegal::segal::{bousfield_map, completeness_check, ho_category, hoequiv_check, segal_map};
use invsegal::sgpd::SimplicialGroupoid;
use invsegal::sset::{nerve_category, standard_simplex};

pub fn main() -> Result<()> {
    let s3 = FinGroupoid::from_group(&FinGroup::symmetric3(), "*");
    let w = nerve_sgpd(&SimplicialGroupoid::constant(&s3, 1), 3);
    for k in 2..=3 {
        println!("N(S3): ξ_{k} {}, χ_{k} {}", segal_map(&w, k)?.verdict, bousfield_map(&w, k, BousfieldIndex::Corrected)?.verdict);
    }
    println!("N(S3) hoequiv: {}", hoequiv_check(&w)?.0);
    println!("N(S3) complete: {}", completeness_check(&w, 1)?);
    println!("Ho(N(S3)) has {} morphisms", ho_category(&w)?.category.num_morphisms());

    let arrow = outer_discrete(&nerve_category(&FinCategory::walking_arrow(), 3), 1);
    let chi = bousfield_map(&arrow, 2, BousfieldIndex::Corrected)?;
    println!("N[1]: χ_2 {} ({} cells against {})", chi.verdict, chi.map.source.len(0), chi.map.target.len(0));
    println!("N[1] hoequiv: {:?}", hoequiv_check(&arrow)?);

    let c = c_functor(&standard_simplex(1, 2), 3);
    println!("C(Δ[1]): ξ_2 {}, complete {}", segal_map(&c, 2)?.verdict, completeness_check(&c, 2)?);
    Ok(())
}
