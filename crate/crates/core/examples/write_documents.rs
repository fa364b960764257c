//! Writes a small set of interchange documents into a directory, for use
//! with the `invsegal` command-line tool.

use std::path::{Path, PathBuf};

use invsegal::bisimp::{cosk0_space, nerve_sgpd, outer_discrete, rep_inner_times_outer, BiSimplicialSet};
use invsegal::category::{FinCategory, FinGroupoid};
use invsegal::format::{print, Carrier, Document};
use invsegal::group::FinGroup;
use invsegal::sgpd::SimplicialGroupoid;
use invsegal::sset::{nerve_category, standard_simplex};

pub fn main() -> invsegal::error::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "documents".into()));
    write_all(&dir)
}

pub fn write_all(dir: &Path) -> invsegal::error::Result<()> {
    std::fs::create_dir_all(dir).expect("create output directory");
    let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "x");
    let docs: Vec<(&str, Document)> = vec![
        ("simplex1.json", Document::single("D1", Carrier::Sset(standard_simplex(1, 3)))),
        ("z2.json", Document::single("BZ2", Carrier::Fingpd(z2.clone()))),
        ("poset1.json", Document::single("P1", Carrier::Fincat(FinCategory::walking_arrow()))),
        ("nerve_z2.json", Document::single("N(BZ2)", Carrier::Symsset(nerve_sgpd(&SimplicialGroupoid::constant(&z2, 1), 3)))),
        ("nerve_poset1.json", Document::single("N[1]", Carrier::Bisset(outer_discrete(&nerve_category(&FinCategory::walking_arrow(), 3), 1)))),
        ("cosk0_simplex1.json", Document::single("cosk0(D1)", Carrier::Symsset(cosk0_space(&standard_simplex(1, 1), 3)))),
        ("square.json", Document::single("D1xD1t", Carrier::Bisset(rep_inner_times_outer(1, 1, 2, 1)))),
        ("empty.json", Document::single("E", Carrier::Bisset(BiSimplicialSet::empty(2, 1)))),
    ];
    for (file, doc) in docs {
        std::fs::write(dir.join(file), print(&doc)).expect("write document");
        println!("{}", dir.join(file).display());
    }
    Ok(())
}
