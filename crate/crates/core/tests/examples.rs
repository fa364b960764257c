//! Runs every example in-process.

#[path = "../examples/adjunctions.rs"]
mod adjunctions;
#[path = "../examples/dwyer_kan.rs"]
mod dwyer_kan;
#[path = "../examples/groupoid_equivalence.rs"]
mod groupoid_equivalence;
#[path = "../examples/lifting.rs"]
mod lifting;
#[path = "../examples/localization.rs"]
mod localization;
#[path = "../examples/reduction.rs"]
mod reduction;
#[path = "../examples/segal_spaces.rs"]
mod segal_spaces;
#[path = "../examples/simplicial_sets.rs"]
mod simplicial_sets;
#[allow(dead_code)]
#[path = "../examples/write_documents.rs"]
mod write_documents;

#[test]
fn examples_run() {
    adjunctions::main().unwrap();
    crosscheck::main().unwrap();
    dwyer_kan::main().unwrap();
    groupoid_equivalence::main().unwrap();
    lifting::main().unwrap();
    localization::main().unwrap();
    reduction::main().unwrap();
    segal_spaces::main().unwrap();
    simplicial_sets::main().unwrap();
    let dir = std::env::temp_dir().join(format!("invsegal-examples-{}", std::process::id()));
    write_documents::write_all(&dir).unwrap();
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        invsegal::format::parse(&text).unwrap();
    }
}
