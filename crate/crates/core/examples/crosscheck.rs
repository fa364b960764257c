//! The lifting characterizations of fibrations and acyclic fibrations,
//! compared with the direct checks on the pseudo-random functor corpus.

use invsegal::corpus::random_functors;
use invsegal::error::Result;
use invsegal::lifting::crosscheck_props;
use invsegal::presheaf::Budget;

pub fn main() -> Result<()> {
    let corpus = random_functors(20, 2)?;
    for c in corpus.iter().take(3) {
        println!("{}: {} -> {} objects", c.name, c.functor.source.num_objects(), c.functor.target.num_objects());
    }
    let functors: Vec<_> = corpus.into_iter().map(|c| c.functor).collect();
    let report = crosscheck_props(&functors, 2, &mut Budget::new(50_000_000))?;
    for line in report.to_text().lines().filter(|l| l.contains("agreement")) {
        println!("{}", line.trim());
    }
    Ok(())
}
