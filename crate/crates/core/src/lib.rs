//! Computations with invertible Segal spaces, simplicial groupoids and the
//! functors relating them, over finite truncated presheaves.

pub mod adjunctions;
pub mod bisimp;
pub mod category;
pub mod cli;
pub mod combinat;
pub mod corpus;
pub mod completion;
pub mod error;
pub mod format;
pub mod group;
pub mod homology;
pub mod kan;
pub mod kan_ext;
pub mod lifting;
pub mod oracle;
pub mod presheaf;
pub mod report;
pub mod segal;
pub mod sgpd;
pub mod sset;

pub use error::{Error, Result};
