//! Exact computations with type I Lie superalgebras over finite fields:
//! reduced enveloping superalgebras, baby Verma modules and the functors
//! between `g`- and `g₀̄`-modules. The guide lives in `book/`.

pub mod error;
pub mod gf;
pub mod harness;
pub mod liesuper;
pub mod modrep;
pub mod pbw;
pub mod rootdata;

pub use error::{Error, Result};
