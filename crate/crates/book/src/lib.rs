//! The guide in `book/src`, one module per chapter so that `cargo test`
//! runs every listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}
#[doc = include_str!("../../../book/src/roots.md")]
pub mod roots {}
#[doc = include_str!("../../../book/src/algebras.md")]
pub mod algebras {}
#[doc = include_str!("../../../book/src/enveloping.md")]
pub mod enveloping {}
#[doc = include_str!("../../../book/src/vermas.md")]
pub mod vermas {}
#[doc = include_str!("../../../book/src/structure.md")]
pub mod structure {}
#[doc = include_str!("../../../book/src/checks.md")]
pub mod checks {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
