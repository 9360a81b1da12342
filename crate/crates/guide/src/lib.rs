//! Compiles every code block in the guide book as a doc-test, so the
//! prose under `book/` can never drift from the library it documents.
//! Each module below mirrors one chapter; `cargo test -p
//! imitation-lab-guide --doc` runs them all.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/environments.md")]
pub mod environments {}

#[doc = include_str!("../../../book/src/cloning.md")]
pub mod cloning {}

#[doc = include_str!("../../../book/src/saddle.md")]
pub mod saddle {}

#[doc = include_str!("../../../book/src/matching.md")]
pub mod matching {}

#[doc = include_str!("../../../book/src/experiments.md")]
pub mod experiments {}
