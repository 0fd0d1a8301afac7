//! The guide in `book/`, compiled so that its examples run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}
#[doc = include_str!("../../../book/src/states.md")]
pub mod states {}
#[doc = include_str!("../../../book/src/alexander.md")]
pub mod alexander {}
#[doc = include_str!("../../../book/src/floer.md")]
pub mod floer {}
#[doc = include_str!("../../../book/src/obstruction.md")]
pub mod obstruction {}
#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
