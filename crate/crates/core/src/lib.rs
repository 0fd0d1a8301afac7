pub mod corpus;
pub mod diagram;
pub mod error;
pub mod invariants;
mod json_int;
pub mod oracle;
pub mod polynomial;
pub mod states;
pub mod verify;

pub use diagram::{parse_gauss, parse_pd, PlanarDiagram};
pub use error::{Error, Result};
pub use polynomial::{state_sum, LaurentPolynomial};
pub use states::{canonical_state, enumerate_states, KauffmanState};
