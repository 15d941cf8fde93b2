//! Mean Euler characteristic of Brieskorn manifolds with their standard Reeb
//! flow, computed exactly three ways, plus the displaceability obstruction it
//! feeds.
//!
//! * [`brieskorn`]: exponent validation, `μ_P`, the closed form, a
//!   brute-force time-enumeration oracle and the route through [`engine`].
//! * [`orbit`]: the stratification of the Reeb flow by period.
//! * [`engine`]: the orbibundle formula, `E²` page dimensions and index
//!   count sequences.
//! * [`obstruction`]: Conley-Zehnder bounds and the displaceability
//!   classifier.
//! * [`identities`]: the combinatorial identities behind the unit-exponent
//!   characterization.
//! * [`cli`]: the `brieskorn` command line front end.
//!
//! ```
//! use brieskorn_invariants::{arith::ratio, brieskorn};
//!
//! let mec = brieskorn::mec_closed_form(&[2, 3, 5, 7]).unwrap();
//! assert_eq!(mec, ratio(85, 74));
//! ```

pub mod arith;
pub mod brieskorn;
pub mod cli;
pub mod engine;
pub mod error;
pub mod identities;
pub mod obstruction;
pub mod orbit;

pub use arith::Rational;
pub use error::{Error, Result};
