//! Exact combinatorics and probability for staircase tableaux.
//!
//! * [`tableau`]: the grid, placement rules, u/q fill, involution,
//!   subtableaux and the ASEP type of a tableau.
//! * [`enumerate`]: exhaustive generation and partition functions; the
//!   brute-force oracle for everything else.
//! * [`measure`]: the random tableau `S_{n,α,β}`, exact sampling and the
//!   subtableau/corner distribution identities.
//! * [`diagonal`]: closed-form box and second-diagonal laws, factorial
//!   moments, moment inversion and distance to the Poisson limits.
//! * [`asep`]: the open-boundary exclusion process and its exact stationary
//!   law, compared against tableau weights.
//! * [`verify`]: the oracle-equality suites used by the CLI.
//!
//! All probabilities are exact [`rational::Rational`]s.

pub mod asep;
pub mod diagonal;
pub mod enumerate;
pub mod error;
pub mod linalg;
pub mod measure;
pub mod par;
pub mod poisson;
pub mod rational;
pub mod tableau;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use measure::MeasureParams;
pub use par::Exec;
pub use rational::Rational;
pub use tableau::{Symbol, Tableau};
