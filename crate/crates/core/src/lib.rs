//! Differential dimension polynomials of characterizable differential ideals.
//!
//! A differential regular chain `S` over `ℚ{u_1..u_m}` with `n` commuting
//! derivations describes the characterizable ideal `I(S)`. The crate computes
//! the numerical polynomial `ω` that eventually equals the Krull dimension of
//! the order-`ℓ` truncations of `ℚ{U}/I(S)`, and uses it with leader degrees
//! to decide whether `I(S) ⊆ I(S')` is an equality.
//!
//! ```
//! use diffdim::{dimension, system};
//!
//! let sys = system::parse_system(
//!     "ring derivations=(t,x) indeterminates=(u)
//!      ranking orderly tiebreak=(u)
//!      chain B { u[0,2] - u[1,0] - 2*u[0,1]*u[0,0]; }",
//! )?;
//! let result = dimension::omega(sys.chain("B").unwrap())?;
//! assert_eq!(result.omega.to_string(), "2ℓ + 1");
//! # Ok::<(), diffdim::Error>(())
//! ```

pub mod chains;
pub mod cli;
pub mod compare;
pub mod diffpoly;
pub mod dimension;
pub mod error;
pub mod numpoly;
pub mod system;

pub use chains::{DiffChain, ValidationReport};
pub use compare::{compare_ideals, CompareVerdict, Relation};
pub use diffpoly::{Derivative, DiffPoly, MultiIndex, Ranking, RingSpec};
pub use dimension::{omega, LeaderSpec, OmegaResult};
pub use error::{Error, Result};
pub use numpoly::NumericalPolynomial;
