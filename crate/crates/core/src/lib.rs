//! Exact computation of cluster variables, d-vectors and m-vectors for
//! coefficient-free cluster algebras, with checkers for the D-matrix
//! duality, the initial-seed recursion and the M-from-D formula.

pub mod error;
pub mod laurent;
pub mod matrices;
pub mod oracles;
pub mod presets;
pub mod properties;
pub mod seeds;
pub mod vectors;

pub use error::{Error, Result};
pub use laurent::{Exponents, LaurentPolynomial};
pub use matrices::{ExchangeMatrix, IntMatrix};
pub use properties::{Checker, PropertyId, PropertyReport};
pub use seeds::{CanonicalSeedKey, Exploration, ExploreLimits, Seed, TreePath};
