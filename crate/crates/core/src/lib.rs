//! Exact arithmetic in real quadratic fields, one-level nested radicals,
//! and solvers for quadratic and biquadratic equations over the rationals.
//!
//! Every root is produced in closed form and every check is exact: root
//! verification, equality across representations and decimal digits never
//! go through floating point.
//!
//! ```
//! use goldroot::{denest, poly::Polynomial, solver};
//!
//! let p = Polynomial::from_ints(&[1, 0, -3, 0, 1]);
//! let flat = solver::solve_with(&p, solver::Strategy::PerfectSquare, 'x').unwrap();
//! let nested = solver::solve_with(&p, solver::Strategy::Substitution, 'x').unwrap();
//! assert!(denest::multiset_equal(&flat.roots, &nested.roots));
//! ```

pub mod denest;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod quadext;
pub mod radical;
pub mod rational;
pub mod solver;

pub use error::{Error, ErrorKind, Result};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use quadext::QuadExt;
pub use radical::{Radical, Sign};
pub use rational::Rational;
