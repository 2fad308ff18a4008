//! Numerical semirings, algebraic path problems and interval bounds.
//!
//! Algorithms are written once against the [`semiring::Semiring`] trait and
//! run over max-plus, min-plus, max-min, ordinary arithmetic, the
//! subtropical family, or the interval extension of any of these.
//!
//! ```
//! use kleene::linalg::{closure, Matrix};
//! use kleene::semiring::MinPlus;
//!
//! let inf = f64::INFINITY;
//! let a = Matrix::from_rows(vec![
//!     vec![inf, 1.0, 5.0],
//!     vec![inf, inf, 2.0],
//!     vec![inf, inf, inf],
//! ])
//! .unwrap();
//! let d = closure(&MinPlus, &a).unwrap();
//! assert_eq!(d[(0, 2)], 3.0);
//! ```

pub mod error;
pub mod graph;
pub mod interval;
pub mod linalg;
pub mod par;
pub mod semiring;
pub mod text;

pub use error::{Error, Result};
pub use par::Execution;
