//! Exact Hodge-class computations on Hurwitz spaces of admissible covers.
//!
//! The crate expresses the Hodge class of the Hurwitz space of degree-`d`
//! genus-`g` covers of the projective line (optionally with one extra
//! `l`-fold ramification point over the first branch point) as a rational
//! combination of boundary divisor classes, and re-derives that expression
//! symbolically from pushforward rules on the universal curve.
//!
//! Modules:
//!
//! * [`formats`]: ramification formats (partitions of the degree) over a node.
//! * [`m0b`]: boundary divisors, psi classes and F-curve pairings on the
//!   moduli space of stable `b`-pointed rational curves.
//! * [`hurwitz`]: boundary labels of the Hurwitz space and the closed-form
//!   Hodge-class coefficients.
//! * [`monodromy`]: symmetric-group monodromy counts, used to certify which
//!   boundary divisors are nonempty.
//! * [`derivation`]: a rewrite engine reproducing the Hodge class from the
//!   pushforward table and the node-contribution rule.
//!
//! All arithmetic is exact; there is no floating point anywhere.
//!
//! ```
//! use hurwitz_hodge::hurwitz::hodge_class;
//! use hurwitz_hodge::rational::rat;
//! use hurwitz_hodge::{derivation, BoundaryLabel, EnumerationMode, HurwitzParams};
//!
//! let params = HurwitzParams::new(2, 2, None).unwrap();
//! let lambda = hodge_class(&params, EnumerationMode::Formal).unwrap();
//! let label = BoundaryLabel::new(3, "2".parse().unwrap(), None);
//! assert_eq!(lambda.coefficient(&label), rat(1, 5));
//! assert!(derivation::check_theorems(&params).unwrap());
//! ```

pub mod derivation;
pub mod error;
pub mod formats;
pub mod hurwitz;
pub mod m0b;
pub mod monodromy;
pub mod rational;

pub use error::{Error, Result};
pub use formats::RamificationFormat;
pub use hurwitz::{BoundaryLabel, EnumerationMode, HodgeExpression, HurwitzParams};
pub use rational::Rational;
