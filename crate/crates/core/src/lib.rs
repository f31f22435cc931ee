//! Exact computation of the s-associated r-Stirling numbers of the first and
//! second kind and the s-associated r-Lah numbers.
//!
//! Every value is available through several independent routes:
//!
//! * [`triangles`]: memoized three-term triangular recurrences (the fast path),
//! * [`closedform`]: explicit sums over binomials and compositions,
//! * [`oracle`]: exhaustive enumeration of the underlying set partitions,
//! * [`fps`]: coefficient extraction from exponential generating functions.
//!
//! [`identities`], [`nestedsums`] and [`verify`] cross-check these routes
//! against each other and against the recurrence, reduction, convolution and
//! binomial identities satisfied by the three families.
//!
//! The numeric core is written against `num-traits` so that the triangle engine
//! and the power-series type can be instantiated over machine integers or
//! other rings; the aliases below fix the exact types used everywhere else.

pub mod closedform;
pub mod error;
pub mod exactnum;
pub mod fps;
pub mod identities;
pub mod nestedsums;
pub mod oracle;
pub mod table;
pub mod triangles;
pub mod verify;

/// Arbitrary-precision nonnegative integer; the type of every sequence value.
pub type Count = num_bigint::BigUint;

/// Exact rational number in lowest terms.
pub type Rat = num_rational::BigRational;

/// Truncated power series with exact rational coefficients.
pub type Series = fps::PowerSeries<Rat>;

/// Triangle store over arbitrary-precision counts.
pub type Triangles = triangles::TriangleStore<Count>;

pub use error::{Error, Result};
pub use triangles::{Cell, Kind, Params};
