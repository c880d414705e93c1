//! Braid groups and their writhe, the dewrithed subcategory, configuration
//! space discriminants, and the additive power series model of the dual
//! Steenrod algebra at the prime 2.
//!
//! Module map:
//!
//! * [`braid`]: braid words, free reduction, writhe, underlying permutations,
//!   juxtaposition and the braiding elements `c_{n,m}`.
//! * [`garside`]: left-greedy Garside normal forms and the word problem.
//! * [`category`]: the abelianized groupoid, hexagon verification and the
//!   permutation-matrix functor.
//! * [`config`]: configurations in the plane, discriminants, angular anomalies
//!   and the bridge between braid words and loops of configurations.
//! * [`steenrod`]: F₂ polynomials, additive series under composition,
//!   twisted polynomials, the universal coproduct and graded dimensions.
//! * [`selftest`]: the seeded property suite behind the `selftest` CLI verb.

pub mod braid;
pub mod category;
pub mod config;
mod error;
pub mod garside;
pub mod sample;
pub mod selftest;
pub mod steenrod;

pub use error::{Error, Result};
