//! Exact Riordan-array algebra and the central (C) transform of integer
//! sequences, with Hankel-transform tooling and verifiers for the families of
//! transforms built on them.

pub mod ctransform;
pub mod error;
pub mod expr;
pub mod families;
pub mod hankel;
pub mod poly;
pub mod riordan;
pub mod sequence;
pub mod series;

pub use error::{Error, Result};
pub use expr::{expand, expand_str, parse_gf, SeriesExpr};
pub use hankel::{fit_rational_gf, hankel_transform, jfraction_expand, JFraction, RationalGF};
pub use poly::Poly;
pub use riordan::{RiordanArray, TriangularMatrix};
pub use sequence::IntSequence;
pub use series::{PowerSeries, Rational};
