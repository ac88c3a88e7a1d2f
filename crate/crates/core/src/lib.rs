//! Exact computations for Białynicki-Birula decompositions of affine schemes
//! with split torus actions, relative to a toric monoid `Spec k[S]`.
//!
//! - [`monoid`]: affine semigroups, their cones, units, Kempf vectors and the
//!   reduction to a monoid with zero.
//! - [`graded`]: `Z^n`-graded presentations, the limit scheme `X⁺`, fixed loci
//!   and the open-immersion test at the distinguished fixed point.
//! - [`truncation`]: monomial quotients, formal truncations `A/J^{n+1}` and
//!   their stabilization on weight components.
//! - [`hilb`]: torus-fixed points of the Hilbert scheme of points in the plane,
//!   tangent characters and cell dimensions.

mod linalg;

pub mod graded;
pub mod hilb;
pub mod io;
pub mod monoid;
pub mod parse;
pub mod poly;
pub mod truncation;
pub mod vector;

pub use monoid::{AffineMonoid, KempfVector, LatticeProjection, MonoidError};
pub use vector::IntVector;
