//! Counting and enumerating lines on surfaces in complex projective 3-space.
//!
//! Four independent engines: separable surfaces `phi(x, y) = psi(z, t)`
//! through projectivities of the line, general surfaces through exact
//! Gröbner bases over Plücker strata, cyclic covers `t^d = f(x, y, z)` through
//! total inflection points, and disjoint line families.

pub mod bounds;
pub mod catalog;
pub mod covering;
pub mod exact;
pub mod expr;
pub mod line;
pub mod numeric;
pub mod p1;
pub mod plucker;
pub mod separable;
pub mod skew;
pub mod surface;

pub use bounds::{bound_table, BoundTable};
pub use num_complex::Complex64;
pub use catalog::Catalog;
pub use covering::{covering_lines, total_inflections, InflectionReport, PlaneCurve};
pub use exact::{Budget, MultiPoly, Rational, Ring};
pub use expr::{parse_poly, print_poly};
pub use line::Line3;
pub use p1::{BinaryForm, GroupTag, PointP1, Projectivity};
pub use separable::{count_and_emit, LineReport, SeparableSurface};
pub use skew::{rams_family, SkewFamily};
pub use surface::SurfaceForm;

/// Any error raised by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] expr::ParseError),
    #[error(transparent)]
    Poly(#[from] exact::PolyError),
    #[error(transparent)]
    Surface(#[from] surface::SurfaceError),
    #[error(transparent)]
    P1(#[from] p1::P1Error),
    #[error(transparent)]
    Separable(#[from] separable::SeparableError),
    #[error(transparent)]
    Plucker(#[from] plucker::PluckerError),
    #[error(transparent)]
    Covering(#[from] covering::CoveringError),
    #[error(transparent)]
    Skew(#[from] skew::SkewError),
    #[error(transparent)]
    Bounds(#[from] bounds::BoundsError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
}
