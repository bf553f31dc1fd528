//! Exact triangle geometry in barycentric coordinates.
//!
//! Every Euclidean quantity (dot products, squared distances, oriented
//! angles, circle powers) is computed from a *metric matrix* `K` acting on
//! barycentric coordinate triples, in exact rational arithmetic. The
//! canonical choice is `K_H = diag(S_A, S_B, S_C)` built from the Conway
//! symbols of the reference triangle.
//!
//! - [`kernel`]: rationals, points, metric matrices, angles, lines.
//! - [`centers`]: centroid, orthocenter, circumcenter, nine-point center,
//!   incenter and excenters, with exact radius data.
//! - [`circles`]: circles as (center, squared radius), power of a point,
//!   tangency classification.
//! - [`theorems`]: a catalog of exact identity checks.
//! - [`oracle`]: an independent floating-point Cartesian reference.
//! - [`fuzz`]: seeded random shapes and the batch driver (parallel with the
//!   `parallel` feature).
//!
//! ```
//! use barymetric::{centers, kernel::TriangleShape};
//!
//! let shape = TriangleShape::from_ints(5, 4, 3).unwrap();
//! let set = centers::CenterSet::new(&shape);
//! assert_eq!(set.circumcenter.to_string(), "(0, 1/2, 1/2)");
//! assert_eq!(set.r2_circum.to_string(), "25/4");
//! ```

pub mod centers;
pub mod circles;
pub mod error;
pub mod fuzz;
pub mod kernel;
pub mod oracle;
pub mod rational;
pub mod sampling;
pub mod theorems;

pub use error::{GeometryError, ParseRationalError, Result};
pub use rational::Rational;
