//! Exact barycentric kernel: points, metric matrices, and the Euclidean
//! products they encode.

mod angle;
mod line;
mod metric;
mod point;
mod shape;

pub use angle::{cot_angle, AngleCot};
pub use line::{intersect, line_through, side_line, Line};
pub use metric::{
    bracket, cross_product_coeff, dist2, gauge, inner_product, inner_product_directions,
    is_gauge_equivalent, is_perpendicular, metric_kh, metric_ko, MetricMatrix,
};
pub use point::{difference, BaryPoint, PointKind, Triple};
pub use shape::{conway, squared_area, TriangleShape, Vertex};

pub(crate) use point::{det3, scale3, sub3};
