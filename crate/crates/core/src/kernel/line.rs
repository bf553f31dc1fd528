use std::fmt;

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::kernel::point::{cross3, is_zero3, scale3, BaryPoint, Triple};
use crate::kernel::shape::{TriangleShape, Vertex};
use crate::rational::Rational;

/// `l₁α + l₂β + l₃γ = 0`, stored in canonical form (first nonzero
/// coefficient equal to 1).
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Line {
    coeffs: Triple,
}

impl Line {
    pub fn new(l1: Rational, l2: Rational, l3: Rational) -> Result<Self> {
        Self::from_triple([l1, l2, l3]).ok_or(GeometryError::InvalidPoint(
            "line coefficients are all zero".into(),
        ))
    }

    fn from_triple(coeffs: Triple) -> Option<Self> {
        let lead = coeffs.iter().find(|c| !c.is_zero())?.recip();
        Some(Line { coeffs: scale3(&lead, &coeffs) })
    }

    pub fn coeffs(&self) -> &Triple {
        &self.coeffs
    }

    /// Value of the line form at `x`; zero iff the point lies on the line.
    pub fn eval(&self, x: &BaryPoint) -> Rational {
        let c = x.coords();
        (0..3).map(|i| &self.coeffs[i] * &c[i]).sum()
    }

    pub fn contains(&self, x: &BaryPoint) -> bool {
        self.eval(x).is_zero()
    }

    /// The line at infinity `α + β + γ = 0`.
    pub fn at_infinity() -> Self {
        Line { coeffs: [Rational::one(), Rational::one(), Rational::one()] }
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(f, "Line[{}, {}, {}]", c[0], c[1], c[2])
    }
}

/// The line through two distinct points (finite or at infinity).
pub fn line_through(p: &BaryPoint, q: &BaryPoint) -> Result<Line> {
    Line::from_triple(cross3(p.coords(), q.coords())).ok_or(GeometryError::IdenticalPoints)
}

/// Side line opposite `vertex`: `α = 0` for BC, and cyclic.
pub fn side_line(_shape: &TriangleShape, vertex: Vertex) -> Line {
    let mut coeffs = crate::kernel::point::zero3();
    coeffs[vertex.index()] = Rational::one();
    Line { coeffs }
}

/// Meet of two lines. Parallel lines meet at a point at infinity.
pub fn intersect(l1: &Line, l2: &Line) -> Result<BaryPoint> {
    let x = cross3(&l1.coeffs, &l2.coeffs);
    if is_zero3(&x) {
        return Err(GeometryError::IdenticalLines);
    }
    let [a, b, c] = x;
    BaryPoint::homogeneous(a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::metric::metric_kh;
    use crate::kernel::point::PointKind;
    use crate::rational::q;

    fn mid(x: &BaryPoint, y: &BaryPoint) -> BaryPoint {
        BaryPoint::affine(&[(q(1, 2), x), (q(1, 2), y)]).unwrap()
    }

    #[test]
    fn side_line_bc_on_right_triangle() {
        let s = TriangleShape::from_ints(5, 4, 3).unwrap();
        let bc = side_line(&s, Vertex::A);
        assert_eq!(bc.coeffs(), &[q(1, 1), q(0, 1), q(0, 1)]);
        assert!(bc.contains(&BaryPoint::b()) && bc.contains(&BaryPoint::c()));
        assert!(!bc.contains(&BaryPoint::a()));
        // A·K_H is the zero row here, which is why the side line is combinatorial.
        assert!(is_zero3(&metric_kh(&s).row(BaryPoint::a().coords())));
    }

    #[test]
    fn metric_row_matches_side_line_off_right_angles() {
        let s = TriangleShape::from_ints(6, 5, 5).unwrap();
        let k = metric_kh(&s);
        for v in Vertex::ALL {
            let row = k.row(BaryPoint::vertex(v).coords());
            assert_eq!(Line::from_triple(row).unwrap(), side_line(&s, v));
        }
    }

    #[test]
    fn meet_of_two_sides_is_a_vertex() {
        let s = TriangleShape::from_ints(6, 5, 5).unwrap();
        let p = intersect(&side_line(&s, Vertex::B), &side_line(&s, Vertex::C)).unwrap();
        assert_eq!(p, BaryPoint::a());
    }

    #[test]
    fn parallels_meet_at_infinity() {
        let (a, b, c) = (BaryPoint::a(), BaryPoint::b(), BaryPoint::c());
        let ab = line_through(&a, &b).unwrap();
        let mid_seg = line_through(&mid(&a, &c), &mid(&b, &c)).unwrap();
        let p = intersect(&ab, &mid_seg).unwrap();
        assert_eq!(p.kind(), PointKind::Infinite);
        assert!(ab.contains(&p) && mid_seg.contains(&p));
        assert!(Line::at_infinity().contains(&p));
    }

    #[test]
    fn join_vanishes_on_both_points() {
        let p = BaryPoint::finite(q(1, 5), q(3, 5), q(1, 5)).unwrap();
        let r = BaryPoint::finite(q(-1, 2), q(1, 4), q(5, 4)).unwrap();
        let l = line_through(&p, &r).unwrap();
        assert!(l.contains(&p) && l.contains(&r));
        assert_eq!(line_through(&p, &p), Err(GeometryError::IdenticalPoints));
        assert_eq!(intersect(&l, &l), Err(GeometryError::IdenticalLines));
    }

    #[test]
    fn canonical_form() {
        let l = Line::new(q(0, 1), q(-3, 1), q(6, 1)).unwrap();
        assert_eq!(l.coeffs(), &[q(0, 1), q(1, 1), q(-2, 1)]);
        assert!(Line::new(q(0, 1), q(0, 1), q(0, 1)).is_err());
    }
}
