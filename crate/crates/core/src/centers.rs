//! Classical triangle centers and the exact radius data that goes with them.
//!
//! Radii are irrational in general, so only squares (`R²`, `r²`, `r_a²`) and
//! the rational products `R·r = abc/(4p)`, `R·r_a = abc/(4(p − a))` are
//! exposed.

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::kernel::{det3, scale3, sub3};
use crate::kernel::{dist2, metric_kh, BaryPoint, TriangleShape, Triple, Vertex};
use crate::rational::{q, Rational};

/// `G = (A + B + C)/3`.
pub fn centroid(_shape: &TriangleShape) -> BaryPoint {
    let third = q(1, 3);
    BaryPoint::from_finite_unchecked([third.clone(), third.clone(), third])
}

/// Orthocenter from the linear system of two altitude equations
/// `(B − C) K (X − A)ᵀ = 0`, `(C − A) K (X − B)ᵀ = 0` and `α + β + γ = 1`.
pub fn orthocenter(shape: &TriangleShape) -> BaryPoint {
    let k = metric_kh(shape);
    let (a, b, c) = (BaryPoint::a(), BaryPoint::b(), BaryPoint::c());
    let altitude = |from: &BaryPoint, to: &BaryPoint, through: &BaryPoint| -> (Triple, Rational) {
        let dir = sub3(to.coords(), from.coords());
        let row = k.row(&dir);
        let rhs = k.bilinear(&dir, through.coords());
        (row, rhs)
    };
    let (r1, b1) = altitude(&c, &b, &a);
    let (r2, b2) = altitude(&a, &c, &b);
    let r3 = [Rational::one(), Rational::one(), Rational::one()];
    let x = solve3([r1, r2, r3], [b1, b2, Rational::one()])
        .expect("altitude system is regular for a nondegenerate triangle");
    BaryPoint::from_finite_unchecked(x)
}

/// Cramer's rule on a 3×3 rational system given by rows.
fn solve3(rows: [Triple; 3], rhs: [Rational; 3]) -> Option<Triple> {
    let col = |j: usize| -> Triple { [rows[0][j].clone(), rows[1][j].clone(), rows[2][j].clone()] };
    let (c0, c1, c2) = (col(0), col(1), col(2));
    let d = det3(&c0, &c1, &c2);
    if d.is_zero() {
        return None;
    }
    Some([
        det3(&rhs, &c1, &c2) / &d,
        det3(&c0, &rhs, &c2) / &d,
        det3(&c0, &c1, &rhs) / &d,
    ])
}

/// `O = (3G − H)/2`.
pub fn circumcenter(shape: &TriangleShape) -> BaryPoint {
    circumcenter_from(&centroid(shape), &orthocenter(shape))
}

fn circumcenter_from(g: &BaryPoint, h: &BaryPoint) -> BaryPoint {
    let x = sub3(&scale3(&q(3, 1), g.coords()), h.coords());
    BaryPoint::from_finite_unchecked(scale3(&q(1, 2), &x))
}

/// `N = (O + H)/2`.
pub fn nine_point_center(shape: &TriangleShape) -> BaryPoint {
    let o = circumcenter(shape);
    let h = orthocenter(shape);
    midpoint(&o, &h).expect("finite centers")
}

/// `I = (aA + bB + cC)/(2p)`.
pub fn incenter(shape: &TriangleShape) -> BaryPoint {
    let two_p = shape.p() * q(2, 1);
    BaryPoint::from_finite_unchecked([
        shape.a() / &two_p,
        shape.b() / &two_p,
        shape.c() / &two_p,
    ])
}

/// Excenter opposite `vertex`; for `A` this is `(−aA + bB + cC)/(2(p − a))`.
pub fn excenter(shape: &TriangleShape, vertex: Vertex) -> BaryPoint {
    let mut w: Triple = [shape.a().clone(), shape.b().clone(), shape.c().clone()];
    let i = vertex.index();
    w[i] = -&w[i];
    let denom = (shape.p() - shape.side(vertex)) * q(2, 1);
    let inv = denom.recip();
    BaryPoint::from_finite_unchecked(scale3(&inv, &w))
}

pub fn midpoint(p: &BaryPoint, r: &BaryPoint) -> Result<BaryPoint> {
    BaryPoint::affine(&[(q(1, 2), p), (q(1, 2), r)])
}

/// Orthogonal projection of `p` onto the line through `from` and `to`:
/// `X = from + t (to − from)`, `t = (P − from) K (to − from)ᵀ / |from to|²`.
pub fn foot_of_perpendicular(
    shape: &TriangleShape,
    p: &BaryPoint,
    from: &BaryPoint,
    to: &BaryPoint,
) -> Result<BaryPoint> {
    for x in [p, from, to] {
        x.require_finite()?;
    }
    let k = metric_kh(shape);
    let len2 = dist2(&k, from, to)?;
    if len2.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let dir = sub3(to.coords(), from.coords());
    let rel = sub3(p.coords(), from.coords());
    let t = k.bilinear(&rel, &dir) / len2;
    BaryPoint::affine(&[(Rational::one() - &t, from), (t, to)])
}

/// The centers of a triangle together with their exact radius data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterSet {
    pub centroid: BaryPoint,
    pub orthocenter: BaryPoint,
    pub circumcenter: BaryPoint,
    pub nine_point_center: BaryPoint,
    pub incenter: BaryPoint,
    /// Indexed by the opposite vertex: `[I_A, I_B, I_C]`.
    pub excenters: [BaryPoint; 3],
    /// `R²`
    pub r2_circum: Rational,
    /// `r²`
    pub r2_in: Rational,
    /// `[r_a², r_b², r_c²]`
    pub r2_ex: [Rational; 3],
    /// `R·r`
    pub rr_in: Rational,
    /// `[R·r_a, R·r_b, R·r_c]`
    pub rr_ex: [Rational; 3],
}

impl CenterSet {
    pub fn new(shape: &TriangleShape) -> Self {
        let g = centroid(shape);
        let h = orthocenter(shape);
        let o = circumcenter_from(&g, &h);
        let n = midpoint(&o, &h).expect("finite centers");
        let abc = shape.a() * shape.b() * shape.c();
        let s2 = shape.s2();
        let p = shape.p();
        let ex_gap = |v: Vertex| p - shape.side(v);
        CenterSet {
            centroid: g,
            orthocenter: h,
            circumcenter: o,
            nine_point_center: n,
            incenter: incenter(shape),
            excenters: Vertex::ALL.map(|v| excenter(shape, v)),
            r2_circum: abc.square() / (s2 * q(16, 1)),
            r2_in: s2 / p.square(),
            r2_ex: Vertex::ALL.map(|v| s2 / ex_gap(v).square()),
            rr_in: &abc / (p * q(4, 1)),
            rr_ex: Vertex::ALL.map(|v| &abc / (ex_gap(v) * q(4, 1))),
        }
    }

    pub fn excenter(&self, v: Vertex) -> &BaryPoint {
        &self.excenters[v.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::bracket;

    fn shape(a: i64, b: i64, c: i64) -> TriangleShape {
        TriangleShape::from_ints(a, b, c).unwrap()
    }

    fn pt(a: Rational, b: Rational, c: Rational) -> BaryPoint {
        BaryPoint::finite(a, b, c).unwrap()
    }

    fn third() -> BaryPoint {
        pt(q(1, 3), q(1, 3), q(1, 3))
    }

    #[test]
    fn centroid_and_median() {
        let s = shape(6, 5, 5);
        let g = centroid(&s);
        assert_eq!(g, third());
        let m = midpoint(&BaryPoint::b(), &BaryPoint::c()).unwrap();
        let lhs = sub3(&scale3(&q(3, 1), g.coords()), BaryPoint::a().coords());
        assert_eq!(lhs, scale3(&q(2, 1), m.coords()));
        assert!(bracket(&g, &BaryPoint::a(), &m).is_zero());
    }

    #[test]
    fn orthocenter_examples() {
        assert_eq!(orthocenter(&shape(5, 4, 3)), BaryPoint::a());
        assert_eq!(orthocenter(&shape(2, 2, 2)), third());
    }

    #[test]
    fn orthocenter_matches_closed_form() {
        // H ∝ (S_B S_C, S_C S_A, S_A S_B)
        for s in [shape(6, 5, 5), shape(13, 14, 15), shape(7, 8, 3)] {
            let (sa, sb, sc) = (s.sa(), s.sb(), s.sc());
            let closed = BaryPoint::homogeneous(sb * sc, sc * sa, sa * sb).unwrap();
            assert_eq!(orthocenter(&s), closed);
        }
    }

    #[test]
    fn third_altitude_vanishes() {
        let s = shape(13, 14, 15);
        let k = metric_kh(&s);
        let h = orthocenter(&s);
        let ab = sub3(BaryPoint::a().coords(), BaryPoint::b().coords());
        let hc = sub3(h.coords(), BaryPoint::c().coords());
        assert!(k.bilinear(&ab, &hc).is_zero());
    }

    #[test]
    fn circumcenter_examples() {
        let s = shape(5, 4, 3);
        let o = circumcenter(&s);
        assert_eq!(o, pt(q(0, 1), q(1, 2), q(1, 2)));
        let k = metric_kh(&s);
        for v in Vertex::ALL {
            assert_eq!(dist2(&k, &o, &BaryPoint::vertex(v)).unwrap(), q(25, 4));
        }
        assert_eq!(circumcenter(&shape(2, 2, 2)), third());
    }

    #[test]
    fn oko_plus_hkh_is_r2() {
        for s in [shape(5, 4, 3), shape(6, 5, 5), shape(13, 14, 15)] {
            let set = CenterSet::new(&s);
            let k = metric_kh(&s);
            let o = &set.circumcenter;
            let h = &set.orthocenter;
            assert_eq!(k.form(o, o) + k.form(h, h), set.r2_circum);
        }
    }

    #[test]
    fn nine_point_center_examples() {
        let s = shape(5, 4, 3);
        assert_eq!(nine_point_center(&s), pt(q(1, 2), q(1, 4), q(1, 4)));
        assert_eq!(nine_point_center(&shape(2, 2, 2)), third());
        let s = shape(6, 5, 5);
        let set = CenterSet::new(&s);
        let k = metric_kh(&s);
        let m = midpoint(&BaryPoint::b(), &BaryPoint::c()).unwrap();
        let quarter = &set.r2_circum / q(4, 1);
        assert_eq!(dist2(&k, &set.nine_point_center, &m).unwrap(), quarter);
        let foot = foot_of_perpendicular(&s, &BaryPoint::a(), &BaryPoint::b(), &BaryPoint::c()).unwrap();
        assert_eq!(dist2(&k, &set.nine_point_center, &foot).unwrap(), quarter);
    }

    #[test]
    fn incenter_and_excenter_examples() {
        let s = shape(5, 4, 3);
        assert_eq!(incenter(&s), pt(q(5, 12), q(1, 3), q(1, 4)));
        assert_eq!(excenter(&s, Vertex::A), pt(q(-5, 2), q(2, 1), q(3, 2)));
        let set = CenterSet::new(&s);
        let k = metric_kh(&s);
        let i = &set.incenter;
        assert_eq!(k.form(i, i), q(2, 1));
        assert_eq!(k.form(&third(), i) * q(3, 1), q(7, 1));
        assert_eq!(k.form(i, i), &set.r2_in * q(2, 1));
        assert_eq!(k.form(&third(), i) * q(3, 1), (&set.rr_in + &set.r2_in) * q(2, 1));
    }

    #[test]
    fn incenter_area_ratios_are_side_ratios() {
        let s = TriangleShape::new(q(7, 2), q(3, 1), q(11, 4)).unwrap();
        let i = incenter(&s);
        let (a, b, c) = (BaryPoint::a(), BaryPoint::b(), BaryPoint::c());
        let ratios = [bracket(&b, &c, &i), bracket(&c, &a, &i), bracket(&a, &b, &i)];
        let two_p = s.p() * q(2, 1);
        assert_eq!(ratios, [s.a() / &two_p, s.b() / &two_p, s.c() / &two_p]);
        assert!(i.coords().iter().all(Rational::is_positive));
    }

    #[test]
    fn radius_data_for_345() {
        let set = CenterSet::new(&shape(5, 4, 3));
        assert_eq!(set.r2_circum, q(25, 4));
        assert_eq!(set.r2_in, q(1, 1));
        assert_eq!(set.r2_ex, [q(36, 1), q(9, 1), q(4, 1)]);
        assert_eq!(set.rr_in, q(5, 2));
        assert_eq!(set.rr_ex[0], q(15, 1));
    }

    #[test]
    fn midpoint_examples() {
        let m = midpoint(&BaryPoint::a(), &BaryPoint::b()).unwrap();
        assert_eq!(m, pt(q(1, 2), q(1, 2), q(0, 1)));
        let p = pt(q(2, 7), q(3, 7), q(2, 7));
        assert_eq!(midpoint(&p, &p).unwrap(), p);
        let s = TriangleShape::new(q(9, 2), q(4, 1), q(3, 1)).unwrap();
        let mbc = midpoint(&BaryPoint::b(), &BaryPoint::c()).unwrap();
        assert_eq!(dist2(&metric_kh(&s), &mbc, &BaryPoint::b()).unwrap(), s.a().square() / q(4, 1));
        let d = BaryPoint::direction(&BaryPoint::a(), &BaryPoint::b()).unwrap();
        assert_eq!(midpoint(&d, &p), Err(GeometryError::InfiniteMisuse));
    }

    #[test]
    fn foot_examples() {
        let s = shape(5, 4, 3);
        let (a, b, c) = (BaryPoint::a(), BaryPoint::b(), BaryPoint::c());
        let foot = foot_of_perpendicular(&s, &a, &b, &c).unwrap();
        assert_eq!(foot, pt(q(0, 1), q(16, 25), q(9, 25)));
        let on = pt(q(0, 1), q(1, 3), q(2, 3));
        assert_eq!(foot_of_perpendicular(&s, &on, &b, &c).unwrap(), on);
        assert_eq!(foot_of_perpendicular(&s, &a, &b, &b), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn foot_of_h_on_bc_lies_on_nine_point_circle_form() {
        let s = shape(13, 14, 15);
        let k = metric_kh(&s);
        let h = orthocenter(&s);
        let ha = foot_of_perpendicular(&s, &h, &BaryPoint::b(), &BaryPoint::c()).unwrap();
        assert_eq!(k.form(&ha, &ha), k.form(&third(), &ha) * q(3, 2));
        assert_eq!(k.form(&ha, &ha), k.form(&ha, &BaryPoint::b()));
        assert_eq!(k.form(&ha, &ha), k.form(&ha, &BaryPoint::c()));
    }
}
