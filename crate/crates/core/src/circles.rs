//! Circles as (center, squared radius).
//!
//! The quadratic-form equations of the named circles are available as
//! separate functions (`*_equation`) and agree with [`power_of_point`] for
//! every finite point.

use serde::Serialize;

use crate::centers::CenterSet;
use crate::error::{GeometryError, Result};
use crate::kernel::{dist2, metric_kh, BaryPoint, TriangleShape, Vertex};
use crate::rational::{q, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circle {
    center: BaryPoint,
    radius2: Rational,
}

impl Circle {
    pub fn new(center: BaryPoint, radius2: Rational) -> Result<Self> {
        center.require_finite()?;
        if radius2.is_negative() {
            return Err(GeometryError::InvalidPoint(format!("negative squared radius {radius2}")));
        }
        Ok(Circle { center, radius2 })
    }

    pub fn center(&self) -> &BaryPoint {
        &self.center
    }

    pub fn radius2(&self) -> &Rational {
        &self.radius2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tangency {
    ExternallyTangent,
    InternallyTangent,
    NotTangent,
}

pub fn circumcircle(shape: &TriangleShape) -> Circle {
    CircleSet::new(&CenterSet::new(shape)).circumcircle
}

pub fn nine_point_circle(shape: &TriangleShape) -> Circle {
    CircleSet::new(&CenterSet::new(shape)).nine_point
}

pub fn incircle(shape: &TriangleShape) -> Circle {
    CircleSet::new(&CenterSet::new(shape)).incircle
}

/// Excircle opposite `vertex`.
pub fn excircle(shape: &TriangleShape, vertex: Vertex) -> Circle {
    let set = CenterSet::new(shape);
    let i = vertex.index();
    Circle { center: set.excenters[i].clone(), radius2: set.r2_ex[i].clone() }
}

/// The named circles of one triangle, built from an existing [`CenterSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleSet {
    pub circumcircle: Circle,
    pub nine_point: Circle,
    pub incircle: Circle,
    /// Indexed by the opposite vertex.
    pub excircles: [Circle; 3],
}

impl CircleSet {
    pub fn new(set: &CenterSet) -> Self {
        let circle = |center: &BaryPoint, radius2: &Rational| Circle { center: center.clone(), radius2: radius2.clone() };
        CircleSet {
            circumcircle: circle(&set.circumcenter, &set.r2_circum),
            nine_point: Circle { center: set.nine_point_center.clone(), radius2: &set.r2_circum / q(4, 1) },
            incircle: circle(&set.incenter, &set.r2_in),
            excircles: [0, 1, 2].map(|i| circle(&set.excenters[i], &set.r2_ex[i])),
        }
    }
}

/// `|X center|² − radius²`.
pub fn power_of_point(shape: &TriangleShape, circle: &Circle, x: &BaryPoint) -> Result<Rational> {
    let d2 = dist2(&metric_kh(shape), x, &circle.center)?;
    Ok(d2 - &circle.radius2)
}

/// `X K Xᵀ − 3 G K Xᵀ`.
pub fn circumcircle_equation(shape: &TriangleShape, x: &BaryPoint) -> Result<Rational> {
    x.require_finite()?;
    let k = metric_kh(shape);
    let g = crate::centers::centroid(shape);
    Ok(k.form(x, x) - k.form(&g, x) * q(3, 1))
}

/// `X K Xᵀ − (3/2) G K Xᵀ`.
pub fn nine_point_equation(shape: &TriangleShape, x: &BaryPoint) -> Result<Rational> {
    x.require_finite()?;
    let k = metric_kh(shape);
    let g = crate::centers::centroid(shape);
    Ok(k.form(x, x) - k.form(&g, x) * q(3, 2))
}

/// `X K Xᵀ − 2 I K Xᵀ + ½ I K Iᵀ`.
pub fn incircle_equation(shape: &TriangleShape, x: &BaryPoint) -> Result<Rational> {
    tangent_circle_equation(shape, &crate::centers::incenter(shape), x)
}

/// `X K Xᵀ − 2 I_A K Xᵀ + ½ I_A K I_Aᵀ` and cyclic.
pub fn excircle_equation(shape: &TriangleShape, vertex: Vertex, x: &BaryPoint) -> Result<Rational> {
    tangent_circle_equation(shape, &crate::centers::excenter(shape, vertex), x)
}

fn tangent_circle_equation(shape: &TriangleShape, center: &BaryPoint, x: &BaryPoint) -> Result<Rational> {
    x.require_finite()?;
    let k = metric_kh(shape);
    Ok(k.form(x, x) - k.form(center, x) * q(2, 1) + k.form(center, center).half())
}

/// Tangency of two circles without square roots.
///
/// With `d²` the squared center distance and `u = d² − ρ₁² − ρ₂²`, the
/// circles touch iff `u² = 4ρ₁²ρ₂²`; externally when `u > 0`, internally
/// when `u < 0`.
pub fn classify_tangency(shape: &TriangleShape, c1: &Circle, c2: &Circle) -> Result<Tangency> {
    let d2 = dist2(&metric_kh(shape), &c1.center, &c2.center)?;
    if d2.is_zero() {
        return Err(GeometryError::ConcentricCircles);
    }
    Ok(tangency_from_d2(&d2, &c1.radius2, &c2.radius2))
}

/// The square-root-free tangency test on a squared center distance.
pub fn tangency_from_d2(d2: &Rational, r1: &Rational, r2: &Rational) -> Tangency {
    let u = d2 - r1 - r2;
    if u.square() != r1 * r2 * q(4, 1) {
        Tangency::NotTangent
    } else if u.is_positive() {
        Tangency::ExternallyTangent
    } else if u.is_negative() {
        Tangency::InternallyTangent
    } else {
        // u = 0 with a zero radius: a point circle sitting on the other circle.
        Tangency::ExternallyTangent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::{foot_of_perpendicular, midpoint};

    fn shape(a: i64, b: i64, c: i64) -> TriangleShape {
        TriangleShape::from_ints(a, b, c).unwrap()
    }

    fn pt(a: Rational, b: Rational, c: Rational) -> BaryPoint {
        BaryPoint::finite(a, b, c).unwrap()
    }

    #[test]
    fn circumcircle_examples() {
        let s = shape(5, 4, 3);
        let cc = circumcircle(&s);
        assert_eq!(cc.center(), &pt(q(0, 1), q(1, 2), q(1, 2)));
        assert_eq!(cc.radius2(), &q(25, 4));
        for v in Vertex::ALL {
            let x = BaryPoint::vertex(v);
            assert!(power_of_point(&s, &cc, &x).unwrap().is_zero());
            assert!(circumcircle_equation(&s, &x).unwrap().is_zero());
        }
        let k = metric_kh(&s);
        let a = BaryPoint::a();
        assert_eq!(k.form(&a, &a), *s.sa());
    }

    #[test]
    fn nine_point_circle_examples() {
        let s = shape(13, 14, 15);
        let npc = nine_point_circle(&s);
        let h = crate::centers::orthocenter(&s);
        let mut pts = Vec::new();
        for v in Vertex::ALL {
            let x = BaryPoint::vertex(v);
            let y = BaryPoint::vertex(v.next());
            let z = BaryPoint::vertex(v.prev());
            pts.push(midpoint(&y, &z).unwrap());
            pts.push(foot_of_perpendicular(&s, &h, &y, &z).unwrap());
            pts.push(midpoint(&x, &h).unwrap());
        }
        for p in &pts {
            assert!(power_of_point(&s, &npc, p).unwrap().is_zero(), "{p}");
            assert!(nine_point_equation(&s, p).unwrap().is_zero());
        }
    }

    #[test]
    fn incircle_and_excircle_examples() {
        let s = shape(5, 4, 3);
        let ic = incircle(&s);
        assert_eq!(ic.center(), &pt(q(5, 12), q(1, 3), q(1, 4)));
        assert_eq!(ic.radius2(), &q(1, 1));
        assert_eq!(excircle(&s, Vertex::A).radius2(), &q(36, 1));
        let touch = foot_of_perpendicular(&s, ic.center(), &BaryPoint::b(), &BaryPoint::c()).unwrap();
        assert!(power_of_point(&s, &ic, &touch).unwrap().is_zero());
        assert!(incircle_equation(&s, &touch).unwrap().is_zero());
    }

    #[test]
    fn excircle_touches_all_three_side_lines() {
        let s = shape(13, 14, 15);
        for v in Vertex::ALL {
            let ex = excircle(&s, v);
            for w in Vertex::ALL {
                let (y, z) = (BaryPoint::vertex(w.next()), BaryPoint::vertex(w.prev()));
                let touch = foot_of_perpendicular(&s, ex.center(), &y, &z).unwrap();
                assert!(power_of_point(&s, &ex, &touch).unwrap().is_zero());
                assert!(excircle_equation(&s, v, &touch).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn power_examples() {
        let s = shape(5, 4, 3);
        let ic = incircle(&s);
        assert_eq!(power_of_point(&s, &ic, ic.center()).unwrap(), -q(1, 1));
        assert_eq!(power_of_point(&s, &ic, &BaryPoint::a()).unwrap(), q(1, 1));
        let d = BaryPoint::direction(&BaryPoint::a(), &BaryPoint::b()).unwrap();
        assert_eq!(power_of_point(&s, &ic, &d), Err(GeometryError::InfiniteMisuse));
    }

    #[test]
    fn tangency_examples() {
        let s = shape(5, 4, 3);
        let npc = nine_point_circle(&s);
        assert_eq!(classify_tangency(&s, &npc, &incircle(&s)).unwrap(), Tangency::InternallyTangent);
        let ex = excircle(&s, Vertex::A);
        assert_eq!(
            dist2(&metric_kh(&s), npc.center(), ex.center()).unwrap(),
            q(841, 16)
        );
        assert_eq!(classify_tangency(&s, &npc, &ex).unwrap(), Tangency::ExternallyTangent);
        assert_eq!(classify_tangency(&s, &npc, &npc), Err(GeometryError::ConcentricCircles));

        let one = Rational::one();
        assert_eq!(tangency_from_d2(&q(9, 1), &one, &one), Tangency::NotTangent);
        assert_eq!(tangency_from_d2(&q(4, 1), &one, &one), Tangency::ExternallyTangent);
        assert_eq!(tangency_from_d2(&q(1, 4), &one, &q(1, 4)), Tangency::InternallyTangent);
    }
}
