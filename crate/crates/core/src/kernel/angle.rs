use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::kernel::metric::{bracket, metric_kh};
use crate::kernel::point::{difference, is_zero3, BaryPoint};
use crate::kernel::shape::TriangleShape;
use crate::rational::Rational;

/// Exact cotangent of an oriented angle `∠QPR`:
/// `cot = ip / (2·S·bracket)` with `S = √s2`.
///
/// Only [`AngleCot::to_f64`] takes the square root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AngleCot {
    ip: Rational,
    bracket: Rational,
    s2: Rational,
}

impl AngleCot {
    /// `(P − Q) K (P − R)ᵀ`.
    pub fn ip(&self) -> &Rational {
        &self.ip
    }

    /// `[P; Q; R]`.
    pub fn bracket(&self) -> &Rational {
        &self.bracket
    }

    pub fn s2(&self) -> &Rational {
        &self.s2
    }

    /// Collinear configuration: the angle is 0 or π and the cotangent is unbounded.
    pub fn is_degenerate(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Exact right angle.
    pub fn is_right(&self) -> bool {
        self.ip.is_zero() && !self.bracket.is_zero()
    }

    /// `2·S·cot = ip / bracket`, rational whenever the angle is not degenerate.
    pub fn scaled(&self) -> Option<Rational> {
        (!self.bracket.is_zero()).then(|| &self.ip / &self.bracket)
    }

    /// Floating-point cotangent. Degenerate angles give ±∞ (or NaN when `ip`
    /// vanishes too, which cannot happen for distinct points).
    pub fn to_f64(&self) -> f64 {
        let s = self.s2.to_f64().sqrt();
        if self.bracket.is_zero() {
            return match self.ip.signum() {
                1 => f64::INFINITY,
                -1 => f64::NEG_INFINITY,
                _ => f64::NAN,
            };
        }
        // ip / bracket first keeps the value exact up to the final division.
        (&self.ip / &self.bracket).to_f64() / (2.0 * s)
    }

    /// Compares two cotangents of the same reference triangle exactly.
    ///
    /// Cross-multiplies `ip₁·bracket₂` against `ip₂·bracket₁`, flipping the
    /// result when the brackets have opposite signs. Returns `None` for
    /// degenerate angles or when the two values come from triangles with
    /// different areas.
    pub fn cmp_cot(&self, other: &AngleCot) -> Option<Ordering> {
        if self.is_degenerate() || other.is_degenerate() || self.s2 != other.s2 {
            return None;
        }
        let lhs = &self.ip * &other.bracket;
        let rhs = &other.ip * &self.bracket;
        let ord = lhs.cmp(&rhs);
        if self.bracket.signum() * other.bracket.signum() < 0 {
            Some(ord.reverse())
        } else {
            Some(ord)
        }
    }
}

/// Cotangent of the oriented angle `∠QPR` at vertex `P`, using `K_H`.
pub fn cot_angle(
    shape: &TriangleShape,
    q: &BaryPoint,
    p: &BaryPoint,
    r: &BaryPoint,
) -> Result<AngleCot> {
    for x in [q, p, r] {
        x.require_finite()?;
    }
    let pq = difference(q, p)?;
    let pr = difference(r, p)?;
    if is_zero3(&pq) || is_zero3(&pr) {
        return Err(GeometryError::ZeroVector);
    }
    let k = metric_kh(shape);
    Ok(AngleCot {
        ip: k.bilinear(&pq, &pr),
        bracket: bracket(p, q, r),
        s2: shape.s2().clone(),
    })
}
