//! Metric matrices and the products built on them.
//!
//! A metric matrix `K` turns barycentric displacements into Euclidean
//! quantities: `PQ · RT = (Q − P) K (T − R)ᵀ`. Any two metric matrices of the
//! same triangle differ by a member of the gauge family `f(m, n, l)`, which
//! annihilates every displacement (coordinates summing to zero).

use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::kernel::point::{det3, difference, is_zero3, BaryPoint, Triple};
use crate::kernel::shape::TriangleShape;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricMatrix {
    entries: [[Rational; 3]; 3],
}

impl MetricMatrix {
    /// Errors unless `entries` is symmetric.
    pub fn new(entries: [[Rational; 3]; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in (i + 1)..3 {
                if entries[i][j] != entries[j][i] {
                    return Err(GeometryError::NotSymmetric(i, j));
                }
            }
        }
        Ok(MetricMatrix { entries })
    }

    pub fn diagonal(d0: Rational, d1: Rational, d2: Rational) -> Self {
        let z = Rational::zero;
        MetricMatrix { entries: [[d0, z(), z()], [z(), d1, z()], [z(), z(), d2]] }
    }

    pub fn entries(&self) -> &[[Rational; 3]; 3] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `x K yᵀ` on raw triples.
    pub fn bilinear(&self, x: &Triple, y: &Triple) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..3 {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..3 {
                if !y[j].is_zero() && !self.entries[i][j].is_zero() {
                    row += &(&self.entries[i][j] * &y[j]);
                }
            }
            acc += &(&x[i] * &row);
        }
        acc
    }

    /// `X K Yᵀ` on points, the building block of every quadratic-form identity.
    pub fn form(&self, x: &BaryPoint, y: &BaryPoint) -> Rational {
        self.bilinear(x.coords(), y.coords())
    }

    /// Row vector `X K`.
    pub fn row(&self, x: &Triple) -> Triple {
        let col = |j: usize| -> Rational { (0..3).map(|i| &x[i] * &self.entries[i][j]).sum() };
        [col(0), col(1), col(2)]
    }

    fn zip(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let e = |i: usize, j: usize| op(&self.entries[i][j], &other.entries[i][j]);
        MetricMatrix {
            entries: [
                [e(0, 0), e(0, 1), e(0, 2)],
                [e(1, 0), e(1, 1), e(1, 2)],
                [e(2, 0), e(2, 1), e(2, 2)],
            ],
        }
    }
}

impl Add for &MetricMatrix {
    type Output = MetricMatrix;
    fn add(self, rhs: &MetricMatrix) -> MetricMatrix {
        self.zip(rhs, |x, y| x + y)
    }
}

impl Sub for &MetricMatrix {
    type Output = MetricMatrix;
    fn sub(self, rhs: &MetricMatrix) -> MetricMatrix {
        self.zip(rhs, |x, y| x - y)
    }
}

/// `K_H = diag(S_A, S_B, S_C)`, the canonical metric matrix.
pub fn metric_kh(shape: &TriangleShape) -> MetricMatrix {
    MetricMatrix::diagonal(shape.sa().clone(), shape.sb().clone(), shape.sc().clone())
}

/// `K_O = −½ [[0, c², b²], [c², 0, a²], [b², a², 0]]`; depends only on the
/// triangle, not on any Cartesian placement.
pub fn metric_ko(shape: &TriangleShape) -> MetricMatrix {
    let h = |x: &Rational| -x.square().half();
    let (a, b, c) = (h(shape.a()), h(shape.b()), h(shape.c()));
    let z = Rational::zero;
    MetricMatrix {
        entries: [[z(), c.clone(), b.clone()], [c, z(), a.clone()], [b, a, z()]],
    }
}

/// The gauge matrix `f(m, n, l) = ½ (m n l)ᵀ(1 1 1) + ½ (1 1 1)ᵀ(m n l)`.
pub fn gauge(m: &Rational, n: &Rational, l: &Rational) -> MetricMatrix {
    let v = [m, n, l];
    let e = |i: usize, j: usize| (v[i] + v[j]).half();
    MetricMatrix {
        entries: [
            [e(0, 0), e(0, 1), e(0, 2)],
            [e(1, 0), e(1, 1), e(1, 2)],
            [e(2, 0), e(2, 1), e(2, 2)],
        ],
    }
}

/// True iff `k1 − k2` belongs to the gauge family: every entry of the
/// difference is the mean of the two matching diagonal entries.
pub fn is_gauge_equivalent(k1: &MetricMatrix, k2: &MetricMatrix) -> bool {
    let d = k1 - k2;
    (0..3).all(|i| {
        (0..3).all(|j| d.entries[i][j] == (&d.entries[i][i] + &d.entries[j][j]).half())
    })
}

/// `PQ · RT = (Q − P) K (T − R)ᵀ`.
///
/// Each pair must be two finite points or two points at infinity (then the
/// difference of the two directions is used).
pub fn inner_product(
    k: &MetricMatrix,
    p: &BaryPoint,
    q: &BaryPoint,
    r: &BaryPoint,
    t: &BaryPoint,
) -> Result<Rational> {
    let u = difference(p, q)?;
    let v = difference(r, t)?;
    Ok(k.bilinear(&u, &v))
}

/// Dot product of two directions given as points at infinity.
pub fn inner_product_directions(k: &MetricMatrix, u: &BaryPoint, v: &BaryPoint) -> Result<Rational> {
    if u.is_finite() || v.is_finite() {
        return Err(GeometryError::InfiniteMisuse);
    }
    Ok(k.bilinear(u.coords(), v.coords()))
}

/// `|PQ|² = (P − Q) K (P − Q)ᵀ` for finite points.
pub fn dist2(k: &MetricMatrix, p: &BaryPoint, q: &BaryPoint) -> Result<Rational> {
    p.require_finite()?;
    q.require_finite()?;
    let d = difference(q, p)?;
    Ok(k.bilinear(&d, &d))
}

/// `PQ ⊥ RT` exactly.
pub fn is_perpendicular(
    k: &MetricMatrix,
    p: &BaryPoint,
    q: &BaryPoint,
    r: &BaryPoint,
    t: &BaryPoint,
) -> Result<bool> {
    let u = difference(p, q)?;
    let v = difference(r, t)?;
    if is_zero3(&u) || is_zero3(&v) {
        return Err(GeometryError::ZeroVector);
    }
    Ok(k.bilinear(&u, &v).is_zero())
}

/// `[P; Q; R]`, the determinant with the three coordinate triples as columns.
/// For finite points this is the signed area ratio `S_PQR / S_ABC`.
pub fn bracket(p: &BaryPoint, q: &BaryPoint, r: &BaryPoint) -> Rational {
    det3(p.coords(), q.coords(), r.coords())
}

/// `[P; Q; T − R]`: the cross product `PQ × RT` divided by `2·S_ABC`.
/// Positive orientation is that of `A, B, C`.
pub fn cross_product_coeff(
    p: &BaryPoint,
    q: &BaryPoint,
    r: &BaryPoint,
    t: &BaryPoint,
) -> Result<Rational> {
    let u = difference(p, q)?;
    let v = difference(r, t)?;
    if p.is_finite() {
        Ok(det3(p.coords(), q.coords(), &v))
    } else {
        // det(X, u, v) is the same for every finite X when u, v are displacements.
        Ok(det3(BaryPoint::a().coords(), &u, &v))
    }
}
