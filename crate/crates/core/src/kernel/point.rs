use std::fmt;

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::kernel::shape::Vertex;
use crate::rational::Rational;

/// A raw coordinate triple; differences of finite points live here.
pub type Triple = [Rational; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PointKind {
    /// Coordinates sum to 1.
    Finite,
    /// Coordinates sum to 0; a direction class of parallel lines.
    Infinite,
}

/// A point of the projective plane in barycentric coordinates relative to
/// the reference triangle.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BaryPoint {
    coords: Triple,
    kind: PointKind,
}

pub(crate) fn zero3() -> Triple {
    [Rational::zero(), Rational::zero(), Rational::zero()]
}

pub(crate) fn sum3(t: &Triple) -> Rational {
    &t[0] + &t[1] + &t[2]
}

pub(crate) fn sub3(x: &Triple, y: &Triple) -> Triple {
    [&x[0] - &y[0], &x[1] - &y[1], &x[2] - &y[2]]
}

pub(crate) fn add3(x: &Triple, y: &Triple) -> Triple {
    [&x[0] + &y[0], &x[1] + &y[1], &x[2] + &y[2]]
}

pub(crate) fn scale3(t: &Rational, x: &Triple) -> Triple {
    [t * &x[0], t * &x[1], t * &x[2]]
}

pub(crate) fn is_zero3(t: &Triple) -> bool {
    t.iter().all(Rational::is_zero)
}

/// `x × y` on coordinate triples.
pub(crate) fn cross3(x: &Triple, y: &Triple) -> Triple {
    [
        &x[1] * &y[2] - &x[2] * &y[1],
        &x[2] * &y[0] - &x[0] * &y[2],
        &x[0] * &y[1] - &x[1] * &y[0],
    ]
}

pub(crate) fn det3(x: &Triple, y: &Triple, z: &Triple) -> Rational {
    let c = cross3(y, z);
    &x[0] * &c[0] + &x[1] * &c[1] + &x[2] * &c[2]
}

impl BaryPoint {
    /// A finite point; the coordinates must already sum to 1.
    pub fn finite(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        let coords = [alpha, beta, gamma];
        if sum3(&coords) != Rational::one() {
            return Err(GeometryError::InvalidPoint(format!(
                "finite coordinates {} must sum to 1",
                fmt_triple(&coords)
            )));
        }
        Ok(BaryPoint { coords, kind: PointKind::Finite })
    }

    /// A point at infinity; the coordinates must sum to 0 and not all vanish.
    pub fn infinite(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        let coords = [alpha, beta, gamma];
        if !sum3(&coords).is_zero() {
            return Err(GeometryError::InvalidPoint(format!(
                "coordinates {} of a point at infinity must sum to 0",
                fmt_triple(&coords)
            )));
        }
        if is_zero3(&coords) {
            return Err(GeometryError::InvalidPoint("all coordinates are zero".into()));
        }
        Ok(BaryPoint { coords, kind: PointKind::Infinite })
    }

    /// Homogeneous coordinates: divided by their sum when it is nonzero,
    /// otherwise kept as a point at infinity.
    pub fn homogeneous(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        let coords = [alpha, beta, gamma];
        if is_zero3(&coords) {
            return Err(GeometryError::InvalidPoint("all coordinates are zero".into()));
        }
        let s = sum3(&coords);
        if s.is_zero() {
            Ok(BaryPoint { coords, kind: PointKind::Infinite })
        } else {
            let inv = s.recip();
            Ok(BaryPoint { coords: scale3(&inv, &coords), kind: PointKind::Finite })
        }
    }

    pub(crate) fn from_finite_unchecked(coords: Triple) -> Self {
        debug_assert_eq!(sum3(&coords), Rational::one());
        BaryPoint { coords, kind: PointKind::Finite }
    }

    pub fn vertex(v: Vertex) -> Self {
        let mut coords = zero3();
        coords[v.index()] = Rational::one();
        BaryPoint { coords, kind: PointKind::Finite }
    }

    pub fn a() -> Self {
        Self::vertex(Vertex::A)
    }

    pub fn b() -> Self {
        Self::vertex(Vertex::B)
    }

    pub fn c() -> Self {
        Self::vertex(Vertex::C)
    }

    pub fn coords(&self) -> &Triple {
        &self.coords
    }

    pub fn alpha(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn beta(&self) -> &Rational {
        &self.coords[1]
    }

    pub fn gamma(&self) -> &Rational {
        &self.coords[2]
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn is_finite(&self) -> bool {
        self.kind == PointKind::Finite
    }

    /// Error unless the point is finite.
    pub fn require_finite(&self) -> Result<&Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(GeometryError::InfiniteMisuse)
        }
    }

    /// Affine combination `Σ wᵢ·Pᵢ` of finite points with weights summing to 1.
    pub fn affine(terms: &[(Rational, &BaryPoint)]) -> Result<Self> {
        let mut coords = zero3();
        let mut total = Rational::zero();
        for (w, p) in terms {
            p.require_finite()?;
            coords = add3(&coords, &scale3(w, &p.coords));
            total += w;
        }
        if total != Rational::one() {
            return Err(GeometryError::InvalidPoint(format!(
                "affine weights sum to {total}, not 1"
            )));
        }
        Ok(BaryPoint::from_finite_unchecked(coords))
    }

    /// The direction `to − from` of a finite pair as a point at infinity;
    /// errors with `ZeroVector` when the points coincide.
    pub fn direction(from: &BaryPoint, to: &BaryPoint) -> Result<Self> {
        let d = difference(from, to)?;
        if is_zero3(&d) {
            return Err(GeometryError::ZeroVector);
        }
        Ok(BaryPoint { coords: d, kind: PointKind::Infinite })
    }

    /// Rescale a point at infinity; finite points only accept `t = 1`.
    pub fn scale_direction(&self, t: &Rational) -> Result<Self> {
        if self.is_finite() || t.is_zero() {
            return Err(GeometryError::InfiniteMisuse);
        }
        Ok(BaryPoint { coords: scale3(t, &self.coords), kind: PointKind::Infinite })
    }
}

/// `to − from`. Both finite gives a displacement; both infinite gives the
/// difference of the two direction vectors. A mix is rejected.
pub fn difference(from: &BaryPoint, to: &BaryPoint) -> Result<Triple> {
    if from.kind != to.kind {
        return Err(GeometryError::InfiniteMisuse);
    }
    Ok(sub3(&to.coords, &from.coords))
}

fn fmt_triple(t: &Triple) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_triple(&self.coords))?;
        if self.kind == PointKind::Infinite {
            f.write_str("∞")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
