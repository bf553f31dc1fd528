use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::rational::Rational;

/// One of the reference triangle's vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        match self {
            Vertex::A => 0,
            Vertex::B => 1,
            Vertex::C => 2,
        }
    }

    /// The next vertex in the cycle A → B → C → A.
    pub fn next(self) -> Vertex {
        Vertex::ALL[(self.index() + 1) % 3]
    }

    pub fn prev(self) -> Vertex {
        Vertex::ALL[(self.index() + 2) % 3]
    }
}

/// Reference triangle known only through its (rational) side lengths.
///
/// `a = |BC|`, `b = |CA|`, `c = |AB|`. The Conway symbols, the squared area
/// and the semiperimeter are computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleShape {
    a: Rational,
    b: Rational,
    c: Rational,
    sa: Rational,
    sb: Rational,
    sc: Rational,
    s2: Rational,
    p: Rational,
}

/// `(S_A, S_B, S_C)` for side lengths `a, b, c`.
pub fn conway(a: &Rational, b: &Rational, c: &Rational) -> Result<(Rational, Rational, Rational)> {
    check_sides(a, b, c)?;
    let (a2, b2, c2) = (a.square(), b.square(), c.square());
    let sa = (&b2 + &c2 - &a2).half();
    let sb = (&c2 + &a2 - &b2).half();
    let sc = (&a2 + &b2 - &c2).half();
    Ok((sa, sb, sc))
}

fn check_sides(a: &Rational, b: &Rational, c: &Rational) -> Result<()> {
    for (name, side) in [("a", a), ("b", b), ("c", c)] {
        if !side.is_positive() {
            return Err(GeometryError::DegenerateTriangle(format!(
                "side {name} = {side} is not positive"
            )));
        }
    }
    let checks = [
        ("a", a, "b + c", b + c),
        ("b", b, "c + a", c + a),
        ("c", c, "a + b", a + b),
    ];
    for (name, side, other, sum) in checks {
        if side >= &sum {
            return Err(GeometryError::DegenerateTriangle(format!(
                "triangle inequality fails: {name} = {side} is not less than {other} = {sum}"
            )));
        }
    }
    Ok(())
}

impl TriangleShape {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let (sa, sb, sc) = conway(&a, &b, &c)?;
        let s2 = (&sb * &sc + &sc * &sa + &sa * &sb) / Rational::from(4);
        debug_assert!(s2.is_positive());
        let p = (&a + &b + &c).half();
        Ok(TriangleShape { a, b, c, sa, sb, sc, s2, p })
    }

    /// Convenience constructor from integer sides.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Side opposite the given vertex.
    pub fn side(&self, v: Vertex) -> &Rational {
        match v {
            Vertex::A => &self.a,
            Vertex::B => &self.b,
            Vertex::C => &self.c,
        }
    }

    pub fn sides(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn sa(&self) -> &Rational {
        &self.sa
    }

    pub fn sb(&self) -> &Rational {
        &self.sb
    }

    pub fn sc(&self) -> &Rational {
        &self.sc
    }

    /// Conway symbol at the given vertex.
    pub fn conway_at(&self, v: Vertex) -> &Rational {
        match v {
            Vertex::A => &self.sa,
            Vertex::B => &self.sb,
            Vertex::C => &self.sc,
        }
    }

    /// Squared area `S²`.
    pub fn s2(&self) -> &Rational {
        &self.s2
    }

    /// Semiperimeter.
    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// The same shape scaled by `t > 0`.
    pub fn scaled(&self, t: &Rational) -> Result<Self> {
        Self::new(&self.a * t, &self.b * t, &self.c * t)
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    pub fn is_scalene(&self) -> bool {
        self.a != self.b && self.b != self.c && self.c != self.a
    }

    /// True when some angle is right (a Conway symbol vanishes).
    pub fn is_right(&self) -> bool {
        self.sa.is_zero() || self.sb.is_zero() || self.sc.is_zero()
    }
}

/// `S² = (S_B·S_C + S_C·S_A + S_A·S_B)/4`.
pub fn squared_area(shape: &TriangleShape) -> Rational {
    shape.s2.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn heron_s2(a: &Rational, b: &Rational, c: &Rational) -> Rational {
        let p = (a + b + c).half();
        &p * (&p - a) * (&p - b) * (&p - c)
    }

    #[test]
    fn conway_examples() {
        let i = Rational::from;
        assert_eq!(conway(&i(2), &i(2), &i(2)).unwrap(), (i(2), i(2), i(2)));
        assert_eq!(conway(&i(5), &i(4), &i(3)).unwrap(), (i(0), i(9), i(16)));
        assert_eq!(conway(&i(6), &i(5), &i(5)).unwrap(), (i(7), i(18), i(18)));
    }

    #[test]
    fn squared_area_examples() {
        let s = TriangleShape::from_ints(5, 4, 3).unwrap();
        assert_eq!(squared_area(&s), q(36, 1));
        let s = TriangleShape::from_ints(2, 2, 2).unwrap();
        assert_eq!(squared_area(&s), q(3, 1));
        let s = TriangleShape::from_ints(1, 1, 1).unwrap();
        assert_eq!(squared_area(&s), q(3, 16));
    }

    #[test]
    fn squared_area_matches_heron() {
        for (a, b, c) in [(q(7, 2), q(3, 1), q(9, 4)), (q(13, 1), q(14, 1), q(15, 1))] {
            let s = TriangleShape::new(a.clone(), b.clone(), c.clone()).unwrap();
            assert_eq!(s.s2(), &heron_s2(&a, &b, &c));
        }
    }

    #[test]
    fn rejects_degenerate_sides() {
        let err = TriangleShape::from_ints(1, 1, 3).unwrap_err();
        assert!(matches!(err, GeometryError::DegenerateTriangle(ref m) if m.contains("triangle inequality")));
        assert!(TriangleShape::from_ints(1, 1, 2).is_err());
        assert!(TriangleShape::from_ints(0, 1, 1).is_err());
        assert!(TriangleShape::new(q(-1, 2), q(1, 1), q(1, 1)).is_err());
    }

    #[test]
    fn side_relations() {
        let s = TriangleShape::new(q(7, 3), q(5, 2), q(3, 1)).unwrap();
        assert_eq!(s.a().square(), s.sb() + s.sc());
        assert_eq!(s.b().square(), s.sc() + s.sa());
        assert_eq!(s.c().square(), s.sa() + s.sb());
        assert_eq!(s.p(), &q(47, 12));
    }
}
