//! Floating-point Cartesian reference.
//!
//! The triangle is placed in the plane, barycentric points are mapped to
//! `(x, y)` with the coordinate transformation, and every quantity is
//! recomputed with ordinary planar formulas (dot products, 2D cross products,
//! shoelace areas). Nothing here calls into the exact metric-matrix code, so
//! agreement between the two is meaningful.

use std::f64::consts::TAU;

use rand::Rng;
use serde::Serialize;

use crate::centers::CenterSet;
use crate::error::{GeometryError, Result};
use crate::kernel::{
    bracket, cot_angle, cross_product_coeff, dist2, inner_product, metric_kh, BaryPoint,
    TriangleShape, Vertex,
};
use crate::rational::Rational;
use crate::sampling::{random_point, random_point_avoiding, rng_from_seed};

/// Default relative tolerance for kernel/oracle agreement.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Cotangents beyond this magnitude are not compared: the float oracle's
/// relative error grows like `|cot| · ε` and stops being a reference.
pub const COT_CONDITION_LIMIT: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

impl CartesianPoint {
    pub fn new(x: f64, y: f64) -> Self {
        CartesianPoint { x, y }
    }

    fn sub(self, o: CartesianPoint) -> CartesianPoint {
        CartesianPoint::new(self.x - o.x, self.y - o.y)
    }

    fn dot(self, o: CartesianPoint) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 2D cross product.
    fn cross(self, o: CartesianPoint) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Placement {
    /// `B = (0, 0)`, `C = (a, 0)`, `A` in the upper half-plane.
    Canonical,
    /// Canonical followed by a seeded rotation and translation.
    Random(u64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Embedding {
    pub a: CartesianPoint,
    pub b: CartesianPoint,
    pub c: CartesianPoint,
    pub placement: Placement,
}

pub fn embed(shape: &TriangleShape, placement: Placement) -> Embedding {
    let a = shape.a().to_f64();
    let area = shape.s2().to_f64().sqrt();
    let va = CartesianPoint::new((shape.sb() / shape.a()).to_f64(), 2.0 * area / a);
    let vb = CartesianPoint::new(0.0, 0.0);
    let vc = CartesianPoint::new(a, 0.0);
    match placement {
        Placement::Canonical => Embedding { a: va, b: vb, c: vc, placement },
        Placement::Random(seed) => {
            let mut rng = rng_from_seed(seed);
            let theta: f64 = rng.gen_range(0.0..TAU);
            let (tx, ty): (f64, f64) = (rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
            let (sin, cos) = theta.sin_cos();
            let m = |p: CartesianPoint| {
                CartesianPoint::new(cos * p.x - sin * p.y + tx, sin * p.x + cos * p.y + ty)
            };
            Embedding { a: m(va), b: m(vb), c: m(vc), placement }
        }
    }
}

impl Embedding {
    pub fn vertex(&self, v: Vertex) -> CartesianPoint {
        match v {
            Vertex::A => self.a,
            Vertex::B => self.b,
            Vertex::C => self.c,
        }
    }

    /// `|BC|, |CA|, |AB|`.
    pub fn side_lengths(&self) -> [f64; 3] {
        let len = |p: CartesianPoint, q: CartesianPoint| oracle_dist2(p, q).sqrt();
        [len(self.b, self.c), len(self.c, self.a), len(self.a, self.b)]
    }

    /// Twice the signed area of `ABC`; positive for counterclockwise order.
    pub fn double_area(&self) -> f64 {
        self.b.sub(self.a).cross(self.c.sub(self.a))
    }
}

fn coords_f64(p: &BaryPoint) -> [f64; 3] {
    p.coords().clone().map(|c| c.to_f64())
}

/// `(x, y)` of a finite point: `Σ coordᵢ · vertexᵢ`.
pub fn to_cartesian(emb: &Embedding, p: &BaryPoint) -> Result<CartesianPoint> {
    p.require_finite()?;
    Ok(combine(emb, coords_f64(p)))
}

/// Cartesian vector of a point at infinity (a displacement).
///
/// Built on the edge vectors `B − A`, `C − A`, so a large translation of the
/// triangle does not cancel catastrophically.
pub fn to_cartesian_direction(emb: &Embedding, u: &BaryPoint) -> Result<CartesianPoint> {
    if u.is_finite() {
        return Err(GeometryError::InfiniteMisuse);
    }
    let [_, wb, wc] = coords_f64(u);
    let (ab, ac) = (emb.b.sub(emb.a), emb.c.sub(emb.a));
    Ok(CartesianPoint::new(wb * ab.x + wc * ac.x, wb * ab.y + wc * ac.y))
}

fn combine(emb: &Embedding, w: [f64; 3]) -> CartesianPoint {
    CartesianPoint::new(
        w[0] * emb.a.x + w[1] * emb.b.x + w[2] * emb.c.x,
        w[0] * emb.a.y + w[1] * emb.b.y + w[2] * emb.c.y,
    )
}

/// Barycentric coordinates of `pt` by Cramer's rule (signed area ratios).
pub fn from_cartesian(emb: &Embedding, pt: CartesianPoint) -> Result<[f64; 3]> {
    let total = emb.double_area();
    if total == 0.0 || !total.is_finite() {
        return Err(GeometryError::DegenerateEmbedding);
    }
    let area2 = |p: CartesianPoint, q: CartesianPoint, r: CartesianPoint| q.sub(p).cross(r.sub(p));
    Ok([
        area2(pt, emb.b, emb.c) / total,
        area2(emb.a, pt, emb.c) / total,
        area2(emb.a, emb.b, pt) / total,
    ])
}

pub type Matrix3 = [[f64; 3]; 3];

/// `SᵀS` with `S = [[x_A, x_B, x_C], [y_A, y_B, y_C], [1, 1, 1]]`.
pub fn oracle_metric(emb: &Embedding) -> Matrix3 {
    let v = [emb.a, emb.b, emb.c];
    let mut m = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = v[i].x * v[j].x + v[i].y * v[j].y + 1.0;
        }
    }
    m
}

/// Subtract the gauge matrix built from the diagonal, leaving the unique
/// zero-diagonal representative of the gauge class.
pub fn gauge_reduce(m: &Matrix3) -> Matrix3 {
    let mut out = *m;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] -= (m[i][i] + m[j][j]) / 2.0;
        }
    }
    out
}

/// Largest violation of the gauge-membership rule `D[i][j] = (D[i][i] + D[j][j])/2`
/// for `D = m1 − m2`.
pub fn gauge_residual(m1: &Matrix3, m2: &Matrix3) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let d = |r: usize, c: usize| m1[r][c] - m2[r][c];
            worst = worst.max((d(i, j) - (d(i, i) + d(j, j)) / 2.0).abs());
        }
    }
    worst
}

/// [`gauge_residual`] between `SᵀS` and `K_H`, scaled by the largest `|K_H|` entry (at least 1).
pub fn metric_residual(shape: &TriangleShape, emb: &Embedding) -> f64 {
    let k = metric_kh(shape);
    let mut kh = [[0.0; 3]; 3];
    let mut scale = 1.0f64;
    for (i, row) in kh.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = k.get(i, j).to_f64();
            scale = scale.max(x.abs());
        }
    }
    gauge_residual(&oracle_metric(emb), &kh) / scale
}

pub fn oracle_dist2(p: CartesianPoint, q: CartesianPoint) -> f64 {
    let d = q.sub(p);
    d.dot(d)
}

/// `PQ · RT`.
pub fn oracle_dot(p: CartesianPoint, q: CartesianPoint, r: CartesianPoint, t: CartesianPoint) -> f64 {
    q.sub(p).dot(t.sub(r))
}

/// `PQ × RT` (z-component).
pub fn oracle_cross(p: CartesianPoint, q: CartesianPoint, r: CartesianPoint, t: CartesianPoint) -> f64 {
    q.sub(p).cross(t.sub(r))
}

/// Signed area of `PQR`, positive when counterclockwise.
pub fn oracle_area(p: CartesianPoint, q: CartesianPoint, r: CartesianPoint) -> f64 {
    q.sub(p).cross(r.sub(p)) / 2.0
}

/// Cotangent of the angle at `p` from `q` to `r`.
pub fn oracle_cot(q: CartesianPoint, p: CartesianPoint, r: CartesianPoint) -> f64 {
    let (u, v) = (q.sub(p), r.sub(p));
    u.dot(v) / u.cross(v)
}

/// Squared distance from `p` to the line through `q` and `r`.
pub fn oracle_line_dist2(p: CartesianPoint, q: CartesianPoint, r: CartesianPoint) -> f64 {
    let d = r.sub(q);
    let c = d.cross(p.sub(q));
    c * c / d.dot(d)
}

/// `|kernel − oracle| ≤ rel_tol · max(1, |oracle|)`.
pub fn compare(kernel_value: &Rational, oracle_value: f64, rel_tol: f64) -> bool {
    compare_f64(kernel_value.to_f64(), oracle_value, rel_tol)
}

pub fn compare_f64(kernel_value: f64, oracle_value: f64, rel_tol: f64) -> bool {
    relative_error(kernel_value, oracle_value) <= rel_tol
}

pub fn relative_error(kernel_value: f64, oracle_value: f64) -> f64 {
    (kernel_value - oracle_value).abs() / oracle_value.abs().max(1.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub quantity: &'static str,
    pub kernel: f64,
    pub oracle: f64,
}

/// Outcome of [`cross_validate`].
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct OracleReport {
    pub comparisons: usize,
    pub max_rel_error: f64,
    pub mismatches: Vec<Mismatch>,
    /// Cotangent queries left out as degenerate or ill-conditioned.
    pub skipped: usize,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, quantity: &'static str, kernel: f64, oracle: f64, tol: f64) {
        self.comparisons += 1;
        let err = relative_error(kernel, oracle);
        // NaN must count as a failure.
        if err.is_nan() || err > tol {
            self.mismatches.push(Mismatch { quantity, kernel, oracle });
        }
        if err.is_finite() {
            self.max_rel_error = self.max_rel_error.max(err);
        } else {
            self.max_rel_error = f64::INFINITY;
        }
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.comparisons += other.comparisons;
        self.skipped += other.skipped;
        self.max_rel_error = self.max_rel_error.max(other.max_rel_error);
        self.mismatches.extend(other.mismatches);
    }
}

/// Compare the exact kernel against the Cartesian oracle on one shape.
///
/// Runs `queries` random point configurations (squared distance, inner
/// product, bracket, cross product, oriented-angle cotangent) plus the
/// center and radius data, on the given placement.
pub fn cross_validate(
    shape: &TriangleShape,
    placement: Placement,
    seed: u64,
    queries: usize,
    rel_tol: f64,
) -> OracleReport {
    let emb = embed(shape, placement);
    let k = metric_kh(shape);
    let area2 = emb.double_area();
    let s = shape.s2().to_f64().sqrt();
    let cart = |p: &BaryPoint| to_cartesian(&emb, p).expect("finite point");
    let mut rep = OracleReport::default();
    let mut rng = rng_from_seed(seed);

    for _ in 0..queries {
        let p = random_point(&mut rng);
        let q = random_point_avoiding(&mut rng, &[&p]);
        let r = random_point_avoiding(&mut rng, &[&p, &q]);
        let t = random_point_avoiding(&mut rng, &[&r]);
        let (cp, cq, cr, ct) = (cart(&p), cart(&q), cart(&r), cart(&t));

        let d2 = dist2(&k, &p, &q).expect("finite");
        rep.record("dist2", d2.to_f64(), oracle_dist2(cp, cq), rel_tol);

        let ip = inner_product(&k, &p, &q, &r, &t).expect("finite pairs");
        rep.record("inner_product", ip.to_f64(), oracle_dot(cp, cq, cr, ct), rel_tol);

        let br = bracket(&p, &q, &r);
        rep.record("bracket", br.to_f64(), 2.0 * oracle_area(cp, cq, cr) / area2, rel_tol);

        let cross = cross_product_coeff(&p, &q, &r, &t).expect("finite pairs");
        rep.record("cross_product", 2.0 * s * cross.to_f64(), oracle_cross(cp, cq, cr, ct), rel_tol);

        // The cotangent blows up near collinear triples; take the arms as
        // directions so the oracle does not lose digits to the placement.
        let cot = cot_angle(shape, &q, &p, &r).expect("distinct points");
        if cot.is_degenerate() || cot.to_f64().abs() > COT_CONDITION_LIMIT {
            rep.skipped += 1;
        } else {
            let arm = |x: &BaryPoint| {
                let d = BaryPoint::direction(&p, x).expect("distinct points");
                to_cartesian_direction(&emb, &d).expect("direction")
            };
            let origin = CartesianPoint::new(0.0, 0.0);
            rep.record("cot_angle", cot.to_f64(), oracle_cot(arm(&q), origin, arm(&r)), rel_tol);
        }
    }

    rep.record("metric_gauge", 0.0, metric_residual(shape, &emb), rel_tol);

    let set = CenterSet::new(shape);
    let verts = Vertex::ALL.map(|v| emb.vertex(v));
    let co = cart(&set.circumcenter);
    for v in verts {
        rep.record("circumradius2", set.r2_circum.to_f64(), oracle_dist2(co, v), rel_tol);
    }
    // Incircle and excircles: squared distance from the center to each side line.
    let ci = cart(&set.incenter);
    for w in Vertex::ALL {
        let (y, z) = (emb.vertex(w.next()), emb.vertex(w.prev()));
        rep.record("inradius2", set.r2_in.to_f64(), oracle_line_dist2(ci, y, z), rel_tol);
        for v in Vertex::ALL {
            let ce = cart(set.excenter(v));
            rep.record("exradius2", set.r2_ex[v.index()].to_f64(), oracle_line_dist2(ce, y, z), rel_tol);
        }
    }
    // Orthocenter: the altitude from each vertex is perpendicular to the
    // opposite side. Compared as a cosine, since H can be far away.
    let ch = cart(&set.orthocenter);
    for w in Vertex::ALL {
        let (x, y, z) = (emb.vertex(w), emb.vertex(w.next()), emb.vertex(w.prev()));
        let norms = (oracle_dist2(x, ch) * oracle_dist2(y, z)).sqrt();
        let cos = if norms > 0.0 { oracle_dot(x, ch, y, z) / norms } else { 0.0 };
        rep.record("altitude_cos", 0.0, cos, rel_tol);
    }
    rep
}
