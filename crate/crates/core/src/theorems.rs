//! Catalog of exact identity checks.
//!
//! Each [`Theorem`] evaluates both sides of a classical identity on a given
//! shape in rational arithmetic and reports the witnesses. There is no
//! tolerance anywhere: a report passes only if the sides agree exactly (or,
//! for the one inequality, if `lhs ≥ rhs`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::centers::{foot_of_perpendicular, midpoint, CenterSet};
use crate::circles::{classify_tangency, power_of_point, tangency_from_d2, CircleSet, Tangency};
use crate::error::{GeometryError, Result};
use crate::kernel::{dist2, metric_kh, scale3, sub3, BaryPoint, MetricMatrix, TriangleShape, Vertex};
use crate::rational::{q, Rational};
use crate::sampling::{random_point, rng_from_seed};

/// Random probes drawn for the universally quantified identities, on top
/// of the fixed probes `A, B, C, G`.
pub const RANDOM_PROBES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    EulerLine,
    CentroidMin,
    HKernel,
    OkoHkh,
    EulerFormula,
    EulerInequality,
    OiaFormula,
    FeuerbachInner,
    FeuerbachOuter,
    MedianRatio,
    AltitudeConcurrency,
    SideRelations,
    VertexProducts,
    IncircleIds,
    NinePointMembership,
}

impl Theorem {
    pub const ALL: [Theorem; 15] = [
        Theorem::EulerLine,
        Theorem::CentroidMin,
        Theorem::HKernel,
        Theorem::OkoHkh,
        Theorem::EulerFormula,
        Theorem::EulerInequality,
        Theorem::OiaFormula,
        Theorem::FeuerbachInner,
        Theorem::FeuerbachOuter,
        Theorem::MedianRatio,
        Theorem::AltitudeConcurrency,
        Theorem::SideRelations,
        Theorem::VertexProducts,
        Theorem::IncircleIds,
        Theorem::NinePointMembership,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::EulerLine => "euler_line",
            Theorem::CentroidMin => "centroid_min",
            Theorem::HKernel => "h_kernel",
            Theorem::OkoHkh => "oko_hkh",
            Theorem::EulerFormula => "euler_formula",
            Theorem::EulerInequality => "euler_inequality",
            Theorem::OiaFormula => "oia_formula",
            Theorem::FeuerbachInner => "feuerbach_inner",
            Theorem::FeuerbachOuter => "feuerbach_outer",
            Theorem::MedianRatio => "median_ratio",
            Theorem::AltitudeConcurrency => "altitude_concurrency",
            Theorem::SideRelations => "side_relations",
            Theorem::VertexProducts => "vertex_products",
            Theorem::IncircleIds => "incircle_ids",
            Theorem::NinePointMembership => "nine_point_membership",
        }
    }

    fn uses_probes(self) -> bool {
        matches!(self, Theorem::CentroidMin | Theorem::HKernel | Theorem::AltitudeConcurrency)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| GeometryError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// Every `lhs[i] == rhs[i]`.
    Equal,
    /// Every `lhs[i] >= rhs[i]`.
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub name: Theorem,
    pub shape: TriangleShape,
    pub passed: bool,
    pub relation: Relation,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
    /// Empty on success; otherwise describes the first failing component.
    pub detail: String,
}

impl TheoremReport {
    fn new(name: Theorem, shape: &TriangleShape, relation: Relation, lhs: Vec<Rational>, rhs: Vec<Rational>) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        let failing = lhs.iter().zip(&rhs).position(|(l, r)| match relation {
            Relation::Equal => l != r,
            Relation::AtLeast => l < r,
        });
        let detail = match failing {
            None => String::new(),
            Some(i) => format!("component {i}: lhs = {}, rhs = {}", lhs[i], rhs[i]),
        };
        TheoremReport {
            name,
            shape: shape.clone(),
            passed: failing.is_none(),
            relation,
            lhs,
            rhs,
            detail,
        }
    }
}

/// `A, B, C, G` followed by [`RANDOM_PROBES`] seeded random points.
pub fn default_probes(seed: u64) -> Vec<BaryPoint> {
    let mut rng = rng_from_seed(seed);
    let mut probes = vec![
        BaryPoint::a(),
        BaryPoint::b(),
        BaryPoint::c(),
        BaryPoint::finite(q(1, 3), q(1, 3), q(1, 3)).expect("centroid"),
    ];
    probes.extend((0..RANDOM_PROBES).map(|_| random_point(&mut rng)));
    probes
}

/// Everything the checks share for one shape.
struct Context<'a> {
    shape: &'a TriangleShape,
    k: MetricMatrix,
    set: CenterSet,
    circles: CircleSet,
}

impl<'a> Context<'a> {
    fn new(shape: &'a TriangleShape) -> Self {
        let set = CenterSet::new(shape);
        let circles = CircleSet::new(&set);
        Context { shape, k: metric_kh(shape), set, circles }
    }

    fn d2(&self, x: &BaryPoint, y: &BaryPoint) -> Rational {
        dist2(&self.k, x, y).expect("finite points")
    }

    fn form(&self, x: &BaryPoint, y: &BaryPoint) -> Rational {
        self.k.form(x, y)
    }
}

fn vertices() -> [BaryPoint; 3] {
    Vertex::ALL.map(BaryPoint::vertex)
}

fn tangency_code(t: Tangency) -> Rational {
    match t {
        Tangency::ExternallyTangent => q(1, 1),
        Tangency::InternallyTangent => q(-1, 1),
        Tangency::NotTangent => q(0, 1),
    }
}

/// Run one catalog entry. `probes` defaults to [`default_probes`] with seed 0.
pub fn check(theorem: Theorem, shape: &TriangleShape, probes: Option<&[BaryPoint]>) -> Result<TheoremReport> {
    let owned;
    let probes = match probes {
        Some(p) => p,
        None => {
            owned = default_probes(0);
            &owned
        }
    };
    for p in probes {
        p.require_finite()?;
    }
    Ok(evaluate(theorem, &Context::new(shape), probes))
}

/// Look up a catalog entry by name and run it.
pub fn check_named(name: &str, shape: &TriangleShape, probes: Option<&[BaryPoint]>) -> Result<TheoremReport> {
    check(name.parse()?, shape, probes)
}

/// Every catalog entry, in catalog order, with probes derived from `seed`.
pub fn run_all(shape: &TriangleShape, seed: u64) -> Vec<TheoremReport> {
    let ctx = Context::new(shape);
    let probes = default_probes(seed);
    Theorem::ALL.iter().map(|&t| evaluate(t, &ctx, &probes)).collect()
}

fn evaluate(theorem: Theorem, ctx: &Context<'_>, probes: &[BaryPoint]) -> TheoremReport {
    use Relation::{AtLeast, Equal};
    let set = &ctx.set;
    let s = ctx.shape;
    let (g, h, o, n, i) = (
        &set.centroid,
        &set.orthocenter,
        &set.circumcenter,
        &set.nine_point_center,
        &set.incenter,
    );
    let [a, b, c] = vertices();
    let three_g = scale3(&q(3, 1), g.coords());
    let probes: &[BaryPoint] = if theorem.uses_probes() { probes } else { &[] };

    let (relation, lhs, rhs): (Relation, Vec<Rational>, Vec<Rational>) = match theorem {
        Theorem::EulerLine => {
            let two_o_h = [0, 1, 2].map(|j| &o.coords()[j] * q(2, 1) + &h.coords()[j]);
            (Equal, three_g.to_vec(), two_o_h.to_vec())
        }
        Theorem::CentroidMin => {
            let g_sum = ctx.d2(g, &a) + ctx.d2(g, &b) + ctx.d2(g, &c);
            let lhs = probes.iter().map(|x| ctx.d2(x, &a) + ctx.d2(x, &b) + ctx.d2(x, &c)).collect();
            let rhs = probes.iter().map(|x| &g_sum + ctx.d2(g, x) * q(3, 1)).collect();
            (Equal, lhs, rhs)
        }
        Theorem::HKernel => {
            let hkh = ctx.form(h, h);
            let lhs = probes.iter().map(|x| ctx.form(h, x)).collect();
            (Equal, lhs, vec![hkh; probes.len()])
        }
        Theorem::OkoHkh => (Equal, vec![ctx.form(o, o) + ctx.form(h, h)], vec![set.r2_circum.clone()]),
        Theorem::EulerFormula => (
            Equal,
            vec![ctx.d2(o, i)],
            vec![&set.r2_circum - &set.rr_in * q(2, 1)],
        ),
        Theorem::EulerInequality => (
            AtLeast,
            vec![&set.r2_circum - &set.r2_in * q(4, 1)],
            vec![Rational::zero()],
        ),
        Theorem::OiaFormula => {
            let lhs = set.excenters.iter().map(|e| ctx.d2(o, e)).collect();
            let rhs = set.rr_ex.iter().map(|rr| &set.r2_circum + rr * q(2, 1)).collect();
            (Equal, lhs, rhs)
        }
        Theorem::FeuerbachInner => {
            let npc = &ctx.circles.nine_point;
            let ic = &ctx.circles.incircle;
            let d2 = ctx.d2(n, i);
            let u = &d2 - npc.radius2() - ic.radius2();
            // Equilateral: the two circles coincide, so fall back to the bare
            // u² = 4ρ₁²ρ₂² test, which still reads as internal contact.
            let kind = classify_tangency(s, npc, ic)
                .unwrap_or_else(|_| tangency_from_d2(&d2, npc.radius2(), ic.radius2()));
            let lhs = vec![d2, u.square(), tangency_code(kind)];
            let rhs = vec![
                set.r2_circum.clone() / q(4, 1) - &set.rr_in + &set.r2_in,
                npc.radius2() * ic.radius2() * q(4, 1),
                tangency_code(Tangency::InternallyTangent),
            ];
            (Equal, lhs, rhs)
        }
        Theorem::FeuerbachOuter => {
            let npc = &ctx.circles.nine_point;
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for v in Vertex::ALL {
                let j = v.index();
                let ex = &ctx.circles.excircles[j];
                let d2 = ctx.d2(n, ex.center());
                let kind = classify_tangency(s, npc, ex).expect("distinct centers");
                lhs.push(d2);
                lhs.push(tangency_code(kind));
                rhs.push(set.r2_circum.clone() / q(4, 1) + &set.rr_ex[j] + &set.r2_ex[j]);
                rhs.push(tangency_code(Tangency::ExternallyTangent));
            }
            (Equal, lhs, rhs)
        }
        Theorem::MedianRatio => {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for v in Vertex::ALL {
                let x = BaryPoint::vertex(v);
                let m = midpoint(&BaryPoint::vertex(v.next()), &BaryPoint::vertex(v.prev()))
                    .expect("finite vertices");
                lhs.extend(sub3(&three_g, x.coords()));
                rhs.extend(scale3(&q(2, 1), m.coords()));
            }
            (Equal, lhs, rhs)
        }
        Theorem::AltitudeConcurrency => {
            let lhs = probes
                .iter()
                .map(|x| {
                    Vertex::ALL
                        .iter()
                        .map(|&v| {
                            let side = sub3(BaryPoint::vertex(v.next()).coords(), BaryPoint::vertex(v.prev()).coords());
                            let arm = sub3(x.coords(), BaryPoint::vertex(v).coords());
                            ctx.k.bilinear(&side, &arm)
                        })
                        .sum()
                })
                .collect();
            (Equal, lhs, vec![Rational::zero(); probes.len()])
        }
        Theorem::SideRelations => {
            let lhs = Vertex::ALL.iter().map(|&v| s.side(v).square()).collect();
            let rhs = Vertex::ALL
                .iter()
                .map(|&v| s.conway_at(v.next()) + s.conway_at(v.prev()))
                .collect();
            (Equal, lhs, rhs)
        }
        Theorem::VertexProducts => {
            let vs = vertices();
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (x, vx) in vs.iter().zip(Vertex::ALL) {
                for (y, vy) in vs.iter().zip(Vertex::ALL) {
                    lhs.push(ctx.form(x, y));
                    rhs.push(if vx == vy { s.conway_at(vx).clone() } else { Rational::zero() });
                }
            }
            (Equal, lhs, rhs)
        }
        Theorem::IncircleIds => {
            let gk = |x: &BaryPoint| ctx.form(g, x) * q(3, 1);
            let mut lhs = vec![ctx.form(i, i), gk(i)];
            let mut rhs = vec![&set.r2_in * q(2, 1), (&set.rr_in + &set.r2_in) * q(2, 1)];
            for j in 0..3 {
                let e = &set.excenters[j];
                lhs.push(ctx.form(e, e));
                lhs.push(gk(e));
                rhs.push(&set.r2_ex[j] * q(2, 1));
                rhs.push((&set.r2_ex[j] - &set.rr_ex[j]) * q(2, 1));
            }
            (Equal, lhs, rhs)
        }
        Theorem::NinePointMembership => {
            let npc = &ctx.circles.nine_point;
            let lhs: Vec<Rational> = nine_points(s, h)
                .iter()
                .map(|p| power_of_point(s, npc, p).expect("finite point"))
                .collect();
            let zeros = vec![Rational::zero(); lhs.len()];
            (Equal, lhs, zeros)
        }
    };
    TheoremReport::new(theorem, s, relation, lhs, rhs)
}

/// Side midpoints, feet of the altitudes, and midpoints of the segments
/// from each vertex to the orthocenter.
pub fn nine_points(shape: &TriangleShape, orthocenter: &BaryPoint) -> Vec<BaryPoint> {
    let mut pts = Vec::with_capacity(9);
    for v in Vertex::ALL {
        let (y, z) = (BaryPoint::vertex(v.next()), BaryPoint::vertex(v.prev()));
        pts.push(midpoint(&y, &z).expect("finite"));
    }
    for v in Vertex::ALL {
        let (y, z) = (BaryPoint::vertex(v.next()), BaryPoint::vertex(v.prev()));
        pts.push(foot_of_perpendicular(shape, orthocenter, &y, &z).expect("distinct vertices"));
    }
    for v in Vertex::ALL {
        pts.push(midpoint(&BaryPoint::vertex(v), orthocenter).expect("finite"));
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(a: i64, b: i64, c: i64) -> TriangleShape {
        TriangleShape::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!(
            "pythagoras".parse::<Theorem>(),
            Err(GeometryError::UnknownTheorem("pythagoras".into()))
        );
        assert!(check_named("nope", &shape(5, 4, 3), None).is_err());
    }

    #[test]
    fn euler_formula_345() {
        let r = check(Theorem::EulerFormula, &shape(5, 4, 3), None).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, vec![q(5, 4)]);
        assert_eq!(r.rhs, vec![q(5, 4)]);
    }

    #[test]
    fn feuerbach_inner_345() {
        let r = check(Theorem::FeuerbachInner, &shape(5, 4, 3), None).unwrap();
        assert!(r.passed, "{}", r.detail);
        assert_eq!(r.lhs[0], q(1, 16));
        assert_eq!(r.lhs[0], (q(5, 4) - q(1, 1)).square());
    }

    #[test]
    fn euler_inequality_equilateral_is_tight() {
        let r = check(Theorem::EulerInequality, &shape(2, 2, 2), None).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, vec![Rational::zero()]);
    }

    #[test]
    fn run_all_fixed_shapes() {
        for s in [shape(5, 4, 3), shape(2, 2, 2), shape(6, 5, 5), shape(13, 14, 15)] {
            let reports = run_all(&s, 42);
            assert_eq!(reports.len(), 15);
            for r in &reports {
                assert!(r.passed, "{} failed on {:?}: {}", r.name, s, r.detail);
            }
        }
    }

    #[test]
    fn feuerbach_inner_on_equilateral_coincident_circles() {
        let r = check(Theorem::FeuerbachInner, &shape(2, 2, 2), None).unwrap();
        assert!(r.passed, "{}", r.detail);
        assert!(r.lhs[0].is_zero());
    }

    #[test]
    fn equilateral_centers_coincide() {
        let s = shape(2, 2, 2);
        let set = CenterSet::new(&s);
        let g = &set.centroid;
        for p in [&set.orthocenter, &set.circumcenter, &set.nine_point_center, &set.incenter] {
            assert_eq!(p, g);
        }
    }

    #[test]
    fn run_all_is_deterministic() {
        let s = shape(13, 14, 15);
        assert_eq!(run_all(&s, 9), run_all(&s, 9));
    }

    #[test]
    fn failing_component_is_reported() {
        let r = TheoremReport::new(
            Theorem::OkoHkh,
            &shape(5, 4, 3),
            Relation::Equal,
            vec![q(1, 1), q(2, 1)],
            vec![q(1, 1), q(3, 1)],
        );
        assert!(!r.passed);
        assert_eq!(r.detail, "component 1: lhs = 2, rhs = 3");
    }

    #[test]
    fn explicit_probes_must_be_finite() {
        let d = BaryPoint::direction(&BaryPoint::a(), &BaryPoint::b()).unwrap();
        assert_eq!(
            check(Theorem::HKernel, &shape(5, 4, 3), Some(&[d])),
            Err(GeometryError::InfiniteMisuse)
        );
    }
}
