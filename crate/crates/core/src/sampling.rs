//! Seeded random shapes, points and gauges.
//!
//! Everything here is driven by `ChaCha8Rng`, so a seed reproduces the same
//! values on every platform and in every execution order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::kernel::{BaryPoint, TriangleShape};
use crate::rational::Rational;

/// Side numerators and denominators never exceed this.
pub const MAX_SIDE_TERM: i64 = 10_000;

/// Side denominators are drawn from `1..=SIDE_DENOM_MAX`; numerators from
/// `d..=SIDE_SPREAD·d`, so sides land in `[1, SIDE_SPREAD]`.
const SIDE_DENOM_MAX: i64 = 500;
const SIDE_SPREAD: i64 = 20;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Per-trial seed derived from a master seed (splitmix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(index.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn random_side<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let d = rng.gen_range(1..=SIDE_DENOM_MAX);
    let n = rng.gen_range(d..=(SIDE_SPREAD * d).min(MAX_SIDE_TERM));
    Rational::new(n, d)
}

/// A random nondegenerate triangle. Candidates violating the triangle
/// inequality are discarded and redrawn.
pub fn random_shape<R: Rng + ?Sized>(rng: &mut R) -> TriangleShape {
    loop {
        let (a, b, c) = (random_side(rng), random_side(rng), random_side(rng));
        if let Ok(shape) = TriangleShape::new(a, b, c) {
            return shape;
        }
    }
}

/// Like [`random_shape`] but with three distinct side lengths.
pub fn random_scalene_shape<R: Rng + ?Sized>(rng: &mut R) -> TriangleShape {
    loop {
        let shape = random_shape(rng);
        if shape.is_scalene() {
            return shape;
        }
    }
}

/// A small rational `n/d` with `d ∈ 1..=max_den` and `n/d ∈ [lo, hi]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(lo * d..=hi * d);
    Rational::new(n, d)
}

/// A random finite point with `α, β ∈ [−1, 2]` and `γ = 1 − α − β`.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> BaryPoint {
    let alpha = random_rational(rng, -1, 2, 60);
    let beta = random_rational(rng, -1, 2, 60);
    let gamma = Rational::one() - &alpha - &beta;
    BaryPoint::finite(alpha, beta, gamma).expect("coordinates sum to 1")
}

/// A random point distinct from every point in `avoid`.
pub fn random_point_avoiding<R: Rng + ?Sized>(rng: &mut R, avoid: &[&BaryPoint]) -> BaryPoint {
    loop {
        let p = random_point(rng);
        if avoid.iter().all(|x| **x != p) {
            return p;
        }
    }
}

/// Random gauge parameters `(m, n, l)`.
pub fn random_gauge<R: Rng + ?Sized>(rng: &mut R) -> (Rational, Rational, Rational) {
    (
        random_rational(rng, -50, 50, 30),
        random_rational(rng, -50, 50, 30),
        random_rational(rng, -50, 50, 30),
    )
}
