//! Seeded "general" point configurations in the projective plane over GF(p).

use crate::field::PrimeField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("a configuration needs at least one point")]
    Empty,
    #[error("pinning the coordinate triangle needs at least 3 points, got {0}")]
    TooFewToPin(usize),
    #[error("no {r} points in general position found after {draws} draws over GF({p})")]
    RetryBudgetExhausted { r: usize, p: u32, draws: usize },
}

/// Projective points, each stored with its last nonzero coordinate equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointConfig {
    #[serde(skip)]
    field: PrimeField,
    pub prime: u32,
    pub seed: u64,
    pub pinned: bool,
    pub points: Vec<[u32; 3]>,
}

impl PointConfig {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Scales a nonzero triple so that its last nonzero coordinate is 1.
pub fn normalize(f: PrimeField, p: [u32; 3]) -> [u32; 3] {
    let k = (0..3)
        .rev()
        .find(|&k| p[k] != 0)
        .expect("zero vector is not a point");
    let inv = f.inv(p[k]);
    [f.mul(p[0], inv), f.mul(p[1], inv), f.mul(p[2], inv)]
}

pub fn det3(f: PrimeField, a: [u32; 3], b: [u32; 3], c: [u32; 3]) -> u32 {
    let m = |x: u32, y: u32| f.mul(x, y);
    let t0 = m(a[0], f.sub(m(b[1], c[2]), m(b[2], c[1])));
    let t1 = m(a[1], f.sub(m(b[0], c[2]), m(b[2], c[0])));
    let t2 = m(a[2], f.sub(m(b[0], c[1]), m(b[1], c[0])));
    f.add(f.sub(t0, t1), t2)
}

fn acceptable(f: PrimeField, pts: &[[u32; 3]], q: [u32; 3]) -> bool {
    if pts.contains(&q) {
        return false;
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if det3(f, pts[i], pts[j], q) == 0 {
                return false;
            }
        }
    }
    true
}

/// Draws `r` pairwise distinct points with no three collinear.
///
/// With `pin`, the first three points are (0:0:1), (0:1:0), (1:0:0) and the
/// rest are random. Output is a function of `(p, seed, r, pin)` alone.
pub fn make_config(
    field: PrimeField,
    seed: u64,
    r: usize,
    pin: bool,
) -> Result<PointConfig, PointError> {
    if r == 0 {
        return Err(PointError::Empty);
    }
    if pin && r < 3 {
        return Err(PointError::TooFewToPin(r));
    }
    let p = field.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<[u32; 3]> = if pin {
        vec![[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    } else {
        Vec::new()
    };
    let budget = 1000 + 200 * r;
    let mut draws = 0;
    while pts.len() < r {
        if draws == budget {
            return Err(PointError::RetryBudgetExhausted { r, p, draws });
        }
        draws += 1;
        let raw = [
            rng.gen_range(0..p),
            rng.gen_range(0..p),
            rng.gen_range(0..p),
        ];
        if raw == [0, 0, 0] {
            continue;
        }
        let q = normalize(field, raw);
        if acceptable(field, &pts, q) {
            pts.push(q);
        }
    }
    Ok(PointConfig {
        field,
        prime: p,
        seed,
        pinned: pin,
        points: pts,
    })
}
