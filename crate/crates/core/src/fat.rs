//! Ideals of fat points I(p; μ) = ∩ P_j^{μ_j} and their Hilbert data.

use crate::field::PrimeField;
use crate::forms::{monomials, multiply_span, n_monomials};
use crate::ideal::{step_up, GradedIdeal, GradedPiece};
use crate::linalg::{DenseMatrix, Subspace};
use crate::points::{make_config, PointConfig, PointError};
use crate::types::{MultiplicitySet, PlaneType};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FatError {
    #[error("{mults} multiplicities for {points} points")]
    LengthMismatch { mults: usize, points: usize },
    #[error("Hilbert function at bound {bound} is {value}, below e = {e}; raise the bound")]
    NotStabilized {
        bound: usize,
        value: usize,
        e: usize,
    },
    #[error(transparent)]
    Points(#[from] PointError),
}

fn binomials(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut c = vec![vec![0u32; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1 % p;
        for j in 1..=i {
            c[i][j] = ((c[i - 1][j - 1] as u64 + c[i - 1][j] as u64) % p as u64) as u32;
        }
    }
    c
}

/// Conditions for a degree-t form to vanish to order ≥ μ at `point`.
///
/// With the point scaled so that coordinate k is 1 and the other two
/// coordinates are (a_u, a_v), row (i, j) with i + j < μ holds the
/// coefficient of s^i w^j in f(a_u + s, a_v + w) (x_k = 1), which on the
/// monomial x_u^α x_v^β x_k^γ is C(α,i) C(β,j) a_u^{α−i} a_v^{β−j}.
pub fn vanishing_conditions(field: PrimeField, point: [u32; 3], mu: u32, t: usize) -> DenseMatrix {
    let k = (0..3)
        .rev()
        .find(|&k| point[k] != 0)
        .expect("nonzero point");
    let inv = field.inv(point[k]);
    let (u, v) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let (au, av) = (field.mul(point[u], inv), field.mul(point[v], inv));
    let binom = binomials(t, field.modulus());
    let pow = |a: u32| -> Vec<u32> {
        let mut out = vec![1 % field.modulus(); t + 1];
        for e in 1..=t {
            out[e] = field.mul(out[e - 1], a);
        }
        out
    };
    let (pu, pv) = (pow(au), pow(av));
    let mons = monomials(t);
    let mut rows = Vec::new();
    for i in 0..mu as usize {
        for j in 0..mu as usize - i {
            let row = mons
                .iter()
                .map(|e| {
                    let (a, b) = (e[u] as usize, e[v] as usize);
                    if a < i || b < j {
                        0
                    } else {
                        let c = field.mul(binom[a][i], binom[b][j]);
                        field.mul(c, field.mul(pu[a - i], pv[b - j]))
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    DenseMatrix::from_rows(field, mons.len(), &rows)
}

/// Points with attached multiplicities (0 allowed: no condition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatScheme {
    config: PointConfig,
    mults: Vec<u32>,
}

impl FatScheme {
    pub fn new(config: PointConfig, mults: Vec<u32>) -> Result<Self, FatError> {
        if mults.len() != config.len() {
            return Err(FatError::LengthMismatch {
                mults: mults.len(),
                points: config.len(),
            });
        }
        Ok(FatScheme { config, mults })
    }

    /// Random points carrying the positive multiplicities of `t`, in order.
    pub fn from_type(
        field: PrimeField,
        seed: u64,
        t: &PlaneType,
        pin: bool,
    ) -> Result<Self, FatError> {
        let mults = t.positive_mults();
        let config = make_config(field, seed, mults.len(), pin)?;
        Self::new(config, mults)
    }

    pub fn from_set(
        field: PrimeField,
        seed: u64,
        m: &MultiplicitySet,
        pin: bool,
    ) -> Result<Self, FatError> {
        let config = make_config(field, seed, m.mults().len(), pin)?;
        Self::new(config, m.mults().to_vec())
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn field(&self) -> PrimeField {
        self.config.field()
    }

    /// Same points, new multiplicities.
    pub fn with_mults(&self, mults: Vec<u32>) -> Result<Self, FatError> {
        Self::new(self.config.clone(), mults)
    }

    /// e(R/I) = Σ μ(μ+1)/2.
    pub fn multiplicity(&self) -> usize {
        self.mults
            .iter()
            .map(|&m| (m as usize) * (m as usize + 1) / 2)
            .sum()
    }

    /// All vanishing conditions in degree t, stacked.
    pub fn conditions(&self, t: usize) -> DenseMatrix {
        let f = self.field();
        let mut rows = Vec::new();
        for (pt, &mu) in self.config.points.iter().zip(&self.mults) {
            if mu > 0 {
                rows.extend(vanishing_conditions(f, *pt, mu, t).row_vecs());
            }
        }
        DenseMatrix::from_rows(f, n_monomials(t), &rows)
    }

    /// I_t^⊥: the span of the conditions.
    pub fn annihilator(&self, t: usize) -> Subspace {
        Subspace::from_matrix(&self.conditions(t))
    }

    pub fn graded_piece(&self, t: usize) -> GradedPiece {
        GradedPiece::new(t, self.conditions(t).kernel_basis())
    }

    /// The fat ideal in degrees 0..=bound.
    pub fn ideal(&self, bound: usize) -> GradedIdeal {
        let duals: Vec<Subspace> = (0..=bound)
            .into_par_iter()
            .map(|t| self.annihilator(t))
            .collect();
        GradedIdeal::from_annihilators(self.field(), duals)
    }

    /// I(p; 2μ), the second symbolic power.
    pub fn symbolic_square(&self) -> FatScheme {
        FatScheme {
            config: self.config.clone(),
            mults: self.mults.iter().map(|&m| 2 * m).collect(),
        }
    }

    /// 2·max(t₀+1, μ₁+μ₂) + 4, where t₀ is the least t with C(t+2,2) ≥ e.
    pub fn default_bound(&self) -> usize {
        let e = self.multiplicity();
        let t0 = (0..).find(|&t| n_monomials(t) >= e).unwrap();
        let mut m = self.mults.clone();
        m.sort_unstable_by(|a, b| b.cmp(a));
        let top = m.iter().take(2).sum::<u32>() as usize;
        2 * (t0 + 1).max(top) + 4
    }

    /// Minimal generators: for each (t, n_t), a basis of J_t modulo R₁·J_{t−1}.
    pub fn minimal_generators(&self, counts: &[(usize, usize)]) -> Vec<(usize, Vec<u32>)> {
        let f = self.field();
        let mut out = Vec::new();
        for &(t, n) in counts {
            let piece = self.graded_piece(t).space;
            let lower = if t == 0 {
                Subspace::zero(f, 1)
            } else {
                let prev = self.graded_piece(t - 1).space.basis_vectors();
                Subspace::from_rows(f, n_monomials(t), &multiply_span(t - 1, 1, &prev))
            };
            let fresh = piece.complement_of(&lower).expect("R1·J_{t-1} ⊆ J_t");
            debug_assert_eq!(fresh.len(), n);
            out.extend(fresh.into_iter().map(|v| (t, v)));
        }
        out
    }

    pub fn profile(&self, bound: Option<usize>) -> Result<FatIdealProfile, FatError> {
        let bound = bound.unwrap_or_else(|| self.default_bound());
        FatIdealProfile::compute(self, bound)
    }
}

/// Hilbert function, multiplicity, regularity index and generator counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatIdealProfile {
    pub bound: usize,
    pub hilbert: Vec<usize>,
    pub e: usize,
    pub regularity: usize,
    pub indeg: Option<usize>,
    /// (degree, count) for each degree with minimal generators.
    pub gens: Vec<(usize, usize)>,
    #[serde(skip)]
    pub n: Vec<usize>,
}

impl FatIdealProfile {
    fn compute(scheme: &FatScheme, bound: usize) -> Result<Self, FatError> {
        let ideal = scheme.ideal(bound);
        let hilbert: Vec<usize> = (0..=bound).map(|t| ideal.codim(t)).collect();
        let e = scheme.multiplicity();
        if hilbert[bound] != e {
            return Err(FatError::NotStabilized {
                bound,
                value: hilbert[bound],
                e,
            });
        }
        let regularity = hilbert.iter().position(|&h| h == e).unwrap();
        let f = scheme.field();
        let n: Vec<usize> = (0..=bound)
            .into_par_iter()
            .map(|t| {
                if t == 0 {
                    ideal.dim(0)
                } else {
                    step_up(f, t - 1, ideal.annihilator(t - 1)).dim() - ideal.codim(t)
                }
            })
            .collect();
        let gens = n
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(t, &c)| (t, c))
            .collect();
        Ok(FatIdealProfile {
            bound,
            hilbert,
            e,
            regularity,
            indeg: ideal.indeg(),
            gens,
            n,
        })
    }

    pub fn generator_degrees(&self) -> Vec<usize> {
        self.gens.iter().map(|&(t, _)| t).collect()
    }

    /// dim I_t.
    pub fn dim(&self, t: usize) -> usize {
        n_monomials(t) - self.hilbert[t]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}
