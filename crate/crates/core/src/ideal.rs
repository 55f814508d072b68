//! Homogeneous ideals of k[x,y,z] held degreewise by their annihilators.
//!
//! For an ideal I the degree-t piece is stored as W_t = I_t^⊥ ⊆ R_t^*,
//! with the pairing that makes monomials orthonormal. Then
//! (R₁·I_t)^⊥ = { λ : x∘λ, y∘λ, z∘λ ∈ W_t } where (v∘λ)(m) = λ(v·m), and
//! the cost of each step scales with codim I_t rather than dim R_t.

use crate::field::PrimeField;
use crate::forms::{n_monomials, times_var};
use crate::linalg::{DenseMatrix, Subspace};
use std::ops::RangeInclusive;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("growth window {lo}..={hi} is invalid: {why}")]
    BadWindow { lo: usize, hi: usize, why: String },
    #[error("codimension is not linear on {lo}..={hi}: {values:?}")]
    NotLinear {
        lo: usize,
        hi: usize,
        values: Vec<usize>,
    },
    #[error("saturation from start degree {start} disagrees with the run from {}", start + 2)]
    SaturationNotCertified { start: usize },
    #[error("generator of degree {degree} has length {len}, expected {expected}")]
    BadGenerator {
        degree: usize,
        len: usize,
        expected: usize,
    },
}

/// Annihilator of R₁·(W^⊥) in degree t+1, where `w` ⊆ R_t^*.
///
/// A functional λ on R_{t+1} is split into its values on x·R_t (which must
/// be x∘λ ∈ W, so a combination of the basis of W) and its values on the
/// t+2 monomials free of x; the remaining conditions y∘λ, z∘λ ∈ W are
/// linear in those unknowns.
pub fn step_up(field: PrimeField, t: usize, w: &Subspace) -> Subspace {
    let n0 = n_monomials(t);
    let n1 = n_monomials(t + 1);
    assert_eq!(w.ambient_dim(), n0);
    let q = w.dim();
    if q == 0 {
        return Subspace::zero(field, n1);
    }
    if q == n0 {
        return Subspace::full(field, n1);
    }
    let p = field.modulus() as u64;
    let unknowns = q + t + 2;
    let basis = w.basis();
    let pivots = w.pivots();
    let mut is_pivot = vec![false; n0];
    for &c in pivots {
        is_pivot[c] = true;
    }

    // row m of L: λ(monomial m of degree t+1) as a functional on the unknowns
    let add_l_row = |acc: &mut [u64], m: usize, scale: u64| {
        if m < n0 {
            for k in 0..q {
                let v = basis.get(k, m) as u64;
                if v != 0 {
                    acc[k] = (acc[k] + scale * v) % p;
                }
            }
        } else {
            let c = q + (m - n0);
            acc[c] = (acc[c] + scale) % p;
        }
    };

    let nonpivots: Vec<usize> = (0..n0).filter(|&j| !is_pivot[j]).collect();
    let mut data = Vec::with_capacity(2 * nonpivots.len() * unknowns);
    let mut rows = 0;
    for v in [1usize, 2] {
        for &j in &nonpivots {
            let mut acc = vec![0u64; unknowns];
            add_l_row(&mut acc, times_var(t, j, v), 1);
            for (k, &pk) in pivots.iter().enumerate() {
                let c = basis.get(k, j) as u64;
                if c != 0 {
                    add_l_row(&mut acc, times_var(t, pk, v), p - c);
                }
            }
            data.extend(acc.into_iter().map(|x| x as u32));
            rows += 1;
        }
    }
    let kernel = DenseMatrix::from_flat(field, rows, unknowns, data).kernel_basis();

    let lambdas: Vec<Vec<u32>> = (0..kernel.dim())
        .map(|i| {
            let u = kernel.basis_vector(i);
            let mut lam = vec![0u32; n1];
            let mut acc = vec![0u64; n0];
            for (k, &uk) in u[..q].iter().enumerate() {
                if uk == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(basis.row(k)) {
                    *slot = (*slot + uk as u64 * b as u64) % p;
                }
            }
            for (dst, v) in lam.iter_mut().zip(acc) {
                *dst = v as u32;
            }
            lam[n0..].copy_from_slice(&u[q..]);
            lam
        })
        .collect();
    Subspace::from_rows(field, n1, &lambdas)
}

/// span{ v∘w : w ∈ W, v ∈ {x,y,z} } ⊆ R_{t-1}^*, for W ⊆ R_t^* with t ≥ 1.
///
/// This is the annihilator of { f ∈ R_{t-1} : x f, y f, z f ∈ W^⊥ }.
pub fn contract(field: PrimeField, t: usize, w: &Subspace) -> Subspace {
    assert!(t >= 1);
    let n = n_monomials(t - 1);
    let idx: Vec<[usize; 3]> = (0..n)
        .map(|m| {
            [
                times_var(t - 1, m, 0),
                times_var(t - 1, m, 1),
                times_var(t - 1, m, 2),
            ]
        })
        .collect();
    let mut rows = Vec::with_capacity(3 * w.dim());
    for i in 0..w.dim() {
        let b = w.basis_vector(i);
        for v in 0..3 {
            rows.push(idx.iter().map(|ix| b[ix[v]]).collect());
        }
    }
    Subspace::from_rows(field, n, &rows)
}

/// Degree-t forms as a subspace of R_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: usize,
    pub space: Subspace,
}

impl GradedPiece {
    pub fn new(degree: usize, space: Subspace) -> Self {
        assert_eq!(space.ambient_dim(), n_monomials(degree));
        GradedPiece { degree, space }
    }

    pub fn from_forms(field: PrimeField, degree: usize, forms: &[Vec<u32>]) -> Self {
        Self::new(
            degree,
            Subspace::from_rows(field, n_monomials(degree), forms),
        )
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A homogeneous ideal known in degrees 0..=bound through its annihilators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    field: PrimeField,
    duals: Vec<Subspace>,
}

impl GradedIdeal {
    pub fn from_annihilators(field: PrimeField, duals: Vec<Subspace>) -> Self {
        for (t, w) in duals.iter().enumerate() {
            assert_eq!(w.ambient_dim(), n_monomials(t));
        }
        GradedIdeal { field, duals }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn bound(&self) -> usize {
        self.duals.len().saturating_sub(1)
    }

    pub fn annihilator(&self, t: usize) -> &Subspace {
        &self.duals[t]
    }

    pub fn codim(&self, t: usize) -> usize {
        self.duals[t].dim()
    }

    pub fn dim(&self, t: usize) -> usize {
        n_monomials(t) - self.codim(t)
    }

    /// The degree-t piece itself.
    pub fn piece(&self, t: usize) -> GradedPiece {
        GradedPiece::new(t, self.duals[t].annihilator())
    }

    /// Least degree with a nonzero piece, within the bound.
    pub fn indeg(&self) -> Option<usize> {
        (0..self.duals.len()).find(|&t| self.dim(t) > 0)
    }

    /// Whether `self_t ⊆ other_t` for every t in the range.
    pub fn contained_in(&self, other: &GradedIdeal, range: RangeInclusive<usize>) -> bool {
        range.into_iter().all(|t| {
            other.duals[t]
                .is_subspace_of(&self.duals[t])
                .expect("same ambient")
        })
    }

    pub fn agrees_with(&self, other: &GradedIdeal, range: RangeInclusive<usize>) -> bool {
        range.into_iter().all(|t| self.duals[t] == other.duals[t])
    }

    /// Minimal generator counts n_t = dim I_t − dim R₁·I_{t−1}, t ≤ bound.
    pub fn generator_counts(&self) -> Vec<usize> {
        (0..self.duals.len())
            .map(|t| {
                if t == 0 {
                    self.dim(0)
                } else {
                    let up = step_up(self.field, t - 1, &self.duals[t - 1]);
                    up.dim() - self.codim(t)
                }
            })
            .collect()
    }
}

/// An ideal generated by the given pieces, spanned degreewise.
#[derive(Debug, Clone)]
pub struct GeneratedIdeal {
    gens: Vec<GradedPiece>,
    ideal: GradedIdeal,
}

/// The ideal generated by `gens`, spanned in every degree ≤ `bound`.
pub fn span_ideal(field: PrimeField, gens: &[GradedPiece], bound: usize) -> GeneratedIdeal {
    let mut merged: Vec<GradedPiece> = Vec::new();
    for g in gens {
        match merged.iter_mut().find(|m| m.degree == g.degree) {
            Some(m) => m.space = m.space.sum(&g.space).expect("same degree"),
            None => merged.push(g.clone()),
        }
    }
    merged.sort_by_key(|g| g.degree);
    let mut out = GeneratedIdeal {
        gens: merged,
        ideal: GradedIdeal {
            field,
            duals: Vec::new(),
        },
    };
    out.extend_to(bound);
    out
}

impl GeneratedIdeal {
    pub fn generators(&self) -> &[GradedPiece] {
        &self.gens
    }

    pub fn max_generator_degree(&self) -> usize {
        self.gens.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    pub fn graded(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn bound(&self) -> usize {
        self.ideal.bound()
    }

    pub fn field(&self) -> PrimeField {
        self.ideal.field
    }

    /// Spans further degrees so that `bound()` ≥ `bound`.
    pub fn extend_to(&mut self, bound: usize) {
        let f = self.ideal.field;
        while self.ideal.duals.len() <= bound {
            let t = self.ideal.duals.len();
            let mut w = if t == 0 {
                Subspace::full(f, 1)
            } else {
                step_up(f, t - 1, &self.ideal.duals[t - 1])
            };
            if let Some(g) = self.gens.iter().find(|g| g.degree == t) {
                w = w.orthogonal_part(&g.space.basis_vectors());
            }
            self.ideal.duals.push(w);
        }
    }

    pub fn codim(&self, t: usize) -> usize {
        self.ideal.codim(t)
    }

    pub fn dim(&self, t: usize) -> usize {
        self.ideal.dim(t)
    }

    pub fn annihilator(&self, t: usize) -> &Subspace {
        self.ideal.annihilator(t)
    }

    pub fn piece(&self, t: usize) -> GradedPiece {
        self.ideal.piece(t)
    }
}

/// Eventual behaviour of q_t = dim R_t − dim I_t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthClass {
    /// q_t constant: V(I) is finite, codim I = 2.
    FinitelySupportedQuotient,
    /// q_t grows with slope g: I has a fixed curve of degree g.
    CurveComponent(usize),
}

/// Default window: [2D, 2D+3] for largest generator degree D.
pub fn default_window(max_gen_degree: usize) -> RangeInclusive<usize> {
    let d = max_gen_degree.max(1);
    2 * d..=2 * d + 3
}

/// Classifies the growth of codim I_t on `window` (extending spans as needed).
pub fn growth_class(
    ideal: &mut GeneratedIdeal,
    window: Option<RangeInclusive<usize>>,
) -> Result<GrowthClass, IdealError> {
    let dmax = ideal.max_generator_degree();
    let window = window.unwrap_or_else(|| default_window(dmax));
    let (lo, hi) = (*window.start(), *window.end());
    let bad = |why: &str| IdealError::BadWindow {
        lo,
        hi,
        why: why.to_string(),
    };
    if hi < lo + 3 {
        return Err(bad("needs at least 4 degrees"));
    }
    if lo <= dmax {
        return Err(bad("must start beyond the largest generator degree"));
    }
    if hi < 2 * dmax + 3 {
        return Err(bad("upper end must be at least 2D+3"));
    }
    ideal.extend_to(hi);
    let q: Vec<usize> = window.clone().map(|t| ideal.codim(t)).collect();
    let diffs: Vec<i64> = q.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    if diffs.windows(2).any(|w| w[0] != w[1]) || diffs[0] < 0 {
        return Err(IdealError::NotLinear { lo, hi, values: q });
    }
    Ok(match diffs[0] {
        0 => GrowthClass::FinitelySupportedQuotient,
        g => GrowthClass::CurveComponent(g as usize),
    })
}

/// Descends S_T = I_T, S_t = { f : x f, y f, z f ∈ S_{t+1} } down to degree 0.
fn descend(ideal: &GeneratedIdeal, start: usize, keep: usize) -> Vec<Subspace> {
    let f = ideal.field();
    let mut cur = ideal.annihilator(start).clone();
    let mut out = vec![Subspace::zero(f, 1); keep + 1];
    for t in (0..start).rev() {
        cur = contract(f, t + 1, &cur);
        if t <= keep {
            out[t] = cur.clone();
        }
    }
    if start <= keep {
        out[start] = ideal.annihilator(start).clone();
    }
    out
}

/// Outcome of [`saturate`].
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: GradedIdeal,
    pub start: usize,
}

/// Default start degree: inspect_bound + max(6, D).
pub fn default_saturation_start(inspect_bound: usize, max_gen_degree: usize) -> usize {
    inspect_bound + max_gen_degree.max(6)
}

/// Saturation of `ideal` in degrees ≤ `inspect_bound`, computed from start
/// degree T and certified by agreement with the run from T+2.
pub fn saturate(
    ideal: &mut GeneratedIdeal,
    inspect_bound: usize,
    start: Option<usize>,
) -> Result<Saturation, IdealError> {
    let t0 = start
        .unwrap_or_else(|| default_saturation_start(inspect_bound, ideal.max_generator_degree()))
        .max(inspect_bound);
    ideal.extend_to(t0 + 2);
    let a = descend(ideal, t0, inspect_bound);
    let b = descend(ideal, t0 + 2, inspect_bound);
    if a != b {
        return Err(IdealError::SaturationNotCertified { start: t0 });
    }
    Ok(Saturation {
        ideal: GradedIdeal::from_annihilators(ideal.field(), a),
        start: t0,
    })
}

/// [`saturate`], raising the start degree a few times on certification failure.
pub fn saturate_escalating(
    ideal: &mut GeneratedIdeal,
    inspect_bound: usize,
) -> Result<Saturation, IdealError> {
    let mut start = default_saturation_start(inspect_bound, ideal.max_generator_degree());
    let mut last = None;
    for _ in 0..4 {
        match saturate(ideal, inspect_bound, Some(start)) {
            Ok(s) => return Ok(s),
            Err(e) => last = Some(e),
        }
        start += 4;
    }
    Err(last.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::multiply_span;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    // primal oracle: span of x·I_t, y·I_t, z·I_t
    fn primal_step(f: PrimeField, t: usize, w: &Subspace) -> Subspace {
        let piece = w.annihilator();
        let prods = multiply_span(t, 1, &piece.basis_vectors());
        if prods.is_empty() {
            return Subspace::full(f, n_monomials(t + 1));
        }
        Subspace::from_rows(f, n_monomials(t + 1), &prods).annihilator()
    }

    #[test]
    fn step_up_matches_primal() {
        let f = gf();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for t in 0..7 {
            for k in [0usize, 1, 3, n_monomials(t).saturating_sub(2)] {
                let rows: Vec<Vec<u32>> = (0..k)
                    .map(|_| {
                        (0..n_monomials(t))
                            .map(|_| rng.gen_range(0..32003))
                            .collect()
                    })
                    .collect();
                let w = Subspace::from_rows(f, n_monomials(t), &rows);
                assert_eq!(step_up(f, t, &w), primal_step(f, t, &w), "t={t} k={k}");
            }
        }
    }

    #[test]
    fn contraction_is_colon_by_linear_forms() {
        let f = gf();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = 4;
        let rows: Vec<Vec<u32>> = (0..5)
            .map(|_| {
                (0..n_monomials(t))
                    .map(|_| rng.gen_range(0..32003))
                    .collect()
            })
            .collect();
        let w = Subspace::from_rows(f, n_monomials(t), &rows);
        let c = contract(f, t, &w);
        let colon = c.annihilator();
        let big = w.annihilator();
        for g in multiply_span(t - 1, 1, &colon.basis_vectors()) {
            assert!(big.contains(&g).unwrap());
        }
        // and nothing larger: every f outside the colon fails for some variable
        assert_eq!(c.annihilator().dim(), n_monomials(t - 1) - c.dim());
    }

    #[test]
    fn irrelevant_and_principal() {
        let f = gf();
        let lin = GradedPiece::new(1, Subspace::full(f, 3));
        let m = span_ideal(f, &[lin], 6);
        for t in 1..=6 {
            assert_eq!(m.dim(t), n_monomials(t));
        }
        assert_eq!(m.dim(0), 0);

        let q = GradedPiece::from_forms(f, 2, &[vec![1, 0, 5, 7, 0, 3]]);
        let pr = span_ideal(f, &[q], 9);
        for t in 2..=9 {
            assert_eq!(pr.dim(t), n_monomials(t - 2));
        }
        assert_eq!(pr.graded().generator_counts()[2], 1);
        assert!(pr.graded().generator_counts()[3..].iter().all(|&n| n == 0));
    }

    #[test]
    fn growth_of_principal_and_complete_intersection() {
        let f = gf();
        // (x y): codim grows like 2t+1 − ... slope 2
        let xy = GradedPiece::from_forms(f, 2, &[vec![0, 1, 0, 0, 0, 0]]);
        let mut i = span_ideal(f, &[xy], 2);
        assert_eq!(
            growth_class(&mut i, None),
            Ok(GrowthClass::CurveComponent(2))
        );
        // (x, y^2): finite quotient
        let x = GradedPiece::from_forms(f, 1, &[vec![1, 0, 0]]);
        let y2 = GradedPiece::from_forms(f, 2, &[vec![0, 0, 0, 1, 0, 0]]);
        let mut ci = span_ideal(f, &[x, y2], 2);
        assert_eq!(
            growth_class(&mut ci, None),
            Ok(GrowthClass::FinitelySupportedQuotient)
        );
        assert!(growth_class(&mut ci, Some(3..=5)).is_err());
    }

    #[test]
    fn saturation_of_m_primary_and_of_a_point() {
        let f = gf();
        // m^2
        let m2 = GradedPiece::new(2, Subspace::full(f, 6));
        let mut i = span_ideal(f, &[m2], 2);
        let s = saturate(&mut i, 6, None).unwrap();
        for t in 0..=6 {
            assert!(s.ideal.annihilator(t).is_zero(), "t={t}");
        }
        // x·(x, y, z) has saturation (x)
        let g = GradedPiece::from_forms(
            f,
            2,
            &[
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
            ],
        );
        let mut i = span_ideal(f, &[g], 2);
        let s = saturate(&mut i, 5, None).unwrap();
        for t in 1..=5 {
            assert_eq!(s.ideal.dim(t), n_monomials(t - 1));
        }
        let counts = s.ideal.generator_counts();
        assert_eq!(counts[1], 1);
        assert!(counts[2..].iter().all(|&n| n == 0));
    }
}
