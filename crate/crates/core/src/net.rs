//! Base ideals of plane Cremona maps on general points and their
//! structure: linear syzygies, resolution counts, saturation, the linear
//! block of the syzygy matrix and principal curves of doubled types.

use crate::fat::{FatError, FatScheme};
use crate::field::PrimeField;
use crate::forms::{multiply_span, n_monomials, Form};
use crate::ideal::{
    growth_class, saturate_escalating, span_ideal, GeneratedIdeal, GradedPiece, GrowthClass,
    IdealError,
};
use crate::linalg::{DenseMatrix, Subspace};
use crate::syzygy::{minimal_syzygies, FreeMap};
use crate::types::{halve, hudson_test, is_sub_homaloidal, PlaneType, TransformChain, TypeError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("type {0} is not proper: {1}")]
    NotProper(PlaneType, TransformChain),
    #[error("degree-{degree} piece has dimension {dim}, not 3 (non-general points; re-seed)")]
    NotComplete { degree: usize, dim: usize },
    #[error("the net has a fixed component ({0:?})")]
    FixedPart(GrowthClass),
    #[error(transparent)]
    Fat(#[from] FatError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("linear block dimension changed under re-extraction: {first} then {second}")]
    InconsistentLinearBlock { first: usize, second: usize },
    #[error("principal curve piece J_{i} in degree {degree} has dimension {dim}, not 1")]
    PrincipalPiece { i: usize, degree: usize, dim: usize },
}

/// The net of degree-d curves with assigned base points, and its base ideal.
#[derive(Debug, Clone)]
pub struct CremonaNet {
    plane_type: PlaneType,
    seed: u64,
    scheme: FatScheme,
    net: GradedPiece,
    base: GeneratedIdeal,
}

pub fn build_net(t: &PlaneType, seed: u64, field: PrimeField) -> Result<CremonaNet, NetError> {
    build_net_with(t, seed, field, false)
}

/// As [`build_net`]; with `pin` the three largest multiplicities sit at the
/// coordinate points (0:0:1), (0:1:0), (1:0:0).
pub fn build_net_with(
    t: &PlaneType,
    seed: u64,
    field: PrimeField,
    pin: bool,
) -> Result<CremonaNet, NetError> {
    let t = t.stripped();
    let chain = hudson_test(&t)?;
    if !chain.is_proper() {
        return Err(NetError::NotProper(t, chain));
    }
    let d = t.degree as usize;
    let scheme = FatScheme::from_type(field, seed, &t, pin)?;
    let net = scheme.graded_piece(d);
    if net.dim() != 3 {
        return Err(NetError::NotComplete {
            degree: d,
            dim: net.dim(),
        });
    }
    let mut base = span_ideal(field, std::slice::from_ref(&net), d);
    match growth_class(&mut base, None)? {
        GrowthClass::FinitelySupportedQuotient => {}
        g => return Err(NetError::FixedPart(g)),
    }
    Ok(CremonaNet {
        plane_type: t,
        seed,
        scheme,
        net,
        base,
    })
}

impl CremonaNet {
    pub fn plane_type(&self) -> &PlaneType {
        &self.plane_type
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
    pub fn degree(&self) -> usize {
        self.plane_type.degree as usize
    }
    pub fn field(&self) -> PrimeField {
        self.scheme.field()
    }
    pub fn scheme(&self) -> &FatScheme {
        &self.scheme
    }
    /// J_d, the 3-dimensional linear system.
    pub fn net(&self) -> &GradedPiece {
        &self.net
    }
    pub fn base_ideal(&self) -> &GeneratedIdeal {
        &self.base
    }

    /// The three net generators as (degree, coefficients).
    fn net_forms(&self) -> Vec<(usize, Vec<u32>)> {
        self.net
            .space
            .basis_vectors()
            .into_iter()
            .map(|v| (self.degree(), v))
            .collect()
    }
}

/// s = 9 − dim R₁·J_d, the number of independent linear syzygies of I.
pub fn linear_syzygy_count(net: &CremonaNet) -> usize {
    9 - net.base.dim(net.degree() + 1)
}

/// Minimal first syzygies of I = (J_d); all of them lie in degrees d+1..=2d.
pub fn net_syzygy_counts(net: &CremonaNet) -> BTreeMap<usize, usize> {
    let d = net.degree();
    let map = FreeMap::from_forms(net.field(), &net.net_forms());
    nonzero(minimal_syzygies(&map, d + 1..=2 * d).counts)
}

/// Generator and first-syzygy counts of J around degree d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionProfile {
    pub d: usize,
    pub s: usize,
    /// minimal generator counts of J (nonzero only)
    pub n: BTreeMap<usize, usize>,
    /// minimal first-syzygy counts of J on the window d..=d+3 (nonzero only)
    pub syz: BTreeMap<usize, usize>,
    pub mu1: i64,
}

impl ResolutionProfile {
    /// Deviations from n = {d: 3, d+1: d−4+s}, syz = {d+1: s, d+2: d−2},
    /// s ∈ {0,1} and s = 1 ⟺ μ₁ = d−1.
    pub fn mismatches(&self) -> Vec<String> {
        let d = self.d;
        let s = self.s;
        let mut bad = Vec::new();
        let mut want_n = BTreeMap::new();
        want_n.insert(d, 3);
        if d + s > 4 {
            want_n.insert(d + 1, d + s - 4);
        }
        let mut want_syz = BTreeMap::new();
        if s > 0 {
            want_syz.insert(d + 1, s);
        }
        if d > 2 {
            want_syz.insert(d + 2, d - 2);
        }
        if self.n != want_n {
            bad.push(format!("generators {:?}, expected {:?}", self.n, want_n));
        }
        if self.syz != want_syz {
            bad.push(format!("syzygies {:?}, expected {:?}", self.syz, want_syz));
        }
        if s > 1 {
            bad.push(format!("{s} linear syzygies"));
        }
        if (s == 1) != (self.mu1 == d as i64 - 1) {
            bad.push(format!("s = {s} with mu1 = {}", self.mu1));
        }
        bad
    }
}

/// Nonzero minimal first-syzygy counts of a fat ideal on `window`.
pub fn fat_syzygy_counts(
    scheme: &FatScheme,
    gen_counts: &[(usize, usize)],
    window: std::ops::RangeInclusive<usize>,
) -> BTreeMap<usize, usize> {
    let gens = scheme.minimal_generators(gen_counts);
    let map = FreeMap::from_forms(scheme.field(), &gens);
    nonzero(minimal_syzygies(&map, window).counts)
}

fn nonzero(counts: impl IntoIterator<Item = (usize, usize)>) -> BTreeMap<usize, usize> {
    counts.into_iter().filter(|&(_, c)| c > 0).collect()
}

pub fn resolution_profile(net: &CremonaNet) -> Result<ResolutionProfile, NetError> {
    let d = net.degree();
    let prof = net.scheme.profile(None)?;
    let syz = fat_syzygy_counts(&net.scheme, &prof.gens, d..=d + 3);
    Ok(ResolutionProfile {
        d,
        s: linear_syzygy_count(net),
        n: nonzero(prof.gens.iter().copied()),
        syz,
        mu1: net.plane_type.mu(0),
    })
}

/// Counts for the ideal generated by J_{d+1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareProfile {
    pub generators: usize,
    pub syz: BTreeMap<usize, usize>,
    pub second_syz: BTreeMap<usize, usize>,
}

impl SquareProfile {
    pub fn mismatches(&self, d: usize) -> Vec<String> {
        let mut bad = Vec::new();
        if self.generators != d + 5 {
            bad.push(format!(
                "{} generators, expected {}",
                self.generators,
                d + 5
            ));
        }
        let want: BTreeMap<usize, usize> = [(d + 2, d + 7)].into();
        if self.syz != want {
            bad.push(format!("syzygies {:?}, expected {:?}", self.syz, want));
        }
        let want2: BTreeMap<usize, usize> = [(d + 3, 3)].into();
        if self.second_syz != want2 {
            bad.push(format!(
                "second syzygies {:?}, expected {:?}",
                self.second_syz, want2
            ));
        }
        bad
    }
}

pub fn square_profile(net: &CremonaNet) -> Result<SquareProfile, NetError> {
    let d = net.degree();
    if linear_syzygy_count(net) != 0 {
        return Err(NetError::NotApplicable(
            "the square profile is stated for nets without linear syzygies".into(),
        ));
    }
    let f = net.field();
    let piece = net.scheme.graded_piece(d + 1);
    let gens: Vec<(usize, Vec<u32>)> = piece
        .space
        .basis_vectors()
        .into_iter()
        .map(|v| (d + 1, v))
        .collect();
    let map = FreeMap::from_forms(f, &gens);
    let first = minimal_syzygies(&map, d + 1..=d + 4);
    let second = minimal_syzygies(&first.as_map(f, &map.source), d + 2..=d + 5);
    Ok(SquareProfile {
        generators: gens.len(),
        syz: nonzero(first.counts),
        second_syz: nonzero(second.counts),
    })
}

/// Comparison of I with its saturation and with J.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub saturated: bool,
    /// (degree, dim I^sat_t − dim I_t) where nonzero
    pub gap: Vec<(usize, usize)>,
    pub j_equals_sat: bool,
    pub bound: usize,
    pub start: usize,
}

/// Default inspection bound 2d.
pub fn default_inspect_bound(d: usize) -> usize {
    2 * d
}

pub fn saturation_report(
    net: &CremonaNet,
    bound: Option<usize>,
) -> Result<SaturationReport, NetError> {
    let d = net.degree();
    let bound = bound.unwrap_or_else(|| default_inspect_bound(d));
    let mut base = net.base.clone();
    let sat = saturate_escalating(&mut base, bound)?;
    let mut gap = Vec::new();
    let mut j_equals_sat = true;
    for t in 0..=bound {
        let diff = sat.ideal.dim(t) - base.dim(t);
        if diff > 0 {
            gap.push((t, diff));
        }
        if t >= d && *sat.ideal.annihilator(t) != net.scheme.annihilator(t) {
            j_equals_sat = false;
        }
    }
    Ok(SaturationReport {
        saturated: gap.is_empty(),
        gap,
        j_equals_sat,
        bound,
        start: sat.start,
    })
}

/// Span of the linear entries of the minimal syzygy matrix of J that sit
/// in the rows of the degree-(d+1) generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearBlock {
    pub c: usize,
    pub rows: usize,
    pub columns: usize,
    pub reextracted_c: usize,
}

fn block_dim(f: PrimeField, d: usize, gens: &[(usize, Vec<u32>)]) -> (usize, usize, usize) {
    let map = FreeMap::from_forms(f, gens);
    let syz = minimal_syzygies(&map, d + 2..=d + 2);
    let cols = syz.vectors.get(&(d + 2)).cloned().unwrap_or_default();
    let rows: Vec<usize> = (0..gens.len()).filter(|&i| gens[i].0 == d + 1).collect();
    let mut entries = Vec::new();
    for v in &cols {
        for &i in &rows {
            entries.push(map.source.component(d + 2, v, i).to_vec());
        }
    }
    let span = Subspace::from_rows(f, 3, &entries);
    (span.dim(), rows.len(), cols.len())
}

fn random_invertible(f: PrimeField, rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..f.modulus())).collect();
        let m = DenseMatrix::from_flat(f, n, n, data);
        if m.rank() == n {
            return m;
        }
    }
}

fn combine(f: PrimeField, m: &DenseMatrix, vs: &[Vec<u32>]) -> Vec<Vec<u32>> {
    (0..m.rows())
        .map(|i| {
            let mut acc = vec![0u32; vs[0].len()];
            for (k, v) in vs.iter().enumerate() {
                let c = m.get(i, k);
                for (a, &b) in acc.iter_mut().zip(v) {
                    *a = f.add(*a, f.mul(c, b));
                }
            }
            acc
        })
        .collect()
}

pub fn linear_block(net: &CremonaNet) -> Result<LinearBlock, NetError> {
    let d = net.degree();
    let f = net.field();
    let prof = net.scheme.profile(None)?;
    let gens = net.scheme.minimal_generators(&prof.gens);
    if !gens.iter().any(|g| g.0 == d + 1) {
        return Err(NetError::NotApplicable(format!(
            "no degree-{} generators, the block is empty",
            d + 1
        )));
    }
    let (c, rows, columns) = block_dim(f, d, &gens);

    // second extraction: mix the net basis, mix the degree-(d+1) lifts and
    // perturb them by random elements of R₁·J_d
    let mut rng = ChaCha8Rng::seed_from_u64(net.seed ^ 0x9e37_79b9_7f4a_7c15);
    let low: Vec<Vec<u32>> = gens
        .iter()
        .filter(|g| g.0 == d)
        .map(|g| g.1.clone())
        .collect();
    let high: Vec<Vec<u32>> = gens
        .iter()
        .filter(|g| g.0 == d + 1)
        .map(|g| g.1.clone())
        .collect();
    let rest: Vec<(usize, Vec<u32>)> = gens.iter().filter(|g| g.0 > d + 1).cloned().collect();
    let low2 = combine(f, &random_invertible(f, &mut rng, low.len()), &low);
    let mut high2 = combine(f, &random_invertible(f, &mut rng, high.len()), &high);
    let r1j = multiply_span(d, 1, &low);
    for h in high2.iter_mut() {
        for v in &r1j {
            let c = rng.gen_range(0..f.modulus());
            for (a, &b) in h.iter_mut().zip(v) {
                *a = f.add(*a, f.mul(c, b));
            }
        }
    }
    let mut gens2: Vec<(usize, Vec<u32>)> = low2.into_iter().map(|v| (d, v)).collect();
    gens2.extend(high2.into_iter().map(|v| (d + 1, v)));
    gens2.extend(rest);
    let (c2, _, _) = block_dim(f, d, &gens2);
    if c != c2 {
        return Err(NetError::InconsistentLinearBlock {
            first: c,
            second: c2,
        });
    }
    Ok(LinearBlock {
        c,
        rows,
        columns,
        reextracted_c: c2,
    })
}

/// f₁, f₂, f₃ of degree s−1 and the coordinate lines, for a doubled type
/// (2s−1; (s−1)³, 2μ₄, …) on a configuration pinned at the coordinate points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalTriple {
    pub s: usize,
    pub f: [Form; 3],
    /// ℓ₁ = line p₁p₂ = x, ℓ₂ = line p₂p₃ = z, ℓ₃ = line p₁p₃ = y
    pub l: [Form; 3],
    /// (ℓ₁f₁f₂, ℓ₂f₂f₃, ℓ₃f₁f₃)
    pub gens: [Form; 3],
    pub independent: bool,
    pub spans_net: bool,
}

impl PrincipalTriple {
    pub fn product(&self, field: PrimeField) -> Form {
        self.f[0].mul(field, &self.f[1]).mul(field, &self.f[2])
    }
}

/// The principal curves f_i: J_i lowers the i-th coordinate point's
/// multiplicity from (s−1)/2 to (s−3)/2; its degree-(s−1) piece is a line.
pub fn principal_curves(net: &CremonaNet) -> Result<PrincipalTriple, NetError> {
    let f = net.field();
    let t = &net.plane_type;
    let m =
        halve(t).ok_or_else(|| NetError::NotApplicable(format!("{t} is not a doubled type")))?;
    let s = is_sub_homaloidal(&m).expect("halve checks this") as usize;
    let h = (s as u32 - 1) / 2;
    if s % 2 == 0 || m.mults().len() < 3 || m.mults()[..3] != [h, h, h] {
        return Err(NetError::NotApplicable(format!(
            "{m} does not start with three entries (s-1)/2"
        )));
    }
    if !net.scheme.config().pinned {
        return Err(NetError::NotApplicable(
            "configuration is not pinned".into(),
        ));
    }
    let mut fs = Vec::new();
    for i in 0..3 {
        let mut mults = m.mults().to_vec();
        mults[i] -= 1;
        let ji = net.scheme.with_mults(mults)?;
        let piece = ji.graded_piece(s - 1);
        if piece.dim() != 1 {
            return Err(NetError::PrincipalPiece {
                i: i + 1,
                degree: s - 1,
                dim: piece.dim(),
            });
        }
        fs.push(Form::from_coeffs(
            s - 1,
            piece.space.basis_vector(0).to_vec(),
        ));
    }
    let l = [Form::var(0), Form::var(2), Form::var(1)];
    let g = [
        l[0].mul(f, &fs[0]).mul(f, &fs[1]),
        l[1].mul(f, &fs[1]).mul(f, &fs[2]),
        l[2].mul(f, &fs[0]).mul(f, &fs[2]),
    ];
    let span = Subspace::from_rows(
        f,
        n_monomials(2 * s - 1),
        &g.iter().map(|x| x.coeffs.clone()).collect::<Vec<_>>(),
    );
    let independent = span.dim() == 3;
    let spans_net = span == net.net.space;
    Ok(PrincipalTriple {
        s,
        f: [fs[0].clone(), fs[1].clone(), fs[2].clone()],
        l,
        gens: g,
        independent,
        spans_net,
    })
}

/// Checks of the explicit resolution and saturation of a doubled-type base ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub s: usize,
    pub syz: BTreeMap<usize, usize>,
    pub second_syz: BTreeMap<usize, usize>,
    pub phi_psi_zero: bool,
    pub gens_phi_zero: bool,
    pub sat_equals_extension: bool,
    /// generators of I^sat not accounted for by I: (degree, count)
    pub extra_sat_generators: Vec<(usize, usize)>,
    pub bound: usize,
}

impl StructureReport {
    pub fn mismatches(&self) -> Vec<String> {
        let s = self.s;
        let mut bad = Vec::new();
        let want: BTreeMap<usize, usize> = [(3 * s - 1, 3)].into();
        if self.syz != want {
            bad.push(format!("syzygies {:?}, expected {:?}", self.syz, want));
        }
        let want2: BTreeMap<usize, usize> = [(3 * s, 1)].into();
        if self.second_syz != want2 {
            bad.push(format!(
                "second syzygies {:?}, expected {:?}",
                self.second_syz, want2
            ));
        }
        if !self.phi_psi_zero {
            bad.push("phi*psi is not zero".into());
        }
        if !self.gens_phi_zero {
            bad.push("generators*phi is not zero".into());
        }
        if !self.sat_equals_extension {
            bad.push("saturation differs from (I, f1 f2 f3)".into());
        }
        if self.extra_sat_generators != vec![(3 * (s - 1), 1)] {
            bad.push(format!(
                "extra saturation generators {:?}, expected [({}, 1)]",
                self.extra_sat_generators,
                3 * (s - 1)
            ));
        }
        bad
    }
}

fn poly_sum_is_zero(field: PrimeField, terms: &[Form]) -> bool {
    let mut acc = Form::zero(terms[0].degree);
    for t in terms {
        acc = acc.add(field, t);
    }
    acc.is_zero()
}

pub fn verify_non_saturated_structure(
    triple: &PrincipalTriple,
    net: &CremonaNet,
    bound: Option<usize>,
) -> Result<StructureReport, NetError> {
    let f = net.field();
    let s = triple.s;
    let d = net.degree();
    let bound = bound
        .unwrap_or_else(|| default_inspect_bound(d))
        .max(3 * s - 2);

    let map = FreeMap::from_forms(f, &net.net_forms());
    let first = minimal_syzygies(&map, d..=3 * s + 1);
    let second = minimal_syzygies(&first.as_map(f, &map.source), d..=3 * s + 1);

    let [f1, f2, f3] = &triple.f;
    let [l1, l2, l3] = &triple.l;
    let zero = Form::zero(s);
    // φ with rows indexed by generators, columns by syzygies
    let phi = [
        [l2.mul(f, f3), l3.mul(f, f3).neg(f), zero.clone()],
        [l1.mul(f, f1).neg(f), zero.clone(), l3.mul(f, f1)],
        [zero.clone(), l1.mul(f, f2), l2.mul(f, f2).neg(f)],
    ];
    let psi = [l3, l2, l1];
    let phi_psi_zero = (0..3).all(|i| {
        poly_sum_is_zero(
            f,
            &(0..3).map(|j| phi[i][j].mul(f, psi[j])).collect::<Vec<_>>(),
        )
    });
    let gens_phi_zero = (0..3).all(|j| {
        poly_sum_is_zero(
            f,
            &(0..3)
                .map(|i| triple.gens[i].mul(f, &phi[i][j]))
                .collect::<Vec<_>>(),
        )
    });

    let mut base = net.base.clone();
    let sat = saturate_escalating(&mut base, bound)?;
    let prod = triple.product(f);
    let ext = span_ideal(
        f,
        &[
            net.net.clone(),
            GradedPiece::from_forms(f, prod.degree, &[prod.coeffs.clone()]),
        ],
        bound,
    );
    let sat_equals_extension = sat.ideal.agrees_with(ext.graded(), d..=bound);
    let base_counts = base.graded().generator_counts();
    let extra_sat_generators = sat
        .ideal
        .generator_counts()
        .into_iter()
        .enumerate()
        .filter_map(|(t, c)| {
            let b = if t <= bound { base_counts[t] } else { 0 };
            (c > b).then_some((t, c - b))
        })
        .collect();
    Ok(StructureReport {
        s,
        syz: nonzero(first.counts),
        second_syz: nonzero(second.counts),
        phi_psi_zero,
        gens_phi_zero,
        sat_equals_extension,
        extra_sat_generators,
        bound,
    })
}

/// The doubled type whose principal curves are studied, on a pinned config.
pub fn doubled_net(s: usize, seed: u64, field: PrimeField) -> Result<CremonaNet, NetError> {
    let t: PlaneType = match s {
        3 => "5;2^6".parse().unwrap(),
        5 => "9;4^4,2^4".parse().unwrap(),
        _ => {
            return Err(NetError::NotApplicable(format!(
                "no built-in sub-homaloidal set for s = {s}"
            )))
        }
    };
    build_net_with(&t, seed, field, true)
}

/// Convenience: the whole degree-t piece of J_d as forms.
pub fn net_forms(net: &CremonaNet) -> Vec<Form> {
    let d = net.degree();
    net.net
        .space
        .basis_vectors()
        .into_iter()
        .map(|v| Form::from_coeffs(d, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }
    fn t(s: &str) -> PlaneType {
        s.parse().unwrap()
    }

    #[test]
    fn builds_and_rejects() {
        let f = gf();
        assert_eq!(build_net(&t("5;2^6"), 1, f).unwrap().net().dim(), 3);
        assert_eq!(build_net(&t("6;4,2^4,1^3"), 1, f).unwrap().net().dim(), 3);
        assert!(matches!(
            build_net(&t("13;8^2,2^10"), 1, f),
            Err(NetError::NotProper(..))
        ));
    }

    #[test]
    fn linear_syzygies() {
        let f = gf();
        assert_eq!(
            linear_syzygy_count(&build_net(&t("5;4,1^8"), 1, f).unwrap()),
            1
        );
        assert_eq!(
            linear_syzygy_count(&build_net(&t("5;2^6"), 1, f).unwrap()),
            0
        );
        assert_eq!(
            linear_syzygy_count(&build_net(&t("6;4,2^4,1^3"), 1, f).unwrap()),
            0
        );
    }

    #[test]
    fn quintic_resolution() {
        let f = gf();
        let r = resolution_profile(&build_net(&t("5;2^6"), 1, f).unwrap()).unwrap();
        assert_eq!(r.n, [(5, 3), (6, 1)].into());
        assert_eq!(r.syz, [(7, 3)].into());
        assert!(r.mismatches().is_empty());
        let r = resolution_profile(&build_net(&t("5;4,1^8"), 1, f).unwrap()).unwrap();
        assert_eq!(r.n, [(5, 3), (6, 2)].into());
        assert_eq!(r.syz, [(6, 1), (7, 3)].into());
    }

    #[test]
    fn quintic_saturation_gap() {
        let f = gf();
        let rep = saturation_report(&build_net(&t("5;2^6"), 1, f).unwrap(), None).unwrap();
        assert!(!rep.saturated);
        assert_eq!(rep.gap, vec![(6, 1)]);
        assert!(rep.j_equals_sat);
        let rep = saturation_report(&build_net(&t("4;2^3,1^3"), 1, f).unwrap(), None).unwrap();
        assert!(rep.saturated && rep.j_equals_sat);
    }

    #[test]
    fn principal_triple_for_quintic() {
        let f = gf();
        let net = doubled_net(3, 2, f).unwrap();
        let tr = principal_curves(&net).unwrap();
        assert!(tr.independent && tr.spans_net);
        let rep = verify_non_saturated_structure(&tr, &net, None).unwrap();
        assert!(rep.mismatches().is_empty(), "{:?}", rep);
    }
}
