//! Dense linear algebra over GF(p): reduced row echelon form, kernels and
//! subspace arithmetic.
//!
//! Every subspace is stored by its reduced-row-echelon basis, so two
//! [`Subspace`] values are equal exactly when they span the same space.

use crate::field::PrimeField;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("subspace is not contained in the enclosing space")]
    NotContained,
}

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

// Rows longer than this are eliminated in parallel.
const PAR_THRESHOLD: usize = 1 << 16;

impl DenseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.modulus();
        }
        m
    }

    /// Builds a matrix from rows; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let p = field.modulus();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().map(|&v| v % p));
        }
        DenseMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let p = field.modulus();
        DenseMatrix {
            field,
            rows,
            cols,
            data: data.into_iter().map(|v| v % p).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.field.modulus() as u64;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot = (*slot + a * other.get(k, j) as u64) % p;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out[i * other.cols + j] = v as u32;
            }
        }
        DenseMatrix::from_flat(self.field, self.rows, other.cols, out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|r| {
                let s = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Reduced row echelon form (same shape, zero rows last) and its pivot columns.
    pub fn rref_with_pivots(&self) -> (DenseMatrix, Vec<usize>) {
        let (data, pivots) = eliminate(self.field, self.rows, self.cols, &self.data);
        (
            DenseMatrix {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rref(&self) -> DenseMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right kernel `{ v : M v = 0 }`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::with_capacity(self.cols - pivots.len());
        for j in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![0u32; self.cols];
            v[j] = 1 % self.field.modulus();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = self.field.neg(r.get(i, j));
            }
            vecs.push(v);
        }
        Subspace::from_rows(self.field, self.cols, &vecs)
    }
}

/// Gauss-Jordan elimination with delayed modular reduction.
fn eliminate(field: PrimeField, rows: usize, cols: usize, src: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let p = field.modulus() as u64;
    let budget = field.lazy_budget().max(1);
    let mut work: Vec<u64> = src.iter().map(|&v| v as u64).collect();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    let mut pending = 0u64;

    for col in 0..cols {
        if rank == rows {
            break;
        }
        let mut found = None;
        for r in rank..rows {
            let v = work[r * cols + col] % p;
            work[r * cols + col] = v;
            if v != 0 {
                found = Some(r);
                break;
            }
        }
        let Some(pr) = found else { continue };
        if pr != rank {
            for c in 0..cols {
                work.swap(pr * cols + c, rank * cols + c);
            }
        }
        let lead = work[rank * cols + col] as u32;
        let inv = field.inv(lead) as u64;
        let mut piv: Vec<u64> = work[rank * cols + col..(rank + 1) * cols]
            .iter()
            .map(|&v| (v % p) * inv % p)
            .collect();
        piv[0] = 1;
        work[rank * cols + col..(rank + 1) * cols].copy_from_slice(&piv);

        let update = |r: usize, row: &mut [u64]| {
            if r == rank {
                return;
            }
            let f = row[col] % p;
            if f == 0 {
                row[col] = 0;
                return;
            }
            let g = p - f;
            for (dst, &s) in row[col..].iter_mut().zip(&piv) {
                *dst += g * s;
            }
            row[col] = 0;
        };
        if rows * (cols - col) >= PAR_THRESHOLD {
            work.par_chunks_mut(cols)
                .enumerate()
                .for_each(|(r, row)| update(r, row));
        } else {
            work.chunks_mut(cols)
                .enumerate()
                .for_each(|(r, row)| update(r, row));
        }
        pending += 1;
        if pending >= budget {
            work.iter_mut().for_each(|v| *v %= p);
            pending = 0;
        }
        pivots.push(col);
        rank += 1;
    }
    let data = work.into_iter().map(|v| (v % p) as u32).collect();
    (data, pivots)
}

/// A linear subspace of GF(p)^n held by its RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: DenseMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: DenseMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: DenseMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_rows(field: PrimeField, ambient: usize, rows: &[Vec<u32>]) -> Self {
        Self::from_matrix(&DenseMatrix::from_rows(field, ambient, rows))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &DenseMatrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let data = r.data[..k * m.cols].to_vec();
        Subspace {
            ambient: m.cols,
            basis: DenseMatrix {
                field: m.field,
                rows: k,
                cols: m.cols,
                data,
            },
            pivots,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }
    pub fn basis(&self) -> &DenseMatrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vector(&self, i: usize) -> &[u32] {
        self.basis.row(i)
    }
    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Residue of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let p = f.modulus() as u64;
        let mut out = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let a = out[c];
            if a == 0 {
                continue;
            }
            let g = (p - a as u64) % p;
            for (dst, &s) in out.iter_mut().zip(self.basis.row(i)) {
                if s != 0 {
                    *dst = ((*dst as u64 + g * s as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                left: self.ambient,
                right: v.len(),
            });
        }
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok((0..self.dim()).all(|i| other.reduce(self.basis.row(i)).iter().all(|&x| x == 0)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Subspace::from_rows(self.field(), self.ambient, &rows))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut rows = self.annihilator().basis_vectors();
        rows.extend(other.annihilator().basis_vectors());
        if rows.is_empty() {
            return Ok(Subspace::full(self.field(), self.ambient));
        }
        Ok(DenseMatrix::from_rows(self.field(), self.ambient, &rows).kernel_basis())
    }

    /// `dim self - dim sub`, after checking `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, LinalgError> {
        if !sub.is_subspace_of(self)? {
            return Err(LinalgError::NotContained);
        }
        Ok(self.dim() - sub.dim())
    }

    /// The orthogonal complement under the coordinate pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel_basis()
    }

    /// `{ u ∈ self : u·v = 0 for every v in vs }`.
    pub fn orthogonal_part(&self, vs: &[Vec<u32>]) -> Subspace {
        if vs.is_empty() || self.is_zero() {
            return self.clone();
        }
        let f = self.field();
        let p = f.modulus() as u64;
        let k = self.dim();
        let mut m = DenseMatrix::zeros(f, vs.len(), k);
        for (j, v) in vs.iter().enumerate() {
            assert_eq!(v.len(), self.ambient);
            for i in 0..k {
                let dot = self
                    .basis
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                m.set(j, i, dot as u32);
            }
        }
        let combos = m.kernel_basis();
        let rows: Vec<Vec<u32>> = (0..combos.dim())
            .map(|c| {
                let coef = combos.basis_vector(c);
                let mut acc = vec![0u64; self.ambient];
                for (i, &a) in coef.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (slot, &b) in acc.iter_mut().zip(self.basis.row(i)) {
                        *slot = (*slot + a as u64 * b as u64) % p;
                    }
                }
                acc.into_iter().map(|x| x as u32).collect()
            })
            .collect();
        Subspace::from_rows(f, self.ambient, &rows)
    }

    /// Basis vectors of `self` that extend a basis of `sub` (chosen by pivoting).
    pub fn complement_of(&self, sub: &Subspace) -> Result<Vec<Vec<u32>>, LinalgError> {
        self.check(sub)?;
        let f = self.field();
        let p = f.modulus() as u64;
        // fully reduced rows keyed by pivot column
        let mut rows: Vec<(usize, Vec<u32>)> = sub
            .pivots
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, sub.basis.row(i).to_vec()))
            .collect();
        let mut out = Vec::new();
        for v in self.basis_vectors() {
            let mut r = v.clone();
            for (c, row) in &rows {
                let a = r[*c];
                if a != 0 {
                    let g = p - a as u64;
                    for (dst, &s) in r.iter_mut().zip(row) {
                        if s != 0 {
                            *dst = ((*dst as u64 + g * s as u64) % p) as u32;
                        }
                    }
                }
            }
            let Some(c) = r.iter().position(|&x| x != 0) else {
                continue;
            };
            let inv = f.inv(r[c]);
            r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
            for (_, row) in rows.iter_mut() {
                let a = row[c];
                if a != 0 {
                    let g = p - a as u64;
                    for (dst, &s) in row.iter_mut().zip(&r) {
                        if s != 0 {
                            *dst = ((*dst as u64 + g * s as u64) % p) as u32;
                        }
                    }
                }
            }
            rows.push((c, r));
            out.push(v);
        }
        if rows.len() != self.dim() || !sub.is_subspace_of(self)? {
            return Err(LinalgError::NotContained);
        }
        Ok(out)
    }
}
