//! Degreewise minimal syzygies of maps between graded free modules.

use crate::field::PrimeField;
use crate::forms::{mono_index, monomials, n_monomials};
use crate::linalg::{DenseMatrix, Subspace};
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

/// ⊕ R(−d_i): the degree-u piece is ⊕ R_{u−d_i}, blocks in basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub degrees: Vec<usize>,
}

impl FreeModule {
    pub fn new(degrees: Vec<usize>) -> Self {
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// (offset, block degree) per basis element present in degree u.
    fn blocks(&self, u: usize) -> Vec<Option<(usize, usize)>> {
        let mut off = 0;
        self.degrees
            .iter()
            .map(|&d| {
                (d <= u).then(|| {
                    let b = (off, u - d);
                    off += n_monomials(u - d);
                    b
                })
            })
            .collect()
    }

    pub fn piece_dim(&self, u: usize) -> usize {
        self.degrees
            .iter()
            .filter(|&&d| d <= u)
            .map(|&d| n_monomials(u - d))
            .sum()
    }

    /// Slice of a degree-u vector belonging to basis element i (empty if absent).
    pub fn component<'a>(&self, u: usize, v: &'a [u32], i: usize) -> &'a [u32] {
        match self.blocks(u)[i] {
            Some((off, k)) => &v[off..off + n_monomials(k)],
            None => &[],
        }
    }

    /// m · v for v of degree u and monomial exponent m.
    pub fn shift(&self, u: usize, v: &[u32], m: [u32; 3]) -> Vec<u32> {
        let k = (m[0] + m[1] + m[2]) as usize;
        let src = self.blocks(u);
        let dst = self.blocks(u + k);
        let mut out = vec![0u32; self.piece_dim(u + k)];
        for (i, d) in dst.iter().enumerate() {
            let Some((doff, _)) = *d else { continue };
            let Some((soff, sdeg)) = src[i] else { continue };
            for (j, e) in monomials(sdeg).iter().enumerate() {
                let c = v[soff + j];
                if c != 0 {
                    out[doff + mono_index([e[0] + m[0], e[1] + m[1], e[2] + m[2]])] = c;
                }
            }
        }
        out
    }
}

/// A degree-preserving map F → G given by the images of F's basis.
#[derive(Debug, Clone)]
pub struct FreeMap {
    pub field: PrimeField,
    pub source: FreeModule,
    pub target: FreeModule,
    /// image of basis element i, as a vector of degree source.degrees[i] in G.
    pub images: Vec<Vec<u32>>,
}

impl FreeMap {
    /// The map R(−d)^n → R sending e_i to the form g_i.
    pub fn from_forms(field: PrimeField, forms: &[(usize, Vec<u32>)]) -> Self {
        FreeMap {
            field,
            source: FreeModule::new(forms.iter().map(|f| f.0).collect()),
            target: FreeModule::new(vec![0]),
            images: forms.iter().map(|f| f.1.clone()).collect(),
        }
    }

    /// Matrix of the map in degree u: columns indexed by the source piece.
    pub fn matrix(&self, u: usize) -> DenseMatrix {
        let rows = self.target.piece_dim(u);
        let mut cols: Vec<Vec<u32>> = Vec::new();
        for (i, &d) in self.source.degrees.iter().enumerate() {
            if d > u {
                continue;
            }
            for m in monomials(u - d) {
                cols.push(self.target.shift(d, &self.images[i], m));
            }
        }
        DenseMatrix::from_rows(self.field, rows, &cols).transpose()
    }

    pub fn kernel(&self, u: usize) -> Subspace {
        let m = self.matrix(u);
        if m.cols() == 0 {
            return Subspace::zero(self.field, 0);
        }
        m.kernel_basis()
    }
}

/// Minimal syzygies found on a window of degrees.
#[derive(Debug, Clone, Default)]
pub struct SyzygyData {
    /// minimal syzygy count per degree (zeros included for the window)
    pub counts: BTreeMap<usize, usize>,
    /// chosen minimal syzygy vectors per degree, in the source module
    pub vectors: BTreeMap<usize, Vec<Vec<u32>>>,
}

impl SyzygyData {
    pub fn count(&self, u: usize) -> usize {
        self.counts.get(&u).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Degrees with a nonzero count.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&u, &c)| (u, c))
            .collect()
    }

    /// The next map in the resolution: minimal syzygies → source.
    pub fn as_map(&self, field: PrimeField, source_of: &FreeModule) -> FreeMap {
        let mut degrees = Vec::new();
        let mut images = Vec::new();
        for (&u, vs) in &self.vectors {
            for v in vs {
                degrees.push(u);
                images.push(v.clone());
            }
        }
        FreeMap {
            field,
            source: FreeModule::new(degrees),
            target: source_of.clone(),
            images,
        }
    }
}

const VARS: [[u32; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// Minimal syzygies of `map` in each degree of `window`:
/// count at u = dim K_u − dim R₁·K_{u−1}, vectors chosen by pivoting.
pub fn minimal_syzygies(map: &FreeMap, window: RangeInclusive<usize>) -> SyzygyData {
    let f = map.field;
    let mut out = SyzygyData::default();
    let lo = *window.start();
    let mut prev = if lo == 0 {
        None
    } else {
        Some(map.kernel(lo - 1))
    };
    for u in window {
        let k = map.kernel(u);
        let n = map.source.piece_dim(u);
        let lifted = match &prev {
            Some(kp) if kp.dim() > 0 => {
                let mut rows = Vec::with_capacity(3 * kp.dim());
                for v in kp.basis_vectors() {
                    for m in VARS {
                        rows.push(map.source.shift(u - 1, &v, m));
                    }
                }
                Subspace::from_rows(f, n, &rows)
            }
            _ => Subspace::zero(f, n),
        };
        let fresh = if n == 0 {
            Vec::new()
        } else {
            k.complement_of(&lifted).expect("R1·K_{u-1} ⊆ K_u")
        };
        out.counts.insert(u, fresh.len());
        out.vectors.insert(u, fresh);
        prev = Some(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::mono_index;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn mono(e: [u32; 3]) -> Vec<u32> {
        let t = (e[0] + e[1] + e[2]) as usize;
        let mut v = vec![0; n_monomials(t)];
        v[mono_index(e)] = 1;
        v
    }

    #[test]
    fn koszul_complex_of_the_variables() {
        let f = gf();
        let map = FreeMap::from_forms(
            f,
            &[
                (1, mono([1, 0, 0])),
                (1, mono([0, 1, 0])),
                (1, mono([0, 0, 1])),
            ],
        );
        let first = minimal_syzygies(&map, 1..=4);
        assert_eq!(first.support(), vec![(2, 3)]);
        let second = minimal_syzygies(&first.as_map(f, &map.source), 2..=5);
        assert_eq!(second.support(), vec![(3, 1)]);
    }

    #[test]
    fn quadrics_of_three_points() {
        // (xy, xz, yz): two linear syzygies, Hilbert–Burch
        let f = gf();
        let map = FreeMap::from_forms(
            f,
            &[
                (2, mono([1, 1, 0])),
                (2, mono([1, 0, 1])),
                (2, mono([0, 1, 1])),
            ],
        );
        let syz = minimal_syzygies(&map, 2..=5);
        assert_eq!(syz.support(), vec![(3, 2)]);
        let second = minimal_syzygies(&syz.as_map(f, &map.source), 3..=6);
        assert_eq!(second.total(), 0);
    }
}
