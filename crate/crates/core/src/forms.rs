//! Ternary forms in coordinates x, y, z.
//!
//! Degree-t monomials x^a y^b z^c are indexed in degree-lexicographic order
//! with x > y > z: `x^t, x^{t-1}y, x^{t-1}z, x^{t-2}y^2, ...`.

use crate::field::PrimeField;

/// Exponent triple (a, b, c) of x^a y^b z^c.
pub type Exponent = [u32; 3];

/// Number of monomials of degree t, C(t+2, 2).
pub fn n_monomials(t: usize) -> usize {
    (t + 1) * (t + 2) / 2
}

/// Position of a monomial inside its degree.
#[inline]
pub fn mono_index(e: Exponent) -> usize {
    let t = (e[0] + e[1] + e[2]) as usize;
    let ta = t - e[0] as usize;
    ta * (ta + 1) / 2 + (ta - e[1] as usize)
}

/// All monomials of degree t in index order.
pub fn monomials(t: usize) -> Vec<Exponent> {
    let t = t as u32;
    let mut out = Vec::with_capacity(n_monomials(t as usize));
    for a in (0..=t).rev() {
        for b in (0..=t - a).rev() {
            out.push([a, b, t - a - b]);
        }
    }
    out
}

/// Index in degree t+1 of variable `v` times monomial `i` of degree t.
#[inline]
pub fn times_var(t: usize, i: usize, v: usize) -> usize {
    let mut e = exponent_at(t, i);
    e[v] += 1;
    mono_index(e)
}

/// Inverse of [`mono_index`].
pub fn exponent_at(t: usize, i: usize) -> Exponent {
    // ta = t - a is the largest k with k(k+1)/2 <= i
    let mut ta = ((((8 * i + 1) as f64).sqrt() as usize).saturating_sub(1)) / 2;
    while (ta + 1) * (ta + 2) / 2 <= i {
        ta += 1;
    }
    while ta * (ta + 1) / 2 > i {
        ta -= 1;
    }
    let c = (i - ta * (ta + 1) / 2) as u32;
    let a = (t - ta) as u32;
    let b = ta as u32 - c;
    [a, b, c]
}

/// A homogeneous form stored by its coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    pub degree: usize,
    pub coeffs: Vec<u32>,
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Form {
            degree,
            coeffs: vec![0; n_monomials(degree)],
        }
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<u32>) -> Self {
        assert_eq!(coeffs.len(), n_monomials(degree));
        Form { degree, coeffs }
    }

    pub fn monomial(e: Exponent, c: u32) -> Self {
        let t = (e[0] + e[1] + e[2]) as usize;
        let mut f = Self::zero(t);
        f.coeffs[mono_index(e)] = c;
        f
    }

    /// The coordinate variable x (0), y (1) or z (2).
    pub fn var(v: usize) -> Self {
        let mut e = [0; 3];
        e[v] = 1;
        Self::monomial(e, 1)
    }

    pub fn linear(a: u32, b: u32, c: u32) -> Self {
        Form::from_coeffs(1, vec![a, b, c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, f: PrimeField, other: &Form) -> Form {
        assert_eq!(self.degree, other.degree);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Form::from_coeffs(self.degree, coeffs)
    }

    pub fn scale(&self, f: PrimeField, c: u32) -> Form {
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        Form::from_coeffs(self.degree, coeffs)
    }

    pub fn neg(&self, f: PrimeField) -> Form {
        self.scale(f, f.neg(1))
    }

    pub fn mul(&self, f: PrimeField, other: &Form) -> Form {
        let p = f.modulus() as u64;
        let deg = self.degree + other.degree;
        let mut acc = vec![0u64; n_monomials(deg)];
        let ea = monomials(self.degree);
        let eb = monomials(other.degree);
        for (i, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let e = [
                    ea[i][0] + eb[j][0],
                    ea[i][1] + eb[j][1],
                    ea[i][2] + eb[j][2],
                ];
                let k = mono_index(e);
                acc[k] = (acc[k] + ca as u64 * cb as u64) % p;
            }
        }
        Form::from_coeffs(deg, acc.into_iter().map(|v| v as u32).collect())
    }

    /// Evaluates at an affine representative of a point.
    pub fn eval(&self, f: PrimeField, pt: [u32; 3]) -> u32 {
        monomials(self.degree)
            .iter()
            .zip(&self.coeffs)
            .fold(0, |acc, (e, &c)| {
                let m = f.mul(
                    f.mul(f.pow(pt[0], e[0] as u64), f.pow(pt[1], e[1] as u64)),
                    f.pow(pt[2], e[2] as u64),
                );
                f.add(acc, f.mul(c, m))
            })
    }
}

/// Products of each degree-t coefficient vector with every degree-k monomial,
/// as degree-(t+k) coefficient vectors.
pub fn multiply_span(t: usize, k: usize, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let src = monomials(t);
    let mults = monomials(k);
    let n = n_monomials(t + k);
    let mut out = Vec::with_capacity(basis.len() * mults.len());
    for v in basis {
        for m in &mults {
            let mut w = vec![0u32; n];
            for (i, &c) in v.iter().enumerate() {
                if c != 0 {
                    let e = src[i];
                    w[mono_index([e[0] + m[0], e[1] + m[1], e[2] + m[2]])] = c;
                }
            }
            out.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        for t in 0..12 {
            let ms = monomials(t);
            assert_eq!(ms.len(), n_monomials(t));
            for (i, &e) in ms.iter().enumerate() {
                assert_eq!(mono_index(e), i);
                assert_eq!(exponent_at(t, i), e);
            }
        }
        assert_eq!(monomials(1), vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(monomials(2)[3], [0, 2, 0]);
    }

    #[test]
    fn product_and_eval_agree() {
        let f = PrimeField::new(101).unwrap();
        let a = Form::linear(1, 2, 3);
        let b = Form::from_coeffs(2, vec![5, 0, 7, 1, 0, 9]);
        let ab = a.mul(f, &b);
        let pt = [4, 17, 33];
        assert_eq!(ab.eval(f, pt), f.mul(a.eval(f, pt), b.eval(f, pt)));
        assert_eq!(times_var(1, 1, 0), mono_index([1, 1, 0]));
    }
}
