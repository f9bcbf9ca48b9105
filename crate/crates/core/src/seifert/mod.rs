//! Seifert matrices and the invariants read off them.
//!
//! For a Seifert matrix `V` of a knot:
//!
//! * the Alexander polynomial is `det(V - t·Vᵀ)`;
//! * the Murasugi signature is the signature of `V + Vᵀ`, computed exactly;
//! * the Levine–Tristram signature at `ω = e^{iθ}` is the signature of the
//!   Hermitian matrix `(1-ω)V + (1-ω̄)Vᵀ`, averaged over the two one-sided
//!   limits at roots of the Alexander polynomial.
//!
//! The text encoding separates rows by `;` and entries by `,`, e.g. `-1,1;0,-1`.
//! The empty string is the `0×0` matrix of the unknot.

pub mod congruence;
pub mod roots;
mod signature;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub use signature::{JumpPoint, SignatureArc, SignatureProfile, ZERO_EIGEN_REL_TOL};

/// Square integer matrix of even size with `det(V - Vᵀ) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert("matrix is not square".into()));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidSeifert(format!("odd size {n}")));
        }
        let entries: Vec<BigInt> = rows.into_iter().flatten().collect();
        let v = SeifertMatrix { n, entries };
        let skew: Vec<BigInt> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                v.at(i, j) - v.at(j, i)
            })
            .collect();
        if !det(n, skew).is_one() {
            return Err(Error::NotKnotSeifert);
        }
        Ok(v)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// The `0×0` matrix (unknot).
    pub fn empty() -> Self {
        SeifertMatrix { n: 0, entries: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.n / 2
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    /// Seifert matrix of the connected sum (block diagonal sum).
    pub fn block_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let n = self.n + other.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = self.at(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                entries[(self.n + i) * n + self.n + j] = other.at(i, j).clone();
            }
        }
        SeifertMatrix { n, entries }
    }

    /// Seifert matrix of the mirror image, `-V`.
    pub fn mirror(&self) -> SeifertMatrix {
        SeifertMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// `det(V - t·Vᵀ)` in canonical form.
    pub fn alexander(&self) -> Result<LaurentPoly> {
        let n = self.n;
        // The determinant has degree ≤ n: interpolate through t = 0..=n.
        let values: Vec<BigInt> = (0..=n)
            .map(|t| {
                let t = BigInt::from(t);
                let m: Vec<BigInt> = (0..n * n)
                    .map(|k| {
                        let (i, j) = (k / n, k % n);
                        self.at(i, j) - &t * self.at(j, i)
                    })
                    .collect();
                det(n, m)
            })
            .collect();
        let coeffs = interpolate_unit_grid(&values);
        let p = LaurentPoly::canonicalize(&coeffs, 0).map_err(|_| Error::NotKnotSeifert)?;
        if !p.is_knot_polynomial() {
            return Err(Error::NotKnotSeifert);
        }
        Ok(p)
    }

    /// Signature of `V + Vᵀ` by exact congruence diagonalisation.
    pub fn murasugi_signature(&self) -> i64 {
        congruence::inertia(self.n, &self.symmetrized()).signature()
    }

    /// Levine–Tristram signature at `ω = e^{iθ}`, `θ ∈ (0, π]`.
    pub fn lt_signature(&self, theta: f64) -> Result<num_rational::Ratio<i64>> {
        signature::lt_signature(self, theta)
    }

    pub fn signature_profile(&self) -> Result<SignatureProfile> {
        signature::signature_profile(self)
    }

    fn symmetrized(&self) -> Vec<BigInt> {
        let n = self.n;
        (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                self.at(i, j) + self.at(j, i)
            })
            .collect()
    }

    pub(crate) fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.at(i, j).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }
}

/// Fraction-free (Bareiss) determinant of a row-major integer matrix.
pub(crate) fn det(n: usize, entries: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = entries.chunks(n).map(|r| r.to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Monomial coefficients of the polynomial of degree < `values.len()`
/// taking `values[k]` at `t = k`. Uses forward differences in the falling
/// factorial basis: `p(t) = Σ (Δᵏp(0) / k!) · t(t-1)…(t-k+1)`, where each
/// quotient is exact for polynomials with integer coefficients.
fn interpolate_unit_grid(values: &[BigInt]) -> Vec<BigInt> {
    let n = values.len();
    let mut out = vec![BigInt::zero(); n];
    let mut diffs = values.to_vec();
    let mut falling = vec![BigInt::one()];
    let mut fact = BigInt::one();
    for k in 0..n {
        if k > 0 {
            fact *= BigInt::from(k);
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (i, f) in falling.iter().enumerate() {
                next[i + 1] += f;
                next[i] -= f * &shift;
            }
            falling = next;
        }
        let (c, r) = diffs[0].div_rem(&fact);
        debug_assert!(r.is_zero(), "non-integral interpolation coefficient");
        for (i, f) in falling.iter().enumerate() {
            out[i] += &c * f;
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

impl FromStr for SeifertMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SeifertMatrix::empty());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SeifertMatrix::new(rows)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.at(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(c).unwrap()
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(SeifertMatrix::empty().alexander().unwrap(), LaurentPoly::one());
        let trefoil = SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap();
        assert_eq!(trefoil.alexander().unwrap(), lp(&[1, -1, 1]));
        let fig8 = SeifertMatrix::from_i64(&[&[1, 1], &[0, -1]]).unwrap();
        assert_eq!(fig8.alexander().unwrap(), lp(&[1, -3, 1]));
        let sum = trefoil.block_sum(&fig8);
        assert_eq!(sum.alexander().unwrap(), lp(&[1, -4, 5, -4, 1]));
    }

    #[test]
    fn murasugi_examples() {
        assert_eq!(SeifertMatrix::empty().murasugi_signature(), 0);
        let trefoil = SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap();
        assert_eq!(trefoil.murasugi_signature(), -2);
        assert_eq!(trefoil.mirror().murasugi_signature(), 2);
        let fig8 = SeifertMatrix::from_i64(&[&[1, 1], &[0, -1]]).unwrap();
        assert_eq!(fig8.murasugi_signature(), 0);
    }

    #[test]
    fn construction_rejects_non_knot_forms() {
        assert_eq!(
            SeifertMatrix::from_i64(&[&[1, 0], &[0, 1]]),
            Err(Error::NotKnotSeifert)
        );
        assert!(matches!(
            SeifertMatrix::from_i64(&[&[1]]),
            Err(Error::InvalidSeifert(_))
        ));
        assert!(matches!(
            SeifertMatrix::from_i64(&[&[1, 2], &[3]]),
            Err(Error::InvalidSeifert(_))
        ));
    }

    #[test]
    fn text_encoding() {
        let v: SeifertMatrix = "-1,1;0,-1".parse().unwrap();
        assert_eq!(v.to_string(), "-1,1;0,-1");
        assert_eq!("".parse::<SeifertMatrix>().unwrap().size(), 0);
        assert!("1,a;0,1".parse::<SeifertMatrix>().is_err());
    }

    #[test]
    fn bareiss_determinant() {
        let m: Vec<BigInt> = [0, 2, 1, 3, 0, 4, 5, 6, 0].iter().map(|&x| x.into()).collect();
        // 0·(0-24) - 2·(0-20) + 1·(18-0) = 58
        assert_eq!(det(3, m), BigInt::from(58));
    }
}
