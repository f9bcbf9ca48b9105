//! Generators and oracles shared by the integration tests.
#![allow(dead_code)]

use kcg::{LaurentPoly, SeifertMatrix};
use num_bigint::BigInt;
use rand::Rng;

pub fn lp(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64(c).unwrap()
}

/// Random polynomial of the given degree with coefficients in `[-range, range]`,
/// nonzero at both ends.
pub fn random_poly<R: Rng>(rng: &mut R, degree: usize, range: i64) -> LaurentPoly {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-range..=range)).collect();
    for end in [0, degree] {
        while c[end] == 0 {
            c[end] = rng.gen_range(-range..=range);
        }
    }
    lp(&c)
}

/// `V = A + S` with `A` block-diagonal copies of `[[0,1],[0,0]]` and `S`
/// symmetric with entries in `[-range, range]`, so `V - Vᵀ` is the standard
/// symplectic form and `det(V - Vᵀ) = 1`.
pub fn random_seifert<R: Rng>(rng: &mut R, genus: usize, range: i64) -> SeifertMatrix {
    let n = 2 * genus;
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let s = rng.gen_range(-range..=range);
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    for k in 0..genus {
        m[2 * k][2 * k + 1] += 1;
    }
    let rows = m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    SeifertMatrix::new(rows).expect("construction gives a knot Seifert matrix")
}

/// Uniform integer matrices of size `n`, kept only when `det(V - Vᵀ) = 1`.
pub fn rejection_seifert<R: Rng>(rng: &mut R, n: usize, range: i64, tries: usize) -> Option<SeifertMatrix> {
    (0..tries).find_map(|_| {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-range..=range))).collect())
            .collect();
        SeifertMatrix::new(rows).ok()
    })
}

/// Symmetric irreducible polynomials (cyclotomic, or with no rational roots
/// and no quadratic splitting).
pub const SYMMETRIC_POOL: &[&[i64]] = &[
    &[1, -1, 1],
    &[1, -3, 1],
    &[2, -3, 2],
    &[3, -5, 3],
    &[4, -7, 4],
    &[1, -1, 1, -1, 1],
    &[1, -3, 3, -3, 1],
];

/// Irreducible polynomials that are not reciprocal-invariant; each is used
/// together with its reciprocal.
pub const ASYMMETRIC_POOL: &[&[i64]] = &[&[2, -1], &[3, -1], &[1, -1, -1], &[1, -2, 3, -1]];

/// A random palindromic product of total degree ≤ `max_degree`, returned
/// with the list of irreducible building blocks (with repeats).
pub fn random_palindromic<R: Rng>(rng: &mut R, max_degree: usize) -> (LaurentPoly, Vec<LaurentPoly>) {
    let mut blocks = Vec::new();
    let mut degree = 0;
    for _ in 0..rng.gen_range(0..=6) {
        if rng.gen_bool(0.5) {
            let q = lp(SYMMETRIC_POOL[rng.gen_range(0..SYMMETRIC_POOL.len())]);
            if degree + q.degree() <= max_degree {
                degree += q.degree();
                blocks.push(q);
            }
        } else {
            let q = lp(ASYMMETRIC_POOL[rng.gen_range(0..ASYMMETRIC_POOL.len())]);
            if degree + 2 * q.degree() <= max_degree {
                degree += 2 * q.degree();
                blocks.push(q.reciprocal());
                blocks.push(q);
            }
        }
    }
    let delta = blocks.iter().fold(LaurentPoly::one(), |acc, q| &acc * q);
    (delta, blocks)
}

/// Minimal-degree `g` over every decomposition `Δ ≐ g·f·f(t⁻¹)`. The
/// divisors `f` of `Δ` are exactly the sub-multisets of its irreducible
/// building blocks; each candidate is tested by exact polynomial division.
pub fn residual_oracle(delta: &LaurentPoly, blocks: &[LaurentPoly]) -> LaurentPoly {
    let mut best = delta.clone();
    for mask in 0u32..1 << blocks.len() {
        let f = blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(LaurentPoly::one(), |acc, (_, q)| &acc * q);
        let ff = &f * &f.reciprocal();
        if let Some(g) = delta.checked_div(&ff) {
            if g.degree() < best.degree() {
                best = g;
            }
        }
    }
    best
}
