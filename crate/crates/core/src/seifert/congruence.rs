//! Exact inertia of symmetric rational matrices by congruence
//! diagonalisation (symmetric Gaussian elimination over `Q`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `(positive, negative, zero)` counts of the diagonal after congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of a symmetric integer matrix given row-major.
pub fn inertia(n: usize, entries: &[BigInt]) -> Inertia {
    assert_eq!(entries.len(), n * n);
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(entries[i * n + j].clone()))
                .collect()
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(a[i][j], a[j][i], "matrix not symmetric");
        }
    }
    let mut res = Inertia { positive: 0, negative: 0, zero: 0 };
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // all remaining diagonal entries vanish: row/col k += row/col j
                // makes the pivot 2·a[k][j]
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                res.zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for c in k..n {
                let v = &factor * &a[k][c];
                a[i][c] -= v;
            }
            for r in k..n {
                let v = &factor * &a[r][k];
                a[r][i] -= v;
            }
        }
        if pivot.is_positive() {
            res.positive += 1;
        } else {
            res.negative += 1;
        }
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn definite_and_indefinite() {
        let neg = inertia(2, &m(&[-2, 1, 1, -2]));
        assert_eq!(neg, Inertia { positive: 0, negative: 2, zero: 0 });
        let ind = inertia(2, &m(&[2, 1, 1, -2]));
        assert_eq!(ind.signature(), 0);
    }

    #[test]
    fn zero_diagonal_pivoting() {
        // hyperbolic plane
        let h = inertia(2, &m(&[0, 1, 1, 0]));
        assert_eq!(h, Inertia { positive: 1, negative: 1, zero: 0 });
        let sing = inertia(3, &m(&[0, 0, 0, 0, 1, 0, 0, 0, 0]));
        assert_eq!(sing, Inertia { positive: 1, negative: 0, zero: 2 });
    }
}
