//! Dense univariate polynomials over the integers.
//!
//! Coefficient vectors are stored lowest degree first and kept trimmed: the
//! last entry is nonzero, and the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn lc(p: &[BigInt]) -> &BigInt {
    p.last().expect("leading coefficient of zero polynomial")
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(out)
}

pub(crate) fn scale(p: &[BigInt], c: &BigInt) -> ZPoly {
    trim(p.iter().map(|x| x * c).collect())
}

pub(crate) fn derivative(p: &[BigInt]) -> ZPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> ZPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if lc(p).is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact quotient `a / b` in `Z[x]`, or `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = lc(b);
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(trim(q))
    } else {
        None
    }
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lb = lc(b).clone();
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let top = lc(&rem).clone();
        for x in rem.iter_mut() {
            *x *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        rem = trim(rem);
    }
    rem
}

/// Primitive gcd with positive leading coefficient (primitive PRS). Contents
/// are ignored, so coprime inputs give `1`.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.is_empty() {
        return x;
    }
    loop {
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            break;
        }
        x = y;
        y = primitive(&r);
    }
    let g = primitive(&y);
    if g.len() == 1 {
        vec![BigInt::one()]
    } else {
        g
    }
}

pub(crate) fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

#[cfg(test)]
pub(crate) fn from_i64(v: &[i64]) -> ZPoly {
    trim(v.iter().map(|&c| BigInt::from(c)).collect())
}
