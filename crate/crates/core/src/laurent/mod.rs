//! Integer Laurent polynomials up to units `±t^k`.
//!
//! A [`LaurentPoly`] is always stored in canonical form: lowest exponent 0,
//! nonzero first and last coefficients, positive constant term. Two
//! polynomials that agree up to multiplication by `±t^k` therefore compare
//! equal. The textual encoding used throughout the crate is the list of
//! coefficients, lowest degree first, separated by `;` (e.g. `1;-1;1`).

mod dense;
mod factor;
mod hensel;
mod modp;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest degree accepted by [`LaurentPoly::factor`].
pub const FACTOR_DEGREE_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// Canonical representative of `Σ raw[i] · t^(offset + i)` up to `±t^k`.
    pub fn canonicalize(raw: &[BigInt], offset: i64) -> Result<Self> {
        // The offset only selects a representative of the unit class.
        let _ = offset;
        let start = raw.iter().position(|c| !c.is_zero()).ok_or(Error::ZeroPolynomial)?;
        let end = raw.iter().rposition(|c| !c.is_zero()).unwrap();
        let mut coeffs = raw[start..=end].to_vec();
        if coeffs[0].is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(LaurentPoly { coeffs })
    }

    pub fn from_i64(raw: &[i64]) -> Result<Self> {
        let raw: Vec<BigInt> = raw.iter().map(|&c| BigInt::from(c)).collect();
        Self::canonicalize(&raw, 0)
    }

    pub fn one() -> Self {
        LaurentPoly { coeffs: vec![BigInt::one()] }
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Width of the exponent range (the degree of the canonical representative).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_one(&self) -> bool {
        dense::is_one(&self.coeffs)
    }

    /// Canonical form of `p(t⁻¹)`.
    pub fn reciprocal(&self) -> Self {
        let rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        Self::canonicalize(&rev, 0).expect("nonzero")
    }

    /// `p ≐ p(t⁻¹)`.
    pub fn is_symmetric(&self) -> bool {
        self.reciprocal() == *self
    }

    /// Value of the canonical representative at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        dense::eval(&self.coeffs, x)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_int(&BigInt::from(x))
    }

    /// Whether `|p(1)| = 1`, the normalisation of a knot's Alexander polynomial.
    pub fn is_knot_polynomial(&self) -> bool {
        self.eval_i64(1).abs().is_one()
    }

    /// Exact quotient `self / divisor` up to units, if it exists in `Z[t, t⁻¹]`.
    pub fn checked_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        dense::div_exact(&self.coeffs, &divisor.coeffs)
            .and_then(|q| Self::canonicalize(&q, 0).ok())
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        (0..e).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Complete factorisation into irreducibles over the integers.
    pub fn factor(&self) -> Result<Factorization> {
        if self.degree() > FACTOR_DEGREE_LIMIT {
            return Err(Error::DegreeLimit {
                degree: self.degree(),
                limit: FACTOR_DEGREE_LIMIT,
            });
        }
        let factors = factor::factor_zpoly(&self.coeffs)
            .into_iter()
            .map(|(q, m)| (LaurentPoly::canonicalize(&q, 0).expect("nonzero factor"), m))
            .collect();
        Ok(Factorization::assemble(self, factors))
    }

    /// Evaluate at a complex point (used for root checks).
    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::zero(), |acc, c| {
                acc * z + c.to_f64().unwrap_or(f64::NAN)
            })
    }

    /// Human-readable form such as `1 - t + t^2`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{i}")),
            }
        }
        out
    }
}

impl Ord for LaurentPoly {
    /// By degree, then lexicographically by coefficient list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        // constant terms are positive, so the product is already canonical
        LaurentPoly { coeffs: dense::mul(&self.coeffs, &rhs.coeffs) }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(";"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = s
            .split(';')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad polynomial coefficient {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::canonicalize(&raw, 0)
    }
}

/// Unit sign times a multiset of canonical irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    unit: i8,
    factors: Vec<(LaurentPoly, u32)>,
}

impl Factorization {
    fn assemble(target: &LaurentPoly, mut factors: Vec<(LaurentPoly, u32)>) -> Self {
        factors.sort();
        let product = expand_list(&factors);
        let unit = if product.coeffs[0].is_negative() == target.coeffs[0].is_negative() {
            1
        } else {
            -1
        };
        Factorization { unit, factors }
    }

    /// Builds a factorisation from explicit factors. Each factor is checked
    /// for irreducibility; repeated factors are merged.
    pub fn from_factors(factors: Vec<(LaurentPoly, u32)>) -> Result<Self> {
        let mut merged: Vec<(LaurentPoly, u32)> = Vec::new();
        for (q, m) in factors {
            if m == 0 {
                continue;
            }
            let f = q.factor()?;
            if !f.is_irreducible() {
                return Err(Error::Parse(format!("factor {q} is not irreducible")));
            }
            match merged.iter_mut().find(|(p, _)| *p == q) {
                Some(entry) => entry.1 += m,
                None => merged.push((q, m)),
            }
        }
        merged.sort();
        Ok(Factorization { unit: 1, factors: merged })
    }

    pub fn unit(&self) -> i8 {
        self.unit
    }

    pub fn factors(&self) -> &[(LaurentPoly, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exactly one factor, with multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(q, m)| q.degree() * *m as usize)
            .sum()
    }

    pub fn multiplicity(&self, q: &LaurentPoly) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == q)
            .map_or(0, |(_, m)| *m)
    }

    /// Canonical product of the factors.
    pub fn expand(&self) -> LaurentPoly {
        expand_list(&self.factors)
    }

    /// `unit · ∏ factorᵐ` as a raw coefficient list.
    pub fn expand_signed(&self) -> Vec<BigInt> {
        let p = self.expand();
        p.coeffs.iter().map(|c| c * BigInt::from(self.unit)).collect()
    }

    /// Multiset inclusion: every factor of `self` occurs in `other` with at
    /// least the same multiplicity.
    pub fn divides(&self, other: &Factorization) -> bool {
        self.factors
            .iter()
            .all(|(q, m)| other.multiplicity(q) >= *m)
    }
}

fn expand_list(factors: &[(LaurentPoly, u32)]) -> LaurentPoly {
    factors
        .iter()
        .fold(LaurentPoly::one(), |acc, (q, m)| &acc * &q.pow(*m))
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.unit);
        }
        if self.unit < 0 {
            f.write_str("-1 * ")?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(q, m)| format!("({q})^{m}"))
            .collect();
        f.write_str(&parts.join(" * "))
    }
}
