//! Fox–Milnor obstruction and the polynomial lower bound on the
//! concordance genus.
//!
//! Write `Δ ≐ g(t)·f(t)·f(t⁻¹)` with `f` of maximal degree. Any knot
//! concordant to `K` has `g(t⁻¹)` dividing its Alexander polynomial, so
//! `deg g ≤ 2·g_c(K)`. The maximal `f` is read off the irreducible factor
//! multiset: reciprocal pairs and even powers of symmetric factors go into
//! `f·f(t⁻¹)`, and `g` is the product of the symmetric factors of odd
//! multiplicity.
//!
//! The signature function is a concordance invariant and only jumps at roots
//! of `Δ`. A discarded symmetric factor carrying a nonzero jump must
//! therefore divide the polynomial of every concordant knot, and Fox–Milnor
//! parity forces its square; such factors are re-added as `q²`.

use crate::error::{Error, Result};
use crate::laurent::{Factorization, LaurentPoly};
use crate::seifert::roots;
use crate::seifert::SignatureProfile;

/// Angular tolerance when matching jumps to root angles.
pub const JUMP_ANGLE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    OddMultiplicitySymmetric,
    SignatureJump,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::OddMultiplicitySymmetric => "odd-multiplicity-symmetric",
            Reason::SignatureJump => "signature-jump",
        }
    }
}

/// Factors that must divide the Alexander polynomial of every knot
/// concordant to a given one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RequiredFactors {
    pub residual: LaurentPoly,
    pub enhanced: LaurentPoly,
    pub contributors: Vec<(LaurentPoly, Reason)>,
}

impl RequiredFactors {
    pub fn uses_jump(&self) -> bool {
        self.enhanced != self.residual
    }

    /// The enhanced polynomial as a factor multiset.
    pub fn required_multiset(&self) -> Factorization {
        let mut parts: Vec<(LaurentPoly, u32)> = Vec::new();
        for (q, reason) in &self.contributors {
            let m = match reason {
                Reason::OddMultiplicitySymmetric => 1,
                Reason::SignatureJump => 2,
            };
            parts.push((q.clone(), m));
        }
        Factorization::from_factors(parts).expect("contributors are irreducible")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// `Δ ≐ f(t)f(t⁻¹)`: the Fox–Milnor condition holds.
    Pass,
    /// The knot is not slice.
    Fail,
}

fn odd_symmetric(f: &Factorization) -> Result<Vec<LaurentPoly>> {
    let mut kept = Vec::new();
    for (q, m) in f.factors() {
        if q.is_symmetric() {
            if m % 2 == 1 {
                kept.push(q.clone());
            }
        } else if f.multiplicity(&q.reciprocal()) != *m {
            return Err(Error::NotPalindromic);
        }
    }
    Ok(kept)
}

/// The `g(t)` of the maximal decomposition `Δ ≐ g·f·f(t⁻¹)`.
pub fn residual(f: &Factorization) -> Result<LaurentPoly> {
    Ok(odd_symmetric(f)?
        .iter()
        .fold(LaurentPoly::one(), |acc, q| &acc * q))
}

/// Fox–Milnor slice test on a knot polynomial.
pub fn slice_obstruction(delta: &LaurentPoly) -> Result<Obstruction> {
    let g = residual(&delta.factor()?)?;
    Ok(if g.is_one() { Obstruction::Pass } else { Obstruction::Fail })
}

/// Residual plus the squares of discarded symmetric factors whose roots
/// carry a nonzero signature jump.
pub fn enhanced_required_factors(
    f: &Factorization,
    profile: Option<&SignatureProfile>,
) -> Result<RequiredFactors> {
    let kept = odd_symmetric(f)?;
    let residual = kept.iter().fold(LaurentPoly::one(), |acc, q| &acc * q);
    let mut contributors: Vec<(LaurentPoly, Reason)> = kept
        .into_iter()
        .map(|q| (q, Reason::OddMultiplicitySymmetric))
        .collect();
    let mut enhanced = residual.clone();

    if let Some(profile) = profile {
        let mut angles_by_factor = Vec::with_capacity(f.factors().len());
        for (q, m) in f.factors() {
            angles_by_factor.push((q, *m, roots::unit_circle_angles_squarefree(q)?));
        }
        for jump in profile.nonzero_jumps() {
            let explained = angles_by_factor
                .iter()
                .any(|(_, _, angles)| angles.iter().any(|a| (a - jump.angle).abs() < JUMP_ANGLE_TOL));
            if !explained {
                return Err(Error::InconsistentProfile(format!(
                    "jump at angle {} is not at a root of the Alexander polynomial",
                    jump.angle
                )));
            }
        }
        for (q, m, angles) in &angles_by_factor {
            if !q.is_symmetric() || m % 2 != 0 {
                continue;
            }
            let jumps = angles.iter().any(|&a| {
                profile
                    .jump_near(a, JUMP_ANGLE_TOL)
                    .is_some_and(|j| j.jump.abs() >= 2)
            });
            if jumps {
                enhanced = &enhanced * &q.pow(2);
                contributors.push(((*q).clone(), Reason::SignatureJump));
            }
        }
    }
    Ok(RequiredFactors { residual, enhanced, contributors })
}

/// `deg(enhanced) / 2`.
pub fn gc_poly_lower_bound(r: &RequiredFactors) -> u32 {
    (r.enhanced.degree() / 2) as u32
}
