//! Complex roots via companion-matrix eigenvalues with Newton polishing, and
//! detection of roots on the unit circle.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A root is on the unit circle when `||z| - 1|` is below this.
pub const UNIT_CIRCLE_TOL: f64 = 1e-8;

/// Angles closer than this are the same angle.
pub const ANGLE_MERGE_TOL: f64 = 1e-9;

/// All complex roots of `p`. Intended for squarefree inputs; multiple roots
/// converge slowly under Newton polishing.
pub fn complex_roots(p: &LaurentPoly) -> Result<Vec<Complex64>> {
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().ok_or(Error::RootIsolation))
        .collect::<Result<_>>()?;
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[d];
    let mut companion = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        companion[(i, d - 1)] = -coeffs[i] / lead;
    }
    let eig = companion.complex_eigenvalues();
    let mut roots = Vec::with_capacity(d);
    for z in eig.iter() {
        let z = polish(&coeffs, *z);
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::RootIsolation);
        }
        roots.push(z);
    }
    Ok(roots)
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut val = Complex64::new(0.0, 0.0);
    let mut der = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        der = der * z + val;
        val = val * z + c;
    }
    (val, der)
}

fn polish(coeffs: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..60 {
        let (v, d) = horner(coeffs, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = v / d;
        z -= step;
        if step.norm() <= 1e-15 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Angles in `(0, π]` of the unit-circle roots of a squarefree polynomial,
/// conjugate pairs merged, sorted ascending.
pub fn unit_circle_angles_squarefree(p: &LaurentPoly) -> Result<Vec<f64>> {
    let mut angles: Vec<f64> = complex_roots(p)?
        .into_iter()
        .filter(|z| (z.norm() - 1.0).abs() < UNIT_CIRCLE_TOL)
        .map(|z| z.arg().abs())
        .filter(|&a| a > ANGLE_MERGE_TOL)
        .collect();
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < ANGLE_MERGE_TOL);
    Ok(angles)
}

/// Unit-circle root angles of an arbitrary polynomial, found factor by factor.
pub fn unit_circle_angles(p: &LaurentPoly) -> Result<Vec<f64>> {
    let f = p.factor()?;
    let mut angles = Vec::new();
    for (q, _) in f.factors() {
        angles.extend(unit_circle_angles_squarefree(q)?);
    }
    angles.sort_by(f64::total_cmp);
    angles.dedup_by(|a, b| (*a - *b).abs() < ANGLE_MERGE_TOL);
    Ok(angles)
}
