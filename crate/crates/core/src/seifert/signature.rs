//! Levine–Tristram signatures and the piecewise-constant signature function
//! on the upper unit semicircle.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Ratio;

use super::roots::{self, ANGLE_MERGE_TOL};
use super::SeifertMatrix;
use crate::error::{Error, Result};

/// An eigenvalue is a zero-crossing hazard when
/// `|λ| < ZERO_EIGEN_REL_TOL · (1 + ‖M‖∞)`.
pub const ZERO_EIGEN_REL_TOL: f64 = 1e-9;

/// Retries at shifted angles when an arc sample is indeterminate.
const SAMPLE_RETRIES: usize = 8;

/// Open interval of angles with a constant signature value.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureArc {
    pub start: f64,
    pub end: f64,
    pub value: i64,
}

/// Discontinuity of the signature function at a unit-circle root of `Δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpPoint {
    pub angle: f64,
    /// Right value minus left value.
    pub jump: i64,
    /// Mean of the two one-sided limits.
    pub averaged: Ratio<i64>,
}

/// The Levine–Tristram signature function on `(0, π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignatureProfile {
    arcs: Vec<SignatureArc>,
    jumps: Vec<JumpPoint>,
    endpoint_value_at_pi: i64,
}

impl SignatureProfile {
    /// Builds a profile from its breakpoints and the value on each arc.
    ///
    /// `values` has one more entry than `angles`; angles must be strictly
    /// increasing inside `(0, π)`, values must be even.
    pub fn from_values(angles: &[f64], values: &[i64]) -> Result<Self> {
        if values.len() != angles.len() + 1 {
            return Err(Error::InconsistentProfile(
                "need exactly one more arc value than breakpoints".into(),
            ));
        }
        if values.iter().any(|v| v % 2 != 0) {
            return Err(Error::InconsistentProfile("arc values must be even".into()));
        }
        let increasing = angles.windows(2).all(|w| w[0] < w[1]);
        if !increasing || angles.iter().any(|&a| !(a > 0.0 && a < PI)) {
            return Err(Error::InconsistentProfile(
                "breakpoints must increase strictly inside (0, π)".into(),
            ));
        }
        let mut bounds = Vec::with_capacity(angles.len() + 2);
        bounds.push(0.0);
        bounds.extend_from_slice(angles);
        bounds.push(PI);
        let arcs = values
            .iter()
            .enumerate()
            .map(|(i, &value)| SignatureArc { start: bounds[i], end: bounds[i + 1], value })
            .collect();
        let jumps = angles
            .iter()
            .enumerate()
            .map(|(i, &angle)| JumpPoint {
                angle,
                jump: values[i + 1] - values[i],
                averaged: Ratio::new(values[i] + values[i + 1], 2),
            })
            .collect();
        Ok(SignatureProfile {
            arcs,
            jumps,
            endpoint_value_at_pi: *values.last().unwrap(),
        })
    }

    pub fn arcs(&self) -> &[SignatureArc] {
        &self.arcs
    }

    pub fn jumps(&self) -> &[JumpPoint] {
        &self.jumps
    }

    pub fn endpoint_value_at_pi(&self) -> i64 {
        self.endpoint_value_at_pi
    }

    /// Jumps with nonzero size.
    pub fn nonzero_jumps(&self) -> impl Iterator<Item = &JumpPoint> {
        self.jumps.iter().filter(|j| j.jump != 0)
    }

    pub fn jump_near(&self, angle: f64, tol: f64) -> Option<&JumpPoint> {
        self.jumps.iter().find(|j| (j.angle - angle).abs() < tol)
    }

    /// Value of the signature function, averaged at jump points.
    pub fn value_at(&self, theta: f64) -> Ratio<i64> {
        if let Some(j) = self.jump_near(theta, ANGLE_MERGE_TOL) {
            return j.averaged;
        }
        if theta >= PI {
            return Ratio::from_integer(self.endpoint_value_at_pi);
        }
        let arc = self
            .arcs
            .iter()
            .find(|a| theta > a.start && theta < a.end)
            .unwrap_or_else(|| self.arcs.last().unwrap());
        Ratio::from_integer(arc.value)
    }
}

/// Hermitian matrix `(1-ω)V + (1-ω̄)Vᵀ` at `ω = e^{iθ}`.
fn hermitian_form(rows: &[Vec<f64>], theta: f64) -> DMatrix<Complex64> {
    let n = rows.len();
    let w = Complex64::from_polar(1.0, theta);
    let a = Complex64::new(1.0, 0.0) - w;
    let b = Complex64::new(1.0, 0.0) - w.conj();
    DMatrix::from_fn(n, n, |i, j| a * rows[i][j] + b * rows[j][i])
}

/// Signature of the Hermitian form at a non-root angle, or an
/// indeterminate-sample error when an eigenvalue is too close to zero.
fn sample(rows: &[Vec<f64>], theta: f64) -> Result<i64> {
    if rows.is_empty() {
        return Ok(0);
    }
    let m = hermitian_form(rows, theta);
    let norm_inf = m
        .row_iter()
        .map(|r| r.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let tol = ZERO_EIGEN_REL_TOL * (1.0 + norm_inf);
    let eig = m.symmetric_eigenvalues();
    let mut sig = 0i64;
    for &l in eig.iter() {
        if !l.is_finite() || l.abs() < tol {
            return Err(Error::IndeterminateSignature { angle: theta });
        }
        sig += if l > 0.0 { 1 } else { -1 };
    }
    Ok(sig)
}

/// Samples an arc near its midpoint, shifting by sixteenths of the arc
/// length when the first attempts are indeterminate.
fn sample_arc(rows: &[Vec<f64>], start: f64, end: f64) -> Result<i64> {
    let mid = 0.5 * (start + end);
    let step = (end - start) / 16.0;
    let mut last_err = None;
    for attempt in 0..=SAMPLE_RETRIES {
        let k = attempt.div_ceil(2) as f64;
        let sign = if attempt % 2 == 1 { 1.0 } else { -1.0 };
        let theta = mid + sign * k * step;
        match sample(rows, theta) {
            Ok(v) => return Ok(v),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap())
}

pub(super) fn signature_profile(v: &SeifertMatrix) -> Result<SignatureProfile> {
    let delta = v.alexander()?;
    let angles: Vec<f64> = roots::unit_circle_angles(&delta)?
        .into_iter()
        .filter(|&a| a < PI - ANGLE_MERGE_TOL)
        .collect();
    let rows = v.to_f64_rows();
    let mut bounds = vec![0.0];
    bounds.extend_from_slice(&angles);
    bounds.push(PI);
    let values = bounds
        .windows(2)
        .map(|w| sample_arc(&rows, w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    let mut profile = SignatureProfile::from_values(&angles, &values)?;
    // The endpoint is computed exactly; it must agree with the last arc.
    let exact = v.murasugi_signature();
    if exact != profile.endpoint_value_at_pi {
        return Err(Error::IndeterminateSignature { angle: PI });
    }
    profile.endpoint_value_at_pi = exact;
    Ok(profile)
}

pub(super) fn lt_signature(v: &SeifertMatrix, theta: f64) -> Result<Ratio<i64>> {
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::Parse(format!("angle {theta} outside (0, π]")));
    }
    let delta = v.alexander()?;
    let at_root = roots::unit_circle_angles(&delta)?
        .iter()
        .any(|&a| (a - theta).abs() < ANGLE_MERGE_TOL);
    if at_root {
        return Ok(signature_profile(v)?.value_at(theta));
    }
    sample(&v.to_f64_rows(), theta).map(Ratio::from_integer)
}
