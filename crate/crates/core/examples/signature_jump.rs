//! The signature-jump enhancement of the Fox–Milnor bound.
//!
//! A squared symmetric factor is normally discarded as `f(t)f(t⁻¹)`. When
//! the signature function jumps at its roots, every concordant knot must
//! still carry it, so the bound doubles back up.

use std::f64::consts::PI;

use kcg::{enhanced_required_factors, gc_poly_lower_bound, Factorization, LaurentPoly, SeifertMatrix, SignatureProfile};

fn main() -> kcg::Result<()> {
    // (1 - t + t²)² (1 - t + t² - t³ + t⁴) with a jump of 4 at π/3.
    let f = Factorization::from_factors(vec![
        (LaurentPoly::from_i64(&[1, -1, 1])?, 2),
        (LaurentPoly::from_i64(&[1, -1, 1, -1, 1])?, 1),
    ])?;
    let profile = SignatureProfile::from_values(&[PI / 3.0], &[0, -4])?;
    let plain = enhanced_required_factors(&f, None)?;
    let jumped = enhanced_required_factors(&f, Some(&profile))?;
    println!("Δ = {}", f.expand().pretty());
    println!("  without profile: required {}, bound {}", plain.enhanced.pretty(), gc_poly_lower_bound(&plain));
    println!("  with jump of 4:  required {}, bound {}", jumped.enhanced.pretty(), gc_poly_lower_bound(&jumped));

    // The same effect computed from a real Seifert matrix: 3_1 # 3_1.
    let trefoil: SeifertMatrix = "-1,1;0,-1".parse()?;
    let v = trefoil.block_sum(&trefoil);
    let delta = v.alexander()?;
    let r = enhanced_required_factors(&delta.factor()?, Some(&v.signature_profile()?))?;
    println!("3_1 # 3_1: Δ = {}", delta.pretty());
    for j in v.signature_profile()?.jumps() {
        println!("  jump {:+} at θ = {:.6}", j.jump, j.angle);
    }
    println!("  residual {}, enhanced {}, bound {}", r.residual.pretty(), r.enhanced.pretty(), gc_poly_lower_bound(&r));
    Ok(())
}
