//! Alexander polynomial, Murasugi signature and the signature function of a
//! few Seifert matrices, including a connected sum.

use std::f64::consts::PI;

use kcg::SeifertMatrix;

fn report(name: &str, v: &SeifertMatrix) -> kcg::Result<()> {
    let profile = v.signature_profile()?;
    println!("{name}: V = [{v}]");
    println!("  alexander   {}", v.alexander()?.pretty());
    println!("  signature   {}", v.murasugi_signature());
    println!("  σ at π/2    {}", v.lt_signature(PI / 2.0)?);
    for j in profile.jumps() {
        println!("  jump {:+} at θ = {:.6} (value there {})", j.jump, j.angle, j.averaged);
    }
    let values: Vec<String> = profile.arcs().iter().map(|a| a.value.to_string()).collect();
    println!("  arc values  {}", values.join(" "));
    Ok(())
}

fn main() -> kcg::Result<()> {
    let trefoil: SeifertMatrix = "-1,1;0,-1".parse()?;
    let figure_eight: SeifertMatrix = "1,1;0,-1".parse()?;
    report("3_1", &trefoil)?;
    report("mirror 3_1", &trefoil.mirror())?;
    report("4_1", &figure_eight)?;
    report("3_1 # 4_1", &trefoil.block_sum(&figure_eight))?;
    report("3_1 # 3_1 # 4_1", &trefoil.block_sum(&trefoil).block_sum(&figure_eight))?;
    Ok(())
}
