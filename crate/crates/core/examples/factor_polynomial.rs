//! Factor knot polynomials over the integers and read off the Fox–Milnor
//! residual.
//!
//! ```text
//! cargo run --example factor_polynomial -- "1;-6;17;-31;37;-31;17;-6;1"
//! ```

use kcg::{residual, slice_obstruction, LaurentPoly};

fn main() -> kcg::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec![
            "2;-12;30;-39;30;-12;2".to_string(),
            "4;-15;30;-37;30;-15;4".to_string(),
            "1;-6;17;-31;37;-31;17;-6;1".to_string(),
            "2;-5;2".to_string(),
        ]
    } else {
        inputs
    };

    for text in inputs {
        let p: LaurentPoly = text.parse()?;
        let f = p.factor()?;
        println!("{}", p.pretty());
        println!("  factors   {f}");
        println!("  residual  {}", residual(&f)?.pretty());
        println!("  slice obstruction: {:?}", slice_obstruction(&p)?);
    }
    Ok(())
}
