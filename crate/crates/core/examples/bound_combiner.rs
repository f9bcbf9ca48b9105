//! Concordance-genus intervals from raw invariants, and from table records.

use kcg::bounds::BoundInputs;
use kcg::gc_bounds;
use kcg::tabledata::fixtures;

fn main() -> kcg::Result<()> {
    // g₃ = 3, g₄ ∈ [1, 2], σ = 2, polynomial bound 2.
    let b = BoundInputs {
        genus3: 3,
        genus4_lo: 1,
        signature: Some(2),
        polynomial: Some(2),
        polynomial_uses_jump: false,
    }
    .combine()?;
    println!("raw inputs: [{}, {}] {} via {}", b.lower, b.upper, b.status.as_str(), b.contributors_string());

    for k in fixtures::worked_11().records() {
        let b = gc_bounds(k)?;
        println!("{:8} [{}, {}] {:12} {}", k.name, b.lower, b.upper, b.status.as_str(), b.contributors_string());
    }
    Ok(())
}
