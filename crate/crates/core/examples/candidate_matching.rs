//! Low-genus knot sums that could be concordant to a given knot.

use kcg::match_candidates;
use kcg::tabledata::fixtures;

fn main() {
    let worked = fixtures::worked_11();
    let undetermined = fixtures::undetermined_11();
    let reference = fixtures::reference();
    for k in [worked.get("11a_196"), undetermined.get("11n_34")].into_iter().flatten() {
        let matches = match_candidates(k, reference, 2);
        println!("{} ({} candidates)", k.name, matches.len());
        for m in matches.iter().take(8) {
            println!("  {:12} g3 {} crossings {:2} σ {:+} Δ {}", m.expression.to_string(), m.genus3, m.crossings, m.signature, m.alexander.pretty());
        }
    }
}
