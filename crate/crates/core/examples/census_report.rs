//! Classify every knot of a table and print the TSV report.
//!
//! ```text
//! cargo run --example census_report -- path/to/knots.csv
//! ```

use kcg::tabledata::{census_with, fixtures, load_table, CensusOptions};
use kcg::KnotTable;

fn main() -> kcg::Result<()> {
    let tables: Vec<KnotTable> = match std::env::args().nth(1) {
        Some(path) => {
            let parsed = load_table(&path)?;
            for r in &parsed.rejected {
                eprintln!("rejected {r}");
            }
            vec![parsed.table]
        }
        None => vec![fixtures::worked_11(), fixtures::slice_11(), fixtures::concordant_11(), fixtures::undetermined_11()],
    };
    let candidates = fixtures::reference();
    for table in &tables {
        let opts = CensusOptions { candidates: Some(candidates), jobs: 2, ..Default::default() };
        let report = census_with(table, &opts)?;
        println!("# {}", table.source_path());
        print!("{}", report.to_tsv());
        print!("{}", report.counts_text());
        println!();
    }
    Ok(())
}
