//! Bundled tables.

use std::sync::OnceLock;

use super::{parse_table, KnotTable};

/// Prime knots through eight crossings, plus the unknot `0_1`.
pub const KNOTS_LE8: &str = include_str!("../../data/knots_le8.csv");
/// The thirty slice 11-crossing knots.
pub const SLICE_11: &str = include_str!("../../data/slice_11.csv");
/// Non-slice 11-crossing knots concordant to a knot of lower genus.
pub const CONCORDANT_11: &str = include_str!("../../data/concordant_11.csv");
/// The nineteen 11-crossing knots with undetermined concordance genus.
pub const UNDETERMINED_11: &str = include_str!("../../data/undetermined_11.csv");
/// 11-crossing knots with full polynomial data.
pub const WORKED_11: &str = include_str!("../../data/worked_11.csv");

fn load(text: &str, name: &str) -> KnotTable {
    let parsed = parse_table(text, name).expect("bundled table parses");
    assert!(parsed.rejected.is_empty(), "bundled table {name}: {:?}", parsed.rejected);
    parsed.table
}

/// Low-crossing reference table, parsed once.
pub fn reference() -> &'static KnotTable {
    static TABLE: OnceLock<KnotTable> = OnceLock::new();
    TABLE.get_or_init(|| load(KNOTS_LE8, "knots_le8.csv"))
}

pub fn slice_11() -> KnotTable {
    load(SLICE_11, "slice_11.csv")
}

pub fn concordant_11() -> KnotTable {
    load(CONCORDANT_11, "concordant_11.csv")
}

pub fn undetermined_11() -> KnotTable {
    load(UNDETERMINED_11, "undetermined_11.csv")
}

pub fn worked_11() -> KnotTable {
    load(WORKED_11, "worked_11.csv")
}
