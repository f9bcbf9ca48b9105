//! Concordance-genus bounds for knots from classical invariants.
//!
//! The crate is organised bottom-up:
//!
//! * [`laurent`]: exact integer Laurent polynomials, normalisation up to
//!   `±t^k`, and complete factorisation over the integers (Zassenhaus).
//! * [`seifert`]: Seifert matrices, the Alexander polynomial, the Murasugi
//!   signature and the Levine–Tristram signature function.
//! * [`foxmilnor`]: the Fox–Milnor residual `g(t)` of `Δ ≐ g·f·f(t⁻¹)` and the
//!   signature-jump enhancement.
//! * [`bounds`]: combination of all lower bounds into a concordance-genus
//!   interval, and census classification.
//! * [`tabledata`]: knot-table CSV ingestion, census reports and the
//!   candidate-concordance matcher.
//! * [`cli`]: the `kcg` command-line front end.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod foxmilnor;
pub mod laurent;
pub mod seifert;
pub mod tabledata;

pub use error::{Error, Result};

pub use laurent::{Factorization, LaurentPoly};
pub use seifert::{SeifertMatrix, SignatureProfile};

pub use bounds::{classify, gc_bounds, BoundSource, Category, GcBounds, GcStatus, KnotRecord, KnotSum};
pub use foxmilnor::{
    enhanced_required_factors, gc_poly_lower_bound, residual, slice_obstruction, Obstruction,
    RequiredFactors,
};
pub use tabledata::{census, match_candidates, parse_table, CandidateMatch, CensusReport, KnotTable};

