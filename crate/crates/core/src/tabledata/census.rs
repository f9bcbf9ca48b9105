//! Per-knot classification over a whole table.

use rayon::prelude::*;

use super::fixtures;
use super::matcher::match_candidates;
use super::KnotTable;
use crate::bounds::{classify_with, gc_bounds, Category, GcBounds, KnotRecord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions<'a> {
    /// Extra table for resolving `concordant_to` genera; the bundled
    /// low-crossing table when absent.
    pub reference: Option<&'a KnotTable>,
    /// When present, undetermined knots are matched against this table.
    pub candidates: Option<&'a KnotTable>,
    pub max_summands: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for CensusOptions<'_> {
    fn default() -> Self {
        CensusOptions { reference: None, candidates: None, max_summands: 2, jobs: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub name: String,
    /// `None` when the record lacks the data for an interval.
    pub bounds: Option<GcBounds>,
    pub category: Category,
    /// Candidate expressions, when matching was requested for this row.
    pub candidates: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub counts: Vec<(Category, usize)>,
    pub total: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn count(&self, c: Category) -> usize {
        self.counts.iter().find(|(k, _)| *k == c).map_or(0, |(_, n)| *n)
    }

    /// `category<TAB>count` for every category, then the total.
    pub fn counts_text(&self) -> String {
        let mut out = String::new();
        for (c, n) in &self.counts {
            out.push_str(&format!("{c}\t{n}\n"));
        }
        out.push_str(&format!("total\t{}\n", self.total));
        out
    }

    /// Per-knot report with a header line. Unknown values print as `-`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("name\tgc_lower\tgc_upper\tcategory\tcontributors\tcandidates\n");
        for r in &self.rows {
            let (lo, hi, contrib) = match &r.bounds {
                Some(b) => (b.lower.to_string(), b.upper.to_string(), b.contributors_string()),
                None => ("-".into(), "-".into(), "-".into()),
            };
            let cands = match &r.candidates {
                None => "-".to_string(),
                Some(c) if c.is_empty() => "none".to_string(),
                Some(c) => c.join(","),
            };
            out.push_str(&format!("{}\t{lo}\t{hi}\t{}\t{contrib}\t{cands}\n", r.name, r.category));
        }
        out
    }
}

/// Census with default options.
pub fn census(table: &KnotTable) -> CensusReport {
    census_with(table, &CensusOptions::default()).expect("sequential census does not fail")
}

pub fn census_with(table: &KnotTable, opts: &CensusOptions<'_>) -> Result<CensusReport> {
    let reference = opts.reference.unwrap_or_else(|| fixtures::reference());
    let lookup = |name: &str| {
        table
            .get(name)
            .or_else(|| reference.get(name))
            .and_then(|r| r.genus3)
    };
    let row = |k: &KnotRecord| {
        let bounds = gc_bounds(k).ok();
        let category = classify_with(k, &lookup);
        let wants_match = category == Category::Unknown && bounds.as_ref().is_some_and(|b| !b.is_determined());
        let candidates = opts.candidates.filter(|_| wants_match).map(|c| {
            match_candidates(k, c, opts.max_summands)
                .into_iter()
                .map(|m| m.expression.to_string())
                .collect()
        });
        CensusRow { name: k.name.clone(), bounds, category, candidates }
    };

    let rows: Vec<CensusRow> = if opts.jobs <= 1 {
        table.records().iter().map(row).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(|| table.records().par_iter().map(row).collect())
    };

    let counts = Category::ALL
        .iter()
        .map(|&c| (c, rows.iter().filter(|r| r.category == c).count()))
        .collect();
    Ok(CensusReport { counts, total: rows.len(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_irreducible_record() {
        let worked = fixtures::worked_11();
        let t = KnotTable::from_records(vec![worked.get("11a_1").unwrap().clone()], "mem").unwrap();
        let r = census(&t);
        assert_eq!(r.total, 1);
        assert_eq!(r.count(Category::DeterminedIrreduciblePoly), 1);
        assert!(r.to_tsv().contains("11a_1\t3\t3\tdetermined_irreducible_poly\tpolynomial=3\t-"));
    }

    #[test]
    fn parallel_matches_sequential() {
        let t = fixtures::concordant_11();
        let seq = census(&t);
        let par = census_with(&t, &CensusOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(seq, par);
    }
}
