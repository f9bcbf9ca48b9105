//! Search for low-genus knot sums that could be concordant to a given knot.
//!
//! A sum `J = K₁ # … # Kₘ` (summands optionally mirrored) survives when the
//! required factor of the query divides `Δ_J`, `σ(J)` equals the query's
//! signature, and `g₃(J)` is smaller than the query's three-genus.

use super::KnotTable;
use crate::bounds::{KnotRecord, KnotSum, Summand};
use crate::laurent::{Factorization, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateMatch {
    pub expression: KnotSum,
    pub alexander: LaurentPoly,
    pub signature: i64,
    pub genus3: u32,
    pub crossings: u32,
}

/// Invariants of a knot sum computed from its summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumInvariants {
    pub alexander: LaurentPoly,
    pub factors: Factorization,
    pub signature: i64,
    pub genus3: u32,
    pub crossings: u32,
}

/// `Δ` multiplies, `σ` adds (negated for mirrors), `g₃` and crossing numbers
/// add. `None` when a summand is missing or lacks data.
pub fn evaluate_sum(expr: &KnotSum, table: &KnotTable) -> Option<SumInvariants> {
    let mut alexander = LaurentPoly::one();
    let mut parts = Vec::new();
    let (mut signature, mut genus3, mut crossings) = (0, 0, 0);
    for s in &expr.summands {
        let r = table.get(&s.name)?;
        let delta = r.alexander.as_ref()?;
        alexander = &alexander * delta;
        parts.extend(delta.factor().ok()?.factors().iter().cloned());
        let sigma = r.signature?;
        signature += if s.mirrored { -sigma } else { sigma };
        genus3 += r.genus3?;
        crossings += r.crossings;
    }
    let factors = Factorization::from_factors(parts).ok()?;
    Some(SumInvariants { alexander, factors, signature, genus3, crossings })
}

struct Entry<'a> {
    record: &'a KnotRecord,
    factors: Factorization,
    signature: i64,
    genus3: u32,
}

struct Search<'a> {
    pool: Vec<Entry<'a>>,
    required: Factorization,
    signature: Option<i64>,
    genus3: u32,
    max_summands: usize,
    out: Vec<CandidateMatch>,
}

impl Search<'_> {
    fn descend(&mut self, start: usize, chosen: &mut Vec<usize>, genus: u32) {
        if !chosen.is_empty() {
            self.consider(chosen);
        }
        if chosen.len() == self.max_summands {
            return;
        }
        for i in start..self.pool.len() {
            let g = genus + self.pool[i].genus3;
            let trivial = self.pool[i].genus3 == 0 || chosen.first().is_some_and(|&j| self.pool[j].genus3 == 0);
            if g >= self.genus3 || (trivial && !chosen.is_empty()) {
                continue;
            }
            chosen.push(i);
            self.descend(i, chosen, g);
            chosen.pop();
        }
    }

    fn consider(&mut self, chosen: &[usize]) {
        let parts: Vec<_> = chosen
            .iter()
            .flat_map(|&i| self.pool[i].factors.factors().iter().cloned())
            .collect();
        let combined = Factorization::from_factors(parts).expect("factors of knot polynomials");
        if !self.required.divides(&combined) {
            return;
        }
        let sigmas: Vec<i64> = chosen.iter().map(|&i| self.pool[i].signature).collect();
        let target = self.signature;
        let Some(mask) = (0u32..1 << chosen.len()).find(|mask| {
            target.is_none_or(|t| signed_sum(&sigmas, *mask) == t)
        }) else {
            return;
        };
        let summands = chosen
            .iter()
            .enumerate()
            .map(|(b, &i)| Summand {
                name: self.pool[i].record.name.clone(),
                mirrored: mask >> b & 1 == 1,
            })
            .collect();
        self.out.push(CandidateMatch {
            expression: KnotSum { summands },
            alexander: combined.expand(),
            signature: signed_sum(&sigmas, mask),
            genus3: chosen.iter().map(|&i| self.pool[i].genus3).sum(),
            crossings: chosen.iter().map(|&i| self.pool[i].record.crossings).sum(),
        });
    }
}

fn signed_sum(sigmas: &[i64], mask: u32) -> i64 {
    sigmas
        .iter()
        .enumerate()
        .map(|(b, s)| if mask >> b & 1 == 1 { -s } else { *s })
        .sum()
}

/// Sums of `1..=max_summands` candidates (with repetition and mirrors)
/// passing the polynomial, signature and genus filters, ordered by
/// three-genus, then crossing number, then expression.
///
/// Returns nothing when the query's polynomial or three-genus is unknown.
pub fn match_candidates(k: &KnotRecord, candidates: &KnotTable, max_summands: usize) -> Vec<CandidateMatch> {
    let (Ok(Some(required)), Some(genus3)) = (k.required_factors(), k.genus3) else {
        return Vec::new();
    };
    let pool = candidates
        .records()
        .iter()
        .filter(|r| r.name != k.name)
        .filter_map(|r| {
            Some(Entry {
                factors: r.alexander.as_ref()?.factor().ok()?,
                signature: r.signature?,
                genus3: r.genus3?,
                record: r,
            })
        })
        .collect();
    let mut search = Search {
        pool,
        required: required.required_multiset(),
        signature: k.signature,
        genus3,
        max_summands,
        out: Vec::new(),
    };
    search.descend(0, &mut Vec::new(), 0);
    let mut out = search.out;
    out.sort_by_cached_key(|m| (m.genus3, m.crossings, m.expression.to_string()));
    out
}
