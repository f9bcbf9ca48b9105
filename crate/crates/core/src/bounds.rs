//! Concordance-genus intervals and census classification.
//!
//! Lower bounds: the four-genus, half the absolute signature, and half the
//! degree of the Fox–Milnor required factor. The upper bound is the
//! three-genus. Slice knots sit at `[0, 0]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::foxmilnor::{self, RequiredFactors};
use crate::laurent::LaurentPoly;
use crate::seifert::SeifertMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceStatus {
    Slice,
    NotSlice,
    Unknown,
}

impl SliceStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SliceStatus::Slice => "slice",
            SliceStatus::NotSlice => "not_slice",
            SliceStatus::Unknown => "unknown",
        }
    }
}

impl FromStr for SliceStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "slice" => Ok(SliceStatus::Slice),
            "not_slice" => Ok(SliceStatus::NotSlice),
            "unknown" | "" => Ok(SliceStatus::Unknown),
            other => Err(Error::Parse(format!("bad slice status {other:?}"))),
        }
    }
}

/// One summand of a knot sum, possibly mirrored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub name: String,
    pub mirrored: bool,
}

/// Connected sum of named knots, written `3_1+-4_1` (a leading `-` marks a
/// mirror image).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotSum {
    pub summands: Vec<Summand>,
}

impl KnotSum {
    pub fn single(name: &str) -> Self {
        KnotSum { summands: vec![Summand { name: name.to_string(), mirrored: false }] }
    }

    /// Every summand mirrored.
    pub fn mirror(&self) -> Self {
        KnotSum {
            summands: self
                .summands
                .iter()
                .map(|s| Summand { name: s.name.clone(), mirrored: !s.mirrored })
                .collect(),
        }
    }

    /// Sum of summand genera, when every summand resolves.
    pub fn genus(&self, lookup: &dyn Fn(&str) -> Option<u32>) -> Option<u32> {
        self.summands.iter().map(|s| lookup(&s.name)).sum()
    }
}

impl fmt::Display for KnotSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if s.mirrored {
                f.write_str("-")?;
            }
            f.write_str(&s.name)?;
        }
        Ok(())
    }
}

impl FromStr for KnotSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let summands = s
            .split('+')
            .map(|part| {
                let part = part.trim();
                let (mirrored, name) = match part.strip_prefix('-') {
                    Some(rest) => (true, rest.trim()),
                    None => (false, part),
                };
                if name.is_empty() || name.contains(|c: char| c.is_whitespace() || c == ',') {
                    return Err(Error::Parse(format!("bad knot sum {s:?}")));
                }
                Ok(Summand { name: name.to_string(), mirrored })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KnotSum { summands })
    }
}

/// Four-genus interval; `hi` is absent when no upper value is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Genus4 {
    pub lo: u32,
    pub hi: Option<u32>,
}

/// A row of a knot table. Absent invariants are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: u32,
    pub alexander: Option<LaurentPoly>,
    pub signature: Option<i64>,
    pub genus3: Option<u32>,
    pub genus4: Genus4,
    pub slice_status: SliceStatus,
    pub seifert: Option<SeifertMatrix>,
    pub concordant_to: Option<KnotSum>,
}

fn inconsistent(name: &str, why: impl fmt::Display) -> Error {
    Error::InconsistentRecord(format!("{name}: {why}"))
}

impl KnotRecord {
    /// A record with only a name and crossing number.
    pub fn new(name: &str, crossings: u32) -> Self {
        KnotRecord {
            name: name.to_string(),
            crossings,
            alexander: None,
            signature: None,
            genus3: None,
            genus4: Genus4 { lo: 0, hi: None },
            slice_status: SliceStatus::Unknown,
            seifert: None,
            concordant_to: None,
        }
    }

    /// `⌈|σ|/2⌉`, or 0 when σ is unknown.
    pub fn signature_bound(&self) -> u32 {
        self.signature.map_or(0, |s| s.unsigned_abs().div_ceil(2) as u32)
    }

    pub fn validate(&self) -> Result<()> {
        let n = &self.name;
        if n.is_empty() {
            return Err(inconsistent(n, "empty name"));
        }
        let Genus4 { lo, hi } = self.genus4;
        if let Some(hi) = hi {
            if lo > hi {
                return Err(inconsistent(n, format!("genus4 interval [{lo},{hi}] is empty")));
            }
        }
        let g4_cap = hi.or(self.genus3);
        if let (Some(cap), Some(g3)) = (g4_cap, self.genus3) {
            if cap > g3 {
                return Err(inconsistent(n, format!("genus4 {cap} exceeds genus3 {g3}")));
            }
        }
        if let Some(g3) = self.genus3 {
            if lo > g3 {
                return Err(inconsistent(n, format!("genus4 {lo} exceeds genus3 {g3}")));
            }
        }
        if let Some(s) = self.signature {
            if s % 2 != 0 {
                return Err(inconsistent(n, format!("odd signature {s}")));
            }
            if let Some(cap) = g4_cap {
                if self.signature_bound() > cap {
                    return Err(inconsistent(n, format!("|signature|/2 exceeds {cap}")));
                }
            }
        }
        if let Some(d) = &self.alexander {
            if !d.is_knot_polynomial() {
                return Err(inconsistent(n, "not a knot polynomial"));
            }
            if !d.is_symmetric() {
                return Err(inconsistent(n, "alexander polynomial not palindromic"));
            }
            if let Some(g3) = self.genus3 {
                if d.degree() > 2 * g3 as usize {
                    return Err(inconsistent(n, "alexander degree exceeds 2·genus3"));
                }
            }
        }
        if let Some(v) = &self.seifert {
            let from_v = v.alexander()?;
            if self.alexander.as_ref() != Some(&from_v) {
                return Err(inconsistent(n, "alexander polynomial disagrees with seifert matrix"));
            }
            if let Some(s) = self.signature {
                if v.murasugi_signature().abs() != s.abs() {
                    return Err(inconsistent(n, "signature disagrees with seifert matrix"));
                }
            }
        }
        if self.slice_status == SliceStatus::Slice {
            if self.signature.is_some_and(|s| s != 0) || lo != 0 {
                return Err(inconsistent(n, "slice knot with nonzero signature or genus4"));
            }
            if self
                .alexander
                .as_ref()
                .is_some_and(|d| foxmilnor::slice_obstruction(d) == Ok(foxmilnor::Obstruction::Fail))
            {
                return Err(inconsistent(n, "slice knot fails the Fox–Milnor condition"));
            }
        }
        Ok(())
    }

    /// Fox–Milnor required factors, with the signature-jump enhancement when a
    /// Seifert matrix is present. `None` when `Δ` is unknown.
    pub fn required_factors(&self) -> Result<Option<RequiredFactors>> {
        let Some(delta) = &self.alexander else {
            return Ok(None);
        };
        let profile = self.seifert.as_ref().map(|v| v.signature_profile()).transpose()?;
        foxmilnor::enhanced_required_factors(&delta.factor()?, profile.as_ref()).map(Some)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundSource {
    Genus4,
    Signature,
    Polynomial,
    PolynomialJump,
    Slice,
}

impl BoundSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundSource::Genus4 => "genus4",
            BoundSource::Signature => "signature",
            BoundSource::Polynomial => "polynomial",
            BoundSource::PolynomialJump => "polynomial+jump",
            BoundSource::Slice => "slice",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GcStatus {
    Determined,
    Undetermined,
}

impl GcStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            GcStatus::Determined => "determined",
            GcStatus::Undetermined => "undetermined",
        }
    }
}

/// Concordance-genus interval with the sources attaining the lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcBounds {
    pub lower: u32,
    pub upper: u32,
    pub contributors: Vec<(BoundSource, u32)>,
    pub status: GcStatus,
}

impl GcBounds {
    pub fn is_determined(&self) -> bool {
        self.status == GcStatus::Determined
    }

    /// Contributors as `source=value`, comma separated.
    pub fn contributors_string(&self) -> String {
        self.contributors
            .iter()
            .map(|(s, v)| format!("{}={v}", s.as_str()))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Raw inputs of the bound combiner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundInputs {
    pub genus3: u32,
    pub genus4_lo: u32,
    pub signature: Option<i64>,
    /// Already-halved polynomial bound.
    pub polynomial: Option<u32>,
    pub polynomial_uses_jump: bool,
}

impl BoundInputs {
    pub fn combine(&self) -> Result<GcBounds> {
        let mut candidates = vec![(BoundSource::Genus4, self.genus4_lo)];
        if let Some(s) = self.signature {
            candidates.push((BoundSource::Signature, s.unsigned_abs().div_ceil(2) as u32));
        }
        if let Some(p) = self.polynomial {
            let source = if self.polynomial_uses_jump {
                BoundSource::PolynomialJump
            } else {
                BoundSource::Polynomial
            };
            candidates.push((source, p));
        }
        let lower = candidates.iter().map(|c| c.1).max().unwrap_or(0);
        if lower > self.genus3 {
            return Err(Error::InconsistentRecord(format!(
                "lower bound {lower} exceeds genus3 {}",
                self.genus3
            )));
        }
        candidates.retain(|c| c.1 == lower);
        Ok(GcBounds {
            lower,
            upper: self.genus3,
            contributors: candidates,
            status: if lower == self.genus3 { GcStatus::Determined } else { GcStatus::Undetermined },
        })
    }
}

fn slice_bounds() -> GcBounds {
    GcBounds {
        lower: 0,
        upper: 0,
        contributors: vec![(BoundSource::Slice, 0)],
        status: GcStatus::Determined,
    }
}

/// Concordance-genus interval of a record.
pub fn gc_bounds(k: &KnotRecord) -> Result<GcBounds> {
    k.validate()?;
    if k.slice_status == SliceStatus::Slice {
        return Ok(slice_bounds());
    }
    let genus3 = k
        .genus3
        .ok_or_else(|| Error::MissingData(format!("{}: three-genus unknown", k.name)))?;
    let required = k.required_factors()?;
    BoundInputs {
        genus3,
        genus4_lo: k.genus4.lo,
        signature: k.signature,
        polynomial: required.as_ref().map(foxmilnor::gc_poly_lower_bound),
        polynomial_uses_jump: required.as_ref().is_some_and(RequiredFactors::uses_jump),
    }
    .combine()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Slice,
    DeterminedIrreduciblePoly,
    DeterminedPolyNoSymmetricPair,
    DeterminedSignatureOrG4,
    ConcordantLowerGenus,
    Unknown,
}

impl Category {
    pub const ALL: [Category; 6] = [
        Category::Slice,
        Category::DeterminedIrreduciblePoly,
        Category::DeterminedPolyNoSymmetricPair,
        Category::DeterminedSignatureOrG4,
        Category::ConcordantLowerGenus,
        Category::Unknown,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Category::Slice => "slice",
            Category::DeterminedIrreduciblePoly => "determined_irreducible_poly",
            Category::DeterminedPolyNoSymmetricPair => "determined_poly_no_symmetric_pair",
            Category::DeterminedSignatureOrG4 => "determined_signature_or_g4",
            Category::ConcordantLowerGenus => "concordant_lower_genus",
            Category::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Census category, resolving `concordant_to` genera through the bundled
/// low-crossing reference table.
pub fn classify(k: &KnotRecord) -> Category {
    let reference = crate::tabledata::fixtures::reference();
    classify_with(k, &|name| reference.get(name).and_then(|r| r.genus3))
}

/// Census category with a caller-supplied genus lookup for `concordant_to`
/// summands. Rules are tried in order; the first that fires wins.
pub fn classify_with(k: &KnotRecord, lookup: &dyn Fn(&str) -> Option<u32>) -> Category {
    if k.slice_status == SliceStatus::Slice {
        return Category::Slice;
    }
    if let (Some(delta), Some(g3)) = (&k.alexander, k.genus3) {
        if delta.degree() == 2 * g3 as usize && g3 > 0 {
            if let Ok(f) = delta.factor() {
                if f.is_irreducible() {
                    return Category::DeterminedIrreduciblePoly;
                }
                if foxmilnor::residual(&f).as_ref() == Ok(delta) {
                    return Category::DeterminedPolyNoSymmetricPair;
                }
            }
        }
    }
    if gc_bounds(k).is_ok_and(|b| b.is_determined()) {
        return Category::DeterminedSignatureOrG4;
    }
    if let Some(sum) = &k.concordant_to {
        if let Some(g) = sum.genus(lookup) {
            if k.genus3.is_none_or(|g3| g < g3) {
                return Category::ConcordantLowerGenus;
            }
        }
    }
    Category::Unknown
}
