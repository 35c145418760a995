//! Exhaustive minimization of `|h^_±A|` over bounded set spaces, with colex
//! sharding and a deterministic merge.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::catalogue_entry;
use crate::error::{Error, Result};
use crate::intset::{gcd, IntegerSet, MAX_ELEMENT, MAX_FOLD};
use crate::sumset::{compute_dp, SumsetVariant};

/// Largest number of index points a space may have.
pub const SPACE_LIMIT: u128 = 1_000_000_000;

/// Minimizers kept verbatim in a report; the count is always exact.
pub const MINIMIZER_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "positive")]
    PositiveSets,
    #[serde(rename = "zero")]
    NonnegWithZero,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::PositiveSets => "positive",
            Regime::NonnegWithZero => "zero",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Regime::PositiveSets),
            "zero" | "nonneg-zero" => Ok(Regime::NonnegWithZero),
            _ => Err(Error::Parse(format!("unknown regime `{s}` (positive | zero)"))),
        }
    }
}

/// Whether the compared bound is a proved statement for this `(k, h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Theorem,
    Conjecture,
    OutsideStatedHypotheses,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Theorem => "theorem",
            SearchStatus::Conjecture => "conjecture",
            SearchStatus::OutsideStatedHypotheses => "outside-stated-hypotheses",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSpace {
    pub k: usize,
    pub h: u32,
    pub max_element: i64,
    pub regime: Regime,
    /// Skip sets with gcd > 1 (positive regime only).
    pub gcd_reduce: bool,
    /// Permit `h` outside `[3, k - 1]`.
    pub allow_outside: bool,
}

impl SearchSpace {
    pub fn new(k: usize, h: u32, max_element: i64, regime: Regime) -> Self {
        SearchSpace {
            k,
            h,
            max_element,
            regime,
            gcd_reduce: false,
            allow_outside: false,
        }
    }

    pub fn gcd_reduced(mut self, on: bool) -> Self {
        self.gcd_reduce = on;
        self
    }

    pub fn allowing_outside(mut self, on: bool) -> Self {
        self.allow_outside = on;
        self
    }

    /// How many elements are drawn from `[1, N]`.
    fn free(&self) -> usize {
        match self.regime {
            Regime::PositiveSets => self.k,
            Regime::NonnegWithZero => self.k - 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadSpace(msg));
        if self.k == 0 || self.k > MAX_FOLD as usize + 1 {
            return bad(format!("k = {} out of range", self.k));
        }
        if self.h == 0 || self.h as usize > self.k || self.h > MAX_FOLD {
            return bad(format!("h = {} must lie in [1, min(k, {MAX_FOLD})]", self.h));
        }
        if !self.allow_outside && !(3..self.k as u32).contains(&self.h) {
            return bad(format!(
                "h = {} is outside [3, k - 1]; pass the outside flag to search anyway",
                self.h
            ));
        }
        if self.max_element < self.free() as i64 || self.max_element > MAX_ELEMENT {
            return bad(format!(
                "max element {} must lie in [{}, 2^40]",
                self.max_element,
                self.free()
            ));
        }
        let count = self.index_count();
        if count > SPACE_LIMIT {
            return Err(Error::SpaceTooLarge {
                count,
                limit: SPACE_LIMIT,
            });
        }
        Ok(())
    }

    /// `binomial(N, free)`, saturating at `u128::MAX`.
    pub fn index_count(&self) -> u128 {
        binomial(self.max_element as u128, self.free() as u128)
    }

    pub fn status(&self) -> SearchStatus {
        let in_range = (3..self.k as u32).contains(&self.h);
        match self.regime {
            Regime::PositiveSets if in_range => SearchStatus::Theorem,
            Regime::NonnegWithZero if in_range && self.k >= 5 => SearchStatus::Conjecture,
            _ => SearchStatus::OutsideStatedHypotheses,
        }
    }

    pub fn bound(&self) -> i64 {
        let id = match self.regime {
            Regime::PositiveSets => "RSS_direct",
            Regime::NonnegWithZero => "RSS_conj2",
        };
        catalogue_entry(id)
            .expect("search bounds are catalogued")
            .evaluate(self.k, self.h)
    }

    /// The structure every minimizer is expected to have at equality.
    pub fn predicted(&self, a: &IntegerSet) -> bool {
        match self.regime {
            Regime::PositiveSets => a.dilated_odd_progression().is_some(),
            Regime::NonnegWithZero => matches!(a.dilated_interval(), Some((d, 0)) if d > 0),
        }
    }

    /// Maps drawn 0-based indices to a set, or `None` when gcd reduction
    /// skips it.
    fn materialize(&self, idx: &[u64]) -> Option<IntegerSet> {
        let mut v: Vec<i64> = Vec::with_capacity(self.k);
        if self.regime == Regime::NonnegWithZero {
            v.push(0);
        }
        v.extend(idx.iter().map(|&x| x as i64 + 1));
        if self.gcd_reduce
            && self.regime == Regime::PositiveSets
            && v.iter().fold(0, |g, &x| gcd(g, x)) > 1
        {
            return None;
        }
        Some(IntegerSet::from_sorted(v).expect("increasing and in range"))
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        match r.checked_mul(n - i) {
            Some(x) => r = x / (i + 1),
            None => return u128::MAX,
        }
    }
    r
}

/// Colex rank of an increasing 0-based combination.
pub fn colex_rank(idx: &[u64]) -> u128 {
    idx.iter()
        .enumerate()
        .map(|(i, &x)| binomial(x as u128, i as u128 + 1))
        .sum()
}

/// Inverse of [`colex_rank`] for `m`-combinations.
pub fn colex_unrank(mut rank: u128, m: usize) -> Vec<u64> {
    let mut out = vec![0u64; m];
    let mut hi = u64::MAX >> 1;
    for i in (1..=m).rev() {
        // largest x < hi with C(x, i) <= rank
        let (mut lo, mut top) = (i as u64 - 1, hi);
        while lo + 1 < top {
            let mid = lo + (top - lo) / 2;
            if binomial(mid as u128, i as u128) <= rank {
                lo = mid;
            } else {
                top = mid;
            }
        }
        out[i - 1] = lo;
        rank -= binomial(lo as u128, i as u128);
        hi = lo;
    }
    out
}

fn colex_next(idx: &mut [u64]) {
    let m = idx.len();
    for i in 0..m {
        let ceiling = if i + 1 < m { idx[i + 1] } else { u64::MAX };
        if idx[i] + 1 < ceiling {
            idx[i] += 1;
            for (t, slot) in idx[..i].iter_mut().enumerate() {
                *slot = t as u64;
            }
            return;
        }
    }
}

/// Balanced contiguous colex ranges; trailing ranges may be empty.
pub fn partition_work(space: &SearchSpace, shards: usize) -> Vec<Range<u128>> {
    let total = space.index_count();
    let shards = shards.max(1) as u128;
    let (base, extra) = (total / shards, total % shards);
    let mut start = 0;
    (0..shards)
        .map(|s| {
            let len = base + u128::from(s < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

/// Every set in the space exactly once, in lexicographic order.
pub fn enumerate_space(space: &SearchSpace) -> Result<impl Iterator<Item = IntegerSet> + '_> {
    space.validate()?;
    let m = space.free();
    let n = space.max_element as u64;
    let mut cur: Option<Vec<u64>> = Some((0..m as u64).collect());
    let combos = std::iter::from_fn(move || {
        let out = cur.clone()?;
        cur = lex_next(out.clone(), n);
        Some(out)
    });
    Ok(combos.filter_map(move |c| space.materialize(&c)))
}

fn lex_next(mut idx: Vec<u64>, n: u64) -> Option<Vec<u64>> {
    let m = idx.len();
    let i = (0..m).rev().find(|&i| idx[i] < n - (m - i) as u64)?;
    idx[i] += 1;
    for t in i + 1..m {
        idx[t] = idx[t - 1] + 1;
    }
    Some(idx)
}

/// Partial result of a search over part of a space. Merging is associative
/// and commutative.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub examined: u64,
    pub min: Option<usize>,
    pub minimizer_count: u64,
    /// The lexicographically smallest minimizers, at most [`MINIMIZER_CAP`].
    pub minimizers: BTreeSet<Vec<i64>>,
    pub classes: BTreeMap<String, u64>,
    /// Minimizers outside the predicted structure.
    pub unexpected: u64,
}

impl Tally {
    fn observe(&mut self, space: &SearchSpace, a: &IntegerSet, card: usize) {
        self.examined += 1;
        match self.min {
            Some(m) if card > m => return,
            Some(m) if card == m => {}
            _ => {
                let examined = self.examined;
                *self = Tally {
                    examined,
                    min: Some(card),
                    ..Tally::default()
                };
            }
        }
        self.minimizer_count += 1;
        if !space.predicted(a) {
            self.unexpected += 1;
        }
        let class = a.classify_structure().map(|c| c.name()).unwrap_or("Other");
        *self.classes.entry(class.to_string()).or_default() += 1;
        self.minimizers.insert(a.elements().to_vec());
        if self.minimizers.len() > MINIMIZER_CAP {
            self.minimizers.pop_last();
        }
    }

    pub fn merge(self, other: Tally) -> Tally {
        let examined = self.examined + other.examined;
        let mut keep = match (self.min, other.min) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) if a < b => self,
            (Some(a), Some(b)) if b < a => other,
            _ => {
                let mut merged = self;
                merged.minimizer_count += other.minimizer_count;
                merged.unexpected += other.unexpected;
                for (c, n) in other.classes {
                    *merged.classes.entry(c).or_default() += n;
                }
                merged.minimizers.extend(other.minimizers);
                while merged.minimizers.len() > MINIMIZER_CAP {
                    merged.minimizers.pop_last();
                }
                merged
            }
        };
        keep.examined = examined;
        keep
    }
}

/// Searches colex indices `range` of the space.
pub fn search_range(space: &SearchSpace, range: Range<u128>) -> Result<Tally> {
    space.validate()?;
    let mut tally = Tally::default();
    if range.is_empty() {
        return Ok(tally);
    }
    let mut idx = colex_unrank(range.start, space.free());
    let mut rank = range.start;
    loop {
        if let Some(a) = space.materialize(&idx) {
            let card = compute_dp(&a, SumsetVariant::RestrictedSigned, space.h)?.cardinality;
            tally.observe(space, &a, card);
        }
        rank += 1;
        if rank == range.end {
            break;
        }
        colex_next(&mut idx);
    }
    Ok(tally)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchReport {
    pub k: usize,
    pub h: u32,
    pub max: i64,
    pub regime: Regime,
    pub status: SearchStatus,
    pub min: usize,
    pub bound: i64,
    pub slack: i64,
    pub minimizer_count: u64,
    pub minimizers: Vec<Vec<i64>>,
    pub classes: BTreeMap<String, u64>,
    pub examined: u64,
    pub unexpected_minimizers: u64,
    pub falsified: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    pub const CSV_HEADER: [&'static str; 9] = [
        "k",
        "h",
        "N",
        "regime",
        "min",
        "bound",
        "slack",
        "minimizer_count",
        "falsified",
    ];

    pub fn csv_record(&self) -> [String; 9] {
        [
            self.k.to_string(),
            self.h.to_string(),
            self.max.to_string(),
            self.regime.to_string(),
            self.min.to_string(),
            self.bound.to_string(),
            self.slack.to_string(),
            self.minimizer_count.to_string(),
            self.falsified.to_string(),
        ]
    }

    fn from_tally(space: &SearchSpace, t: Tally, elapsed: Duration) -> Result<Self> {
        let min = t
            .min
            .ok_or_else(|| Error::BadSpace("space contains no sets".into()))?;
        let bound = space.bound();
        let slack = min as i64 - bound;
        Ok(SearchReport {
            k: space.k,
            h: space.h,
            max: space.max_element,
            regime: space.regime,
            status: space.status(),
            min,
            bound,
            slack,
            minimizer_count: t.minimizer_count,
            minimizers: t.minimizers.into_iter().collect(),
            classes: t.classes,
            examined: t.examined,
            unexpected_minimizers: t.unexpected,
            falsified: slack < 0 || (slack == 0 && t.unexpected > 0),
            elapsed,
        })
    }
}

/// Splits the space into `shards` colex ranges, runs them on the rayon pool
/// and merges in shard order.
pub fn minimize_sharded(space: &SearchSpace, shards: usize) -> Result<SearchReport> {
    space.validate()?;
    let start = Instant::now();
    let parts: Vec<Tally> = partition_work(space, shards)
        .into_par_iter()
        .map(|r| search_range(space, r))
        .collect::<Result<_>>()?;
    let tally = parts.into_iter().fold(Tally::default(), Tally::merge);
    SearchReport::from_tally(space, tally, start.elapsed())
}

pub fn minimize(space: &SearchSpace) -> Result<SearchReport> {
    let chunks = (rayon::current_num_threads() * 4).max(1);
    minimize_sharded(space, chunks)
}
