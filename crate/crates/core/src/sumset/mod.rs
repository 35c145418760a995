//! The h-fold sumset variants of a finite integer set, computed two ways:
//! [`compute_oracle`] enumerates every admissible coefficient vector, and
//! [`compute_dp`] runs a layered dynamic program over achievable partial sums.
//! The two are kept independent so that one can check the other.

mod dp;
mod oracle;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intset::{IntegerSet, MAX_FOLD};

pub use dp::compute_dp;
pub use oracle::{admissible_vector_count, compute_oracle, ORACLE_COST_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumsetVariant {
    /// `hA`: coefficients in `[0, h]` summing to `h`.
    Plain,
    /// `h^A`: `h` distinct elements.
    Restricted,
    /// `h_±A`: coefficients in `[-h, h]` with absolute values summing to `h`.
    Signed,
    /// `h^_±A`: coefficients in `{-1, 0, 1}` with exactly `h` nonzero.
    #[serde(rename = "rss", alias = "restricted-signed")]
    RestrictedSigned,
    /// `Σ(A)`; the fold count is ignored.
    Subsums,
}

impl SumsetVariant {
    pub const ALL_FOLDED: [SumsetVariant; 4] = [
        SumsetVariant::Plain,
        SumsetVariant::Restricted,
        SumsetVariant::Signed,
        SumsetVariant::RestrictedSigned,
    ];

    pub fn is_restricted(self) -> bool {
        matches!(self, SumsetVariant::Restricted | SumsetVariant::RestrictedSigned)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SumsetVariant::Plain => "plain",
            SumsetVariant::Restricted => "restricted",
            SumsetVariant::Signed => "signed",
            SumsetVariant::RestrictedSigned => "rss",
            SumsetVariant::Subsums => "subsums",
        }
    }
}

impl fmt::Display for SumsetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for SumsetVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "plain" => SumsetVariant::Plain,
            "restricted" => SumsetVariant::Restricted,
            "signed" => SumsetVariant::Signed,
            "rss" | "restricted-signed" => SumsetVariant::RestrictedSigned,
            "subsums" => SumsetVariant::Subsums,
            other => return Err(Error::Parse(format!("unknown variant `{other}`"))),
        })
    }
}

/// Sorted distinct achievable values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumsetResult {
    pub values: Vec<i64>,
    pub cardinality: usize,
}

impl SumsetResult {
    pub(crate) fn from_sorted(values: Vec<i64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        SumsetResult {
            cardinality: values.len(),
            values,
        }
    }

    pub fn from_unsorted(mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        values.dedup();
        Self::from_sorted(values)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.values.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<i64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.values.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn negate(&self) -> SumsetResult {
        SumsetResult::from_sorted(self.values.iter().rev().map(|v| -v).collect())
    }

    /// `c * S` for `c != 0`; `None` on overflow.
    pub fn dilate(&self, c: i64) -> Option<SumsetResult> {
        let v: Option<Vec<i64>> = self.values.iter().map(|x| x.checked_mul(c)).collect();
        Some(SumsetResult::from_unsorted(v?))
    }

    pub fn translate(&self, t: i64) -> SumsetResult {
        SumsetResult::from_sorted(self.values.iter().map(|v| v + t).collect())
    }

    pub fn is_subset_of(&self, other: &SumsetResult) -> bool {
        self.values.iter().all(|v| other.contains(*v))
    }

    pub fn is_disjoint_from(&self, other: &SumsetResult) -> bool {
        self.values.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &SumsetResult) -> SumsetResult {
        SumsetResult::from_sorted(crate::intset::merge_sorted(&self.values, &other.values))
    }
}

/// One unit of work for [`compute_batch`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetRequest {
    pub set: IntegerSet,
    pub variant: SumsetVariant,
    pub h: u32,
}

/// Checks fold-count admissibility for `variant` on `a`.
pub fn validate(a: &IntegerSet, variant: SumsetVariant, h: u32) -> Result<()> {
    if variant == SumsetVariant::Subsums {
        return Ok(());
    }
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if h > MAX_FOLD {
        return Err(Error::Overflow);
    }
    if variant.is_restricted() && h as usize > a.size() {
        return Err(Error::FoldTooLarge { h, k: a.size() });
    }
    Ok(())
}

/// Evaluates requests in parallel; results come back in request order.
pub fn compute_batch(requests: &[SumsetRequest]) -> Vec<Result<SumsetResult>> {
    requests
        .par_iter()
        .map(|r| compute_dp(&r.set, r.variant, r.h))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Independence {
    /// Largest `t` with `0` outside every `h_±A`, `h <= t`.
    Number(u32),
    /// `0` stayed out of `h_±A` for every `h <= t_max`.
    NotFoundWithin(u32),
}

/// Largest `t <= t_max` with `0 ∉ h_±A` for all `1 <= h <= t`.
pub fn independence_number(a: &IntegerSet, t_max: u32) -> Result<Independence> {
    if a.contains(0) {
        return Err(Error::ZeroElement);
    }
    if t_max == 0 {
        return Err(Error::ZeroFold);
    }
    if t_max > MAX_FOLD {
        return Err(Error::Overflow);
    }
    let layers = dp::signed_layers(a, t_max);
    for (h, layer) in layers.iter().enumerate().skip(1) {
        if layer.contains(0) {
            return Ok(Independence::Number(h as u32 - 1));
        }
    }
    Ok(Independence::NotFoundWithin(t_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> IntegerSet {
        IntegerSet::canonicalize(v).unwrap()
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&set(&[1, 2]), 10).unwrap(), Independence::Number(2));
        assert_eq!(independence_number(&set(&[1]), 17).unwrap(), Independence::NotFoundWithin(17));
        assert_eq!(independence_number(&set(&[2, 3]), 10).unwrap(), Independence::Number(4));
        assert_eq!(independence_number(&set(&[2, 3]), 4).unwrap(), Independence::NotFoundWithin(4));
        assert_eq!(independence_number(&set(&[0, 3]), 4), Err(Error::ZeroElement));
    }

    #[test]
    fn variant_names_round_trip() {
        for v in SumsetVariant::ALL_FOLDED.into_iter().chain([SumsetVariant::Subsums]) {
            assert_eq!(v.as_str().parse::<SumsetVariant>().unwrap(), v);
        }
        assert!("nope".parse::<SumsetVariant>().is_err());
    }

    #[test]
    fn batch_preserves_order() {
        let reqs: Vec<SumsetRequest> = (1..=4)
            .map(|h| SumsetRequest {
                set: set(&[1, 3, 5, 7]),
                variant: SumsetVariant::RestrictedSigned,
                h,
            })
            .chain([SumsetRequest {
                set: set(&[1, 2]),
                variant: SumsetVariant::Restricted,
                h: 3,
            }])
            .collect();
        let out = compute_batch(&reqs);
        let cards: Vec<_> = out[..4].iter().map(|r| r.as_ref().unwrap().cardinality).collect();
        assert_eq!(cards, vec![8, 12, 16, 15]);
        assert_eq!(out[4], Err(Error::FoldTooLarge { h: 3, k: 2 }));
    }
}
