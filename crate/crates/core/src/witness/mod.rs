//! Explicit disjoint families of sumset elements that certify the lower
//! bounds for `k = h` and `k = h + 1`.
//!
//! Every generator rebuilds its parts from the input set on each call and
//! records the branch it took wherever the construction splits on a case.
//! [`WitnessFamily::verify`] then checks, against a fresh sumset computation,
//! that the parts are pairwise disjoint, lie inside the target sumset, avoid
//! the base sub-sumset (when there is one) and add up to the claimed total.

mod lemmas;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intset::IntegerSet;
use crate::sumset::{compute_dp, SumsetVariant};

pub use lemmas::{
    parity_split_index, witness_all_odd_extension, witness_mixed_parity_a2,
    witness_mixed_parity_a2_subsums, witness_mixed_parity_a3, witness_odd_subsums,
    witness_parity_split,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// `a1 ≡ a2`, some `a_r` of the other parity.
    ParitySplit,
    /// All-odd `k = h` sets, working inside `Σ(A)`.
    OddSubsums,
    /// `a2 ≢ a1` and `a3 ≢ a1`.
    MixedParityA3,
    /// `a2 ≢ a1 ≡ a3`.
    MixedParityA2,
    /// `a2 ≢ a1 ≡ a3` with `A \ {a2}` an A.P. and `a2` odd, inside `Σ(A \ {a1})`.
    MixedParityA2Subsums,
    /// All-odd `k = h + 1` sets.
    AllOddExtension,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::ParitySplit,
        LemmaId::OddSubsums,
        LemmaId::MixedParityA3,
        LemmaId::MixedParityA2,
        LemmaId::MixedParityA2Subsums,
        LemmaId::AllOddExtension,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::ParitySplit => "parity-split",
            LemmaId::OddSubsums => "odd-subsums",
            LemmaId::MixedParityA3 => "mixed-parity-a3",
            LemmaId::MixedParityA2 => "mixed-parity-a2",
            LemmaId::MixedParityA2Subsums => "mixed-parity-a2-subsums",
            LemmaId::AllOddExtension => "all-odd-extension",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown lemma `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPart {
    pub name: String,
    /// Sorted, distinct.
    pub values: Vec<i64>,
    pub branch: Option<String>,
}

impl WitnessPart {
    pub(crate) fn new(name: impl Into<String>, values: impl IntoIterator<Item = i64>) -> Self {
        let mut values: Vec<i64> = values.into_iter().collect();
        values.sort_unstable();
        values.dedup();
        WitnessPart {
            name: name.into(),
            values,
            branch: None,
        }
    }

    pub(crate) fn with_branch(mut self, branch: impl Into<String>) -> Self {
        self.branch = Some(branch.into());
        self
    }

    pub fn min(&self) -> i64 {
        self.values[0]
    }

    pub fn max(&self) -> i64 {
        self.values[self.values.len() - 1]
    }
}

/// The sumset a family lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTarget {
    pub set: IntegerSet,
    pub variant: SumsetVariant,
    pub h: u32,
}

/// An ordering the construction relies on, evaluated on the instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guard {
    pub description: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFamily {
    pub lemma: LemmaId,
    pub parts: Vec<WitnessPart>,
    pub target: WitnessTarget,
    /// Subset whose restricted signed sumset the parts must avoid, so that
    /// `|target| >= |h^_±(base)| + claimed_total`.
    pub base: Option<IntegerSet>,
    pub claimed_total: usize,
    pub guards: Vec<Guard>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSummary {
    pub name: String,
    pub size: usize,
    pub branch: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChecks {
    pub disjoint: bool,
    pub contained: bool,
    pub total_matches: bool,
    pub base_disjoint: Option<bool>,
    pub guards: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub lemma: LemmaId,
    pub parts: Vec<PartSummary>,
    pub total: usize,
    pub target_cardinality: usize,
    pub checks: WitnessChecks,
    pub base_cardinality: Option<usize>,
    /// `base_cardinality + total`, the lower bound the family certifies.
    pub exhibited_bound: usize,
    pub failed_guards: Vec<String>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        let c = &self.checks;
        c.disjoint && c.contained && c.total_matches && c.base_disjoint.unwrap_or(true) && c.guards
    }
}

impl WitnessFamily {
    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.values.len()).sum()
    }

    pub fn union(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self.parts.iter().flat_map(|p| p.values.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Checks the family against freshly computed sumsets.
    pub fn verify(&self) -> Result<WitnessReport> {
        let t = &self.target;
        let target = compute_dp(&t.set, t.variant, t.h)?;
        let total = self.total();
        let union = self.union();
        let disjoint = union.len() == total;
        let contained = union.iter().all(|&x| target.contains(x));
        let (base_cardinality, base_disjoint) = match &self.base {
            Some(b) => {
                let base = compute_dp(b, SumsetVariant::RestrictedSigned, t.h)?;
                let avoid = union.iter().all(|&x| !base.contains(x));
                (Some(base.cardinality), Some(avoid))
            }
            None => (None, None),
        };
        let failed_guards: Vec<String> = self
            .guards
            .iter()
            .filter(|g| !g.holds)
            .map(|g| g.description.clone())
            .collect();
        Ok(WitnessReport {
            lemma: self.lemma,
            parts: self
                .parts
                .iter()
                .map(|p| PartSummary {
                    name: p.name.clone(),
                    size: p.values.len(),
                    branch: p.branch.clone(),
                })
                .collect(),
            total,
            target_cardinality: target.cardinality,
            checks: WitnessChecks {
                disjoint,
                contained,
                total_matches: total == self.claimed_total,
                base_disjoint,
                guards: failed_guards.is_empty(),
            },
            base_cardinality,
            exhibited_bound: base_cardinality.unwrap_or(0) + total,
            failed_guards,
        })
    }
}

/// Dispatches on `lemma`. `h` defaults to `|A| - 1` (or `|A|` for
/// odd-subsums); `r` defaults to the first index allowed by the parity-split
/// hypothesis.
pub fn generate(
    lemma: LemmaId,
    a: &IntegerSet,
    h: Option<u32>,
    r: Option<usize>,
) -> Result<WitnessFamily> {
    let k = a.size() as u32;
    let h_split = h.unwrap_or(k.saturating_sub(1));
    match lemma {
        LemmaId::ParitySplit => {
            let r = match r {
                Some(r) => r,
                None => parity_split_index(a).ok_or_else(|| {
                    Error::HypothesisViolated("no a_r (r >= 3) of the other parity from a1".into())
                })?,
            };
            witness_parity_split(a, h_split, r)
        }
        LemmaId::OddSubsums => {
            if let Some(h) = h {
                if h != k {
                    return Err(Error::HypothesisViolated(format!(
                        "odd-subsums needs h = |A| (h = {h}, |A| = {k})"
                    )));
                }
            }
            witness_odd_subsums(a)
        }
        LemmaId::MixedParityA3 => witness_mixed_parity_a3(a, h_split),
        LemmaId::MixedParityA2 => witness_mixed_parity_a2(a, h_split),
        LemmaId::MixedParityA2Subsums => witness_mixed_parity_a2_subsums(a, h_split),
        LemmaId::AllOddExtension => witness_all_odd_extension(a, h_split),
    }
}
