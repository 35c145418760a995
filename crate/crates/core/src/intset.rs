//! Finite integer sets in canonical (strictly increasing) form and the
//! elementary transforms applied to them: dilation, absolute values,
//! subset sums and structural classification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sumset::SumsetResult;

/// Largest accepted element magnitude.
pub const MAX_ELEMENT: i64 = 1 << 40;
/// Largest accepted fold count.
pub const MAX_FOLD: u32 = 64;
/// Largest set whose subset sums are enumerated directly.
pub const SUBSUMS_SIZE_CAP: usize = 30;

/// A nonempty finite set of integers stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntegerSet(Vec<i64>);

impl IntegerSet {
    /// Sorts and deduplicates `raw`.
    pub fn canonicalize(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.iter().any(|a| a.unsigned_abs() > MAX_ELEMENT as u64) {
            return Err(Error::Overflow);
        }
        let mut elements = raw.to_vec();
        elements.sort_unstable();
        elements.dedup();
        Ok(IntegerSet(elements))
    }

    /// Builds a set from a sequence that must already be strictly increasing.
    pub fn from_sorted(elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyInput);
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("elements are not strictly increasing".into()));
        }
        if elements.iter().any(|a| a.unsigned_abs() > MAX_ELEMENT as u64) {
            return Err(Error::Overflow);
        }
        Ok(IntegerSet(elements))
    }

    /// The integer interval `[a, b]`.
    pub fn interval(a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::EmptyInput);
        }
        if a.unsigned_abs() > MAX_ELEMENT as u64 || b.unsigned_abs() > MAX_ELEMENT as u64 {
            return Err(Error::Overflow);
        }
        Ok(IntegerSet((a..=b).collect()))
    }

    pub fn elements(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn max(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_positive(&self) -> bool {
        self.min() >= 1
    }

    /// Nonnegative and containing 0.
    pub fn is_nonneg_with_zero(&self) -> bool {
        self.min() == 0
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|a| a.rem_euclid(2) == 1)
    }

    /// `a_i` with 1-based index, matching the usual `a_1 < ... < a_k` labelling.
    pub fn nth(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// The set with the 1-based `i`-th element removed, or `None` if that
    /// would leave it empty.
    pub fn without_index(&self, i: usize) -> Option<IntegerSet> {
        if self.0.len() < 2 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i - 1);
        Some(IntegerSet(v))
    }

    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0, |g, &a| gcd(g, a.abs()))
    }

    /// `c * A`.
    pub fn dilate(&self, c: i64) -> Result<IntegerSet> {
        if c == 0 {
            return Err(Error::ZeroDilation);
        }
        let mut out = Vec::with_capacity(self.0.len());
        for &a in &self.0 {
            let p = a.checked_mul(c).ok_or(Error::Overflow)?;
            if p.unsigned_abs() > MAX_ELEMENT as u64 {
                return Err(Error::Overflow);
            }
            out.push(p);
        }
        if c < 0 {
            out.reverse();
        }
        Ok(IntegerSet(out))
    }

    /// `-A`.
    pub fn negate(&self) -> IntegerSet {
        IntegerSet(self.0.iter().rev().map(|a| -a).collect())
    }

    /// `{|a| : a in A}`.
    pub fn abs_set(&self) -> IntegerSet {
        let mut v: Vec<i64> = self.0.iter().map(|a| a.abs()).collect();
        v.sort_unstable();
        v.dedup();
        IntegerSet(v)
    }

    /// True when `A ∩ (-A) ⊆ {0}`.
    pub fn is_sign_free(&self) -> bool {
        self.0.iter().all(|&a| a == 0 || !self.contains(-a))
    }

    /// All subset sums, including 0 for the empty subset.
    pub fn subsums(&self) -> Result<SumsetResult> {
        if self.0.len() > SUBSUMS_SIZE_CAP {
            return Err(Error::SizeCapExceeded {
                size: self.0.len(),
                cap: SUBSUMS_SIZE_CAP,
            });
        }
        let mut sums = vec![0i64];
        for &a in &self.0 {
            let shifted: Vec<i64> = sums.iter().map(|s| s + a).collect();
            sums = merge_sorted(&sums, &shifted);
        }
        Ok(SumsetResult::from_sorted(sums))
    }

    /// `min₊(A)`.
    pub fn second_smallest(&self) -> Result<i64> {
        if self.0.len() < 2 {
            return Err(Error::TooSmall(self.0.len()));
        }
        Ok(self.0[1])
    }

    /// `max₋(A)`.
    pub fn second_largest(&self) -> Result<i64> {
        if self.0.len() < 2 {
            return Err(Error::TooSmall(self.0.len()));
        }
        Ok(self.0[self.0.len() - 2])
    }

    pub fn arithmetic_progression(&self) -> Option<(i64, i64)> {
        if self.0.len() < 2 {
            return None;
        }
        let diff = self.0[1] - self.0[0];
        self.0
            .windows(2)
            .all(|w| w[1] - w[0] == diff)
            .then_some((self.0[0], diff))
    }

    /// `d` such that `A = d * {1, 3, ..., 2k - 1}`.
    pub fn dilated_odd_progression(&self) -> Option<i64> {
        let d = self.0[0];
        if d <= 0 {
            return None;
        }
        self.0
            .iter()
            .enumerate()
            .all(|(i, &a)| a == (2 * i as i64 + 1) * d)
            .then_some(d)
    }

    /// `(d, start)` such that `A = d * [start, start + k - 1]`.
    pub fn dilated_interval(&self) -> Option<(i64, i64)> {
        let (first, d) = self.arithmetic_progression()?;
        (first % d == 0).then_some((d, first / d))
    }

    /// `{a1, a2, a3, a3 + a2 + a1}`.
    pub fn is_sum_closure4(&self) -> bool {
        self.0.len() == 4 && self.0[3] == self.0[0] + self.0[1] + self.0[2]
    }

    /// `{a1, a2, a3, a3 + a2 - a1}`.
    pub fn is_diff_closure4(&self) -> bool {
        self.0.len() == 4 && self.0[3] == self.0[2] + self.0[1] - self.0[0]
    }

    pub fn classify_structure(&self) -> Result<StructureClass> {
        if self.0.len() < 2 {
            return Err(Error::TooSmall(self.0.len()));
        }
        let a = &self.0;
        if let Some(d) = self.dilated_odd_progression() {
            return Ok(StructureClass::DilatedOddProgression { d });
        }
        if let Some((first, diff)) = self.arithmetic_progression() {
            return Ok(StructureClass::ArithmeticProgression { first, diff });
        }
        if self.is_sum_closure4() {
            return Ok(StructureClass::SumClosure4 { a1: a[0], a2: a[1], a3: a[2] });
        }
        if self.is_diff_closure4() {
            return Ok(StructureClass::DiffClosure4 { a1: a[0], a2: a[1], a3: a[2] });
        }
        if let Some((d, start)) = self.dilated_interval() {
            return Ok(StructureClass::DilatedInterval { d, start });
        }
        Ok(StructureClass::Other)
    }
}

impl TryFrom<Vec<i64>> for IntegerSet {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        IntegerSet::from_sorted(v)
    }
}

impl From<IntegerSet> for Vec<i64> {
    fn from(s: IntegerSet) -> Self {
        s.0
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// The structural forms that show up as extremal sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StructureClass {
    DilatedOddProgression { d: i64 },
    ArithmeticProgression { first: i64, diff: i64 },
    SumClosure4 { a1: i64, a2: i64, a3: i64 },
    DiffClosure4 { a1: i64, a2: i64, a3: i64 },
    DilatedInterval { d: i64, start: i64 },
    Other,
}

impl StructureClass {
    pub fn name(&self) -> &'static str {
        match self {
            StructureClass::DilatedOddProgression { .. } => "DilatedOddProgression",
            StructureClass::ArithmeticProgression { .. } => "ArithmeticProgression",
            StructureClass::SumClosure4 { .. } => "SumClosure4",
            StructureClass::DiffClosure4 { .. } => "DiffClosure4",
            StructureClass::DilatedInterval { .. } => "DilatedInterval",
            StructureClass::Other => "Other",
        }
    }

    /// Rebuilds the `k`-element set described by the class parameters.
    pub fn reconstruct(&self, k: usize) -> Option<IntegerSet> {
        let v: Vec<i64> = match *self {
            StructureClass::DilatedOddProgression { d } => {
                (0..k as i64).map(|i| (2 * i + 1) * d).collect()
            }
            StructureClass::ArithmeticProgression { first, diff } => {
                (0..k as i64).map(|i| first + i * diff).collect()
            }
            StructureClass::SumClosure4 { a1, a2, a3 } if k == 4 => vec![a1, a2, a3, a1 + a2 + a3],
            StructureClass::DiffClosure4 { a1, a2, a3 } if k == 4 => vec![a1, a2, a3, a3 + a2 - a1],
            StructureClass::DilatedInterval { d, start } => {
                (0..k as i64).map(|i| (start + i) * d).collect()
            }
            _ => return None,
        };
        IntegerSet::from_sorted(v).ok()
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StructureClass::DilatedOddProgression { d } => write!(f, "DilatedOddProgression(d={d})"),
            StructureClass::ArithmeticProgression { first, diff } => {
                write!(f, "ArithmeticProgression(first={first},diff={diff})")
            }
            StructureClass::SumClosure4 { a1, a2, a3 } => write!(f, "SumClosure4({a1},{a2},{a3})"),
            StructureClass::DiffClosure4 { a1, a2, a3 } => write!(f, "DiffClosure4({a1},{a2},{a3})"),
            StructureClass::DilatedInterval { d, start } => {
                write!(f, "DilatedInterval(d={d},start={start})")
            }
            StructureClass::Other => write!(f, "Other"),
        }
    }
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

pub(crate) fn merge_sorted(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> IntegerSet {
        IntegerSet::canonicalize(v).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(set(&[5, 1, 3, 3]).elements(), &[1, 3, 5]);
        assert_eq!(set(&[7]).elements(), &[7]);
        assert_eq!(set(&[-2, 2, 0]).elements(), &[-2, 0, 2]);
        assert_eq!(IntegerSet::canonicalize(&[]), Err(Error::EmptyInput));
        assert_eq!(IntegerSet::canonicalize(&[MAX_ELEMENT + 1]), Err(Error::Overflow));
    }

    #[test]
    fn dilate_examples() {
        assert_eq!(set(&[1, 3, 5]).dilate(3).unwrap().elements(), &[3, 9, 15]);
        assert_eq!(set(&[1, 2]).dilate(-1).unwrap().elements(), &[-2, -1]);
        assert_eq!(set(&[1, 3, 5, 7]).dilate(2).unwrap().elements(), &[2, 6, 10, 14]);
        assert_eq!(set(&[1]).dilate(0), Err(Error::ZeroDilation));
        assert_eq!(set(&[1 << 39]).dilate(4), Err(Error::Overflow));
    }

    #[test]
    fn abs_examples() {
        assert_eq!(set(&[-3, -1, 5]).abs_set().elements(), &[1, 3, 5]);
        assert_eq!(set(&[1, 3, 5]).abs_set().elements(), &[1, 3, 5]);
        assert_eq!(set(&[-2, 2]).abs_set().elements(), &[2]);
    }

    #[test]
    fn subsums_examples() {
        let s = set(&[1, 3, 5]).subsums().unwrap();
        assert_eq!(s.values, vec![0, 1, 3, 4, 5, 6, 8, 9]);
        assert_eq!(s.cardinality, 8);
        assert_eq!(set(&[1]).subsums().unwrap().values, vec![0, 1]);
        assert_eq!(set(&[1, 2, 4, 8]).subsums().unwrap().values, (0..16).collect::<Vec<_>>());
        let big: Vec<i64> = (1..=31).collect();
        assert!(matches!(set(&big).subsums(), Err(Error::SizeCapExceeded { size: 31, cap: 30 })));
    }

    #[test]
    fn second_smallest_and_largest() {
        let a = set(&[1, 3, 5]);
        assert_eq!((a.second_smallest().unwrap(), a.second_largest().unwrap()), (3, 3));
        let a = set(&[2, 7]);
        assert_eq!((a.second_smallest().unwrap(), a.second_largest().unwrap()), (7, 2));
        let a = set(&[1, 3, 5, 9]);
        assert_eq!((a.second_smallest().unwrap(), a.second_largest().unwrap()), (3, 5));
        assert_eq!(set(&[4]).second_smallest(), Err(Error::TooSmall(1)));
    }

    #[test]
    fn classify_examples() {
        use StructureClass::*;
        assert_eq!(set(&[3, 9, 15, 21]).classify_structure().unwrap(), DilatedOddProgression { d: 3 });
        assert_eq!(
            set(&[2, 5, 8, 11]).classify_structure().unwrap(),
            ArithmeticProgression { first: 2, diff: 3 }
        );
        assert_eq!(set(&[1, 3, 5, 9]).classify_structure().unwrap(), SumClosure4 { a1: 1, a2: 3, a3: 5 });
        assert_eq!(set(&[1, 3, 5]).classify_structure().unwrap(), DilatedOddProgression { d: 1 });
        assert_eq!(set(&[1, 4, 6, 9]).classify_structure().unwrap(), DiffClosure4 { a1: 1, a2: 4, a3: 6 });
        assert_eq!(set(&[1, 2, 7]).classify_structure().unwrap(), Other);
        assert_eq!(set(&[1]).classify_structure(), Err(Error::TooSmall(1)));
    }

    #[test]
    fn reconstruction_round_trips() {
        for v in [&[3, 9, 15, 21][..], &[2, 5, 8, 11], &[1, 3, 5, 9], &[1, 4, 6, 9], &[-4, 0, 4]] {
            let a = set(v);
            let class = a.classify_structure().unwrap();
            assert_eq!(class.reconstruct(a.size()), Some(a));
        }
        let interval = StructureClass::DilatedInterval { d: 3, start: 0 };
        assert_eq!(interval.reconstruct(3).unwrap().elements(), &[0, 3, 6]);
    }
}
