use std::collections::BTreeSet;

use super::{validate, SumsetResult, SumsetVariant};
use crate::bits::BitTable;
use crate::error::Result;
use crate::intset::IntegerSet;

/// Total bits across all layers above which the DP switches from bit tables
/// to sparse ordered sets (128 MiB).
const BIT_BUDGET: u128 = 1 << 30;

trait SumTable: Clone {
    fn empty_like(&self) -> Self;
    fn insert(&mut self, v: i64);
    fn or_shifted(&mut self, src: &Self, shift: i64);
    fn union_with(&mut self, other: &Self);
    fn values(&self) -> Vec<i64>;
}

impl SumTable for BitTable {
    fn empty_like(&self) -> Self {
        let mut t = self.clone();
        t.clear();
        t
    }
    fn insert(&mut self, v: i64) {
        BitTable::insert(self, v)
    }
    fn or_shifted(&mut self, src: &Self, shift: i64) {
        BitTable::or_shifted(self, src, shift)
    }
    fn union_with(&mut self, other: &Self) {
        BitTable::union_with(self, other)
    }
    fn values(&self) -> Vec<i64> {
        BitTable::values(self)
    }
}

#[derive(Clone, Default)]
struct SparseTable(BTreeSet<i64>);

impl SumTable for SparseTable {
    fn empty_like(&self) -> Self {
        SparseTable::default()
    }
    fn insert(&mut self, v: i64) {
        self.0.insert(v);
    }
    fn or_shifted(&mut self, src: &Self, shift: i64) {
        self.0.extend(src.0.iter().map(|v| v + shift));
    }
    fn union_with(&mut self, other: &Self) {
        self.0.extend(other.0.iter().copied());
    }
    fn values(&self) -> Vec<i64> {
        self.0.iter().copied().collect()
    }
}

/// Layered DP over `(element index, used weight)`; each cell is the set of
/// achievable partial sums, layer `j = h` is the answer.
pub fn compute_dp(a: &IntegerSet, variant: SumsetVariant, h: u32) -> Result<SumsetResult> {
    validate(a, variant, h)?;
    let values = match variant {
        SumsetVariant::Subsums => subsums(a),
        _ => {
            let (low, high) = range(a, h);
            if bits_needed(low, high, h + 1) <= BIT_BUDGET {
                let seed = BitTable::new(low, high);
                layers(a, variant, h, seed).pop().unwrap().values()
            } else {
                layers(a, variant, h, SparseTable::default()).pop().unwrap().values()
            }
        }
    };
    Ok(SumsetResult::from_sorted(values))
}

/// Every layer `h_±A`, `h = 0..=t`, for the independence number.
pub(super) fn signed_layers(a: &IntegerSet, t: u32) -> Vec<SumsetResult> {
    let (low, high) = range(a, t);
    let to_results = |v: Vec<Vec<i64>>| v.into_iter().map(SumsetResult::from_sorted).collect();
    if bits_needed(low, high, t + 1) <= BIT_BUDGET {
        let ls = layers(a, SumsetVariant::Signed, t, BitTable::new(low, high));
        to_results(ls.iter().map(|l| l.values()).collect())
    } else {
        let ls = layers(a, SumsetVariant::Signed, t, SparseTable::default());
        to_results(ls.iter().map(|l| l.values()).collect())
    }
}

fn range(a: &IntegerSet, h: u32) -> (i64, i64) {
    let reach = h as i64 * a.max_abs();
    (-reach, reach)
}

fn bits_needed(low: i64, high: i64, layers: u32) -> u128 {
    (high - low + 1) as u128 * layers as u128
}

fn layers<T: SumTable>(a: &IntegerSet, variant: SumsetVariant, h: u32, seed: T) -> Vec<T> {
    let h = h as usize;
    let mut layers: Vec<T> = (0..=h).map(|_| seed.empty_like()).collect();
    layers[0].insert(0);
    for &x in a.elements() {
        match variant {
            SumsetVariant::Restricted => {
                for j in (1..=h).rev() {
                    let (lo, hi) = layers.split_at_mut(j);
                    hi[0].or_shifted(&lo[j - 1], x);
                }
            }
            SumsetVariant::RestrictedSigned => {
                for j in (1..=h).rev() {
                    let (lo, hi) = layers.split_at_mut(j);
                    hi[0].or_shifted(&lo[j - 1], x);
                    hi[0].or_shifted(&lo[j - 1], -x);
                }
            }
            SumsetVariant::Plain => {
                // ascending j lets the same element be reused
                for j in 1..=h {
                    let (lo, hi) = layers.split_at_mut(j);
                    hi[0].or_shifted(&lo[j - 1], x);
                }
            }
            SumsetVariant::Signed => {
                for j in (1..=h).rev() {
                    let (lo, hi) = layers.split_at_mut(j);
                    for m in 1..=j {
                        let k = m as i64;
                        hi[0].or_shifted(&lo[j - m], k * x);
                        hi[0].or_shifted(&lo[j - m], -k * x);
                    }
                }
            }
            SumsetVariant::Subsums => unreachable!("subsums has its own table"),
        }
    }
    layers
}

fn subsums(a: &IntegerSet) -> Vec<i64> {
    let low: i64 = a.elements().iter().filter(|&&x| x < 0).sum();
    let high: i64 = a.elements().iter().filter(|&&x| x > 0).sum();
    if bits_needed(low, high, 2) <= BIT_BUDGET {
        run_subsums(a, BitTable::new(low, high))
    } else {
        run_subsums(a, SparseTable::default())
    }
}

fn run_subsums<T: SumTable>(a: &IntegerSet, mut table: T) -> Vec<i64> {
    table.insert(0);
    for &x in a.elements() {
        let prev = table.clone();
        table.or_shifted(&prev, x);
        table.union_with(&prev);
    }
    table.values()
}
