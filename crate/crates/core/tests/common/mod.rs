#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use sumsetlab::witness::LemmaId;
use sumsetlab::{compute_dp, IntegerSet, SumsetVariant};

pub const RSS: SumsetVariant = SumsetVariant::RestrictedSigned;

pub fn set(v: &[i64]) -> IntegerSet {
    IntegerSet::canonicalize(v).unwrap()
}

fn odd(x: i64) -> bool {
    x % 2 != 0
}

fn sample(rng: &mut impl Rng, pool: &[i64], n: usize) -> Vec<i64> {
    let mut v: Vec<i64> = pool.choose_multiple(rng, n).copied().collect();
    v.sort_unstable();
    v
}

/// A random instance satisfying `lemma`'s hypotheses, elements in `[1, 50]`.
/// Returns the set and the fold.
pub fn random_instance(lemma: LemmaId, rng: &mut impl Rng) -> (IntegerSet, u32) {
    let all: Vec<i64> = (1..=50).collect();
    let odds: Vec<i64> = (1..=50).step_by(2).collect();
    loop {
        let (v, h) = match lemma {
            LemmaId::ParitySplit => {
                let h = rng.gen_range(3..=7);
                let v = sample(rng, &all, h as usize + 1);
                let ok = odd(v[0]) == odd(v[1]) && v[2..].iter().any(|&x| odd(x) != odd(v[0]));
                (ok.then_some(v), h)
            }
            LemmaId::OddSubsums => {
                let h = rng.gen_range(3..=8);
                (Some(sample(rng, &odds, h as usize)), h)
            }
            LemmaId::MixedParityA3 => {
                let h = rng.gen_range(3..=7);
                let v = sample(rng, &all, h as usize + 1);
                let ok = odd(v[1]) != odd(v[0]) && odd(v[2]) != odd(v[0]);
                (ok.then_some(v), h)
            }
            LemmaId::MixedParityA2 => {
                let h = rng.gen_range(4..=7);
                let v = sample(rng, &all, h as usize + 1);
                let ok = odd(v[1]) != odd(v[0]) && odd(v[2]) == odd(v[0]);
                (ok.then_some(v), h)
            }
            LemmaId::MixedParityA2Subsums => {
                // even progression a1, a1 + 2t, ... with an odd a2 in the first gap
                let h = rng.gen_range(4..=7);
                let t = rng.gen_range(1..=4i64);
                let a1 = 2 * rng.gen_range(1..=10i64);
                let mut v: Vec<i64> = (0..h as i64).map(|i| a1 + 2 * t * i).collect();
                let a2 = a1 + 2 * rng.gen_range(0..t) + 1;
                v.insert(1, a2);
                (v.iter().all(|&x| x <= 50).then_some(v), h)
            }
            LemmaId::AllOddExtension => {
                let h = rng.gen_range(3..=7);
                (Some(sample(rng, &odds, h as usize + 1)), h)
            }
        };
        if let Some(v) = v {
            return (set(&v), h);
        }
    }
}

/// `h^_±(c * A) = c * h^_±A`.
pub fn dilation_identity(a: &IntegerSet, c: i64, h: u32) -> Result<(), String> {
    let lhs = compute_dp(&a.dilate(c).unwrap(), RSS, h).unwrap();
    let rhs = compute_dp(a, RSS, h).unwrap().dilate(c).unwrap();
    (lhs == rhs).then_some(()).ok_or_else(|| format!("dilation fails for {a:?}, c={c}, h={h}"))
}

/// `h^_±A = -(h^_±A)`.
pub fn symmetry_identity(a: &IntegerSet, h: u32) -> Result<(), String> {
    let r = compute_dp(a, RSS, h).unwrap();
    (r.negate() == r).then_some(()).ok_or_else(|| format!("asymmetric for {a:?}, h={h}"))
}

/// `h^_±A = h^_±|A|` when `A ∩ (-A) ⊆ {0}`.
pub fn abs_identity(a: &IntegerSet, h: u32) -> Result<(), String> {
    if !a.is_sign_free() {
        return Err(format!("{a:?} is not sign free"));
    }
    let lhs = compute_dp(a, RSS, h).unwrap();
    let rhs = compute_dp(&a.abs_set(), RSS, h).unwrap();
    (lhs == rhs).then_some(()).ok_or_else(|| format!("abs identity fails for {a:?}, h={h}"))
}

/// `h^A ∪ h^(-A) ⊆ h^_±A ⊆ h_±A`.
pub fn containment_chain(a: &IntegerSet, h: u32) -> Result<(), String> {
    let plus = compute_dp(a, SumsetVariant::Restricted, h).unwrap();
    let minus = compute_dp(&a.negate(), SumsetVariant::Restricted, h).unwrap();
    let signed_r = compute_dp(a, RSS, h).unwrap();
    let signed = compute_dp(a, SumsetVariant::Signed, h).unwrap();
    let ok = plus.union(&minus).is_subset_of(&signed_r) && signed_r.is_subset_of(&signed);
    ok.then_some(()).ok_or_else(|| format!("containment fails for {a:?}, h={h}"))
}

/// `k^_±A = min + 2 * Σ(A)` for positive `A` of size `k`.
pub fn full_fold_identity(a: &IntegerSet) -> Result<(), String> {
    let k = a.size() as u32;
    let r = compute_dp(a, RSS, k).unwrap();
    let sigma = compute_dp(a, SumsetVariant::Subsums, 0).unwrap();
    let rhs = sigma.dilate(2).unwrap().translate(r.min().unwrap());
    (r == rhs).then_some(()).ok_or_else(|| format!("full fold fails for {a:?}"))
}

/// Every nonempty subset of `pool` with at most `max_size` elements.
pub fn subsets_up_to(pool: &[i64], max_size: usize) -> Vec<IntegerSet> {
    fn go(pool: &[i64], max: usize, cur: &mut Vec<i64>, out: &mut Vec<IntegerSet>) {
        if !cur.is_empty() {
            out.push(IntegerSet::from_sorted(cur.clone()).unwrap());
        }
        if cur.len() == max {
            return;
        }
        for (i, &x) in pool.iter().enumerate() {
            cur.push(x);
            go(&pool[i + 1..], max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, max_size, &mut Vec::new(), &mut out);
    out
}

pub fn btree(a: &BTreeSet<i64>) -> IntegerSet {
    IntegerSet::from_sorted(a.iter().copied().collect()).unwrap()
}

pub mod strategies {
    use proptest::collection::{btree_set, vec};
    use proptest::prelude::*;
    use sumsetlab::IntegerSet;

    use super::btree;

    /// A set of up to `max_size` elements from `range` and a fold in `[1, k]`.
    pub fn set_and_fold(
        range: std::ops::RangeInclusive<i64>,
        max_size: usize,
    ) -> impl Strategy<Value = (IntegerSet, u32)> {
        btree_set(range, 1..=max_size).prop_flat_map(|s| {
            let k = s.len() as u32;
            (Just(btree(&s)), 1..=k)
        })
    }

    pub fn dilation_case() -> impl Strategy<Value = (IntegerSet, u32, i64)> {
        (set_and_fold(-20..=20, 6), (-6i64..=6).prop_filter("nonzero", |c| *c != 0))
            .prop_map(|((a, h), c)| (a, h, c))
    }

    /// Sets with `A ∩ (-A) ⊆ {0}`.
    pub fn sign_free_and_fold() -> impl Strategy<Value = (IntegerSet, u32)> {
        (btree_set(1i64..=25, 1..=6), any::<bool>())
            .prop_flat_map(|(s, zero)| {
                let n = s.len();
                (Just(s), Just(zero), vec(any::<bool>(), n))
            })
            .prop_flat_map(|(s, zero, signs)| {
                let mut v: Vec<i64> = s
                    .iter()
                    .zip(signs)
                    .map(|(&x, neg)| if neg { -x } else { x })
                    .collect();
                if zero {
                    v.push(0);
                }
                let a = IntegerSet::canonicalize(&v).unwrap();
                let k = a.size() as u32;
                (Just(a), 1..=k)
            })
    }

    pub fn positive_set() -> impl Strategy<Value = IntegerSet> {
        btree_set(1i64..=40, 1..=9).prop_map(|s| btree(&s))
    }
}
