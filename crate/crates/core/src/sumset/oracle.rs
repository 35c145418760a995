use std::collections::BTreeSet;

use super::{validate, SumsetResult, SumsetVariant};
use crate::error::{Error, Result};
use crate::intset::IntegerSet;

/// Hard ceiling on coefficient vectors the oracle will walk.
pub const ORACLE_COST_CAP: u128 = 100_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Number of admissible coefficient vectors for `variant` on a `k`-set.
pub fn admissible_vector_count(k: usize, variant: SumsetVariant, h: u32) -> u128 {
    let (k, h) = (k as u128, h as u128);
    match variant {
        SumsetVariant::Plain => binomial(h + k - 1, k - 1),
        SumsetVariant::Restricted => binomial(k, h),
        SumsetVariant::RestrictedSigned => binomial(k, h).saturating_mul(1 << h.min(127)),
        SumsetVariant::Signed => (1..=k.min(h))
            .map(|j| {
                binomial(k, j)
                    .saturating_mul(binomial(h - 1, j - 1))
                    .saturating_mul(1 << j.min(127))
            })
            .fold(0u128, |acc, x| acc.saturating_add(x)),
        SumsetVariant::Subsums => 1u128.checked_shl(k as u32).unwrap_or(u128::MAX),
    }
}

/// Direct enumeration of every admissible coefficient vector `λ`, collecting
/// `Σ λ_i a_i`.
pub fn compute_oracle(a: &IntegerSet, variant: SumsetVariant, h: u32) -> Result<SumsetResult> {
    validate(a, variant, h)?;
    if variant == SumsetVariant::Subsums {
        return a.subsums();
    }
    let count = admissible_vector_count(a.size(), variant, h);
    if count > ORACLE_COST_CAP {
        return Err(Error::CostCapExceeded {
            count,
            cap: ORACLE_COST_CAP,
        });
    }
    let mut out = BTreeSet::new();
    walk(a.elements(), variant, h as i64, 0, &mut out);
    Ok(SumsetResult::from_sorted(out.into_iter().collect()))
}

/// Assigns a coefficient to `rest[0]` and recurses; `weight` is what is still
/// owed to `Σ |λ_i|`.
fn walk(rest: &[i64], variant: SumsetVariant, weight: i64, acc: i64, out: &mut BTreeSet<i64>) {
    if weight == 0 {
        out.insert(acc);
        return;
    }
    let Some((&x, tail)) = rest.split_first() else {
        return;
    };
    let max_mag = match variant {
        SumsetVariant::Restricted | SumsetVariant::RestrictedSigned => 1,
        _ => weight,
    };
    let signed = matches!(variant, SumsetVariant::Signed | SumsetVariant::RestrictedSigned);
    walk(tail, variant, weight, acc, out);
    for m in 1..=max_mag {
        walk(tail, variant, weight - m, acc + m * x, out);
        if signed {
            walk(tail, variant, weight - m, acc - m * x, out);
        }
    }
}
