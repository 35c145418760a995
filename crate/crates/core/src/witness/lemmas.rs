use super::{Guard, LemmaId, WitnessFamily, WitnessPart, WitnessTarget};
use crate::error::{Error, Result};
use crate::intset::IntegerSet;
use crate::sumset::SumsetVariant;

fn violated<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::HypothesisViolated(msg.into()))
}

fn guard(description: impl Into<String>, holds: bool) -> Guard {
    Guard {
        description: description.into(),
        holds,
    }
}

fn odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

/// 1-based view of a positive increasing set.
struct Labels<'a>(&'a IntegerSet);

impl Labels<'_> {
    fn at(&self, i: usize) -> i64 {
        self.0.nth(i)
    }

    /// `a_from + ... + a_to`, zero when `from > to`.
    fn span(&self, from: usize, to: usize) -> i64 {
        (from..=to).map(|t| self.at(t)).sum()
    }
}

fn require_shape(a: &IntegerSet, h: u32, k: usize, min_h: u32) -> Result<()> {
    if !a.is_positive() {
        return violated("set must consist of positive integers");
    }
    if h < min_h {
        return violated(format!("needs h >= {min_h}, got {h}"));
    }
    if a.size() != k {
        return violated(format!("needs |A| = {k}, got {}", a.size()));
    }
    Ok(())
}

fn rss_target(a: &IntegerSet, h: u32) -> WitnessTarget {
    WitnessTarget {
        set: a.clone(),
        variant: SumsetVariant::RestrictedSigned,
        h,
    }
}

fn drop(a: &IntegerSet, i: usize) -> IntegerSet {
    a.without_index(i).expect("sets here have at least four elements")
}

/// First `r >= 3` with `a_r` of the other parity from `a1`, provided
/// `a1 ≡ a2`.
pub fn parity_split_index(a: &IntegerSet) -> Option<usize> {
    let e = a.elements();
    if e.len() < 3 || odd(e[0]) != odd(e[1]) {
        return None;
    }
    (3..=e.len()).find(|&r| odd(e[r - 1]) != odd(e[0]))
}

/// Base `A \ {a_r}`, claimed `h(h+1)/2 + 2h + 1`.
pub fn witness_parity_split(a: &IntegerSet, h: u32, r: usize) -> Result<WitnessFamily> {
    let hu = h as usize;
    require_shape(a, h, hu + 1, 3)?;
    let l = Labels(a);
    if odd(l.at(1)) != odd(l.at(2)) {
        return violated("needs a1 ≡ a2 (mod 2)");
    }
    if !(3..=hu + 1).contains(&r) {
        return violated(format!("r must lie in [3, {}], got {r}", hu + 1));
    }
    if odd(l.at(r)) == odd(l.at(1)) {
        return violated(format!("needs a_{r} ≢ a1 (mod 2)"));
    }

    let u = -l.span(2, hu + 1);
    let v = -l.span(3, hu + 1);
    let mut bs = vec![WitnessPart::new("B0", [u])];
    for j in 1..=hu {
        let tail = l.span(hu - j + 3, hu + 1);
        bs.push(WitnessPart::new(
            format!("B{j}"),
            (2..=hu - j + 2).map(|i| u + 2 * (tail + l.at(i))),
        ));
    }
    let mut cs = Vec::new();
    for j in 1..=hu {
        let shift = v + 2 * l.span(hu - j + 3, hu + 1);
        cs.push(WitnessPart::new(format!("C{j}"), [shift - l.at(1), shift + l.at(1)]));
    }

    let mut guards = Vec::new();
    for i in 0..hu {
        let (b, c, next) = (&bs[i], &cs[i], &bs[i + 1]);
        guards.push(guard(
            format!("max B{i} < min C{} < max C{} < min B{}", i + 1, i + 1, i + 1),
            b.max() < c.min() && c.min() < c.max() && c.max() < next.min(),
        ));
    }

    let mut parts = bs;
    parts.extend(cs);
    Ok(WitnessFamily {
        lemma: LemmaId::ParitySplit,
        parts,
        target: rss_target(a, h),
        base: Some(drop(a, r)),
        claimed_total: hu * (hu + 1) / 2 + 2 * hu + 1,
        guards,
    })
}

/// All-odd `A` with `|A| = h`, inside `Σ(A)`, claimed `h² - 1`.
pub fn witness_odd_subsums(a: &IntegerSet) -> Result<WitnessFamily> {
    let hu = a.size();
    if !a.is_positive() || !a.all_odd() {
        return violated("set must consist of odd positive integers");
    }
    if hu < 3 {
        return violated(format!("needs |A| >= 3, got {hu}"));
    }
    let h = hu as u32;
    let target = WitnessTarget {
        set: a.clone(),
        variant: SumsetVariant::Subsums,
        h,
    };
    let l = Labels(a);

    if hu == 3 {
        let (x, y, z) = (l.at(1), l.at(2), l.at(3));
        let sigma = WitnessPart::new("Sigma", [0, x, y, z, x + y, x + z, y + z, x + y + z]);
        return Ok(WitnessFamily {
            lemma: LemmaId::OddSubsums,
            parts: vec![sigma],
            target,
            base: None,
            claimed_total: 8,
            guards: vec![guard("a3 != a1 + a2", z != x + y)],
        });
    }

    // tail of B_j and C_j: a_{h-j+2} + ... + a_h
    let tail = |j: usize| l.span(hu - j + 2, hu);
    let mut bs = vec![WitnessPart::new("B0", [0])];
    for j in 1..=hu {
        bs.push(WitnessPart::new(
            format!("B{j}"),
            (1..=hu + 1 - j).map(|i| l.at(i) + tail(j)),
        ));
    }
    // index 0 is a placeholder so cs[j] is C_j
    let mut cs = vec![WitnessPart::new("-", [])];
    for j in 1..=hu - 2 {
        cs.push(WitnessPart::new(
            format!("C{j}"),
            (2..=hu - j).map(|i| l.at(1) + l.at(i) + tail(j)),
        ));
    }

    let mut guards = Vec::new();
    for i in 0..hu {
        guards.push(guard(
            format!("max B{i} < min B{}", i + 1),
            bs[i].max() < bs[i + 1].min(),
        ));
    }
    for i in 1..hu - 2 {
        guards.push(guard(
            format!("max C{i} < min C{}", i + 1),
            cs[i].max() < cs[i + 1].min(),
        ));
    }
    for i in 1..=hu - 3 {
        guards.push(guard(
            format!("max B{i} < min C{}", i + 1),
            bs[i].max() < cs[i + 1].min(),
        ));
    }
    for i in 1..=hu - 2 {
        guards.push(guard(
            format!("max C{i} < min B{}", i + 1),
            cs[i].max() < bs[i + 1].min(),
        ));
    }

    let mut extras = Vec::new();
    let (a1, a2) = (l.at(1), l.at(2));
    for j in 1..=hu - 3 {
        let second = l.at(hu - j) + tail(j);
        let delta = l.at(hu - j + 1) - l.at(hu - j);
        guards.push(guard(
            format!("delta{j} = max B{j} - max_- B{j}"),
            delta == bs[j].max() - second,
        ));
        let part = if delta >= a1 + a2 {
            let alpha = second + a2;
            guards.push(guard(
                format!("max_- B{j} < alpha{j} < max B{j}"),
                second < alpha && alpha < bs[j].max(),
            ));
            WitnessPart::new(format!("alpha{j}"), [alpha]).with_branch("delta>=a1+a2")
        } else {
            let alpha = second + a1 + a2;
            guards.push(guard(
                format!("max B{j} < alpha{j} < min C{}", j + 1),
                bs[j].max() < alpha && alpha < cs[j + 1].min(),
            ));
            WitnessPart::new(format!("alpha{j}"), [alpha]).with_branch("delta<a1+a2")
        };
        extras.push(part);
    }

    let mut parts = bs;
    parts.extend(cs.into_iter().skip(1));
    parts.extend(extras);
    Ok(WitnessFamily {
        lemma: LemmaId::OddSubsums,
        parts,
        target,
        base: None,
        claimed_total: hu * hu - 1,
        guards,
    })
}

/// The `B_j` ladder shared by both mixed-parity constructions: `B_0 = {u}`,
/// `B_1 ... B_{h-2}` built from `a_3, ...`, then `B_{h-1} = {top}` and
/// `B_h = {-u}`.
fn mixed_ladder(l: &Labels, hu: usize, u: i64, top: i64) -> Vec<WitnessPart> {
    let mut bs = vec![WitnessPart::new("B0", [u])];
    for j in 1..=hu - 2 {
        let tail = l.span(hu + 3 - j, hu + 1);
        bs.push(WitnessPart::new(
            format!("B{j}"),
            (3..=hu + 2 - j).map(|i| u + 2 * (l.at(i) + tail)),
        ));
    }
    bs.push(WitnessPart::new(format!("B{}", hu - 1), [top]));
    bs.push(WitnessPart::new(format!("B{hu}"), [-u]));
    bs
}

fn mixed_families(
    l: &Labels,
    hu: usize,
    c0: &[i64],
    branch: Option<&str>,
) -> Vec<WitnessPart> {
    (0..=hu - 2)
        .map(|j| {
            let shift = 2 * l.span(hu + 2 - j, hu + 1);
            let p = WitnessPart::new(format!("C{j}"), c0.iter().map(|c| c + shift));
            match branch {
                Some(b) => p.with_branch(b),
                None => p,
            }
        })
        .collect()
}

fn ladder_guards(bs: &[WitnessPart], cs: &[WitnessPart], hu: usize) -> Vec<Guard> {
    let mut guards = Vec::new();
    for i in 0..=hu - 2 {
        let (b, c, next) = (&bs[i], &cs[i], &bs[i + 1]);
        guards.push(guard(
            format!("max B{i} < min C{i} <= max C{i} < min B{}", i + 1),
            b.max() < c.min() && c.max() < next.min(),
        ));
    }
    guards.push(guard(
        format!("max B{} < min B{hu}", hu - 1),
        bs[hu - 1].max() < bs[hu].min(),
    ));
    guards
}

/// `a2 ≢ a1`, `a3 ≢ a1`; base `A \ {a1}`.
pub fn witness_mixed_parity_a3(a: &IntegerSet, h: u32) -> Result<WitnessFamily> {
    let hu = h as usize;
    require_shape(a, h, hu + 1, 3)?;
    let l = Labels(a);
    let (a1, a2, a3) = (l.at(1), l.at(2), l.at(3));
    if odd(a2) == odd(a1) || odd(a3) == odd(a1) {
        return violated("needs a2 ≢ a1 and a3 ≢ a1 (mod 2)");
    }
    let u = -a1 - l.span(3, hu + 1);
    let v = -a1 - a2 - l.span(4, hu + 1);
    let bs = mixed_ladder(&l, hu, u, -u - 2 * a1);
    let collapsed = a3 == 2 * a1 + a2;
    let branch = if collapsed { "a3=2a1+a2" } else { "a3!=2a1+a2" };
    let cs = mixed_families(&l, hu, &[u + 2 * a1, v, v + 2 * a1, v + 2 * a2], Some(branch));

    let mut guards = ladder_guards(&bs, &cs, hu);
    guards.push(guard(
        "|C0| = 3 exactly when a3 = 2a1 + a2",
        (cs[0].values.len() == 3) == collapsed,
    ));
    let tri = hu * (hu + 1) / 2;
    let claimed_total = if collapsed { tri + 2 * hu - 1 } else { tri + 3 * hu - 2 };
    let mut parts = bs;
    parts.extend(cs);
    Ok(WitnessFamily {
        lemma: LemmaId::MixedParityA3,
        parts,
        target: rss_target(a, h),
        base: Some(drop(a, 1)),
        claimed_total,
        guards,
    })
}

fn require_a2_flip(l: &Labels) -> Result<()> {
    let (a1, a2, a3) = (l.at(1), l.at(2), l.at(3));
    if odd(a2) == odd(a1) || odd(a3) != odd(a1) {
        return violated("needs a2 ≢ a1 ≡ a3 (mod 2)");
    }
    Ok(())
}

/// `a2 ≢ a1 ≡ a3`; base `A \ {a2}`, claimed `h(h+1)/2 + h`.
pub fn witness_mixed_parity_a2(a: &IntegerSet, h: u32) -> Result<WitnessFamily> {
    let hu = h as usize;
    require_shape(a, h, hu + 1, 4)?;
    let l = Labels(a);
    require_a2_flip(&l)?;
    let (a1, a2) = (l.at(1), l.at(2));
    let u = -l.span(2, hu + 1);
    let v = -a1 - a2 - l.span(4, hu + 1);
    let bs = mixed_ladder(&l, hu, u, -u - 2 * a2);
    let cs = mixed_families(&l, hu, &[v, v + 2 * a1], None);
    let guards = ladder_guards(&bs, &cs, hu);
    let mut parts = bs;
    parts.extend(cs);
    Ok(WitnessFamily {
        lemma: LemmaId::MixedParityA2,
        parts,
        target: rss_target(a, h),
        base: Some(drop(a, 2)),
        claimed_total: hu * (hu + 1) / 2 + hu,
        guards,
    })
}

/// `a2 ≢ a1 ≡ a3`, `A \ {a2}` an A.P., `a2` odd; inside `Σ(A \ {a1})`,
/// claimed `h² - h + 2`.
pub fn witness_mixed_parity_a2_subsums(a: &IntegerSet, h: u32) -> Result<WitnessFamily> {
    let hu = h as usize;
    require_shape(a, h, hu + 1, 4)?;
    let l = Labels(a);
    require_a2_flip(&l)?;
    let a2 = l.at(2);
    if !odd(a2) {
        return violated("needs a2 odd");
    }
    let rest = drop(a, 2);
    if rest.arithmetic_progression().is_none() {
        return violated("needs A \\ {a2} to be an arithmetic progression");
    }

    let mut bs = vec![WitnessPart::new("B0", [0, a2])];
    let mut cs = Vec::new();
    for j in 1..=hu - 1 {
        let tail = l.span(hu + 3 - j, hu + 1);
        let b: Vec<i64> = (3..=hu + 2 - j).map(|i| l.at(i) + tail).collect();
        cs.push(WitnessPart::new(format!("C{j}"), b.iter().map(|x| x + a2)));
        bs.push(WitnessPart::new(format!("B{j}"), b));
    }

    let mut guards = Vec::new();
    for i in 0..hu - 1 {
        guards.push(guard(
            format!("max B{i} < min B{}", i + 1),
            bs[i].max() < bs[i + 1].min(),
        ));
    }
    for i in 0..hu - 2 {
        guards.push(guard(
            format!("max C{} < min C{}", i + 1, i + 2),
            cs[i].max() < cs[i + 1].min(),
        ));
    }
    guards.push(guard(
        "max B0 < min C_i for all i",
        cs.iter().all(|c| bs[0].max() < c.min()),
    ));
    guards.push(guard(
        "B_i even and C_i odd for i >= 1",
        bs[1..].iter().all(|b| b.values.iter().all(|&x| !odd(x)))
            && cs.iter().all(|c| c.values.iter().all(|&x| odd(x))),
    ));

    let mut parts = bs;
    parts.extend(cs);
    Ok(WitnessFamily {
        lemma: LemmaId::MixedParityA2Subsums,
        parts,
        target: WitnessTarget {
            set: drop(a, 1),
            variant: SumsetVariant::Subsums,
            h,
        },
        base: None,
        claimed_total: hu * hu - hu + 2,
        guards,
    })
}

/// All-odd `A` with `|A| = h + 1`; base `A \ {a_{h+1}}`, claimed `2h + 2`.
pub fn witness_all_odd_extension(a: &IntegerSet, h: u32) -> Result<WitnessFamily> {
    let hu = h as usize;
    require_shape(a, h, hu + 1, 3)?;
    if !a.all_odd() {
        return violated("set must consist of odd integers");
    }
    let l = Labels(a);
    let base = drop(a, hu + 1);
    let total = a.sum();
    let (a1, a2) = (l.at(1), l.at(2));
    let (ah, top) = (l.at(hu), l.at(hu + 1));
    let z = l.span(1, hu);
    let x = z - 2 * a2;
    let y = z - 2 * a1;
    let alpha = z + top - ah - 2 * a2;
    let beta = z + top - ah - 2 * a1;

    // C = h^_±(base) ∪ h^A ∪ h^(-A); the last two are ±(total - a_i)
    let base_sums = crate::sumset::compute_dp(&base, SumsetVariant::RestrictedSigned, h)?;
    let in_c = |w: i64| {
        base_sums.contains(w) || (1..=hu + 1).any(|i| (total - l.at(i)).abs() == w.abs())
    };
    let (alpha_in, beta_in) = (in_c(alpha), in_c(beta));

    let pos = WitnessPart::new("hA", (1..=hu).map(|i| total - l.at(i)));
    let neg = WitnessPart::new("h(-A)", (1..=hu).map(|i| l.at(i) - total));
    let extra = if !alpha_in {
        WitnessPart::new("pm_alpha", [alpha, -alpha]).with_branch("alpha not in C")
    } else if !beta_in {
        WitnessPart::new("pm_beta", [beta, -beta]).with_branch("beta not in C")
    } else {
        // both inside C contradicts the construction; keep alpha so the
        // disjointness check fails loudly
        WitnessPart::new("pm_alpha", [alpha, -alpha]).with_branch("alpha and beta both in C")
    };

    let second_h = total - ah;
    let guards = vec![
        guard("x < y < z", x < y && y < z),
        guard("0 < alpha < beta", 0 < alpha && alpha < beta),
        guard("x < alpha", x < alpha),
        guard("y < beta", y < beta),
        guard("beta < min_+ h^A", beta < second_h),
        guard(
            format!("alpha in C: {alpha_in}, beta in C: {beta_in}"),
            !(alpha_in && beta_in),
        ),
    ];

    Ok(WitnessFamily {
        lemma: LemmaId::AllOddExtension,
        parts: vec![pos, neg, extra],
        target: rss_target(a, h),
        base: Some(base),
        claimed_total: 2 * hu + 2,
        guards,
    })
}
