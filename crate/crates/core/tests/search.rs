mod common;

use sumsetlab::search::{
    colex_rank, colex_unrank, enumerate_space, minimize, minimize_sharded, partition_work,
    search_range, Regime, SearchReport, SearchSpace, Tally,
};

fn space(k: usize, h: u32, n: i64) -> SearchSpace {
    SearchSpace::new(k, h, n, Regime::PositiveSets)
}

fn json(r: &SearchReport) -> String {
    serde_json::to_string_pretty(r).unwrap()
}

#[test]
fn shards_never_change_the_report() {
    for s in [
        space(4, 3, 12),
        space(5, 3, 11).gcd_reduced(true),
        space(5, 4, 12),
        SearchSpace::new(5, 3, 10, Regime::NonnegWithZero),
        space(4, 2, 14).allowing_outside(true),
    ] {
        assert!(s.index_count() <= 100_000);
        let reference = json(&minimize_sharded(&s, 1).unwrap());
        for shards in [2, 3, 7, 16] {
            assert_eq!(json(&minimize_sharded(&s, shards).unwrap()), reference, "{s:?} shards={shards}");
        }
        assert_eq!(json(&minimize(&s).unwrap()), reference);
    }
}

#[test]
fn merge_is_associative_and_commutative() {
    let s = space(5, 3, 12);
    let parts: Vec<Tally> = partition_work(&s, 5)
        .into_iter()
        .map(|r| search_range(&s, r).unwrap())
        .collect();
    let left = parts.iter().cloned().fold(Tally::default(), Tally::merge);
    let right = parts.iter().rev().cloned().fold(Tally::default(), |acc, t| t.merge(acc));
    let shuffled = [3, 0, 4, 1, 2]
        .into_iter()
        .map(|i| parts[i].clone())
        .fold(Tally::default(), Tally::merge);
    assert_eq!(left, right);
    assert_eq!(left, shuffled);
}

#[test]
fn gcd_reduction_loses_no_minimum() {
    for (k, h, n) in [(4, 3, 12), (5, 3, 11), (5, 4, 11)] {
        let full = minimize(&space(k, h, n)).unwrap();
        let reduced = minimize(&space(k, h, n).gcd_reduced(true)).unwrap();
        assert_eq!(full.min, reduced.min);
        assert!(reduced.examined < full.examined);
        assert!(full.minimizer_count >= reduced.minimizer_count);
    }
}

#[test]
fn enlarging_the_range_never_raises_the_minimum() {
    let mut last = usize::MAX;
    for n in 4..=13 {
        let r = minimize(&space(4, 3, n)).unwrap();
        assert!(r.min <= last);
        last = r.min;
    }
    assert_eq!(last, 16);
}

#[test]
fn colex_ranks_cover_lexicographic_enumeration() {
    let s = space(4, 3, 9);
    let mut ranks: Vec<u128> = enumerate_space(&s)
        .unwrap()
        .map(|a| colex_rank(&a.elements().iter().map(|&x| x as u64 - 1).collect::<Vec<_>>()))
        .collect();
    ranks.sort_unstable();
    assert_eq!(ranks, (0..126).collect::<Vec<_>>());
    assert_eq!(colex_unrank(125, 4), vec![5, 6, 7, 8]);
}

#[test]
fn direct_theorem_minimizers_are_odd_progressions() {
    let r = minimize(&space(5, 4, 13).gcd_reduced(true)).unwrap();
    assert_eq!((r.min, r.bound, r.falsified), (r.bound as usize, 25, false));
    assert_eq!(r.minimizers, vec![vec![1, 3, 5, 7, 9]]);
    assert_eq!(r.unexpected_minimizers, 0);
}

#[test]
fn report_json_round_trips() {
    let r = minimize(&SearchSpace::new(5, 3, 8, Regime::NonnegWithZero)).unwrap();
    let text = json(&r);
    let back: SearchReport = serde_json::from_str(&text).unwrap();
    assert_eq!(json(&back), text);
    assert!(text.contains("\"status\": \"conjecture\""));
}
