//! Two candidate extremal sets for the `k = h + 1` bound, side by side.

use sumsetlab::bounds::catalogue_entry;
use sumsetlab::{compute_dp, IntegerSet, SumsetVariant};

fn odd(k: i64) -> IntegerSet {
    IntegerSet::from_sorted((1..=k).map(|i| 2 * i - 1).collect()).unwrap()
}

fn main() -> sumsetlab::Result<()> {
    let base = catalogue_entry("RSS_base").expect("base bound is catalogued");
    println!("{:>3} {:>22} {:>22} {:>6}", "h", "{1,..,2h+1} (k=h+1)", "{1,..,2h-1} (k=h)", "bound");
    for h in 3..=10u32 {
        let long = compute_dp(&odd(h as i64 + 1), SumsetVariant::RestrictedSigned, h)?.cardinality;
        let short = compute_dp(&odd(h as i64), SumsetVariant::RestrictedSigned, h)?.cardinality;
        let hh = (h * h) as usize;
        assert_eq!(long, hh + 2 * h as usize + 1);
        assert_eq!(short, hh - 1);
        println!("{h:>3} {long:>22} {short:>22} {:>6}", base.evaluate(h as usize + 1, h));
    }
    Ok(())
}
