//! Lower bounds from the catalogue next to the odd progression that meets them.

use sumsetlab::bounds::{bound_catalogue, catalogue_entry, check_bounds};
use sumsetlab::{compute_dp, IntegerSet, SumsetVariant};

fn main() -> sumsetlab::Result<()> {
    for e in bound_catalogue() {
        let d = e.to_doc();
        println!("{:<29} {:<11} {:<11} {}", d.id, d.variant, d.status.as_str(), d.formula);
    }
    println!();

    let direct = catalogue_entry("RSS_direct").expect("direct bound is catalogued");
    print!("  k\\h");
    for h in 3..=8 {
        print!("{h:>6}");
    }
    println!();
    for k in 4..=9usize {
        let a = IntegerSet::from_sorted((1..=k as i64).map(|i| 2 * i - 1).collect())?;
        print!("{k:>5}");
        for h in 3..k as u32 {
            let r = compute_dp(&a, SumsetVariant::RestrictedSigned, h)?;
            let met = check_bounds(&a, h, SumsetVariant::RestrictedSigned, &r)?
                .iter()
                .all(|b| b.met);
            let tight = r.cardinality as i64 == direct.evaluate(k, h);
            print!("{:>5}{}", r.cardinality, if tight && met { "=" } else { " " });
        }
        println!();
    }
    Ok(())
}
