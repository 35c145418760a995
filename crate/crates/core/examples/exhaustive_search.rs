//! Minimizes the restricted signed sumset over small spaces of sets.

use sumsetlab::search::{minimize, Regime, SearchSpace};

fn main() -> sumsetlab::Result<()> {
    for (k, h) in [(4, 3), (5, 3), (5, 4), (6, 3), (6, 4), (6, 5)] {
        let space = SearchSpace::new(k, h, 2 * k as i64 + 5, Regime::PositiveSets).gcd_reduced(true);
        let r = minimize(&space)?;
        println!(
            "k={k} h={h} N={}: min {} bound {} over {} sets, minimizers {:?}",
            r.max, r.min, r.bound, r.examined, r.minimizers
        );
    }

    // sets containing zero, where the bound is still open
    let space = SearchSpace::new(5, 3, 12, Regime::NonnegWithZero);
    let r = minimize(&space)?;
    println!(
        "zero regime k=5 h=3: min {} bound {} ({}), {} minimizers, classes {:?}",
        r.min,
        r.bound,
        r.status.as_str(),
        r.minimizer_count,
        r.classes
    );
    Ok(())
}
