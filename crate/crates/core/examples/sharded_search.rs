//! Splits a search into colex rank ranges and merges the partial tallies.

use std::time::Instant;

use sumsetlab::search::{minimize_sharded, partition_work, search_range, Regime, SearchSpace, Tally};

fn main() -> sumsetlab::Result<()> {
    let space = SearchSpace::new(6, 5, 17, Regime::PositiveSets).gcd_reduced(true);
    println!("{} index tuples", space.index_count());

    let ranges = partition_work(&space, 5);
    let mut total = Tally::default();
    for r in ranges {
        let t = search_range(&space, r.clone())?;
        println!("ranks {:>5}..{:<5} examined {:>5} min {:?}", r.start, r.end, t.examined, t.min);
        total = total.merge(t);
    }
    println!("merged: min {:?} from {} minimizers", total.min, total.minimizer_count);

    let mut reference = None;
    for shards in [1, 2, 7, 16] {
        let start = Instant::now();
        let json = serde_json::to_string(&minimize_sharded(&space, shards)?).unwrap();
        let same = reference.get_or_insert_with(|| json.clone()) == &json;
        println!("{shards:>2} shards: {:?}, identical={same}", start.elapsed());
    }
    Ok(())
}
