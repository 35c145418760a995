//! Whether a set meets a bound with equality and has the predicted shape.

use sumsetlab::bounds::{extremal_set, inverse_verdict, parity_case, ExtremalKind};
use sumsetlab::IntegerSet;

fn main() -> sumsetlab::Result<()> {
    let cases = [
        (extremal_set(ExtremalKind::OddProgression { d: 2, k: 4 })?, 3),
        (extremal_set(ExtremalKind::SumClosure4 { a1: 1, a2: 3, a3: 5 })?, 4),
        (IntegerSet::canonicalize(&[1, 3, 5, 7])?, 4),
        (IntegerSet::canonicalize(&[1, 2, 3, 4])?, 3),
        (IntegerSet::canonicalize(&[0, 1, 2, 3, 4])?, 3),
    ];
    for (a, h) in cases {
        match inverse_verdict(&a, h) {
            Ok(v) => println!(
                "{a} h={h}: {:?} ({} = {}, observed {}) {}",
                v.verdict, v.bound_id, v.bound, v.observed, v.classification
            ),
            Err(e) => println!("{a} h={h}: {e}"),
        }
    }

    for v in [[1, 3, 4, 5, 6], [1, 3, 5, 7, 9], [1, 2, 5, 6, 7], [1, 2, 3, 5, 7]] {
        let a = IntegerSet::canonicalize(&v)?;
        let (case, reduced, governing) = parity_case(&a, 4)?;
        println!("{a}: {case:?} on {reduced}, governed by {governing}");
    }
    Ok(())
}
