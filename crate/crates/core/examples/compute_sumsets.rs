//! Every sumset variant of one set, plus a batch run.

use sumsetlab::sumset::{compute_batch, SumsetRequest};
use sumsetlab::{compute_dp, compute_oracle, IntegerSet, SumsetVariant};

fn main() -> sumsetlab::Result<()> {
    let a = IntegerSet::canonicalize(&[7, 1, 5, 3])?;
    println!("A = {a}");
    for variant in [
        SumsetVariant::Plain,
        SumsetVariant::Restricted,
        SumsetVariant::Signed,
        SumsetVariant::RestrictedSigned,
    ] {
        for h in 1..=4 {
            let dp = compute_dp(&a, variant, h)?;
            assert_eq!(dp, compute_oracle(&a, variant, h)?);
            println!("{:>10} h={h}: {:>3} values in [{}, {}]", variant.as_str(), dp.cardinality, dp.min().unwrap(), dp.max().unwrap());
        }
    }
    let sigma = compute_dp(&a, SumsetVariant::Subsums, 0)?;
    println!("subsums: {:?}", sigma.values);

    let requests: Vec<SumsetRequest> = (3..=6i64)
        .map(|k| SumsetRequest {
            set: IntegerSet::from_sorted((1..=k).map(|i| 2 * i - 1).collect()).unwrap(),
            variant: SumsetVariant::RestrictedSigned,
            h: 3,
        })
        .collect();
    for (req, out) in requests.iter().zip(compute_batch(&requests)) {
        println!("{} h=3 -> {}", req.set, out?.cardinality);
    }
    Ok(())
}
