//! Builds each witness family and checks it against the sumset it sits in.

use sumsetlab::witness::{generate, LemmaId};
use sumsetlab::IntegerSet;

fn main() -> sumsetlab::Result<()> {
    let cases: [(LemmaId, &[i64], Option<u32>); 6] = [
        (LemmaId::ParitySplit, &[2, 4, 5, 6, 8], Some(4)),
        (LemmaId::OddSubsums, &[1, 3, 5, 7, 11], None),
        (LemmaId::MixedParityA3, &[1, 2, 6, 7], Some(3)),
        (LemmaId::MixedParityA2, &[1, 2, 3, 5, 7], Some(4)),
        (LemmaId::MixedParityA2Subsums, &[2, 3, 4, 6, 8], Some(4)),
        (LemmaId::AllOddExtension, &[1, 3, 7, 9], Some(3)),
    ];
    for (lemma, v, h) in cases {
        let a = IntegerSet::canonicalize(v)?;
        let family = generate(lemma, &a, h, None)?;
        let report = family.verify()?;
        println!("{lemma} on {a}: {} parts, total {} of {}", report.parts.len(), report.total, report.target_cardinality);
        for p in &family.parts {
            let branch = p.branch.as_deref().map(|b| format!(" [{b}]")).unwrap_or_default();
            println!("  {:<8}{branch} {:?}", p.name, p.values);
        }
        println!("  exhibited bound {} -> {}", report.exhibited_bound, if report.passed() { "pass" } else { "fail" });
    }

    let bad = IntegerSet::canonicalize(&[1, 3, 5, 7, 9])?;
    println!("parity-split on {bad}: {}", generate(LemmaId::ParitySplit, &bad, Some(4), Some(3)).unwrap_err());
    Ok(())
}
