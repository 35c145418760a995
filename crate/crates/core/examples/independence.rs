use sumsetlab::sumset::independence_number;
use sumsetlab::IntegerSet;

fn main() -> sumsetlab::Result<()> {
    for v in [vec![1, 3, 5, 7], vec![1, 2, 4, 8, 16], vec![3, 5], vec![1, 10, 100]] {
        let a = IntegerSet::canonicalize(&v)?;
        println!("{a}: {:?}", independence_number(&a, 12)?);
    }
    Ok(())
}
