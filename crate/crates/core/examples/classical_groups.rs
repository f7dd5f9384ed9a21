//! Which GL maps into a hook survive for the orthogonal and symplectic groups.
//!
//! cargo run --example classical_groups

use hookhom::arith::Prime;
use hookhom::partitions::Partition;
use hookhom::ext_classical::{classical_nonvanishing, ClassicalFamily, ClassicalType};

fn main() -> hookhom::Result<()> {
    let cases = [("3,2,1", "5,1", 3), ("2,1,1,1", "4,1", 2), ("5,1,1,1,1", "6,1^3", 3), ("2,1", "3", 3)];
    for (lambda, hook, p) in cases {
        let lambda: Partition = lambda.parse()?;
        let mu: Partition = hook.parse()?;
        let p = Prime::new(p)?;
        print!("{lambda} -> {mu} at p={p}:");
        for family in [ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D] {
            for n in [lambda.m().max(mu.m()), lambda.m().max(mu.m()) + 1] {
                let g = ClassicalType::new(family, n)?;
                print!("  {g} {}", classical_nonvanishing(&lambda, &mu, p, g)?);
            }
        }
        println!();
    }
    Ok(())
}
