//! Runs the criterion-versus-oracle sweep for every degree up to a bound and
//! writes the rows as CSV.
//!
//! cargo run --release --example sweep_csv -- 7 sweep.csv

use std::path::PathBuf;
use std::time::Instant;

use hookhom::arith::Prime;
use hookhom::sweep::{sweep_up_to, write_csv_file, SweepSummary, DEFAULT_CAP};

fn main() -> hookhom::Result<()> {
    let mut args = std::env::args().skip(1);
    let r_max: u32 = args.next().map(|s| s.parse().expect("degree bound")).unwrap_or(6);
    let out = args.next().map(PathBuf::from);
    let primes = [2, 3, 5, 7].map(|p| Prime::new(p).unwrap());

    let start = Instant::now();
    let rows = sweep_up_to(r_max, &primes, DEFAULT_CAP)?;
    let summary = SweepSummary::of(&rows);
    println!(
        "r <= {r_max}: {} triples, {} nonzero, {} disagreements, largest oracle dim {} ({:.2?})",
        summary.triples,
        summary.nonzero,
        summary.disagreements,
        summary.max_oracle_dim,
        start.elapsed()
    );
    for row in rows.iter().filter(|r| r.dim_oracle > 0 && r.case.ends_with("iii")).take(5) {
        println!("  {} -> {} at p={}: {}", row.lambda, row.hook, row.p, row.case);
    }
    if let Some(path) = out {
        write_csv_file(&rows, &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
