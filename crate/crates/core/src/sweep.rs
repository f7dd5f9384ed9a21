//! Exhaustive comparison of the closed-form criterion against the oracle.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Prime;
use crate::criterion::hom_dim_theorem;
use crate::error::{domain, Error, Result};
use crate::homspace::RelationMatrix;
use crate::partitions::{enumerate_hooks, enumerate_partitions, Hook, Partition};
use crate::tableaux::Straightener;

pub const DEFAULT_CAP: u32 = 9;

/// One `(λ, h, p)` triple. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub lambda: Partition,
    pub hook: Hook,
    pub p: Prime,
    pub dim_theorem: usize,
    pub dim_oracle: usize,
    pub agree: bool,
    pub case: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub triples: usize,
    pub disagreements: usize,
    pub max_oracle_dim: usize,
    pub nonzero: usize,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> Self {
        SweepSummary {
            triples: rows.len(),
            disagreements: rows.iter().filter(|r| !r.agree).count(),
            max_oracle_dim: rows.iter().map(|r| r.dim_oracle).max().unwrap_or(0),
            nonzero: rows.iter().filter(|r| r.dim_oracle > 0).count(),
        }
    }
}

/// All triples with `λ, h ⊢ r`, ordered by λ (lexicographically decreasing),
/// then h (decreasing arm), then p in the order given.
///
/// Each relation matrix is assembled once over Z and reduced for every prime.
pub fn sweep(r: u32, primes: &[Prime], cap: u32) -> Result<Vec<SweepRow>> {
    if r > cap {
        return Err(domain(format!("r = {r} exceeds the sweep cap {cap}")));
    }
    let pairs: Vec<(Partition, Hook)> = enumerate_partitions(r, r as usize)
        .into_iter()
        .flat_map(|l| enumerate_hooks(r).into_iter().map(move |h| (l.clone(), h)))
        .collect();
    let straightener = Straightener::default();
    let chunks: Vec<Result<Vec<SweepRow>>> = pairs
        .par_iter()
        .map(|(lambda, h)| {
            let matrix = RelationMatrix::assemble_with(lambda, *h, &straightener)?;
            primes
                .iter()
                .map(|&p| {
                    let rep = hom_dim_theorem(lambda, *h, p)?;
                    let dim_oracle = matrix.solve(p).dim;
                    Ok(SweepRow {
                        lambda: lambda.clone(),
                        hook: *h,
                        p,
                        dim_theorem: rep.dim,
                        dim_oracle,
                        agree: rep.dim == dim_oracle,
                        case: rep.tag(),
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for c in chunks {
        rows.extend(c?);
    }
    Ok(rows)
}

/// [`sweep`] for every degree `1..=r_max`, concatenated in increasing degree.
pub fn sweep_up_to(r_max: u32, primes: &[Prime], cap: u32) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for r in 1..=r_max {
        rows.extend(sweep(r, primes, cap)?);
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::result::Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv_file(rows: &[SweepRow], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    write_csv(rows, file).map_err(|source| Error::Csv { path: path.to_path_buf(), source })
}
