//! Command-line front end. The binary only forwards to [`run`].

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::Value;

use crate::arith::Prime;
use crate::criterion::{hom_dim_theorem, Condition};
use crate::error::{domain, Error, Result};
use crate::ext_classical::{classical_nonvanishing, ext1_hooks, ClassicalFamily, ClassicalType};
use crate::homspace::hom_dim_oracle;
use crate::partitions::{Hook, Partition};
use crate::sweep::{sweep, write_csv, write_csv_file, SweepSummary, DEFAULT_CAP};
use crate::tableaux::{straighten, RawTableau};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hookhom", version, about = "Homomorphisms between Weyl modules with a hook on one side")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// dim Hom(Δ(λ), Δ(h)) with its certificate.
    Hom {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_hook)]
        hook: Hook,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        /// Also solve the relation matrix and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare criterion and oracle on every (λ, h, p) of one degree.
    Sweep {
        #[arg(long)]
        r: u32,
        #[arg(long, value_delimiter = ',', value_parser = parse_prime, default_value = "2,3,5,7")]
        primes: Vec<Prime>,
        /// CSV destination; rows go to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u32,
    },
    /// Expand a hook tableau in the standard basis.
    Straighten {
        #[arg(long, allow_hyphen_values = true)]
        tableau: String,
        #[arg(long, value_parser = parse_hook)]
        shape: Hook,
    },
    /// Integral Ext^1(Δ(h), Δ(h(d))).
    Ext {
        #[arg(long, value_parser = parse_hook)]
        hook: Hook,
        #[arg(long)]
        d: u32,
    },
    /// Non-vanishing of the induced map for a classical group.
    Classical {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        hook: Partition,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long = "type", value_parser = parse_family)]
        family: ClassicalFamily,
        #[arg(long)]
        n: usize,
    },
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_hook(s: &str) -> std::result::Result<Hook, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_prime(s: &str) -> std::result::Result<Prime, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<ClassicalFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomQuery {
    pub lambda: Partition,
    pub hook: Hook,
    pub p: Prime,
    pub oracle: bool,
}

/// Result of one `hom` query.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub query: HomQuery,
    pub dim: usize,
    pub case: String,
    pub conditions: Vec<Condition>,
    pub witness: Option<BTreeMap<String, u64>>,
    pub oracle_dim: Option<usize>,
    pub agree: Option<bool>,
    pub elapsed_ms: f64,
}

impl OutputRecord {
    pub fn compute(lambda: &Partition, hook: Hook, p: Prime, oracle: bool) -> Result<Self> {
        let start = Instant::now();
        let rep = hom_dim_theorem(lambda, hook, p)?;
        let oracle_dim = if oracle { Some(hom_dim_oracle(lambda, hook, p)?.dim) } else { None };
        Ok(OutputRecord {
            query: HomQuery { lambda: lambda.clone(), hook, p, oracle },
            dim: rep.dim,
            case: rep.tag(),
            conditions: rep.conditions,
            witness: rep.witness.map(|w| w.into_iter().map(|(i, c)| (i.to_string(), c)).collect()),
            agree: oracle_dim.map(|d| d == rep.dim),
            oracle_dim,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    }

    /// JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("record serializes");
        serde_json::to_string_pretty(&sorted(value)).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let q = &self.query;
        let mut s = format!("dim {}\nlambda {}  hook {}  p {}\ncase {}\n", self.dim, q.lambda, q.hook, q.p, self.case);
        for c in &self.conditions {
            let mark = if c.divisible { "divides" } else { "does not divide" };
            s.push_str(&format!("  {}: {} ({} {mark} it)\n", c.description, c.value, q.p));
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!("witness d_I mod {}:\n", q.p));
            for (i, c) in w {
                s.push_str(&format!("  {i} {c}\n"));
            }
        }
        if let Some(d) = self.oracle_dim {
            let verdict = if d == self.dim { "agrees" } else { "DISAGREES" };
            s.push_str(&format!("oracle dim {d} ({verdict})\n"));
        }
        s
    }
}

fn sorted(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let entries: BTreeMap<String, Value> = map.into_iter().map(|(k, v)| (k, sorted(v))).collect();
            Value::Object(entries.into_iter().collect())
        }
        Value::Array(xs) => Value::Array(xs.into_iter().map(sorted).collect()),
        other => other,
    }
}

/// Parses `args` (including the program name), runs the command, and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io { path: PathBuf::from("<stdout>"), source: e }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Hom { lambda, hook, p, oracle, format } => {
            let rec = OutputRecord::compute(&lambda, hook, p, oracle)?;
            let text = match format {
                Format::Text => rec.to_text(),
                Format::Json => rec.to_json() + "\n",
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            if rec.agree == Some(false) {
                writeln!(err, "oracle dim {:?} disagrees with criterion dim {}", rec.oracle_dim, rec.dim).map_err(io_err)?;
                return Ok(EXIT_DISAGREEMENT);
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { r, primes, out: path, cap } => {
            let rows = sweep(r, &primes, cap)?;
            let summary = SweepSummary::of(&rows);
            let line = format!(
                "r={r} triples={} nonzero={} disagreements={} max_oracle_dim={}",
                summary.triples, summary.nonzero, summary.disagreements, summary.max_oracle_dim
            );
            match path {
                Some(path) => {
                    write_csv_file(&rows, &path)?;
                    writeln!(out, "{line}\nwrote {}", path.display()).map_err(io_err)?;
                }
                None => {
                    write_csv(&rows, &mut *out)
                        .map_err(|source| Error::Csv { path: PathBuf::from("<stdout>"), source })?;
                    writeln!(err, "{line}").map_err(io_err)?;
                }
            }
            for row in rows.iter().filter(|r| !r.agree) {
                writeln!(err, "disagreement: {} -> {} at p={}", row.lambda, row.hook, row.p).map_err(io_err)?;
            }
            Ok(if summary.disagreements == 0 { EXIT_OK } else { EXIT_DISAGREEMENT })
        }
        Command::Straighten { tableau, shape } => {
            let raw: RawTableau = tableau.parse()?;
            if raw.shape() != (shape.a(), shape.b()) {
                return Err(domain(format!("tableau {tableau:?} does not have shape {shape}")));
            }
            let combo = straighten(&raw.normalize(BigInt::one()));
            writeln!(out, "{combo}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Ext { hook, d } => {
            writeln!(out, "{}", ext1_hooks(hook, d)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Classical { lambda, hook, p, family, n } => {
            let g = ClassicalType::new(family, n)?;
            writeln!(out, "{}", classical_nonvanishing(&lambda, &hook, p, g)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}
