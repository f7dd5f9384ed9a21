//! Acceptance harness. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Dimension checks are exact; runtime budgets are the
//! only tolerances and are pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hookhom::arith::{binom_exact, binom_mod_p, l_p, p_divides_r, r_gcd, Prime};
use hookhom::criterion::{carter_payne_adjacent, hom_dim, hom_dim_theorem};
use hookhom::ext_classical::{ext1_cross_check, ext1_hooks, ExtGroup};
use hookhom::homspace::{psi_canonical_coefficient, witness_coeffs, RelationMatrix};
use hookhom::linalg::proportional;
use hookhom::loubert::equivalence_check;
use hookhom::partitions::{enumerate_hooks, enumerate_partitions, Composition, Hook, Partition};
use hookhom::sweep::{sweep_up_to, SweepRow, DEFAULT_CAP};
use hookhom::tableaux::{normalize, Arm, Strategy, Straightener, TableauCombo};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(120);
const LOUBERT_BUDGET: Duration = Duration::from_secs(60);
const MAX_HOM_DIM: usize = 1;
const SWEEP_R: u32 = 8;
const SWEEP_PRIMES: [u64; 4] = [2, 3, 5, 7];
const ARITH_X: u64 = 200;
const ARITH_Y: u64 = 50;
const ARITH_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];
const LUCAS_N: u64 = 2000;
const EXT_R: u32 = 10;
const STRAIGHTEN_CASES: usize = 600;
const STRAIGHTEN_R: u32 = 8;
const STRAIGHTEN_SEED: u64 = 0x5eed_2024;

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn report(id: u32, name: &str, budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        out.check(elapsed <= b, || format!("took {elapsed:.2?}, budget {b:.0?}"));
    }
    let ok = out.failures.is_empty();
    let budget = budget.map(|b| format!(", budget {b:.0?}")).unwrap_or_default();
    println!(
        "[{}] {id}. {name}: {} ({elapsed:.2?}{budget})",
        if ok { "PASS" } else { "FAIL" },
        out.summary
    );
    for f in out.failures.iter().take(10) {
        println!("       {f}");
    }
    if out.failures.len() > 10 {
        println!("       ... {} more", out.failures.len() - 10);
    }
    ok
}

fn non_carter_payne_map() -> Outcome {
    let mut out = Outcome::new();
    let p = prime(2);
    for (c, d) in [(2u32, 3u32), (2, 5), (4, 3), (4, 5)] {
        let lambda = Hook::new(c, d).unwrap().to_partition();
        let far = Hook::new(c + 2, d - 2).unwrap();
        let near_hook = Hook::new(c + 1, d - 1).unwrap();
        let mut parts = vec![c, 2];
        parts.extend(std::iter::repeat(1).take(d as usize - 2));
        let near_other = Partition::new(parts).unwrap();

        let adjacent = carter_payne_adjacent(&lambda);
        out.check(adjacent.contains(&near_hook.to_partition()) && adjacent.contains(&near_other), || {
            format!("({c},{d}): expected targets are not Carter-Payne adjacent")
        });
        let dims = [
            hom_dim_theorem(&lambda, far, p).unwrap().dim,
            hom_dim_theorem(&lambda, near_hook, p).unwrap().dim,
            hom_dim(&lambda, &near_other, p).unwrap().dim,
        ];
        out.check(dims == [1, 0, 0], || format!("({c},{d}): dims {dims:?}, expected [1, 0, 0]"));
    }
    out.summary = "4 (c,d) pairs at p=2, far hook dim 1, both adjacent targets dim 0".into();
    out
}

fn sweep_agreement(rows: &[SweepRow]) -> Outcome {
    let mut out = Outcome::new();
    for row in rows.iter().filter(|r| !r.agree) {
        out.failures.push(format!(
            "{} -> {} at p={}: theorem {} oracle {}",
            row.lambda, row.hook, row.p, row.dim_theorem, row.dim_oracle
        ));
    }
    let at_top = rows.iter().filter(|r| r.lambda.r() == SWEEP_R).count();
    out.check(at_top == 22 * 8 * SWEEP_PRIMES.len(), || format!("{at_top} triples at r={SWEEP_R}"));
    out.summary = format!("{} triples for r <= {SWEEP_R}, {} mismatches", rows.len(), out.failures.len());
    out
}

fn dim_bound(rows: &[SweepRow]) -> Outcome {
    let mut out = Outcome::new();
    for row in rows.iter().filter(|r| r.dim_oracle > MAX_HOM_DIM) {
        out.failures.push(format!("{} -> {} at p={}: oracle dim {}", row.lambda, row.hook, row.p, row.dim_oracle));
    }
    let max = rows.iter().map(|r| r.dim_oracle).max().unwrap_or(0);
    out.summary = format!("largest oracle nullity {max}");
    out
}

fn witness_correctness() -> Outcome {
    let mut out = Outcome::new();
    let mut checked = 0;
    for r in 1..=SWEEP_R {
        for lambda in enumerate_partitions(r, r as usize) {
            for h in enumerate_hooks(r) {
                if lambda.m() < h.b() as usize + 2 {
                    continue;
                }
                let matrix = RelationMatrix::assemble(&lambda, h).unwrap();
                let d = witness_coeffs(&lambda, h).unwrap();
                for p in SWEEP_PRIMES.map(prime) {
                    let sol = matrix.solve(p);
                    if sol.dim != 1 {
                        continue;
                    }
                    checked += 1;
                    let w: Vec<u64> = sol.columns.iter().map(|i| p.reduce(&d[i])).collect();
                    out.check(proportional(&sol.kernel[0], &w, p), || {
                        format!("{lambda} -> {h} at p={p}: kernel not proportional to witness")
                    });
                    let coeff = psi_canonical_coefficient(&lambda, h, p).unwrap();
                    out.check(coeff == 1, || format!("{lambda} -> {h} at p={p}: canonical coefficient {coeff}"));
                }
            }
        }
    }
    out.summary = format!("{checked} nonzero Hom spaces with m >= b+2");
    out
}

fn loubert() -> Outcome {
    let mut out = Outcome::new();
    for p in [3, 5, 7] {
        for r in 1..=9 {
            for d in equivalence_check(r, prime(p)).unwrap() {
                out.failures.push(format!(
                    "{} -> {} at p={p}: garnir {} criterion {} ({})",
                    d.lambda, d.hook, d.loubert_dim, d.theorem_dim, d.theorem_route
                ));
            }
        }
    }
    out.summary = format!("r <= 9, p in {{3,5,7}}, {} discrepancies", out.failures.len());
    out
}

fn gcd_checks(x: u64, p: Prime) -> Vec<String> {
    let bp = BigInt::from(p.get());
    let mut failures = Vec::new();
    for y in 1..=ARITH_Y {
        let direct = r_gcd(x, y);
        if p_divides_r(x, y, p) != direct.is_multiple_of(&bp) {
            failures.push(format!("R({x},{y}) at p={p}: shortcut disagrees with gcd {direct}"));
        }
        if x >= y {
            let plain = (1..=y).fold(BigInt::zero(), |g, c| g.gcd(&binom_exact(x, c as i64)));
            if direct != plain {
                failures.push(format!("gcd identity fails at x={x}, y={y}"));
            }
        }
    }
    failures
}

fn arithmetic() -> Outcome {
    let mut out = Outcome::new();
    let grid: Vec<(u64, Prime)> =
        ARITH_PRIMES.iter().flat_map(|&p| (1..=ARITH_X).map(move |x| (x, prime(p)))).collect();
    out.failures.extend(grid.par_iter().flat_map_iter(|&(x, p)| gcd_checks(x, p)).collect::<Vec<_>>());
    for p in ARITH_PRIMES.map(prime) {
        for y in 2..=ARITH_Y {
            for mp in 0..p.get() {
                let lhs = l_p(y * p.get() - 1 - mp, p).unwrap();
                let rhs = 1 + l_p(y - 1, p).unwrap();
                out.check(lhs == rhs, || format!("digit count identity at y={y}, m'={mp}, p={p}"));
            }
        }
    }
    // Pascal rows over Z against Lucas' theorem.
    let mut row = vec![BigInt::one()];
    for n in 0..=LUCAS_N {
        let bad: Vec<String> = row
            .par_iter()
            .enumerate()
            .flat_map_iter(|(k, c)| {
                ARITH_PRIMES.map(prime).into_iter().filter_map(move |p| {
                    (binom_mod_p(n, k as u64, p) != p.reduce(c)).then(|| format!("Lucas fails at C({n},{k}) mod {p}"))
                })
            })
            .collect();
        out.failures.extend(bad);
        for p in ARITH_PRIMES.map(prime) {
            out.check(binom_mod_p(n, n + 1, p) == 0, || format!("C({n},{}) mod {p} should vanish", n + 1));
        }
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigInt::one());
        row = next;
    }
    out.summary = format!(
        "{} R(x,y) checks, Lucas for n <= {LUCAS_N}, {} failures",
        grid.len() as u64 * ARITH_Y,
        out.failures.len()
    );
    out
}

fn ext_parity() -> Outcome {
    let mut out = Outcome::new();
    let mut count = 0;
    for r in 1..=EXT_R {
        for h in enumerate_hooks(r) {
            for d in 2..=h.b() {
                count += 1;
                let expected = if (r + d) % 2 == 1 { ExtGroup::Z2 } else { ExtGroup::Zero };
                let got = ext1_hooks(h, d).unwrap();
                out.check(got == expected, || format!("{h}, d={d}: {got} expected {expected}"));
                out.check(ext1_cross_check(h, d).unwrap(), || format!("{h}, d={d}: cross-check fails"));
            }
        }
    }
    out.summary = format!("{count} (h, d) pairs with r <= {EXT_R}");
    out
}

fn random_combo(rng: &mut ChaCha8Rng) -> TableauCombo {
    let r = rng.gen_range(1..=STRAIGHTEN_R);
    let b = rng.gen_range(0..r);
    let k = rng.gen_range(1..=6);
    let mut x = TableauCombo::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut arm = Arm::new();
        for _ in 0..r - b {
            *arm.entry(rng.gen_range(1..=k)).or_insert(0) += 1;
        }
        let leg: Vec<u32> = (0..b).map(|_| rng.gen_range(1..=k)).collect();
        x = x + normalize(&arm, &leg, BigInt::from(rng.gen_range(-4..=4)));
    }
    x
}

fn contents(x: &TableauCombo) -> Vec<Composition> {
    let mut v: Vec<Composition> = x.terms().map(|(t, _)| t.content().trimmed()).collect();
    v.sort();
    v.dedup();
    v
}

fn straightening() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(STRAIGHTEN_SEED);
    let left = Straightener::new(Strategy::Leftmost);
    for case in 0..STRAIGHTEN_CASES {
        let x = random_combo(&mut rng);
        let seed = rng.gen();
        let s = left.straighten(&x);
        out.check(s.is_standard(), || format!("case {case}: output not standard"));
        out.check(left.straighten(&s) == s, || format!("case {case}: not idempotent"));
        let before = contents(&x);
        out.check(contents(&s).iter().all(|c| before.contains(c)), || format!("case {case}: content changed"));
        let others = [
            Straightener::new(Strategy::Rightmost).straighten(&x),
            Straightener::new(Strategy::Seeded(seed)).straighten(&x),
        ];
        out.check(others.iter().all(|o| *o == s), || format!("case {case}: strategies disagree on {x}"));
    }
    out.summary = format!("{STRAIGHTEN_CASES} seeded cases at r <= {STRAIGHTEN_R}");
    out
}

fn main() -> ExitCode {
    let primes = SWEEP_PRIMES.map(prime);
    let mut rows = Vec::new();
    let mut ok = true;
    ok &= report(1, "non-Carter-Payne map at p=2", Some(EXAMPLE_BUDGET), non_carter_payne_map);
    ok &= report(2, "criterion agrees with oracle", Some(SWEEP_BUDGET), || {
        rows = sweep_up_to(SWEEP_R, &primes, DEFAULT_CAP).unwrap();
        sweep_agreement(&rows)
    });
    ok &= report(3, "Hom dimension at most one", None, || dim_bound(&rows));
    ok &= report(4, "witness spans the Hom space", None, witness_correctness);
    ok &= report(5, "Garnir-content classification agrees", Some(LOUBERT_BUDGET), loubert);
    ok &= report(6, "binomial and gcd arithmetic", None, arithmetic);
    ok &= report(7, "Ext^1 parity between hooks", None, ext_parity);
    ok &= report(8, "straightening properties", None, straightening);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
