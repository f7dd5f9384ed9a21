//! Classification through Garnir contents, valid for odd p, and its
//! comparison with the gcd criterion of [`crate::criterion`].

use serde::Serialize;

use crate::arith::{garnir_content_is_zero, Prime};
use crate::criterion::hom_dim_theorem;
use crate::error::{domain, Error, Result};
use crate::partitions::{enumerate_hooks, enumerate_partitions, Hook, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LoubertTag {
    I,
    II,
    III,
    None,
}

/// Which template matched, with its parameters `n'`, `a` and `m'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoubertCase {
    pub tag: LoubertTag,
    pub n_prime: usize,
    pub a: Vec<u64>,
    pub m_prime: u64,
}

impl LoubertCase {
    fn none() -> Self {
        LoubertCase { tag: LoubertTag::None, n_prime: 0, a: Vec::new(), m_prime: 0 }
    }

    /// Rebuilds the partition described by the template.
    pub fn reconstruct(&self, b: u32, p: Prime) -> Option<Partition> {
        let p = p.get();
        let n = self.n_prime;
        let b = b as usize;
        let mut parts: Vec<i64> = Vec::new();
        match self.tag {
            LoubertTag::None => return None,
            LoubertTag::I | LoubertTag::II => {
                parts.extend(self.a[..n - 1].iter().map(|&x| (x * p) as i64));
                parts.push((self.a[n - 1] * p) as i64 - self.m_prime as i64);
                let ones = if self.tag == LoubertTag::I { b + 1 - n } else { b + 2 - n };
                parts.extend(std::iter::repeat(1).take(ones));
            }
            LoubertTag::III => {
                parts.extend(self.a[..b].iter().map(|&x| (x * p) as i64));
                parts.extend(self.a[b..n - 1].iter().map(|&x| (x * p) as i64 - 1));
                parts.push((self.a[n - 1] * p) as i64 - 1 - self.m_prime as i64);
            }
        }
        if parts.iter().any(|&x| x < 1) {
            return None;
        }
        Partition::new(parts.into_iter().map(|x| x as u32).collect()).ok()
    }
}

/// Solves `λ_k = a_k p - shift_k` for positive integers `a_k`.
fn solve_a(lambda: &Partition, shifts: &[u64], p: u64) -> Option<Vec<u64>> {
    shifts
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let v = lambda.part(k + 1) as u64 + s;
            (v % p == 0 && v > 0).then_some(v / p)
        })
        .collect()
}

/// Decides `dim Hom` through the three Garnir-content templates. Needs odd p
/// and at least b+1 rows.
pub fn loubert_decide(lambda: &Partition, h: Hook, p: Prime) -> Result<(usize, LoubertCase)> {
    if p.get() == 2 {
        return Err(Error::Unsupported("the Garnir-content classification needs p > 2".into()));
    }
    if lambda.r() != h.r() {
        return Err(domain(format!("|{lambda}| = {} but |{h}| = {}", lambda.r(), h.r())));
    }
    let m = lambda.m();
    let b = h.b() as usize;
    if m < b + 1 {
        return Err(domain(format!("{lambda} has fewer than b+1 = {} rows", b + 1)));
    }
    let q = p.get();
    let trailing_ones = |from: usize| (from..=m).all(|i| lambda.part(i) == 1);

    // (i) and (ii): (a1 p, ..., a_{n'-1} p, a_{n'} p - m', 1^...)
    let row_templates = [(LoubertTag::I, b + 1, b + 1), (LoubertTag::II, b + 2, b)];
    for (tag, rows, max_n) in row_templates {
        if m != rows || (tag == LoubertTag::II && lambda.r() as u64 % q != 0) {
            continue;
        }
        for n in 1..=max_n {
            if !trailing_ones(n + 1) {
                continue;
            }
            for mp in 0..q {
                let mut shifts = vec![0; n];
                shifts[n - 1] = mp;
                if let Some(a) = solve_a(lambda, &shifts, q) {
                    if garnir_content_is_zero(&a, p) {
                        return Ok((1, LoubertCase { tag, n_prime: n, a, m_prime: mp }));
                    }
                }
            }
        }
    }

    // (iii): (a1 p, ..., ab p, a_{b+1} p - 1, ..., a_{n'-1} p - 1, a_{n'} p - 1 - m')
    if m > b + 1 {
        let n = m;
        for mp in 0..q {
            let mut shifts = vec![0; n];
            for s in shifts.iter_mut().take(n - 1).skip(b) {
                *s = 1;
            }
            shifts[n - 1] = 1 + mp;
            if let Some(a) = solve_a(lambda, &shifts, q) {
                if garnir_content_is_zero(&a, p) {
                    return Ok((1, LoubertCase { tag: LoubertTag::III, n_prime: n, a, m_prime: mp }));
                }
            }
        }
    }
    Ok((0, LoubertCase::none()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub lambda: Partition,
    pub hook: Hook,
    pub loubert_dim: usize,
    pub loubert_case: LoubertCase,
    pub theorem_dim: usize,
    pub theorem_route: String,
}

/// Every pair `λ, h ⊢ r` with `m >= b+1` on which the two classifications disagree.
pub fn equivalence_check(r: u32, p: Prime) -> Result<Vec<Discrepancy>> {
    if p.get() == 2 {
        return Err(Error::Unsupported("the Garnir-content classification needs p > 2".into()));
    }
    let mut out = Vec::new();
    for lambda in enumerate_partitions(r, r as usize) {
        for h in enumerate_hooks(r) {
            if lambda.m() < h.b() as usize + 1 {
                continue;
            }
            let (ld, case) = loubert_decide(&lambda, h, p)?;
            let rep = hom_dim_theorem(&lambda, h, p)?;
            if ld != rep.dim {
                out.push(Discrepancy {
                    lambda: lambda.clone(),
                    hook: h,
                    loubert_dim: ld,
                    loubert_case: case,
                    theorem_dim: rep.dim,
                    theorem_route: rep.tag(),
                });
            }
        }
    }
    Ok(out)
}
