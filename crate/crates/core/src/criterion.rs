//! Closed-form decision of `dim Hom(Δ(λ), Δ(h))` for a hook `h = (a, 1^b)`.
//!
//! Reductions first: if λ has fewer than b+1 rows it is not dominated by h and
//! the space is zero; with exactly b+1 rows the common first column is removed
//! and the question becomes one about a single row. Otherwise (m >= b+2) the
//! answer is 1 exactly when p divides every integer in one of two lists of
//! gcds `R(x, y)`, chosen by whether `q >= b+1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::arith::{p_divides_r, r_gcd, Prime};
use crate::error::{domain, Error, Result};
use crate::homspace::{witness_coeffs, LegIndex};
use crate::partitions::{Hook, Partition};
use num_traits::ToPrimitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    /// Fewer than b+1 rows: λ is not below h in dominance order.
    NotDominated,
    /// λ equals the target (possibly after column removal).
    Equal,
    /// `m >= b+2` and `q >= b+1`.
    CaseII,
    /// `m >= b+2` and `q <= b`.
    CaseIII,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::NotDominated => "not-dominated",
            Case::Equal => "equal",
            Case::CaseII => "ii",
            Case::CaseIII => "iii",
        };
        f.write_str(s)
    }
}

/// One integer the criterion requires p to divide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub description: String,
    pub value: u64,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomReport {
    /// Source partition of the pair actually decided (after any transpose).
    pub lambda: Partition,
    pub hook: Hook,
    pub p: Prime,
    pub dim: usize,
    pub case: Case,
    pub column_removed: bool,
    pub transposed: bool,
    pub conditions: Vec<Condition>,
    /// `d_I mod p`, present when `dim = 1` and `m >= b+2`.
    pub witness: Option<BTreeMap<LegIndex, u64>>,
}

impl HomReport {
    /// Short route label such as `ii`, `column-removal/iii`, `transpose/not-dominated`.
    pub fn tag(&self) -> String {
        let mut s = String::new();
        if self.transposed {
            s.push_str("transpose/");
        }
        if self.column_removed {
            s.push_str("column-removal/");
        }
        s.push_str(&self.case.to_string());
        s
    }
}

fn r_condition(label: String, x: u32, y: u32, p: Prime) -> Condition {
    let value = r_gcd(x as u64, y as u64).to_u64().expect("R(x,y) divides x");
    Condition {
        description: format!("{label} = R({x},{y})"),
        value,
        divisible: p_divides_r(x as u64, y as u64, p),
    }
}

fn plain_condition(description: String, value: u64, p: Prime) -> Condition {
    Condition { description, value, divisible: value % p.get() == 0 }
}

/// The list of integers p must divide, for `m >= b+2`.
pub fn theorem_conditions(lambda: &Partition, h: Hook, p: Prime) -> (Case, Vec<Condition>) {
    let m = lambda.m();
    let b = h.b() as usize;
    let lam = |i: usize| lambda.part(i);
    let (q, lq) = lambda.q_of();
    let mut conds = Vec::new();
    if q > b {
        for i in 1..b {
            conds.push(r_condition(format!("R(λ{i},λ{}-1)", i + 1), lam(i), lam(i + 1) - 1, p));
        }
        if b >= 1 {
            conds.push(r_condition(format!("R(λ{b},λ{})", b + 1), lam(b), lam(b + 1), p));
        }
        for i in b + 1..m {
            conds.push(r_condition(format!("R(λ{i}+1,λ{})", i + 1), lam(i) + 1, lam(i + 1), p));
        }
        (Case::CaseII, conds)
    } else {
        for i in 1..q {
            conds.push(r_condition(format!("R(λ{i},λ{}-1)", i + 1), lam(i), lam(i + 1) - 1, p));
        }
        let v = lq as u64 + b as u64 + 2 - q as u64;
        conds.push(plain_condition(format!("λq+b+2-q (q={q})"), v, p));
        if m - b >= 3 {
            conds.push(plain_condition("2 (m-b >= 3)".into(), 2, p));
        }
        (Case::CaseIII, conds)
    }
}

fn check_degrees(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.r() != mu.r() {
        return Err(domain(format!("|{lambda}| = {} but |{mu}| = {}", lambda.r(), mu.r())));
    }
    Ok(())
}

/// `dim Hom(Δ(λ), Δ(h))` from the closed-form criterion.
pub fn hom_dim_theorem(lambda: &Partition, h: Hook, p: Prime) -> Result<HomReport> {
    check_degrees(lambda, &h.to_partition())?;
    let m = lambda.m();
    let b = h.b() as usize;
    let report = |dim, case, conditions, witness| HomReport {
        lambda: lambda.clone(),
        hook: h,
        p,
        dim,
        case,
        column_removed: false,
        transposed: false,
        conditions,
        witness,
    };

    if m < b + 1 {
        return Ok(report(0, Case::NotDominated, Vec::new(), None));
    }
    if *lambda == h.to_partition() {
        return Ok(report(1, Case::Equal, Vec::new(), None));
    }
    if m == b + 1 {
        let reduced = lambda.remove_first_column();
        let target = Hook::new(h.a() - 1, 0)?;
        let inner = hom_dim_theorem(&reduced, target, p)?;
        let mut out = report(inner.dim, inner.case, inner.conditions, None);
        out.column_removed = true;
        return Ok(out);
    }

    let (case, conditions) = theorem_conditions(lambda, h, p);
    let dim = usize::from(conditions.iter().all(|c| c.divisible));
    let witness = if dim == 1 {
        Some(witness_coeffs(lambda, h)?.into_iter().map(|(i, d)| (i, p.reduce(&d))).collect())
    } else {
        None
    };
    Ok(report(dim, case, conditions, witness))
}

/// `dim Hom(Δ(h), Δ(μ))` for a hook source, via `Hom(Δ(μ'), Δ(h'))`.
pub fn hom_hook_source(h: Hook, mu: &Partition, p: Prime) -> Result<HomReport> {
    check_degrees(&h.to_partition(), mu)?;
    let mut rep = hom_dim_theorem(&mu.transpose(), h.transpose(), p)?;
    rep.transposed = true;
    Ok(rep)
}

/// Dispatches to whichever route applies: hook target first, then hook source.
pub fn hom_dim(lambda: &Partition, mu: &Partition, p: Prime) -> Result<HomReport> {
    if let Some(h) = mu.as_hook() {
        hom_dim_theorem(lambda, h, p)
    } else if let Some(h) = lambda.as_hook() {
        hom_hook_source(h, mu, p)
    } else {
        Err(Error::Unsupported(format!("neither {lambda} nor {mu} is a hook")))
    }
}

/// Strips a common first row, if the two partitions share one.
pub fn row_removal(lambda: &Partition, mu: &Partition) -> Option<(Partition, Partition)> {
    (lambda.m() > 0 && lambda.part(1) == mu.part(1)).then(|| (lambda.remove_first_row(), mu.remove_first_row()))
}

/// Partitions `λ + c(ε_i - ε_j)` with `i < j` and `c >= 1`.
pub fn carter_payne_adjacent(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = BTreeSet::new();
    for j in 1..parts.len() {
        for i in 0..j {
            for c in 1..=parts[j] {
                let mut mu = parts.to_vec();
                mu[i] += c;
                mu[j] -= c;
                if let Ok(p) = Partition::new(mu) {
                    out.insert(p);
                }
            }
        }
    }
    out.into_iter().collect()
}
