//! Maps `D(λ) → Δ(h)` and the brute-force computation of `Hom(Δ(λ), Δ(h))`.
//!
//! `Hom(D(λ), Δ(h))` has the basis `φ_J`, `J` a b-subset of `{2..m}`. A map
//! `Σ c_J φ_J` factors through `Δ(λ)` exactly when it kills the image of the
//! box map, which is generated by one word per pair `(i, t)`. The oracle
//! straightens every `φ_J(word)` and computes the kernel of the resulting
//! matrix over GF(p). [`derived_relation_system`] instead writes down the
//! closed-form relations on the `c_J` directly; the two must agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{binom_exact, binom_mod_p, Prime};
use crate::error::{domain, Result};
use crate::linalg::ModMatrix;
use crate::partitions::{Composition, Hook, Partition};
use crate::tableaux::{combinations, normalize, standard_basis_of_content, Arm, HookTableau, Letter, Straightener, TableauCombo};

/// A strictly increasing b-tuple `2 <= j1 < ... < jb <= m`; empty when b = 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LegIndex(Vec<u32>);

impl LegIndex {
    pub fn new(js: Vec<u32>) -> Self {
        debug_assert!(js.windows(2).all(|w| w[0] < w[1]));
        LegIndex(js)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, j: u32) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    /// `(2, 3, ..., b+1)`, the least element of `B(λ, h)`.
    pub fn initial(b: u32) -> Self {
        LegIndex((2..b + 2).collect())
    }
}

impl fmt::Display for LegIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", items.join(","))
    }
}

impl Serialize for LegIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A pure tensor `w_1 ⊗ ... ⊗ w_m` of divided-power monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DividedWord {
    factors: Vec<Arm>,
}

impl DividedWord {
    pub fn new(factors: Vec<Arm>) -> Self {
        DividedWord { factors }
    }

    /// `1^(λ1) ⊗ 2^(λ2) ⊗ ... ⊗ m^(λm)`.
    pub fn canonical(lambda: &Partition) -> Self {
        DividedWord {
            factors: lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &x)| Arm::from([(i as Letter + 1, x)]))
                .collect(),
        }
    }

    pub fn factors(&self) -> &[Arm] {
        &self.factors
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.values().sum()).collect()
    }

    pub fn content(&self) -> Composition {
        let len = self.factors.iter().flat_map(|f| f.keys()).copied().max().unwrap_or(0) as usize;
        let mut e = vec![0u32; len];
        for f in &self.factors {
            for (&c, &x) in f {
                e[c as usize - 1] += x;
            }
        }
        Composition::new(e)
    }
}

impl fmt::Display for DividedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .factors
            .iter()
            .map(|arm| {
                let parts: Vec<String> = arm
                    .iter()
                    .map(|(c, e)| if *e == 1 { c.to_string() } else { format!("{c}^({e})") })
                    .collect();
                parts.join("·")
            })
            .collect();
        write!(f, "{}", items.join(" ⊗ "))
    }
}

fn check_degrees(lambda: &Partition, h: Hook) -> Result<()> {
    if lambda.r() != h.r() {
        return Err(domain(format!("|{lambda}| = {} but |{h}| = {}", lambda.r(), h.r())));
    }
    Ok(())
}

/// `B(λ, h)`: the b-subsets of `{2..m}` in lexicographic order.
pub fn enumerate_b(lambda: &Partition, h: Hook) -> Result<Vec<LegIndex>> {
    check_degrees(lambda, h)?;
    let pool: Vec<u32> = (2..=lambda.m() as u32).collect();
    Ok(combinations(&pool, h.b() as usize).into_iter().map(LegIndex).collect())
}

/// `φ_J(w)`: split one letter out of factor `j_s` into leg slot s (summing over
/// the choices), multiply the remaining factors into the arm, then straighten.
pub fn phi_apply(
    j: &LegIndex,
    w: &DividedWord,
    lambda: &Partition,
    h: Hook,
    straightener: &Straightener,
) -> Result<TableauCombo> {
    check_degrees(lambda, h)?;
    if w.degrees() != lambda.parts() {
        return Err(domain(format!("word {w} does not have factor degrees {lambda}")));
    }
    if j.0.len() != h.b() as usize || j.0.iter().any(|&x| x < 2 || x as usize > lambda.m()) {
        return Err(domain(format!("{j} is not in B({lambda}, {h})")));
    }

    let mut raw = TableauCombo::zero();
    let mut factors = w.factors.clone();
    let mut leg = Vec::with_capacity(j.0.len());
    split_letters(&j.0, &mut factors, &mut leg, &mut |factors, leg| {
        let (arm, coeff) = multiply_all(factors);
        raw = std::mem::take(&mut raw) + normalize(&arm, leg, coeff);
    });
    Ok(straightener.straighten(&raw))
}

fn split_letters(
    slots: &[u32],
    factors: &mut [Arm],
    leg: &mut Vec<Letter>,
    emit: &mut dyn FnMut(&[Arm], &[Letter]),
) {
    let Some((&first, rest)) = slots.split_first() else {
        emit(factors, leg);
        return;
    };
    let idx = first as usize - 1;
    let letters: Vec<Letter> = factors[idx].keys().copied().collect();
    for c in letters {
        dec(&mut factors[idx], c);
        leg.push(c);
        split_letters(rest, factors, leg, emit);
        leg.pop();
        *factors[idx].entry(c).or_insert(0) += 1;
    }
}

fn dec(arm: &mut Arm, c: Letter) {
    let e = arm.get_mut(&c).expect("letter present");
    *e -= 1;
    if *e == 0 {
        arm.remove(&c);
    }
}

/// Multiplies divided-power monomials: `c^(x) c^(y) = C(x+y, x) c^(x+y)`.
fn multiply_all(factors: &[Arm]) -> (Arm, BigInt) {
    let mut arm = Arm::new();
    let mut coeff = BigInt::one();
    for f in factors {
        for (&c, &e) in f {
            let acc = arm.entry(c).or_insert(0);
            coeff *= binom_exact((*acc + e) as u64, e as i64);
            *acc += e;
        }
    }
    (arm, coeff)
}

/// The image under the box map of the canonical generator of the summand
/// indexed by `(row, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxGenerator {
    /// Upper row `i` of the pair `(i, i+1)`, 1-indexed.
    pub row: usize,
    pub t: u32,
    pub word: DividedWord,
}

/// One generator for every `i = 1..m-1` and `t = 1..λ_{i+1}`: factor `i+1`
/// becomes `i^(t) (i+1)^(λ_{i+1} - t)`, every other factor `k` is `k^(λ_k)`.
pub fn box_generators(lambda: &Partition) -> Vec<BoxGenerator> {
    let canonical = DividedWord::canonical(lambda);
    let mut out = Vec::new();
    for i in 1..lambda.m() {
        let below = lambda.part(i + 1);
        for t in 1..=below {
            let mut word = canonical.clone();
            let mut f = Arm::from([(i as Letter, t)]);
            if below > t {
                f.insert(i as Letter + 1, below - t);
            }
            word.factors[i] = f;
            out.push(BoxGenerator { row: i, t, word });
        }
    }
    out
}

/// Row label of the relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationRow {
    pub generator: usize,
    pub tableau: HookTableau,
}

/// The system `φ(Im □) = 0` with exact integer entries: row `(g, T)`, column
/// `J` holds the coefficient of standard tableau `T` in `φ_J(g)`.
#[derive(Debug, Clone)]
pub struct RelationMatrix {
    pub columns: Vec<LegIndex>,
    pub generators: Vec<BoxGenerator>,
    pub rows: Vec<RelationRow>,
    pub entries: Vec<Vec<BigInt>>,
}

impl RelationMatrix {
    pub fn assemble(lambda: &Partition, h: Hook) -> Result<Self> {
        Self::assemble_with(lambda, h, &Straightener::default())
    }

    pub fn assemble_with(lambda: &Partition, h: Hook, straightener: &Straightener) -> Result<Self> {
        let columns = enumerate_b(lambda, h)?;
        let generators = box_generators(lambda);
        let blocks: Vec<Result<Vec<(RelationRow, Vec<BigInt>)>>> = generators
            .par_iter()
            .enumerate()
            .map(|(gi, g)| {
                let basis = standard_basis_of_content(h, &g.word.content());
                let images = columns
                    .iter()
                    .map(|j| phi_apply(j, &g.word, lambda, h, straightener))
                    .collect::<Result<Vec<_>>>()?;
                for img in &images {
                    debug_assert!(img.terms().all(|(t, _)| basis.contains(t)));
                }
                Ok(basis
                    .into_iter()
                    .map(|t| {
                        let row = images.iter().map(|img| img.coefficient(&t)).collect();
                        (RelationRow { generator: gi, tableau: t }, row)
                    })
                    .collect())
            })
            .collect();
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for block in blocks {
            for (label, row) in block? {
                rows.push(label);
                entries.push(row);
            }
        }
        Ok(RelationMatrix { columns, generators, rows, entries })
    }

    pub fn reduce(&self, p: Prime) -> ModMatrix {
        ModMatrix::from_rows(
            p,
            self.columns.len(),
            self.entries.iter().map(|row| row.iter().map(|x| p.reduce(x)).collect()),
        )
    }

    pub fn solve(&self, p: Prime) -> HomSolution {
        let kernel = self.reduce(p).nullspace();
        HomSolution { dim: kernel.len(), kernel, columns: self.columns.clone() }
    }
}

/// Dimension of a Hom space with a kernel basis over the `φ_J` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSolution {
    pub dim: usize,
    pub kernel: Vec<Vec<u64>>,
    pub columns: Vec<LegIndex>,
}

/// `dim Hom(Δ(λ), Δ(h))` over GF(p) by straightening.
pub fn hom_dim_oracle(lambda: &Partition, h: Hook, p: Prime) -> Result<HomSolution> {
    Ok(RelationMatrix::assemble(lambda, h)?.solve(p))
}

/// The same Hom space from the closed-form relations on the coefficients `c_I`.
///
/// The relation families are indexed by leg positions, so for `b = 0` this
/// defers to [`hom_dim_oracle`].
pub fn derived_relation_system(lambda: &Partition, h: Hook, p: Prime) -> Result<HomSolution> {
    if h.b() == 0 {
        return hom_dim_oracle(lambda, h, p);
    }
    let columns = enumerate_b(lambda, h)?;
    let mut m = ModMatrix::new(p, columns.len());
    let col = |i: &LegIndex| columns.binary_search(i).expect("index in B");
    let bin = |n: u32, k: u32| binom_mod_p(n as u64, k as u64, p);
    let lam = |i: usize| lambda.part(i);
    let ncols = columns.len();
    let single = |m: &mut ModMatrix, i: &LegIndex, c: u64| {
        let mut row = vec![0; ncols];
        row[col(i)] = c;
        m.push_row(row);
    };

    for it in &columns {
        if !it.contains(2) {
            // R_1(t,1)
            for t in 1..=lam(2) {
                let mut row = vec![0u64; ncols];
                row[col(it)] = bin(lam(1) + t, t);
                let tail = bin(lam(1) + t - 1, t - 1);
                for u in 1..=it.0.len() {
                    let mut js = vec![2];
                    js.extend(it.0.iter().enumerate().filter(|&(k, _)| k != u - 1).map(|(_, &x)| x));
                    let c = if u % 2 == 0 { tail } else { p.neg(tail) };
                    let k = col(&LegIndex(js));
                    row[k] = p.add(row[k], c);
                }
                m.push_row(row);
            }
        } else {
            // R_1(t,2)
            for t in 1..lam(2) {
                single(&mut m, it, bin(lam(1) + t - 1, t));
            }
        }

        for i in 2..lambda.m() {
            let (iu, iv) = (i as u32, i as u32 + 1);
            let (has_i, has_next) = (it.contains(iu), it.contains(iv));
            let below = lam(i + 1);
            match (has_i, has_next) {
                (true, false) => {
                    // R_i(t,1)
                    let moved: Vec<u32> = it.0.iter().map(|&x| if x == iu { iv } else { x }).collect();
                    let moved = LegIndex(moved);
                    for t in 1..=below {
                        let mut row = vec![0u64; ncols];
                        row[col(it)] = bin(lam(i) + t - 1, t);
                        let k = col(&moved);
                        row[k] = p.add(row[k], bin(lam(i) + t - 1, t - 1));
                        m.push_row(row);
                    }
                }
                (false, true) => {
                    // R_i(t,2)
                    for t in 1..below {
                        single(&mut m, it, bin(lam(i) + t, t));
                    }
                }
                (false, false) => {
                    // R_i(t,3)
                    for t in 1..=below {
                        single(&mut m, it, bin(lam(i) + t, t));
                    }
                }
                (true, true) => {
                    // R_i(t,4)
                    for t in 1..below {
                        single(&mut m, it, bin(lam(i) + t - 1, t));
                    }
                }
            }
        }
    }
    let kernel = m.nullspace();
    Ok(HomSolution { dim: kernel.len(), kernel, columns })
}

/// `d_I = Π_{u=1}^{b} Π_{v=u}^{i_u - 2} (-λ_{v+1})`, with empty products 1.
pub fn witness_coeffs(lambda: &Partition, h: Hook) -> Result<BTreeMap<LegIndex, BigInt>> {
    if lambda.m() < h.b() as usize + 2 {
        return Err(domain(format!("witness needs m >= b+2, got m={} b={}", lambda.m(), h.b())));
    }
    Ok(enumerate_b(lambda, h)?
        .into_iter()
        .map(|i| {
            let mut d = BigInt::one();
            for (u, &iu) in (1u32..).zip(&i.0) {
                for v in u..=iu.saturating_sub(2) {
                    d *= -BigInt::from(lambda.part(v as usize + 1));
                }
            }
            (i, d)
        })
        .collect())
}

/// The standard tableau `φ_{(2..b+1)}` sends the canonical word to.
pub fn canonical_tableau(lambda: &Partition, h: Hook) -> HookTableau {
    let leg: Vec<Letter> = (2..h.b() + 2).collect();
    let arm: Arm = (1..=lambda.m() as Letter)
        .filter_map(|c| {
            let e = lambda.part(c as usize) - u32::from(leg.contains(&c));
            (e > 0).then_some((c, e))
        })
        .collect();
    HookTableau::new(arm, leg).expect("canonical tableau")
}

/// `ψ = Σ d_I φ_I` on the canonical word, with exact coefficients.
pub fn psi_apply_canonical(lambda: &Partition, h: Hook) -> Result<TableauCombo> {
    let d = witness_coeffs(lambda, h)?;
    let w = DividedWord::canonical(lambda);
    let st = Straightener::default();
    let mut out = TableauCombo::zero();
    for (i, di) in &d {
        if di.is_zero() {
            continue;
        }
        out.add_scaled(&phi_apply(i, &w, lambda, h, &st)?, di);
    }
    Ok(out)
}

/// The coefficient of [`canonical_tableau`] in `ψ(canonical word)`, mod p.
pub fn psi_canonical_coefficient(lambda: &Partition, h: Hook, p: Prime) -> Result<u64> {
    let image = psi_apply_canonical(lambda, h)?;
    Ok(p.reduce(&image.coefficient(&canonical_tableau(lambda, h))))
}
