//! Hook tableaux `i1^(a1) ... it^(at) / j1 ... jb` spanning the Weyl module of
//! a hook, and the straightening law that rewrites any of them as an integer
//! combination of standard tableaux.
//!
//! A tableau is symmetric in its arm (a divided-power monomial) and
//! skew-symmetric in its leg. It is standard when its smallest arm letter is
//! strictly below every leg letter.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::partitions::{Composition, Hook};

pub type Letter = u32;

/// Divided-power monomial: letter to exponent, exponents all positive.
pub type Arm = BTreeMap<Letter, u32>;

/// Upper bound on law applications for one top-level straightening call.
pub const STEP_CAP: u64 = 1_000_000;

/// A canonical hook tableau: arm sorted by letter, leg strictly increasing.
///
/// Field order makes the derived `Ord` compare legs lexicographically first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookTableau {
    leg: Vec<Letter>,
    arm: Arm,
}

impl HookTableau {
    /// Builds a canonical tableau; `None` when the leg is not strictly
    /// increasing or the arm has a zero exponent.
    pub fn new(arm: Arm, leg: Vec<Letter>) -> Option<Self> {
        if arm.values().any(|&e| e == 0) || leg.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(HookTableau { leg, arm })
    }

    pub fn arm(&self) -> &Arm {
        &self.arm
    }

    pub fn leg(&self) -> &[Letter] {
        &self.leg
    }

    /// `(a, b)`: arm degree and leg length.
    pub fn shape(&self) -> (u32, u32) {
        (self.arm.values().sum(), self.leg.len() as u32)
    }

    pub fn min_arm_letter(&self) -> Option<Letter> {
        self.arm.keys().next().copied()
    }

    pub fn is_standard(&self) -> bool {
        match (self.min_arm_letter(), self.leg.first()) {
            (_, None) => true,
            (Some(i1), Some(&j1)) => i1 < j1,
            (None, Some(_)) => false,
        }
    }

    pub fn content(&self) -> Composition {
        let len = self
            .arm
            .keys()
            .chain(self.leg.iter())
            .copied()
            .max()
            .unwrap_or(0) as usize;
        let mut entries = vec![0u32; len];
        for (&c, &e) in &self.arm {
            entries[c as usize - 1] += e;
        }
        for &c in &self.leg {
            entries[c as usize - 1] += 1;
        }
        Composition::new(entries)
    }
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arm: Vec<String> = self
            .arm
            .iter()
            .map(|(c, e)| if *e == 1 { c.to_string() } else { format!("{c}^({e})") })
            .collect();
        let leg: Vec<String> = self.leg.iter().map(Letter::to_string).collect();
        write!(f, "{}/{}", arm.join(" "), leg.join(" "))
    }
}

/// A tableau as typed: arm and leg in any order, leg possibly repeating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTableau {
    pub arm: Arm,
    pub leg: Vec<Letter>,
}

impl RawTableau {
    pub fn shape(&self) -> (u32, u32) {
        (self.arm.values().sum(), self.leg.len() as u32)
    }

    pub fn normalize(&self, coeff: BigInt) -> TableauCombo {
        normalize(&self.arm, &self.leg, coeff)
    }
}

fn parse_letter(tok: &str, whole: &str) -> Result<Letter> {
    match tok.parse::<Letter>() {
        Ok(c) if c >= 1 => Ok(c),
        _ => Err(Error::Parse(format!("bad letter {tok:?} in tableau {whole:?}"))),
    }
}

impl FromStr for RawTableau {
    type Err = Error;

    /// Accepts `1^(2) 3/2 4`, `1^(2) 3 / 2 4` and `1^2 3/2 4`; the slash may be
    /// omitted when the leg is empty.
    fn from_str(s: &str) -> Result<Self> {
        let (arm_txt, leg_txt) = s.split_once('/').unwrap_or((s, ""));
        if leg_txt.contains('/') {
            return Err(Error::Parse(format!("more than one '/' in {s:?}")));
        }
        let mut arm = Arm::new();
        for tok in arm_txt.split_whitespace() {
            let (letter, exp) = match tok.split_once('^') {
                Some((l, e)) => {
                    let e = e.trim_start_matches('(').trim_end_matches(')');
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                    (l, e)
                }
                None => (tok, 1),
            };
            let c = parse_letter(letter, s)?;
            if exp == 0 {
                return Err(Error::Parse(format!("zero exponent in {tok:?}")));
            }
            if arm.insert(c, exp).is_some() {
                return Err(Error::Parse(format!(
                    "letter {c} repeated in the arm of {s:?}; write it once with an exponent"
                )));
            }
        }
        if arm.is_empty() {
            return Err(Error::Parse(format!("empty arm in {s:?}")));
        }
        let leg = leg_txt
            .split_whitespace()
            .map(|t| parse_letter(t, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(RawTableau { arm, leg })
    }
}

impl FromStr for HookTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw: RawTableau = s.parse()?;
        HookTableau::new(raw.arm, raw.leg)
            .ok_or_else(|| Error::Parse(format!("{s:?} is not in canonical form")))
    }
}

/// A finite integer combination of hook tableaux; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableauCombo {
    terms: BTreeMap<HookTableau, BigInt>,
}

impl TableauCombo {
    pub fn zero() -> Self {
        TableauCombo::default()
    }

    pub fn single(t: HookTableau, coeff: BigInt) -> Self {
        let mut c = TableauCombo::zero();
        c.add_term(t, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HookTableau, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &HookTableau) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: HookTableau, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(
            self.terms.keys().next().map_or(true, |u| u.shape() == t.shape()),
            "mixed shapes in one combination"
        );
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TableauCombo, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * scale);
        }
    }

    pub fn scale(&self, s: &BigInt) -> TableauCombo {
        let mut out = TableauCombo::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(HookTableau::is_standard)
    }

    /// Coefficients reduced into `0..p`, dropping the ones that vanish.
    pub fn reduce_mod(&self, p: Prime) -> BTreeMap<HookTableau, u64> {
        self.terms
            .iter()
            .map(|(t, c)| (t.clone(), p.reduce(c)))
            .filter(|(_, c)| *c != 0)
            .collect()
    }
}

impl Add for TableauCombo {
    type Output = TableauCombo;

    fn add(mut self, rhs: TableauCombo) -> TableauCombo {
        for (t, c) in rhs.terms {
            self.add_term(t, c);
        }
        self
    }
}

impl Neg for TableauCombo {
    type Output = TableauCombo;

    fn neg(self) -> TableauCombo {
        TableauCombo { terms: self.terms.into_iter().map(|(t, c)| (t, -c)).collect() }
    }
}

impl Mul<&BigInt> for &TableauCombo {
    type Output = TableauCombo;

    fn mul(self, rhs: &BigInt) -> TableauCombo {
        self.scale(rhs)
    }
}

impl fmt::Display for TableauCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self.terms.iter().map(|(t, c)| format!("{c} * {t}")).collect();
        write!(f, "{}", items.join(" + "))
    }
}

/// Sorts the leg (tracking the sign of the permutation) and returns the
/// resulting single-term combination, or zero when a leg letter repeats.
pub fn normalize(arm: &Arm, leg_raw: &[Letter], coeff: BigInt) -> TableauCombo {
    let mut leg = leg_raw.to_vec();
    let mut odd = false;
    // insertion sort, counting transpositions
    for i in 1..leg.len() {
        let mut j = i;
        while j > 0 && leg[j - 1] > leg[j] {
            leg.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if leg.windows(2).any(|w| w[0] == w[1]) {
        return TableauCombo::zero();
    }
    let arm: Arm = arm.iter().filter(|(_, &e)| e > 0).map(|(&c, &e)| (c, e)).collect();
    let t = HookTableau { leg, arm };
    TableauCombo::single(t, if odd { -coeff } else { coeff })
}

pub fn is_standard(t: &HookTableau) -> bool {
    t.is_standard()
}

pub fn content_of(t: &HookTableau) -> Composition {
    t.content()
}

/// How a straightener picks which offending leg letter to rewrite next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// The smallest offending leg letter (the leg head).
    Leftmost,
    /// The largest leg letter that still does not exceed the arm minimum.
    Rightmost,
    /// A pseudo-random offending letter, reproducible from the seed.
    Seeded(u64),
}

/// Applies the hook straightening law, memoizing per canonical tableau.
///
/// The memo is a read-through cache: entries are deterministic functions of
/// their key, so concurrent writers may race without changing results.
#[derive(Debug)]
pub struct Straightener {
    strategy: Strategy,
    memo: RwLock<HashMap<HookTableau, TableauCombo>>,
}

impl Default for Straightener {
    fn default() -> Self {
        Straightener::new(Strategy::Leftmost)
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl Straightener {
    pub fn new(strategy: Strategy) -> Self {
        Straightener { strategy, memo: RwLock::new(HashMap::new()) }
    }

    /// Straightens a whole combination.
    pub fn straighten(&self, x: &TableauCombo) -> TableauCombo {
        let mut steps = 0u64;
        let mut out = TableauCombo::zero();
        for (t, c) in x.terms() {
            let s = self.expand(t, &mut steps);
            out.add_scaled(&s, c);
        }
        out
    }

    /// Straightens a single canonical tableau.
    pub fn straighten_tableau(&self, t: &HookTableau) -> TableauCombo {
        let mut steps = 0u64;
        self.expand(t, &mut steps)
    }

    fn pick(&self, offending: &[usize], t: &HookTableau, steps: u64) -> usize {
        match self.strategy {
            Strategy::Leftmost => offending[0],
            Strategy::Rightmost => *offending.last().unwrap(),
            Strategy::Seeded(seed) => {
                let mut h = seed ^ steps.rotate_left(17);
                for &c in &t.leg {
                    h = splitmix(h ^ c as u64);
                }
                offending[(splitmix(h) % offending.len() as u64) as usize]
            }
        }
    }

    fn expand(&self, t: &HookTableau, steps: &mut u64) -> TableauCombo {
        if t.is_standard() {
            return TableauCombo::single(t.clone(), BigInt::one());
        }
        if let Some(hit) = self.memo.read().unwrap().get(t) {
            return hit.clone();
        }
        *steps += 1;
        if *steps > STEP_CAP {
            panic!("straightening exceeded {STEP_CAP} rewrite steps at {t}");
        }

        let i1 = t.min_arm_letter().expect("hook tableau with empty arm");
        let offending: Vec<usize> = (0..t.leg.len()).filter(|&k| t.leg[k] <= i1).collect();
        let k = self.pick(&offending, t, *steps);
        let j = t.leg[k];
        // Moving leg[k] to the front costs k transpositions.
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let coeff = -sign;
        let rest: Vec<Letter> = t.leg.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &c)| c).collect();

        let mut out = TableauCombo::zero();
        for &is in t.arm.keys() {
            if j == i1 && is == i1 {
                continue;
            }
            let mut arm = t.arm.clone();
            *arm.entry(j).or_insert(0) += 1;
            let e = arm.get_mut(&is).unwrap();
            *e -= 1;
            if *e == 0 {
                arm.remove(&is);
            }
            let mut leg = Vec::with_capacity(t.leg.len());
            leg.push(is);
            leg.extend_from_slice(&rest);
            for (u, c) in normalize(&arm, &leg, coeff.clone()).terms {
                let s = self.expand(&u, steps);
                out.add_scaled(&s, &c);
            }
        }

        self.memo.write().unwrap().insert(t.clone(), out.clone());
        out
    }
}

/// Straightens with the leftmost strategy and a fresh memo.
pub fn straighten(x: &TableauCombo) -> TableauCombo {
    Straightener::default().straighten(x)
}

/// All standard tableaux of shape `h` and content `beta`, ordered by leg.
pub fn standard_basis_of_content(h: Hook, beta: &Composition) -> Vec<HookTableau> {
    let letters: Vec<Letter> = (1..=beta.entries().len() as Letter).filter(|&c| beta.get(c) > 0).collect();
    let b = h.b() as usize;
    if beta.total() != h.r() || letters.len() < b {
        return Vec::new();
    }
    let mut out = Vec::new();
    for leg in combinations(&letters, b) {
        let mut arm = Arm::new();
        for &c in &letters {
            let e = beta.get(c) - u32::from(leg.contains(&c));
            if e > 0 {
                arm.insert(c, e);
            }
        }
        let t = HookTableau { leg, arm };
        if !t.arm.is_empty() && t.is_standard() {
            out.push(t);
        }
    }
    out
}

/// All k-subsets of `items` (assumed sorted), in lexicographic order.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}
