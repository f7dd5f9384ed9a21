//! Partitions, hooks and compositions.
//!
//! Text syntax: comma-separated parts such as `4,2,1`, where any item may carry
//! a repetition exponent (`6,1^3` is `6,1,1,1`). Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped at construction, so `m()` is the number of nonzero rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x == 0) {
            return Err(domain(format!("zero part inside {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(r)`.
    pub fn row(r: u32) -> Self {
        Partition { parts: if r == 0 { vec![] } else { vec![r] } }
    }

    /// The single column `(1^r)`.
    pub fn column(r: u32) -> Self {
        Partition { parts: vec![1; r as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The degree (sum of parts).
    pub fn r(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The number of nonzero rows.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// The i-th part, 1-indexed; zero beyond the last row (and for i = 0).
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&x| x == 1)
    }

    pub fn as_hook(&self) -> Option<Hook> {
        if self.parts.is_empty() || !self.is_hook() {
            return None;
        }
        Some(Hook { a: self.parts[0], b: (self.parts.len() - 1) as u32 })
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&x| x >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The statistic `q = max{i : λ_i >= 2}` together with `λ_q`; `(0, 0)` for a column.
    pub fn q_of(&self) -> (usize, u32) {
        match self.parts.iter().rposition(|&x| x >= 2) {
            Some(idx) => (idx + 1, self.parts[idx]),
            None => (0, 0),
        }
    }

    /// Removes the first column: every part drops by one.
    pub fn remove_first_column(&self) -> Partition {
        Partition::new(self.parts.iter().map(|&x| x - 1).collect()).expect("still a partition")
    }

    /// Removes the first row.
    pub fn remove_first_row(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    fn prefix_sums(&self, len: usize) -> Vec<u32> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.parts.get(i).copied().unwrap_or(0);
                acc
            })
            .collect()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Hook> for String {
    fn from(h: Hook) -> String {
        h.to_string()
    }
}

impl TryFrom<String> for Hook {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", items.join(","))
    }
}

fn parse_items(s: &str) -> Result<Vec<u32>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
    if cleaned.is_empty() {
        return Err(Error::Parse("empty partition".into()));
    }
    let mut parts = Vec::new();
    for item in cleaned.split(',') {
        let (base, reps) = match item.split_once('^') {
            Some((base, reps)) => (base, reps),
            None => (item, "1"),
        };
        let base: u32 = base
            .parse()
            .map_err(|_| Error::Parse(format!("bad part {item:?} in {s:?}")))?;
        let reps: usize = reps
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {item:?}")))?;
        parts.extend(std::iter::repeat(base).take(reps));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_items(s)?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The hook `(a, 1^b)`; `b = 0` is the single row `(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Hook {
    a: u32,
    b: u32,
}

impl Hook {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 {
            return Err(domain("hook arm must be at least 1"));
        }
        Ok(Hook { a, b })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn r(self) -> u32 {
        self.a + self.b
    }

    pub fn to_partition(self) -> Partition {
        let mut parts = vec![self.a];
        parts.extend(std::iter::repeat(1).take(self.b as usize));
        Partition { parts }
    }

    /// The transpose of `(a, 1^b)` is `(b+1, 1^{a-1})`.
    pub fn transpose(self) -> Hook {
        Hook { a: self.b + 1, b: self.a - 1 }
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            0 => write!(f, "{}", self.a),
            1 => write!(f, "{},1", self.a),
            b => write!(f, "{},1^{}", self.a, b),
        }
    }
}

impl FromStr for Hook {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lambda: Partition = s.parse()?;
        lambda
            .as_hook()
            .ok_or_else(|| Error::Parse(format!("{s:?} is not a hook")))
    }
}

impl From<Hook> for Partition {
    fn from(h: Hook) -> Partition {
        h.to_partition()
    }
}

/// A finite sequence of nonnegative integers (a weight). Zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition {
    entries: Vec<u32>,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Occurrences of letter `c` (1-indexed); zero beyond the stored length.
    pub fn get(&self, c: u32) -> u32 {
        if c == 0 {
            return 0;
        }
        self.entries.get(c as usize - 1).copied().unwrap_or(0)
    }

    /// Drops trailing zeros so that equal weights compare equal.
    pub fn trimmed(mut self) -> Self {
        while self.entries.last() == Some(&0) {
            self.entries.pop();
        }
        self
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts().to_vec())
    }
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

pub fn q_of(lambda: &Partition) -> (usize, u32) {
    lambda.q_of()
}

/// Dominance order: every prefix sum of `lambda` is at most that of `mu`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.r() != mu.r() {
        return Err(domain(format!(
            "dominance needs equal degrees, got {} and {}",
            lambda.r(),
            mu.r()
        )));
    }
    let len = lambda.m().max(mu.m());
    let (l, u) = (lambda.prefix_sums(len), mu.prefix_sums(len));
    Ok(l.iter().zip(&u).all(|(x, y)| x <= y))
}

/// All partitions of `r` with at most `max_parts` rows, in lexicographic order.
pub fn enumerate_partitions(r: u32, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for x in 1..=cap.min(rest) {
            cur.push(x);
            go(rest - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 1 {
        go(r, r, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// The `r` hooks of degree `r`, ordered by decreasing arm.
pub fn enumerate_hooks(r: u32) -> Vec<Hook> {
    (1..=r).rev().map(|a| Hook { a, b: r - a }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_strips_trailing_zeros() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.m(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(part("3,2,1").transpose(), part("3,2,1"));
        assert_eq!(part("5,1").transpose(), part("2,1,1,1,1"));
        assert_eq!(Partition::row(6).transpose(), Partition::column(6));
    }

    #[test]
    fn q_examples() {
        assert_eq!(part("2,1,1,1").q_of(), (1, 2));
        assert_eq!(part("1,1,1").q_of(), (0, 0));
        assert_eq!(part("3,3,1").q_of(), (2, 3));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&part("2,2"), &part("3,1")).unwrap());
        assert!(!dominance_leq(&part("3,1"), &part("2,2")).unwrap());
        assert!(dominance_leq(&part("3,1"), &part("3,1")).unwrap());
        assert!(dominance_leq(&part("3,1"), &part("3")).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(4, 4).len(), 5);
        assert_eq!(enumerate_partitions(1, 1), vec![part("1")]);
        assert_eq!(enumerate_partitions(8, 8).len(), 22);
        assert_eq!(enumerate_partitions(6, 2).len(), 4);
        let ps = enumerate_partitions(7, 7);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hook_enumeration() {
        let hooks: Vec<String> = enumerate_hooks(3).iter().map(|h| h.to_partition().to_string()).collect();
        assert_eq!(hooks, vec!["3", "2,1", "1,1,1"]);
        assert_eq!(enumerate_hooks(1).len(), 1);
        assert_eq!(enumerate_hooks(5).len(), 5);
    }

    #[test]
    fn hook_parsing_and_display() {
        let h: Hook = "6,1^3".parse().unwrap();
        assert_eq!((h.a(), h.b()), (6, 3));
        assert_eq!(" 4 , 1 , 1 ".parse::<Hook>().unwrap(), Hook::new(4, 2).unwrap());
        assert_eq!("4,1^2".parse::<Hook>().unwrap(), Hook::new(4, 2).unwrap());
        assert!("3,2".parse::<Hook>().is_err());
        assert_eq!(Hook::new(6, 3).unwrap().to_string(), "6,1^3");
        assert_eq!(Hook::new(5, 0).unwrap().to_string(), "5");
        assert_eq!(Hook::new(1, 2).unwrap().to_string().parse::<Hook>().unwrap(), Hook::new(1, 2).unwrap());
        assert_eq!(Hook::new(5, 1).unwrap().transpose(), Hook::new(2, 4).unwrap());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_is_involution() {
        for r in 1..=10 {
            for p in enumerate_partitions(r, r as usize) {
                assert_eq!(p.transpose().transpose(), p);
                assert_eq!(p.transpose().r(), r);
            }
        }
    }

    #[test]
    fn q_bounds() {
        for r in 1..=9 {
            for p in enumerate_partitions(r, r as usize) {
                let (q, lq) = p.q_of();
                assert!(q <= p.m());
                assert_eq!(p.part(q), lq);
                assert!((q + 1..=p.m()).all(|i| p.part(i) <= 1));
            }
        }
    }

    #[test]
    fn dominance_is_partial_order() {
        for r in 1..=8 {
            let ps = enumerate_partitions(r, r as usize);
            let leq = |x: &Partition, y: &Partition| dominance_leq(x, y).unwrap();
            for x in &ps {
                assert!(leq(x, x));
                for y in &ps {
                    if x != y {
                        assert!(!(leq(x, y) && leq(y, x)));
                    }
                    for z in &ps {
                        if leq(x, y) && leq(y, z) {
                            assert!(leq(x, z));
                        }
                    }
                }
            }
        }
    }
}
