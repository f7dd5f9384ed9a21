//! Integral `Ext^1` between hooks and a non-vanishing test for the orthogonal
//! and symplectic groups.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::Prime;
use crate::criterion::{hom_dim_theorem, hom_hook_source};
use crate::error::{domain, Error, Result};
use crate::partitions::{Hook, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtGroup {
    Zero,
    Z2,
}

impl fmt::Display for ExtGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtGroup::Zero => f.write_str("0"),
            ExtGroup::Z2 => f.write_str("Z/2"),
        }
    }
}

/// `h(d) = (a+d, 1^{b-d})`.
pub fn shifted_hook(h: Hook, d: u32) -> Result<Hook> {
    if d > h.b() {
        return Err(domain(format!("h({d}) needs b >= d, but {h} has b = {}", h.b())));
    }
    Hook::new(h.a() + d, h.b() - d)
}

/// `Ext^1(Δ_Z(h), Δ_Z(h(d)))` for `d >= 2`: `Z/2` when `r + d` is odd, else 0.
pub fn ext1_hooks(h: Hook, d: u32) -> Result<ExtGroup> {
    if d < 2 {
        return Err(Error::Unsupported(format!("Ext^1 between hooks is only given for d >= 2, got d = {d}")));
    }
    shifted_hook(h, d)?;
    Ok(if (h.r() + d) % 2 == 1 { ExtGroup::Z2 } else { ExtGroup::Zero })
}

/// Checks the parity formula against Hom over fields through the universal
/// coefficient theorem: `Hom` in characteristic 2 is nonzero exactly when Ext
/// is `Z/2`, and `Hom` vanishes in characteristics 3, 5, 7.
pub fn ext1_cross_check(h: Hook, d: u32) -> Result<bool> {
    let ext = ext1_hooks(h, d)?;
    let target = shifted_hook(h, d)?.to_partition();
    let dim_at = |p: u64| -> Result<usize> { Ok(hom_hook_source(h, &target, Prime::new(p)?)?.dim) };
    let at_two = dim_at(2)?;
    let mut odd_zero = true;
    for p in [3, 5, 7] {
        odd_zero &= dim_at(p)? == 0;
    }
    Ok((ext == ExtGroup::Z2) == (at_two == 1) && odd_zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassicalFamily {
    /// `SO(2n+1)`
    B,
    /// `Sp(2n)`
    C,
    /// `SO(2n)`
    D,
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "B" => Ok(ClassicalFamily::B),
            "C" => Ok(ClassicalFamily::C),
            "D" => Ok(ClassicalFamily::D),
            other => Err(Error::Parse(format!("unknown classical type {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalType {
    pub family: ClassicalFamily,
    pub rank: usize,
}

impl ClassicalType {
    pub fn new(family: ClassicalFamily, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(domain("classical group rank must be at least 1"));
        }
        Ok(ClassicalType { family, rank })
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Nonvanishing {
    GuaranteedNonzero,
    Unknown,
}

impl fmt::Display for Nonvanishing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nonvanishing::GuaranteedNonzero => f.write_str("guaranteed_nonzero"),
            Nonvanishing::Unknown => f.write_str("unknown"),
        }
    }
}

/// Whether `Hom_G(∇_G(λ), ∇_G(μ))` is known to be nonzero for a hook `μ`.
///
/// A nonzero GL-map transfers to `G` when p is odd for types B and D, and for
/// type D when both partitions have fewer than n rows. The transfer only goes
/// one way, so every other situation is `Unknown`.
pub fn classical_nonvanishing(lambda: &Partition, mu: &Partition, p: Prime, g: ClassicalType) -> Result<Nonvanishing> {
    let n = g.rank;
    for x in [lambda, mu] {
        if x.m() > n {
            return Err(domain(format!("{x} has more than n = {n} parts")));
        }
    }
    let h = mu.as_hook().ok_or_else(|| domain(format!("{mu} is not a hook")))?;
    let odd_ok = p.get() > 2 || g.family == ClassicalFamily::C;
    let last_row_ok = g.family != ClassicalFamily::D || (lambda.part(n) == 0 && mu.part(n) == 0);
    if !(odd_ok && last_row_ok) {
        return Ok(Nonvanishing::Unknown);
    }
    Ok(if hom_dim_theorem(lambda, h, p)?.dim == 1 {
        Nonvanishing::GuaranteedNonzero
    } else {
        Nonvanishing::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_hooks, enumerate_partitions};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hook(s: &str) -> Hook {
        s.parse().unwrap()
    }

    fn prime(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext1_hooks(hook("3,1,1"), 2).unwrap(), ExtGroup::Z2);
        assert_eq!(ext1_hooks(hook("2,1,1"), 2).unwrap(), ExtGroup::Zero);
        assert_eq!(ext1_hooks(hook("2,1,1,1"), 3).unwrap(), ExtGroup::Zero);
        assert!(matches!(ext1_hooks(hook("2,1,1"), 1), Err(Error::Unsupported(_))));
        assert!(matches!(ext1_hooks(hook("2,1,1"), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn cross_check_examples() {
        assert!(ext1_cross_check(hook("3,1,1"), 2).unwrap());
        assert!(ext1_cross_check(hook("2,1,1"), 2).unwrap());
        assert!(ext1_cross_check(hook("1,1,1,1,1"), 2).unwrap());
    }

    #[test]
    fn classical_examples() {
        let c3 = ClassicalType::new(ClassicalFamily::C, 3).unwrap();
        let b4 = ClassicalType::new(ClassicalFamily::B, 4).unwrap();
        let d3 = ClassicalType::new(ClassicalFamily::D, 3).unwrap();
        assert_eq!(
            classical_nonvanishing(&part("3,2,1"), &part("5,1"), prime(3), c3).unwrap(),
            Nonvanishing::GuaranteedNonzero
        );
        assert_eq!(
            classical_nonvanishing(&part("2,1,1,1"), &part("4,1"), prime(2), b4).unwrap(),
            Nonvanishing::Unknown
        );
        assert_eq!(
            classical_nonvanishing(&part("3,2,1"), &part("5,1"), prime(3), d3).unwrap(),
            Nonvanishing::Unknown
        );
        let c2 = ClassicalType::new(ClassicalFamily::C, 2).unwrap();
        assert!(classical_nonvanishing(&part("3,2,1"), &part("5,1"), prime(3), c2).is_err());
        assert!(ClassicalType::new(ClassicalFamily::B, 0).is_err());
        assert_eq!("d".parse::<ClassicalFamily>().unwrap(), ClassicalFamily::D);
    }

    #[test]
    fn classical_is_sound_relative_to_gl() {
        for r in 1..=7 {
            for lambda in enumerate_partitions(r, r as usize) {
                for h in enumerate_hooks(r) {
                    let mu = h.to_partition();
                    let n = lambda.m().max(mu.m());
                    for p in [2, 3, 5] {
                        let gl = hom_dim_theorem(&lambda, h, prime(p)).unwrap().dim;
                        for fam in [ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D] {
                            for rank in [n, n + 1] {
                                let g = ClassicalType::new(fam, rank).unwrap();
                                let v = classical_nonvanishing(&lambda, &mu, prime(p), g).unwrap();
                                if gl == 0 {
                                    assert_eq!(v, Nonvanishing::Unknown);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ext_cross_check_up_to_ten() {
        for r in 2..=10 {
            for h in enumerate_hooks(r) {
                for d in 2..=h.b() {
                    assert!(ext1_cross_check(h, d).unwrap(), "h={h} d={d}");
                }
            }
        }
    }
}
