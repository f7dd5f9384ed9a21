//! Integer arithmetic behind the criteria: binomials (exact and mod p), the
//! gcd family `R(x, y)`, the exponent function `l_p` and the Garnir content.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// The characteristic of the ground field. Primality is checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces a signed integer into `0..p`.
    pub fn reduce(self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.0);
        x.mod_floor(&p).to_u64().expect("residue fits in u64")
    }

    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    pub fn mul(self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.0 as u128) as u64
    }

    pub fn add(self, x: u64, y: u64) -> u64 {
        ((x as u128 + y as u128) % self.0 as u128) as u64
    }

    pub fn sub(self, x: u64, y: u64) -> u64 {
        self.add(x, self.0 - y % self.0)
    }

    pub fn neg(self, x: u64) -> u64 {
        (self.0 - x % self.0) % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(self, x: u64) -> u64 {
        assert!(x % self.0 != 0, "zero has no inverse mod {}", self.0);
        self.pow(x, self.0 - 2)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl std::str::FromStr for Prime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n: u64 = s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
        Prime::new(n)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `C(n, k)` exactly; zero when `k < 0` or `k > n`.
pub fn binom_exact(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k) mod p` via Lucas: the product of digitwise binomials in base p.
pub fn binom_mod_p(n: u64, k: u64, p: Prime) -> u64 {
    let q = p.get();
    let (mut n, mut k) = (n, k);
    let mut acc = 1 % q;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % q, k % q);
        if kd > nd {
            return 0;
        }
        acc = p.mul(acc, small_binom_mod(nd, kd, p));
        n /= q;
        k /= q;
    }
    acc
}

// Both digits are below p, so k! is invertible.
fn small_binom_mod(n: u64, k: u64, p: Prime) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = p.mul(num, n - i);
        den = p.mul(den, i + 1);
    }
    p.mul(num, p.inv(den))
}

/// The least `i` with `p^i > y`.
pub fn l_p(y: u64, p: Prime) -> Result<u32> {
    if y < 1 {
        return Err(domain(format!("l_p needs y >= 1, got {y}")));
    }
    let mut i = 0u32;
    let mut power: u128 = 1;
    while power <= y as u128 {
        power *= p.get() as u128;
        i += 1;
    }
    Ok(i)
}

/// `R(x, y) = gcd{C(x,1), C(x+1,2), ..., C(x+y-1,y)}` computed directly.
/// `R(x, 0)` is the gcd of the empty set, i.e. 0.
pub fn r_gcd(x: u64, y: u64) -> BigInt {
    (1..=y).fold(BigInt::zero(), |g, i| g.gcd(&binom_exact(x + i - 1, i as i64)))
}

/// Whether p divides `R(x, y)`, using the criterion `p^{l_p(y)} | x`.
/// An empty family (`y = 0`) counts as divisible.
pub fn p_divides_r(x: u64, y: u64, p: Prime) -> bool {
    if y == 0 {
        return true;
    }
    let e = l_p(y, p).expect("y >= 1");
    match (p.get() as u128).checked_pow(e) {
        Some(pe) => x as u128 % pe == 0,
        None => x == 0,
    }
}

/// Whether the Garnir content `gcd{C(a_i, j) : 1 <= j < a_{i+1}, 1 <= i < N}`
/// vanishes in characteristic p. The gcd of the empty set is 0, which vanishes.
pub fn garnir_content_is_zero(a: &[u64], p: Prime) -> bool {
    a.windows(2).all(|w| {
        (1..w[1]).all(|j| binom_mod_p(w[0], j, p) == 0)
    })
}

/// The Garnir content as an exact integer (0 for the empty family).
pub fn garnir_content(a: &[u64]) -> BigInt {
    let mut g = BigInt::zero();
    for w in a.windows(2) {
        for j in 1..w[1] {
            g = g.gcd(&binom_exact(w[0], j as i64));
        }
    }
    g.abs()
}
