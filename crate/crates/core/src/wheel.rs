//! Prime generation, 6k±1 wheel classification, primorials, and the
//! deterministic primality oracle every other module checks against.

use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};

/// All primes up to `limit`, ascending.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, m: u64) -> bool {
        self.primes.binary_search(&m).is_ok()
    }
}

/// Sieve of Eratosthenes up to `limit` inclusive.
pub fn sieve_primes(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::domain(format!(
            "sieve limit must be at least 2, got {limit}"
        )));
    }
    let bits = prime_bitmap(limit);
    Ok(PrimeTable {
        limit,
        primes: bits.iter_ones().collect(),
    })
}

/// Bitmap over `0..=limit` with bit `m` set iff `m` is prime.
pub fn prime_bitmap(limit: u64) -> Bitmap {
    let mut b = Bitmap::new(limit + 1);
    // seed every odd position, then knock the composites back out
    for w in b.words_mut() {
        *w = 0xAAAA_AAAA_AAAA_AAAA;
    }
    b.mask_tail();
    b.clear(1);
    if limit >= 2 {
        b.set(2);
    }
    let mut p = 3u64;
    while p * p <= limit {
        if b.get(p) {
            let mut j = p * p;
            while j <= limit {
                b.clear(j);
                j += 2 * p;
            }
        }
        p += 2;
    }
    b
}

/// Integer square root: the largest `r` with `r·r ≤ n`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r > 0 && r.checked_mul(r).is_none_or(|rr| rr > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|rr| rr <= n) {
        r += 1;
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WheelSign {
    /// value = 6·index − 1
    Minus,
    /// value = 6·index + 1
    Plus,
}

/// An integer ≥ 5 coprime to 6, written as `6·index ∓ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WheelClass {
    value: u64,
    sign: WheelSign,
    index: u64,
}

impl WheelClass {
    /// Classify `value` if it is ≥ 5 and ≡ ±1 (mod 6).
    pub fn of(value: u64) -> Option<WheelClass> {
        if value < 5 {
            return None;
        }
        match value % 6 {
            5 => Some(WheelClass {
                value,
                sign: WheelSign::Minus,
                index: (value + 1) / 6,
            }),
            1 => Some(WheelClass {
                value,
                sign: WheelSign::Plus,
                index: (value - 1) / 6,
            }),
            _ => None,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn sign(&self) -> WheelSign {
        self.sign
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// The smallest twin index this value marks: `value·index − index`.
    /// For Minus values that is where `value²` lands in the 6n+1
    /// progression; for Plus values it is where `value·(value − 2)` lands
    /// in the 6n−1 progression.
    pub fn first_marked_index(&self) -> u64 {
        self.value * self.index - self.index
    }
}

/// 6k±1 classification with the domain check on `m`.
pub fn classify_6k(m: u64) -> Result<Option<WheelClass>> {
    if m < 5 {
        return Err(Error::domain(format!(
            "wheel classification needs m ≥ 5, got {m}"
        )));
    }
    Ok(WheelClass::of(m))
}

/// Product of all primes `p` with `base_prime ≤ p ≤ top_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Primorial {
    pub top_prime: u64,
    pub base_prime: u64,
    pub value: u64,
}

pub fn primorial(top_prime: u64, base_prime: u64) -> Result<Primorial> {
    if !is_prime(top_prime) {
        return Err(Error::domain(format!("{top_prime} is not prime")));
    }
    if !is_prime(base_prime) {
        return Err(Error::domain(format!("{base_prime} is not prime")));
    }
    if base_prime > top_prime {
        return Err(Error::domain(format!(
            "base prime {base_prime} exceeds top prime {top_prime}"
        )));
    }
    let table = sieve_primes(top_prime)?;
    let mut value = 1u64;
    let mut max_fitting = 0u64;
    for &p in table.primes().iter().filter(|&&p| p >= base_prime) {
        match value.checked_mul(p) {
            Some(v) => {
                value = v;
                max_fitting = p;
            }
            None => {
                return Err(Error::PrimorialOverflow {
                    top_prime,
                    base_prime,
                    max_top_prime: max_fitting,
                })
            }
        }
    }
    Ok(Primorial {
        top_prime,
        base_prime,
        value,
    })
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for the full u64 range: trial division by the
/// first twelve primes, then Miller-Rabin with those primes as bases (an
/// exact test below 3.3·10²⁴).
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if m == p {
            return true;
        }
        if m.is_multiple_of(p) {
            return false;
        }
    }
    let s = (m - 1).trailing_zeros();
    let d = (m - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, m);
            if x == m - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0u32;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Render a factorization like `2^5` or `2 * 11`.
pub fn factorization_string(n: u64) -> String {
    if n < 2 {
        return n.to_string();
    }
    factorize(n)
        .into_iter()
        .map(|(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}
