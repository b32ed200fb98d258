//! Uniform bounds on rational torsion of elliptic curves over number fields
//! of degree at most `d`.
//!
//! A prime order `p` is possible only for `p <= (1 + 3^(d/2))^2`, and a
//! prime-power order `p^n` only below the caps of [`parent_cap`]. The
//! product over admissible primes of the largest admissible prime powers is
//! the exponent bound `B(d)`: every torsion subgroup embeds in
//! `Z/B x Z/B`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Largest degree accepted by the CLI; the mathematics has no such limit.
pub const DEFAULT_MAX_DEGREE: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Per-prime caps and the global bound for one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTable {
    pub d: u32,
    /// `(p, n_p)` in increasing order of `p`.
    pub caps: Vec<(u64, u32)>,
    #[serde(rename = "B", with = "biguint_str")]
    pub bound: BigUint,
}

fn pow3(e: u32) -> BigUint {
    BigUint::from(3u32).pow(e)
}

/// Whether `p <= (1 + 3^(d/2))^2 = 1 + 3^d + 2 * 3^(d/2)`, decided in
/// integers.
pub fn within_oesterle(p: u64, d: u32) -> bool {
    let p = BigUint::from(p);
    let three_d = pow3(d);
    let base = &three_d + 1u32;
    if p <= base {
        return true;
    }
    let k = &p - &base;
    if d % 2 == 0 {
        k <= pow3(d / 2) * 2u32
    } else {
        // k <= 2 * 3^(d/2)  <=>  k^2 <= 4 * 3^d
        &k * &k <= three_d * 4u32
    }
}

/// Largest integer `N` with `N <= (1 + 3^(d/2))^2`.
fn oesterle_floor(d: u32) -> u64 {
    // 1 + 3^d always qualifies; walk up through the remaining 2 * 3^(d/2)
    let mut n = (1u64 + 3u64.pow(d)).max(2);
    while within_oesterle(n + 1, d) {
        n += 1;
    }
    n
}

fn sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut is = vec![true; n + 1];
    is[0] = false;
    is[1] = false;
    let mut i = 2;
    while i * i <= n {
        if is[i] {
            let mut j = i * i;
            while j <= n {
                is[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(k, _)| k as u64)
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// The primes that can occur as orders of torsion points in degree `d`.
pub fn oesterle_primes(d: u32) -> Result<Vec<u64>, BoundError> {
    if d < 1 {
        return Err(BoundError::BadDegree(d));
    }
    Ok(sieve(oesterle_floor(d)))
}

/// Upper bound on prime-power torsion orders `p^n` in degree `d`.
pub fn parent_cap(p: u64, d: u32) -> Result<BigUint, BoundError> {
    if d < 1 {
        return Err(BoundError::BadDegree(d));
    }
    if !is_prime(p) {
        return Err(BoundError::NotPrime(p));
    }
    let dd = BigUint::from(d);
    let cap = match p {
        2 => BigUint::from(129u32) * (pow3(d) - 1u32) * (dd * 3u32).pow(6),
        3 => BigUint::from(65u32) * (BigUint::from(5u32).pow(d) - 1u32) * (dd * 2u32).pow(6),
        _ => BigUint::from(65u32) * (pow3(d) - 1u32) * (dd * 2u32).pow(6),
    };
    Ok(cap)
}

/// `(n, p^n)` for the largest `p^n <= parent_cap(p, d)`.
pub fn max_prime_power(p: u64, d: u32) -> Result<(u32, BigUint), BoundError> {
    let cap = parent_cap(p, d)?;
    let pb = BigUint::from(p);
    let mut n = 0u32;
    let mut pw = BigUint::one();
    loop {
        let next = &pw * &pb;
        if next > cap {
            return Ok((n, pw));
        }
        pw = next;
        n += 1;
    }
}

/// The bound table for degree `d`.
pub fn global_bound(d: u32) -> Result<BoundTable, BoundError> {
    let primes = oesterle_primes(d)?;
    let mut caps = Vec::with_capacity(primes.len());
    let mut bound = BigUint::one();
    for p in primes {
        let (n, pw) = max_prime_power(p, d)?;
        caps.push((p, n));
        bound *= pw;
    }
    Ok(BoundTable { d, caps, bound })
}

/// Mazur's classification over Q: torsion is `Z/n` (n <= 10 or 12) or
/// `Z/2 x Z/2n` (n <= 4). The exponent bound is lcm(1..10, 12) = 2520 and
/// no point has order above 12.
pub fn mazur_table() -> BoundTable {
    BoundTable {
        d: 1,
        caps: vec![(2, 3), (3, 2), (5, 1), (7, 1)],
        bound: BigUint::from(2520u32),
    }
}

pub const MAZUR_MAX_ORDER: u64 = 12;

impl BoundTable {
    /// The bound as a `u64` when it fits.
    pub fn bound_u64(&self) -> Option<u64> {
        self.bound.to_u64()
    }
}

pub mod biguint_str {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
