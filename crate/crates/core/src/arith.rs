//! Small integer helpers: primality, prime powers, factoring torsion coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, e)` with `n = p^e`, `e >= 1`, or `None` if `n` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2u64..)
        .take_while(|d| d.saturating_mul(*d) <= n)
        .find(|d| n.is_multiple_of(*d))
        .unwrap_or(n);
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Distinct prime divisors of `|n|` in ascending order. Zero and units have none.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut rest = n.abs();
    let mut out = Vec::new();
    if rest.is_zero() {
        return out;
    }
    let mut d = BigInt::from(2u32);
    while &d * &d <= rest {
        if rest.is_multiple_of(&d) {
            out.push(d.to_u64().expect("prime divisor exceeds u64"));
            while rest.is_multiple_of(&d) {
                rest /= &d;
            }
        }
        d += 1u32;
    }
    if !rest.is_one() {
        out.push(rest.to_u64().expect("prime divisor exceeds u64"));
    }
    out
}

/// Representative of `x mod m` in `0..m`.
pub fn reduce(x: &BigInt, m: u64) -> BigInt {
    x.mod_floor(&BigInt::from(m))
}

/// Inverse of `a` modulo `m`, assuming `gcd(a, m) = 1`.
pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let ext = a.mod_floor(m).extended_gcd(m);
    debug_assert!(ext.gcd.is_one());
    ext.x.mod_floor(m)
}
