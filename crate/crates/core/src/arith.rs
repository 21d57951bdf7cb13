//! Exact integer helpers: binomials, primality, factorization.
//!
//! Everything here is exact. Binomials come from the multiplicative formula
//! over arbitrary-precision integers, primality of `u64` values is decided by
//! deterministic Miller-Rabin, and factorization is trial division followed by
//! Brent's variant of Pollard rho.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division bound used before switching to Pollard rho.
pub const TRIAL_DIVISION_BOUND: u64 = 100_000;

/// `C(n, k)` with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` in machine arithmetic; `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1)
        let num = acc.checked_mul((n - i) as u128)?;
        acc = num / (i as u128 + 1);
    }
    Some(acc)
}

/// `C(n, k) mod p` for a prime `p`, computed by Lucas' theorem.
pub fn binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        let small = binomial_u128(nd, kd).map(|v| (v % p as u128) as u64);
        let term = match small {
            Some(v) => v,
            None => (binomial(nd as i64, kd as i64) % BigUint::from(p))
                .to_u64()
                .unwrap_or(0),
        };
        acc = mul_mod(acc, term, p);
        n /= p;
        k /= p;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Exponent of the prime `p` in `n!`.
pub fn legendre(n: u64, p: u64) -> u32 {
    let mut e = 0u32;
    let mut q = n / p;
    while q > 0 {
        e += q as u32;
        q /= p;
    }
    e
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// Inverse of `a` modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &p)| p.then_some(k as u64))
        .collect()
}

fn pollard_brent(n: u64, seed: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let f = |x: u64| (mul_mod(x, x, n) + seed) % n;
    let (mut y, m) = (2u64, 128u64);
    let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
    let (mut x, mut ys) = (0u64, 0u64);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn factor_rho_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_default() += 1;
        return;
    }
    let mut seed = 1;
    let d = loop {
        if let Some(d) = pollard_brent(n, seed) {
            break d;
        }
        seed += 1;
    };
    factor_rho_into(d, out);
    factor_rho_into(n / d, out);
}

/// Prime factorization of a `u64`. `factor_u64(0)` and `factor_u64(1)` are empty.
pub fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n && p <= TRIAL_DIVISION_BOUND {
        while n.is_multiple_of(p) {
            *out.entry(p).or_default() += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factor_rho_into(n, &mut out);
    }
    out
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_big(n: &BigUint, seed: u64, budget: u64) -> Option<BigUint> {
    let c = BigUint::from(seed);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut x = BigUint::from(2u32);
    let mut y = x.clone();
    let mut steps = 0u64;
    loop {
        x = f(&x);
        y = f(&f(&y));
        let diff = if x > y { &x - &y } else { &y - &x };
        let g = diff.gcd(n);
        if !g.is_one() {
            return (&g != n).then_some(g);
        }
        steps += 1;
        if steps > budget {
            return None;
        }
    }
}

fn factor_big_into(n: BigUint, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in factor_u64(small) {
            *out.entry(BigUint::from(p)).or_default() += e;
        }
        return Ok(());
    }
    if is_probable_prime_big(&n) {
        *out.entry(n).or_default() += 1;
        return Ok(());
    }
    for seed in 1..=16 {
        if let Some(d) = pollard_big(&n, seed, 1 << 22) {
            let rest = &n / &d;
            factor_big_into(d, out)?;
            return factor_big_into(rest, out);
        }
    }
    Err(Error::ResourceLimit(format!(
        "could not factor {} bit composite",
        n.bits()
    )))
}

/// Prime factorization of an arbitrary-precision integer.
pub fn factor_big(n: &BigUint) -> Result<BTreeMap<BigUint, u32>> {
    let mut out = BTreeMap::new();
    if n.is_zero() || n.is_one() {
        return Ok(out);
    }
    let mut n = n.clone();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        loop {
            let (q, r) = n.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            *out.entry(bp.clone()).or_default() += 1;
            n = q;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    factor_big_into(n, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial_u128(60, 30), Some(118264581564861424));
        assert_eq!(binomial_mod(10, 3, 7), 120 % 7);
        assert_eq!(binomial_mod(4, 2, 2), 0);
    }

    #[test]
    fn legendre_matches_factorial() {
        for n in 0..30u64 {
            let f = factor_big(&factorial(n)).unwrap();
            for p in primes_up_to(30) {
                let e = f.get(&BigUint::from(p)).copied().unwrap_or(0);
                assert_eq!(e, legendre(n, p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn primality() {
        let small = primes_up_to(1000);
        for n in 0..1000u64 {
            assert_eq!(is_prime(n), small.binary_search(&n).is_ok(), "{n}");
        }
        assert!(is_prime(20554657));
        assert!(!is_prime(20554657 * 3));
    }

    #[test]
    fn factorization() {
        assert_eq!(
            factor_u64(210),
            BTreeMap::from([(2, 1), (3, 1), (5, 1), (7, 1)])
        );
        let n = 1_000_000_007u64 * 998_244_353;
        assert_eq!(
            factor_u64(n),
            BTreeMap::from([(998_244_353, 1), (1_000_000_007, 1)])
        );
        let big = BigUint::from(20554657u64) * BigUint::from(1u64 << 40) * 3u32;
        let f = factor_big(&big).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[&BigUint::from(2u32)], 40);
        assert_eq!(f[&BigUint::from(20554657u32)], 1);
    }
}
