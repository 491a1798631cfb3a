//! Small integer helpers: primality, factorisation, p-parts, π-numbers.

use std::collections::BTreeSet;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The set of primes dividing `n` (empty for `n = 1`).
pub fn prime_divisors(n: u64) -> BTreeSet<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut r = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        r *= p;
    }
    r
}

/// `Some(k)` when `n = p^k`.
pub fn log_p(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    (f.len() == 1).then(|| f[0])
}

/// True iff every prime divisor of `n` lies in `pi`. 1 is a π-number for every π.
pub fn is_pi_number(n: u64, pi: &BTreeSet<u64>) -> bool {
    assert!(n >= 1, "π-number test needs n >= 1");
    prime_divisors(n).iter().all(|q| pi.contains(q))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Powers of `p` in the closed range `[lo, hi]`.
pub fn p_powers_between(p: u64, lo: u64, hi: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d <= hi {
        if d >= lo {
            out.push(d);
        }
        d = match d.checked_mul(p) {
            Some(x) => x,
            None => break,
        };
    }
    out
}
