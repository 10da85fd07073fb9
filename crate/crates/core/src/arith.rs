//! Integer helpers: primality, factoring, divisors, Möbius, integer logarithms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

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

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &sp in &SMALL {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
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

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // The first 13 prime bases are deterministic below 3.3e24; above that the
    // error probability is negligible and every order computed from these
    // factors is re-verified by the caller.
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint, rng: &mut ChaCha8Rng) -> BigUint {
    let one = BigUint::one();
    if n.is_even() {
        return BigUint::from(2u32);
    }
    loop {
        let y0 = BigUint::from(rng.next_u64()) % n;
        let c = BigUint::from(rng.next_u64() % 1_000_000 + 1) % n;
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = y0;
        let mut r = 1u64;
        let mut qv = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 64u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    qv = (qv * diff) % n;
                }
                g = qv.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
///
/// Trial division up to `10^6`, then Pollard-Brent with a fixed seed.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut rest = n.clone();
    let push = |out: &mut Vec<(BigUint, u32)>, p: BigUint| {
        if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    let mut d = 2u64;
    while d <= 1_000_000 {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            push(&mut out, bd.clone());
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime_big(&m) {
            push(&mut out, m);
            continue;
        }
        let f = pollard_brent(&m, &mut rng);
        let g = &m / &f;
        stack.push(f);
        stack.push(g);
    }
    out.sort();
    out
}

pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor_biguint(&BigUint::from(n))
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("factor of u64 fits"), e))
        .collect()
}

/// Sorted divisors of `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn mobius(n: u64) -> i64 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Smallest `i >= 0` with `base^i * den >= num`; integer-only `⌈log_base(num/den)⌉`
/// clamped at zero.
pub fn ceil_log_ratio(base: u64, num: u64, den: u64) -> u32 {
    assert!(base >= 2 && den >= 1);
    let mut i = 0;
    let mut acc = den as u128;
    while acc < num as u128 {
        acc *= base as u128;
        i += 1;
    }
    i
}

/// Exact `p`-adic valuation of `n > 0`.
pub fn valuation(p: u64, mut n: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `base^exp` or `None` on overflow.
pub fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(3_215_031_751));
    }

    #[test]
    fn factor_mersenne_like() {
        let n = (BigUint::one() << 128u32) - BigUint::one();
        let f = factor_biguint(&n);
        let primes: Vec<u64> = f.iter().map(|(p, _)| p.to_u64().unwrap()).collect();
        assert_eq!(
            primes,
            [3, 5, 17, 257, 641, 65537, 274177, 6700417, 67280421310721]
        );
        let back = f
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(back, n);
    }

    #[test]
    fn divisor_helpers() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), [1]);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn ceil_logs() {
        assert_eq!(ceil_log_ratio(2, 1, 1), 0);
        assert_eq!(ceil_log_ratio(2, 5, 1), 3);
        assert_eq!(ceil_log_ratio(2, 8, 1), 3);
        assert_eq!(ceil_log_ratio(3, 4, 1), 2);
        // n / s0 exactly a power: no rounding drift
        assert_eq!(ceil_log_ratio(2, 12, 3), 2);
        assert_eq!(ceil_log_ratio(2, 13, 3), 3);
        assert_eq!(valuation(2, 48), 4);
    }
}
