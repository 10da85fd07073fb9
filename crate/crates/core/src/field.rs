//! The base field `F_q = F_p[x]/(g)`.
//!
//! Elements are stored packed: the coordinate vector `(c_0, .., c_{R-1})` in
//! the power basis of the generator becomes the integer `Σ c_k p^k`. This
//! limits `q` to 62 bits, which covers every base field this crate works with;
//! large extensions `F_{q^s}` use [`crate::ext`] instead.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::arith::{factor_u64, is_prime_u64, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// Largest `p` accepted (machine-word primes).
pub const MAX_PRIME: u64 = 1 << 31;
const MAX_Q_BITS: u32 = 62;
const TABLE_LIMIT: u64 = 1 << 16;

/// An element of `F_q`, meaningful only together with its [`FieldCtx`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqElem(u64);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Packed coordinates `Σ c_k p^k`.
    #[inline]
    pub fn packed(self) -> u64 {
        self.0
    }
}

struct Tables {
    log: Vec<u32>,
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`.
    exp: Vec<u64>,
}

struct Inner {
    p: u64,
    r: usize,
    q: u64,
    modulus: Vec<u64>,
    pow_p: Vec<u64>,
    tables: Option<Tables>,
}

/// A finite field `F_q`, `q = p^R`, given by a monic irreducible modulus over `F_p`.
///
/// Cheap to clone; equality compares `p` and the modulus.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.inner.p, self.inner.r, self.inner.modulus)
    }
}

impl FieldCtx {
    /// Builds `F_{p^r}`. Without a modulus, the lexicographically least monic
    /// irreducible of degree `r` is used (coefficients compared from the
    /// constant term upward).
    pub fn new(p: u64, r: usize, modulus: Option<&[u64]>) -> Result<FieldCtx> {
        if p >= MAX_PRIME || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        let bits = 64 - (p - 1).leading_zeros();
        if (r as u64) * bits as u64 > MAX_Q_BITS as u64 {
            return Err(Error::Unsupported(format!(
                "F_{p}^{r} does not fit packed 62-bit elements"
            )));
        }
        let modulus = match modulus {
            Some(m) => {
                let found = m.len().saturating_sub(1);
                if m.len() != r + 1 || m[r] != 1 {
                    return Err(Error::DegreeMismatch { expected: r, found });
                }
                if let Some(&bad) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidElement(format!("coefficient {bad} not reduced mod {p}")));
                }
                if !fpx::rabin_irreducible(m, p) {
                    return Err(Error::NotIrreducible);
                }
                m.to_vec()
            }
            None => fpx::least_irreducible(p, r),
        };
        Ok(Self::from_verified(p, modulus))
    }

    /// The prime field `F_p` with modulus `x`.
    pub fn prime(p: u64) -> Result<FieldCtx> {
        Self::new(p, 1, None)
    }

    pub(crate) fn from_verified(p: u64, modulus: Vec<u64>) -> FieldCtx {
        let r = modulus.len() - 1;
        let mut pow_p = Vec::with_capacity(r + 1);
        let mut acc = 1u64;
        for _ in 0..=r {
            pow_p.push(acc);
            acc = acc.saturating_mul(p);
        }
        let q = pow_p[r];
        let mut inner = Inner { p, r, q, modulus, pow_p, tables: None };
        if q <= TABLE_LIMIT && q > 2 {
            inner.tables = Some(build_tables(&inner));
        }
        FieldCtx { inner: Arc::new(inner) }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree `R` over `F_p`.
    #[inline]
    pub fn degree(&self) -> usize {
        self.inner.r
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.r == 1
    }

    #[inline]
    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }

    #[inline]
    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    /// The class of `x`, printed as `a`.
    pub fn gen(&self) -> FqElem {
        if self.inner.r == 1 {
            // modulus x + c has root -c
            FqElem((self.inner.p - self.inner.modulus[0]) % self.inner.p)
        } else {
            FqElem(self.inner.p)
        }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.inner.p as i64) as u64)
    }

    pub fn elem(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.inner.r {
            return Err(Error::InvalidElement(format!(
                "{} coordinates for a degree-{} field",
                coeffs.len(),
                self.inner.r
            )));
        }
        let mut v = 0u64;
        for (k, &c) in coeffs.iter().enumerate() {
            if c >= self.inner.p {
                return Err(Error::InvalidElement(format!("coordinate {c} not reduced mod {}", self.inner.p)));
            }
            v += c * self.inner.pow_p[k];
        }
        Ok(FqElem(v))
    }

    /// Reduces an arbitrary coordinate vector (any length) modulo `(p, g)`.
    pub fn elem_reduced(&self, coeffs: &[u64]) -> FqElem {
        let p = self.inner.p;
        let r = self.inner.r;
        let mut t: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
        fpx::reduce_in_place(&mut t, &self.inner.modulus, p);
        t.truncate(r);
        let mut v = 0;
        for (k, &c) in t.iter().enumerate() {
            v += c * self.inner.pow_p[k];
        }
        FqElem(v)
    }

    pub fn from_packed(&self, v: u64) -> Result<FqElem> {
        if v >= self.inner.q {
            return Err(Error::InvalidElement(format!("packed value {v} >= q = {}", self.inner.q)));
        }
        Ok(FqElem(v))
    }

    /// Coordinates in the power basis, length exactly `R`.
    pub fn coeffs(&self, a: FqElem) -> Vec<u64> {
        let mut out = vec![0; self.inner.r];
        self.write_digits(a, &mut out);
        out
    }

    #[inline]
    fn write_digits(&self, a: FqElem, out: &mut [u64]) {
        let p = self.inner.p;
        let mut v = a.0;
        if p == 2 {
            for (k, o) in out.iter_mut().enumerate() {
                *o = (v >> k) & 1;
            }
            return;
        }
        for o in out.iter_mut() {
            *o = v % p;
            v /= p;
        }
    }

    /// All `q` elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.inner.q).map(FqElem)
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return FqElem(a.0 ^ b.0);
        }
        if inner.r == 1 {
            let s = a.0 + b.0;
            return FqElem(if s >= inner.p { s - inner.p } else { s });
        }
        let p = inner.p;
        let (mut x, mut y, mut v, mut pk) = (a.0, b.0, 0u64, 1u64);
        while x > 0 || y > 0 {
            let mut d = x % p + y % p;
            if d >= p {
                d -= p;
            }
            v += d * pk;
            pk = pk.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        FqElem(v)
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return a;
        }
        if inner.r == 1 {
            return FqElem(if a.0 == 0 { 0 } else { inner.p - a.0 });
        }
        let p = inner.p;
        let (mut x, mut v, mut pk) = (a.0, 0u64, 1u64);
        while x > 0 {
            let d = x % p;
            if d != 0 {
                v += (p - d) * pk;
            }
            pk = pk.wrapping_mul(p);
            x /= p;
        }
        FqElem(v)
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem(0);
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return FqElem(t.exp[i]);
        }
        if inner.r == 1 {
            return FqElem(mul_mod(a.0, b.0, inner.p));
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: FqElem, b: FqElem) -> FqElem {
        let inner = &*self.inner;
        let r = inner.r;
        let p = inner.p;
        if p == 2 {
            // carry-less multiply then reduce by the modulus bits
            let mut prod: u128 = 0;
            let mut x = a.0;
            let mut shift = 0;
            while x != 0 {
                if x & 1 == 1 {
                    prod ^= (b.0 as u128) << shift;
                }
                x >>= 1;
                shift += 1;
            }
            let mut mbits: u128 = 0;
            for (k, &c) in inner.modulus.iter().enumerate() {
                mbits |= (c as u128) << k;
            }
            for deg in (r..2 * r).rev() {
                if (prod >> deg) & 1 == 1 {
                    prod ^= mbits << (deg - r);
                }
            }
            return FqElem(prod as u64);
        }
        let mut da = [0u64; 64];
        let mut db = [0u64; 64];
        self.write_digits(a, &mut da[..r]);
        self.write_digits(b, &mut db[..r]);
        let mut t = [0u64; 128];
        for i in 0..r {
            if da[i] == 0 {
                continue;
            }
            for j in 0..r {
                t[i + j] = (t[i + j] + mul_mod(da[i], db[j], p)) % p;
            }
        }
        let m = &inner.modulus;
        for deg in (r..2 * r - 1).rev() {
            let c = t[deg];
            if c == 0 {
                continue;
            }
            t[deg] = 0;
            for k in 0..r {
                if m[k] != 0 {
                    let idx = deg - r + k;
                    t[idx] = (t[idx] + p - mul_mod(c, m[k], p)) % p;
                }
            }
        }
        let mut v = 0;
        for k in 0..r {
            v += t[k] * inner.pow_p[k];
        }
        FqElem(v)
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        if let Some(t) = &self.inner.tables {
            if a.0 == 0 {
                return if e == 0 { FqElem(1) } else { FqElem(0) };
            }
            let order = self.inner.q - 1;
            let l = (t.log[a.0 as usize] as u128 * (e % order) as u128 % order as u128) as usize;
            return FqElem(t.exp[l]);
        }
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: FqElem, e: &BigUint) -> FqElem {
        let order = BigUint::from(self.inner.q - 1);
        if a.is_zero() {
            return if e == &BigUint::from(0u32) { self.one() } else { a };
        }
        let reduced = e % &order;
        let small: u64 = reduced.iter_u64_digits().next().unwrap_or(0);
        self.pow(a, small)
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.inner.tables {
            let order = (self.inner.q - 1) as usize;
            let l = t.log[a.0 as usize] as usize;
            return Ok(FqElem(t.exp[(order - l) % order]));
        }
        if self.inner.r == 1 {
            return Ok(FqElem(pow_mod(a.0, self.inner.p - 2, self.inner.p)));
        }
        Ok(self.pow(a, self.inner.q - 2))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^{p^k}`; the exponent is reduced modulo `R` since `a^q = a`.
    pub fn frobenius(&self, a: FqElem, k: u64) -> FqElem {
        let r = self.inner.r as u64;
        let k = k % r;
        if k == 0 || a.0 <= 1 {
            return a;
        }
        let p = self.inner.p;
        if let Some(t) = &self.inner.tables {
            let order = self.inner.q - 1;
            let pk = self.inner.pow_p[k as usize] % order;
            let l = (t.log[a.0 as usize] as u128 * pk as u128 % order as u128) as usize;
            return FqElem(t.exp[l]);
        }
        let mut out = a;
        for _ in 0..k {
            out = self.pow(out, p);
        }
        out
    }

    /// The unique `b` with `b^p = a`, i.e. `a^{p^{R-1}}`.
    pub fn pth_root(&self, a: FqElem) -> FqElem {
        let r = self.inner.r as u64;
        self.frobenius(a, r - 1)
    }

    /// `a^{p^{-k}}`.
    pub fn inv_frobenius(&self, a: FqElem, k: u64) -> FqElem {
        let r = self.inner.r as u64;
        self.frobenius(a, (r - k % r) % r)
    }

    /// Evaluates a polynomial with `F_p` coefficients (low to high) at `a`.
    pub fn eval_fp_poly(&self, coeffs: &[u64], a: FqElem) -> FqElem {
        coeffs.iter().rev().fold(self.zero(), |acc, &c| {
            self.add(self.mul(acc, a), self.from_int((c % self.inner.p) as i64))
        })
    }
}

fn build_tables(inner: &Inner) -> Tables {
    // Arithmetic through a table-less context over the same modulus.
    let plain = FieldCtx {
        inner: Arc::new(Inner {
            p: inner.p,
            r: inner.r,
            q: inner.q,
            modulus: inner.modulus.clone(),
            pow_p: inner.pow_p.clone(),
            tables: None,
        }),
    };
    let order = inner.q - 1;
    let primes: Vec<u64> = factor_u64(order).into_iter().map(|(l, _)| l).collect();
    let generator = (2..inner.q)
        .map(FqElem)
        .chain(core::iter::once(FqElem(1)))
        .find(|&g| primes.iter().all(|&l| plain.pow(g, order / l) != plain.one()))
        .expect("F_q^* is cyclic");
    let mut exp = vec![0u64; 2 * order as usize];
    let mut log = vec![0u32; inner.q as usize];
    let mut x = plain.one();
    for i in 0..order as usize {
        exp[i] = x.0;
        exp[i + order as usize] = x.0;
        log[x.0 as usize] = i as u32;
        x = plain.mul(x, generator);
    }
    Tables { log, exp }
}

/// Naive arithmetic on coefficient vectors over `F_p` (low to high).
pub(crate) mod fpx {
    use alloc::vec;
    use alloc::vec::Vec;

    use crate::arith::{factor_u64, mul_mod};
    use crate::gf2x::{self, Gf2Poly};

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// Reduces `t` in place modulo the monic `m`; the result has length `<= deg m`.
    pub fn reduce_in_place(t: &mut Vec<u64>, m: &[u64], p: u64) {
        let d = m.len() - 1;
        let support: Vec<(usize, u64)> = m[..d]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        let mut top = t.len();
        while top > d {
            top -= 1;
            let c = t[top];
            if c == 0 {
                continue;
            }
            t[top] = 0;
            for &(k, mk) in &support {
                let idx = top - d + k;
                t[idx] = (t[idx] + p - mul_mod(c, mk, p)) % p;
            }
        }
        t.truncate(d.min(t.len()));
        trim(t);
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut t = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                t[i + j] += x as u128 * y as u128;
            }
            if i % 1024 == 1023 {
                for v in t.iter_mut() {
                    *v %= p as u128;
                }
            }
        }
        let mut out: Vec<u64> = t.into_iter().map(|v| (v % p as u128) as u64).collect();
        trim(&mut out);
        out
    }

    pub fn mul_mod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut t = mul(a, b, p);
        reduce_in_place(&mut t, m, p);
        t
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let inv = crate::arith::pow_mod(*b.last().unwrap(), p - 2, p);
            let monic: Vec<u64> = b.iter().map(|&c| mul_mod(c, inv, p)).collect();
            reduce_in_place(&mut a, &monic, p);
            core::mem::swap(&mut a, &mut b);
        }
        if let Some(&lead) = a.last() {
            let inv = crate::arith::pow_mod(lead, p - 2, p);
            for c in a.iter_mut() {
                *c = mul_mod(*c, inv, p);
            }
        }
        a
    }

    /// `h^p mod m`. Coefficients lie in `F_p`, so `h^p = Σ h_i x^{ip}`.
    pub fn pth_power_mod(h: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if h.is_empty() {
            return Vec::new();
        }
        let d = m.len() - 1;
        if (p as usize) <= 4 * d.max(1) {
            let mut t = vec![0u64; (h.len() - 1) * p as usize + 1];
            for (i, &c) in h.iter().enumerate() {
                t[i * p as usize] = c;
            }
            reduce_in_place(&mut t, m, p);
            t
        } else {
            let mut acc = vec![1u64];
            let mut base = h.to_vec();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_mod_poly(&acc, &base, m, p);
                }
                base = mul_mod_poly(&base, &base, m, p);
                e >>= 1;
            }
            acc
        }
    }

    /// Rabin's test: `x^{p^n} = x mod f` and `gcd(x^{p^{n/l}} - x, f) = 1`
    /// for each prime `l | n`.
    pub fn rabin_irreducible(f: &[u64], p: u64) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        let checkpoints: Vec<usize> = factor_u64(n as u64).into_iter().map(|(l, _)| n / l as usize).collect();
        let mut h = x.clone();
        for i in 1..=n {
            h = pth_power_mod(&h, f, p);
            if checkpoints.contains(&i) {
                let g = gcd(&sub(&h, &x, p), f, p);
                if g.len() != 1 {
                    return false;
                }
            }
        }
        sub(&h, &x, p).is_empty()
    }

    /// Ben-Or: no factor of degree `<= n/2`.
    pub fn ben_or_irreducible(f: &[u64], p: u64) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        if p == 2 {
            return gf2x::is_irreducible(&Gf2Poly::from_bits(f));
        }
        let x = vec![0u64, 1];
        let mut h = x.clone();
        for _ in 1..=n / 2 {
            h = pth_power_mod(&h, f, p);
            let g = gcd(&sub(&h, &x, p), f, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }

    /// Lexicographically least monic irreducible of degree `n` over `F_p`,
    /// comparing `(c_0, c_1, .., c_{n-1})` from the constant term upward.
    pub fn least_irreducible(p: u64, n: usize) -> Vec<u64> {
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        if n == 1 {
            return coeffs;
        }
        // c_0 = 0 is divisible by x.
        coeffs[0] = 1;
        loop {
            if ben_or_irreducible(&coeffs, p) {
                return coeffs;
            }
            // increment with c_{n-1} as the least significant digit
            let mut k = n - 1;
            loop {
                coeffs[k] += 1;
                if coeffs[k] < p {
                    break;
                }
                coeffs[k] = 0;
                assert!(k > 0, "an irreducible of every degree exists");
                k -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(FieldCtx::new(2, 1, None).unwrap().modulus(), [0, 1]);
        assert_eq!(FieldCtx::new(2, 2, None).unwrap().modulus(), [1, 1, 1]);
        assert_eq!(FieldCtx::new(3, 2, None).unwrap().modulus(), [1, 0, 1]);
        assert_eq!(FieldCtx::new(2, 3, None).unwrap().modulus(), [1, 0, 1, 1]);
        // deterministic
        let a = FieldCtx::new(5, 3, None).unwrap();
        let b = FieldCtx::new(5, 3, None).unwrap();
        assert_eq!(a.modulus(), b.modulus());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::new(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::NotIrreducible);
        assert_eq!(FieldCtx::new(3, 2, Some(&[1, 0, 0, 1])).unwrap_err(), Error::DegreeMismatch { expected: 2, found: 3 });
        assert!(matches!(FieldCtx::new(2, 2, Some(&[1, 1, 2])), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn f4_arithmetic() {
        let f = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let a = f.gen();
        let a_plus_1 = f.add(a, f.one());
        assert_eq!(f.mul(a, a), a_plus_1);
        assert_eq!(f.mul(a, f.one()), a);
        assert_eq!(f.frobenius(a, 1), a_plus_1);
        assert_eq!(f.frobenius(a, 2), a);
        assert_eq!(f.pth_root(a), a_plus_1);
        assert_eq!(f.mul(a_plus_1, a_plus_1), a);
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn f9_and_prime_fields() {
        let f9 = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let x = f9.gen();
        assert_eq!(f9.coeffs(f9.mul(x, x)), [2, 0]);
        let f2 = FieldCtx::prime(2).unwrap();
        for k in 0..5 {
            assert_eq!(f2.frobenius(f2.one(), k), f2.one());
        }
        assert_eq!(f2.pth_root(f2.one()), f2.one());
        assert_eq!(f2.pth_root(f2.zero()), f2.zero());
    }

    #[test]
    fn table_free_paths_agree() {
        // q = 2^20 and q = 101^3 skip the log tables
        for (p, r) in [(2u64, 20usize), (101, 3), (3, 13)] {
            let f = FieldCtx::new(p, r, None).unwrap();
            let a = f.elem_reduced(&[3, 1, 4, 1, 5, 9, 2, 6]);
            let b = f.elem_reduced(&[2, 7, 1, 8, 2, 8]);
            let ab = f.mul(a, b);
            assert_eq!(f.mul(ab, f.inv(b).unwrap()), a);
            assert_eq!(f.pow(a, f.q() - 1), f.one());
            let fr = f.frobenius(a, 1);
            assert_eq!(fr, f.pow(a, p));
            assert_eq!(f.pth_root(fr), a);
        }
    }

    #[test]
    fn tables_agree_with_schoolbook() {
        let f = FieldCtx::new(3, 4, None).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(11) {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            }
        }
    }
}
