//! Bit-packed polynomials over F_2 (bit `i` of the word vector is the
//! coefficient of `x^i`). Used for the `p = 2` fast paths of extension fields.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn x() -> Self {
        Gf2Poly { words: vec![2] }
    }

    pub fn from_bits(bits: &[u64]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut out = Gf2Poly { words };
        out.trim();
        out
    }

    pub fn to_bits(&self, len: usize) -> Vec<u64> {
        (0..len).map(|i| self.bit(i) as u64).collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut out = Gf2Poly { words };
        out.trim();
        out
    }

    /// `self ^= other << shift`.
    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        if other.is_zero() {
            return;
        }
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        let need = other.words.len() + word_shift + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + word_shift] ^= w << bit_shift;
            if bit_shift != 0 {
                self.words[i + word_shift + 1] ^= w >> (64 - bit_shift);
            }
        }
        self.trim();
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut words = vec![0u64; self.words.len() + other.words.len() + 1];
        for (i, &a) in self.words.iter().enumerate() {
            let mut a = a;
            let mut bit = 0;
            while a != 0 {
                let tz = a.trailing_zeros() as usize;
                bit += tz;
                a >>= tz;
                let shift = i * 64 + bit;
                let ws = shift / 64;
                let bs = shift % 64;
                for (j, &b) in other.words.iter().enumerate() {
                    words[ws + j] ^= b << bs;
                    if bs != 0 {
                        words[ws + j + 1] ^= b >> (64 - bs);
                    }
                }
                a >>= 1;
                bit += 1;
            }
        }
        let mut out = Gf2Poly { words };
        out.trim();
        out
    }

    pub fn square(&self) -> Self {
        let mut words = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            words[2 * i] = spread(w as u32);
            words[2 * i + 1] = spread((w >> 32) as u32);
        }
        let mut out = Gf2Poly { words };
        out.trim();
        out
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        let md = modulus.degree().expect("nonzero modulus");
        let mut r = self.clone();
        while let Some(d) = r.degree() {
            if d < md {
                break;
            }
            r.xor_shifted(modulus, d - md);
        }
        r
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

#[inline]
fn spread(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// Ben-Or irreducibility test over F_2.
pub(crate) fn is_irreducible(f: &Gf2Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if !f.bit(0) {
        return false;
    }
    let x = Gf2Poly::x();
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.square().rem(f);
        let g = h.add(&x).gcd(f);
        if !g.is_one() {
            return false;
        }
    }
    true
}
