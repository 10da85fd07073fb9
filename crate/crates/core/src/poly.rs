//! Dense univariate polynomials over `F_q`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::arith::{ceil_log_ratio, factor_biguint};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FqElem};

/// Default seed for equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0x1d2c_3b4a;

/// Default cap on the factor degree `d` for which `q^d - 1` is factored.
pub const DEFAULT_ORDER_DEGREE_CAP: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct DensePoly {
    field: FieldCtx,
    coeffs: Vec<FqElem>,
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let packed: Vec<u64> = self.coeffs.iter().map(|c| c.packed()).collect();
        write!(f, "DensePoly{packed:?}")
    }
}

/// `unit · Π factor^multiplicity`, factors monic irreducible and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FqElem,
    pub factors: Vec<(DensePoly, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: &FieldCtx) -> DensePoly {
        let mut acc = DensePoly::constant(field, self.unit);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Squarefree structure: `f0` is the product of the distinct monic
/// irreducible factors, `e` the largest multiplicity, and `profile` lists
/// `(g_k, k)` with `f = lc · Π g_k^k`, each `g_k` squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub f0: DensePoly,
    pub e: usize,
    pub profile: Vec<(DensePoly, usize)>,
}

impl DensePoly {
    pub fn new(field: &FieldCtx, mut coeffs: Vec<FqElem>) -> DensePoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldCtx) -> DensePoly {
        DensePoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldCtx) -> DensePoly {
        Self::constant(field, field.one())
    }

    pub fn x(field: &FieldCtx) -> DensePoly {
        Self::monomial(field, field.one(), 1)
    }

    pub fn constant(field: &FieldCtx, c: FqElem) -> DensePoly {
        Self::new(field, vec![c])
    }

    pub fn monomial(field: &FieldCtx, c: FqElem, k: usize) -> DensePoly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    /// Polynomial with integer coefficients mapped into `F_p ⊂ F_q`.
    pub fn from_ints(field: &FieldCtx, coeffs: &[i64]) -> DensePoly {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// Sparse constructor from `(exponent, coefficient)` pairs.
    pub fn from_terms(field: &FieldCtx, terms: &[(usize, FqElem)]) -> DensePoly {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![field.zero(); deg + 1];
        for &(k, c) in terms {
            coeffs[k] = field.add(coeffs[k], c);
        }
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FqElem {
        self.coeffs.get(k).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    fn check(&self, other: &DensePoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, coeffs)
    }

    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, coeffs)
    }

    pub fn neg(&self) -> DensePoly {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: FqElem) -> DensePoly {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Self::new(f, out)
    }

    pub fn monic(&self) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    /// Quotient and remainder. The reduction loop visits only the nonzero
    /// terms of the divisor, which keeps sparse divisors cheap.
    pub fn divmod(&self, divisor: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        self.check(divisor)?;
        let f = &self.field;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let inv = f.inv(divisor.lead())?;
        let support: Vec<(usize, FqElem)> = divisor.coeffs[..dd]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (k, c))
            .collect();
        let mut r = self.coeffs.clone();
        let mut quo = vec![f.zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = r[top];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv);
            quo[top - dd] = t;
            r[top] = f.zero();
            for &(k, m) in &support {
                let idx = top - dd + k;
                r[idx] = f.sub(r[idx], f.mul(t, m));
            }
        }
        r.truncate(dd);
        Ok((Self::new(f, quo), Self::new(f, r)))
    }

    pub fn rem(&self, divisor: &DensePoly) -> Result<DensePoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Remainder without building the quotient; same sparse-aware loop.
    fn rem_into(&self, r: &mut Vec<FqElem>, divisor_support: &[(usize, FqElem)], dd: usize, inv_lead: FqElem) {
        let f = &self.field;
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv_lead);
            for &(k, m) in divisor_support {
                let idx = top - dd + k;
                r[idx] = f.sub(r[idx], f.mul(t, m));
            }
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check(other)?;
        let mut a = self.monic();
        let mut b = other.monic();
        if a.coeffs.len() < b.coeffs.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    pub fn derivative(&self) -> DensePoly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.p()) as i64)))
            .collect();
        Self::new(f, coeffs)
    }

    pub fn eval(&self, x: FqElem) -> FqElem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self(g)` by Horner's rule.
    pub fn compose(&self, g: &DensePoly) -> Result<DensePoly> {
        self.check(g)?;
        let f = &self.field;
        let mut acc = Self::zero(f);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(f, c));
        }
        Ok(acc)
    }

    pub fn mul_mod(&self, other: &DensePoly, m: &DensePoly) -> Result<DensePoly> {
        self.mul(other).rem(m)
    }

    pub fn pow_mod(&self, e: &BigUint, m: &DensePoly) -> Result<DensePoly> {
        let mut acc = Self::one(&self.field).rem(m)?;
        let base = self.rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m)?;
            if e.bit(i) {
                acc = acc.mul_mod(&base, m)?;
            }
        }
        Ok(acc)
    }

    /// `h^q mod m` for `h` already reduced mod `m`: coefficients are fixed by
    /// the `q`-power map, so only exponents are spread.
    pub fn qth_power_mod(&self, m: &DensePoly) -> Result<DensePoly> {
        let q = self.field.q();
        let f = &self.field;
        let dd = m.degree().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let spread_len = (self.coeffs.len() - 1) as u128 * q as u128 + 1;
        if spread_len > 64 * (dd as u128 + 1) * (dd as u128 + 1) {
            return self.pow_mod(&BigUint::from(q), m);
        }
        let mut r = vec![f.zero(); spread_len as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            r[i * q as usize] = c;
        }
        let support = support_of(m);
        let inv = f.inv(m.lead())?;
        self.rem_into(&mut r, &support, dd, inv);
        Ok(Self::new(f, r))
    }

    /// `X^{q^s} mod self`, by `s` successive `q`-th powers.
    pub fn modexp_frobenius(&self, s: u64) -> Result<DensePoly> {
        if self.is_constant() {
            return Err(Error::ConstantModulus);
        }
        let mut h = Self::x(&self.field).rem(self)?;
        for _ in 0..s {
            h = h.qth_power_mod(self)?;
        }
        Ok(h)
    }

    /// Coefficient-wise `p`-th root of a polynomial in `X^p`.
    fn pth_root_poly(&self) -> DensePoly {
        let f = &self.field;
        let p = f.p() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Self::new(f, coeffs)
    }

    /// Squarefree decomposition (Yun's algorithm with the characteristic-`p`
    /// branch for vanishing derivatives).
    pub fn squarefree_decompose(&self) -> Result<SquarefreeDecomposition> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let mut profile = Vec::new();
        self.sqf_rec(&self.monic(), 1, &mut profile)?;
        profile.sort_by_key(|(_, k)| *k);
        // merge equal multiplicities coming from different branches
        let mut merged: Vec<(DensePoly, usize)> = Vec::new();
        for (g, k) in profile {
            match merged.last_mut() {
                Some((h, j)) if *j == k => *h = h.mul(&g),
                _ => merged.push((g, k)),
            }
        }
        let f0 = merged.iter().fold(Self::one(&self.field), |acc, (g, _)| acc.mul(g));
        let e = merged.last().map_or(1, |(_, k)| *k);
        Ok(SquarefreeDecomposition { f0, e, profile: merged })
    }

    fn sqf_rec(&self, f: &DensePoly, mult: usize, out: &mut Vec<(DensePoly, usize)>) -> Result<()> {
        if f.is_constant() {
            return Ok(());
        }
        let p = self.field.p() as usize;
        let d = f.derivative();
        if d.is_zero() {
            return self.sqf_rec(&f.pth_root_poly(), mult * p, out);
        }
        let mut c = f.gcd(&d)?;
        let mut w = f.divmod(&c)?.0;
        let mut i = 1;
        while !w.is_constant() {
            let y = w.gcd(&c)?;
            let z = w.divmod(&y)?.0;
            if !z.is_constant() {
                out.push((z.monic(), i * mult));
            }
            i += 1;
            w = y;
            c = c.divmod(&w)?.0;
        }
        if !c.is_constant() {
            // what is left is a p-th power
            self.sqf_rec(&c.pth_root_poly(), mult * p, out)?;
        }
        Ok(())
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(d, product of the irreducible factors of degree d)`.
    pub fn distinct_degree(&self) -> Result<Vec<(usize, DensePoly)>> {
        let f = &self.field;
        let mut rest = self.monic();
        let mut out = Vec::new();
        let x = Self::x(f);
        let mut h = x.rem(&rest)?;
        let mut d = 0;
        while let Some(deg) = rest.degree() {
            if deg == 0 {
                break;
            }
            d += 1;
            if 2 * d > deg {
                out.push((deg, rest.clone()));
                break;
            }
            h = h.qth_power_mod(&rest)?;
            let g = h.sub(&x).gcd(&rest)?;
            if !g.is_one() {
                rest = rest.divmod(&g)?.0;
                h = h.rem(&rest)?;
                out.push((d, g));
            }
        }
        Ok(out)
    }

    /// Splits a monic squarefree product of irreducibles of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<DensePoly>> {
        let n = self.degree().ok_or(Error::ZeroInput)?;
        if n == d {
            return Ok(vec![self.monic()]);
        }
        let f = &self.field;
        let q = BigUint::from(f.q());
        loop {
            let r: Vec<FqElem> = (0..n).map(|_| f.from_packed(rng.next_u64() % f.q()).unwrap()).collect();
            let a = Self::new(f, r);
            if a.is_constant() {
                continue;
            }
            let b = if f.p() == 2 {
                // absolute trace from F_{q^d} down to F_2
                let steps = f.degree() * d;
                let mut t = a.rem(self)?;
                let mut acc = t.clone();
                for _ in 1..steps {
                    t = t.mul_mod(&t, self)?;
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (q.pow(d as u32) - 1u32) / 2u32;
                a.pow_mod(&e, self)?.sub(&Self::one(f))
            };
            let g = b.gcd(self)?;
            if g.is_one() || g.degree() == self.degree() {
                continue;
            }
            let other = self.divmod(&g)?.0;
            let mut out = g.equal_degree(d, rng)?;
            out.extend(other.equal_degree(d, rng)?);
            return Ok(out);
        }
    }

    /// Complete factorization, verified by re-multiplication.
    pub fn factorize(&self) -> Result<Factorization> {
        self.factorize_seeded(DEFAULT_SEED)
    }

    pub fn factorize_seeded(&self, seed: u64) -> Result<Factorization> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sqf = self.squarefree_decompose()?;
        let mut factors = Vec::new();
        for (g, k) in &sqf.profile {
            for (d, prod) in g.distinct_degree()? {
                for irr in prod.equal_degree(d, &mut rng)? {
                    factors.push((irr, *k));
                }
            }
        }
        factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)));
        let out = Factorization { unit: self.lead(), factors };
        assert_eq!(out.expand(&self.field), *self, "factorization round trip");
        Ok(out)
    }

    /// All roots in `F_q`, sorted by packed value.
    pub fn roots(&self) -> Result<Vec<FqElem>> {
        let fac = self.factorize()?;
        let f = &self.field;
        let mut out: Vec<FqElem> = fac
            .factors
            .iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, _)| f.neg(g.coeff(0)))
            .collect();
        out.sort();
        Ok(out)
    }

    /// `ord(g)`: least `i >= 1` with `g | X^i - 1`.
    pub fn order(&self) -> Result<BigUint> {
        self.order_capped(DEFAULT_ORDER_DEGREE_CAP)
    }

    pub fn order_capped(&self, degree_cap: usize) -> Result<BigUint> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        if self.coeff(0).is_zero() {
            return Err(Error::RootAtZero);
        }
        let fac = self.factorize()?;
        let f = &self.field;
        let p = f.p();
        let mut total = BigUint::one();
        for (h, mu) in &fac.factors {
            let d = h.degree().unwrap();
            if d > degree_cap {
                return Err(Error::CapExceeded {
                    what: "factor degree for ord".into(),
                    value: d as u64,
                    cap: degree_cap as u64,
                });
            }
            let mut ord = BigUint::from(f.q()).pow(d as u32) - 1u32;
            let x = Self::x(f);
            let one = Self::one(f);
            for (l, _) in factor_biguint(&ord.clone()) {
                while (&ord % &l).is_zero() {
                    let cand = &ord / &l;
                    if x.pow_mod(&cand, h)? == one {
                        ord = cand;
                    } else {
                        break;
                    }
                }
            }
            let mu64 = *mu as u64;
            let pk = BigUint::from(p).pow(ceil_log_ratio(p, mu64, 1));
            total = total.lcm(&(ord * pk));
        }
        Ok(total)
    }
}

fn support_of(m: &DensePoly) -> Vec<(usize, FqElem)> {
    let dd = m.coeffs.len() - 1;
    m.coeffs[..dd]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, &c)| (k, c))
        .collect()
}

/// Canonical ordering: by degree, then coefficients from the top down.
fn poly_key(f: &DensePoly) -> (usize, Vec<u64>) {
    (f.coeffs.len(), f.coeffs.iter().rev().map(|c| c.packed()).collect())
}

/// Number of irreducible factors of each degree of a monic squarefree `f`
/// whose factor degrees all divide `s`: distinct-degree splitting restricted
/// to the divisors of `s`, with `X^{q^e} mod f` advanced one `q`-th power at
/// a time. Fails if anything is left over, i.e. if some factor degree does
/// not divide `s`.
pub fn factor_degrees_dividing(f: &DensePoly, s: u64) -> Result<Vec<(u64, u64)>> {
    let field = f.field().clone();
    let mut rest = f.monic();
    let x = DensePoly::x(&field);
    let mut h = x.rem(f)?;
    let mut out = Vec::new();
    let divs = crate::arith::divisors(s);
    let mut e_done = 0u64;
    for &e in &divs {
        while e_done < e {
            h = h.qth_power_mod(f)?;
            e_done += 1;
        }
        if rest.is_constant() {
            break;
        }
        let g = h.rem(&rest)?.sub(&x).gcd(&rest)?;
        if g.is_one() {
            continue;
        }
        let deg = g.degree().unwrap() as u64;
        if deg % e != 0 {
            return Err(Error::Unsupported(alloc::format!("factor degree product {deg} not divisible by {e}")));
        }
        out.push((e, deg / e));
        rest = rest.divmod(&g)?.0;
    }
    if !rest.is_constant() {
        return Err(Error::Unsupported(alloc::format!(
            "factors of degree not dividing {s} remain"
        )));
    }
    Ok(out)
}

/// `true` iff `f` is irreducible (via the factorization).
pub fn is_irreducible(f: &DensePoly) -> Result<bool> {
    let fac = f.factorize()?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Converts a big order to `u64` when it fits.
pub fn order_u64(o: &BigUint) -> Option<u64> {
    o.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldCtx {
        FieldCtx::prime(2).unwrap()
    }

    fn p2(bits: &[i64]) -> DensePoly {
        DensePoly::from_ints(&f2(), bits)
    }

    #[test]
    fn arithmetic_examples() {
        // gcd(X^2+X, X) = X
        assert_eq!(p2(&[0, 1, 1]).gcd(&p2(&[0, 1])).unwrap(), p2(&[0, 1]));
        let (q, r) = p2(&[0, 1, 0, 0, 1]).divmod(&p2(&[0, 1, 1])).unwrap();
        assert_eq!(q, p2(&[1, 1, 1]));
        assert!(r.is_zero());
        let f = DensePoly::from_ints(&FieldCtx::prime(3).unwrap(), &[2, 0, 2]);
        assert_eq!(f.gcd(&DensePoly::zero(f.field())).unwrap(), f.monic());
        assert_eq!(p2(&[1]).divmod(&DensePoly::zero(&f2())), Err(Error::DivisionByZero));
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        assert_eq!(p2(&[1, 1]).gcd(&DensePoly::one(&f4)), Err(Error::ContextMismatch));
    }

    #[test]
    fn modexp_examples() {
        let f = p2(&[1, 1, 1]);
        assert_eq!(f.modexp_frobenius(2).unwrap(), DensePoly::x(&f2()));
        assert_eq!(f.modexp_frobenius(1).unwrap(), p2(&[1, 1]));
        assert!(p2(&[0, 1]).modexp_frobenius(1).unwrap().is_zero());
        assert_eq!(p2(&[1]).modexp_frobenius(1), Err(Error::ConstantModulus));
    }

    #[test]
    fn squarefree_examples() {
        // (x+1)^2 (x^2+x+1) = x^4 + x^3 + x + 1
        let f = p2(&[1, 1, 0, 1, 1]);
        let sqf = f.squarefree_decompose().unwrap();
        assert_eq!(sqf.f0, p2(&[1, 0, 0, 1]));
        assert_eq!(sqf.e, 2);
        let g = p2(&[1, 1, 1]);
        let sqf = g.squarefree_decompose().unwrap();
        assert_eq!((sqf.f0, sqf.e), (g.clone(), 1));
        // g^p
        let sqf = g.mul(&g).squarefree_decompose().unwrap();
        assert_eq!((sqf.f0, sqf.e), (g, 2));
        // mixed p-th power branch over F_3: (x+1)^3 (x+2)
        let f3 = FieldCtx::prime(3).unwrap();
        let a = DensePoly::from_ints(&f3, &[1, 1]);
        let b = DensePoly::from_ints(&f3, &[2, 1]);
        let f = a.mul(&a).mul(&a).mul(&b);
        let sqf = f.squarefree_decompose().unwrap();
        assert_eq!(sqf.e, 3);
        assert_eq!(sqf.f0, a.mul(&b));
    }

    #[test]
    fn factorize_examples() {
        let fac = p2(&[0, 1, 1]).factorize().unwrap();
        assert_eq!(fac.factors, vec![(p2(&[0, 1]), 1), (p2(&[1, 1]), 1)]);
        let fac = p2(&[1, 1, 1]).factorize().unwrap();
        assert_eq!(fac.factors, vec![(p2(&[1, 1, 1]), 1)]);
        let fac = p2(&[0, 1, 0, 0, 1]).factorize().unwrap();
        assert_eq!(fac.factors, vec![(p2(&[0, 1]), 1), (p2(&[1, 1]), 1), (p2(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn factorize_odd_and_extension_fields() {
        let f9 = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        // X^9 - X splits into the 9 linear factors over F_9
        let mut c = vec![f9.zero(); 10];
        c[9] = f9.one();
        c[1] = f9.from_int(-1);
        let f = DensePoly::new(&f9, c);
        let fac = f.factorize().unwrap();
        assert_eq!(fac.factors.len(), 9);
        assert_eq!(f.roots().unwrap().len(), 9);
        let f5 = FieldCtx::prime(5).unwrap();
        let g = DensePoly::from_ints(&f5, &[2, 0, 0, 1, 0, 3, 1]);
        let fac = g.factorize().unwrap();
        assert_eq!(fac.expand(&f5), g);
    }

    #[test]
    fn order_examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(DensePoly::from_ints(&f3, &[-1, 1]).order().unwrap(), BigUint::from(1u32));
        assert_eq!(p2(&[1, 1, 1]).order().unwrap(), BigUint::from(3u32));
        assert_eq!(p2(&[1, 0, 1]).order().unwrap(), BigUint::from(2u32));
        assert_eq!(p2(&[0, 1]).order(), Err(Error::RootAtZero));
        assert_eq!(p2(&[1]).order(), Err(Error::ConstantInput));
    }

    #[test]
    fn restricted_ddf_counts() {
        // X^4 + X = X (X+1) (X^2+X+1): degrees 1,1,2 all divide 2
        let f = p2(&[0, 1, 0, 0, 1]);
        assert_eq!(factor_degrees_dividing(&f, 2).unwrap(), vec![(1, 2), (2, 1)]);
        assert!(factor_degrees_dividing(&f, 1).is_err());
    }
}
