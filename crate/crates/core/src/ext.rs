//! Extensions `F_{q^s}` realised as `F_p[y]/(h)` with `deg h = R·s`.
//!
//! Elements are coordinate vectors over `F_p` in the power basis of `y`. The
//! base field embeds through the image of its generator, a root of the base
//! modulus inside the extension.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::arith::{mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::field::{fpx, FieldCtx, FqElem};
use crate::gf2x::Gf2Poly;
use crate::linalg::FpMatrix;
use crate::poly::DensePoly;

/// An element of an extension; coordinates have length `ExtCtx::dim()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElem(Vec<u64>);

impl ExtElem {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

struct Inner {
    base: FieldCtx,
    s: usize,
    p: u64,
    dim: usize,
    modulus: Vec<u64>,
    modulus2: Option<Gf2Poly>,
    /// Images of `a^k`, `0 <= k < R`.
    gen_powers: Vec<ExtElem>,
    frob: FpMatrix,
}

/// The field `F_{q^s}` over a base `F_q`. Cheap to clone.
#[derive(Clone)]
pub struct ExtCtx {
    inner: Arc<Inner>,
}

impl fmt::Debug for ExtCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtCtx(s={}, base={:?})", self.inner.s, self.inner.base)
    }
}

impl ExtCtx {
    /// Builds `F_{q^s}`. For `s = 1` the base modulus is reused, so the
    /// embedding is the identity; otherwise the modulus is the least monic
    /// irreducible of degree `R·s` over `F_p` and the generator goes to the
    /// least root of the base modulus.
    pub fn new(base: &FieldCtx, s: usize) -> Result<ExtCtx> {
        if s == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        let p = base.p();
        let r = base.degree();
        let dim = r * s;
        let modulus = if s == 1 { base.modulus().to_vec() } else { fpx::least_irreducible(p, dim) };
        let modulus2 = (p == 2).then(|| Gf2Poly::from_bits(&modulus));
        let frob = frobenius_matrix(p, &modulus);
        let mut inner = Inner { base: base.clone(), s, p, dim, modulus, modulus2, gen_powers: Vec::new(), frob };
        let gen_image = if s == 1 {
            let mut v = vec![0u64; dim];
            if dim == 1 {
                v[0] = base.gen().packed();
            } else {
                v[1] = 1;
            }
            ExtElem(v)
        } else if r == 1 {
            let mut v = vec![0u64; dim];
            v[0] = base.gen().packed();
            ExtElem(v)
        } else {
            least_root_of_base_modulus(&ExtCtx { inner: Arc::new(clone_inner(&inner)) })?
        };
        let mut gen_powers = Vec::with_capacity(r);
        let tmp = ExtCtx { inner: Arc::new(clone_inner(&inner)) };
        let mut acc = tmp.one();
        for _ in 0..r {
            gen_powers.push(acc.clone());
            acc = tmp.mul(&acc, &gen_image);
        }
        inner.gen_powers = gen_powers;
        Ok(ExtCtx { inner: Arc::new(inner) })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.inner.base
    }

    /// Degree `s` over the base field.
    pub fn degree(&self) -> usize {
        self.inner.s
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Dimension `R·s` over `F_p`.
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// Number of elements, `q^s`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.inner.p).pow(self.inner.dim as u32)
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem(vec![0; self.inner.dim])
    }

    pub fn one(&self) -> ExtElem {
        self.basis(0)
    }

    /// The basis element `y^j`.
    pub fn basis(&self, j: usize) -> ExtElem {
        let mut v = vec![0; self.inner.dim];
        v[j] = 1;
        ExtElem(v)
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<ExtElem> {
        if coords.len() != self.inner.dim {
            return Err(Error::DimensionMismatch { expected: self.inner.dim, found: coords.len() });
        }
        Ok(ExtElem(coords.iter().map(|c| c % self.inner.p).collect()))
    }

    /// Element with packed index `v` (base-`p` digits are the coordinates).
    pub fn from_index(&self, mut v: u64) -> ExtElem {
        let p = self.inner.p;
        let mut out = vec![0u64; self.inner.dim];
        for c in out.iter_mut() {
            *c = v % p;
            v /= p;
        }
        ExtElem(out)
    }

    /// Image of the base generator.
    pub fn embedded_gen(&self) -> ExtElem {
        match self.inner.gen_powers.get(1) {
            Some(g) => g.clone(),
            None => self.embed(self.inner.base.gen()),
        }
    }

    pub fn embed(&self, a: FqElem) -> ExtElem {
        let p = self.inner.p;
        let coeffs = self.inner.base.coeffs(a);
        let mut out = vec![0u64; self.inner.dim];
        for (k, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.inner.gen_powers[k].coords()) {
                *o = (*o + mul_mod(c, g, p)) % p;
            }
        }
        ExtElem(out)
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.inner.p;
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + y) % p).collect())
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.inner.p;
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + p - y) % p).collect())
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        let p = self.inner.p;
        ExtElem(a.0.iter().map(|&x| (p - x) % p).collect())
    }

    fn pad(&self, mut v: Vec<u64>) -> ExtElem {
        v.resize(self.inner.dim, 0);
        ExtElem(v)
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        if let Some(m2) = &self.inner.modulus2 {
            let prod = Gf2Poly::from_bits(&a.0).mul(&Gf2Poly::from_bits(&b.0)).rem(m2);
            return ExtElem(prod.to_bits(self.inner.dim));
        }
        let mut t = fpx::mul(&a.0, &b.0, self.inner.p);
        fpx::reduce_in_place(&mut t, &self.inner.modulus, self.inner.p);
        self.pad(t)
    }

    pub fn square(&self, a: &ExtElem) -> ExtElem {
        if let Some(m2) = &self.inner.modulus2 {
            return ExtElem(Gf2Poly::from_bits(&a.0).square().rem(m2).to_bits(self.inner.dim));
        }
        self.mul(a, a)
    }

    /// Multiplication by a scalar from `F_p`.
    pub fn scale(&self, a: &ExtElem, c: u64) -> ExtElem {
        let p = self.inner.p;
        ExtElem(a.0.iter().map(|&x| mul_mod(x, c % p, p)).collect())
    }

    pub fn mul_by_y(&self, a: &ExtElem) -> ExtElem {
        let p = self.inner.p;
        let dim = self.inner.dim;
        let top = a.0[dim - 1];
        let mut out = vec![0u64; dim];
        out[1..].copy_from_slice(&a.0[..dim - 1]);
        if top != 0 {
            for (k, &m) in self.inner.modulus[..dim].iter().enumerate() {
                if m != 0 {
                    out[k] = (out[k] + p - mul_mod(top, m, p)) % p;
                }
            }
        }
        ExtElem(out)
    }

    pub fn pow(&self, a: &ExtElem, e: &BigUint) -> ExtElem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.square(&acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn inv(&self, a: &ExtElem) -> Result<ExtElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.order() - 2u32;
        Ok(self.pow(a, &e))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        ExtElem(self.inner.frob.mul_vec(&a.0).expect("dimension matches"))
    }

    /// `a^{p^k}`.
    pub fn frobenius_k(&self, a: &ExtElem, k: usize) -> ExtElem {
        let k = k % self.inner.dim;
        let mut out = a.clone();
        for _ in 0..k {
            out = self.frobenius(&out);
        }
        out
    }

    /// Matrix over `F_p` of `z -> z^p` in the power basis.
    pub fn frobenius_matrix(&self) -> &FpMatrix {
        &self.inner.frob
    }

    /// Matrix over `F_p` of `z -> c·z`.
    pub fn mul_matrix(&self, c: &ExtElem) -> FpMatrix {
        let mut cols = Vec::with_capacity(self.inner.dim);
        let mut v = c.clone();
        for j in 0..self.inner.dim {
            if j > 0 {
                v = self.mul_by_y(&v);
            }
            cols.push(v.0.clone());
        }
        FpMatrix::from_columns(self.inner.p, self.inner.dim, &cols)
    }

    /// Evaluates a polynomial over the base field at `z` (Horner).
    pub fn eval_base_poly(&self, f: &[FqElem], z: &ExtElem) -> ExtElem {
        f.iter()
            .rev()
            .fold(self.zero(), |acc, &c| self.add(&self.mul(&acc, z), &self.embed(c)))
    }

    /// Lexicographic comparison key (coordinates from index 0 upward).
    fn lex_key(a: &ExtElem) -> &[u64] {
        &a.0
    }
}

fn clone_inner(inner: &Inner) -> Inner {
    Inner {
        base: inner.base.clone(),
        s: inner.s,
        p: inner.p,
        dim: inner.dim,
        modulus: inner.modulus.clone(),
        modulus2: inner.modulus2.clone(),
        gen_powers: inner.gen_powers.clone(),
        frob: inner.frob.clone(),
    }
}

/// Columns are `(y^j)^p = y^{jp}`, produced by repeated multiplication by `y`.
fn frobenius_matrix(p: u64, modulus: &[u64]) -> FpMatrix {
    let dim = modulus.len() - 1;
    let mut cols = Vec::with_capacity(dim);
    let mut v = vec![0u64; dim];
    v[0] = 1;
    let pu = p as usize;
    for k in 0..=(dim - 1) * pu {
        if k > 0 {
            let top = v[dim - 1];
            v.copy_within(0..dim - 1, 1);
            v[0] = 0;
            if top != 0 {
                for (i, &m) in modulus[..dim].iter().enumerate() {
                    if m != 0 {
                        v[i] = (v[i] + p - mul_mod(top, m, p)) % p;
                    }
                }
            }
        }
        if k % pu == 0 {
            cols.push(v.clone());
        }
    }
    FpMatrix::from_columns(p, dim, &cols)
}

/// A root of the base modulus `g` in the extension, least in coordinate order.
///
/// The copy of `F_q` inside the extension is the kernel of `Φ^R - I`. An
/// element `z` of it with minimal polynomial `m_z` of degree `R` identifies
/// `F_p[x]/(m_z)` with that copy; the roots of `g` are found there and mapped
/// back through `x -> z`.
fn least_root_of_base_modulus(ext: &ExtCtx) -> Result<ExtElem> {
    let base = ext.base();
    let p = base.p();
    let r = base.degree();
    let dim = ext.dim();
    let phi_r = ext.frobenius_matrix().pow(r as u64)?;
    let sub = phi_r.sub(&FpMatrix::identity(p, dim))?;
    let kernel = sub.kernel();
    debug_assert_eq!(kernel.len(), r);

    // Search combinations of the kernel basis for an element of degree R.
    let total = base.q();
    let mut found = None;
    for idx in 1..total.max(2) {
        let mut c = idx;
        let mut z = ext.zero();
        for b in &kernel {
            let k = c % p;
            c /= p;
            if k != 0 {
                z = ext.add(&z, &ext.scale(&ExtElem(b.clone()), k));
            }
        }
        if let Some(m) = minimal_polynomial(ext, &z, r) {
            found = Some((z, m));
            break;
        }
    }
    let (z, m_z) = found.ok_or_else(|| Error::Unsupported("no generator of the base copy".into()))?;
    let model = FieldCtx::from_verified(p, m_z);
    let g = DensePoly::new(&model, base.modulus().iter().map(|&c| model.from_int(c as i64)).collect());
    let mut z_pows = Vec::with_capacity(r);
    let mut acc = ext.one();
    for _ in 0..r {
        z_pows.push(acc.clone());
        acc = ext.mul(&acc, &z);
    }
    let mut best: Option<ExtElem> = None;
    for root in g.roots()? {
        let mut img = ext.zero();
        for (k, &c) in model.coeffs(root).iter().enumerate() {
            if c != 0 {
                img = ext.add(&img, &ext.scale(&z_pows[k], c));
            }
        }
        if best.as_ref().is_none_or(|b| ExtCtx::lex_key(&img) < ExtCtx::lex_key(b)) {
            best = Some(img);
        }
    }
    let root = best.ok_or(Error::NotIrreducible)?;
    debug_assert!({
        let mut val = ext.zero();
        for &c in base.modulus().iter().rev() {
            val = ext.add(&ext.mul(&val, &root), &ext.scale(&ext.one(), c));
        }
        val.is_zero()
    });
    Ok(root)
}

/// Monic minimal polynomial over `F_p` of `z` when it has degree exactly `deg`.
fn minimal_polynomial(ext: &ExtCtx, z: &ExtElem, deg: usize) -> Option<Vec<u64>> {
    let p = ext.p();
    let mut cols = Vec::with_capacity(deg + 1);
    let mut acc = ext.one();
    for _ in 0..=deg {
        cols.push(acc.0.clone());
        acc = ext.mul(&acc, z);
    }
    let m = FpMatrix::from_columns(p, ext.dim(), &cols[..deg]);
    if m.rank() < deg {
        return None;
    }
    let full = FpMatrix::from_columns(p, ext.dim(), &cols);
    let ker = full.kernel();
    let v = ker.first()?;
    let lead = v[deg];
    let inv = pow_mod(lead, p - 2, p);
    Some(v.iter().map(|&c| mul_mod(c, inv, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_embedding(base: &FieldCtx, s: usize) {
        let ext = ExtCtx::new(base, s).unwrap();
        // generator satisfies the base modulus
        let g = ext.embedded_gen();
        let mut val = ext.zero();
        for &c in base.modulus().iter().rev() {
            val = ext.add(&ext.mul(&val, &g), &ext.scale(&ext.one(), c));
        }
        assert!(val.is_zero());
        let elems: Vec<FqElem> = if base.q() <= 16 {
            base.elements().collect()
        } else {
            base.elements().step_by((base.q() / 13) as usize).collect()
        };
        for &a in &elems {
            for &b in &elems {
                assert_eq!(ext.embed(base.mul(a, b)), ext.mul(&ext.embed(a), &ext.embed(b)));
                assert_eq!(ext.embed(base.add(a, b)), ext.add(&ext.embed(a), &ext.embed(b)));
            }
        }
        assert_eq!(ext.embed(base.one()), ext.one());
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        let f4 = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let f9 = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let f8 = FieldCtx::new(2, 3, None).unwrap();
        let f2 = FieldCtx::prime(2).unwrap();
        let f5 = FieldCtx::prime(5).unwrap();
        for s in 1..=4 {
            check_embedding(&f4, s);
            check_embedding(&f9, s);
            check_embedding(&f2, s);
            check_embedding(&f5, s);
        }
        check_embedding(&f8, 2);
        check_embedding(&FieldCtx::new(2, 4, None).unwrap(), 3);
    }

    #[test]
    fn f64_over_f4() {
        let f4 = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let ext = ExtCtx::new(&f4, 3).unwrap();
        assert_eq!(ext.dim(), 6);
        let a = ext.embedded_gen();
        assert_eq!(ext.mul(&a, &a), ext.add(&a, &ext.one()));
        // embedding is deterministic
        let again = ExtCtx::new(&f4, 3).unwrap();
        assert_eq!(again.embedded_gen(), a);
    }

    #[test]
    fn identity_embedding_for_s_one() {
        let f4 = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let ext = ExtCtx::new(&f4, 1).unwrap();
        assert_eq!(ext.embedded_gen().coords(), [0, 1]);
        let f2 = FieldCtx::prime(2).unwrap();
        let e2 = ExtCtx::new(&f2, 2).unwrap();
        assert_eq!(e2.modulus(), [1, 1, 1]);
        assert_eq!(e2.embed(f2.one()), e2.one());
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        let f3 = FieldCtx::prime(3).unwrap();
        let ext = ExtCtx::new(&f3, 5).unwrap();
        let a = ext.from_index(17);
        let b = ext.from_index(101);
        let fa = ext.frobenius(&a);
        assert_eq!(fa, ext.pow(&a, &BigUint::from(3u32)));
        assert_eq!(ext.frobenius(&ext.mul(&a, &b)), ext.mul(&fa, &ext.frobenius(&b)));
        assert_eq!(ext.frobenius_k(&a, 5), a);
        let inv = ext.inv(&a).unwrap();
        assert_eq!(ext.mul(&a, &inv), ext.one());
    }
}
