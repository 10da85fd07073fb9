//! Additive polynomials `Σ a_i X^{p^i}` under composition, and their affine
//! shifts `A(X) + b`.
//!
//! Coefficients are indexed by the `p`-exponent: `coeffs[i]` multiplies
//! `X^{p^i}`. Frobenius twists of `F_q` coefficients reduce the exponent
//! modulo `R`, so composition of iterates with huge dense degree stays cheap.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ext::{ExtCtx, ExtElem};
use crate::field::{FieldCtx, FqElem};
use crate::poly::DensePoly;

/// Largest dense degree produced by [`AdditivePoly::to_dense`].
pub const MAX_DENSE_DEGREE: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq)]
pub struct AdditivePoly {
    field: FieldCtx,
    coeffs: Vec<FqElem>,
}

impl fmt::Debug for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, u64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.packed()))
            .collect();
        write!(f, "AdditivePoly{terms:?}")
    }
}

/// `A(X) + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoly {
    pub additive: AdditivePoly,
    pub shift: FqElem,
}

/// Classification of the forms `aX^{p^h}` and `aX^{p^h} + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exceptional {
    No,
    /// `aX^{p^h}`.
    Monomial { a: FqElem, h: usize },
    /// `aX^{p^h} + b` with `b != 0`.
    ShiftedMonomial { a: FqElem, h: usize, b: FqElem },
}

impl Exceptional {
    pub fn is_exceptional(self) -> bool {
        !matches!(self, Exceptional::No)
    }
}

impl AdditivePoly {
    pub fn new(field: &FieldCtx, mut coeffs: Vec<FqElem>) -> AdditivePoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AdditivePoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldCtx) -> AdditivePoly {
        Self::new(field, Vec::new())
    }

    /// The identity `X`.
    pub fn x(field: &FieldCtx) -> AdditivePoly {
        Self::new(field, vec![field.one()])
    }

    /// `c X^{p^i}`.
    pub fn monomial(field: &FieldCtx, c: FqElem, i: usize) -> AdditivePoly {
        let mut coeffs = vec![field.zero(); i + 1];
        coeffs[i] = c;
        Self::new(field, coeffs)
    }

    /// From `(p-exponent index, coefficient)` pairs.
    pub fn from_terms(field: &FieldCtx, terms: &[(usize, FqElem)]) -> AdditivePoly {
        let top = terms.iter().map(|t| t.0).max().map_or(0, |t| t + 1);
        let mut coeffs = vec![field.zero(); top];
        for &(i, c) in terms {
            coeffs[i] = field.add(coeffs[i], c);
        }
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `i` with `a_i != 0`.
    pub fn top(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least `i` with `a_i != 0`: the inseparability exponent `m`.
    pub fn low(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `d = top - low`, so the separable part has degree `p^d`.
    pub fn sep_degree_index(&self) -> Option<usize> {
        Some(self.top()? - self.low()?)
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &AdditivePoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &AdditivePoly) -> Result<AdditivePoly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn sub(&self, other: &AdditivePoly) -> Result<AdditivePoly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn scale(&self, c: FqElem) -> AdditivePoly {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// `X^{p^k} ∘ A`: coefficients raised to `p^k`, indices shifted by `k`.
    pub fn frobenius_shift(&self, k: usize) -> AdditivePoly {
        let f = &self.field;
        let mut coeffs = vec![f.zero(); k];
        coeffs.extend(self.coeffs.iter().map(|&a| f.frobenius(a, k as u64)));
        Self::new(f, coeffs)
    }

    /// Is the support on multiples of `R` (a `q`-linearized polynomial)?
    pub fn is_q_linearized(&self) -> bool {
        let r = self.field.degree();
        self.coeffs.iter().enumerate().all(|(i, c)| c.is_zero() || i % r == 0)
    }

    /// Reads a dense polynomial whose exponents are all powers of `p`.
    pub fn from_dense(f: &DensePoly) -> Result<AdditivePoly> {
        let field = f.field();
        let p = field.p() as usize;
        let mut coeffs = Vec::new();
        for (e, &c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (mut i, mut pe) = (0usize, 1usize);
            while pe < e {
                pe *= p;
                i += 1;
            }
            if e == 0 || pe != e {
                return Err(Error::NotAdditive { exponent: e });
            }
            if coeffs.len() <= i {
                coeffs.resize(i + 1, field.zero());
            }
            coeffs[i] = c;
        }
        Ok(Self::new(field, coeffs))
    }

    /// Dense degree `p^top`, if representable.
    pub fn dense_degree(&self) -> Option<u64> {
        let top = self.top()?;
        crate::arith::checked_pow(self.field.p(), top as u64)
    }

    pub fn to_dense(&self) -> Result<DensePoly> {
        let f = &self.field;
        let Some(deg) = self.dense_degree() else {
            if self.is_zero() {
                return Ok(DensePoly::zero(f));
            }
            return Err(Error::CapExceeded { what: "dense degree".into(), value: u64::MAX, cap: MAX_DENSE_DEGREE });
        };
        if deg > MAX_DENSE_DEGREE {
            return Err(Error::CapExceeded { what: "dense degree".into(), value: deg, cap: MAX_DENSE_DEGREE });
        }
        let mut coeffs = vec![f.zero(); deg as usize + 1];
        let mut e = 1usize;
        for &c in &self.coeffs {
            coeffs[e] = c;
            e *= f.p() as usize;
        }
        Ok(DensePoly::new(f, coeffs))
    }

    /// `L_f = Σ f_i X^{q^i}` for `f = Σ f_i x^i`.
    pub fn lin_associate(f: &DensePoly) -> AdditivePoly {
        let field = f.field();
        let r = field.degree();
        let terms: Vec<(usize, FqElem)> = f.coeffs().iter().enumerate().map(|(i, &c)| (r * i, c)).collect();
        Self::from_terms(field, &terms)
    }

    /// The polynomial `f` with `L_f = self`, when `self` is `q`-linearized.
    pub fn q_associate(&self) -> Option<DensePoly> {
        if !self.is_q_linearized() {
            return None;
        }
        let r = self.field.degree();
        let coeffs = self.coeffs.iter().step_by(r).copied().collect();
        Some(DensePoly::new(&self.field, coeffs))
    }

    /// `self ∘ other`: the coefficient of `X^{p^{i+j}}` collects `a_i b_j^{p^i}`.
    pub fn compose(&self, other: &AdditivePoly) -> Result<AdditivePoly> {
        self.check(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f));
        }
        let r = f.degree();
        // twisted copies of `other` for each residue of i mod R
        let twists: Vec<Vec<FqElem>> = (0..r.min(self.coeffs.len()))
            .map(|k| other.coeffs.iter().map(|&b| f.frobenius(b, k as u64)).collect())
            .collect();
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in twists[i % r].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Ok(Self::new(f, out))
    }

    /// `A^{(n)}` by binary powering under composition; `A^{(0)} = X`.
    pub fn iterate(&self, mut n: u64) -> AdditivePoly {
        let mut acc = Self::x(&self.field);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base).expect("same field");
            }
            n >>= 1;
            if n > 0 {
                base = base.compose(&base).expect("same field");
            }
        }
        acc
    }

    /// The map `z -> A(z)` restricted to `F_{q^s}`, as a polynomial of
    /// index below `R s`: indices fold mod `R s` since `z^{p^{Rs}} = z` there.
    pub fn fold(&self, s: usize) -> AdditivePoly {
        let f = &self.field;
        let k = f.degree() * s;
        let mut out = vec![f.zero(); k.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % k] = f.add(out[i % k], c);
        }
        Self::new(f, out)
    }

    /// Whether `z -> A(z)` is nilpotent on `F_{q^s}`, by repeated squaring of
    /// the folded map until the exponent reaches the dimension `R s`.
    pub fn is_nilpotent_on(&self, s: usize) -> bool {
        let dim = self.field.degree() * s;
        let mut g = self.fold(s);
        let mut e = 1usize;
        while !g.is_zero() && e < dim {
            g = g.compose(&g).expect("same field").fold(s);
            e *= 2;
        }
        g.is_zero()
    }

    /// Right division: `B = C ∘ A + Rm` with `top(Rm) < top(A)`.
    ///
    /// Each step cancels the top term `β X^{p^b}` of the running remainder
    /// with `c X^{p^{b-a}} ∘ A`, where `c = β / α^{p^{b-a}}` and `α` is the
    /// top coefficient of `A`.
    pub fn right_div(b: &AdditivePoly, a: &AdditivePoly) -> Result<(AdditivePoly, AdditivePoly)> {
        b.check(a)?;
        let f = &b.field;
        let ta = a.top().ok_or(Error::DivisionByZero)?;
        let alpha = a.coeffs[ta];
        let r = f.degree();
        // a twisted by p^k for each residue class of k mod R
        let twists: Vec<Vec<FqElem>> =
            (0..r).map(|k| a.coeffs.iter().map(|&x| f.frobenius(x, k as u64)).collect()).collect();
        let inv_alpha: Vec<FqElem> = twists.iter().map(|t| f.inv(t[ta]).expect("nonzero")).collect();
        debug_assert!(!alpha.is_zero());
        let mut rem = b.coeffs.clone();
        let mut quo = vec![f.zero(); rem.len().saturating_sub(ta)];
        for top in (ta..rem.len()).rev() {
            let beta = rem[top];
            if beta.is_zero() {
                continue;
            }
            let k = top - ta;
            let c = f.mul(beta, inv_alpha[k % r]);
            quo[k] = c;
            for (i, &x) in twists[k % r].iter().enumerate() {
                if !x.is_zero() {
                    rem[i + k] = f.sub(rem[i + k], f.mul(c, x));
                }
            }
            debug_assert!(rem[top].is_zero());
        }
        rem.truncate(ta);
        Ok((Self::new(f, quo), Self::new(f, rem)))
    }

    /// `(Ã, m)` with `A = Ã^{p^m}` and `Ã` separable.
    pub fn separable_part(&self) -> Result<(AdditivePoly, usize)> {
        let m = self.low().ok_or(Error::ZeroInput)?;
        let f = &self.field;
        let coeffs = self.coeffs[m..].iter().map(|&c| f.inv_frobenius(c, m as u64)).collect();
        Ok((Self::new(f, coeffs), m))
    }

    /// `S_{s,r} = X^{q^{s+r}} - X^{q^r}`.
    pub fn build_s(field: &FieldCtx, s: usize, r: usize) -> AdditivePoly {
        let rr = field.degree();
        Self::from_terms(field, &[(rr * r, field.from_int(-1)), (rr * (s + r), field.one())])
    }

    pub fn eval(&self, z: FqElem) -> FqElem {
        let f = &self.field;
        let mut acc = f.zero();
        let mut zp = z;
        for &c in &self.coeffs {
            acc = f.add(acc, f.mul(c, zp));
            zp = f.frobenius(zp, 1);
        }
        acc
    }

    /// Evaluation at an extension element using iterated Frobenius of the
    /// argument and embedded coefficients.
    pub fn eval_ext(&self, ext: &ExtCtx, z: &ExtElem) -> Result<ExtElem> {
        if &self.field != ext.base() {
            return Err(Error::ContextMismatch);
        }
        let mut acc = ext.zero();
        let mut zp = z.clone();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                zp = ext.frobenius(&zp);
            }
            if !c.is_zero() {
                acc = ext.add(&acc, &ext.mul(&ext.embed(c), &zp));
            }
        }
        Ok(acc)
    }
}

impl AffinePoly {
    pub fn new(additive: AdditivePoly, shift: FqElem) -> AffinePoly {
        AffinePoly { additive, shift }
    }

    pub fn additive(a: AdditivePoly) -> AffinePoly {
        let z = a.field().zero();
        AffinePoly { additive: a, shift: z }
    }

    pub fn field(&self) -> &FieldCtx {
        self.additive.field()
    }

    pub fn is_additive(&self) -> bool {
        self.shift.is_zero()
    }

    pub fn eval(&self, z: FqElem) -> FqElem {
        self.field().add(self.additive.eval(z), self.shift)
    }

    /// Reads `A(X) + b` from a dense polynomial.
    pub fn from_dense(f: &DensePoly) -> Result<AffinePoly> {
        let b = f.coeff(0);
        let mut coeffs = f.coeffs().to_vec();
        if let Some(c) = coeffs.first_mut() {
            *c = FqElem::ZERO;
        }
        let a = AdditivePoly::from_dense(&DensePoly::new(f.field(), coeffs))?;
        Ok(AffinePoly::new(a, b))
    }

    pub fn to_dense(&self) -> Result<DensePoly> {
        let d = self.additive.to_dense()?;
        Ok(d.add(&DensePoly::constant(self.field(), self.shift)))
    }

    /// `(A^{(n)}, β_n)` with `β_1 = b` and `β_{l+1} = A(β_l) + b`.
    pub fn iterate(&self, n: u64) -> (AdditivePoly, FqElem) {
        let f = self.field();
        let mut beta = f.zero();
        for _ in 0..n {
            beta = self.eval(beta);
        }
        (self.additive.iterate(n), beta)
    }

    pub fn classify(&self) -> Exceptional {
        let a = &self.additive;
        if a.weight() != 1 {
            return Exceptional::No;
        }
        let h = a.top().unwrap();
        let c = a.coeffs[h];
        if self.shift.is_zero() {
            Exceptional::Monomial { a: c, h }
        } else {
            Exceptional::ShiftedMonomial { a: c, h, b: self.shift }
        }
    }

    pub fn is_exceptional(&self) -> bool {
        self.classify().is_exceptional()
    }
}

/// Common roots of two affine polynomials `U + u` and `V + v`.
///
/// Euclid's algorithm on right remainders: if `U = C ∘ V + Rm`, then
/// `U + u` and `V + v` share roots exactly with `V + v` and
/// `Rm + (u - C(v))`. Returns `None` when there is no common root, else the
/// additive right gcd `G` (the common roots are a coset of `ker G`).
pub fn affine_gcd(
    u_poly: &AdditivePoly,
    u: FqElem,
    v_poly: &AdditivePoly,
    v: FqElem,
) -> Result<Option<AdditivePoly>> {
    let f = u_poly.field().clone();
    let (mut a, mut ac) = (u_poly.clone(), u);
    let (mut b, mut bc) = (v_poly.clone(), v);
    if a.top() < b.top() {
        core::mem::swap(&mut a, &mut b);
        core::mem::swap(&mut ac, &mut bc);
    }
    loop {
        if b.is_zero() {
            return Ok(if bc.is_zero() { Some(a) } else { None });
        }
        let (c, rm) = AdditivePoly::right_div(&a, &b)?;
        let rc = f.sub(ac, c.eval(bc));
        a = b;
        ac = bc;
        b = rm;
        bc = rc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldCtx {
        FieldCtx::prime(2).unwrap()
    }

    fn f4() -> FieldCtx {
        FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    fn ap(field: &FieldCtx, coeffs: &[u64]) -> AdditivePoly {
        AdditivePoly::new(field, coeffs.iter().map(|&c| field.from_packed(c).unwrap()).collect())
    }

    #[test]
    fn folded_nilpotency_matches_matrix() {
        use crate::linalg::matrix_of_map;
        let f = f4();
        // all additive polys of top <= 2 over F_4, on F_{4^s} for s = 1..=3
        for code in 0..64u64 {
            let a = ap(&f, &[code % 4, (code / 4) % 4, code / 16]);
            for s in 1..=3 {
                let ext = ExtCtx::new(&f, s).unwrap();
                let want = matrix_of_map(&a, &ext).unwrap().is_nilpotent().unwrap();
                assert_eq!(a.is_nilpotent_on(s), want, "{a:?} on s = {s}");
            }
        }
        // X^{p^{Rs}} acts as the identity
        assert_eq!(AdditivePoly::monomial(&f, f.one(), 6).fold(3), AdditivePoly::x(&f));
    }

    #[test]
    fn dense_round_trip() {
        let f = f4();
        let alpha = f.gen();
        let dense = DensePoly::from_terms(&f, &[(8, f.one()), (1, alpha)]);
        let a = AdditivePoly::from_dense(&dense).unwrap();
        assert_eq!(a, AdditivePoly::from_terms(&f, &[(0, alpha), (3, f.one())]));
        assert_eq!(a.to_dense().unwrap(), dense);
        assert_eq!(AdditivePoly::from_dense(&DensePoly::x(&f)).unwrap(), AdditivePoly::x(&f));
        let bad = DensePoly::from_ints(&f2(), &[1, 1, 1]);
        assert_eq!(AdditivePoly::from_dense(&bad), Err(Error::NotAdditive { exponent: 0 }));
        let bad = DensePoly::from_ints(&f2(), &[0, 1, 0, 1]);
        assert_eq!(AdditivePoly::from_dense(&bad), Err(Error::NotAdditive { exponent: 3 }));
    }

    #[test]
    fn lin_associate_examples() {
        let f = f2();
        let l = AdditivePoly::lin_associate(&DensePoly::from_ints(&f, &[1, 1, 1]));
        assert_eq!(l, ap(&f, &[1, 1, 1]));
        let f5 = FieldCtx::prime(5).unwrap();
        let l = AdditivePoly::lin_associate(&DensePoly::from_ints(&f5, &[-1, 1]));
        assert_eq!(l.to_dense().unwrap(), DensePoly::from_terms(&f5, &[(5, f5.one()), (1, f5.from_int(-1))]));
        let c = f4().gen();
        let l = AdditivePoly::lin_associate(&DensePoly::constant(&f4(), c));
        assert_eq!(l, AdditivePoly::monomial(&f4(), c, 0));
        // q-indexing over F_4: x -> X^4
        let l = AdditivePoly::lin_associate(&DensePoly::x(&f4()));
        assert_eq!(l.top(), Some(2));
    }

    #[test]
    fn compose_and_iterate() {
        let f = f2();
        let a = ap(&f, &[1, 1]);
        assert_eq!(a.compose(&a).unwrap(), ap(&f, &[1, 0, 1]));
        assert_eq!(a.iterate(2), ap(&f, &[1, 0, 1]));
        assert_eq!(a.iterate(0), AdditivePoly::x(&f));
        assert_eq!(a.compose(&AdditivePoly::x(&f)).unwrap(), a);
        let g = f4();
        let alpha = g.gen();
        let a = AdditivePoly::from_terms(&g, &[(0, alpha), (3, g.one())]);
        let a_star = AdditivePoly::from_terms(&g, &[(2, g.mul(alpha, alpha)), (5, g.one())]);
        assert_eq!(a_star.compose(&a).unwrap(), AdditivePoly::build_s(&g, 3, 1));
        assert_eq!(AdditivePoly::build_s(&g, 3, 1).dense_degree(), Some(256));
    }

    #[test]
    fn right_division_examples() {
        let f = f2();
        let b = ap(&f, &[1, 0, 1]);
        let a = ap(&f, &[1, 1]);
        let (c, rm) = AdditivePoly::right_div(&b, &a).unwrap();
        assert_eq!(c, a);
        assert!(rm.is_zero());
        let (c, rm) = AdditivePoly::right_div(&a, &a).unwrap();
        assert_eq!((c, rm.is_zero()), (AdditivePoly::x(&f), true));
        let g = f4();
        let alpha = g.gen();
        let a = AdditivePoly::from_terms(&g, &[(0, alpha), (3, g.one())]);
        let (c, rm) = AdditivePoly::right_div(&AdditivePoly::build_s(&g, 3, 1), &a).unwrap();
        assert!(rm.is_zero());
        assert_eq!(c, AdditivePoly::from_terms(&g, &[(2, g.mul(alpha, alpha)), (5, g.one())]));
        assert_eq!(AdditivePoly::right_div(&a, &AdditivePoly::zero(&g)), Err(Error::DivisionByZero));
    }

    #[test]
    fn separable_part_examples() {
        let f = f2();
        let (s, m) = ap(&f, &[0, 1, 1]).separable_part().unwrap();
        assert_eq!((s, m), (ap(&f, &[1, 1]), 1));
        let (s, m) = ap(&f, &[0, 0, 1]).separable_part().unwrap();
        assert_eq!((s, m), (AdditivePoly::x(&f), 2));
        assert_eq!(AdditivePoly::zero(&f).separable_part(), Err(Error::ZeroInput));
        // over F_4 the p-th roots of coefficients are genuine
        let g = f4();
        let a = AdditivePoly::from_terms(&g, &[(1, g.gen()), (2, g.one())]);
        let (s, m) = a.separable_part().unwrap();
        assert_eq!(m, 1);
        assert_eq!(s.frobenius_shift(1), a);
    }

    #[test]
    fn affine_iterate_and_classify() {
        let f = f2();
        let b = AffinePoly::new(ap(&f, &[1, 1]), f.one());
        assert_eq!(b.iterate(2), (ap(&f, &[1, 0, 1]), f.one()));
        assert_eq!(b.iterate(1), (ap(&f, &[1, 1]), f.one()));
        assert_eq!(b.classify(), Exceptional::No);
        let x4 = AffinePoly::additive(ap(&f, &[0, 0, 1]));
        assert_eq!(x4.classify(), Exceptional::Monomial { a: f.one(), h: 2 });
        let x2p1 = AffinePoly::new(ap(&f, &[0, 1]), f.one());
        assert_eq!(x2p1.classify(), Exceptional::ShiftedMonomial { a: f.one(), h: 1, b: f.one() });
    }

    #[test]
    fn affine_gcd_counts_roots() {
        // X^2 + X + 1 has no root in F_2: gcd with X^2 - X is inconsistent
        let f = f2();
        let s1 = AdditivePoly::build_s(&f, 1, 0);
        let a = ap(&f, &[1, 1]);
        assert_eq!(affine_gcd(&s1, f.zero(), &a, f.one()).unwrap(), None);
        // but both roots lie in F_4
        let s2 = AdditivePoly::build_s(&f, 2, 0);
        let g = affine_gcd(&s2, f.zero(), &a, f.one()).unwrap().unwrap();
        assert_eq!(g.top(), Some(1));
    }
}
