//! Splitting degrees `s_F(n)` of iterates, the companion certificate and the
//! closed formulas.
//!
//! Three routes compute `s_F(n)`:
//!
//! - dense: `X^{q^j} mod f` for the dense separable part `f` of `F^{(n)}`,
//!   while its degree is below the dense cap;
//! - linearized: the same Frobenius powers reduced by right division in the
//!   additive ring, so the cost depends on `d·n`, not on `p^{dn}`;
//! - matrix: kernel dimensions of `T^n`, `T` the `F_p`-matrix of `z -> A(z)`
//!   on `F_{q^j}`, over the candidates `s_F(1)·p^i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_rational::Ratio;

use crate::additive::{AdditivePoly, AffinePoly, Exceptional};
use crate::arith::ceil_log_ratio;
use crate::error::{Error, Result};
use crate::ext::ExtCtx;
use crate::field::{FieldCtx, FqElem};
use crate::linalg::{matrix_of_map, FpMatrix};
use crate::poly::DensePoly;

/// Which route computes `s_F(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// `X^{q^j}` modulo the dense separable part; fails beyond the dense cap.
    Modexp,
    /// Kernel dimensions of matrices over `F_p`.
    Matrix,
    /// Dense up to the dense cap, linearized beyond it.
    Auto,
}

/// The route that actually produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Dense,
    Linearized,
    Matrix,
    /// `aX^{p^h} (+ b)`: every iterate splits over `F_q`.
    Exceptional,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest splitting degree searched before giving up.
    pub search_cap: u64,
    /// Largest dense degree handled by the dense route.
    pub dense_cap: u64,
    /// Largest extension dimension `R·s` over `F_p` for matrix work.
    pub matrix_cap: usize,
    /// Largest `q^n` for which orbits are enumerated.
    pub orbit_cap: u64,
    /// Largest dense degree `p^{dn}` accepted by the factorization oracle.
    pub oracle_cap: u64,
    /// Largest factor degree whose `q^d - 1` is factored for `ord`.
    pub order_degree_cap: usize,
    /// Largest `n` scanned when bracketing `c_A` in the nilpotent case.
    pub bracket_n_max: u64,
    pub seed: u64,
}

/// Above this dimension over `F_p` the nilpotency of `A_*` is decided in the
/// additive ring instead of by a matrix.
const NILPOTENT_MATRIX_DIM: usize = 128;

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            search_cap: 1_000_000,
            dense_cap: 1 << 14,
            matrix_cap: 4096,
            orbit_cap: 1 << 12,
            oracle_cap: 1 << 12,
            order_degree_cap: crate::poly::DEFAULT_ORDER_DEGREE_CAP,
            bracket_n_max: 64,
            seed: crate::poly::DEFAULT_SEED,
        }
    }
}

/// Computation context for one base field: configuration plus a cache of
/// extension fields.
pub struct Engine {
    field: FieldCtx,
    config: EngineConfig,
    exts: RefCell<BTreeMap<usize, ExtCtx>>,
}

/// One row of a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitEntry {
    pub n: u64,
    pub s: u64,
    pub ratio: Ratio<u64>,
    /// `i` with `s = s_F(1)·p^i`, if `s` is on that ladder.
    pub ladder: Option<u32>,
    pub route: Route,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    pub poly: AffinePoly,
    pub entries: Vec<SplitEntry>,
    pub min_ratio: Ratio<u64>,
    pub max_ratio: Ratio<u64>,
    /// Failed structural checks (ladder, divisibility, `s(np) ∈ {s(n), p·s(n)}`).
    pub violations: Vec<String>,
}

/// What is known about `c_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CStatus {
    /// `c_A = M / s_0`.
    Exact(Ratio<u64>),
    /// Nilpotent case: `lower <= c_A <= upper`, with `upper` the last
    /// computed `s(s_i)/s_i`; convergence is not established.
    Bracket { lower: Ratio<u64>, upper: Ratio<u64>, n_max: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionCertificate {
    /// `M = s_A(1)`.
    pub m_split: u64,
    pub s0: u64,
    pub r: u64,
    pub a_star: AdditivePoly,
    /// `R` with `A_* = R^q`.
    pub witness: AdditivePoly,
    pub nilpotent: bool,
    pub c_a: CStatus,
    pub formula_valid: bool,
    pub p: u64,
}

impl CompanionCertificate {
    /// `s_A(n) = M p^{⌈log_p(n/s_0)⌉}` for `n > s_0`, and `M` for `n <= s_0`.
    pub fn closed_formula(&self, n: u64) -> Result<u64> {
        if !self.formula_valid {
            return Err(Error::FormulaNotValid);
        }
        if n <= self.s0 {
            return Ok(self.m_split);
        }
        let i = ceil_log_ratio(self.p, n, self.s0);
        self.m_split
            .checked_mul(self.p.checked_pow(i).ok_or_else(|| Error::Unsupported("overflow".into()))?)
            .ok_or_else(|| Error::Unsupported("overflow".into()))
    }
}

/// Data of the `q`-linearized closed formula for `A = L_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedFormula {
    pub f: DensePoly,
    /// `k` with `f = x^k F`, `x ∤ F`.
    pub stripped: usize,
    pub f0: DensePoly,
    /// `E = ord(f_0)`.
    pub order: u64,
    pub e: u64,
    pub c_a: u64,
    pub p: u64,
}

impl LinearizedFormula {
    /// `E · p^{⌈log_p(n e)⌉}`.
    pub fn predict(&self, n: u64) -> u64 {
        self.order * self.p.pow(ceil_log_ratio(self.p, n * self.e, 1))
    }
}

/// `(Ã_n, c_n)` with `F^{(n)} = (Ã_n + c_n)^{p^{m n}}`.
pub fn separable_iterate(f: &AffinePoly, n: u64) -> Result<(AdditivePoly, FqElem)> {
    let (a_n, beta) = f.iterate(n);
    let (sep, m) = a_n.separable_part()?;
    let c = f.field().inv_frobenius(beta, m as u64);
    Ok((sep, c))
}

impl Engine {
    pub fn new(field: &FieldCtx, config: EngineConfig) -> Engine {
        Engine { field: field.clone(), config, exts: RefCell::new(BTreeMap::new()) }
    }

    pub fn with_defaults(field: &FieldCtx) -> Engine {
        Self::new(field, EngineConfig::default())
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// `F_{q^s}`, built once and cached.
    pub fn ext(&self, s: usize) -> Result<ExtCtx> {
        if let Some(e) = self.exts.borrow().get(&s) {
            return Ok(e.clone());
        }
        let dim = s * self.field.degree();
        if dim > self.config.matrix_cap {
            return Err(Error::CapExceeded {
                what: "extension dimension".into(),
                value: dim as u64,
                cap: self.config.matrix_cap as u64,
            });
        }
        let e = ExtCtx::new(&self.field, s)?;
        self.exts.borrow_mut().insert(s, e.clone());
        Ok(e)
    }

    fn check_field(&self, f: &FieldCtx) -> Result<()> {
        if f == &self.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn cap_error(&self, what: &str) -> Error {
        Error::CapExceeded { what: what.into(), value: self.config.search_cap + 1, cap: self.config.search_cap }
    }

    /// Does `A` split completely over `F_{q^j}`? True iff the separable part
    /// divides `X^{q^j} - X`, decided by right division.
    pub fn splits_in(&self, a: &AdditivePoly, j: u64) -> Result<bool> {
        self.check_field(a.field())?;
        let (sep, _) = a.separable_part()?;
        if sep.top() == Some(0) {
            return Ok(true);
        }
        let s = AdditivePoly::build_s(&self.field, j as usize, 0);
        let (_, rm) = AdditivePoly::right_div(&s, &sep)?;
        Ok(rm.is_zero())
    }

    pub fn split_degree(&self, f: &AffinePoly, n: u64, method: Method) -> Result<u64> {
        Ok(self.split_degree_routed(f, n, method)?.0)
    }

    pub fn split_degree_routed(&self, f: &AffinePoly, n: u64, method: Method) -> Result<(u64, Route)> {
        self.check_field(f.field())?;
        if f.additive.is_zero() {
            return Err(Error::ConstantInput);
        }
        if n == 0 {
            return Ok((1, Route::Exceptional));
        }
        if f.is_exceptional() {
            return Ok((1, Route::Exceptional));
        }
        match method {
            Method::Auto | Method::Modexp => {
                let (sep, c) = separable_iterate(f, n)?;
                let cap = self.config.dense_cap;
                match sep.dense_degree() {
                    Some(deg) if deg <= cap => Ok((self.split_dense(&sep, c)?, Route::Dense)),
                    _ if method == Method::Auto => Ok((self.split_linearized_sep(&sep, c)?, Route::Linearized)),
                    deg => Err(Error::CapExceeded { what: "dense degree".into(), value: deg.unwrap_or(u64::MAX), cap }),
                }
            }
            Method::Matrix => Ok((self.split_matrix(f, n)?, Route::Matrix)),
        }
    }

    /// The linearized route regardless of degree.
    pub fn split_degree_linearized(&self, f: &AffinePoly, n: u64) -> Result<u64> {
        self.check_field(f.field())?;
        if f.additive.is_zero() {
            return Err(Error::ConstantInput);
        }
        if n == 0 || f.is_exceptional() {
            return Ok(1);
        }
        let (sep, c) = separable_iterate(f, n)?;
        self.split_linearized_sep(&sep, c)
    }

    /// `(R, v)` with `z^{q^e} = R(z) + v` for every root `z` of `sep + c`,
    /// `top R < top sep`, by binary powering.
    ///
    /// For roots `z` and `w = z^{q^a}`, `w^{q^b} = (R_b ∘ R_a)(z) + R_b(v_a) + v_b`;
    /// reducing `R_b ∘ R_a = C ∘ sep + Rm` gives the pair for `a + b`.
    pub fn frobenius_power(&self, sep: &AdditivePoly, c: FqElem, e: u64) -> Result<(AdditivePoly, FqElem)> {
        self.check_field(sep.field())?;
        let f = &self.field;
        let combine = |(ra, va): &(AdditivePoly, FqElem), (rb, vb): &(AdditivePoly, FqElem)| -> Result<_> {
            let (quo, rm) = AdditivePoly::right_div(&rb.compose(ra)?, sep)?;
            let v = f.sub(f.add(rb.eval(*va), *vb), quo.eval(c));
            Ok((rm, v))
        };
        let x_q = AdditivePoly::monomial(f, f.one(), f.degree());
        let (quo, rm) = AdditivePoly::right_div(&x_q, sep)?;
        let mut base = (rm, f.neg(quo.eval(c)));
        let (quo, rm) = AdditivePoly::right_div(&AdditivePoly::x(f), sep)?;
        let mut acc = (rm, f.neg(quo.eval(c)));
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = combine(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = combine(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Least `j` with every root of `sep + c` in `F_{q^j}`.
    ///
    /// With `X^{q^j} = C_j ∘ sep + R_j`, the next remainder comes from
    /// dividing `X^q ∘ R_j` by `sep`, and `C_{j+1}(c) = C_j(c) + Q(c)` for
    /// the partial quotient `Q` because `c ∈ F_q`. All roots lie in
    /// `F_{q^j}` iff `R_j = X` and `C_j(c) = 0`.
    fn split_linearized_sep(&self, sep: &AdditivePoly, c: FqElem) -> Result<u64> {
        let f = &self.field;
        let r = f.degree();
        let x = AdditivePoly::x(f);
        let mut rem = x.clone();
        let mut val = f.zero();
        for j in 1..=self.config.search_cap {
            let shifted = rem.frobenius_shift(r);
            let (quo, next) = AdditivePoly::right_div(&shifted, sep)?;
            val = f.add(val, quo.eval(c));
            rem = next;
            if rem == x && val.is_zero() {
                return Ok(j);
            }
        }
        Err(self.cap_error("linearized splitting search"))
    }

    /// Dense route: least `j` with `X^{q^j} ≡ X mod (sep + c)`.
    fn split_dense(&self, sep: &AdditivePoly, c: FqElem) -> Result<u64> {
        let f = &self.field;
        let dense = sep.to_dense()?.add(&DensePoly::constant(f, c));
        let x = DensePoly::x(f);
        let mut h = x.rem(&dense)?;
        for j in 1..=self.config.search_cap {
            h = h.qth_power_mod(&dense)?;
            if h == x {
                return Ok(j);
            }
        }
        Err(self.cap_error("dense splitting search"))
    }

    /// Does `F^{(n)}` split over `F_{q^j}`, judged by `dim ker T^n = d n`
    /// and solvability of `T^n z = -β_n`.
    pub fn splits_matrix(&self, f: &AffinePoly, n: u64, j: u64) -> Result<bool> {
        let a = &f.additive;
        let d = a.sep_degree_index().ok_or(Error::ZeroInput)?;
        let ext = self.ext(j as usize)?;
        let t = matrix_of_map(a, &ext)?;
        let tn = t.pow(n)?;
        let (_, beta) = f.iterate(n);
        self.full_kernel(&tn, &ext, beta, d as u64 * n)
    }

    fn full_kernel(&self, tn: &FpMatrix, ext: &ExtCtx, beta: FqElem, want: u64) -> Result<bool> {
        if beta.is_zero() {
            let rank = tn.rank();
            return Ok((tn.cols() - rank) as u64 == want);
        }
        let target = ext.neg(&ext.embed(beta));
        let sol = tn.affine_solve(target.coords())?;
        Ok(sol.consistent && sol.kernel_dim as u64 == want)
    }

    fn split_matrix(&self, f: &AffinePoly, n: u64) -> Result<u64> {
        let p = self.field.p();
        let mut s1 = None;
        for j in 1..=self.config.search_cap {
            if self.splits_matrix(f, 1, j)? {
                s1 = Some(j);
                break;
            }
        }
        let s1 = s1.ok_or_else(|| self.cap_error("matrix search for s(1)"))?;
        if n == 1 {
            return Ok(s1);
        }
        let mut cand = s1;
        while cand <= self.config.search_cap {
            if self.splits_matrix(f, n, cand)? {
                return Ok(cand);
            }
            cand *= p;
        }
        Err(self.cap_error("matrix ladder"))
    }

    fn require_non_exceptional(&self, a: &AdditivePoly) -> Result<()> {
        self.check_field(a.field())?;
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if a.weight() == 1 {
            return Err(Error::ExceptionalForm);
        }
        Ok(())
    }

    /// `s_0 = max{j : s_A(j) = s_A(1)}`.
    pub fn find_s0(&self, a: &AdditivePoly) -> Result<u64> {
        self.require_non_exceptional(a)?;
        let f = AffinePoly::additive(a.clone());
        let m_split = self.split_degree(&f, 1, Method::Auto)?;
        let d = a.sep_degree_index().unwrap() as u64;
        // p^{dj} roots fit in F_{q^M} only while d j <= R M
        let cap = self.field.degree() as u64 * m_split / d + 1;
        for j in 2..=cap {
            if self.split_degree(&f, j, Method::Auto)? > m_split {
                return Ok(j - 1);
            }
        }
        Err(Error::CheckFailed(format!("s_A(j) did not grow by j = {cap}")))
    }

    pub fn companion(&self, a: &AdditivePoly) -> Result<CompanionCertificate> {
        self.require_non_exceptional(a)?;
        let f = &self.field;
        let rr = f.degree() as u64;
        let m_split = self.split_degree(&AffinePoly::additive(a.clone()), 1, Method::Auto)?;
        let s0 = self.find_s0(a)?;
        let m = a.low().unwrap() as u64;
        let mut r = ((m * s0).div_ceil(rr)).max(1);
        let a_s0 = a.iterate(s0);
        let s_poly = AdditivePoly::build_s(f, m_split as usize, r as usize);
        let (mut a_star, rm) = AdditivePoly::right_div(&s_poly, &a_s0)?;
        if !rm.is_zero() {
            return Err(Error::CheckFailed("A^(s0) does not right-divide S(M, r)".into()));
        }
        if a_star.low().unwrap_or(0) < rr as usize {
            r += 1;
            a_star = a_star.frobenius_shift(rr as usize);
        }
        let check = a_star.compose(&a_s0)?;
        if check != AdditivePoly::build_s(f, m_split as usize, r as usize) {
            return Err(Error::CheckFailed("A_* ∘ A^(s0) != S(M, r)".into()));
        }
        // A_* = W^q: drop R indices (q-th roots are trivial on F_q)
        let witness = AdditivePoly::new(f, a_star.coeffs()[rr as usize..].to_vec());
        if witness.frobenius_shift(rr as usize) != a_star {
            return Err(Error::CheckFailed("A_* is not a q-th power".into()));
        }
        let dim = rr as usize * m_split as usize;
        let nilpotent = if dim <= NILPOTENT_MATRIX_DIM {
            let ext = self.ext(m_split as usize)?;
            matrix_of_map(&a_star, &ext)?.is_nilpotent()?
        } else {
            a_star.is_nilpotent_on(m_split as usize)
        };
        let p = f.p();
        let c_a = if nilpotent {
            self.bracket_c(a, m_split)?
        } else {
            CStatus::Exact(Ratio::new(m_split, s0))
        };
        Ok(CompanionCertificate {
            m_split,
            s0,
            r,
            a_star,
            witness,
            nilpotent,
            c_a,
            formula_valid: !nilpotent,
            p,
        })
    }

    /// Bracket for `c_A`: `d / R` from root counting, and the last
    /// `s(s_i)/s_i` with `s_i` the last `j` at which `s_A(j) = M p^i`.
    fn bracket_c(&self, a: &AdditivePoly, m_split: u64) -> Result<CStatus> {
        let f = AffinePoly::additive(a.clone());
        let d = a.sep_degree_index().unwrap() as u64;
        let n_max = self.config.bracket_n_max;
        let mut upper = Ratio::new(m_split, 1);
        let mut prev = m_split;
        for j in 2..=n_max {
            let s = self.split_degree(&f, j, Method::Auto)?;
            if s > prev {
                // j - 1 was the last index with value `prev`
                upper = upper.min(Ratio::new(prev, j - 1));
                prev = s;
            }
        }
        let lower = Ratio::new(d, self.field.degree() as u64);
        Ok(CStatus::Bracket { lower, upper, n_max })
    }

    /// The closed formula for `L_f`; `x`-factors of `f` are stripped first.
    pub fn linearized_formula(&self, f: &DensePoly) -> Result<LinearizedFormula> {
        self.check_field(f.field())?;
        if f.is_constant() {
            return Err(Error::ConstantInput);
        }
        let stripped = f.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let big_f = DensePoly::new(f.field(), f.coeffs()[stripped..].to_vec());
        if big_f.is_constant() {
            return Err(Error::ExceptionalForm);
        }
        let sqf = big_f.squarefree_decompose()?;
        let order = sqf
            .f0
            .order_capped(self.config.order_degree_cap)?
            .try_into()
            .map_err(|_| Error::Unsupported("ord(f0) exceeds 64 bits".into()))?;
        let e = sqf.e as u64;
        Ok(LinearizedFormula {
            f: f.clone(),
            stripped,
            f0: sqf.f0,
            order,
            e,
            c_a: order * e,
            p: self.field.p(),
        })
    }

    /// `s_F(n)` and `s/n` for `n = 1..=n_max`, with the structural checks.
    pub fn ratio_scan(&self, f: &AffinePoly, n_max: u64, method: Method) -> Result<SplittingReport> {
        self.check_field(f.field())?;
        if f.additive.is_zero() {
            return Err(Error::ConstantInput);
        }
        if f.is_exceptional() {
            return Err(Error::ExceptionalForm);
        }
        let p = self.field.p();
        let mut entries: Vec<SplitEntry> = Vec::new();
        let mut violations = Vec::new();
        for n in 1..=n_max {
            let (s, route) = self.split_degree_routed(f, n, method)?;
            let base = entries.first().map_or(s, |e| e.s);
            let ladder = ladder_exponent(base, s, p);
            if ladder.is_none() {
                violations.push(format!("s({n}) = {s} is not s(1)·p^i"));
            }
            entries.push(SplitEntry { n, s, ratio: Ratio::new(s, n), ladder, route });
        }
        for e in &entries {
            for g in entries.iter().take_while(|g| g.n < e.n) {
                if e.s % g.s != 0 {
                    violations.push(format!("s({}) = {} does not divide s({}) = {}", g.n, g.s, e.n, e.s));
                }
            }
            if f.is_additive() {
                if let Some(np) = entries.get((e.n * p - 1) as usize) {
                    if np.s != e.s && np.s != p * e.s {
                        violations.push(format!("s({}) = {} not in {{s({}), p·s({})}}", np.n, np.s, e.n, e.n));
                    }
                }
            }
        }
        let min_ratio = entries.iter().map(|e| e.ratio).min().unwrap_or(Ratio::new(0, 1));
        let max_ratio = entries.iter().map(|e| e.ratio).max().unwrap_or(Ratio::new(0, 1));
        Ok(SplittingReport { poly: f.clone(), entries, min_ratio, max_ratio, violations })
    }
}

/// `i` with `s = base·p^i`.
pub fn ladder_exponent(base: u64, s: u64, p: u64) -> Option<u32> {
    if base == 0 || s % base != 0 {
        return None;
    }
    let mut t = s / base;
    let mut i = 0;
    while t % p == 0 {
        t /= p;
        i += 1;
    }
    (t == 1).then_some(i)
}

/// Classification helper re-exported for callers that only hold an additive
/// polynomial.
pub fn classify_additive(a: &AdditivePoly) -> Exceptional {
    AffinePoly::additive(a.clone()).classify()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldCtx {
        FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    fn worked_example() -> (FieldCtx, AdditivePoly) {
        let f = f4();
        let a = AdditivePoly::from_terms(&f, &[(0, f.gen()), (3, f.one())]);
        (f, a)
    }

    #[test]
    fn worked_example_small_n() {
        let (f, a) = worked_example();
        let eng = Engine::with_defaults(&f);
        let fa = AffinePoly::additive(a.clone());
        for method in [Method::Modexp, Method::Matrix, Method::Auto] {
            assert_eq!(eng.split_degree(&fa, 1, method).unwrap(), 3, "{method:?}");
            assert_eq!(eng.split_degree(&fa, 2, method).unwrap(), 6, "{method:?}");
        }
        assert!(eng.splits_in(&a, 3).unwrap());
        assert!(!eng.splits_in(&a, 1).unwrap());
        assert!(!eng.splits_in(&a, 2).unwrap());
        assert_eq!(eng.find_s0(&a).unwrap(), 1);
    }

    #[test]
    fn worked_example_certificate() {
        let (f, a) = worked_example();
        let eng = Engine::with_defaults(&f);
        let cert = eng.companion(&a).unwrap();
        assert_eq!((cert.m_split, cert.s0, cert.r), (3, 1, 1));
        let alpha = f.gen();
        assert_eq!(cert.a_star, AdditivePoly::from_terms(&f, &[(2, f.mul(alpha, alpha)), (5, f.one())]));
        assert!(!cert.nilpotent);
        assert_eq!(cert.c_a, CStatus::Exact(Ratio::new(3, 1)));
        assert_eq!(cert.closed_formula(5).unwrap(), 24);
        assert_eq!(cert.closed_formula(1).unwrap(), 3);
        assert_eq!(cert.closed_formula(4).unwrap(), 12);
    }

    #[test]
    fn xp_minus_x_small() {
        for p in [2u64, 3, 5] {
            let f = FieldCtx::prime(p).unwrap();
            let eng = Engine::with_defaults(&f);
            let a = AdditivePoly::new(&f, alloc::vec![f.from_int(-1), f.one()]);
            let fa = AffinePoly::additive(a);
            for n in 1..=6u64 {
                let want = p.pow(ceil_log_ratio(p, n, 1));
                for method in [Method::Modexp, Method::Matrix, Method::Auto] {
                    assert_eq!(eng.split_degree(&fa, n, method).unwrap(), want, "p={p} n={n} {method:?}");
                }
            }
        }
    }

    #[test]
    fn affine_shift_example() {
        let f = FieldCtx::prime(2).unwrap();
        let eng = Engine::with_defaults(&f);
        let a = AdditivePoly::new(&f, alloc::vec![f.one(), f.one()]);
        let b = AffinePoly::new(a.clone(), f.one());
        for method in [Method::Modexp, Method::Matrix, Method::Auto] {
            assert_eq!(eng.split_degree(&b, 1, method).unwrap(), 2);
            assert_eq!(eng.split_degree(&AffinePoly::additive(a.clone()), 1, method).unwrap(), 1);
        }
    }

    #[test]
    fn linearized_formula_examples() {
        let f2 = FieldCtx::prime(2).unwrap();
        let eng = Engine::with_defaults(&f2);
        // (x+1)^2 (x^2+x+1)
        let f = DensePoly::from_ints(&f2, &[1, 1, 0, 1, 1]);
        let lf = eng.linearized_formula(&f).unwrap();
        assert_eq!((lf.order, lf.e, lf.c_a), (3, 2, 6));
        assert_eq!(lf.predict(1), 6);
        let a = AffinePoly::additive(AdditivePoly::lin_associate(&f));
        assert_eq!(eng.split_degree(&a, 1, Method::Auto).unwrap(), 6);
        // (x+1)^2: s(1) = 2, s(2) = 4, s0 = 1
        let g = DensePoly::from_ints(&f2, &[1, 0, 1]);
        let lg = AdditivePoly::lin_associate(&g);
        assert_eq!(eng.find_s0(&lg).unwrap(), 1);
        let lf = eng.linearized_formula(&g).unwrap();
        assert_eq!((lf.predict(1), lf.predict(2)), (2, 4));
    }

    #[test]
    fn exceptional_inputs() {
        let f = FieldCtx::prime(2).unwrap();
        let eng = Engine::with_defaults(&f);
        let x4 = AdditivePoly::monomial(&f, f.one(), 2);
        assert_eq!(eng.split_degree(&AffinePoly::additive(x4.clone()), 5, Method::Auto).unwrap(), 1);
        assert!(eng.splits_in(&x4, 1).unwrap());
        assert_eq!(eng.find_s0(&x4), Err(Error::ExceptionalForm));
        assert_eq!(eng.companion(&x4), Err(Error::ExceptionalForm));
    }

    #[test]
    fn ladder_helper() {
        assert_eq!(ladder_exponent(3, 24, 2), Some(3));
        assert_eq!(ladder_exponent(3, 18, 2), None);
        assert_eq!(ladder_exponent(1, 1, 5), Some(0));
    }
}
