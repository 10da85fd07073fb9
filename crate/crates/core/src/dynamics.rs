//! Periodic points of `z -> A(z)` on `F_{q^n}` and factor statistics of
//! iterates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::additive::{affine_gcd, AdditivePoly, AffinePoly};
use crate::arith::{divisors, mobius};
use crate::error::{Error, Result};
use crate::ext::ExtElem;
use crate::linalg::{in_span, matrix_of_map, p_power};
use crate::poly::{factor_degrees_dividing, DensePoly};
use crate::splitting::{separable_iterate, Engine, Method};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicEntry {
    pub n: u64,
    /// `δ_0 = dim W_0`, so `#W_0 = p^{δ_0}`.
    pub delta: u64,
    pub pi: BigUint,
    /// `π_A(n) / q^n`.
    pub proportion: Ratio<BigUint>,
    /// Whether the count was confirmed by enumerating orbits.
    pub orbit_checked: bool,
}

/// Membership of `n` in the two subsequences `n = M t` (`p ∤ t`) and
/// `n = M p^i`; `n = M` is in both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanTag {
    pub coprime: Option<u64>,
    pub p_power: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicReport {
    pub entries: Vec<PeriodicEntry>,
    pub tags: Vec<ScanTag>,
    /// `M = s_A(1)` when `A` is non-exceptional.
    pub m_split: Option<u64>,
    /// Largest `j` with a root of `A^{(j)}` in `F_{q^M}` that is not a root of `A^{(j-1)}`.
    pub big_n: Option<u64>,
    /// `p^{-d N}`.
    pub lower_bound: Option<Ratio<BigUint>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorMethod {
    /// Root counts over the subfields `F_{q^e}`, `e | s`, then Möbius inversion.
    Kernel,
    /// Distinct-degree factorization of the dense separable part.
    Oracle,
    /// Both, required to agree.
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorStatsReport {
    pub n: u64,
    pub s: u64,
    /// Number of distinct roots, `p^{dn}`.
    pub roots: BigUint,
    /// Distinct roots of exact degree `d` over `F_q`.
    pub exact_counts: BTreeMap<u64, BigUint>,
    /// Irreducible factors of degree `d`, `exact_counts[d] / d`.
    pub factor_counts: BTreeMap<u64, BigUint>,
    /// `N_B(n)`.
    pub big_n: BigUint,
    /// `ρ_B(n) = p^{dn} / N_B(n)`.
    pub rho: Ratio<BigUint>,
    pub method: FactorMethod,
}

impl FactorStatsReport {
    /// `ρ_B(n) / n`.
    pub fn rho_over_n(&self) -> Ratio<BigUint> {
        &self.rho / Ratio::from_integer(BigUint::from(self.n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoScan {
    pub reports: Vec<FactorStatsReport>,
    pub min_rho_over_n: Ratio<BigUint>,
    pub max_rho_over_n: Ratio<BigUint>,
}

impl Engine {
    /// `π_A(n) = q^n / #W_0` from the stable kernel of `T` on `F_{q^n}`;
    /// when `q^n` is within the orbit cap the periodic points are also found
    /// by enumeration and compared with `W_1`.
    pub fn periodic_count(&self, a: &AdditivePoly, n: u64) -> Result<PeriodicEntry> {
        let field = self.field();
        if a.field() != field {
            return Err(Error::ContextMismatch);
        }
        let ext = self.ext(n as usize)?;
        let t = matrix_of_map(a, &ext)?;
        let fit = t.fitting()?;
        let p = field.p();
        let dim = ext.dim();
        let delta = fit.delta0() as u64;
        let qn = p_power(p, dim);
        let pi = p_power(p, fit.delta1());
        if &pi * p_power(p, fit.delta0()) != qn {
            return Err(Error::CheckFailed("δ0 + δ1 != dim".into()));
        }
        let proportion = Ratio::new(pi.clone(), qn.clone());
        let mut orbit_checked = false;
        if qn <= BigUint::from(self.config().orbit_cap) {
            let size = qn.to_u64().unwrap();
            let periodic = periodic_points_by_enumeration(a, &ext, size)?;
            if BigUint::from(periodic.len()) != pi {
                return Err(Error::CheckFailed(format!(
                    "n = {n}: {} periodic points by enumeration, {pi} from W_1",
                    periodic.len()
                )));
            }
            for &z in &periodic {
                if !in_span(p, &fit.w1_basis, ext.from_index(z).coords()) {
                    return Err(Error::CheckFailed(format!("periodic point {z} outside W_1")));
                }
            }
            // every element of W_0 reaches 0 within δ0 steps
            for idx in 0..p_power(p, fit.delta0()).to_u64().unwrap() {
                let mut z = vec![0u64; dim];
                let mut c = idx;
                for b in &fit.w0_basis {
                    let k = c % p;
                    c /= p;
                    for (zi, bi) in z.iter_mut().zip(b) {
                        *zi = (*zi + k * bi) % p;
                    }
                }
                let mut w = ext.from_coords(&z)?;
                for _ in 0..delta {
                    w = a.eval_ext(&ext, &w)?;
                }
                if !w.is_zero() {
                    return Err(Error::CheckFailed("W_0 element not annihilated".into()));
                }
            }
            orbit_checked = true;
        }
        Ok(PeriodicEntry { n, delta, pi, proportion, orbit_checked })
    }

    /// Periodic counts over a range of `n`, tagged by the subsequences
    /// `n = M t` (`gcd(t, p) = 1`) and `n = M p^i`.
    pub fn proportion_scan(&self, a: &AdditivePoly, ns: &[u64]) -> Result<PeriodicReport> {
        let p = self.field().p();
        let entries = ns.iter().map(|&n| self.periodic_count(a, n)).collect::<Result<Vec<_>>>()?;
        let regular = !a.is_zero() && a.weight() > 1;
        let (m_split, big_n, lower_bound) = if regular {
            let m = self.split_degree(&AffinePoly::additive(a.clone()), 1, Method::Auto)?;
            let big_n = self.stabilisation_index(a, m)?;
            let d = a.sep_degree_index().unwrap() as u64;
            let bound = Ratio::new(BigUint::one(), p_power(p, (d * big_n) as usize));
            (Some(m), Some(big_n), Some(bound))
        } else {
            (None, None, None)
        };
        let tags = ns
            .iter()
            .map(|&n| match m_split {
                Some(m) if n % m == 0 => {
                    let t = n / m;
                    ScanTag {
                        coprime: (t % p != 0).then_some(t),
                        p_power: crate::splitting::ladder_exponent(1, t, p),
                    }
                }
                _ => ScanTag::default(),
            })
            .collect();
        Ok(PeriodicReport { entries, tags, m_split, big_n, lower_bound })
    }

    /// Largest `j` at which `dim ker T^j` still grows, `T` the matrix of `A`
    /// on `F_{q^M}`.
    fn stabilisation_index(&self, a: &AdditivePoly, m: u64) -> Result<u64> {
        let ext = self.ext(m as usize)?;
        let t = matrix_of_map(a, &ext)?;
        let mut power = t.clone();
        let mut prev = 0usize;
        let mut last = 0u64;
        for j in 1..=ext.dim() as u64 + 1 {
            let k = power.cols() - power.rank();
            if k > prev {
                last = j;
                prev = k;
            } else {
                break;
            }
            power = power.mul(&t)?;
        }
        Ok(last)
    }

    /// Distinct roots of `B^{(n)}` lying in `F_{q^e}`.
    pub fn roots_in_subfield(&self, b: &AffinePoly, n: u64, e: u64) -> Result<BigUint> {
        let p = self.field().p();
        let dim = e as usize * self.field().degree();
        if dim <= self.config().matrix_cap.min(256) {
            let ext = self.ext(e as usize)?;
            let tn = matrix_of_map(&b.additive, &ext)?.pow(n)?;
            let (_, beta) = b.iterate(n);
            let target = ext.neg(&ext.embed(beta));
            let sol = tn.affine_solve(target.coords())?;
            return Ok(sol.count(p));
        }
        // roots of `sep + c` fixed by `z -> z^{q^e}`
        let (sep, c) = separable_iterate(b, n)?;
        let (r_e, v_e) = self.frobenius_power(&sep, c, e)?;
        let lhs = r_e.sub(&AdditivePoly::x(self.field()))?;
        Ok(match affine_gcd(&lhs, v_e, &sep, c)? {
            Some(g) => p_power(p, g.top().unwrap_or(0)),
            None => BigUint::zero(),
        })
    }

    pub fn factor_stats(&self, b: &AffinePoly, n: u64, method: FactorMethod) -> Result<FactorStatsReport> {
        if b.field() != self.field() {
            return Err(Error::ContextMismatch);
        }
        if b.additive.is_zero() {
            return Err(Error::ConstantInput);
        }
        if b.is_exceptional() {
            return Err(Error::ExceptionalForm);
        }
        match method {
            FactorMethod::Kernel => self.factor_stats_kernel(b, n),
            FactorMethod::Oracle => self.factor_stats_oracle(b, n),
            FactorMethod::Both => {
                let k = self.factor_stats_kernel(b, n)?;
                let o = self.factor_stats_oracle(b, n)?;
                if k.exact_counts != o.exact_counts || k.big_n != o.big_n || k.rho != o.rho {
                    return Err(Error::CheckFailed(format!(
                        "n = {n}: kernel counts {:?} vs oracle {:?}",
                        k.exact_counts, o.exact_counts
                    )));
                }
                Ok(FactorStatsReport { method: FactorMethod::Both, ..k })
            }
        }
    }

    fn factor_stats_kernel(&self, b: &AffinePoly, n: u64) -> Result<FactorStatsReport> {
        let p = self.field().p();
        let d = b.additive.sep_degree_index().unwrap();
        let s = self.split_degree(b, n, Method::Auto)?;
        let divs = divisors(s);
        let mut in_sub: BTreeMap<u64, BigInt> = BTreeMap::new();
        for &e in &divs {
            in_sub.insert(e, BigInt::from(self.roots_in_subfield(b, n, e)?));
        }
        let mut exact = BTreeMap::new();
        for &e in &divs {
            let mut acc = BigInt::zero();
            for &k in divisors(e).iter() {
                let mu = mobius(e / k);
                if mu != 0 {
                    acc += &in_sub[&k] * mu;
                }
            }
            let v = acc
                .to_biguint()
                .ok_or_else(|| Error::CheckFailed(format!("negative count at degree {e}")))?;
            if !v.is_zero() {
                exact.insert(e, v);
            }
        }
        let roots = p_power(p, d * n as usize);
        build_report(n, s, roots, exact, FactorMethod::Kernel)
    }

    /// Dense route: the separable part `f` of `B^{(n)}` is expanded, its
    /// splitting degree found by Frobenius powers, and its factors counted by
    /// distinct-degree splitting over the divisors of that degree.
    fn factor_stats_oracle(&self, b: &AffinePoly, n: u64) -> Result<FactorStatsReport> {
        let field = self.field();
        let (sep, c) = separable_iterate(b, n)?;
        let deg = sep.dense_degree().unwrap_or(u64::MAX);
        if deg > self.config().oracle_cap {
            return Err(Error::OracleTooLarge { degree: deg, cap: self.config().oracle_cap });
        }
        let dense = sep.to_dense()?.add(&DensePoly::constant(field, c));
        let x = DensePoly::x(field);
        let mut h = x.rem(&dense)?;
        let mut s = None;
        for j in 1..=self.config().search_cap {
            h = h.qth_power_mod(&dense)?;
            if h == x {
                s = Some(j);
                break;
            }
        }
        let s = s.ok_or_else(|| Error::CapExceeded {
            what: "oracle splitting search".into(),
            value: self.config().search_cap + 1,
            cap: self.config().search_cap,
        })?;
        let counts = factor_degrees_dividing(&dense, s)?;
        let mut exact = BTreeMap::new();
        for (e, k) in counts {
            exact.insert(e, BigUint::from(e * k));
        }
        build_report(n, s, BigUint::from(deg), exact, FactorMethod::Oracle)
    }

    pub fn rho_scan(&self, b: &AffinePoly, n_max: u64, method: FactorMethod) -> Result<RhoScan> {
        self.rho_scan_range(b, 1, n_max, method)
    }

    pub fn rho_scan_range(&self, b: &AffinePoly, lo: u64, hi: u64, method: FactorMethod) -> Result<RhoScan> {
        let reports = (lo.max(1)..=hi).map(|n| self.factor_stats(b, n, method)).collect::<Result<Vec<_>>>()?;
        let ratios: Vec<Ratio<BigUint>> = reports.iter().map(|r| r.rho_over_n()).collect();
        let min_rho_over_n = ratios.iter().min().cloned().unwrap_or_else(|| Ratio::from_integer(BigUint::zero()));
        let max_rho_over_n = ratios.iter().max().cloned().unwrap_or_else(|| Ratio::from_integer(BigUint::zero()));
        Ok(RhoScan { reports, min_rho_over_n, max_rho_over_n })
    }
}

fn build_report(
    n: u64,
    s: u64,
    roots: BigUint,
    exact: BTreeMap<u64, BigUint>,
    method: FactorMethod,
) -> Result<FactorStatsReport> {
    let total: BigUint = exact.values().sum();
    if total != roots {
        return Err(Error::CheckFailed(format!("degree counts sum to {total}, expected {roots}")));
    }
    let mut factor_counts = BTreeMap::new();
    let mut big_n = BigUint::zero();
    for (&d, cnt) in &exact {
        if !(cnt % d).is_zero() {
            return Err(Error::CheckFailed(format!("{cnt} roots of degree {d}")));
        }
        let k = cnt / d;
        big_n += &k;
        factor_counts.insert(d, k);
    }
    let rho = Ratio::new(roots.clone(), big_n.clone());
    Ok(FactorStatsReport { n, s, roots, exact_counts: exact, factor_counts, big_n, rho, method })
}

/// Periodic points of `z -> A(z)` on a field of `size` elements, indexed by
/// packed coordinates: repeatedly strip points with no preimage until only
/// the cycles remain.
fn periodic_points_by_enumeration(a: &AdditivePoly, ext: &crate::ext::ExtCtx, size: u64) -> Result<BTreeSet<u64>> {
    let p = ext.p();
    let index_of = |z: &ExtElem| z.coords().iter().rev().fold(0u64, |acc, &c| acc * p + c);
    let mut image = Vec::with_capacity(size as usize);
    for i in 0..size {
        image.push(index_of(&a.eval_ext(ext, &ext.from_index(i))?));
    }
    let mut indeg = vec![0u32; size as usize];
    for &j in &image {
        indeg[j as usize] += 1;
    }
    let mut alive = vec![true; size as usize];
    let mut stack: Vec<u64> = (0..size).filter(|&i| indeg[i as usize] == 0).collect();
    while let Some(i) = stack.pop() {
        alive[i as usize] = false;
        let j = image[i as usize] as usize;
        indeg[j] -= 1;
        if indeg[j] == 0 {
            stack.push(j as u64);
        }
    }
    Ok((0..size).filter(|&i| alive[i as usize]).collect())
}
