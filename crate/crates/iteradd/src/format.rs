//! Rendering of field elements, polynomials and exact numbers as text.

use iteradd_core::{AdditivePoly, AffinePoly, DensePoly, FieldCtx, FqElem};
use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;

/// `a^2+2a+1` style, highest power first; `0` for zero.
pub fn element(f: &FieldCtx, c: FqElem) -> String {
    let coeffs = f.coeffs(c);
    let mut out = String::new();
    for (i, &k) in coeffs.iter().enumerate().rev() {
        if k == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (i, k) {
            (0, _) => out.push_str(&k.to_string()),
            (1, 1) => out.push('a'),
            (1, _) => out.push_str(&format!("{k}a")),
            (_, 1) => out.push_str(&format!("a^{i}")),
            _ => out.push_str(&format!("{k}a^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coefficient_prefix(f: &FieldCtx, c: FqElem) -> String {
    if c == f.one() {
        return String::new();
    }
    let s = element(f, c);
    if s.contains('+') {
        format!("({s})*")
    } else {
        format!("{s}*")
    }
}

fn terms_text(f: &FieldCtx, terms: impl Iterator<Item = (u64, FqElem)>) -> String {
    let mut parts = Vec::new();
    for (e, c) in terms {
        let part = match e {
            0 => element(f, c),
            1 => format!("{}x", coefficient_prefix(f, c)),
            _ => format!("{}x^{e}", coefficient_prefix(f, c)),
        };
        parts.push(if e == 0 && element(f, c).contains('+') { format!("({part})") } else { part });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Highest term first, e.g. `x^8 + a*x`; exponents written out as integers
/// when they fit, `x^(p^i)` otherwise.
pub fn additive(a: &AdditivePoly) -> String {
    affine_terms(a, None)
}

pub fn affine(b: &AffinePoly) -> String {
    affine_terms(&b.additive, Some(b.shift))
}

fn affine_terms(a: &AdditivePoly, shift: Option<FqElem>) -> String {
    let f = a.field();
    let p = f.p();
    let mut parts = Vec::new();
    for (i, &c) in a.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let pre = coefficient_prefix(f, c);
        let part = match p.checked_pow(i as u32) {
            Some(1) => format!("{pre}x"),
            Some(e) => format!("{pre}x^{e}"),
            None => format!("{pre}x^({p}^{i})"),
        };
        parts.push(part);
    }
    if let Some(b) = shift.filter(|b| !b.is_zero()) {
        let s = element(f, b);
        parts.push(if s.contains('+') { format!("({s})") } else { s });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Sparse additive form `{(0,'a'),(3,'1')}`.
pub fn additive_sparse(a: &AdditivePoly) -> String {
    let f = a.field();
    let items: Vec<String> = a
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| format!("({i},'{}')", element(f, c)))
        .collect();
    format!("{{{}}}", items.join(","))
}

pub fn dense(g: &DensePoly) -> String {
    let f = g.field();
    terms_text(
        f,
        g.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, &c)| (e as u64, c)),
    )
}

pub fn ratio_u64(r: &Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ratio_big(r: &Ratio<BigUint>) -> String {
    if *r.denom() == BigUint::from(1u32) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal approximation for tables, `≈` marked.
pub fn approx_u64(r: &Ratio<u64>) -> String {
    format!("≈{:.4}", *r.numer() as f64 / *r.denom() as f64)
}

pub fn approx_big(r: &Ratio<BigUint>) -> String {
    let v = ratio_to_f64(r);
    if v != 0.0 && v.abs() < 1e-4 {
        format!("≈{v:.3e}")
    } else {
        format!("≈{v:.4}")
    }
}

fn ratio_to_f64(r: &Ratio<BigUint>) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(60);
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    if d == 0.0 {
        0.0
    } else {
        n / d
    }
}
