//! Property suites run by `iteradd verify`: the worked F_4 example, the
//! `X^p - X` formula, and seeded random corpora over F_2, F_3, F_4 and F_9.

use std::fmt::Write as _;

use iteradd_core::{
    AdditivePoly, AffinePoly, CStatus, DensePoly, Engine, FactorMethod, FieldCtx, Method,
};
use num_bigint::BigUint;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 2024;

pub const SUITES: &[&str] = &[
    "example",
    "xp-minus-x",
    "thm-main-i",
    "thm-main-ii",
    "linearized",
    "periodic",
    "oscillation",
    "factor-stats",
    "identities",
];

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> SuiteResult {
        SuiteResult { suite: name.into(), ..Default::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String) {
        self.failed += 1;
        self.failures.push(what);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }

    pub fn table(&self) -> String {
        let mut out = format!("seed {}\n", self.seed);
        for s in &self.suites {
            let status = if s.failed == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {:<12} {:>6} passed {:>4} failed", s.suite, s.passed, s.failed);
            for f in s.failures.iter().take(10) {
                let _ = writeln!(out, "    {f}");
            }
        }
        out
    }
}

pub fn f4() -> FieldCtx {
    FieldCtx::new(2, 2, Some(&[1, 1, 1])).expect("x^2+x+1 is irreducible")
}

/// `X^8 + αX` over F_4.
pub fn worked_example() -> AdditivePoly {
    let f = f4();
    AdditivePoly::from_terms(&f, &[(0, f.gen()), (3, f.one())])
}

fn corpus_fields() -> Vec<FieldCtx> {
    vec![FieldCtx::prime(2).unwrap(), FieldCtx::prime(3).unwrap(), f4(), FieldCtx::new(3, 2, None).unwrap()]
}

fn random_elem(f: &FieldCtx, rng: &mut ChaCha8Rng) -> iteradd_core::FqElem {
    elem_from_index(f, rng.gen_range(0..f.q()))
}

fn random_nonzero(f: &FieldCtx, rng: &mut ChaCha8Rng) -> iteradd_core::FqElem {
    elem_from_index(f, rng.gen_range(1..f.q()))
}

/// Base-`p` digits of `v` as coordinates.
fn elem_from_index(f: &FieldCtx, mut v: u64) -> iteradd_core::FqElem {
    let mut coeffs = Vec::new();
    for _ in 0..f.degree() {
        coeffs.push(v % f.p());
        v /= f.p();
    }
    f.elem(&coeffs).expect("digits below p")
}

/// Non-exceptional additive polynomial with top index in `1..=max_top`.
pub fn random_additive(f: &FieldCtx, max_top: usize, rng: &mut ChaCha8Rng) -> AdditivePoly {
    loop {
        let top = rng.gen_range(1..=max_top);
        let mut coeffs: Vec<_> = (0..top).map(|_| random_elem(f, rng)).collect();
        coeffs.push(random_nonzero(f, rng));
        let a = AdditivePoly::new(f, coeffs);
        if !AffinePoly::additive(a.clone()).is_exceptional() {
            return a;
        }
    }
}

/// `f` over `F_q` of degree `1..=max_deg` with `f(0) != 0`.
pub fn random_fx(f: &FieldCtx, max_deg: usize, rng: &mut ChaCha8Rng) -> DensePoly {
    let deg = rng.gen_range(1..=max_deg);
    let mut coeffs = vec![random_nonzero(f, rng)];
    coeffs.extend((1..deg).map(|_| random_elem(f, rng)));
    coeffs.push(random_nonzero(f, rng));
    DensePoly::new(f, coeffs)
}

fn additive_corpus(seed: u64, count: usize, fields: &[FieldCtx]) -> Vec<AdditivePoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_additive(&fields[i % fields.len()], 3, &mut rng)).collect()
}

pub fn run(seed: u64, only: Option<&str>) -> Result<VerifySummary, String> {
    if let Some(name) = only {
        if !SUITES.contains(&name) {
            return Err(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", ")));
        }
    }
    let mut suites = Vec::new();
    for &name in SUITES {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        let mut r = SuiteResult::new(name);
        match name {
            "example" => example(&mut r),
            "xp-minus-x" => xp_minus_x(&mut r),
            "thm-main-i" => main_i(seed, &mut r),
            "thm-main-ii" => main_ii(seed, &mut r),
            "linearized" => special(seed, &mut r),
            "periodic" => dyn_suite(&mut r),
            "oscillation" => oscillation(&mut r),
            "factor-stats" => factor_suite(seed, &mut r),
            "identities" => identities(seed, &mut r),
            _ => unreachable!(),
        }
        suites.push(r);
    }
    Ok(VerifySummary { seed, suites })
}

fn ceil_log(p: u64, n: u64) -> u32 {
    let mut i = 0;
    let mut v = 1;
    while v < n {
        v *= p;
        i += 1;
    }
    i
}

fn example(r: &mut SuiteResult) {
    let f = f4();
    let eng = Engine::with_defaults(&f);
    let a = worked_example();
    let aff = AffinePoly::additive(a.clone());
    for (n, want) in [(1, 3), (2, 6)] {
        for m in [Method::Modexp, Method::Matrix, Method::Auto] {
            let got = eng.split_degree(&aff, n, m);
            r.check(got == Ok(want), || format!("s({n}) by {m:?} = {got:?}, expected {want}"));
        }
    }
    let cert = match eng.companion(&a) {
        Ok(c) => c,
        Err(e) => return r.error(format!("companion: {e}")),
    };
    let alpha2 = f.mul(f.gen(), f.gen());
    let want_star = AdditivePoly::from_terms(&f, &[(2, alpha2), (5, f.one())]);
    r.check(cert.s0 == 1, || format!("s0 = {}", cert.s0));
    r.check(cert.a_star == want_star, || format!("A_* = {:?}", cert.a_star));
    let s = AdditivePoly::from_terms(&f, &[(2, f.one()), (8, f.one())]);
    r.check(cert.a_star.compose(&a).ok() == Some(s), || "A_*(A) != X^256 - X^4".into());
    r.check(!cert.nilpotent, || "A_* nilpotent".into());
    r.check(cert.c_a == CStatus::Exact(Ratio::from_integer(3)), || format!("c_A = {:?}", cert.c_a));
    for n in 2..=64 {
        let want = 3 * 2u64.pow(ceil_log(2, n));
        r.check(cert.closed_formula(n) == Ok(want), || format!("closed formula at {n}"));
        for m in [Method::Auto, Method::Matrix] {
            let got = eng.split_degree(&aff, n, m);
            r.check(got == Ok(want), || format!("s({n}) by {m:?} = {got:?}, expected {want}"));
        }
    }
}

fn xp_minus_x(r: &mut SuiteResult) {
    for p in [2u64, 3, 5] {
        let f = FieldCtx::prime(p).unwrap();
        let eng = Engine::with_defaults(&f);
        let a = AdditivePoly::new(&f, vec![f.from_int(-1), f.one()]);
        let aff = AffinePoly::additive(a);
        let lin = eng.linearized_formula(&DensePoly::from_ints(&f, &[-1, 1]));
        let lin = match lin {
            Ok(l) => l,
            Err(e) => return r.error(format!("linearized formula p = {p}: {e}")),
        };
        for n in 1..=50 {
            let want = p.pow(ceil_log(p, n));
            r.check(lin.predict(n) == want, || format!("p = {p}, n = {n}: formula {}", lin.predict(n)));
            let got = eng.split_degree(&aff, n, Method::Matrix);
            r.check(got == Ok(want), || format!("p = {p}, n = {n}: matrix {got:?}"));
            if p.checked_pow(n as u32).is_some_and(|d| d <= eng.config().dense_cap) {
                let got = eng.split_degree(&aff, n, Method::Modexp);
                r.check(got == Ok(want), || format!("p = {p}, n = {n}: modexp {got:?}"));
            }
        }
    }
}

fn main_i(seed: u64, r: &mut SuiteResult) {
    let fields = corpus_fields();
    for a in additive_corpus(seed, 60, &fields[..3]) {
        let eng = Engine::with_defaults(a.field());
        match eng.ratio_scan(&AffinePoly::additive(a.clone()), 20, Method::Auto) {
            Ok(rep) => {
                r.check(rep.violations.is_empty(), || format!("{a:?}: {:?}", rep.violations));
            }
            Err(e) => r.error(format!("{a:?}: {e}")),
        }
    }
}

fn main_ii(seed: u64, r: &mut SuiteResult) {
    let fields = corpus_fields();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb);
    for a in additive_corpus(seed, 60, &fields[..3]) {
        let f = a.field().clone();
        let eng = Engine::with_defaults(&f);
        let b = random_nonzero(&f, &mut rng);
        let plain = AffinePoly::additive(a.clone());
        let shifted = AffinePoly::new(a.clone(), b);
        for n in 1..=20 {
            let (sa, sb) = match (eng.split_degree(&plain, n, Method::Auto), eng.split_degree(&shifted, n, Method::Auto)) {
                (Ok(x), Ok(y)) => (x, y),
                (x, y) => return r.error(format!("{a:?} + b at n = {n}: {x:?} {y:?}")),
            };
            let p = f.p();
            r.check(sb == sa || sb == p * sa, || format!("{a:?} + b, n = {n}: s_b = {sb}, s = {sa}"));
        }
    }
}

fn special(seed: u64, r: &mut SuiteResult) {
    let fields = corpus_fields();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x41);
    for i in 0..30 {
        let f = &fields[i % 3];
        let eng = Engine::with_defaults(f);
        let g = random_fx(f, 5, &mut rng);
        let a = AdditivePoly::lin_associate(&g);
        let aff = AffinePoly::additive(a.clone());
        if aff.is_exceptional() {
            continue;
        }
        let lin = match eng.linearized_formula(&g) {
            Ok(l) => l,
            Err(e) => {
                r.error(format!("{g:?}: {e}"));
                continue;
            }
        };
        for n in 1..=12 {
            let got = eng.split_degree(&aff, n, Method::Auto);
            r.check(got == Ok(lin.predict(n)), || format!("{g:?}, n = {n}: s = {got:?}, formula {}", lin.predict(n)));
        }
        match eng.companion(&a) {
            Ok(cert) if cert.formula_valid => {
                let want = CStatus::Exact(Ratio::from_integer(lin.c_a));
                r.check(cert.c_a == want, || format!("{g:?}: certificate {:?}, formula c_A {}", cert.c_a, lin.c_a));
            }
            Ok(_) => {}
            Err(e) => r.error(format!("{g:?}: companion {e}")),
        }
    }
}

fn dyn_suite(r: &mut SuiteResult) {
    let f = FieldCtx::prime(2).unwrap();
    let eng = Engine::with_defaults(&f);
    for bits in 0u64..16 {
        let coeffs: Vec<_> = (0..4).map(|i| f.from_int(((bits >> i) & 1) as i64)).collect();
        let a = AdditivePoly::new(&f, coeffs);
        for n in 1..=12 {
            match eng.periodic_count(&a, n) {
                Ok(e) => {
                    let total = &e.pi * BigUint::from(2u32).pow(e.delta as u32);
                    r.check(e.orbit_checked && total == BigUint::from(1u64 << n), || {
                        format!("{a:?}, n = {n}: pi = {}, delta = {}", e.pi, e.delta)
                    });
                }
                Err(err) => r.error(format!("{a:?}, n = {n}: {err}")),
            }
        }
    }
}

fn oscillation(r: &mut SuiteResult) {
    let f = f4();
    let eng = Engine::with_defaults(&f);
    let ns: Vec<u64> = (1..=18).collect();
    let rep = match eng.proportion_scan(&worked_example(), &ns) {
        Ok(rep) => rep,
        Err(e) => return r.error(format!("proportion scan: {e}")),
    };
    let Some(bound) = rep.lower_bound.clone() else {
        return r.error("no lower bound".into());
    };
    let mut ladder = Vec::new();
    for (e, tag) in rep.entries.iter().zip(&rep.tags) {
        if tag.coprime.is_some() {
            r.check(e.proportion >= bound, || format!("n = {}: {} below the bound", e.n, e.proportion));
        }
        if let Some(i) = tag.p_power {
            ladder.push((i, e.proportion.clone()));
        }
    }
    r.check(ladder.len() >= 3, || format!("only {} M·p^i entries", ladder.len()));
    for w in ladder.windows(2) {
        r.check(w[1].1 < w[0].1, || format!("proportion at i = {} not below i = {}", w[1].0, w[0].0));
    }
}

fn factor_suite(seed: u64, r: &mut SuiteResult) {
    let fields = corpus_fields();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x15);
    for a in additive_corpus(seed, 24, &fields) {
        let f = a.field().clone();
        let eng = Engine::with_defaults(&f);
        let b = AffinePoly::new(a.clone(), random_elem(&f, &mut rng));
        if b.is_exceptional() {
            continue;
        }
        let p = f.p();
        let d = a.sep_degree_index().unwrap() as u32;
        for n in 1..=8u32 {
            let roots = BigUint::from(p).pow(d * n);
            let method = if roots <= BigUint::from(1u32 << 12) { FactorMethod::Both } else { FactorMethod::Kernel };
            match eng.factor_stats(&b, n as u64, method) {
                Ok(rep) => {
                    let lhs = &rep.rho * Ratio::from_integer(rep.big_n.clone());
                    r.check(lhs == Ratio::from_integer(roots), || format!("{b:?}, n = {n}: rho·N != p^(dn)"));
                }
                Err(e) => r.error(format!("{b:?}, n = {n}: {e}")),
            }
        }
    }
}

fn identities(seed: u64, r: &mut SuiteResult) {
    let fields = corpus_fields();
    // S_{s,r} iterated p^i times is S_{s p^i, r p^i}
    for f in &fields {
        let p = f.p() as usize;
        for (s, rr, i) in [(1usize, 0usize, 1u32), (1, 1, 1), (2, 1, 1), (1, 0, 2)] {
            let lhs = AdditivePoly::build_s(f, s, rr).iterate(p.pow(i) as u64);
            let rhs = AdditivePoly::build_s(f, s * p.pow(i), rr * p.pow(i));
            r.check(lhs == rhs, || format!("S({s},{rr}) iterate p^{i} over F_{}", f.q()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x22);
    for i in 0..30 {
        let f = &fields[i % fields.len()];
        let g = random_fx(f, 4, &mut rng);
        let lg = AdditivePoly::lin_associate(&g);
        let mut power = DensePoly::one(f);
        for n in 1..=4u64 {
            power = power.mul(&g);
            r.check(lg.iterate(n) == AdditivePoly::lin_associate(&power), || format!("L_(f^{n}) for {g:?}"));
        }
        let a = random_additive(f, 3, &mut rng);
        let b = random_additive(f, 6, &mut rng);
        match AdditivePoly::right_div(&b, &a) {
            Ok((c, rem)) => {
                let back = c.compose(&a).and_then(|ca| ca.add(&rem));
                let small = rem.top().map_or(true, |t| t < a.top().unwrap());
                r.check(back.ok() == Some(b.clone()) && small, || format!("right_div({b:?}, {a:?})"));
            }
            Err(e) => r.error(format!("right_div: {e}")),
        }
    }
    for a in additive_corpus(seed ^ 0x33, 18, &fields[..3]) {
        let eng = Engine::with_defaults(a.field());
        match eng.companion(&a) {
            Ok(cert) => {
                let ab = a.compose(&cert.a_star);
                let ba = cert.a_star.compose(&a);
                r.check(ab.is_ok() && ab == ba, || format!("A ∘ A_* != A_* ∘ A for {a:?}"));
            }
            Err(e) => r.error(format!("companion {a:?}: {e}")),
        }
    }
}
