//! Acceptance run: one PASS/FAIL line per criterion. Every expected value is
//! either a published constant or recomputed here by brute force.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use iteradd_core::{
    AdditivePoly, AffinePoly, CStatus, DensePoly, Engine, ExtCtx, ExtElem, FactorMethod, FieldCtx, FqElem, Method,
};
use num_bigint::BigUint;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;
const N_MAX: u64 = 20;
const ORACLE_ROOTS_CAP: u64 = 1 << 12;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f2() -> FieldCtx {
    FieldCtx::prime(2).unwrap()
}

fn f3() -> FieldCtx {
    FieldCtx::prime(3).unwrap()
}

fn f4() -> FieldCtx {
    FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap()
}

fn example_poly() -> AdditivePoly {
    let f = f4();
    AdditivePoly::from_terms(&f, &[(0, f.gen()), (3, f.one())])
}

fn ceil_log(p: u64, n: u64) -> u32 {
    let (mut i, mut v) = (0, 1u64);
    while v < n {
        v *= p;
        i += 1;
    }
    i
}

fn elem(f: &FieldCtx, mut v: u64) -> FqElem {
    let mut c = Vec::new();
    for _ in 0..f.degree() {
        c.push(v % f.p());
        v /= f.p();
    }
    f.elem(&c).unwrap()
}

fn index_of(ext: &ExtCtx, z: &ExtElem) -> u64 {
    z.coords().iter().rev().fold(0, |acc, &c| acc * ext.p() + c)
}

/// `z -> A(z)` on all of `F_{q^n}` as an index table.
fn map_table(a: &AdditivePoly, ext: &ExtCtx) -> Vec<u64> {
    let size = ext.p().pow(ext.dim() as u32);
    (0..size).map(|i| index_of(ext, &a.eval_ext(ext, &ext.from_index(i)).unwrap())).collect()
}

fn random_additive(f: &FieldCtx, rng: &mut ChaCha8Rng) -> AdditivePoly {
    loop {
        let top = rng.gen_range(1..=3usize);
        let mut c: Vec<FqElem> = (0..top).map(|_| elem(f, rng.gen_range(0..f.q()))).collect();
        c.push(elem(f, rng.gen_range(1..f.q())));
        let a = AdditivePoly::new(f, c);
        if !AffinePoly::additive(a.clone()).is_exceptional() {
            return a;
        }
    }
}

struct Corpus {
    additive: Vec<AdditivePoly>,
    shifts: Vec<FqElem>,
    linearized: Vec<DensePoly>,
}

fn corpus() -> Corpus {
    let fields = [f2(), f3(), f4()];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut additive = Vec::new();
    let mut shifts = Vec::new();
    for i in 0..54 {
        let f = &fields[i % 3];
        additive.push(random_additive(f, &mut rng));
        shifts.push(elem(f, rng.gen_range(1..f.q())));
    }
    let mut linearized = Vec::new();
    for i in 0..33 {
        let f = &fields[i % 3];
        let deg = rng.gen_range(1..=5usize);
        let mut c = vec![elem(f, rng.gen_range(1..f.q()))];
        c.extend((1..deg).map(|_| elem(f, rng.gen_range(0..f.q()))));
        c.push(elem(f, rng.gen_range(1..f.q())));
        linearized.push(DensePoly::new(f, c));
    }
    Corpus { additive, shifts, linearized }
}

fn criterion_1() -> Outcome {
    let f = f4();
    let eng = Engine::with_defaults(&f);
    let a = example_poly();
    let aff = AffinePoly::additive(a.clone());
    for m in [Method::Modexp, Method::Matrix, Method::Auto] {
        ensure(eng.split_degree(&aff, 1, m) == Ok(3), || format!("s_A(1) by {m:?}"))?;
        ensure(eng.split_degree(&aff, 2, m) == Ok(6), || format!("s_A(2) by {m:?}"))?;
    }
    let cert = eng.companion(&a).map_err(|e| e.to_string())?;
    ensure(cert.m_split == 3 && cert.s0 == 1, || format!("M = {}, s0 = {}", cert.m_split, cert.s0))?;
    let alpha2 = f.mul(f.gen(), f.gen());
    ensure(alpha2 == f.add(f.gen(), f.one()), || "α^2 != α + 1".into())?;
    let want_star = AdditivePoly::from_terms(&f, &[(2, alpha2), (5, f.one())]);
    ensure(cert.a_star == want_star, || format!("A_* = {:?}", cert.a_star))?;
    let s_poly = AdditivePoly::from_terms(&f, &[(2, f.from_int(-1)), (8, f.one())]);
    ensure(cert.a_star.compose(&a) == Ok(s_poly), || "A_*(A) != X^256 - X^4".into())?;
    ensure(!cert.nilpotent, || "certificate reports nilpotent".into())?;
    // brute force: some z in F_{4^3} survives dim-many applications of A_*
    let ext = ExtCtx::new(&f, 3).unwrap();
    let table = map_table(&cert.a_star, &ext);
    let survives = (0..table.len() as u64).any(|z| (0..ext.dim()).fold(z, |w, _| table[w as usize]) != 0);
    ensure(survives, || "A_* nilpotent on F_64 by enumeration".into())?;
    ensure(cert.c_a == CStatus::Exact(Ratio::from_integer(3)), || format!("c_A = {:?}", cert.c_a))?;
    for n in 2..=64u64 {
        let want = 3 * 2u64.pow(ceil_log(2, n));
        ensure(cert.closed_formula(n) == Ok(want), || format!("closed formula at n = {n}"))?;
        for m in [Method::Auto, Method::Matrix] {
            let got = eng.split_degree(&aff, n, m);
            ensure(got == Ok(want), || format!("n = {n}, {m:?}: {got:?} != {want}"))?;
        }
    }
    Ok("s(1)=3 s(2)=6 s0=1 A_*=X^32+α^2X^4 c_A=3, n ≤ 64 by auto and matrix".into())
}

fn criterion_2() -> Outcome {
    let mut modexp_runs = 0;
    for p in [2u64, 3, 5] {
        let f = FieldCtx::prime(p).unwrap();
        let eng = Engine::with_defaults(&f);
        let a = AffinePoly::additive(AdditivePoly::new(&f, vec![f.from_int(-1), f.one()]));
        let lin = eng.linearized_formula(&DensePoly::from_ints(&f, &[-1, 1])).map_err(|e| e.to_string())?;
        for n in 1..=50u64 {
            let want = p.pow(ceil_log(p, n));
            ensure(lin.predict(n) == want, || format!("p = {p}, n = {n}: formula {}", lin.predict(n)))?;
            let m = eng.split_degree(&a, n, Method::Matrix);
            ensure(m == Ok(want), || format!("p = {p}, n = {n}: matrix {m:?}"))?;
            if p.checked_pow(n as u32).is_some_and(|d| d <= eng.config().dense_cap) {
                let d = eng.split_degree(&a, n, Method::Modexp);
                ensure(d == Ok(want), || format!("p = {p}, n = {n}: modexp {d:?}"))?;
                modexp_runs += 1;
            }
        }
    }
    Ok(format!("p ∈ {{2,3,5}}, n ≤ 50, three-way agreement ({modexp_runs} modexp runs)"))
}

fn splits(eng: &Engine, b: &AffinePoly) -> Result<Vec<u64>, String> {
    (1..=N_MAX).map(|n| eng.split_degree(b, n, Method::Auto).map_err(|e| e.to_string())).collect()
}

fn on_ladder(base: u64, s: u64, p: u64) -> bool {
    let mut v = base;
    while v < s {
        v *= p;
    }
    v == s
}

fn criterion_3(c: &Corpus) -> Outcome {
    let mut pairs = 0;
    for a in &c.additive {
        let f = a.field();
        let p = f.p();
        let eng = Engine::with_defaults(f);
        let b = AffinePoly::additive(a.clone());
        let s = splits(&eng, &b)?;
        for n in 1..=N_MAX {
            let sn = s[n as usize - 1];
            ensure(on_ladder(s[0], sn, p), || format!("{a:?}: s({n}) = {sn} off the ladder of {}", s[0]))?;
            if n * p <= N_MAX {
                let snp = s[(n * p) as usize - 1];
                ensure(snp == sn || snp == p * sn, || format!("{a:?}: s({}) = {snp}, s({n}) = {sn}", n * p))?;
                pairs += 1;
            }
        }
        for n in 1..=2 {
            let m = eng.split_degree(&b, n, Method::Matrix);
            ensure(m == Ok(s[n as usize - 1]), || format!("{a:?}: matrix disagrees at n = {n}"))?;
        }
    }
    Ok(format!("{} polynomials, {pairs} (n, np) pairs, 0 violations", c.additive.len()))
}

fn criterion_4(c: &Corpus) -> Outcome {
    let mut checks = 0;
    for (a, &b) in c.additive.iter().zip(&c.shifts) {
        let f = a.field();
        let p = f.p();
        let eng = Engine::with_defaults(f);
        let s = splits(&eng, &AffinePoly::additive(a.clone()))?;
        let sb = splits(&eng, &AffinePoly::new(a.clone(), b))?;
        for n in 0..N_MAX as usize {
            ensure(sb[n] == s[n] || sb[n] == p * s[n], || {
                format!("{a:?} + {b:?}: s_b({}) = {}, s({}) = {}", n + 1, sb[n], n + 1, s[n])
            })?;
            checks += 1;
        }
    }
    Ok(format!("{} shifted polynomials, {checks} checks, 0 violations", c.additive.len()))
}

/// `ord(g)`: least `i` with `x^i ≡ 1 mod g`, by stepping.
fn order_by_stepping(g: &DensePoly) -> u64 {
    let f = g.field();
    let x = DensePoly::x(f);
    let one = DensePoly::one(f).rem(g).unwrap();
    let mut h = x.rem(g).unwrap();
    let mut i = 1;
    while h != one {
        h = h.mul(&x).rem(g).unwrap();
        i += 1;
    }
    i
}

fn criterion_5(c: &Corpus) -> Outcome {
    let mut valid = 0;
    let mut cases = 0;
    for g in &c.linearized {
        let f = g.field();
        let eng = Engine::with_defaults(f);
        let a = AdditivePoly::lin_associate(g);
        let b = AffinePoly::additive(a.clone());
        if b.is_exceptional() {
            continue;
        }
        cases += 1;
        let lin = eng.linearized_formula(g).map_err(|e| e.to_string())?;
        ensure(lin.order == order_by_stepping(&lin.f0), || format!("{g:?}: ord(f0) mismatch"))?;
        for n in 1..=12 {
            let s = eng.split_degree(&b, n, Method::Auto);
            ensure(s == Ok(lin.predict(n)), || format!("{g:?}, n = {n}: s = {s:?}, formula {}", lin.predict(n)))?;
        }
        let cert = eng.companion(&a).map_err(|e| e.to_string())?;
        if cert.formula_valid {
            valid += 1;
            ensure(cert.c_a == CStatus::Exact(Ratio::from_integer(lin.c_a)), || {
                format!("{g:?}: certificate {:?} vs E·e = {}", cert.c_a, lin.c_a)
            })?;
        }
    }
    ensure(cases >= 30, || format!("only {cases} non-exceptional cases"))?;
    Ok(format!("{cases} polynomials, n ≤ 12; c_A = E·e on {valid} formula-valid certificates"))
}

/// Periodic points as the eventual image of the map.
fn periodic_by_images(table: &[u64]) -> usize {
    let mut set: BTreeSet<u64> = (0..table.len() as u64).collect();
    loop {
        let next: BTreeSet<u64> = set.iter().map(|&z| table[z as usize]).collect();
        if next.len() == set.len() {
            return set.len();
        }
        set = next;
    }
}

fn criterion_6() -> Outcome {
    let f = f2();
    let eng = Engine::with_defaults(&f);
    let mut cases = 0;
    for bits in 0u64..16 {
        let a = AdditivePoly::new(&f, (0..4).map(|i| f.from_int(((bits >> i) & 1) as i64)).collect());
        for n in 1..=12u64 {
            let e = eng.periodic_count(&a, n).map_err(|e| e.to_string())?;
            let ext = ExtCtx::new(&f, n as usize).unwrap();
            let brute = periodic_by_images(&map_table(&a, &ext));
            ensure(e.pi == BigUint::from(brute), || format!("{a:?}, n = {n}: pi = {}, enumeration {brute}", e.pi))?;
            ensure(&e.pi << e.delta as usize == BigUint::from(1u64 << n), || format!("{a:?}, n = {n}: pi·#W0 != 2^n"))?;
            cases += 1;
        }
    }
    Ok(format!("16 polynomials × n ≤ 12, {cases} cases"))
}

fn criterion_7() -> Outcome {
    let f = f4();
    let eng = Engine::with_defaults(&f);
    let a = example_poly();
    let ns: Vec<u64> = (1..=18).collect();
    let rep = eng.proportion_scan(&a, &ns).map_err(|e| e.to_string())?;
    ensure(rep.m_split == Some(3), || format!("M = {:?}", rep.m_split))?;
    // N by enumeration over F_{4^3}
    let ext = ExtCtx::new(&f, 3).unwrap();
    let table = map_table(&a, &ext);
    let depth = |z: u64| {
        let (mut w, mut j) = (z, 0);
        while w != 0 && j <= 64 {
            w = table[w as usize];
            j += 1;
        }
        if w == 0 { Some(j) } else { None }
    };
    let big_n = (0..table.len() as u64).filter_map(depth).max().unwrap();
    ensure(rep.big_n == Some(big_n), || format!("N = {:?}, enumeration {big_n}", rep.big_n))?;
    let bound = Ratio::new(BigUint::from(1u32), BigUint::from(2u32).pow(3 * big_n as u32));
    ensure(rep.lower_bound.as_ref() == Some(&bound), || "lower bound != p^(-dN)".into())?;
    let mut coprime = 0;
    let mut ladder = Vec::new();
    for (e, tag) in rep.entries.iter().zip(&rep.tags) {
        if let Some(t) = tag.coprime {
            ensure(t % 2 == 1 && e.n == 3 * t, || format!("bad tag at n = {}", e.n))?;
            ensure(e.proportion >= bound, || format!("n = {}: {} < bound", e.n, e.proportion))?;
            coprime += 1;
        }
        if let Some(i) = tag.p_power {
            ensure(e.n == 3 << i, || format!("bad tag at n = {}", e.n))?;
            ladder.push(e.proportion.clone());
        }
    }
    ensure(coprime == 3 && ladder.len() == 3, || format!("{coprime} coprime, {} ladder entries", ladder.len()))?;
    ensure(ladder[0] > ladder[1] && ladder[1] > ladder[2], || format!("not decreasing: {ladder:?}"))?;
    Ok(format!("N = {big_n}, bound 2^-{}, n ∈ {{3,9,15}} above it, n = 3,6,12 strictly decreasing", 3 * big_n))
}

fn criterion_8(c: &Corpus) -> Outcome {
    let mut cases: Vec<AffinePoly> = Vec::new();
    for (a, &b) in c.additive.iter().zip(&c.shifts) {
        cases.push(AffinePoly::additive(a.clone()));
        cases.push(AffinePoly::new(a.clone(), b));
    }
    for g in &c.linearized {
        let b = AffinePoly::additive(AdditivePoly::lin_associate(g));
        if !b.is_exceptional() {
            cases.push(b);
        }
    }
    let (mut compared, mut kernel_only) = (0, 0);
    for b in &cases {
        let f = b.field();
        let eng = Engine::with_defaults(f);
        let d = b.additive.sep_degree_index().unwrap() as u32;
        for n in 1..=N_MAX {
            let roots = BigUint::from(f.p()).pow(d * n as u32);
            let k = eng.factor_stats(b, n, FactorMethod::Kernel).map_err(|e| format!("{b:?}, n = {n}: {e}"))?;
            let rho_n = &k.rho * Ratio::from_integer(k.big_n.clone());
            ensure(rho_n == Ratio::from_integer(roots.clone()), || format!("{b:?}, n = {n}: rho·N != p^(dn)"))?;
            if roots <= BigUint::from(ORACLE_ROOTS_CAP) {
                let o = eng.factor_stats(b, n, FactorMethod::Oracle).map_err(|e| format!("{b:?}, n = {n}: {e}"))?;
                ensure(k.exact_counts == o.exact_counts && k.big_n == o.big_n && k.rho == o.rho, || {
                    format!("{b:?}, n = {n}: kernel {:?} vs oracle {:?}", k.exact_counts, o.exact_counts)
                })?;
                compared += 1;
            } else {
                kernel_only += 1;
            }
        }
    }
    Ok(format!("{compared} kernel/oracle comparisons, {kernel_only} kernel-only cases with rho·N = p^(dn)"))
}

fn compose_times(a: &AdditivePoly, k: u64) -> AdditivePoly {
    (1..k).fold(a.clone(), |acc, _| a.compose(&acc).unwrap())
}

fn criterion_9(c: &Corpus) -> Outcome {
    let mut checks = 0;
    for f in [f2(), f3(), f4()] {
        let p = f.p() as usize;
        for (s, r, i) in [(1usize, 0usize, 1u32), (1, 1, 1), (2, 0, 1), (2, 1, 1), (1, 0, 2)] {
            let lhs = compose_times(&AdditivePoly::build_s(&f, s, r), p.pow(i) as u64);
            let rhs = AdditivePoly::build_s(&f, s * p.pow(i), r * p.pow(i));
            ensure(lhs == rhs, || format!("S({s},{r})^(p^{i}) over F_{}", f.q()))?;
            checks += 1;
        }
    }
    for g in &c.linearized {
        let lg = AdditivePoly::lin_associate(g);
        let mut power = DensePoly::one(g.field());
        for n in 1..=4u64 {
            power = power.mul(g);
            ensure(compose_times(&lg, n) == AdditivePoly::lin_associate(&power), || format!("L_(f^{n}), f = {g:?}"))?;
            checks += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    for (i, a) in c.additive.iter().enumerate() {
        let f = a.field();
        let top = rng.gen_range(0..=8usize);
        let b = AdditivePoly::new(f, (0..=top).map(|_| elem(f, rng.gen_range(0..f.q()))).collect());
        let (quo, rem) = AdditivePoly::right_div(&b, a).map_err(|e| e.to_string())?;
        let back = quo.compose(a).and_then(|qa| qa.add(&rem)).map_err(|e| e.to_string())?;
        ensure(back == b, || format!("right_div round trip #{i}"))?;
        ensure(rem.top().map_or(true, |t| t < a.top().unwrap()), || format!("remainder too large #{i}"))?;
        checks += 1;
    }
    let mut certs = 0;
    let extra = c.linearized.iter().map(AdditivePoly::lin_associate);
    for a in c.additive.iter().cloned().chain(extra) {
        if AffinePoly::additive(a.clone()).is_exceptional() {
            continue;
        }
        let eng = Engine::with_defaults(a.field());
        let cert = eng.companion(&a).map_err(|e| e.to_string())?;
        let lhs = a.compose(&cert.a_star).map_err(|e| e.to_string())?;
        let rhs = cert.a_star.compose(&a).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("A ∘ A_* != A_* ∘ A for {a:?}"))?;
        certs += 1;
    }
    Ok(format!("{checks} identity checks, commutation on {certs} certificates"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<(u32, &str, Option<Duration>, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "worked F_4 example", Some(Duration::from_secs(10)), Box::new(criterion_1)),
        (2, "s(n) of X^p - X", None, Box::new(criterion_2)),
        (3, "s(np) ∈ {s(n), p·s(n)} and the ladder", None, Box::new(|| criterion_3(&corpus))),
        (4, "affine shifts", None, Box::new(|| criterion_4(&corpus))),
        (5, "q-linearized closed formula", None, Box::new(|| criterion_5(&corpus))),
        (6, "periodic points vs enumeration", Some(Duration::from_secs(60)), Box::new(criterion_6)),
        (7, "proportion oscillation", None, Box::new(criterion_7)),
        (8, "factor statistics", None, Box::new(|| criterion_8(&corpus))),
        (9, "identities", Some(Duration::from_secs(5)), Box::new(|| criterion_9(&corpus))),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail} [{took:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {why} [{took:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
