use iteradd_core::splitting::separable_iterate;
use iteradd_core::{AdditivePoly, AffinePoly, Engine, Error, ExtCtx, FieldCtx, FqElem, Method};
use proptest::prelude::*;

fn field(k: u8) -> FieldCtx {
    match k % 3 {
        0 => FieldCtx::prime(2).unwrap(),
        1 => FieldCtx::prime(3).unwrap(),
        _ => FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap(),
    }
}

fn elem(f: &FieldCtx, v: u64) -> FqElem {
    let mut c = Vec::new();
    let mut v = v % f.q();
    for _ in 0..f.degree() {
        c.push(v % f.p());
        v /= f.p();
    }
    f.elem(&c).unwrap()
}

fn poly(f: &FieldCtx, raw: &[u64]) -> AdditivePoly {
    let mut c: Vec<FqElem> = raw.iter().map(|&v| elem(f, v)).collect();
    if let Some(last) = c.last_mut() {
        if last.is_zero() {
            *last = f.one();
        }
    }
    AdditivePoly::new(f, c)
}

fn coeffs() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..16, 2..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(k in 0u8..3, a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = field(k);
        let (a, b, c) = (poly(&f, &a), poly(&f, &b), poly(&f, &c));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn iterates_add_up(k in 0u8..3, a in coeffs(), n in 0u64..5, m in 0u64..5) {
        let f = field(k);
        let a = poly(&f, &a);
        prop_assert_eq!(a.iterate(n).compose(&a.iterate(m)).unwrap(), a.iterate(n + m));
    }

    #[test]
    fn right_division_reconstructs(k in 0u8..3, b in prop::collection::vec(0u64..16, 1..=8), a in coeffs()) {
        let f = field(k);
        let (b, a) = (poly(&f, &b), poly(&f, &a));
        let (quo, rm) = AdditivePoly::right_div(&b, &a).unwrap();
        prop_assert!(rm.top().map_or(true, |t| t < a.top().unwrap()));
        prop_assert_eq!(quo.compose(&a).unwrap().add(&rm).unwrap(), b);
    }

    #[test]
    fn evaluation_respects_composition(k in 0u8..3, a in coeffs(), b in coeffs(), z in 0u64..4096) {
        let f = field(k);
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        let ext = ExtCtx::new(&f, 3).unwrap();
        let size = ext.p().pow(ext.dim() as u32);
        let z = ext.from_index(z % size);
        let inner = b.eval_ext(&ext, &z).unwrap();
        prop_assert_eq!(a.compose(&b).unwrap().eval_ext(&ext, &z).unwrap(), a.eval_ext(&ext, &inner).unwrap());
        prop_assert_eq!(a.fold(3).eval_ext(&ext, &z).unwrap(), a.eval_ext(&ext, &z).unwrap());
    }

    #[test]
    fn routes_agree(k in 0u8..3, a in coeffs(), shift in 0u64..16, n in 1u64..6) {
        let f = field(k);
        let b = AffinePoly::new(poly(&f, &a), elem(&f, shift));
        let eng = Engine::with_defaults(&f);
        let s = eng.split_degree(&b, n, Method::Matrix).unwrap();
        prop_assert_eq!(eng.split_degree_linearized(&b, n).unwrap(), s);
        match eng.split_degree(&b, n, Method::Modexp) {
            Ok(t) => prop_assert_eq!(t, s),
            Err(e) => prop_assert!(matches!(e, Error::CapExceeded { .. }), "{:?}", e),
        }
    }

    #[test]
    fn frobenius_power_detects_splitting(k in 0u8..3, a in coeffs(), shift in 0u64..16, n in 1u64..4) {
        let f = field(k);
        let b = AffinePoly::new(poly(&f, &a), elem(&f, shift));
        prop_assume!(!b.is_exceptional());
        let eng = Engine::with_defaults(&f);
        let s = eng.split_degree(&b, n, Method::Auto).unwrap();
        let (sep, c) = separable_iterate(&b, n).unwrap();
        for e in 1..=s {
            let (r, v) = eng.frobenius_power(&sep, c, e).unwrap();
            let fixed = r == AdditivePoly::x(&f) && v.is_zero();
            prop_assert_eq!(fixed, e % s == 0, "e = {}, s = {}", e, s);
        }
    }

    #[test]
    fn splitting_steps_by_one_or_p(k in 0u8..3, a in coeffs(), n in 1u64..5) {
        let f = field(k);
        let b = AffinePoly::additive(poly(&f, &a));
        let eng = Engine::with_defaults(&f);
        let p = f.p();
        let s = eng.split_degree(&b, n, Method::Auto).unwrap();
        let t = eng.split_degree(&b, n * p, Method::Auto).unwrap();
        prop_assert!(t == s || t == p * s, "s({}) = {}, s({}) = {}", n, s, n * p, t);
    }
}
