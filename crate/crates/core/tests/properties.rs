use proptest::prelude::*;

use stablemap::qfield::{format_bigrat, parse_bigrat, rat, rat_frac, upoly_gcd, BigRat, RatFunc, UPoly};
use stablemap::series::{Grading, MultiSeries};

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat_frac(n, d))
}

fn upoly(max_len: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(UPoly::from_coeffs)
}

fn nonzero_upoly(max_len: usize) -> impl Strategy<Value = UPoly> {
    upoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (upoly(4), nonzero_upoly(3)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

const KMAX: usize = 2;
const DMAX: [usize; 2] = [1, 2];

/// Series over a rank-2 box whose coefficients are small rationals and
/// sometimes `u`.
fn series(constant_term: bool) -> impl Strategy<Value = MultiSeries> {
    let cells = (KMAX + 1) * (DMAX[0] + 1) * (DMAX[1] + 1);
    prop::collection::vec((small_rat(), any::<bool>()), cells).prop_map(move |cs| {
        let g = Grading::new(2).unwrap();
        MultiSeries::from_fn(&g, KMAX, &DMAX, |k, d| {
            let (c, with_u) = &cs[k + (KMAX + 1) * (d[0] + (DMAX[0] + 1) * d[1])];
            if !constant_term && k == 0 && d.iter().all(|&x| x == 0) {
                return RatFunc::zero();
            }
            let c = RatFunc::constant(c.clone());
            if *with_u {
                &c * &RatFunc::u()
            } else {
                c
            }
        })
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bigrat_text_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_bigrat(&format_bigrat(&r)).unwrap(), r);
    }

    #[test]
    fn upoly_distributes(a in upoly(5), b in upoly(5), c in upoly(5)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &a), &UPoly::zero());
    }

    #[test]
    fn division_with_remainder(a in upoly(7), d in nonzero_upoly(4)) {
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn gcd_is_monic_common_divisor(a in nonzero_upoly(4), b in upoly(4), h in nonzero_upoly(3)) {
        let (x, y) = (&a * &h, &b * &h);
        let g = upoly_gcd(&x, &y).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(x.rem(&g).unwrap().is_zero());
        prop_assert!(y.rem(&g).unwrap().is_zero());
        prop_assert!(g.rem(&h).unwrap().is_zero());
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(&(&a * &b) + &a, &a * &(&b + &RatFunc::one()));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
        prop_assert!(a.den().is_monic());
        let back: RatFunc = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn ratfunc_normal_form(n in upoly(4), d in nonzero_upoly(3), h in nonzero_upoly(3)) {
        let plain = RatFunc::new(n.clone(), d.clone()).unwrap();
        let padded = RatFunc::new(&n * &h, &d * &h).unwrap();
        prop_assert_eq!(plain, padded);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in upoly(5), b in upoly(5), x in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn series_ring_laws(a in series(true), b in series(true), c in series(true)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().mul(&c).unwrap(),
            a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn leibniz_rule(a in series(true), b in series(true)) {
        let k = KMAX - 1;
        let lhs = a.mul(&b).unwrap().dt();
        let rhs = a.dt().mul(&b.truncate(k, &DMAX).unwrap()).unwrap()
            .add(&a.truncate(k, &DMAX).unwrap().mul(&b.dt()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_inverts_log(g in series(false)) {
        let one = MultiSeries::one(g.grading(), KMAX, &DMAX).unwrap();
        let back = g.log1p().unwrap().exp_nilpotent().unwrap();
        prop_assert_eq!(back, one.add(&g).unwrap());
    }

    #[test]
    fn binomial_powers_add(g in series(false), p in -3i64..=3) {
        let one = MultiSeries::one(g.grading(), KMAX, &DMAX).unwrap();
        let a = RatFunc::u();
        let b = RatFunc::from_int(p);
        let lhs = g.pow_binomial(&a).unwrap().mul(&g.pow_binomial(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs.clone(), g.pow_binomial(&(&a + &b)).unwrap());
        let inverse = g.pow_binomial(&RatFunc::from_int(-1)).unwrap();
        prop_assert_eq!(inverse.mul(&one.add(&g).unwrap()).unwrap(), one);
    }

    #[test]
    fn series_json_round_trip(a in series(true)) {
        let text = a.to_json();
        let back = MultiSeries::from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn eval_u_commutes_with_mul(a in series(true), b in series(true), x in 2i64..=5) {
        let x = rat(x);
        prop_assert_eq!(
            a.mul(&b).unwrap().eval_u(&x).unwrap(),
            a.eval_u(&x).unwrap().mul(&b.eval_u(&x).unwrap()).unwrap()
        );
    }
}
