use proptest::prelude::*;
use rug::Float;
use trig_enclose::best_constants::{papenfuss_pq, rational_bound};
use trig_enclose::inequality_verifier::{
    compare_bounds, endpoint_limit, verify, verify_with, Dominance, Endpoint, Tweak, Verdict, VerifyOptions,
};
use trig_enclose::remainder_series::{h_sec, tanh_kernel, u_huygens, v_wilker};
use trig_enclose::Enclosure;

const PREC: u32 = 256;

fn f(x: f64) -> Float {
    Float::with_val(PREC, x)
}

/// Successive values differ in the asserted direction by more than the sum
/// of their enclosure widths.
fn assert_strictly_monotone(values: &[Enclosure], increasing: bool, what: &str) {
    for (i, w) in values.windows(2).enumerate() {
        let step = if increasing {
            w[1].mid() - w[0].mid()
        } else {
            w[0].mid() - w[1].mid()
        };
        assert!(step > w[0].width() + w[1].width(), "{what}: step {i}");
    }
}

fn half_pi_grid(n: usize) -> Vec<f64> {
    (1..n).map(|i| 1.57 * i as f64 / n as f64).collect()
}

#[test]
fn auxiliary_functions_are_monotone() {
    let xs = half_pi_grid(40);
    for n in 1..=3 {
        let v: Vec<Enclosure> = xs.iter().map(|&x| v_wilker(n, &f(x), PREC).unwrap()).collect();
        assert_strictly_monotone(&v, true, &format!("V_{n}"));
        let u: Vec<Enclosure> = xs.iter().map(|&x| u_huygens(n, &f(x), PREC).unwrap()).collect();
        assert_strictly_monotone(&u, true, &format!("U_{n}"));
        let h: Vec<Enclosure> = xs.iter().map(|&x| h_sec(n, &f(x), PREC).unwrap()).collect();
        assert_strictly_monotone(&h, false, &format!("H_{n}"));
    }
    for n in 0..=3 {
        let ts: Vec<f64> = (1..40).map(|i| 0.25 * f64::from(i)).collect();
        let g: Vec<Enclosure> = ts.iter().map(|&t| tanh_kernel(n, &f(t), PREC).unwrap()).collect();
        assert_strictly_monotone(&g, false, &format!("g_{n}"));
    }
}

#[test]
fn listed_verifications() {
    for id in ["wilker.classic", "chen.tan.N1", "huygens.sharp.N2", "sun-zhu.open"] {
        let r = verify(id, 2001, PREC).unwrap();
        assert_eq!(r.verdict, Verdict::Certified, "{id}");
        assert!(r.min_margin > 0);
    }
    let r = verify("becker-stark", 11, PREC).unwrap();
    assert_eq!(r.verdict, Verdict::Certified);
    let half_pi = std::f64::consts::FRAC_PI_2;
    assert!(r.argmin > 0 && r.argmin < half_pi);
}

#[test]
fn listed_comparisons() {
    let r = compare_bounds("becker-stark.lower", "banjac.lower", 2001, PREC).unwrap();
    assert_eq!(r.verdict, Dominance::Incomparable);
    assert!(r.witness_a.is_some() && r.witness_b.is_some());
    let r = compare_bounds("banjac.upper", "becker-stark.upper", 2001, PREC).unwrap();
    assert_eq!(r.verdict, Dominance::ADominates);
    let r = compare_bounds("chen.tan.N1.upper", "banjac.upper", 2001, PREC).unwrap();
    assert_eq!(r.verdict, Dominance::ADominates);
    assert!(compare_bounds("banjac.upper", "banjac.lower", 11, PREC).is_err());
}

#[test]
fn pairs_without_strict_comparison_flip() {
    for (a, b) in [
        ("wilker.sharp.N2.lower", "wilker.alphabeta.N1.lower"),
        ("wilker.sharp.N2.upper", "wilker.alphabeta.N1.upper"),
        ("huygens.sharp.N1.upper", "huygens.remark.upper"),
    ] {
        let r = compare_bounds(a, b, 2001, PREC).unwrap();
        assert_eq!(r.verdict, Dominance::Incomparable, "{a} vs {b}");
    }
}

#[test]
fn remaining_best_constants_are_sharp() {
    let cases: [(&str, Option<Vec<u32>>, bool); 8] = [
        ("wilker.sharp.N2", None, true),
        ("huygens.sharp.N2", None, true),
        ("wilker.alphabeta.N1", None, true),
        ("sec.remainder.N", Some(vec![0]), true),
        ("sec.remainder.N", Some(vec![2]), true),
        ("sun-zhu", None, false),
        ("wilker.conjecture2.N", Some(vec![1]), false),
        ("huygens.varrho.N", Some(vec![2]), false),
    ];
    for (id, orders, lower_sharp) in cases {
        let mut opts = VerifyOptions::new(1001, PREC);
        opts.guard = 1e-12;
        opts.orders = orders.clone();
        opts.tweak = Some(Tweak { lower: 0.0, upper: 1e-6 });
        let r = verify_with(id, &opts).unwrap();
        if id == "sun-zhu" {
            // The upper constant 256·513/(511π²) − 8π²/3 is not the limit, so
            // shaving 1e-6 off it keeps the inequality true.
            assert_eq!(r.verdict, Verdict::Certified);
        } else {
            assert_eq!(r.verdict, Verdict::Violated, "{id} {orders:?} upper");
        }
        if lower_sharp {
            opts.tweak = Some(Tweak { lower: 1e-6, upper: 0.0 });
            let r = verify_with(id, &opts).unwrap();
            assert_eq!(r.verdict, Verdict::Violated, "{id} {orders:?} lower");
            assert!(r.violation_at.unwrap() < 0.1);
        }
    }
}

#[test]
fn sec_remainder_limit_for_order_two() {
    let l = endpoint_limit("sec.remainder.N2.ratio", Endpoint::ZeroPlus, PREC).unwrap();
    assert!(l.passed);
    assert_eq!(l.claimed_form, "5/24");
    assert!(l.sample_points.windows(2).all(|w| w[1] < w[0] && w[1] > 0));
    for id in ["wilker.sharp.N2.ratio", "huygens.sharp.N1.ratio", "wilker.alphabeta.N1.ratio", "huygens.varrho.N3.ratio"] {
        for ep in [Endpoint::ZeroPlus, Endpoint::HalfPiMinus] {
            let l = endpoint_limit(id, ep, PREC).unwrap();
            assert!(l.passed && !l.diverged, "{id} {ep}");
        }
    }
}

#[test]
fn report_serializes_numbers_as_decimal_strings() {
    let r = verify("ge", 21, PREC).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let s = v["min_margin"].as_str().unwrap();
    assert_eq!(Float::with_val(PREC, Float::parse(s).unwrap()), r.min_margin);
    assert_eq!(v["verdict"], "certified");
}

#[test]
fn papenfuss_pq_sandwich() {
    let sectan = |x: f64| {
        let e = Enclosure::point(f(x));
        &(&e * &e.sec().sqr()) - &e.tan()
    };
    let den = |x: f64| {
        let e = Enclosure::point(f(x));
        (&Enclosure::pi(PREC).sqr() - &e.sqr().mul_int(4)).sqr()
    };
    let (p, _) = papenfuss_pq(&f(0.8), PREC).unwrap();
    assert!(p.div(&den(0.8)).certainly_lt(&sectan(0.8)));
    let (_, q) = papenfuss_pq(&f(1.4), PREC).unwrap();
    assert!(sectan(1.4).certainly_lt(&q.div(&den(1.4))));
    assert!(papenfuss_pq(&f(1.6), PREC).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tan_bounds_sandwich_tan_over_x(x in 0.001f64..1.57) {
        let t = Enclosure::point(f(x));
        let target = t.tan().div(&t);
        for family in ["becker-stark", "banjac", "chen.tan.N1"] {
            let lo = rational_bound(&format!("{family}.lower"), &f(x), PREC).unwrap();
            let hi = rational_bound(&format!("{family}.upper"), &f(x), PREC).unwrap();
            prop_assert!(lo.certainly_lt(&target) && target.certainly_lt(&hi), "{} at {}", family, x);
        }
    }

    #[test]
    fn sectan_lower_bounds_are_ordered(x in 0.01f64..1.57) {
        let ge = rational_bound("ge.lower", &f(x), PREC).unwrap();
        let sz = rational_bound("sun-zhu.lower", &f(x), PREC).unwrap();
        let p = rational_bound("chen.sectan.N2.lower", &f(x), PREC).unwrap();
        prop_assert!(ge.certainly_lt(&sz) || x > 1.0);
        prop_assert!(!p.certainly_lt(&ge));
    }
}
