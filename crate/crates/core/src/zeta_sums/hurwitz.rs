//! Hurwitz zeta values `ζ(s, a) = Σ_{n≥0} (a+n)^{-s}` and differences
//! `ζ(s, a) − ζ(s, a+h)` by Euler–Maclaurin summation.
//!
//! After `M` direct terms the tail from `b = a + M` is
//!
//! ```text
//! b^{1-s}/(s-1) + b^{-s}/2 + Σ_{i=1}^{p} B_2i/(2i)! · (s)_{2i-1} · b^{-s-2i+1} + R
//! ```
//!
//! Every summand `f(x) = (b+x)^{-s}`, and every difference
//! `(b+x)^{-s} − (b+h+x)^{-s}`, is completely monotone, so `|R|` is at most
//! the first omitted correction term.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rug::{Float, Rational};

use crate::arith::Enclosure;
use crate::exact_numbers::{bernoulli, factorial};

const MAX_P: usize = 200;

static COEFFS: RwLock<Option<HashMap<u32, Arc<Vec<Enclosure>>>>> = RwLock::new(None);

/// `B_2i/(2i)!` for `i = 1..=count` (index 0 holds `i = 1`).
fn bernoulli_coeffs(count: usize, prec: u32) -> Arc<Vec<Enclosure>> {
    if let Some(v) = COEFFS
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .as_ref()
        .and_then(|m| m.get(&prec))
    {
        if v.len() >= count {
            return v.clone();
        }
    }
    let v: Vec<Enclosure> = (1..=count as u32)
        .map(|i| {
            let r = bernoulli(2 * i).expect("index within cap") / factorial(2 * i);
            Enclosure::from_rational(&r, prec)
        })
        .collect();
    let v = Arc::new(v);
    COEFFS
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert(prec, v.clone());
    v
}

/// Picks the number of correction terms `p` and the smallest admissible
/// tail start `b` minimizing total work for exponents up to `s_max`.
fn plan(s_max: u32, prec: u32) -> (usize, f64) {
    let bits = f64::from(prec + 10);
    let mut best = (MAX_P, f64::INFINITY);
    let mut best_cost = f64::INFINITY;
    for p in 4..=MAX_P {
        let r = (-bits / (2.0 * p as f64 + 2.0)).exp2();
        let b = (f64::from(s_max) + 2.0 * p as f64 + 2.0) / (2.0 * std::f64::consts::PI * r);
        let cost = b + p as f64;
        if cost < best_cost {
            best_cost = cost;
            best = (p, b.ceil() + 1.0);
        }
    }
    best
}

fn direct_terms(a: &Rational, h: Option<&Rational>, s_list: &[u32], count: u64, prec: u32) -> Vec<Enclosure> {
    let mut sums = vec![Enclosure::zero(prec); s_list.len()];
    for n in 0..count {
        let base = Rational::from(a + n);
        let x = Enclosure::from_rational(&base, prec).recip();
        let y = h.map(|h| Enclosure::from_rational(&Rational::from(&base + h), prec).recip());
        let mut prev_s = 0u32;
        let mut px = Enclosure::from_int(1, prec);
        let mut py = Enclosure::from_int(1, prec);
        for (slot, &s) in sums.iter_mut().zip(s_list) {
            px = &px * &x.powi((s - prev_s) as i32);
            if let Some(y) = &y {
                py = &py * &y.powi((s - prev_s) as i32);
            }
            prev_s = s;
            let term = if h.is_some() { &px - &py } else { px.clone() };
            *slot = &*slot + &term;
        }
    }
    sums
}

/// `Σ_{n≥0} (b+n)^{-s}` for `s ≥ 2`, optionally minus the same sum at
/// `b + h` (then `s ≥ 1` is allowed), evaluated purely by the
/// Euler–Maclaurin tail with `p` correction terms.
fn em_tail(s: u32, b: &Enclosure, bh: Option<&Enclosure>, p: usize, prec: u32) -> Enclosure {
    let coeffs = bernoulli_coeffs(p + 1, prec);
    let sf = Enclosure::from_int(s, prec);
    let integral = |b: &Enclosure| -> Enclosure {
        // b^{1-s}/(s-1)
        b.powi(1 - s as i32).div_int(i64::from(s) - 1)
    };
    let mut total = match bh {
        None => integral(b),
        Some(c) if s == 1 => c.div(b).ln(),
        Some(c) => &integral(b) - &integral(c),
    };
    let b_inv = b.recip();
    let b_inv2 = b_inv.sqr();
    let mut ub = b_inv.powi(s as i32);
    let c_inv = bh.map(Enclosure::recip);
    let c_inv2 = c_inv.as_ref().map(Enclosure::sqr);
    let mut uc = c_inv.as_ref().map(|c| c.powi(s as i32));
    let half = |u: &Enclosure| u.mul_pow2(-1);
    total = &total + &half(&ub);
    if let Some(uc) = &uc {
        total = &total - &half(uc);
    }
    // u_i = (s)_{2i-1} b^{-s-2i+1}; start from b^{-s} and multiply in steps.
    ub = &(&ub * &sf) * &b_inv;
    if let (Some(u), Some(ci)) = (uc.as_mut(), &c_inv) {
        *u = &(&*u * &sf) * ci;
    }
    for i in 1..=p {
        let c_i = &coeffs[i - 1];
        let mut term = ub.clone();
        if let Some(u) = &uc {
            term = &term - u;
        }
        total = &total + &(c_i * &term);
        let k = 2 * i as i64;
        let grow = Enclosure::from_int((i64::from(s) + k - 1) * (i64::from(s) + k), prec);
        ub = &(&ub * &grow) * &b_inv2;
        if let (Some(u), Some(ci2)) = (uc.as_mut(), &c_inv2) {
            *u = &(&*u * &grow) * ci2;
        }
    }
    // |R| ≤ |B_{2p+2}/(2p+2)!| (s)_{2p+1} b^{-s-2p-1}; for differences the
    // larger of the two positive terms bounds their difference.
    let bound = (&coeffs[p] * &ub).mag();
    total.widen(&bound)
}

fn split_point(a: &Rational, s_max: u32, prec: u32) -> (u64, usize) {
    let (p, b_min) = plan(s_max, prec);
    let a_f = a.to_f64();
    let m = if a_f >= b_min { 0 } else { (b_min - a_f).ceil() as u64 };
    (m, p)
}

/// `ζ(s, a)` for each `s` in ascending `s_list` (all `≥ 2`), `a > 0`.
pub fn hurwitz_many(s_list: &[u32], a: &Rational, prec: u32) -> Vec<Enclosure> {
    assert!(s_list.windows(2).all(|w| w[0] <= w[1]), "exponents must ascend");
    assert!(s_list.first().is_none_or(|&s| s >= 2), "ζ(s, a) needs s ≥ 2");
    assert!(*a > 0, "ζ(s, a) needs a > 0");
    let wp = prec + 32;
    let s_max = *s_list.last().unwrap_or(&2);
    let (m, p) = split_point(a, s_max, wp);
    let head = direct_terms(a, None, s_list, m, wp);
    let b = Enclosure::from_rational(&Rational::from(a + m), wp);
    head.into_iter()
        .zip(s_list)
        .map(|(h, &s)| (&h + &em_tail(s, &b, None, p, wp)).with_prec(prec))
        .collect()
}

pub fn hurwitz(s: u32, a: &Rational, prec: u32) -> Enclosure {
    hurwitz_many(&[s], a, prec).pop().expect("one value")
}

/// `ζ(s, a) − ζ(s, a + h)` for each ascending `s ≥ 1`, `a, h > 0`.
pub fn hurwitz_diff_many(s_list: &[u32], a: &Rational, h: &Rational, prec: u32) -> Vec<Enclosure> {
    assert!(s_list.windows(2).all(|w| w[0] <= w[1]), "exponents must ascend");
    assert!(s_list.first().is_none_or(|&s| s >= 1));
    assert!(*a > 0 && *h > 0);
    let wp = prec + 32;
    let s_max = *s_list.last().unwrap_or(&1);
    let (m, p) = split_point(a, s_max.max(2), wp);
    let head = direct_terms(a, Some(h), s_list, m, wp);
    let b_rat = Rational::from(a + m);
    let b = Enclosure::from_rational(&b_rat, wp);
    let bh = Enclosure::from_rational(&Rational::from(&b_rat + h), wp);
    head.into_iter()
        .zip(s_list)
        .map(|(d, &s)| (&d + &em_tail(s, &b, Some(&bh), p, wp)).with_prec(prec))
        .collect()
}

/// `Σ_{n≥0} (b+n)^{-s}` from the correction series alone, for a start `b`
/// already large enough; returns the value and the remainder bound used.
pub fn tail_from(s: u32, b: &Rational, prec: u32) -> Option<(Enclosure, Float)> {
    let wp = prec + 32;
    let (p, b_min) = plan(s, wp);
    if b.to_f64() < b_min {
        return None;
    }
    let be = Enclosure::from_rational(b, wp);
    let v = em_tail(s, &be, None, p, wp);
    let r = v.width();
    Some((v.with_prec(prec), r))
}

/// Smallest start admissible for [`tail_from`] at this exponent and precision.
pub fn min_tail_start(s: u32, prec: u32) -> f64 {
    plan(s, prec + 32).1
}
