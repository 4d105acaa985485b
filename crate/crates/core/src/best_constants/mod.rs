//! Sharp constants of the Wilker, Huygens, Papenfuss–Bach and secant
//! remainder inequalities, and the registry of displayed bound functions.
//!
//! Constants defined by series are computed twice: once by summing the
//! defining series with a certified tail, once as an exact π-power form
//! obtained by partial fractions. The two routes are kept separate so either
//! can check the other.

pub mod bounds;

use std::fmt;

use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::arith::{Enclosure, TailBound};
use crate::error::{domain, rejected, Result};
use crate::exact_numbers::{bernoulli, euler_number, factorial, series_coefficient, SeriesFunction};
use crate::polygamma::{polygamma, tail_4k2_minus_1_sq};
use crate::zeta_sums::{
    alt_even_zeta, alt_odd_sum, brute_sum, even_zeta, odd_zeta_even, Basis, ClosedForm, RationalRule,
    TermRule,
};

pub use bounds::{rational_bound, BoundExpr, BoundPolynomial, BoundSpec, BoundTerm, Denominator, Side, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    ExactRational,
    PiClosedForm,
    SeriesEvaluated,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::ExactRational => "exact-rational",
            Exactness::PiClosedForm => "pi-closed-form",
            Exactness::SeriesEvaluated => "series-evaluated",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SharpConstant {
    /// Exact value, when one is known.
    pub form: Option<ClosedForm>,
    /// Certified enclosure; for series-evaluated constants this comes from
    /// the series, not from `form`.
    pub value: Enclosure,
    pub exactness: Exactness,
    pub tail: Option<TailBound>,
}

impl SharpConstant {
    fn exact(form: ClosedForm, prec: u32) -> Self {
        let rational = form.terms().all(|(b, _)| *b == Basis::Pi(0));
        SharpConstant {
            value: form.eval(prec),
            form: Some(form),
            exactness: if rational {
                Exactness::ExactRational
            } else {
                Exactness::PiClosedForm
            },
            tail: None,
        }
    }

    fn rational(r: Rational, prec: u32) -> Self {
        SharpConstant::exact(ClosedForm::rational(r), prec)
    }

    fn series(form: Option<ClosedForm>, value: Enclosure, tail: TailBound) -> Self {
        SharpConstant {
            form,
            value,
            exactness: Exactness::SeriesEvaluated,
            tail: Some(tail),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        let f = self.form.as_ref()?;
        if f.terms().all(|(b, _)| *b == Basis::Pi(0)) {
            Some(f.coefficient(Basis::Pi(0)))
        } else {
            None
        }
    }

    pub fn numeric(&self) -> Float {
        self.value.mid()
    }
}

#[derive(Debug, Clone)]
pub struct SharpConstantPair {
    pub inequality_id: String,
    pub order: u32,
    pub lower: SharpConstant,
    pub upper: SharpConstant,
}

impl SharpConstantPair {
    pub fn exactness(&self) -> Exactness {
        self.lower.exactness.max(self.upper.exactness)
    }
}

fn abs_b(n: u32) -> Result<Rational> {
    Ok(bernoulli(n)?.abs())
}

/// `C(m + n − 1, n)`, the coefficient of `u^n` in `(1 − u)^{-m}`.
fn multichoose(m: u32, n: u32) -> Integer {
    if n == 0 {
        Integer::from(1)
    } else if m == 0 {
        Integer::new()
    } else {
        Integer::from(Integer::binomial_u(m + n - 1, n))
    }
}

fn pow2(k: u32) -> Integer {
    Integer::from(1) << k
}

fn tolerance(prec: u32) -> f64 {
    2f64.powi(-(prec.min(1000) as i32 - 8)).max(1e-300)
}

/// `Σ_{k≥1} σ_k / (k^{2a} (k² − 1/4)^b)` in exact π-power form, with
/// `σ_k = (−1)^{k+1}` when `alternating`.
///
/// The summand is even in `k`, so its partial fractions only involve even
/// powers of `1/k` and matched pairs `(k − 1/2)^{-i}`, `(−1)^i (k + 1/2)^{-i}`.
pub fn half_integer_pole_sum(a: u32, b: u32, alternating: bool) -> Result<ClosedForm> {
    if b == 0 {
        return Err(rejected("need at least one factor k² − 1/4"));
    }
    let mut out = ClosedForm::zero();
    // Pole at 0: (k² − 1/4)^{-b} = (−4)^b Σ_n C(b+n−1, n) 4^n k^{2n}.
    let sign_b = if b % 2 == 0 { 1 } else { -1 };
    for n in 0..a {
        let coeff = Rational::from(
            Integer::from(sign_b) * pow2(2 * b) * multichoose(b, n) * pow2(2 * n),
        );
        let m = a - n;
        let s = if alternating {
            alt_even_zeta(m, 64)?.form
        } else {
            even_zeta(m, 64)?.form
        };
        out = out.add(&s.scale(&coeff));
    }
    // Pole at 1/2, u = k − 1/2: ψ(u) = (1/2 + u)^{-2a} (1 + u)^{-b}.
    let series_a: Vec<Rational> = (0..b)
        .map(|n| {
            let c = multichoose(2 * a, n);
            let s = if n % 2 == 0 { c } else { -c };
            Rational::from(s * pow2(2 * a) * pow2(n))
        })
        .collect();
    let series_b: Vec<Rational> = (0..b)
        .map(|n| {
            let c = multichoose(b, n);
            Rational::from(if n % 2 == 0 { c } else { -c })
        })
        .collect();
    let psi: Vec<Rational> = (0..b as usize)
        .map(|n| {
            (0..=n)
                .map(|i| Rational::from(&series_a[i] * &series_b[n - i]))
                .fold(Rational::new(), |acc, x| acc + x)
        })
        .collect();
    for i in 1..=b {
        let c_i = Rational::from(&psi[(b - i) as usize] * pow2(i));
        let odd = i % 2 == 1;
        // Σ σ_k [(2k−1)^{-i} + (−1)^i (2k+1)^{-i}]
        let pair = match (alternating, odd) {
            (false, true) | (true, false) => ClosedForm::rational(1),
            (false, false) => odd_zeta_even(i / 2, 64)?.form.scale(&Rational::from(2)).add(&ClosedForm::rational(-1)),
            (true, true) => alt_odd_sum((i - 1) / 2, 64)?.form.scale(&Rational::from(2)).add(&ClosedForm::rational(-1)),
        };
        out = out.add(&pair.scale(&c_i));
    }
    Ok(out)
}

fn recip_rule(factors: &[(i64, i64, u32)], alternating: bool) -> TermRule {
    let kept: Vec<(i64, i64, u32)> = factors.iter().copied().filter(|f| f.2 > 0).collect();
    TermRule::Rational(RationalRule::reciprocal_of(&kept, alternating))
}

fn sum_series(factors: &[(i64, i64, u32)], alternating: bool, start: u64, prec: u32) -> Result<(Enclosure, TailBound)> {
    let s = brute_sum(&recip_rule(factors, alternating), start, prec + 16, tolerance(prec))?;
    Ok((s.value, s.tail))
}

fn add_tails(a: &TailBound, b: &TailBound) -> TailBound {
    TailBound::new(a.terms.max(b.terms), Float::with_val(64, &a.bound + &b.bound))
}

/// `λ_N = N 2^{2N+3} |B_{2N+2}| / (2N+2)!`.
pub fn wilker_lambda(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(rejected("λ_N needs N ≥ 1"));
    }
    series_coefficient(SeriesFunction::Wilker, n)
}

/// Exact π-form of `μ_N`.
pub fn wilker_mu_form(n: u32) -> Result<ClosedForm> {
    if n == 0 {
        return Err(rejected("μ_N needs N ≥ 1"));
    }
    let first = half_integer_pole_sum(n - 1, 2, false)?.scale(&Rational::from(4 * n));
    let second = half_integer_pole_sum(n, 2, false)?.scale(&Rational::from(n - 1));
    Ok(first
        .sub(&second)
        .times_pi_power(-(2 * n as i32 + 2))
        .expect("π-power form"))
}

/// `(λ_N, μ_N)`; `μ_N` is summed from its defining series.
pub fn wilker_lambda_mu(n: u32, prec: u32) -> Result<SharpConstantPair> {
    let lambda = wilker_lambda(n)?;
    let wp = prec + 16;
    // μ_N = (64N Σ 1/(k^{2N−2}(4k²−1)²) − 16(N−1) Σ 1/(k^{2N}(4k²−1)²)) / π^{2N+2}
    let (s1, t1) = if n == 1 {
        let v = tail_4k2_minus_1_sq(0, wp);
        (v, TailBound::new(0, Float::new(64)))
    } else {
        sum_series(&[(1, 0, 2 * n - 2), (2, -1, 2), (2, 1, 2)], false, 1, wp)?
    };
    let (s2, t2) = sum_series(&[(1, 0, 2 * n), (2, -1, 2), (2, 1, 2)], false, 1, wp)?;
    let combo = &s1.mul_int(64 * i64::from(n)) - &s2.mul_int(16 * (i64::from(n) - 1));
    let mu = (&combo * &Enclosure::pi(wp).powi(-(2 * n as i32 + 2))).with_prec(prec);
    Ok(SharpConstantPair {
        inequality_id: "wilker".into(),
        order: n,
        lower: SharpConstant::rational(lambda, prec),
        upper: SharpConstant::series(Some(wilker_mu_form(n)?), mu, add_tails(&t1, &t2)),
    })
}

fn quartic_head(n: u32) -> Rational {
    (1..=n).fold(Rational::new(), |acc, k| acc + Rational::from((1, Integer::from(k).pow(4))))
}

/// `α_N = (4/π⁴) Σ_{k>N} 1/k⁴ = 2/45 − (4/π⁴) Σ_{k≤N} 1/k⁴`.
pub fn wilker_alpha_form(n: u32) -> ClosedForm {
    ClosedForm::rational(Rational::from((2, 45))).plus(quartic_head(n) * Rational::from(-4), Basis::Pi(-4))
}

/// `β_N = 4/π² − (32/π⁴)(Σ_{k<N} 1/(2k+1)² + (N+1)/(2N+1)²)`.
pub fn wilker_beta_form(n: u32) -> ClosedForm {
    let odd = u64::from(2 * n + 1);
    let mut r = Rational::from((u64::from(n) + 1, odd * odd));
    for k in 0..u64::from(n) {
        r += Rational::from((1, (2 * k + 1) * (2 * k + 1)));
    }
    ClosedForm::term(4, Basis::Pi(-2)).plus(r * Rational::from(-32), Basis::Pi(-4))
}

/// `(α_N, β_N)` through the polygamma representations
/// `α_N = 2ψ‴(N+1)/(3π⁴)`, `β_N = 8((2N+1)²ψ′(N+1/2) − 4(N+1))/((2N+1)²π⁴)`.
pub fn wilker_alpha_beta(n: u32, prec: u32) -> Result<SharpConstantPair> {
    let wp = prec + 16;
    let pi4 = Enclosure::pi(wp).powi(-4);
    let p3 = polygamma(3, &Rational::from(n + 1), wp)?;
    let alpha = (&p3.value.mul_int(2).div_int(3) * &pi4).with_prec(prec);
    let p1 = polygamma(1, &Rational::from((2 * n + 1, 2)), wp)?;
    let odd2 = i64::from(2 * n + 1).pow(2);
    let inner = &p1.value.mul_int(odd2) - &Enclosure::from_int(4 * (i64::from(n) + 1), wp);
    let beta = (&inner.mul_int(8).div_int(odd2) * &pi4).with_prec(prec);
    Ok(SharpConstantPair {
        inequality_id: "wilker-alphabeta".into(),
        order: n,
        lower: SharpConstant::series(Some(wilker_alpha_form(n)), alpha, p3.tail),
        upper: SharpConstant::series(Some(wilker_beta_form(n)), beta, p1.tail),
    })
}

/// `(p_N, q_N) = (0, λ_N)`.
pub fn wilker_q(n: u32) -> Result<(Rational, Rational)> {
    Ok((Rational::new(), wilker_lambda(n)?))
}

/// `a_N = (2^{2N+2} − 4)|B_{2N+2}|/(2N+2)!`.
pub fn huygens_a(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(rejected("a_N needs N ≥ 1"));
    }
    Ok(abs_b(2 * n + 2)? * (pow2(2 * n + 2) - 4u32) / factorial(2 * n + 2))
}

/// Exact π-form of `b_N`.
pub fn huygens_b_form(n: u32) -> Result<ClosedForm> {
    if n == 0 {
        return Err(rejected("b_N needs N ≥ 1"));
    }
    let alt = half_integer_pole_sum(n, 1, true)?.scale(&Rational::from(4));
    let plain = half_integer_pole_sum(n, 1, false)?.scale(&Rational::from(2));
    Ok(alt.sub(&plain).times_pi_power(-(2 * n as i32 + 2)).expect("π-power form"))
}

/// `(a_N, b_N)`; `b_N` from its four defining series.
pub fn huygens_a_b(n: u32, prec: u32) -> Result<SharpConstantPair> {
    let a = huygens_a(n)?;
    let wp = prec + 16;
    let e = 2 * n;
    let (s1, t1) = sum_series(&[(1, 0, e), (2, -1, 1)], true, 1, wp)?;
    let (s2, t2) = sum_series(&[(1, 0, e), (2, 1, 1)], true, 1, wp)?;
    let (s3, t3) = sum_series(&[(1, 0, e), (2, -1, 1)], false, 1, wp)?;
    let (s4, t4) = sum_series(&[(1, 0, e), (2, 1, 1)], false, 1, wp)?;
    let combo = &(&s1 - &s2).mul_int(8) - &(&s3 - &s4).mul_int(4);
    let b = (&combo * &Enclosure::pi(wp).powi(-(2 * n as i32 + 2))).with_prec(prec);
    let tail = add_tails(&add_tails(&t1, &t2), &add_tails(&t3, &t4));
    Ok(SharpConstantPair {
        inequality_id: "huygens".into(),
        order: n,
        lower: SharpConstant::rational(a, prec),
        upper: SharpConstant::series(Some(huygens_b_form(n)?), b, tail),
    })
}

/// `(ρ_N, ϱ_N) = (0, 4(2^{2N} − 1)|B_{2N+2}|/(2N+2)!)`.
pub fn huygens_varrho(n: u32) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(rejected("ϱ_N needs N ≥ 1"));
    }
    let v = abs_b(2 * n + 2)? * ((pow2(2 * n) - 1u32) * 4u32) / factorial(2 * n + 2);
    Ok((Rational::new(), v))
}

/// `(|E_2N|/(2N)!, (2/π)^{2N−1})`.
pub fn sec_remainder_constants(n: u32, prec: u32) -> Result<SharpConstantPair> {
    let lower = euler_number(2 * n)?.abs() / factorial(2 * n);
    let e = 2 * n as i32 - 1;
    let two_pow = if e >= 0 {
        Rational::from(pow2(e as u32))
    } else {
        Rational::from((1, 2))
    };
    Ok(SharpConstantPair {
        inequality_id: "sec-remainder".into(),
        order: n,
        lower: SharpConstant::rational(lower, prec),
        upper: SharpConstant::exact(ClosedForm::term(two_pow, Basis::Pi(-e)), prec),
    })
}

/// Sharp pair by command-line family name.
pub fn constants_for(family: &str, n: u32, prec: u32) -> Result<SharpConstantPair> {
    let exact_pair = |id: &str, (lo, hi): (Rational, Rational)| SharpConstantPair {
        inequality_id: id.into(),
        order: n,
        lower: SharpConstant::rational(lo, prec),
        upper: SharpConstant::rational(hi, prec),
    };
    match family {
        "wilker" => wilker_lambda_mu(n, prec),
        "wilker-alphabeta" => wilker_alpha_beta(n, prec),
        "wilker-q" => Ok(exact_pair("wilker-q", wilker_q(n)?)),
        "huygens" => huygens_a_b(n, prec),
        "huygens-varrho" => Ok(exact_pair("huygens-varrho", huygens_varrho(n)?)),
        "sec-remainder" => sec_remainder_constants(n, prec),
        other => Err(rejected(format!("unknown constant family `{other}`"))),
    }
}

pub const CONSTANT_FAMILIES: [&str; 6] = [
    "wilker",
    "wilker-alphabeta",
    "wilker-q",
    "huygens",
    "huygens-varrho",
    "sec-remainder",
];

/// Order-dependent ingredients of `L_N` and `M_N`.
#[derive(Debug, Clone)]
pub struct PapenfussConstants {
    pub order: u32,
    /// `Σ_{k≥2} 1/(2k−1)^{2N+2}` and `Σ_{k≥2} 1/(2k−1)^{2N+4}`, exact.
    pub l_sums: (ClosedForm, ClosedForm),
    /// `Σ_{k≥2} 1/((2k−1)^{2N} k(k−1))` and `Σ_{k≥2} 1/((2k−1)^{2N} k²(k−1)²)`.
    pub m_sums: (Enclosure, Enclosure),
}

pub fn papenfuss_constants(n: u32, prec: u32) -> Result<PapenfussConstants> {
    if n == 0 {
        return Err(rejected("L_N, M_N need N ≥ 1"));
    }
    let minus_one = ClosedForm::rational(-1);
    let l1 = odd_zeta_even(n + 1, 64)?.form.add(&minus_one);
    let l2 = odd_zeta_even(n + 2, 64)?.form.add(&minus_one);
    let wp = prec + 16;
    let (m1, _) = sum_series(&[(2, -1, 2 * n), (1, 0, 1), (1, -1, 1)], false, 2, wp)?;
    let (m2, _) = sum_series(&[(2, -1, 2 * n), (1, 0, 2), (1, -1, 2)], false, 2, wp)?;
    Ok(PapenfussConstants {
        order: n,
        l_sums: (l1, l2),
        m_sums: (m1, m2),
    })
}

/// `(L_N(t), M_N(t))`, the bounds on the remainder of `t sec²t − tan t`
/// after its two leading pole terms.
pub fn papenfuss_l_m(n: u32, t: &Float, prec: u32) -> Result<(Enclosure, Enclosure)> {
    let c = papenfuss_constants(n, prec)?;
    papenfuss_l_m_with(&c, t, prec)
}

pub fn papenfuss_l_m_with(c: &PapenfussConstants, t: &Float, prec: u32) -> Result<(Enclosure, Enclosure)> {
    let wp = prec + 16;
    let half_pi = Enclosure::pi(wp).mul_pow2(-1);
    let tt = Enclosure::point(Float::with_val(wp, t));
    if !tt.is_positive() || !tt.certainly_lt(&half_pi) {
        return Err(domain(format!("t must lie in (0, π/2), got {t}")));
    }
    let n = c.order as i32;
    let pi = Enclosure::pi(wp);
    let t1 = tt.powi(2 * n + 1);
    let t3 = tt.powi(2 * n + 3);
    let l = &(&(&t1 * &pi.powi(-(2 * n + 2))).mul_pow2(2 * n + 4).mul_int(i64::from(c.order))
        * &c.l_sums.0.eval(wp))
        + &(&(&t3 * &pi.powi(-(2 * n + 4))).mul_pow2(2 * n + 6) * &c.l_sums.1.eval(wp));
    let m = &(&(&t1 * &pi.powi(-(2 * n + 2))).mul_pow2(2 * n + 2).mul_int(i64::from(c.order)) * &c.m_sums.0)
        + &(&(&t3 * &pi.powi(-(2 * n + 4))).mul_pow2(2 * n + 2) * &c.m_sums.1);
    Ok((l.with_prec(prec), m.with_prec(prec)))
}

/// `(P(x), Q(x))`, the numerators of the order-2 bounds on
/// `x sec²x − tan x` over `(π² − 4x²)²`.
pub fn papenfuss_pq(x: &Float, prec: u32) -> Result<(Enclosure, Enclosure)> {
    let wp = prec + 16;
    let xe = Enclosure::point(Float::with_val(wp, x));
    let half_pi = Enclosure::pi(wp).mul_pow2(-1);
    if !xe.is_positive() || !xe.certainly_lt(&half_pi) {
        return Err(domain(format!("x must lie in (0, π/2), got {x}")));
    }
    let p = bounds::papenfuss_p().eval_numerator(&xe, wp);
    let q = bounds::papenfuss_q().eval_numerator(&xe, wp);
    Ok((p.with_prec(prec), q.with_prec(prec)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(parts: &[(i64, i64, i32)]) -> ClosedForm {
        parts.iter().fold(ClosedForm::zero(), |acc, &(n, d, e)| acc.plus(q(n, d), Basis::Pi(e)))
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    #[test]
    fn partial_fraction_sums_match_known_values() {
        // Σ 1/(k²−1/4) = 2, Σ 1/(4k²−1)² = (π²−8)/16
        assert_eq!(half_integer_pole_sum(0, 1, false).unwrap(), ClosedForm::rational(2));
        let f = half_integer_pole_sum(0, 2, false).unwrap().scale(&q(1, 16));
        assert_eq!(f, ClosedForm::rational(q(-1, 2)).plus(q(1, 16), Basis::Pi(2)));
    }

    #[test]
    fn exact_forms_of_listed_constants() {
        assert_eq!(
            wilker_mu_form(1).unwrap(),
            ClosedForm::term(4, Basis::Pi(-2)).plus(-32, Basis::Pi(-4))
        );
        assert_eq!(
            huygens_b_form(1).unwrap(),
            ClosedForm::term(16, Basis::Pi(-3)).plus(-48, Basis::Pi(-4))
        );
        assert_eq!(
            wilker_mu_form(2).unwrap(),
            cf(&[(-128, 1, -6), (16, 1, -4), (-8, 45, -2)])
        );
        assert_eq!(
            huygens_b_form(2).unwrap(),
            cf(&[(64, 1, -5), (-1, 15, -2), (-192, 1, -6)])
        );
        assert_eq!(wilker_alpha_form(0).eval(128).mid(), Float::with_val(128, Rational::from((2, 45))));
    }

    #[test]
    fn series_values_agree_with_exact_forms() {
        for n in 1..=4 {
            let w = wilker_lambda_mu(n, 256).unwrap();
            assert!(w.upper.value.overlaps(&w.upper.form.as_ref().unwrap().eval(256)), "μ_{n}");
            let h = huygens_a_b(n, 256).unwrap();
            assert!(h.upper.value.overlaps(&h.upper.form.as_ref().unwrap().eval(256)), "b_{n}");
            assert!(w.lower.value.certainly_lt(&w.upper.value));
            assert!(h.lower.value.certainly_lt(&h.upper.value));
        }
        for n in 0..=4 {
            let ab = wilker_alpha_beta(n, 256).unwrap();
            assert!(ab.lower.value.overlaps(&ab.lower.form.as_ref().unwrap().eval(256)), "α_{n}");
            assert!(ab.upper.value.overlaps(&ab.upper.form.as_ref().unwrap().eval(256)), "β_{n}");
        }
    }

    #[test]
    fn sec_constants() {
        let c = sec_remainder_constants(0, 128).unwrap();
        assert_eq!(c.lower.as_rational().unwrap(), 1);
        assert!(c.upper.value.overlaps(&Enclosure::pi(128).mul_pow2(-1)));
        let c = sec_remainder_constants(2, 128).unwrap();
        assert_eq!(c.lower.as_rational().unwrap(), q(5, 24));
        assert_eq!(c.upper.form.unwrap(), ClosedForm::term(8, Basis::Pi(-3)));
    }

    #[test]
    fn l_below_m() {
        let t = Float::with_val(256, 0.7);
        let (l, m) = papenfuss_l_m(2, &t, 256).unwrap();
        assert!(l.certainly_lt(&m));
        let tiny = Float::with_val(256, 1e-4);
        let (l, m) = papenfuss_l_m(2, &tiny, 256).unwrap();
        assert!(l.mag() < 1e-15 && m.mag() < 1e-15);
    }

    #[test]
    fn m_sums_for_order_two_match_registry() {
        use crate::zeta_sums::{registry_constant, SumId};
        let c = papenfuss_constants(2, 256).unwrap();
        let s14 = registry_constant("S14".parse::<SumId>().unwrap(), 256);
        let s15 = registry_constant("S15".parse::<SumId>().unwrap(), 256);
        assert!(c.m_sums.0.overlaps(&s14.value));
        assert!(c.m_sums.1.overlaps(&s15.value));
    }
}
