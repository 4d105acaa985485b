//! Exact series representations of the truncation error of the power series
//! of `tan`, `tanh`, `sec`, `cot`, `csc` and `t sec²t − tan t`, evaluated
//! with certified enclosures.
//!
//! Every remainder is a prefactor times a lattice sum
//!
//! ```text
//! S = Σ_{k≥k0} σ_k m_k^{-e} (π² m_k² − c)^{-r}
//! ```
//!
//! over `m_k = k` or `m_k = 2k − 1`, with `σ_k = 1` or `(−1)^{k+1}`. Past a
//! cut `K` where `Q = |c|/(π² m_K²) ≤ 1/64`, each summand is expanded in
//! `c/(π² m²)`, so the tail becomes a short combination of power tails
//! `Σ σ_k m_k^{-s}` evaluated in [`crate::zeta_sums::lattice`].

use std::fmt;
use std::str::FromStr;

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::arith::{Enclosure, TailBound};
use crate::error::{domain, rejected, Error, Result};
use crate::exact_numbers::{series_coefficient, SeriesFunction};
use crate::zeta_sums::lattice::{self, Family, Lattice};

/// Largest cut index before the expansion is declared too expensive.
pub const MAX_CUT: u64 = 1_000_000;

/// Relative distance from a singular endpoint below which arguments are rejected.
pub const GUARD: f64 = 1e-6;

pub const ODD_PLAIN: Family = Family::new(Lattice::Odd, false);
pub const ODD_ALT: Family = Family::new(Lattice::Odd, true);
pub const ALL_PLAIN: Family = Family::new(Lattice::All, false);
pub const ALL_ALT: Family = Family::new(Lattice::All, true);

/// `Σ_{k≥start} σ_k m_k^{-e} (π² m_k² − c)^{-r}` for `r ∈ {1, 2}`.
///
/// Requires `π² m_start² > c`. The returned [`TailBound`] counts the terms
/// summed directly and bounds the truncated expansion.
pub fn lattice_series(
    family: Family,
    start: u64,
    e: i32,
    r: u32,
    c: &Enclosure,
    prec: u32,
) -> Result<(Enclosure, TailBound)> {
    assert!(r == 1 || r == 2, "only r = 1, 2 are supported");
    assert!(start >= 1);
    let wp = prec + 32;
    let pi = Enclosure::pi(wp);
    let pi2 = pi.sqr();
    let c = c.with_prec(wp);
    let c_mag = c.mag().to_f64();
    let pi2_f = std::f64::consts::PI * std::f64::consts::PI;
    let step = family.lattice.step();

    let mut cut = start.max(16).next_power_of_two();
    loop {
        let m = family.lattice.point(cut) as f64;
        if c_mag / (pi2_f * m * m) <= 1.0 / 64.0 {
            break;
        }
        cut *= 2;
        if cut > MAX_CUT {
            let m = family.lattice.point(MAX_CUT) as f64;
            return Err(Error::Budget {
                terms: MAX_CUT,
                achieved: c_mag / (pi2_f * m * m),
            });
        }
    }

    let den_at = |k: u64| -> Enclosure {
        let m = Enclosure::from_int(family.lattice.point(k), wp);
        &(&pi2 * &m.sqr()) - &c
    };
    let first = den_at(start);
    if !first.is_positive() {
        return Err(domain("argument reaches the first pole of the series"));
    }

    let mut head = Enclosure::zero(wp);
    for k in start..cut {
        let m = Enclosure::from_int(family.lattice.point(k), wp);
        let d = den_at(k);
        let term = (&m.powi(e) * &d.powi(r as i32)).recip();
        head = if family.sign(k) < 0 { &head - &term } else { &head + &term };
    }

    // Expansion length J from a log2 estimate of the truncation bound.
    let m_cut = family.lattice.point(cut) as f64;
    let q_max = c_mag / (pi2_f * m_cut * m_cut);
    let m_start = family.lattice.point(start) as f64;
    let scale = -f64::from(e) * m_start.log2() - f64::from(r) * (pi2_f * m_start * m_start + c_mag).log2();
    let target = scale - f64::from(prec) - 16.0;
    let log2_pi = std::f64::consts::PI.log2();
    let trunc_log2 = |j: u32| -> f64 {
        if c_mag == 0.0 {
            return f64::NEG_INFINITY;
        }
        let s = f64::from(e) + 2.0 * f64::from(r) + 2.0 * f64::from(j) + 2.0;
        let c_j = if r == 1 {
            1.0 / (1.0 - q_max)
        } else {
            (f64::from(j) + 2.0) / ((1.0 - q_max) * (1.0 - q_max))
        };
        let lattice_sum = -s * m_cut.log2() + (1.0 + m_cut / (step as f64 * (s - 1.0))).log2();
        -2.0 * f64::from(r) * log2_pi
            + f64::from(j + 1) * (c_mag.log2() - 2.0 * log2_pi)
            + c_j.log2()
            + lattice_sum
    };
    let mut j_max = 0u32;
    while trunc_log2(j_max) > target && j_max < 4000 {
        j_max += 1;
    }
    let trunc = trunc_log2(j_max);
    let bound = if trunc == f64::NEG_INFINITY {
        Float::new(64)
    } else {
        // One extra bit absorbs the f64 evaluation of the estimate.
        Float::with_val(64, Float::i_exp(1, (trunc + 1.0).ceil() as i32))
    };

    let s_list: Vec<u32> = (0..=j_max)
        .map(|j| (e + 2 * r as i32 + 2 * j as i32) as u32)
        .collect();
    let tails = lattice::tails(family, cut, &s_list, wp);
    let ratio = c.div(&pi2);
    let mut q_pow = Enclosure::from_int(1, wp);
    let mut tail = Enclosure::zero(wp);
    for (j, l) in tails.iter().enumerate() {
        let w = if r == 1 { 1 } else { j as i64 + 1 };
        tail = &tail + &(&q_pow * l).mul_int(w);
        q_pow = &q_pow * &ratio;
    }
    let tail = (&tail * &pi2.powi(-(r as i32))).widen(&bound);
    Ok((
        (&head + &tail).with_prec(prec),
        TailBound::new(cut - start, bound),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemainderFunction {
    Tan,
    Tanh,
    Sec,
    Cot,
    Csc,
    Sec2tan,
}

impl RemainderFunction {
    pub const ALL: [RemainderFunction; 6] = [
        RemainderFunction::Tan,
        RemainderFunction::Tanh,
        RemainderFunction::Sec,
        RemainderFunction::Cot,
        RemainderFunction::Csc,
        RemainderFunction::Sec2tan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RemainderFunction::Tan => "tan",
            RemainderFunction::Tanh => "tanh",
            RemainderFunction::Sec => "sec",
            RemainderFunction::Cot => "cot",
            RemainderFunction::Csc => "csc",
            RemainderFunction::Sec2tan => "sec2tan",
        }
    }

    pub fn min_order(self) -> u32 {
        if self == RemainderFunction::Sec2tan {
            1
        } else {
            0
        }
    }

    fn series(self) -> SeriesFunction {
        match self {
            RemainderFunction::Tan => SeriesFunction::Tan,
            RemainderFunction::Tanh => SeriesFunction::Tanh,
            RemainderFunction::Sec => SeriesFunction::Sec,
            RemainderFunction::Cot => SeriesFunction::Cot,
            RemainderFunction::Csc => SeriesFunction::Csc,
            RemainderFunction::Sec2tan => SeriesFunction::Sec2tan,
        }
    }

    /// Direct evaluation of the function at `t`.
    pub fn direct(self, t: &Enclosure) -> Enclosure {
        match self {
            RemainderFunction::Tan => t.tan(),
            RemainderFunction::Tanh => t.tanh(),
            RemainderFunction::Sec => t.sec(),
            RemainderFunction::Cot => t.cot(),
            RemainderFunction::Csc => t.csc(),
            RemainderFunction::Sec2tan => &(t * &t.sec().sqr()) - &t.tan(),
        }
    }
}

impl fmt::Display for RemainderFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RemainderFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RemainderFunction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| rejected(format!("unknown function `{s}`")))
    }
}

/// Largest admissible `|t|` below the singular endpoint `π·frac`, certified
/// from below.
fn guard_limit(frac: &Rational, prec: u32) -> Float {
    let keep = frac * Rational::from((999_999, 1_000_000));
    Enclosure::pi(prec).mul_rational(&keep).lo().clone()
}

fn check_half_period(t: &Float, prec: u32) -> Result<()> {
    if !t.is_finite() || t.clone().abs() > guard_limit(&Rational::from((1, 2)), prec) {
        return Err(domain(format!("|t| must stay inside the guarded interval (0, π/2), got {t}")));
    }
    Ok(())
}

fn check_period(t: &Float, prec: u32) -> Result<()> {
    if t.is_zero() {
        return Err(domain("t = 0 is a pole"));
    }
    if !t.is_finite() || t.clone().abs() > guard_limit(&Rational::from(1), prec) {
        return Err(domain(format!("|t| must stay inside the guarded interval (0, π), got {t}")));
    }
    Ok(())
}

/// `2^a t^b π^{-p}`.
fn prefactor(a: i32, t: &Float, b: i32, p: i32, prec: u32) -> Enclosure {
    let tp = Enclosure::point(t.clone()).with_prec(prec).powi(b);
    (&tp * &Enclosure::pi(prec).powi(-p)).mul_pow2(a)
}

fn four_t_sq(t: &Float, prec: u32) -> Enclosure {
    Enclosure::point(t.clone()).with_prec(prec).sqr().mul_pow2(2)
}

fn t_sq(t: &Float, prec: u32) -> Enclosure {
    Enclosure::point(t.clone()).with_prec(prec).sqr()
}

fn zero_result(prec: u32) -> (Enclosure, TailBound) {
    (Enclosure::zero(prec), TailBound::new(0, Float::new(64)))
}

fn sign_flip(x: Enclosure, negative: bool) -> Enclosure {
    if negative {
        -x
    } else {
        x
    }
}

fn tan_parts(n: u32, t: &Float, prec: u32) -> Result<(Enclosure, TailBound)> {
    check_half_period(t, prec)?;
    if t.is_zero() {
        return Ok(zero_result(prec));
    }
    let wp = prec + 16;
    let (s, tb) = lattice_series(ODD_PLAIN, 1, 2 * n as i32, 1, &four_t_sq(t, wp), wp)?;
    let pre = prefactor(2 * n as i32 + 3, t, 2 * n as i32 + 1, 2 * n as i32, wp);
    Ok(((&pre * &s).with_prec(prec), tb))
}

fn tanh_parts(n: u32, t: &Float, prec: u32) -> Result<(Enclosure, TailBound)> {
    if !t.is_finite() {
        return Err(domain("t must be finite"));
    }
    if t.is_zero() {
        return Ok(zero_result(prec));
    }
    let wp = prec + 16;
    let c = -four_t_sq(t, wp);
    let (s, tb) = lattice_series(ODD_PLAIN, 1, 2 * n as i32, 1, &c, wp)?;
    let pre = prefactor(2 * n as i32 + 3, t, 2 * n as i32 + 1, 2 * n as i32, wp);
    Ok((sign_flip(&pre * &s, n % 2 == 1).with_prec(prec), tb))
}

fn sec_parts(n: u32, t: &Float, prec: u32) -> Result<(Enclosure, TailBound)> {
    check_half_period(t, prec)?;
    if t.is_zero() && n > 0 {
        return Ok(zero_result(prec));
    }
    let wp = prec + 16;
    let e = 2 * n as i32 - 1;
    let (s, tb) = lattice_series(ODD_ALT, 1, e, 1, &four_t_sq(t, wp), wp)?;
    let pre = if n == 0 {
        Enclosure::pi(wp).mul_pow2(2)
    } else {
        prefactor(2 * n as i32 + 2, t, 2 * n as i32, e, wp)
    };
    Ok(((&pre * &s).with_prec(prec), tb))
}

fn cot_csc_parts(n: u32, t: &Float, alternating: bool, prec: u32) -> Result<(Enclosure, TailBound)> {
    check_period(t, prec)?;
    let wp = prec + 16;
    let family = if alternating { ALL_ALT } else { ALL_PLAIN };
    let (s, tb) = lattice_series(family, 1, 2 * n as i32, 1, &t_sq(t, wp), wp)?;
    let pre = prefactor(1, t, 2 * n as i32 + 1, 2 * n as i32, wp);
    Ok((sign_flip(&pre * &s, !alternating).with_prec(prec), tb))
}

fn sec2tan_parts(n: u32, t: &Float, prec: u32) -> Result<(Enclosure, TailBound)> {
    if n == 0 {
        return Err(rejected("the t sec²t − tan t remainder starts at N = 1"));
    }
    check_half_period(t, prec)?;
    if t.is_zero() {
        return Ok(zero_result(prec));
    }
    let wp = prec + 16;
    let ni = n as i32;
    let c = four_t_sq(t, wp);
    let (s1, tb1) = lattice_series(ODD_PLAIN, 1, 2 * ni, 1, &c, wp)?;
    let (s2, tb2) = lattice_series(ODD_PLAIN, 1, 2 * ni, 2, &c, wp)?;
    let p1 = prefactor(2 * ni + 4, t, 2 * ni + 1, 2 * ni, wp).mul_int(i64::from(n));
    let p2 = prefactor(2 * ni + 6, t, 2 * ni + 3, 2 * ni, wp);
    let v = &(&p1 * &s1) + &(&p2 * &s2);
    let tb = TailBound::new(tb1.terms.max(tb2.terms), tb1.bound + tb2.bound);
    Ok((v.with_prec(prec), tb))
}

fn parts(f: RemainderFunction, n: u32, t: &Float, prec: u32) -> Result<(Enclosure, TailBound)> {
    match f {
        RemainderFunction::Tan => tan_parts(n, t, prec),
        RemainderFunction::Tanh => tanh_parts(n, t, prec),
        RemainderFunction::Sec => sec_parts(n, t, prec),
        RemainderFunction::Cot => cot_csc_parts(n, t, false, prec),
        RemainderFunction::Csc => cot_csc_parts(n, t, true, prec),
        RemainderFunction::Sec2tan => sec2tan_parts(n, t, prec),
    }
}

/// `ϑ_N(t) = tan t − Σ_{j=1}^{N} c_j t^{2j−1}`, `|t| < π/2`.
pub fn remainder_tan(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    tan_parts(n, t, prec).map(|p| p.0)
}

/// `τ_N(t) = tanh t − Σ_{j=1}^{N} c_j t^{2j−1}` for any real `t`.
pub fn remainder_tanh(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    tanh_parts(n, t, prec).map(|p| p.0)
}

/// `ω_N(t) = sec t − Σ_{j=0}^{N−1} c_j t^{2j}`, `|t| < π/2`.
pub fn remainder_sec(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    sec_parts(n, t, prec).map(|p| p.0)
}

/// `θ_N(t) = cot t − 1/t − Σ_{j=1}^{N} c_j t^{2j−1}`, `0 < |t| < π`.
pub fn remainder_cot(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    cot_csc_parts(n, t, false, prec).map(|p| p.0)
}

/// `r_N(t) = csc t − 1/t − Σ_{j=1}^{N} c_j t^{2j−1}`, `0 < |t| < π`.
pub fn remainder_csc(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    cot_csc_parts(n, t, true, prec).map(|p| p.0)
}

/// `κ_N(t) = t sec²t − tan t − Σ_{j=1}^{N−1} c_j t^{2j+1}`, `N ≥ 1`.
pub fn remainder_sec2tan(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    sec2tan_parts(n, t, prec).map(|p| p.0)
}

/// `g(t) = Σ_{k≥1} 1/((2k−1)^{2N} (π²(2k−1)² + 4t²))`.
pub fn tanh_kernel(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    let c = -four_t_sq(t, prec + 16);
    lattice_series(ODD_PLAIN, 1, 2 * n as i32, 1, &c, prec).map(|p| p.0)
}

/// `ξ(t, N) = g(t)/g(0)`, the factor with `τ_N(t) = (−1)^N ξ τ̂_N(t)`.
pub fn xi_factor(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    if t.is_zero() {
        return Err(rejected("ξ(t, N) is defined for t ≠ 0"));
    }
    let wp = prec + 16;
    let g_t = tanh_kernel(n, t, wp)?;
    let g_0 = tanh_kernel(n, &Float::new(wp), wp)?;
    Ok(g_t.div(&g_0).with_prec(prec))
}

/// `H(t) = Σ_{k≥2} (−1)^{k+1}/((2k−1)^{2N−1} (π²(2k−1)² − 4t²))`.
pub fn h_sec(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    check_half_period(t, prec)?;
    lattice_series(ODD_ALT, 2, 2 * n as i32 - 1, 1, &four_t_sq(t, prec + 16), prec).map(|p| p.0)
}

/// `G(t) = Σ_{k≥2} 1/((2k−1)^{2N} (π²(2k−1)² + 4t²))`.
pub fn g_tanh_tail(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    let c = -four_t_sq(t, prec + 16);
    lattice_series(ODD_PLAIN, 2, 2 * n as i32, 1, &c, prec).map(|p| p.0)
}

/// `V_N(t) = Σ_{k≥1} (Nπ²k² − (N−1)t²)/(k^{2N} (π²k² − t²)²)`.
pub fn v_wilker(n: u32, t: &Float, prec: u32) -> Result<Enclosure> {
    check_period(t, prec)?;
    let wp = prec + 16;
    let c = t_sq(t, wp);
    let (s1, _) = lattice_series(ALL_PLAIN, 1, 2 * n as i32, 1, &c, wp)?;
    let (s2, _) = lattice_series(ALL_PLAIN, 1, 2 * n as i32, 2, &c, wp)?;
    Ok((&s1.mul_int(i64::from(n)) + &(&c * &s2)).with_prec(prec))
}

/// `U_N(x) = Σ_{k≥1} (−1)^{k+1}(2 − (−1)^{k+1})/(k^{2N}((kπ)² − x²))`.
pub fn u_huygens(n: u32, x: &Float, prec: u32) -> Result<Enclosure> {
    check_period(x, prec)?;
    let wp = prec + 16;
    let c = t_sq(x, wp);
    let (alt, _) = lattice_series(ALL_ALT, 1, 2 * n as i32, 1, &c, wp)?;
    let (plain, _) = lattice_series(ALL_PLAIN, 1, 2 * n as i32, 1, &c, wp)?;
    Ok((&alt.mul_pow2(1) - &plain).with_prec(prec))
}

#[derive(Debug, Clone)]
pub struct RemainderEval {
    pub function_id: RemainderFunction,
    pub order: u32,
    pub t: Float,
    /// Everything but the remainder, rounded once to nearest.
    pub partial_sum: Float,
    pub remainder: Enclosure,
    /// Certified enclosure of the function value.
    pub value: Enclosure,
    pub terms_used: u64,
    pub tail: TailBound,
}

/// Exact polynomial part of the expansion at the dyadic point `t`.
pub fn partial_sum_exact(f: RemainderFunction, n: u32, t: &Float) -> Result<Rational> {
    let tr = t
        .to_rational()
        .ok_or_else(|| domain("t must be finite"))?;
    let sf = f.series();
    let mut acc = Rational::new();
    let (range, offset): (Box<dyn Iterator<Item = u32>>, i32) = match f {
        RemainderFunction::Sec => (Box::new(0..n), 0),
        RemainderFunction::Sec2tan => (Box::new(1..n), 1),
        _ => (Box::new(1..=n), -1),
    };
    for j in range {
        let c = series_coefficient(sf, j)?;
        let p = 2 * j as i32 + offset;
        acc += c * pow_rational(&tr, p);
    }
    if matches!(f, RemainderFunction::Cot | RemainderFunction::Csc) {
        if tr == 0 {
            return Err(domain("t = 0 is a pole"));
        }
        acc += Rational::from(tr.recip_ref());
    }
    Ok(acc)
}

fn pow_rational(x: &Rational, p: i32) -> Rational {
    let mut out = Rational::from(1);
    for _ in 0..p.unsigned_abs() {
        out *= x;
    }
    if p < 0 {
        out.recip_mut();
    }
    out
}

/// Partial sum plus remainder, with the enclosure of the function value.
pub fn eval_with_enclosure(f: RemainderFunction, n: u32, t: &Float, prec: u32) -> Result<RemainderEval> {
    if n < f.min_order() {
        return Err(rejected(format!("{f} needs N ≥ {}", f.min_order())));
    }
    let (remainder, tail) = parts(f, n, t, prec)?;
    let exact = partial_sum_exact(f, n, t)?;
    let partial_sum = Float::with_val(prec, &exact);
    let value = &Enclosure::from_rational(&exact, prec) + &remainder;
    Ok(RemainderEval {
        function_id: f,
        order: n,
        t: t.clone(),
        partial_sum,
        remainder,
        value,
        terms_used: tail.terms,
        tail,
    })
}
