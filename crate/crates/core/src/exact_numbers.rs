//! Exact Bernoulli and Euler numbers, series coefficients of the
//! trigonometric expansions, and the classical ratio bounds for
//! `|B_2n|/(2n)!` and `|E_2n|/(2n)!`.
//!
//! Both number families come from a single memoized boustrophedon
//! (Seidel) triangle: its diagonal holds the zigzag numbers `A_n`, with
//! `A_2n = |E_2n|` and `A_{2n-1}` the tangent numbers from which `B_2n`
//! follows exactly.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::arith::Enclosure;
use crate::error::{rejected, Error, Result};

/// Arbitrary-size reduced fraction.
pub type ExactRational = Rational;

/// Largest index accepted by [`bernoulli`] and [`euler_number`].
pub const MAX_INDEX: u32 = 512;

struct Zigzag {
    diagonal: Vec<Integer>,
    last_row: Vec<Integer>,
}

static ZIGZAG: RwLock<Zigzag> = RwLock::new(Zigzag {
    diagonal: Vec::new(),
    last_row: Vec::new(),
});

fn zigzag(n: usize) -> Integer {
    {
        let table = ZIGZAG.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.diagonal.get(n) {
            return v.clone();
        }
    }
    let mut table = ZIGZAG.write().unwrap_or_else(|e| e.into_inner());
    if table.diagonal.is_empty() {
        table.diagonal.push(Integer::from(1));
        table.last_row = vec![Integer::from(1)];
    }
    while table.diagonal.len() <= n {
        let m = table.diagonal.len();
        let prev = std::mem::take(&mut table.last_row);
        let mut row = Vec::with_capacity(m + 1);
        row.push(Integer::new());
        for k in 1..=m {
            let next = Integer::from(&row[k - 1] + &prev[m - k]);
            row.push(next);
        }
        table.diagonal.push(row[m].clone());
        table.last_row = row;
    }
    table.diagonal[n].clone()
}

fn check_index(n: u32) -> Result<()> {
    if n > MAX_INDEX {
        Err(Error::IndexTooLarge {
            index: n,
            max: MAX_INDEX,
        })
    } else {
        Ok(())
    }
}

fn pow4(n: u32) -> Integer {
    Integer::from(1) << (2 * n)
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// `B_n` for the generating function `t/(e^t - 1)`, so `B_1 = -1/2`.
pub fn bernoulli(n: u32) -> Result<ExactRational> {
    check_index(n)?;
    Ok(match n {
        0 => Rational::from(1),
        1 => Rational::from((-1, 2)),
        _ if n % 2 == 1 => Rational::new(),
        _ => {
            let h = n / 2;
            let num = Integer::from(n) * zigzag(n as usize - 1);
            let den = pow4(h) * (pow4(h) - 1u32);
            let b = Rational::from((num, den));
            if h % 2 == 1 {
                b
            } else {
                -b
            }
        }
    })
}

/// Euler number `E_n` from the expansion of `sec t`.
pub fn euler_number(n: u32) -> Result<ExactRational> {
    check_index(n)?;
    if n % 2 == 1 {
        return Ok(Rational::new());
    }
    let a = zigzag(n as usize);
    Ok(Rational::from(if (n / 2) % 2 == 0 { a } else { -a }))
}

fn abs_bernoulli_over_fact(n: u32) -> Result<Rational> {
    let b = bernoulli(n)?.abs();
    Ok(b / factorial(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesFunction {
    Tan,
    Tanh,
    Sec,
    Cot,
    Csc,
    Wilker,
    Huygens,
    Sec2tan,
}

impl SeriesFunction {
    pub const ALL: [SeriesFunction; 8] = [
        SeriesFunction::Tan,
        SeriesFunction::Tanh,
        SeriesFunction::Sec,
        SeriesFunction::Cot,
        SeriesFunction::Csc,
        SeriesFunction::Wilker,
        SeriesFunction::Huygens,
        SeriesFunction::Sec2tan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesFunction::Tan => "tan",
            SeriesFunction::Tanh => "tanh",
            SeriesFunction::Sec => "sec",
            SeriesFunction::Cot => "cot",
            SeriesFunction::Csc => "csc",
            SeriesFunction::Wilker => "wilker",
            SeriesFunction::Huygens => "huygens",
            SeriesFunction::Sec2tan => "sec2tan",
        }
    }
}

impl fmt::Display for SeriesFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesFunction::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| rejected(format!("unknown function id `{s}`")))
    }
}

/// Exact coefficient `c_j` of the named expansion:
///
/// | id | expansion |
/// |----|-----------|
/// | tan | `tan t = Σ_{j≥1} c_j t^{2j-1}` |
/// | tanh | `tanh t = Σ_{j≥1} c_j t^{2j-1}` (signed) |
/// | sec | `sec t = Σ_{j≥0} c_j t^{2j}` |
/// | cot | `cot t = 1/t + Σ_{j≥1} c_j t^{2j-1}` |
/// | csc | `csc t = 1/t + Σ_{j≥1} c_j t^{2j-1}` |
/// | wilker | `(t/sin t)² + t/tan t = 2 + Σ_{j≥1} c_j t^{2j+2}` |
/// | huygens | `2t/sin t + t/tan t = 3 + Σ_{j≥1} c_j t^{2j}` |
/// | sec2tan | `t sec²t − tan t = Σ_{j≥1} c_j t^{2j+1}` |
pub fn series_coefficient(f: SeriesFunction, j: u32) -> Result<ExactRational> {
    if j == 0 && f != SeriesFunction::Sec {
        return Err(rejected(format!("{f} coefficients start at j = 1")));
    }
    let p = |k: u32| pow4(k);
    Ok(match f {
        SeriesFunction::Tan => abs_bernoulli_over_fact(2 * j)? * (p(j) * (p(j) - 1u32)),
        SeriesFunction::Tanh => {
            bernoulli(2 * j)? / factorial(2 * j) * (p(j) * (p(j) - 1u32))
        }
        SeriesFunction::Sec => euler_number(2 * j)?.abs() / factorial(2 * j),
        SeriesFunction::Cot => -(abs_bernoulli_over_fact(2 * j)? * p(j)),
        SeriesFunction::Csc => abs_bernoulli_over_fact(2 * j)? * (p(j) - 2u32),
        SeriesFunction::Wilker => {
            abs_bernoulli_over_fact(2 * j + 2)? * (Integer::from(j) * (p(j) << 3u32))
        }
        SeriesFunction::Huygens => abs_bernoulli_over_fact(2 * j)? * (p(j) - 4u32),
        SeriesFunction::Sec2tan => {
            abs_bernoulli_over_fact(2 * j + 2)?
                * (Integer::from(2 * j) * p(j + 1) * (p(j + 1) - 1u32))
        }
    })
}

/// Exact value `coeff · π^pi_exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPower {
    pub coeff: ExactRational,
    pub pi_exp: i32,
}

impl PiPower {
    pub fn new(coeff: ExactRational, pi_exp: i32) -> Self {
        PiPower { coeff, pi_exp }
    }

    pub fn enclose(&self, prec: u32) -> Enclosure {
        let work = prec + 32;
        let pi = Enclosure::pi(work).powi(self.pi_exp);
        (&Enclosure::from_rational(&self.coeff, work) * &pi).with_prec(prec)
    }
}

impl fmt::Display for PiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_exp {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})·π", self.coeff),
            e => write!(f, "({})·π^{}", self.coeff, e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioBounds {
    pub lower: PiPower,
    pub upper: PiPower,
}

impl RatioBounds {
    /// Certified strict containment of `value` in `(lower, upper)`.
    ///
    /// Starts at `prec` bits and doubles up to 16× while the comparison is
    /// unresolved; `false` means either not bracketed or never resolved.
    pub fn strictly_brackets(&self, value: &ExactRational, prec: u32) -> bool {
        let mut p = prec;
        while p <= 16 * prec {
            let v = Enclosure::from_rational(value, p);
            let lo = self.lower.enclose(p);
            let hi = self.upper.enclose(p);
            if lo.certainly_lt(&v) && v.certainly_lt(&hi) {
                return true;
            }
            if v.certainly_lt(&lo) || hi.certainly_lt(&v) {
                return false;
            }
            p *= 2;
        }
        false
    }
}

/// `2/(2π)^{2n} < |B_2n|/(2n)! < 2/((2π)^{2n}(1 - 2^{1-2n}))`, `n ≥ 1`.
pub fn bernoulli_ratio_bounds(n: u32) -> Result<RatioBounds> {
    if n == 0 {
        return Err(rejected("Bernoulli ratio bounds need n ≥ 1"));
    }
    check_index(2 * n)?;
    let base = Rational::from((2, pow4(n)));
    // 1 - 2^{1-2n} = (2^{2n-1} - 1) / 2^{2n-1}
    let half = Integer::from(1) << (2 * n - 1);
    let shrink = Rational::from((half.clone() - 1u32, half));
    let pi_exp = -2 * n as i32;
    Ok(RatioBounds {
        lower: PiPower::new(base.clone(), pi_exp),
        upper: PiPower::new(base / shrink, pi_exp),
    })
}

/// `4^{n+1}/π^{2n+1} · 1/(1 + 3^{-1-2n}) < |E_2n|/(2n)! < 4^{n+1}/π^{2n+1}`, `n ≥ 0`.
pub fn euler_ratio_bounds(n: u32) -> Result<RatioBounds> {
    check_index(2 * n)?;
    let top = Rational::from(pow4(n + 1));
    let three = Integer::from(Integer::u_pow_u(3, 2 * n + 1));
    let factor = Rational::from((three.clone(), three + 1u32));
    let pi_exp = -(2 * n as i32 + 1);
    Ok(RatioBounds {
        lower: PiPower::new(top.clone() * factor, pi_exp),
        upper: PiPower::new(top, pi_exp),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u32, k: u32) -> Integer {
        Integer::from(Integer::binomial_u(n, k))
    }

    /// `Σ_{j=0}^{n} C(n+1, j) B_j = 0` solved for `B_n`.
    fn bernoulli_oracle(max: u32) -> Vec<Rational> {
        let mut b = vec![Rational::from(1)];
        for n in 1..=max {
            let mut acc = Rational::new();
            for (j, bj) in b.iter().enumerate() {
                acc += Rational::from(binom(n + 1, j as u32)) * bj;
            }
            b.push(-acc / Integer::from(n + 1));
        }
        b
    }

    /// Coefficients of `sec t` from `sec t · cos t = 1`.
    fn euler_oracle(max: u32) -> Vec<Integer> {
        let mut e = vec![Integer::from(1)];
        for n in 1..=max {
            if n % 2 == 1 {
                e.push(Integer::new());
                continue;
            }
            let mut acc = Integer::new();
            for k in (0..n).step_by(2) {
                let term = binom(n, k) * &e[k as usize];
                if ((n - k) / 2) % 2 == 1 {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            e.push(-acc);
        }
        e
    }

    #[test]
    fn bernoulli_matches_recurrence_oracle() {
        let oracle = bernoulli_oracle(30);
        for n in 0..=30 {
            assert_eq!(bernoulli(n).unwrap(), oracle[n as usize], "B_{n}");
        }
    }

    #[test]
    fn euler_matches_cosine_oracle() {
        let oracle = euler_oracle(30);
        for n in 0..=30 {
            let sec_coeff = Rational::from(oracle[n as usize].clone());
            let signed = if (n / 2) % 2 == 0 { sec_coeff } else { -sec_coeff };
            assert_eq!(euler_number(n).unwrap(), signed, "E_{n}");
        }
    }

    #[test]
    fn listed_values() {
        assert_eq!(bernoulli(0).unwrap(), 1);
        assert_eq!(bernoulli(2).unwrap(), Rational::from((1, 6)));
        assert_eq!(bernoulli(12).unwrap(), Rational::from((-691, 2730)));
        assert_eq!(euler_number(0).unwrap(), 1);
        assert_eq!(euler_number(2).unwrap(), -1);
        assert_eq!(euler_number(4).unwrap(), 5);
    }

    #[test]
    fn index_cap() {
        assert!(bernoulli(512).is_ok());
        assert!(matches!(bernoulli(513), Err(Error::IndexTooLarge { .. })));
        assert!(matches!(euler_number(514), Err(Error::IndexTooLarge { .. })));
    }

    /// Power-series quotient `num/den` truncated to `len` terms.
    fn series_div(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
        let mut q: Vec<Rational> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = num.get(n).cloned().unwrap_or_default();
            for k in 1..=n {
                if let Some(d) = den.get(k) {
                    acc -= Rational::from(d * &q[n - k]);
                }
            }
            q.push(acc / &den[0]);
        }
        q
    }

    fn sin_cos(len: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut s = vec![Rational::new(); len];
        let mut c = vec![Rational::new(); len];
        for n in 0..len {
            let v = Rational::from((1, factorial(n as u32)));
            let sign = if (n / 2) % 2 == 0 { v } else { -v };
            if n % 2 == 0 {
                c[n] = sign;
            } else {
                s[n] = sign;
            }
        }
        (s, c)
    }

    #[test]
    fn tan_and_csc_coefficients_match_taylor_division() {
        let len = 24;
        let (s, c) = sin_cos(len);
        let tan = series_div(&s, &c, len);
        for j in 1..(len as u32 / 2) {
            assert_eq!(
                series_coefficient(SeriesFunction::Tan, j).unwrap(),
                tan[2 * j as usize - 1]
            );
        }
        // csc t = 1/t · 1/(sin t / t)
        let sinc: Vec<Rational> = s[1..].to_vec();
        let one = {
            let mut v = vec![Rational::new(); len - 1];
            v[0] = Rational::from(1);
            v
        };
        let inv = series_div(&one, &sinc, len - 1);
        for j in 1..((len as u32 - 1) / 2) {
            assert_eq!(
                series_coefficient(SeriesFunction::Csc, j).unwrap(),
                inv[2 * j as usize]
            );
        }
        assert_eq!(series_coefficient(SeriesFunction::Tan, 1).unwrap(), 1);
        assert_eq!(
            series_coefficient(SeriesFunction::Csc, 1).unwrap(),
            Rational::from((1, 6))
        );
        assert_eq!(series_coefficient(SeriesFunction::Sec, 0).unwrap(), 1);
    }

    #[test]
    fn sec2tan_and_wilker_small_cases() {
        // t sec²t − tan t = (2/3)t³ + ...
        assert_eq!(
            series_coefficient(SeriesFunction::Sec2tan, 1).unwrap(),
            Rational::from((2, 3))
        );
        assert_eq!(
            series_coefficient(SeriesFunction::Wilker, 1).unwrap(),
            Rational::from((2, 45))
        );
        assert_eq!(
            series_coefficient(SeriesFunction::Huygens, 2).unwrap(),
            Rational::from((1, 60))
        );
        assert_eq!(series_coefficient(SeriesFunction::Huygens, 1).unwrap(), 0);
    }

    #[test]
    fn unknown_id_rejected() {
        assert!("sinh".parse::<SeriesFunction>().is_err());
        assert_eq!("sec2tan".parse::<SeriesFunction>().unwrap(), SeriesFunction::Sec2tan);
    }

    #[test]
    fn ratio_bounds_bracket_exact_values() {
        for n in 1..=30 {
            let v = abs_bernoulli_over_fact(2 * n).unwrap();
            assert!(bernoulli_ratio_bounds(n).unwrap().strictly_brackets(&v, 128), "n={n}");
        }
        for n in 0..=30 {
            let v = euler_number(2 * n).unwrap().abs() / factorial(2 * n);
            assert!(euler_ratio_bounds(n).unwrap().strictly_brackets(&v, 128), "n={n}");
        }
        assert!(bernoulli_ratio_bounds(0).is_err());
    }

    #[test]
    fn bernoulli_lower_bound_instantiation() {
        let b = bernoulli_ratio_bounds(1).unwrap();
        assert_eq!(b.lower, PiPower::new(Rational::from((1, 2)), -2));
    }
}
