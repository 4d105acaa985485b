//! Registry of displayed bound functions.
//!
//! A bound is a finite sum of terms `c · x^p · tan(x)^{0|1} / (a π² + b x²)^e`
//! with exact π-power coefficients `c`. Keys have the form
//! `<family>.lower` / `<family>.upper`, for example `becker-stark.lower`,
//! `banjac.upper`, `chen.tan.N1.lower`, `wilker.sharp.N2.upper` or
//! `sec.remainder.N3.lower`.

use std::cell::OnceCell;
use std::fmt;

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use super::{huygens_a, huygens_b_form, huygens_varrho, wilker_alpha_form, wilker_lambda, wilker_mu_form};
use crate::arith::Enclosure;
use crate::error::{domain, rejected, Result};
use crate::exact_numbers::{euler_number, factorial, series_coefficient, SeriesFunction};
use crate::zeta_sums::{Basis, ClosedForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

/// The expression a bound refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// `tan x / x`
    TanOverX,
    /// `tanh t / t`
    TanhOverX,
    /// `sec x`
    Sec,
    /// `x sec²x − tan x`
    SecSqTan,
    /// `(sin x/x)² + tan x/x`
    Wilker,
    /// `2 sin x/x + tan x/x`
    Huygens,
    /// `(x/sin x)² + x/tan x`
    WilkerReciprocal,
    /// `2x/sin x + x/tan x`
    HuygensReciprocal,
    /// `(sin x/x)² · tan x/x`
    Lazarevic,
}

impl Target {
    pub fn domain(self) -> Domain {
        match self {
            Target::TanhOverX => Domain::Tanh,
            _ => Domain::HalfPi,
        }
    }

    pub fn eval(self, p: &PointValues) -> Enclosure {
        let x = &p.x;
        match self {
            Target::TanOverX => p.tan().div(x),
            Target::TanhOverX => p.tanh().div(x),
            Target::Sec => p.cos().recip(),
            Target::SecSqTan => &x.div(&p.cos().sqr()) - p.tan(),
            Target::Wilker => &p.sin().div(x).sqr() + &p.tan().div(x),
            Target::Huygens => &p.sin().div(x).mul_int(2) + &p.tan().div(x),
            Target::WilkerReciprocal => &x.div(p.sin()).sqr() + &x.div(p.tan()),
            Target::HuygensReciprocal => &x.div(p.sin()).mul_int(2) + &x.div(p.tan()),
            Target::Lazarevic => &p.sin().div(x).sqr() * &p.tan().div(x),
        }
    }
}

/// Open interval `(0, hi)` on which bounds are stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// `(0, π/2)`
    HalfPi,
    /// `(0, 5]`, a finite window of the line `t ≠ 0`.
    Tanh,
}

impl Domain {
    pub fn upper(self, prec: u32) -> Enclosure {
        match self {
            Domain::HalfPi => Enclosure::pi(prec).mul_pow2(-1),
            Domain::Tanh => Enclosure::from_int(5, prec),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Domain::HalfPi => "(0, π/2)",
            Domain::Tanh => "(0, 5]",
        }
    }

    /// Whether the point lies inside the domain. The right end of the tanh
    /// window is closed.
    pub fn contains(self, x: &Enclosure) -> bool {
        let hi = self.upper(x.prec());
        x.is_positive()
            && match self {
                Domain::HalfPi => x.certainly_lt(&hi),
                Domain::Tanh => x.hi() <= hi.lo(),
            }
    }
}

/// Trigonometric values at a point, computed on first use.
pub struct PointValues {
    pub x: Enclosure,
    sin: OnceCell<Enclosure>,
    cos: OnceCell<Enclosure>,
    tan: OnceCell<Enclosure>,
    tanh: OnceCell<Enclosure>,
}

impl PointValues {
    pub fn new(x: Enclosure) -> Self {
        PointValues {
            x,
            sin: OnceCell::new(),
            cos: OnceCell::new(),
            tan: OnceCell::new(),
            tanh: OnceCell::new(),
        }
    }

    pub fn sin(&self) -> &Enclosure {
        self.sin.get_or_init(|| self.x.sin())
    }

    pub fn cos(&self) -> &Enclosure {
        self.cos.get_or_init(|| self.x.cos())
    }

    pub fn tan(&self) -> &Enclosure {
        self.tan.get_or_init(|| self.x.tan())
    }

    pub fn tanh(&self) -> &Enclosure {
        self.tanh.get_or_init(|| self.x.tanh())
    }
}

/// `(a π² + b x²)^power`; `power = 0` is the constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Denominator {
    pub pi_sq: i64,
    pub x_sq: i64,
    pub power: u32,
}

impl Denominator {
    pub const ONE: Denominator = Denominator {
        pi_sq: 1,
        x_sq: 0,
        power: 0,
    };

    pub const fn new(pi_sq: i64, x_sq: i64, power: u32) -> Self {
        Denominator { pi_sq, x_sq, power }
    }

    pub fn eval(&self, x: &Enclosure) -> Enclosure {
        let prec = x.prec();
        if self.power == 0 {
            return Enclosure::from_int(1, prec);
        }
        let base = &Enclosure::pi(prec).sqr().mul_int(self.pi_sq) + &x.sqr().mul_int(self.x_sq);
        base.powi(self.power as i32)
    }
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = if self.pi_sq == 1 {
            "π²".to_string()
        } else {
            format!("{}π²", self.pi_sq)
        };
        let b = match self.x_sq {
            1 => " + x²".to_string(),
            -1 => " − x²".to_string(),
            n if n < 0 => format!(" − {}x²", -n),
            n => format!(" + {n}x²"),
        };
        match self.power {
            0 => f.write_str("1"),
            1 => write!(f, "({a}{b})"),
            p => write!(f, "({a}{b})^{p}"),
        }
    }
}

/// `Σ c_i x^{p_i}` over a common denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundPolynomial {
    pub coefficients: Vec<(i32, ClosedForm)>,
    pub denominator: Denominator,
}

impl BoundPolynomial {
    pub fn new(coefficients: Vec<(i32, ClosedForm)>, denominator: Denominator) -> Self {
        BoundPolynomial {
            coefficients,
            denominator,
        }
    }

    pub fn eval_numerator(&self, x: &Enclosure, prec: u32) -> Enclosure {
        let mut acc = Enclosure::zero(prec);
        for (p, c) in &self.coefficients {
            acc = &acc + &(&c.eval(prec) * &x.powi(*p));
        }
        acc
    }

    pub fn eval(&self, x: &Enclosure, prec: u32) -> Enclosure {
        self.eval_numerator(x, prec).div(&self.denominator.eval(x))
    }

    fn into_terms(self) -> Vec<BoundTerm> {
        let d = self.denominator;
        self.coefficients
            .into_iter()
            .map(|(power, coeff)| BoundTerm {
                coeff,
                power,
                times_tan: false,
                denominator: d,
            })
            .collect()
    }
}

/// `coeff · x^power · (tan x if times_tan) / denominator`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundTerm {
    pub coeff: ClosedForm,
    pub power: i32,
    pub times_tan: bool,
    pub denominator: Denominator,
}

impl BoundTerm {
    fn monomial(coeff: ClosedForm, power: i32) -> Self {
        BoundTerm {
            coeff,
            power,
            times_tan: false,
            denominator: Denominator::ONE,
        }
    }

    fn tan(coeff: ClosedForm, power: i32) -> Self {
        BoundTerm {
            coeff,
            power,
            times_tan: true,
            denominator: Denominator::ONE,
        }
    }

    fn shape(&self, p: &PointValues) -> Enclosure {
        let mut v = p.x.powi(self.power);
        if self.times_tan {
            v = &v * p.tan();
        }
        if self.denominator.power > 0 {
            v = v.div(&self.denominator.eval(&p.x));
        }
        v
    }
}

impl fmt::Display for BoundTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        match self.power {
            0 => {}
            1 => f.write_str("·x")?,
            p => write!(f, "·x^{p}")?,
        }
        if self.times_tan {
            f.write_str("·tan x")?;
        }
        if self.denominator.power > 0 {
            write!(f, "/{}", self.denominator)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundExpr {
    pub terms: Vec<BoundTerm>,
    /// Index of the term carrying the best-possible constant, if any.
    pub sharp: Option<usize>,
}

impl BoundExpr {
    fn new(terms: Vec<BoundTerm>) -> Self {
        BoundExpr { terms, sharp: None }
    }

    fn with_sharp(mut self, term: BoundTerm) -> Self {
        self.sharp = Some(self.terms.len());
        self.terms.push(term);
        self
    }

    pub fn prepare(&self, prec: u32) -> PreparedBound {
        PreparedBound {
            coeffs: self.terms.iter().map(|t| t.coeff.eval(prec)).collect(),
            expr: self.clone(),
        }
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A bound with coefficients evaluated at a fixed precision.
#[derive(Debug, Clone)]
pub struct PreparedBound {
    pub expr: BoundExpr,
    pub coeffs: Vec<Enclosure>,
}

impl PreparedBound {
    pub fn sharp_constant(&self) -> Option<&Enclosure> {
        self.expr.sharp.map(|i| &self.coeffs[i])
    }

    /// Replaces the sharp coefficient `c` by `c + delta·|c|`, rounded
    /// outward so the tweak is certainly applied.
    pub fn tweak_sharp(&mut self, delta: f64) {
        if let Some(i) = self.expr.sharp {
            let c = &self.coeffs[i];
            let prec = c.prec();
            let shift = c.mag() * Float::with_val(prec, delta);
            let moved = c + &Enclosure::point(shift);
            self.coeffs[i] = moved;
        }
    }

    pub fn eval(&self, p: &PointValues) -> Enclosure {
        let prec = p.x.prec();
        let mut acc = Enclosure::zero(prec);
        for (t, c) in self.expr.terms.iter().zip(&self.coeffs) {
            if c.is_point() && c.lo().is_zero() {
                continue;
            }
            acc = &acc + &(c * &t.shape(p));
        }
        acc
    }
}

#[derive(Debug, Clone)]
pub struct BoundSpec {
    pub id: String,
    pub target: Target,
    pub side: Side,
    pub expr: BoundExpr,
}

impl BoundSpec {
    pub fn domain(&self) -> Domain {
        self.target.domain()
    }
}

fn cf(parts: &[(i64, i64, i32)]) -> ClosedForm {
    parts.iter().fold(ClosedForm::zero(), |acc, &(n, d, e)| acc.plus(Rational::from((n, d)), Basis::Pi(e)))
}

fn r(n: i64, d: i64) -> ClosedForm {
    ClosedForm::rational(Rational::from((n, d)))
}

const TAN_DEN: Denominator = Denominator::new(1, -4, 1);
const TANH_DEN: Denominator = Denominator::new(1, 4, 1);
const SECTAN_DEN: Denominator = Denominator::new(1, -4, 2);

fn poly(coefficients: Vec<(i32, ClosedForm)>, d: Denominator) -> BoundExpr {
    BoundExpr::new(BoundPolynomial::new(coefficients, d).into_terms())
}

/// Numerator `P` of the order-2 lower bound on `x sec²x − tan x`.
pub fn papenfuss_p() -> BoundPolynomial {
    BoundPolynomial::new(
        vec![
            (3, cf(&[(2, 3, 4)])),
            (5, cf(&[(8, 15, 4), (-16, 3, 2)])),
            (7, cf(&[(645120, 315, -4), (3360, 315, 0), (-1344, 315, 2), (34, 315, 4)])),
            (9, cf(&[(2688, 315, 0), (-272, 315, 2)])),
            (11, cf(&[(544, 315, 0), (-5160960, 315, -8)])),
        ],
        SECTAN_DEN,
    )
}

/// Numerator `Q` of the order-2 upper bound on `x sec²x − tan x`.
pub fn papenfuss_q() -> BoundPolynomial {
    BoundPolynomial::new(
        vec![
            (3, cf(&[(2, 3, 4)])),
            (5, cf(&[(1664, 1, -2), (-64, 1, 0), (-32, 3, 2)])),
            (7, cf(&[(-14016, 1, -4), (2368, 3, -2), (64, 1, 0)])),
            (9, cf(&[(48640, 1, -6), (-9728, 3, -4), (-512, 3, -2)])),
            (11, cf(&[(-60416, 1, -8), (13312, 3, -6), (512, 3, -4)])),
        ],
        SECTAN_DEN,
    )
}

fn series_head(f: SeriesFunction, js: impl Iterator<Item = u32>, power: impl Fn(u32) -> i32) -> Result<Vec<BoundTerm>> {
    js.map(|j| Ok(BoundTerm::monomial(ClosedForm::rational(series_coefficient(f, j)?), power(j))))
        .collect()
}

fn wilker_head(n: u32) -> Result<Vec<BoundTerm>> {
    let mut t = vec![BoundTerm::monomial(r(2, 1), 0)];
    t.extend(series_head(SeriesFunction::Wilker, 1..n, |j| 2 * j as i32 + 2)?);
    Ok(t)
}

fn huygens_head(n: u32) -> Result<Vec<BoundTerm>> {
    let mut t = vec![BoundTerm::monomial(r(3, 1), 0)];
    t.extend(series_head(SeriesFunction::Huygens, 2..n + 1, |j| 2 * j as i32)?);
    Ok(t)
}

fn sec_head(n: u32) -> Result<Vec<BoundTerm>> {
    (0..n)
        .map(|j| {
            let c = euler_number(2 * j)?.abs() / factorial(2 * j);
            Ok(BoundTerm::monomial(ClosedForm::rational(c), 2 * j as i32))
        })
        .collect()
}

/// Splits `name.N<k>` into `(name, k)`.
fn split_order(family: &str) -> Option<(&str, u32)> {
    let (head, tail) = family.rsplit_once(".N")?;
    tail.parse().ok().map(|n| (head, n))
}

fn unknown(id: &str) -> crate::error::Error {
    rejected(format!("unknown bound id `{id}`"))
}

/// Looks up a bound by registry key.
pub fn bound_spec(id: &str) -> Result<BoundSpec> {
    let (family, side) = match id.rsplit_once('.') {
        Some((f, "lower")) => (f, Side::Lower),
        Some((f, "upper")) => (f, Side::Upper),
        _ => return Err(unknown(id)),
    };
    let lower = side == Side::Lower;
    let pick = |lo: BoundExpr, hi: BoundExpr| if lower { lo } else { hi };
    let lower_only = |e: BoundExpr| if lower { Ok(e) } else { Err(unknown(id)) };
    let upper_only = |e: BoundExpr| if lower { Err(unknown(id)) } else { Ok(e) };
    let pi2 = || cf(&[(1, 1, 2)]);
    use Target::*;
    let (target, expr) = match family {
        "becker-stark" => (
            TanOverX,
            pick(poly(vec![(0, r(8, 1))], TAN_DEN), poly(vec![(0, pi2())], TAN_DEN)),
        ),
        "banjac" => (
            TanOverX,
            pick(
                poly(
                    vec![(0, pi2()), (2, cf(&[(1, 3, 2), (-4, 1, 0)])), (4, cf(&[(1, 18, 2), (-2, 3, 0)]))],
                    TAN_DEN,
                ),
                poly(
                    vec![(0, pi2()), (2, cf(&[(-1, 16, 2)])), (4, r(1, 2)), (6, cf(&[(-1, 1, -2)]))],
                    TAN_DEN,
                ),
            ),
        ),
        "chen.tan.N1" => (
            TanOverX,
            pick(
                poly(
                    vec![(0, pi2()), (2, cf(&[(1, 3, 2), (-4, 1, 0)])), (4, cf(&[(128, 1, -4), (-4, 3, 0)]))],
                    TAN_DEN,
                ),
                poly(
                    vec![(0, pi2()), (2, cf(&[(72, 1, -2), (-8, 1, 0)])), (4, cf(&[(16, 1, -2), (-160, 1, -4)]))],
                    TAN_DEN,
                ),
            ),
        ),
        "chen.tanh.N1N2" => {
            let quad = cf(&[(4, 1, 0), (-1, 3, 2)]);
            (
                TanhOverX,
                pick(
                    poly(
                        vec![(0, pi2()), (2, quad.clone()), (4, cf(&[(-4, 3, 0), (128, 1, -4)]))],
                        TANH_DEN,
                    ),
                    poly(
                        vec![
                            (0, pi2()),
                            (2, quad),
                            (4, cf(&[(-4, 3, 0), (2, 15, 2)])),
                            (6, cf(&[(8, 15, 0), (-512, 1, -6)])),
                        ],
                        TANH_DEN,
                    ),
                ),
            )
        }
        "tanh.corollary.m1" | "tanh.corollary.m2" => {
            let m: u32 = if family.ends_with('1') { 1 } else { 2 };
            let top = if lower { 2 * m } else { 2 * m - 1 };
            let terms = series_head(SeriesFunction::Tanh, 1..top + 1, |j| 2 * j as i32 - 2)?;
            (TanhOverX, BoundExpr::new(terms))
        }
        "chen-sandor.sec" => (
            Sec,
            pick(poly(vec![(0, pi2())], TAN_DEN), poly(vec![(0, cf(&[(4, 1, 1)]))], TAN_DEN)),
        ),
        "chen.sec.N1" => (
            Sec,
            pick(
                poly(
                    vec![(0, pi2()), (2, cf(&[(28, 1, -1), (-8, 1, 0)])), (4, cf(&[(-48, 1, -3), (16, 1, -2)]))],
                    TAN_DEN,
                ),
                poly(
                    vec![(0, pi2()), (2, cf(&[(1, 2, 2), (-4, 1, 0)])), (4, cf(&[(-2, 1, 0), (64, 1, -3)]))],
                    TAN_DEN,
                ),
            ),
        ),
        "wilker.classic" => (Wilker, lower_only(BoundExpr::new(vec![BoundTerm::monomial(r(2, 1), 0)]))?),
        "wilker.sumner" => {
            let c = if lower { cf(&[(16, 1, -4)]) } else { r(8, 45) };
            (Wilker, BoundExpr::new(vec![BoundTerm::monomial(r(2, 1), 0), BoundTerm::tan(c, 3)]))
        }
        "chen-cheung.wilker.1" => {
            let c = if lower { r(16, 315) } else { cf(&[(64, 1, -6)]) };
            (
                Wilker,
                BoundExpr::new(vec![
                    BoundTerm::monomial(r(2, 1), 0),
                    BoundTerm::monomial(r(8, 45), 4),
                    BoundTerm::tan(c, 5),
                ]),
            )
        }
        "chen-cheung.wilker.2" => {
            let c = if lower { r(104, 4725) } else { cf(&[(256, 1, -8)]) };
            (
                Wilker,
                BoundExpr::new(vec![
                    BoundTerm::monomial(r(2, 1), 0),
                    BoundTerm::monomial(r(8, 45), 4),
                    BoundTerm::monomial(r(16, 315), 6),
                    BoundTerm::tan(c, 7),
                ]),
            )
        }
        "huygens.classic" => (Huygens, lower_only(BoundExpr::new(vec![BoundTerm::monomial(r(3, 1), 0)]))?),
        "chen-cheung.huygens.1" => {
            let c = if lower { r(3, 20) } else { cf(&[(16, 1, -4)]) };
            (Huygens, BoundExpr::new(vec![BoundTerm::monomial(r(3, 1), 0), BoundTerm::tan(c, 3)]))
        }
        "chen-cheung.huygens.2" => {
            let c = if lower { r(3, 56) } else { cf(&[(64, 1, -6)]) };
            (
                Huygens,
                BoundExpr::new(vec![
                    BoundTerm::monomial(r(3, 1), 0),
                    BoundTerm::monomial(r(3, 20), 4),
                    BoundTerm::tan(c, 5),
                ]),
            )
        }
        "lazarevic" => (Lazarevic, lower_only(BoundExpr::new(vec![BoundTerm::monomial(r(1, 1), 0)]))?),
        "wu-srivastava" => (
            WilkerReciprocal,
            lower_only(BoundExpr::new(vec![BoundTerm::monomial(r(2, 1), 0)]))?,
        ),
        "huygens.remark" => {
            let c = if lower { ClosedForm::zero() } else { r(1, 60) };
            (
                HuygensReciprocal,
                BoundExpr::new(vec![BoundTerm::monomial(r(3, 1), 0)]).with_sharp(BoundTerm::tan(c, 3)),
            )
        }
        "papenfuss" => (SecSqTan, upper_only(poly(vec![(3, cf(&[(8, 1, 2)]))], SECTAN_DEN))?),
        "bach" => (SecSqTan, upper_only(poly(vec![(3, cf(&[(2, 3, 4)]))], SECTAN_DEN))?),
        "ge" => (
            SecSqTan,
            pick(poly(vec![(3, r(64, 1))], SECTAN_DEN), poly(vec![(3, cf(&[(2, 3, 4)]))], SECTAN_DEN)),
        ),
        "sun-zhu" | "sun-zhu.open" => {
            let fifth = if lower {
                cf(&[(8, 15, 4), (-16, 3, 2)])
            } else if family == "sun-zhu" {
                cf(&[(256 * 513, 511, -2), (-8, 3, 2)])
            } else {
                cf(&[(256, 1, -2), (-8, 3, 2)])
            };
            let lead = poly(vec![(3, cf(&[(2, 3, 4)]))], SECTAN_DEN);
            let sharp = BoundTerm {
                coeff: fifth,
                power: 5,
                times_tan: false,
                denominator: SECTAN_DEN,
            };
            (SecSqTan, lead.with_sharp(sharp))
        }
        "chen.sectan.N2" => (
            SecSqTan,
            BoundExpr::new(if lower { papenfuss_p() } else { papenfuss_q() }.into_terms()),
        ),
        other => {
            let (name, n) = split_order(other).ok_or_else(|| unknown(id))?;
            ordered_bound(name, n, lower).ok_or_else(|| unknown(id))??
        }
    };
    Ok(BoundSpec {
        id: id.to_string(),
        target,
        side,
        expr,
    })
}

fn ordered_bound(name: &str, n: u32, lower: bool) -> Option<Result<(Target, BoundExpr)>> {
    let build = || -> Result<(Target, BoundExpr)> {
        match name {
            "wilker.sharp" => {
                let c = if lower {
                    ClosedForm::rational(wilker_lambda(n)?)
                } else {
                    wilker_mu_form(n)?
                };
                let e = BoundExpr::new(wilker_head(n)?).with_sharp(BoundTerm::monomial(c, 2 * n as i32 + 2));
                Ok((Target::WilkerReciprocal, e))
            }
            "wilker.alphabeta" => {
                let mut terms = vec![BoundTerm::monomial(r(2, 1), 0)];
                for k in 1..=i64::from(n) {
                    terms.push(BoundTerm {
                        coeff: r(4, 1),
                        power: 4,
                        times_tan: false,
                        denominator: Denominator::new(k * k, -1, 2),
                    });
                }
                let c = if lower {
                    wilker_alpha_form(n)
                } else {
                    super::wilker_beta_form(n)
                };
                let e = BoundExpr::new(terms).with_sharp(BoundTerm::monomial(c, 4));
                Ok((Target::WilkerReciprocal, e))
            }
            "wilker.conjecture2" => {
                let c = if lower {
                    ClosedForm::zero()
                } else {
                    ClosedForm::rational(wilker_lambda(n)?)
                };
                let e = BoundExpr::new(wilker_head(n)?).with_sharp(BoundTerm::tan(c, 2 * n as i32 + 1));
                Ok((Target::WilkerReciprocal, e))
            }
            "huygens.sharp" => {
                let c = if lower {
                    ClosedForm::rational(huygens_a(n)?)
                } else {
                    huygens_b_form(n)?
                };
                let e = BoundExpr::new(huygens_head(n)?).with_sharp(BoundTerm::monomial(c, 2 * n as i32 + 2));
                Ok((Target::HuygensReciprocal, e))
            }
            "huygens.varrho" => {
                let (lo, hi) = huygens_varrho(n)?;
                let c = ClosedForm::rational(if lower { lo } else { hi });
                let e = BoundExpr::new(huygens_head(n)?).with_sharp(BoundTerm::tan(c, 2 * n as i32 + 1));
                Ok((Target::HuygensReciprocal, e))
            }
            "sec.remainder" => {
                let c = if lower {
                    ClosedForm::rational(euler_number(2 * n)?.abs() / factorial(2 * n))
                } else {
                    super::sec_remainder_constants(n, 64)?.upper.form.expect("π-power form")
                };
                let e = BoundExpr::new(sec_head(n)?).with_sharp(BoundTerm::tan(c, 2 * n as i32 - 1));
                Ok((Target::Sec, e))
            }
            _ => Err(rejected("unknown")),
        }
    };
    match name {
        "wilker.sharp" | "wilker.alphabeta" | "wilker.conjecture2" | "huygens.sharp" | "huygens.varrho"
        | "sec.remainder" => Some(build()),
        _ => None,
    }
}

/// Every fixed bound key; order-indexed families are listed at their
/// headline orders.
pub const BOUND_IDS: [&str; 56] = [
    "becker-stark.lower",
    "becker-stark.upper",
    "banjac.lower",
    "banjac.upper",
    "chen.tan.N1.lower",
    "chen.tan.N1.upper",
    "tanh.corollary.m1.lower",
    "tanh.corollary.m1.upper",
    "tanh.corollary.m2.lower",
    "tanh.corollary.m2.upper",
    "chen.tanh.N1N2.lower",
    "chen.tanh.N1N2.upper",
    "chen-sandor.sec.lower",
    "chen-sandor.sec.upper",
    "chen.sec.N1.lower",
    "chen.sec.N1.upper",
    "wilker.classic.lower",
    "wilker.sumner.lower",
    "wilker.sumner.upper",
    "chen-cheung.wilker.1.lower",
    "chen-cheung.wilker.1.upper",
    "chen-cheung.wilker.2.lower",
    "chen-cheung.wilker.2.upper",
    "huygens.classic.lower",
    "chen-cheung.huygens.1.lower",
    "chen-cheung.huygens.1.upper",
    "chen-cheung.huygens.2.lower",
    "chen-cheung.huygens.2.upper",
    "lazarevic.lower",
    "wu-srivastava.lower",
    "wilker.sharp.N1.lower",
    "wilker.sharp.N1.upper",
    "wilker.sharp.N2.lower",
    "wilker.sharp.N2.upper",
    "wilker.alphabeta.N1.lower",
    "wilker.alphabeta.N1.upper",
    "wilker.conjecture2.N1.lower",
    "wilker.conjecture2.N1.upper",
    "huygens.sharp.N1.lower",
    "huygens.sharp.N1.upper",
    "huygens.sharp.N2.lower",
    "huygens.sharp.N2.upper",
    "huygens.varrho.N1.lower",
    "huygens.varrho.N1.upper",
    "huygens.remark.lower",
    "huygens.remark.upper",
    "papenfuss.upper",
    "bach.upper",
    "ge.lower",
    "ge.upper",
    "sun-zhu.lower",
    "sun-zhu.upper",
    "sun-zhu.open.lower",
    "sun-zhu.open.upper",
    "chen.sectan.N2.lower",
    "chen.sectan.N2.upper",
];

/// Evaluates a registered bound at `x`.
pub fn rational_bound(bound_id: &str, x: &Float, prec: u32) -> Result<Enclosure> {
    let spec = bound_spec(bound_id)?;
    let wp = prec + 16;
    let xe = Enclosure::point(Float::with_val(wp, x));
    if !spec.domain().contains(&xe) {
        return Err(domain(format!("{bound_id} is stated on {}, got x = {x}", spec.domain().name())));
    }
    let p = PointValues::new(xe);
    Ok(spec.expr.prepare(wp).eval(&p).with_prec(prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(x: f64) -> Float {
        Float::with_val(256, x)
    }

    #[test]
    fn every_key_resolves_and_evaluates() {
        for id in BOUND_IDS {
            let v = rational_bound(id, &at(0.5), 256).unwrap_or_else(|e| panic!("{id}: {e}"));
            assert!(v.is_finite() && v.width() < 1e-60, "{id}");
        }
        assert!(bound_spec("nope.lower").is_err());
        assert!(bound_spec("wilker.classic.upper").is_err());
        assert!(rational_bound("banjac.lower", &at(1.6), 128).is_err());
        assert!(rational_bound("banjac.lower", &at(0.0), 128).is_err());
    }

    #[test]
    fn becker_stark_lower_at_one() {
        let v = rational_bound("becker-stark.lower", &at(1.0), 256).unwrap();
        let pi2 = Enclosure::pi(256).sqr();
        let want = Enclosure::from_int(8, 256).div(&(&pi2 - &Enclosure::from_int(4, 256)));
        assert!(v.overlaps(&want));
    }

    #[test]
    fn leading_taylor_coefficients() {
        let tiny = at(1e-30);
        for id in ["chen.tan.N1.lower", "chen.tan.N1.upper", "chen.tanh.N1N2.lower", "chen.sec.N1.upper"] {
            let v = rational_bound(id, &tiny, 256).unwrap();
            assert!((v.mid() - 1u32).abs() < 1e-50, "{id}");
        }
        // x sec²x − tan x ~ (2/3) x³
        for p in [papenfuss_p(), papenfuss_q()] {
            assert_eq!(p.coefficients[0], (3, cf(&[(2, 3, 4)])));
            let x = Enclosure::point(at(1e-20));
            let ratio = p.eval(&x, 256).div(&x.powi(3));
            assert!((ratio.mid() * 3u32 - 2u32).abs() < 1e-30);
        }
    }

    #[test]
    fn tanh_upper_exceeds_tanh() {
        let v = rational_bound("chen.tanh.N1N2.upper", &at(1.0), 256).unwrap();
        assert!(Enclosure::point(at(1.0)).tanh().certainly_lt(&v));
    }

    #[test]
    fn sharp_tweak_moves_the_constant() {
        let spec = bound_spec("wilker.sharp.N1.lower").unwrap();
        let mut p = spec.expr.prepare(256);
        let before = p.sharp_constant().unwrap().clone();
        p.tweak_sharp(1e-6);
        assert!(before.certainly_lt(p.sharp_constant().unwrap()));
    }
}
