//! Interval arithmetic over MPFR floats with outward (directed) rounding.
//!
//! Every operation on [`Enclosure`] rounds the lower endpoint toward −∞ and
//! the upper endpoint toward +∞, so the result contains the exact image of
//! every real in the operands. Undefined results (division by an interval
//! containing zero, a pole inside the argument of `tan`) widen to the whole
//! line rather than erroring, which callers observe as an uninformative
//! enclosure.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round, Special};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Arbitrary-precision binary floating value.
pub type BigFloat = Float;

/// Closed interval `[lo, hi]` certified to contain a real value.
#[derive(Clone, PartialEq)]
pub struct Enclosure {
    lo: Float,
    hi: Float,
}

macro_rules! down {
    ($prec:expr, $val:expr) => {
        Float::with_val_round($prec, $val, Round::Down).0
    };
}

macro_rules! up {
    ($prec:expr, $val:expr) => {
        Float::with_val_round($prec, $val, Round::Up).0
    };
}

impl Enclosure {
    /// Builds `[lo, hi]`, panicking on a reversed pair.
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(lo.is_nan() || hi.is_nan() || lo <= hi, "reversed enclosure: lo={lo} hi={hi}");
        Enclosure { lo, hi }.normalized()
    }

    pub fn point(x: Float) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::point(Float::with_val(prec, 0))
    }

    pub fn entire(prec: u32) -> Self {
        Enclosure {
            lo: Float::with_val(prec, Special::NegInfinity),
            hi: Float::with_val(prec, Special::Infinity),
        }
    }

    pub fn from_int(n: impl Into<Integer>, prec: u32) -> Self {
        let n: Integer = n.into();
        Enclosure {
            lo: down!(prec, &n),
            hi: up!(prec, &n),
        }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Enclosure {
            lo: down!(prec, r),
            hi: up!(prec, r),
        }
    }

    /// Encloses the decimal (or any MPFR-parsable) literal `s`.
    pub fn parse(s: &str, prec: u32) -> Option<Self> {
        Some(Enclosure {
            lo: down!(prec, Float::parse(s).ok()?),
            hi: up!(prec, Float::parse(s).ok()?),
        })
    }

    pub fn pi(prec: u32) -> Self {
        Enclosure {
            lo: down!(prec, Constant::Pi),
            hi: up!(prec, Constant::Pi),
        }
    }

    pub fn ln2(prec: u32) -> Self {
        Enclosure {
            lo: down!(prec, Constant::Log2),
            hi: up!(prec, Constant::Log2),
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn into_bounds(self) -> (Float, Float) {
        (self.lo, self.hi)
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Midpoint rounded to nearest.
    pub fn mid(&self) -> Float {
        let prec = self.prec();
        if !self.is_finite() {
            return Float::with_val(prec, Special::Nan);
        }
        let mut m = Float::with_val(prec + 1, &self.lo + &self.hi);
        m >>= 1;
        Float::with_val(prec, m)
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> Float {
        up!(self.prec(), &self.hi - &self.lo)
    }

    /// Upper bound on `max |x|` over the enclosure.
    pub fn mag(&self) -> Float {
        let a = Float::with_val(self.prec(), self.lo.abs_ref());
        let b = Float::with_val(self.prec(), self.hi.abs_ref());
        if a > b {
            a
        } else {
            b
        }
    }

    /// Lower bound on `min |x|` over the enclosure.
    pub fn mig(&self) -> Float {
        if self.contains_zero() {
            return Float::with_val(self.prec(), 0);
        }
        let a = Float::with_val(self.prec(), self.lo.abs_ref());
        let b = Float::with_val(self.prec(), self.hi.abs_ref());
        if a < b {
            a
        } else {
            b
        }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.cmp0() == Some(Ordering::Greater)
    }

    pub fn is_negative(&self) -> bool {
        self.hi.cmp0() == Some(Ordering::Less)
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// `true` when `self ⊆ other`.
    pub fn subset_of(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Certified `self < other`.
    pub fn certainly_lt(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &Enclosure) -> Enclosure {
        let lo = if self.lo < other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi > other.hi { &self.hi } else { &other.hi };
        Enclosure::new(lo.clone(), hi.clone())
    }

    /// Widens both endpoints by `r ≥ 0`.
    pub fn widen(&self, r: &Float) -> Enclosure {
        let prec = self.prec();
        Enclosure {
            lo: down!(prec, &self.lo - r),
            hi: up!(prec, &self.hi + r),
        }
        .normalized()
    }

    /// Rounds the endpoints outward to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Enclosure {
        Enclosure {
            lo: down!(prec, &self.lo),
            hi: up!(prec, &self.hi),
        }
    }

    pub fn abs(&self) -> Enclosure {
        if self.is_positive() || self.lo.is_zero() {
            self.clone()
        } else if self.is_negative() || self.hi.is_zero() {
            -self
        } else {
            Enclosure {
                lo: Float::with_val(self.prec(), 0),
                hi: self.mag(),
            }
        }
    }

    /// Multiplication by `2^k`, exact barring over/underflow.
    pub fn mul_pow2(&self, k: i32) -> Enclosure {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        lo <<= k;
        hi <<= k;
        Enclosure { lo, hi }
    }

    pub fn mul_int(&self, n: i64) -> Enclosure {
        self * &Enclosure::from_int(n, self.prec())
    }

    pub fn div_int(&self, n: i64) -> Enclosure {
        self.div(&Enclosure::from_int(n, self.prec()))
    }

    pub fn mul_rational(&self, r: &Rational) -> Enclosure {
        self * &Enclosure::from_rational(r, self.prec())
    }

    pub fn recip(&self) -> Enclosure {
        let prec = self.prec();
        if self.contains_zero() {
            return Enclosure::entire(prec);
        }
        Enclosure {
            lo: down!(prec, 1 / &self.hi),
            hi: up!(prec, 1 / &self.lo),
        }
    }

    pub fn div(&self, other: &Enclosure) -> Enclosure {
        let prec = self.prec().max(other.prec());
        if other.contains_zero() {
            return Enclosure::entire(prec);
        }
        let cands_lo = [
            down!(prec, &self.lo / &other.lo),
            down!(prec, &self.lo / &other.hi),
            down!(prec, &self.hi / &other.lo),
            down!(prec, &self.hi / &other.hi),
        ];
        let cands_hi = [
            up!(prec, &self.lo / &other.lo),
            up!(prec, &self.lo / &other.hi),
            up!(prec, &self.hi / &other.lo),
            up!(prec, &self.hi / &other.hi),
        ];
        Enclosure {
            lo: min_of(cands_lo),
            hi: max_of(cands_hi),
        }
        .normalized()
    }

    pub fn sqr(&self) -> Enclosure {
        let prec = self.prec();
        if self.is_positive() || self.lo.is_zero() {
            Enclosure {
                lo: down!(prec, self.lo.square_ref()),
                hi: up!(prec, self.hi.square_ref()),
            }
        } else if self.is_negative() || self.hi.is_zero() {
            Enclosure {
                lo: down!(prec, self.hi.square_ref()),
                hi: up!(prec, self.lo.square_ref()),
            }
        } else {
            let m = self.mag();
            Enclosure {
                lo: Float::with_val(prec, 0),
                hi: up!(prec, m.square_ref()),
            }
        }
    }

    /// Integer power; negative exponents go through the reciprocal.
    pub fn powi(&self, n: i32) -> Enclosure {
        let prec = self.prec();
        match n.cmp(&0) {
            Ordering::Equal => Enclosure::from_int(1, prec),
            Ordering::Less => self.powi(-n).recip(),
            Ordering::Greater => {
                if n % 2 == 0 {
                    let a = self.abs();
                    Enclosure {
                        lo: down!(prec, (&a.lo).pow(n)),
                        hi: up!(prec, (&a.hi).pow(n)),
                    }
                } else {
                    Enclosure {
                        lo: down!(prec, (&self.lo).pow(n)),
                        hi: up!(prec, (&self.hi).pow(n)),
                    }
                }
            }
        }
    }

    pub fn sqrt(&self) -> Enclosure {
        let prec = self.prec();
        if self.is_negative() {
            return Enclosure::entire(prec);
        }
        let lo = if self.lo.cmp0() == Some(Ordering::Less) {
            Float::with_val(prec, 0)
        } else {
            down!(prec, self.lo.sqrt_ref())
        };
        Enclosure {
            lo,
            hi: up!(prec, self.hi.sqrt_ref()),
        }
    }

    pub fn cbrt(&self) -> Enclosure {
        let prec = self.prec();
        Enclosure {
            lo: down!(prec, self.lo.cbrt_ref()),
            hi: up!(prec, self.hi.cbrt_ref()),
        }
    }

    pub fn ln(&self) -> Enclosure {
        let prec = self.prec();
        if !self.is_positive() {
            return Enclosure::entire(prec);
        }
        Enclosure {
            lo: down!(prec, self.lo.ln_ref()),
            hi: up!(prec, self.hi.ln_ref()),
        }
    }

    /// `ln(1 + x)` for `x > -1`.
    pub fn ln_1p(&self) -> Enclosure {
        let prec = self.prec();
        if self.lo <= -1 {
            return Enclosure::entire(prec);
        }
        Enclosure {
            lo: down!(prec, self.lo.ln_1p_ref()),
            hi: up!(prec, self.hi.ln_1p_ref()),
        }
    }

    pub fn tanh(&self) -> Enclosure {
        let prec = self.prec();
        Enclosure {
            lo: down!(prec, self.lo.tanh_ref()),
            hi: up!(prec, self.hi.tanh_ref()),
        }
    }

    pub fn sin(&self) -> Enclosure {
        self.periodic(Trig::Sin)
    }

    pub fn cos(&self) -> Enclosure {
        self.periodic(Trig::Cos)
    }

    pub fn tan(&self) -> Enclosure {
        let prec = self.prec();
        if !self.is_finite() {
            return Enclosure::entire(prec);
        }
        // Poles at π/2 + kπ; tan is increasing between consecutive poles.
        let (first, last) = self.critical_range(1);
        if first <= last {
            return Enclosure::entire(prec);
        }
        Enclosure {
            lo: down!(prec, self.lo.tan_ref()),
            hi: up!(prec, self.hi.tan_ref()),
        }
    }

    pub fn sec(&self) -> Enclosure {
        self.cos().recip()
    }

    pub fn csc(&self) -> Enclosure {
        self.sin().recip()
    }

    pub fn cot(&self) -> Enclosure {
        self.tan().recip()
    }

    fn periodic(&self, f: Trig) -> Enclosure {
        let prec = self.prec();
        let unit = || Enclosure::new(Float::with_val(prec, -1), Float::with_val(prec, 1));
        if !self.is_finite() {
            return unit();
        }
        let eval_lo = |x: &Float| match f {
            Trig::Sin => down!(prec, x.sin_ref()),
            Trig::Cos => down!(prec, x.cos_ref()),
        };
        let eval_hi = |x: &Float| match f {
            Trig::Sin => up!(prec, x.sin_ref()),
            Trig::Cos => up!(prec, x.cos_ref()),
        };
        let mut lo = min_of([eval_lo(&self.lo), eval_lo(&self.hi)]);
        let mut hi = max_of([eval_hi(&self.lo), eval_hi(&self.hi)]);
        // Extrema of sin sit at π/2 + kπ (value (−1)^k), of cos at kπ (value (−1)^k).
        let offset = match f {
            Trig::Sin => 1,
            Trig::Cos => 0,
        };
        let (first, last) = self.critical_range(offset);
        if first <= last {
            if Integer::from(&last - &first) >= 1 {
                return unit();
            }
            if first.is_even() {
                hi = Float::with_val(prec, 1);
            } else {
                lo = Float::with_val(prec, -1);
            }
        }
        Enclosure { lo, hi }
    }

    /// Integers `k` with `offset·π/2 + kπ` possibly inside the enclosure,
    /// as the inclusive range `(first, last)`; empty when `first > last`.
    fn critical_range(&self, offset: i32) -> (Integer, Integer) {
        let prec = self.prec() + 16;
        let pi = Enclosure::pi(prec);
        let shift = pi.mul_pow2(-1).mul_int(offset as i64);
        let lo = Enclosure::point(Float::with_val(prec, &self.lo));
        let hi = Enclosure::point(Float::with_val(prec, &self.hi));
        let ylo = (&lo - &shift).div(&pi);
        let yhi = (&hi - &shift).div(&pi);
        let first = ylo.lo.clone().ceil().to_integer().unwrap_or_default();
        let last = yhi.hi.clone().floor().to_integer().unwrap_or_default();
        (first, last)
    }

    fn normalized(mut self) -> Self {
        if self.lo.is_nan() {
            self.lo = Float::with_val(self.lo.prec(), Special::NegInfinity);
        }
        if self.hi.is_nan() {
            self.hi = Float::with_val(self.hi.prec(), Special::Infinity);
        }
        self
    }
}

#[derive(Clone, Copy)]
enum Trig {
    Sin,
    Cos,
}

fn min_of<const N: usize>(xs: [Float; N]) -> Float {
    let mut it = xs.into_iter();
    let mut best = it.next().expect("non-empty");
    for x in it {
        if x.is_nan() || best.is_nan() {
            best = Float::with_val(best.prec(), Special::NegInfinity);
        } else if x < best {
            best = x;
        }
    }
    best
}

fn max_of<const N: usize>(xs: [Float; N]) -> Float {
    let mut it = xs.into_iter();
    let mut best = it.next().expect("non-empty");
    for x in it {
        if x.is_nan() || best.is_nan() {
            best = Float::with_val(best.prec(), Special::Infinity);
        } else if x > best {
            best = x;
        }
    }
    best
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        Enclosure {
            lo: down!(prec, &self.lo + &rhs.lo),
            hi: up!(prec, &self.hi + &rhs.hi),
        }
        .normalized()
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        Enclosure {
            lo: down!(prec, &self.lo - &rhs.hi),
            hi: up!(prec, &self.hi - &rhs.lo),
        }
        .normalized()
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &Enclosure) -> Enclosure {
        let prec = self.prec().max(rhs.prec());
        let (a, b, c, d) = (&self.lo, &self.hi, &rhs.lo, &rhs.hi);
        // Sign-based cases avoid four products in the common positive case.
        if self.is_positive() && rhs.is_positive() {
            return Enclosure {
                lo: down!(prec, a * c),
                hi: up!(prec, b * d),
            };
        }
        let lo = min_of([
            down!(prec, a * c),
            down!(prec, a * d),
            down!(prec, b * c),
            down!(prec, b * d),
        ]);
        let hi = max_of([
            up!(prec, a * c),
            up!(prec, a * d),
            up!(prec, b * c),
            up!(prec, b * d),
        ]);
        Enclosure { lo, hi }.normalized()
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: &Enclosure) -> Enclosure {
                (&self).$m(rhs)
            }
        }
        impl $tr<Enclosure> for &Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            self.lo.to_string_radix(10, Some(20)),
            self.hi.to_string_radix(10, Some(20))
        )
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Number of directly summed terms and a rigorous bound on everything left out.
#[derive(Debug, Clone, PartialEq)]
pub struct TailBound {
    pub terms: u64,
    pub bound: Float,
}

impl TailBound {
    pub fn new(terms: u64, bound: Float) -> Self {
        TailBound { terms, bound }
    }
}

/// Number of decimal digits that round-trips a `prec`-bit float through text.
#[allow(clippy::approx_constant)]
pub fn decimal_digits(prec: u32) -> usize {
    (f64::from(prec) * 0.3010).ceil() as usize + 1
}

/// Decimal rendering with enough digits to re-parse to the identical float.
pub fn to_decimal(x: &Float) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(decimal_digits(x.prec())))
}

/// Inverse of [`to_decimal`] at the given precision.
pub fn from_decimal(s: &str, prec: u32) -> Option<Float> {
    Float::parse(s).ok().map(|p| Float::with_val(prec, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: f64) -> Float {
        Float::with_val(128, x)
    }

    #[test]
    fn pi_is_tight_and_ordered() {
        let pi = Enclosure::pi(256);
        assert!(pi.lo() < pi.hi());
        assert!(pi.width() < 1e-75);
        let ref_pi = Float::parse("3.14159265358979323846264338327950288419716939937510582097494459").unwrap();
        let ref_pi = Float::with_val(256, ref_pi);
        assert!((pi.mid() - ref_pi).abs() < 1e-60);
    }

    #[test]
    fn arithmetic_contains_exact_rational_results() {
        let third = Enclosure::from_rational(&Rational::from((1, 3)), 128);
        let sum = &(&third + &third) + &third;
        assert!(sum.contains(&Float::with_val(128, 1)));
        let prod = &third * &Enclosure::from_int(3, 128);
        assert!(prod.contains(&Float::with_val(128, 1)));
    }

    #[test]
    fn mixed_sign_products() {
        let a = Enclosure::new(f(-2.0), f(3.0));
        let b = Enclosure::new(f(-5.0), f(4.0));
        let p = &a * &b;
        assert_eq!(*p.lo(), -15.0);
        assert_eq!(*p.hi(), 12.0);
    }

    #[test]
    fn division_through_zero_is_entire() {
        let a = Enclosure::from_int(1, 64);
        let b = Enclosure::new(f(-1.0), f(1.0));
        let q = a.div(&b);
        assert!(q.lo().is_infinite() && q.hi().is_infinite());
    }

    #[test]
    fn sin_over_maximum_reaches_one() {
        let x = Enclosure::new(f(1.5), f(1.7));
        let s = x.sin();
        assert_eq!(*s.hi(), 1);
        assert!(*s.lo() > 0.99);
    }

    #[test]
    fn cos_over_minimum_reaches_minus_one() {
        let x = Enclosure::new(f(3.0), f(3.3));
        let c = x.cos();
        assert_eq!(*c.lo(), -1);
    }

    #[test]
    fn tan_across_pole_is_entire() {
        let x = Enclosure::new(f(1.5), f(1.6));
        assert!(!x.tan().is_finite());
        let y = Enclosure::new(f(1.0), f(1.1));
        let t = y.tan();
        assert!(t.is_finite() && *t.lo() > 1.5 && *t.hi() < 2.0);
    }

    #[test]
    fn sqr_of_straddling_interval_starts_at_zero() {
        let x = Enclosure::new(f(-1.0), f(2.0));
        let s = x.sqr();
        assert_eq!(*s.lo(), 0);
        assert_eq!(*s.hi(), 4);
    }

    #[test]
    fn decimal_round_trip_is_bit_exact() {
        let x = Enclosure::pi(256).hi().clone();
        let s = to_decimal(&x);
        let back = from_decimal(&s, 256).unwrap();
        assert_eq!(back, x);
        assert_eq!(to_decimal(&back), s);
    }
}
