//! Trigamma and tetragamma-derivative values `ψ′(z)`, `ψ‴(z)` at positive
//! integers and half-integers.
//!
//! `ψ^(m)(z) = (−1)^{m+1} m! Σ_{k≥0} (z+k)^{-(m+1)}`; for odd `m` the sign is
//! positive. The argument is shifted upward with `ψ^(m)(z) = ψ^(m)(z+1) +
//! m!/z^{m+1}` and the remaining series is closed with a certified
//! Euler–Maclaurin tail.

use rug::{Float, Rational};

use crate::arith::{Enclosure, TailBound};
use crate::error::{rejected, Result};
use crate::zeta_sums::hurwitz::{min_tail_start, tail_from};

#[derive(Debug, Clone)]
pub struct PolygammaValue {
    pub order: u32,
    pub argument: Rational,
    pub value: Enclosure,
    pub tail: TailBound,
}

impl PolygammaValue {
    pub fn numeric(&self) -> Float {
        self.value.mid()
    }
}

fn check_argument(z: &Rational) -> Result<()> {
    if *z <= 0 {
        return Err(rejected(format!("polygamma argument must be positive, got {z}")));
    }
    if *z.denom() != 1 && *z.denom() != 2 {
        return Err(rejected(format!("polygamma argument must be an integer or half-integer, got {z}")));
    }
    Ok(())
}

pub fn polygamma(m: u32, z: &Rational, prec: u32) -> Result<PolygammaValue> {
    if m != 1 && m != 3 {
        return Err(rejected(format!("polygamma order {m} is not supported (use 1 or 3)")));
    }
    check_argument(z)?;
    let s = m + 1;
    let wp = prec + 32;
    let floor = 20f64.max(f64::from(prec) / 8.0).max(min_tail_start(s, wp));
    let zf = z.to_f64();
    let shift = if zf >= floor { 0 } else { (floor - zf).ceil() as u64 };
    let mut head = Enclosure::zero(wp);
    for k in 0..shift {
        let x = Enclosure::from_rational(&Rational::from(z + k), wp);
        head = &head + &x.powi(-(s as i32));
    }
    let big_z = Rational::from(z + shift);
    let (tail, bound) = tail_from(s, &big_z, wp).expect("shifted past the tail threshold");
    let fact = if m == 1 { 1 } else { 6 };
    let value = (&head + &tail).mul_int(fact).with_prec(prec);
    Ok(PolygammaValue {
        order: m,
        argument: z.clone(),
        value,
        tail: TailBound::new(shift, bound * fact),
    })
}

/// `Σ_{k>N} 1/k⁴ = ψ‴(N+1)/6`.
pub fn tail_inverse_quartic(n: u32, prec: u32) -> Enclosure {
    let v = polygamma(3, &Rational::from(n + 1), prec + 8).expect("valid argument");
    v.value.div_int(6).with_prec(prec)
}

/// `Σ_{k>N} 1/(4k²−1)² = ψ′(N+1/2)/8 − (N+1)/(2(2N+1)²)`.
pub fn tail_4k2_minus_1_sq(n: u32, prec: u32) -> Enclosure {
    let wp = prec + 8;
    let z = Rational::from((2 * n + 1, 2));
    let v = polygamma(1, &z, wp).expect("valid argument");
    let odd = u64::from(2 * n + 1);
    let corr = Rational::from((u64::from(n) + 1, 2 * odd * odd));
    (&v.value.mul_pow2(-3) - &Enclosure::from_rational(&corr, wp)).with_prec(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi(prec: u32) -> Enclosure {
        Enclosure::pi(prec)
    }

    #[test]
    fn listed_values() {
        let half = polygamma(1, &Rational::from((1, 2)), 256).unwrap();
        assert!(half.value.overlaps(&pi(256).sqr().mul_pow2(-1)));
        let one = polygamma(1, &Rational::from(1), 256).unwrap();
        assert!(one.value.overlaps(&pi(256).sqr().div_int(6)));
        let three = polygamma(3, &Rational::from(1), 256).unwrap();
        assert!(three.value.overlaps(&pi(256).powi(4).div_int(15)));
        assert!(three.value.width() < 1e-70);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(polygamma(2, &Rational::from(1), 128).is_err());
        assert!(polygamma(1, &Rational::from(0), 128).is_err());
        assert!(polygamma(1, &Rational::from((1, 3)), 128).is_err());
    }

    #[test]
    fn quartic_tails() {
        let z4 = pi(256).powi(4).div_int(90);
        let one = Enclosure::from_int(1, 256);
        assert!(tail_inverse_quartic(0, 256).overlaps(&z4));
        assert!(tail_inverse_quartic(1, 256).overlaps(&(&z4 - &one)));
        let sixteenth = Enclosure::from_rational(&Rational::from((1, 16)), 256);
        assert!(tail_inverse_quartic(2, 256).overlaps(&(&(&z4 - &one) - &sixteenth)));
    }

    #[test]
    fn odd_square_tail_small_cases() {
        let base = (&pi(256).sqr() - &Enclosure::from_int(8, 256)).div_int(16);
        assert!(tail_4k2_minus_1_sq(0, 256).overlaps(&base));
        let ninth = Enclosure::from_rational(&Rational::from((1, 9)), 256);
        assert!(tail_4k2_minus_1_sq(1, 256).overlaps(&(&base - &ninth)));
    }
}
