//! Tails `Σ_{k≥K} σ_k m_k^{-s}` over the lattices `m_k = k` and
//! `m_k = 2k − 1`, with `σ_k = 1` or `(−1)^{k+1}`, reduced to Hurwitz
//! values:
//!
//! | lattice | signs | tail from `K` |
//! |---|---|---|
//! | all | plain | `ζ(s, K)` |
//! | odd | plain | `2^{-s} ζ(s, K − 1/2)` |
//! | all | alternating | `(−1)^{K+1} 2^{-s} D(s, K/2, 1/2)` |
//! | odd | alternating | `(−1)^{K+1} 4^{-s} D(s, (2K−1)/4, 1/2)` |
//!
//! where `D(s, a, h) = ζ(s, a) − ζ(s, a + h)`.

use std::collections::HashMap;
use std::sync::RwLock;

use rug::Rational;

use super::hurwitz::{hurwitz_diff_many, hurwitz_many};
use crate::arith::Enclosure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lattice {
    /// `m_k = k`
    All,
    /// `m_k = 2k − 1`
    Odd,
}

impl Lattice {
    pub fn point(self, k: u64) -> u64 {
        match self {
            Lattice::All => k,
            Lattice::Odd => 2 * k - 1,
        }
    }

    /// Gap between consecutive lattice points.
    pub fn step(self) -> u64 {
        match self {
            Lattice::All => 1,
            Lattice::Odd => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub lattice: Lattice,
    pub alternating: bool,
}

impl Family {
    pub const fn new(lattice: Lattice, alternating: bool) -> Self {
        Family {
            lattice,
            alternating,
        }
    }

    pub fn sign(self, k: u64) -> i32 {
        if self.alternating && k % 2 == 0 {
            -1
        } else {
            1
        }
    }
}

type Key = (Family, u64, u32, u32);

static CACHE: RwLock<Option<HashMap<Key, Enclosure>>> = RwLock::new(None);

/// Tails `Σ_{k≥K} σ_k m_k^{-s}` for every `s` in ascending `s_list`.
///
/// Plain tails need `s ≥ 2`; alternating tails accept `s ≥ 1`.
pub fn tails(family: Family, start: u64, s_list: &[u32], prec: u32) -> Vec<Enclosure> {
    assert!(start >= 1);
    let mut out: Vec<Option<Enclosure>> = {
        let guard = CACHE.read().unwrap_or_else(|e| e.into_inner());
        s_list
            .iter()
            .map(|&s| {
                guard
                    .as_ref()
                    .and_then(|m| m.get(&(family, start, s, prec)).cloned())
            })
            .collect()
    };
    let missing: Vec<u32> = s_list
        .iter()
        .zip(&out)
        .filter(|(_, v)| v.is_none())
        .map(|(&s, _)| s)
        .collect();
    if !missing.is_empty() {
        let computed = compute(family, start, &missing, prec);
        let mut guard = CACHE.write().unwrap_or_else(|e| e.into_inner());
        let map = guard.get_or_insert_with(HashMap::new);
        for (s, v) in missing.iter().zip(computed) {
            map.insert((family, start, *s, prec), v.clone());
            for (slot, &t) in out.iter_mut().zip(s_list) {
                if t == *s && slot.is_none() {
                    *slot = Some(v.clone());
                }
            }
        }
    }
    out.into_iter().map(|v| v.expect("filled")).collect()
}

pub fn tail(family: Family, start: u64, s: u32, prec: u32) -> Enclosure {
    tails(family, start, &[s], prec).pop().expect("one value")
}

fn compute(family: Family, start: u64, s_list: &[u32], prec: u32) -> Vec<Enclosure> {
    let k = Rational::from(start);
    let half = Rational::from((1, 2));
    let (values, shift) = match (family.lattice, family.alternating) {
        (Lattice::All, false) => (hurwitz_many(s_list, &k, prec), 0),
        (Lattice::Odd, false) => (hurwitz_many(s_list, &Rational::from(&k - &half), prec), 1),
        (Lattice::All, true) => (hurwitz_diff_many(s_list, &Rational::from(&k / 2u32), &half, prec), 1),
        (Lattice::Odd, true) => {
            let a = Rational::from((2 * start - 1, 4u64));
            (hurwitz_diff_many(s_list, &a, &half, prec), 2)
        }
    };
    let sign = if family.alternating && start % 2 == 0 { -1 } else { 1 };
    values
        .into_iter()
        .zip(s_list)
        .map(|(v, &s)| {
            let scaled = v.mul_pow2(-(shift * s as i32));
            if sign < 0 {
                -scaled
            } else {
                scaled
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(family: Family, start: u64, s: u32, terms: u64, prec: u32) -> Enclosure {
        let mut acc = Enclosure::zero(prec);
        for k in start..start + terms {
            let m = Enclosure::from_int(family.lattice.point(k), prec).powi(-(s as i32));
            acc = if family.sign(k) < 0 { &acc - &m } else { &acc + &m };
        }
        acc
    }

    #[test]
    fn tails_agree_with_long_direct_sums_for_steep_exponents() {
        // With s = 40 the direct sum over 200 terms truncates below 1e-90.
        for lattice in [Lattice::All, Lattice::Odd] {
            for alternating in [false, true] {
                let fam = Family::new(lattice, alternating);
                for start in [1u64, 2, 7, 16] {
                    let t = tail(fam, start, 40, 256);
                    let d = brute(fam, start, 40, 200, 300);
                    let tol = rug::Float::with_val(64, 1e-88);
                    assert!(t.widen(&tol).overlaps(&d), "{fam:?} start={start}");
                    assert!(t.width() < 1e-70);
                }
            }
        }
    }

    #[test]
    fn alternating_odd_first_power_is_quarter_pi() {
        let t = tail(Family::new(Lattice::Odd, true), 1, 1, 256);
        let pi4 = Enclosure::pi(256).mul_pow2(-2);
        assert!(t.overlaps(&pi4));
        assert!(t.width() < 1e-70);
    }

    #[test]
    fn odd_plain_square_is_pi_squared_over_eight() {
        let t = tail(Family::new(Lattice::Odd, false), 1, 2, 256);
        assert!(t.overlaps(&Enclosure::pi(256).sqr().mul_pow2(-3)));
    }
}
