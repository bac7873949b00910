//! Certified comparison of `(1 + ln(Δ+1))/(Δ+1)`, the classical upper bound
//! on `γ/n` for minimum degree Δ, against `Δ/(4Δ − 2)`, the lower bound on
//! `γ_e/n` for Δ-regular graphs. Whenever the first is at most the second,
//! `γ ≤ γ_e` holds for every Δ-regular graph.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Enclosure of `2·atanh(z) = ln((1+z)/(1-z))` for `0 ≤ z < 1`, from `terms`
/// terms of the odd power series plus a geometric tail bound.
fn atanh2_bounds(z: &BigRational, terms: u32) -> (BigRational, BigRational) {
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    for j in 0..terms {
        sum += &power / BigInt::from(2 * j + 1);
        power *= &z2;
    }
    // Remaining terms are at most z^(2N+1)/(2N+1) · 1/(1 − z²).
    let tail = &power / BigInt::from(2 * terms + 1) / (BigRational::one() - &z2);
    let two = BigRational::from_integer(2.into());
    (&sum * &two, (sum + tail) * two)
}

/// Rational bounds `lo ≤ ln(x) ≤ hi` for an integer `x ≥ 1`. The width
/// shrinks geometrically in `terms`.
pub fn ln_bounds(x: u64, terms: u32) -> (BigRational, BigRational) {
    assert!(x >= 1);
    let k = 63 - x.leading_zeros();
    // x = 2^k · y with 1 ≤ y < 2, and ln y = 2 atanh((y − 1)/(y + 1)).
    let y = BigRational::new(BigInt::from(x), BigInt::from(1u64) << k);
    let z = (&y - BigRational::one()) / (&y + BigRational::one());
    let (ly_lo, ly_hi) = atanh2_bounds(&z, terms);
    let (l2_lo, l2_hi) = atanh2_bounds(&q(1, 3), terms);
    let k = BigRational::from_integer(BigInt::from(k));
    (&k * l2_lo + ly_lo, k * l2_hi + ly_hi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdVerdict {
    pub delta: u32,
    pub holds: bool,
    /// Enclosure of `(1 + ln(Δ+1))/(Δ+1)` tight enough to decide.
    pub lhs_lower: BigRational,
    pub lhs_upper: BigRational,
    /// `Δ/(4Δ − 2)`, exact.
    pub rhs: BigRational,
}

impl ThresholdVerdict {
    pub fn lhs_f64(&self) -> f64 {
        ((&self.lhs_lower + &self.lhs_upper) / BigInt::from(2))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn rhs_f64(&self) -> f64 {
        self.rhs.to_f64().unwrap_or(f64::NAN)
    }
}

/// Decides `(1 + ln(Δ+1))/(Δ+1) ≤ Δ/(4Δ − 2)`. The logarithm is enclosed in
/// rational bounds that are refined until they fall on one side; the two
/// sides are never equal since the logarithm of an integer above 1 is
/// irrational.
pub fn large_degree_threshold(delta: u32) -> ThresholdVerdict {
    assert!(delta >= 1, "degree must be positive");
    let d = i64::from(delta);
    let rhs = q(d, 4 * d - 2);
    let scale = q(1, d + 1);
    let mut terms = 8;
    loop {
        let (lo, hi) = ln_bounds(u64::from(delta) + 1, terms);
        let lhs_lower = (BigRational::one() + lo) * &scale;
        let lhs_upper = (BigRational::one() + hi) * &scale;
        let verdict = if lhs_upper <= rhs {
            Some(true)
        } else if lhs_lower > rhs {
            Some(false)
        } else {
            None
        };
        if let Some(holds) = verdict {
            return ThresholdVerdict {
                delta,
                holds,
                lhs_lower,
                lhs_upper,
                rhs,
            };
        }
        terms *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_enclosures() {
        for x in [1u64, 2, 3, 10, 14, 101] {
            let (lo, hi) = ln_bounds(x, 20);
            let exact = (x as f64).ln();
            assert!(lo.to_f64().unwrap() <= exact + 1e-12, "{x}");
            assert!(hi.to_f64().unwrap() >= exact - 1e-12, "{x}");
            assert!((&hi - &lo).to_f64().unwrap() < 1e-9);
        }
        assert_eq!(ln_bounds(1, 4).0, BigRational::zero());
    }

    #[test]
    fn verdicts() {
        let v = large_degree_threshold(13);
        assert!(v.holds);
        assert!((v.lhs_f64() - 0.25995).abs() < 1e-4);
        assert_eq!(v.rhs, q(13, 50));
        let v = large_degree_threshold(12);
        assert!(!v.holds);
        assert!((v.lhs_f64() - 0.27424).abs() < 1e-4);
        assert!((v.rhs_f64() - 0.26087).abs() < 1e-4);
        assert!(!large_degree_threshold(1).holds);
    }
}
