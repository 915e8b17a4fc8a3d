//! Random test inputs whose closures exist.
//!
//! Weights are drawn from small exact sets (integers, dyadic fractions,
//! tenths of the max-min range) so that different algorithms can be
//! compared bit for bit over idempotent instances.

use rand::Rng;

use crate::interval::{Interval, IntervalSemiring};
use crate::matrix::Matrix;
use crate::semiring::{Boolean, MaxMin, MaxPlus, MaxTimes, MinPlus, Real, Semiring};

/// Probability that a generated entry is the zero element.
const SPARSITY: f64 = 0.3;

/// Instances able to draw arc weights such that every `n × n` matrix of
/// them has a closure.
pub trait RandomWeights: Semiring {
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Self::Elem;
}

impl RandomWeights for Real {
    /// Row sums stay below 0.9, so the spectral radius does too.
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> f64 {
        if rng.gen_bool(SPARSITY) {
            0.0
        } else {
            rng.gen_range(0.0..0.9 / n.max(1) as f64)
        }
    }
}

impl RandomWeights for MaxPlus {
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, _n: usize) -> f64 {
        if rng.gen_bool(SPARSITY) {
            f64::NEG_INFINITY
        } else {
            f64::from(rng.gen_range(-9..=0))
        }
    }
}

impl RandomWeights for MinPlus {
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, _n: usize) -> f64 {
        if rng.gen_bool(SPARSITY) {
            f64::INFINITY
        } else {
            f64::from(rng.gen_range(0..=9))
        }
    }
}

impl RandomWeights for MaxTimes {
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, _n: usize) -> f64 {
        if rng.gen_bool(SPARSITY) {
            0.0
        } else {
            f64::from(rng.gen_range(1..=4)) / 4.0
        }
    }
}

impl RandomWeights for MaxMin {
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, _n: usize) -> f64 {
        let (lo, hi) = self.bounds();
        if rng.gen_bool(SPARSITY) {
            lo
        } else {
            lo + (hi - lo) * f64::from(rng.gen_range(0..=10)) / 10.0
        }
    }
}

impl RandomWeights for Boolean {
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, _n: usize) -> bool {
        rng.gen_bool(0.5)
    }
}

impl<S: RandomWeights> RandomWeights for IntervalSemiring<S> {
    /// Two independent base weights, ordered.
    fn random_weight<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Interval<S::Elem> {
        let x = self.base().random_weight(rng, n);
        let y = self.base().random_weight(rng, n);
        let (lo, hi) = if self.base().leq(&x, &y) { (x, y) } else { (y, x) };
        self.interval(lo, hi).expect("ordered bounds")
    }
}

pub fn random_matrix<S: RandomWeights, R: Rng + ?Sized>(s: &S, rng: &mut R, n: usize) -> Matrix<S::Elem> {
    let data = (0..n * n).map(|_| s.random_weight(rng, n)).collect();
    Matrix::from_vec(n, n, data).expect("n * n entries")
}

pub fn random_vector<S: RandomWeights, R: Rng + ?Sized>(s: &S, rng: &mut R, n: usize) -> Vec<S::Elem> {
    (0..n).map(|_| s.random_weight(rng, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::star_gauss_jordan;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn closes<S: RandomWeights>(s: &S) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            for _ in 0..50 {
                let a = random_matrix(s, &mut rng, n);
                assert!(star_gauss_jordan(s, &a).is_ok(), "{} {a:?}", s.name());
            }
        }
    }

    #[test]
    fn generated_matrices_have_closures() {
        closes(&Real::nonneg());
        closes(&MaxPlus::new());
        closes(&MinPlus::new());
        closes(&MaxTimes);
        closes(&MaxMin::new(-2.0, 3.0).unwrap());
        closes(&Boolean);
        closes(&IntervalSemiring::new(MinPlus::new()));
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let s = MinPlus::new();
        let a = random_matrix(&s, &mut ChaCha8Rng::seed_from_u64(1), 5);
        let b = random_matrix(&s, &mut ChaCha8Rng::seed_from_u64(1), 5);
        assert_eq!(a, b);
    }
}
