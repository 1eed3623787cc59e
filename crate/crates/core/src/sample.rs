//! Seeded random exact values for property checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bundle_calculus::Qpc;
use crate::scalar::ExactC;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in `[-9, 9]` and denominator in `[1, 6]`.
pub fn rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=6)))
}

pub fn scalar(rng: &mut impl Rng) -> ExactC {
    ExactC::new(rational(rng), rational(rng))
}

pub fn qpc(rng: &mut impl Rng) -> Qpc<ExactC> {
    Qpc::new(scalar(rng), scalar(rng))
}

/// Exact point of the unit circle, `((1−s²) + 2si)/(1+s²)` for rational `s`.
pub fn unit_modulus(rng: &mut impl Rng) -> ExactC {
    ExactC::unit_circle(rational(rng))
}
