//! Seeded random targets with Euler number zero.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::symbol::{FiberRatio, SeifertSymbol};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetParams {
    pub max_genus: u32,
    /// Ratios per symbol, including the closing one.
    pub max_ratios: usize,
    /// Largest `α` of every ratio, including the closing one.
    pub max_alpha: i64,
}

impl Default for TargetParams {
    fn default() -> Self {
        TargetParams { max_genus: 3, max_ratios: 5, max_alpha: 6 }
    }
}

fn random_ratio(rng: &mut ChaCha8Rng, max_alpha: i64) -> FiberRatio {
    loop {
        let alpha = rng.gen_range(2..=max_alpha);
        let beta = rng.gen_range(-alpha + 1..alpha);
        if beta != 0 && alpha.gcd(&beta) == 1 {
            return FiberRatio { alpha, beta };
        }
    }
}

/// One target: `t − 1` random ratios and a closing ratio making `e = 0`,
/// redrawn until the closing denominator is at most `max_alpha`.
pub fn random_target(rng: &mut ChaCha8Rng, params: &TargetParams) -> SeifertSymbol {
    let genus = rng.gen_range(0..=params.max_genus);
    let t = rng.gen_range(0..=params.max_ratios);
    if t == 0 {
        return SeifertSymbol::new(genus, vec![]);
    }
    loop {
        let mut ratios: Vec<FiberRatio> = (1..t).map(|_| random_ratio(rng, params.max_alpha)).collect();
        let sum = ratios.iter().fold(BigRational::zero(), |acc, r| acc + r.value());
        let closing = -sum;
        let alpha = closing.denom().to_i64().expect("small denominator");
        if alpha > params.max_alpha || closing.numer().abs() > 1_000.into() {
            continue;
        }
        let beta = closing.numer().to_i64().expect("small numerator");
        ratios.push(FiberRatio { alpha, beta });
        return SeifertSymbol::new(genus, ratios);
    }
}

/// `count` targets from `seed`; the same seed always gives the same list.
pub fn random_targets(seed: u64, count: usize, params: &TargetParams) -> Vec<SeifertSymbol> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_target(&mut rng, params)).collect()
}
