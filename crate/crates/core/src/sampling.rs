//! Deterministic random rationals for identity testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, Rat};

pub type SampleRng = ChaCha8Rng;

/// Retry budget when rejecting degenerate samples.
pub const MAX_RETRIES: usize = 200;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for task `index` of a run seeded with `seed`.
pub fn substream(seed: u64, index: u64) -> SampleRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

/// Numerator in [−50, 50], denominator in [1, 20].
pub fn random_rat(rng: &mut impl Rng) -> Rat {
    rat(rng.gen_range(-50..=50), rng.gen_range(1..=20))
}

pub fn random_nonzero_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn random_vec(rng: &mut impl Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| random_rat(rng)).collect()
}

/// Draws from `f` until it succeeds, at most [`MAX_RETRIES`] times.
pub fn retry<T, E>(rng: &mut SampleRng, mut f: impl FnMut(&mut SampleRng) -> Result<T, E>) -> Option<T> {
    (0..MAX_RETRIES).find_map(|_| f(rng).ok())
}
