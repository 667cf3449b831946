//! Deterministic seeded samplers shared by the claim runners.

use ccx_core::symdisc::{sym, SymPoint};
use ccx_core::C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One RNG per (seed, stream) pair; streams keep independent sampling
/// tasks decoupled so adding samples to one claim never shifts
/// another.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform sample of the open disc of the given radius.
pub fn disc(rng: &mut ChaCha8Rng, radius: f64) -> C64 {
    let r = radius * rng.gen_range(0.0..1.0f64).sqrt();
    let theta = rng.gen_range(0.0..core::f64::consts::TAU);
    C64::from_polar(r, theta)
}

/// Pushforward sample of the open symmetrized polydisc: uniform roots
/// in the unit disc, symmetrized.
pub fn interior_point(rng: &mut ChaCha8Rng, n: usize) -> SymPoint {
    let mu: Vec<C64> = (0..n).map(|_| disc(rng, 1.0)).collect();
    sym(&mu).expect("dimension within bounds")
}

/// Exterior sample: an interior root tuple with one root rescaled to
/// modulus `1/u`, `u` uniform in `(0.3, 0.95)`, so the point leaves
/// the closed domain. Returns the point and the pushed root.
pub fn exterior_point(rng: &mut ChaCha8Rng, n: usize) -> (SymPoint, C64) {
    let mut mu: Vec<C64> = (0..n).map(|_| disc(rng, 1.0)).collect();
    let u = rng.gen_range(0.3..0.95f64);
    let modulus = mu[0].norm();
    mu[0] = if modulus > 1e-9 {
        mu[0] * (1.0 / (u * modulus))
    } else {
        C64::new(1.0 / u, 0.0)
    };
    (sym(&mu).expect("dimension within bounds"), mu[0])
}
