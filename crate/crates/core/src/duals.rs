//! Balanced domains, their dual complements, and biduals.
//!
//! A balanced domain `D = { z : q(z) < 1 }` is described by its
//! Minkowski functional `q` with `q(lambda z) = |lambda| q(z)`. The
//! dual complement is `D* = { w : <z, w> != 1 for all z in D }` under
//! the bilinear pairing `<z, w> = sum_k z_k w_k`; for balanced open `D`
//! the pairing image over `D` is the open disc of radius
//! `s(w) = sup_{z in D} |<z, w>|`, so `D* = { s <= 1 }`. The bidual
//! uses the strict inequality because `D*` is closed.
//!
//! Catalog instances carry closed-form support functionals; the
//! numeric path (coarse direction sampling plus multi-start pattern
//! ascent) serves custom functionals and cross-validates the closed
//! forms.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{C64, Tolerances};

/// Number of refinement starts for the numeric support path.
const ASCENT_STARTS: usize = 32;
/// Coarse direction samples feeding the starts.
const COARSE_SAMPLES: usize = 512;
/// Independent direction samples used to cross-check refinement.
const CHECK_SAMPLES: usize = 4096;
/// Pattern-search step floor.
const ASCENT_STEP_FLOOR: f64 = 1e-8;
/// Allowed shortfall of the refined value against the dense check.
const CHECK_SLACK: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub enum DualError {
    DimensionMismatch { expected: usize, got: usize },
    /// Quasi-norm exponent outside `(0, 1)`.
    InvalidExponent(f64),
    /// The refinement stalled measurably below the dense sample
    /// estimate; the functional is too irregular for the ascent.
    NumericalFailure,
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            DualError::InvalidExponent(p) => {
                write!(f, "quasi-norm exponent {p} outside (0, 1)")
            }
            DualError::NumericalFailure => {
                write!(f, "support refinement disagrees with dense sampling")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DualError {}

/// Minkowski functional of a custom balanced domain.
pub type Gauge = Arc<dyn Fn(&[C64]) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Polydisc,
    EuclideanBall,
    PQuasiball(f64),
    Custom(Gauge),
}

impl fmt::Debug for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Polydisc => write!(f, "Polydisc"),
            Kind::EuclideanBall => write!(f, "EuclideanBall"),
            Kind::PQuasiball(p) => write!(f, "PQuasiball({p})"),
            Kind::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// Open balanced domain `{ q < 1 }` in `C^n`.
#[derive(Debug, Clone)]
pub struct BalancedDomain {
    dim: usize,
    kind: Kind,
}

/// Tri-state membership in the (closed) dual complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualVerdict {
    InDual,
    Boundary,
    NotInDual,
}

/// Tri-state membership in the (open) bidual component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BidualVerdict {
    InBidual,
    Boundary,
    NotInBidual,
}

/// Value of the support functional at `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportValue {
    pub w: Vec<C64>,
    pub s: f64,
    /// Whether the supremum is attained; always false over the open
    /// domain, kept for closed-set duals.
    pub attained: bool,
}

impl BalancedDomain {
    pub fn polydisc(dim: usize) -> BalancedDomain {
        BalancedDomain {
            dim,
            kind: Kind::Polydisc,
        }
    }

    pub fn euclidean_ball(dim: usize) -> BalancedDomain {
        BalancedDomain {
            dim,
            kind: Kind::EuclideanBall,
        }
    }

    /// `q(z) = (sum |z_k|^p)^(1/p)` with `0 < p < 1` (a quasi-norm; the
    /// domain is balanced but not convex).
    pub fn p_quasiball(dim: usize, p: f64) -> Result<BalancedDomain, DualError> {
        if !(0.0 < p && p < 1.0) {
            return Err(DualError::InvalidExponent(p));
        }
        Ok(BalancedDomain {
            dim,
            kind: Kind::PQuasiball(p),
        })
    }

    pub fn custom(dim: usize, gauge: Gauge) -> BalancedDomain {
        BalancedDomain {
            dim,
            kind: Kind::Custom(gauge),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Catalog tag, for reports.
    pub fn tag(&self) -> &'static str {
        match self.kind {
            Kind::Polydisc => "polydisc",
            Kind::EuclideanBall => "euclidean_ball",
            Kind::PQuasiball(_) => "p_quasiball",
            Kind::Custom(_) => "custom",
        }
    }

    /// The Minkowski functional.
    pub fn minkowski(&self, z: &[C64]) -> f64 {
        match &self.kind {
            Kind::Polydisc => z.iter().map(|c| c.norm()).fold(0.0, f64::max),
            Kind::EuclideanBall => z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt(),
            Kind::PQuasiball(p) => z
                .iter()
                .map(|c| c.norm().powf(*p))
                .sum::<f64>()
                .powf(1.0 / p),
            Kind::Custom(q) => q(z),
        }
    }

    pub fn contains(&self, z: &[C64]) -> bool {
        self.minkowski(z) < 1.0
    }

    /// Support functional `s(w) = sup_{q(z) < 1} |<z, w>|`.
    ///
    /// Closed forms for the catalog: polydisc `sum |w_k|`, Euclidean
    /// ball `||w||_2`, p-quasiball `max |w_k|` (its closed convex hull
    /// is the `l1` ball). Custom gauges go through the numeric path.
    pub fn support(&self, w: &[C64]) -> Result<SupportValue, DualError> {
        self.check_dim(w)?;
        let s = match &self.kind {
            Kind::Polydisc => w.iter().map(|c| c.norm()).sum::<f64>(),
            Kind::EuclideanBall => w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt(),
            Kind::PQuasiball(_) => w.iter().map(|c| c.norm()).fold(0.0, f64::max),
            Kind::Custom(_) => self.support_numeric(w, 0)?.s,
        };
        Ok(SupportValue {
            w: w.to_vec(),
            s,
            attained: false,
        })
    }

    /// Numeric support value by coarse sphere sampling plus multi-start
    /// pattern ascent, cross-checked against an independent dense
    /// sample. Deterministic for a fixed seed.
    pub fn support_numeric(&self, w: &[C64], seed: u64) -> Result<SupportValue, DualError> {
        self.check_dim(w)?;
        let gauge = |z: &[C64]| self.minkowski(z);
        let s = maximize_pairing_ratio(&gauge, w, seed)?;
        Ok(SupportValue {
            w: w.to_vec(),
            s,
            attained: false,
        })
    }

    /// Membership of `w` in `D* = { s <= 1 }`, with the boundary band.
    pub fn dual_membership(&self, w: &[C64], tol: &Tolerances) -> Result<DualVerdict, DualError> {
        let s = self.support(w)?.s;
        Ok(if s < 1.0 - tol.boundary {
            DualVerdict::InDual
        } else if s > 1.0 + tol.boundary {
            DualVerdict::NotInDual
        } else {
            DualVerdict::Boundary
        })
    }

    /// Support functional of the dual body: `s**(z) = sup { |<z, w>| :
    /// s(w) <= 1 }`. Catalog duals are again catalog bodies (the dual
    /// of the polydisc is the `l1` ball, the ball is self-dual, the
    /// dual of the p-quasiball is the closed polydisc).
    pub fn dual_support(&self, z: &[C64]) -> Result<f64, DualError> {
        self.check_dim(z)?;
        match &self.kind {
            Kind::Polydisc => Ok(z.iter().map(|c| c.norm()).fold(0.0, f64::max)),
            Kind::EuclideanBall => Ok(z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()),
            Kind::PQuasiball(_) => Ok(z.iter().map(|c| c.norm()).sum::<f64>()),
            Kind::Custom(_) => {
                let dual_gauge = |w: &[C64]| match self.support(w) {
                    Ok(v) => v.s,
                    Err(_) => f64::INFINITY,
                };
                maximize_pairing_ratio(&dual_gauge, z, 1)
            }
        }
    }

    /// Membership of `z` in `D**` (strict inequality: `D*` is closed,
    /// so the pairing image over it attains its radius).
    pub fn bidual_membership(
        &self,
        z: &[C64],
        tol: &Tolerances,
    ) -> Result<BidualVerdict, DualError> {
        let s = self.dual_support(z)?;
        Ok(if s < 1.0 - tol.boundary {
            BidualVerdict::InBidual
        } else if s > 1.0 + tol.boundary {
            BidualVerdict::NotInBidual
        } else {
            BidualVerdict::Boundary
        })
    }

    fn check_dim(&self, v: &[C64]) -> Result<(), DualError> {
        if v.len() != self.dim {
            return Err(DualError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// Bilinear pairing `sum_k z_k w_k` (no conjugation, the convention
/// matching hyperplane duality).
pub fn pairing(z: &[C64], w: &[C64]) -> C64 {
    z.iter().zip(w).map(|(&a, &b)| a * b).sum()
}

/// Maximizes `|<u, w>| / gauge(u)` over directions `u`; both numerator
/// and denominator are positively homogeneous of degree one, so the
/// ratio only depends on the direction.
fn maximize_pairing_ratio(
    gauge: &dyn Fn(&[C64]) -> f64,
    w: &[C64],
    seed: u64,
) -> Result<f64, DualError> {
    let n = w.len();
    if w.iter().all(|c| c.norm() == 0.0) {
        return Ok(0.0);
    }
    let ratio = |u: &[C64]| -> f64 {
        let g = gauge(u);
        if !(g > 1e-300) || !g.is_finite() {
            return f64::NEG_INFINITY;
        }
        pairing(u, w).norm() / g
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xD1B54A32D192ED03);
    fn sample_into(rng: &mut ChaCha8Rng, buf: &mut [C64]) {
        loop {
            for c in buf.iter_mut() {
                *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
            let norm: f64 = buf.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.1 {
                for c in buf.iter_mut() {
                    *c /= norm;
                }
                return;
            }
        }
    }
    fn normalize(u: &mut [C64]) {
        let norm: f64 = u.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            for c in u.iter_mut() {
                *c /= norm;
            }
        }
    }

    let mut probe = alloc::vec![C64::new(0.0, 0.0); n];
    let mut coarse: Vec<(f64, Vec<C64>)> = (0..COARSE_SAMPLES)
        .map(|_| {
            sample_into(&mut rng, &mut probe);
            (ratio(&probe), probe.clone())
        })
        .collect();
    // Axis directions join the pool: max-type and quasi-norm gauges
    // attain their support there exactly.
    for k in 0..n {
        let mut axis = alloc::vec![C64::new(0.0, 0.0); n];
        axis[k] = C64::new(1.0, 0.0);
        coarse.push((ratio(&axis), axis));
    }
    coarse.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());

    let mut cand = alloc::vec![C64::new(0.0, 0.0); n];
    let mut dir = alloc::vec![C64::new(0.0, 0.0); n];
    let mut best = coarse[0].0;
    for (value, start) in coarse.into_iter().take(ASCENT_STARTS) {
        if !value.is_finite() {
            continue;
        }
        let mut u = start;
        let mut current = value;
        let mut step = 0.25;
        // The ratio is scale-invariant, so iterates stay on the unit
        // sphere; the eval budget bounds ridge-crawling. Probes cover
        // additive axes, per-coordinate phase rotations and modulus
        // scalings (these ride the tie ridges of max-type gauges),
        // and a few random directions as a fallback. An accepted move
        // is repeated while it keeps paying off, so the crawls toward
        // the steep axis maximizers of quasi-norm gauges take
        // logarithmic rather than linear time.
        let mut evals = 0usize;
        while step >= ASCENT_STEP_FLOOR && evals < 5_000 {
            let mut improved = false;
            'probe: for i in 0..6 * n {
                for sign in [1.0, -1.0] {
                    let coord = (i / 2) % n;
                    let apply = |src: &[C64], cand: &mut Vec<C64>, dir: &[C64]| {
                        cand.copy_from_slice(src);
                        match i / (2 * n) {
                            // Polar probes first: modulus scalings and
                            // phase rotations do the productive work on
                            // ridge-shaped objectives.
                            0 => {
                                if i % 2 == 0 {
                                    cand[coord] *= 1.0 + sign * step * 0.5;
                                } else {
                                    cand[coord] *= C64::from_polar(1.0, sign * step);
                                }
                            }
                            1 => {
                                if i % 2 == 0 {
                                    cand[coord].re += sign * step;
                                } else {
                                    cand[coord].im += sign * step;
                                }
                            }
                            _ => {
                                for (c, d) in cand.iter_mut().zip(dir) {
                                    *c += d * (sign * step);
                                }
                            }
                        }
                        normalize(cand);
                    };
                    if i >= 4 * n {
                        sample_into(&mut rng, &mut dir);
                    }
                    apply(&u, &mut cand, &dir);
                    let v = ratio(&cand);
                    evals += 1;
                    // Sufficient-increase rule: crumb-sized gains do
                    // not count, so steps halve promptly.
                    let margin = |base: f64| 1e-3 * step * step * base.abs().max(1.0);
                    if v > current + margin(current) {
                        core::mem::swap(&mut u, &mut cand);
                        current = v;
                        improved = true;
                        for _ in 0..200 {
                            apply(&u, &mut cand, &dir);
                            let v = ratio(&cand);
                            evals += 1;
                            if v > current + margin(current) {
                                core::mem::swap(&mut u, &mut cand);
                                current = v;
                            } else {
                                break;
                            }
                        }
                        break 'probe;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        best = best.max(current);
    }

    let mut check = 0.0_f64;
    for _ in 0..CHECK_SAMPLES {
        sample_into(&mut rng, &mut probe);
        let v = ratio(&probe);
        if v.is_finite() {
            check = check.max(v);
        }
    }
    if best + CHECK_SLACK * check.max(1.0) < check {
        return Err(DualError::NumericalFailure);
    }
    Ok(best.max(check))
}

/// One convexity violation found by [`convexity_probe`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityViolation {
    pub a: Vec<C64>,
    pub b: Vec<C64>,
    pub t: f64,
    /// Functional value at the combination (must be <= 1 for convex
    /// bodies since both endpoints satisfy the functional bound).
    pub value: f64,
}

/// Result of a random convexity probe.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityReport {
    pub samples: usize,
    pub violations: Vec<ConvexityViolation>,
}

/// What [`convexity_probe`] probes: the domain gauge itself or the
/// support functional of its dual complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeSide {
    Domain,
    Dual,
}

/// Samples pairs with functional value at most one and random interior
/// combination weights, reporting every combination whose functional
/// value exceeds `1 + 1e-6`. Empty for convex bodies; the dual of any
/// balanced domain must come back empty.
///
/// Sampling is biased toward the boundary and includes pure-axis
/// directions, where non-convex gauges violate most visibly.
pub fn convexity_probe(
    domain: &BalancedDomain,
    side: ProbeSide,
    samples: usize,
    seed: u64,
) -> Result<ConvexityReport, DualError> {
    let n = domain.dim();
    let f = |v: &[C64]| -> Result<f64, DualError> {
        match side {
            ProbeSide::Domain => Ok(domain.minkowski(v)),
            ProbeSide::Dual => Ok(domain.support(v)?.s),
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA0761D6478BD642F);
    let mut violations = Vec::new();
    for _ in 0..samples {
        let mut pair = [Vec::new(), Vec::new()];
        for slot in &mut pair {
            let axis_only = rng.gen_range(0..4u8) == 0;
            let keep = rng.gen_range(0..n);
            let u: Vec<C64> = (0..n)
                .map(|k| {
                    let c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    if axis_only && k != keep {
                        C64::new(0.0, 0.0)
                    } else {
                        c
                    }
                })
                .collect();
            let fv = f(&u)?;
            let boundary_bias = 1.0 - rng.gen_range(0.0..1.0f64).powi(2);
            let scale = if fv > 1e-300 { boundary_bias / fv } else { 0.0 };
            *slot = u.iter().map(|&c| c * scale).collect();
        }
        let t = rng.gen_range(0.001..0.999);
        let mix: Vec<C64> = pair[0]
            .iter()
            .zip(&pair[1])
            .map(|(&a, &b)| a * t + b * (1.0 - t))
            .collect();
        let value = f(&mix)?;
        if value > 1.0 + 1e-6 {
            violations.push(ConvexityViolation {
                a: pair[0].clone(),
                b: pair[1].clone(),
                t,
                value,
            });
        }
    }
    Ok(ConvexityReport {
        samples,
        violations,
    })
}
