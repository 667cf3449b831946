//! Monic complex polynomials: evaluation, construction from roots, and
//! an Aberth–Ehrlich simultaneous root solver.
//!
//! A degree-`n` polynomial is stored as the `n` trailing coefficients
//! `c_1..c_n` of `p(w) = w^n + c_1 w^(n-1) + ... + c_n`; the leading
//! coefficient is implicitly one. Exact zero roots (trailing zero
//! coefficients) are deflated before iterating, so polynomials such as
//! `w^n` or `w^2 - w` come back with exact root values.

use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::schur::{self, RootLocation};
use crate::{C64, Tolerances, MAX_DEGREE};

/// Iteration cap for one Aberth–Ehrlich attempt.
const MAX_ITERATIONS: usize = 200;

/// Phase offsets for the initial-guess circle, one per restart attempt.
const RESTART_PHASES: [f64; 3] = [0.45, 1.27, 2.61];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Degree zero or above [`MAX_DEGREE`].
    UnsupportedDegree(usize),
    /// The simultaneous iteration did not reach the residual target
    /// within the iteration cap; the input is ill-conditioned. Retry
    /// with perturbed coefficients if approximate roots are acceptable.
    NonConvergence,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::UnsupportedDegree(n) => {
                write!(f, "unsupported polynomial degree {n} (must be 1..={MAX_DEGREE})")
            }
            PolyError::NonConvergence => {
                write!(f, "root iteration failed to converge within the iteration cap")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PolyError {}

/// Monic polynomial `w^n + c_1 w^(n-1) + ... + c_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicPolynomial {
    coeffs: Vec<C64>,
}

impl MonicPolynomial {
    /// Builds the polynomial from its trailing coefficients `c_1..c_n`.
    pub fn new(coeffs: Vec<C64>) -> Result<Self, PolyError> {
        let n = coeffs.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PolyError::UnsupportedDegree(n));
        }
        Ok(MonicPolynomial { coeffs })
    }

    /// Expands `prod_j (w - r_j)` by the incremental product recurrence.
    pub fn from_roots(roots: &[C64]) -> Result<Self, PolyError> {
        let n = roots.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PolyError::UnsupportedDegree(n));
        }
        let mut coeffs: Vec<C64> = Vec::with_capacity(n);
        for &r in roots {
            coeffs.push(C64::new(0.0, 0.0));
            for k in (0..coeffs.len()).rev() {
                let lower = if k == 0 {
                    C64::new(1.0, 0.0)
                } else {
                    coeffs[k - 1]
                };
                coeffs[k] = coeffs[k] - r * lower;
            }
        }
        Ok(MonicPolynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Trailing coefficients `c_1..c_n`.
    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// `max(1, max_k |c_k|)` — the scale used by residual bounds.
    pub fn scale(&self) -> f64 {
        let mut s = 1.0_f64;
        for c in &self.coeffs {
            s = s.max(c.norm());
        }
        s
    }

    /// Horner evaluation.
    pub fn eval(&self, w: C64) -> C64 {
        let mut acc = C64::new(1.0, 0.0);
        for &c in &self.coeffs {
            acc = acc * w + c;
        }
        acc
    }

    /// Horner evaluation of the polynomial and its derivative.
    pub fn eval_with_derivative(&self, w: C64) -> (C64, C64) {
        let mut acc = C64::new(1.0, 0.0);
        let mut der = C64::new(0.0, 0.0);
        for &c in &self.coeffs {
            der = der * w + acc;
            acc = acc * w + c;
        }
        (acc, der)
    }

    /// All `n` roots with multiplicity, in no particular order.
    ///
    /// Exact zero roots are deflated first; the rest come from the
    /// Aberth–Ehrlich iteration, restarted with a rotated initial
    /// circle if a pass stalls. Residuals of returned roots satisfy
    /// `|p(r)| <= residual_tol * scale(p)` on the deflated factor.
    pub fn roots(&self) -> Result<Vec<C64>, PolyError> {
        self.roots_with(&Tolerances::DEFAULT)
    }

    pub fn roots_with(&self, tol: &Tolerances) -> Result<Vec<C64>, PolyError> {
        let mut work: &[C64] = &self.coeffs;
        let mut zeros = 0usize;
        while let Some(last) = work.last() {
            if last.re == 0.0 && last.im == 0.0 {
                zeros += 1;
                work = &work[..work.len() - 1];
            } else {
                break;
            }
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.resize(zeros, C64::new(0.0, 0.0));
        if !work.is_empty() {
            out.extend(aberth_ehrlich(work, tol)?);
        }
        Ok(out)
    }

    /// Largest root modulus.
    pub fn max_root_modulus(&self) -> Result<f64, PolyError> {
        let roots = self.roots()?;
        Ok(roots.iter().fold(0.0_f64, |m, r| m.max(r.norm())))
    }

    /// Tri-state unit-disc location of the root set, decided by the
    /// reflection recursion without computing roots.
    pub fn root_location(&self, tol: &Tolerances) -> RootLocation {
        schur::unit_disc_location(&self.coeffs, tol)
    }
}

/// Aberth–Ehrlich on a deflated coefficient slice (nonzero constant
/// term guaranteed by the caller).
fn aberth_ehrlich(coeffs: &[C64], tol: &Tolerances) -> Result<Vec<C64>, PolyError> {
    let n = coeffs.len();
    if n == 1 {
        return Ok(alloc::vec![-coeffs[0]]);
    }

    let poly = MonicPolynomial {
        coeffs: coeffs.to_vec(),
    };
    let target = tol.residual * poly.scale();

    // Initial guesses on a circle comfortably containing the roots.
    let mut radius = 0.0_f64;
    for (k, c) in coeffs.iter().enumerate() {
        radius = radius.max(c.norm().powf(1.0 / (k as f64 + 1.0)));
    }
    radius += 1.0;

    let mut values = alloc::vec![C64::new(0.0, 0.0); n];
    for &phase in &RESTART_PHASES {
        let mut guesses: Vec<C64> = (0..n)
            .map(|j| {
                let theta = core::f64::consts::TAU * j as f64 / n as f64 + phase;
                C64::new(radius * theta.cos(), radius * theta.sin())
            })
            .collect();

        for _ in 0..MAX_ITERATIONS {
            let mut worst = 0.0_f64;
            let mut derivs = alloc::vec![C64::new(0.0, 0.0); n];
            for (j, &w) in guesses.iter().enumerate() {
                let (p, dp) = poly.eval_with_derivative(w);
                values[j] = p;
                derivs[j] = dp;
                worst = worst.max(p.norm());
            }
            if worst <= target {
                return Ok(guesses);
            }

            for j in 0..n {
                if values[j].norm() <= target {
                    continue;
                }
                let dp = derivs[j];
                if dp.norm() < f64::MIN_POSITIVE {
                    // Stationary point: nudge instead of dividing.
                    guesses[j] += C64::new(1e-8 * radius, 1e-8 * radius);
                    continue;
                }
                let newton = values[j] / dp;
                let mut repulsion = C64::new(0.0, 0.0);
                for k in 0..n {
                    if k != j {
                        let d = guesses[j] - guesses[k];
                        if d.norm() < 1e-300 {
                            continue;
                        }
                        repulsion += C64::new(1.0, 0.0) / d;
                    }
                }
                let denom = C64::new(1.0, 0.0) - newton * repulsion;
                let step = if denom.norm() < 1e-300 {
                    newton
                } else {
                    newton / denom
                };
                guesses[j] -= step;
                // Keep iterates finite even from a pathological step.
                if !guesses[j].re.is_finite() || !guesses[j].im.is_finite() {
                    guesses[j] = C64::new(radius * 0.5, -radius * 0.5);
                }
            }
        }
        let worst = guesses.iter().map(|&w| poly.eval(w).norm()).fold(0.0, f64::max);
        if worst <= target {
            return Ok(guesses);
        }
    }
    Err(PolyError::NonConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sorted_by_re(mut roots: Vec<C64>) -> Vec<C64> {
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        roots
    }

    #[test]
    fn eval_known_root() {
        // w^2 - 2.5 w + 1 vanishes at 2.
        let p = MonicPolynomial::new(vec![c(-2.5, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(p.eval(c(2.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn eval_pure_power_at_origin() {
        let p = MonicPolynomial::new(vec![c(0.0, 0.0); 5]).unwrap();
        assert_eq!(p.eval(c(0.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn eval_triple_root() {
        // (w - 1)^3
        let p =
            MonicPolynomial::new(vec![c(-3.0, 0.0), c(3.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(p.eval(c(1.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn roots_reciprocal_pair() {
        let p = MonicPolynomial::new(vec![c(-2.5, 0.0), c(1.0, 0.0)]).unwrap();
        let roots = sorted_by_re(p.roots().unwrap());
        assert!((roots[0] - c(0.5, 0.0)).norm() < 1e-10);
        assert!((roots[1] - c(2.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn roots_triple_cluster() {
        let p =
            MonicPolynomial::new(vec![c(-3.0, 0.0), c(3.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let roots = p.roots().unwrap();
        // Cluster accuracy only: residual 1e-12 bounds the cluster
        // radius of a triple root by ~1.5e-4.
        for r in roots {
            assert!((r - c(1.0, 0.0)).norm() < 1e-3);
        }
    }

    #[test]
    fn roots_deflate_exact_zeros() {
        let p = MonicPolynomial::new(vec![c(0.0, 0.0); 6]).unwrap();
        assert_eq!(p.roots().unwrap(), vec![c(0.0, 0.0); 6]);
        assert_eq!(p.max_root_modulus().unwrap(), 0.0);

        let p = MonicPolynomial::new(vec![c(-1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let roots = sorted_by_re(p.roots().unwrap());
        assert_eq!(roots[0], c(0.0, 0.0));
        assert!((roots[1] - c(1.0, 0.0)).norm() < 1e-12);
        assert!((p.max_root_modulus().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn max_root_modulus_examples() {
        let p = MonicPolynomial::new(vec![c(-2.5, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((p.max_root_modulus().unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn from_roots_round_trip() {
        let truth = vec![c(0.3, -0.4), c(-1.2, 0.9), c(1.7, 0.1), c(0.0, 1.5)];
        let p = MonicPolynomial::from_roots(&truth).unwrap();
        let mut got = p.roots().unwrap();
        for t in &truth {
            let (idx, _) = got
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    (**a - t).norm().partial_cmp(&(**b - t).norm()).unwrap()
                })
                .unwrap();
            let r = got.swap_remove(idx);
            assert!((r - t).norm() < 1e-8, "root {t} recovered as {r}");
        }
    }

    #[test]
    fn residual_bound_holds() {
        let p = MonicPolynomial::new(vec![c(1.3, -0.2), c(-0.4, 2.1), c(0.9, 0.7)]).unwrap();
        for r in p.roots().unwrap() {
            assert!(p.eval(r).norm() <= 1e-8 * p.scale());
        }
    }

    #[test]
    fn degree_bounds_rejected() {
        assert!(matches!(
            MonicPolynomial::new(vec![]),
            Err(PolyError::UnsupportedDegree(0))
        ));
        assert!(MonicPolynomial::new(vec![c(0.0, 0.0); 17]).is_err());
    }
}
