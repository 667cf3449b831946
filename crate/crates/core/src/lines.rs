//! Affine complex lines and hyperplanes in `C^n`, the tangent-line and
//! slope-set constructions at boundary points of `G_2`, the Möbius
//! disc-image lemma, and the closed-form separating-hyperplane
//! certificate for exterior points of `G_n`.

use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::poly::PolyError;
use crate::symdisc::{Membership, SymPoint};
use crate::{C64, Tolerances};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineError {
    /// Two coincident points define no line.
    DegenerateLine,
    /// The tangent-line construction needs a unimodular root.
    NotUnimodular,
    /// The Möbius lemma requires the pole strictly outside the closed
    /// unit disc.
    BetaInsideDisc,
    /// A slope parameter must lie strictly inside the unit disc.
    OutsideDisc,
    /// Separating hyperplanes exist only for non-interior points.
    InsidePoint,
    Poly(PolyError),
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineError::DegenerateLine => write!(f, "coincident points define no line"),
            LineError::NotUnimodular => write!(f, "root modulus is not 1 within tolerance"),
            LineError::BetaInsideDisc => {
                write!(f, "Möbius pole must lie strictly outside the closed unit disc")
            }
            LineError::OutsideDisc => {
                write!(f, "parameter must lie strictly inside the unit disc")
            }
            LineError::InsidePoint => {
                write!(f, "no separating hyperplane through an interior point")
            }
            LineError::Poly(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LineError {}

impl From<PolyError> for LineError {
    fn from(e: PolyError) -> Self {
        LineError::Poly(e)
    }
}

/// Affine complex line `lambda -> base + lambda * dir`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexLine {
    base: Vec<C64>,
    dir: Vec<C64>,
}

impl ComplexLine {
    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[C64] {
        &self.base
    }

    pub fn dir(&self) -> &[C64] {
        &self.dir
    }

    pub fn at(&self, lambda: C64) -> Vec<C64> {
        self.base
            .iter()
            .zip(&self.dir)
            .map(|(&b, &d)| b + lambda * d)
            .collect()
    }

    /// Writes `base + lambda * dir` into `out` (raster hot path).
    pub fn at_into(&self, lambda: C64, out: &mut [C64]) {
        for ((o, &b), &d) in out.iter_mut().zip(&self.base).zip(&self.dir) {
            *o = b + lambda * d;
        }
    }
}

/// Affine complex hyperplane `{w : sum_k normal_k w_k = offset}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexHyperplane {
    normal: Vec<C64>,
    offset: C64,
}

impl ComplexHyperplane {
    pub fn new(normal: Vec<C64>, offset: C64) -> Option<Self> {
        let norm: f64 = normal.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if normal.is_empty() || norm <= 1e-12 {
            return None;
        }
        Some(ComplexHyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[C64] {
        &self.normal
    }

    pub fn offset(&self) -> C64 {
        self.offset
    }

    /// The defect `sum_k normal_k w_k - offset`.
    pub fn eval(&self, w: &[C64]) -> C64 {
        let mut acc = -self.offset;
        for (&c, &x) in self.normal.iter().zip(w) {
            acc += c * x;
        }
        acc
    }

    /// Incidence up to the relative plane tolerance.
    pub fn contains(&self, w: &[C64], tol: &Tolerances) -> bool {
        let cmax = self.normal.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let wmax = w.iter().map(|c| c.norm()).fold(0.0, f64::max);
        self.eval(w).norm() <= tol.plane * (1.0 + cmax * wmax)
    }

    /// Completes `n - 1` free coordinates to a point on the hyperplane
    /// by solving for the coordinate with the largest normal entry.
    pub fn complete(&self, free: &[C64]) -> Option<Vec<C64>> {
        let n = self.normal.len();
        if free.len() + 1 != n {
            return None;
        }
        let pivot = self
            .normal
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.norm().partial_cmp(&b.norm()).unwrap())
            .map(|(i, _)| i)?;
        let mut point = Vec::with_capacity(n);
        let mut it = free.iter();
        for i in 0..n {
            if i == pivot {
                point.push(C64::new(0.0, 0.0));
            } else {
                point.push(*it.next()?);
            }
        }
        let mut partial = -self.offset;
        for (i, &x) in point.iter().enumerate() {
            if i != pivot {
                partial += self.normal[i] * x;
            }
        }
        point[pivot] = -partial / self.normal[pivot];
        Some(point)
    }
}

/// Disc in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: C64,
    pub radius: f64,
    pub open: bool,
}

impl Disc {
    /// Containment with a signed slack: `margin > 0` shrinks the disc,
    /// `margin < 0` inflates it (useful for float-tolerant checks).
    pub fn contains_with_margin(&self, p: C64, margin: f64) -> bool {
        let d = (p - self.center).norm();
        if self.open {
            d < self.radius - margin
        } else {
            d <= self.radius - margin
        }
    }

    pub fn contains(&self, p: C64) -> bool {
        self.contains_with_margin(p, 0.0)
    }
}

/// Line through two distinct points: `base = p`, `dir = q - p`.
pub fn line_through(p: &[C64], q: &[C64]) -> Result<ComplexLine, LineError> {
    let dist: f64 = p
        .iter()
        .zip(q)
        .map(|(&a, &b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    if p.len() != q.len() || dist <= 1e-12 {
        return Err(LineError::DegenerateLine);
    }
    Ok(ComplexLine {
        base: p.to_vec(),
        dir: p.iter().zip(q).map(|(&a, &b)| b - a).collect(),
    })
}

/// The complex tangent line to the boundary of `G_2` at a regular
/// point with unimodular witness `mu_1`: the image of
/// `lambda -> pi_2(mu_1, lambda)`, i.e. base `(mu_1, 0)` and direction
/// `(1, mu_1)`. Every point of the line has `mu_1` as a witness root,
/// so the line misses `G_2`.
pub fn tangent_line_regular(mu1: C64, tol: &Tolerances) -> Result<ComplexLine, LineError> {
    if (mu1.norm() - 1.0).abs() > tol.boundary {
        return Err(LineError::NotUnimodular);
    }
    Ok(ComplexLine {
        base: alloc::vec![mu1, C64::new(0.0, 0.0)],
        dir: alloc::vec![C64::new(1.0, 0.0), mu1],
    })
}

/// Image of the open unit disc under `z -> (z - alpha)/(z - beta)` for
/// `|beta| > 1`: the open disc with center
/// `(1 - alpha conj(beta)) / (1 - |beta|^2)` and radius
/// `|alpha - beta| / (|beta|^2 - 1)`.
pub fn mobius_disc_image(alpha: C64, beta: C64, tol: &Tolerances) -> Result<Disc, LineError> {
    let b2 = beta.norm_sqr();
    if beta.norm() <= 1.0 + tol.boundary {
        return Err(LineError::BetaInsideDisc);
    }
    Ok(Disc {
        center: (C64::new(1.0, 0.0) - alpha * beta.conj()) / (1.0 - b2),
        radius: (alpha - beta).norm() / (b2 - 1.0),
        open: true,
    })
}

/// Slope of the line joining the non-regular boundary point with data
/// `x = Re mu_1` to the interior point `pi_2(lambda_1, lambda_2)`:
/// `(lambda_1 + lambda_2 - 2x) / (lambda_1 lambda_2 - 1)`.
pub fn bad_slope(lambda1: C64, lambda2: C64, x: f64, tol: &Tolerances) -> Result<C64, LineError> {
    if lambda1.norm() >= 1.0 - tol.boundary || lambda2.norm() >= 1.0 - tol.boundary {
        return Err(LineError::OutsideDisc);
    }
    let num = lambda1 + lambda2 - C64::new(2.0 * x, 0.0);
    let den = lambda1 * lambda2 - 1.0;
    Ok(num / den)
}

/// The disc swept by [`bad_slope`] as `lambda_2` ranges over the unit
/// disc, for fixed `lambda_1`:
/// center `(2x - 2 Re lambda_1) / (1 - |lambda_1|^2)`,
/// radius `|2x lambda_1 - lambda_1^2 - 1| / (1 - |lambda_1|^2)`.
pub fn slope_disc(lambda1: C64, x: f64, tol: &Tolerances) -> Result<Disc, LineError> {
    let n2 = lambda1.norm_sqr();
    if lambda1.norm() >= 1.0 - tol.boundary {
        return Err(LineError::OutsideDisc);
    }
    let denom = 1.0 - n2;
    Ok(Disc {
        center: C64::new((2.0 * x - 2.0 * lambda1.re) / denom, 0.0),
        radius: (lambda1 * (2.0 * x) - lambda1 * lambda1 - 1.0).norm() / denom,
        open: true,
    })
}

/// Separating-hyperplane certificate for a non-interior point `z`:
/// with `lambda_1` a maximal-modulus witness root of `z` (ties broken
/// by smallest argument), the hyperplane
///
/// ```text
/// { w : sum_k (-1)^k lambda_1^(n-k) w_k = -lambda_1^n }
/// ```
///
/// is exactly `{ w : p_w(lambda_1) = 0 }`: it contains `z`, and every
/// point on it has `lambda_1` as a witness root and hence stays out of
/// the open domain whenever `|lambda_1| >= 1`.
pub fn separating_hyperplane(
    z: &SymPoint,
    tol: &Tolerances,
) -> Result<ComplexHyperplane, LineError> {
    separating_hyperplane_with_witness(z, tol).map(|(h, _)| h)
}

/// Same as [`separating_hyperplane`], also returning the witness root
/// `lambda_1` so callers can check the root identity `p_w(lambda_1) = 0`
/// on hyperplane points directly.
pub fn separating_hyperplane_with_witness(
    z: &SymPoint,
    tol: &Tolerances,
) -> Result<(ComplexHyperplane, C64), LineError> {
    if z.membership(tol) == Membership::Inside {
        return Err(LineError::InsidePoint);
    }
    let roots = z.witness_roots().map_err(|e| match e {
        crate::symdisc::SymError::Poly(p) => LineError::Poly(p),
        _ => LineError::InsidePoint,
    })?;
    let lambda1 = roots
        .into_iter()
        .max_by(|a, b| {
            let arg = |c: &C64| {
                let t = c.arg();
                if t < 0.0 {
                    t + core::f64::consts::TAU
                } else {
                    t
                }
            };
            a.norm()
                .partial_cmp(&b.norm())
                .unwrap()
                // Deterministic tie-break: prefer the smaller argument.
                .then(arg(b).partial_cmp(&arg(a)).unwrap())
        })
        .expect("witness roots are nonempty");

    let n = z.dim();
    let mut normal = Vec::with_capacity(n);
    let mut sign = -1.0;
    for k in 1..=n {
        normal.push(lambda1.powi((n - k) as i32) * sign);
        sign = -sign;
    }
    let offset = -lambda1.powi(n as i32);
    let plane =
        ComplexHyperplane::new(normal, offset).expect("trailing normal entry is unimodular");
    Ok((plane, lambda1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symdisc::{membership_of, sym};

    const TOL: Tolerances = Tolerances::DEFAULT;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn line_through_counterexample_pair() {
        let (a, b) = crate::symdisc::counterexample_points(0.75, 3).unwrap();
        let line = line_through(a.coords(), b.coords()).unwrap();
        let want = [c(-4.5, 0.0), c(0.0, 0.0), c(-0.84375, 0.0)];
        for (got, want) in line.dir().iter().zip(want) {
            assert!((got - want).norm() < 1e-14);
        }
        assert_eq!(line.at(c(0.0, 0.0)), a.coords());
        assert_eq!(line.at(c(1.0, 0.0)), b.coords());
    }

    #[test]
    fn line_through_rejects_coincident_points() {
        let p = [c(1.0, 0.0), c(2.0, 0.0)];
        assert!(matches!(
            line_through(&p, &p),
            Err(LineError::DegenerateLine)
        ));
    }

    #[test]
    fn tangent_line_shape() {
        let line = tangent_line_regular(c(1.0, 0.0), &TOL).unwrap();
        assert_eq!(line.at(c(0.3, 0.0)), vec![c(1.3, 0.0), c(0.3, 0.0)]);
        let line = tangent_line_regular(c(0.0, 1.0), &TOL).unwrap();
        assert_eq!(line.at(c(2.0, 0.0)), vec![c(2.0, 1.0), c(0.0, 2.0)]);
        assert!(matches!(
            tangent_line_regular(c(0.9, 0.0), &TOL),
            Err(LineError::NotUnimodular)
        ));
    }

    #[test]
    fn tangent_line_misses_domain() {
        let mu1 = C64::from_polar(1.0, 2.1);
        let line = tangent_line_regular(mu1, &TOL).unwrap();
        for k in 0..1000 {
            let r = (k as f64 / 1000.0).sqrt() * 0.999;
            let theta = 2.399963229728653 * k as f64;
            let lambda = C64::from_polar(r, theta);
            let p = line.at(lambda);
            assert_ne!(membership_of(&p, &TOL), Membership::Inside);
        }
    }

    #[test]
    fn mobius_disc_exact_case() {
        let disc = mobius_disc_image(c(0.0, 0.0), c(2.0, 0.0), &TOL).unwrap();
        assert!((disc.center - c(-1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((disc.radius - 2.0 / 3.0).abs() < 1e-15);
        assert!(disc.open);
    }

    #[test]
    fn mobius_disc_near_degenerate() {
        let disc = mobius_disc_image(c(1.9, 0.0), c(2.0, 0.0), &TOL).unwrap();
        assert!((disc.center - c(14.0 / 15.0, 0.0)).norm() < 1e-12);
        assert!((disc.radius - 0.1 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn mobius_disc_contains_samples() {
        let alpha = c(0.4, -0.7);
        let beta = c(1.6, 0.9);
        let disc = mobius_disc_image(alpha, beta, &TOL).unwrap();
        for k in 0..1000 {
            let r = ((k % 37) as f64 / 37.0).sqrt() * 0.9999;
            let theta = 2.399963229728653 * k as f64;
            let z = C64::from_polar(r, theta);
            let image = (z - alpha) / (z - beta);
            assert!(
                disc.contains_with_margin(image, -1e-12),
                "image {image} escapes {disc:?}"
            );
        }
        assert!(matches!(
            mobius_disc_image(alpha, c(0.5, 0.5), &TOL),
            Err(LineError::BetaInsideDisc)
        ));
    }

    #[test]
    fn bad_slope_values() {
        assert_eq!(
            bad_slope(c(0.0, 0.0), c(0.0, 0.0), 0.0, &TOL).unwrap(),
            c(0.0, 0.0)
        );
        assert!(
            (bad_slope(c(0.0, 0.0), c(0.5, 0.0), 0.5, &TOL).unwrap() - c(0.5, 0.0)).norm()
                < 1e-15
        );
        assert!(matches!(
            bad_slope(c(1.0, 0.0), c(0.0, 0.0), 0.0, &TOL),
            Err(LineError::OutsideDisc)
        ));
    }

    #[test]
    fn slope_disc_values() {
        let d = slope_disc(c(0.0, 0.0), 0.5, &TOL).unwrap();
        assert_eq!(d.center, c(1.0, 0.0));
        assert_eq!(d.radius, 1.0);

        let d = slope_disc(c(0.0, 0.0), 0.0, &TOL).unwrap();
        assert_eq!(d.center, c(0.0, 0.0));
        assert_eq!(d.radius, 1.0);

        let d = slope_disc(c(0.5, 0.0), 1.0, &TOL).unwrap();
        assert!((d.center - c(4.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((d.radius - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn slope_samples_stay_in_disc() {
        let lambda1 = c(0.5, 0.0);
        let disc = slope_disc(lambda1, 1.0, &TOL).unwrap();
        for k in 0..2000 {
            let r = ((k % 53) as f64 / 53.0).sqrt() * 0.999;
            let theta = 2.399963229728653 * k as f64;
            let lambda2 = C64::from_polar(r, theta);
            let s = bad_slope(lambda1, lambda2, 1.0, &TOL).unwrap();
            assert!(disc.contains_with_margin(s, -1e-9));
        }
    }

    #[test]
    fn hyperplane_example_dimension_two() {
        let z = sym(&[c(1.5, 0.0), c(0.2, 0.0)]).unwrap();
        let h = separating_hyperplane(&z, &TOL).unwrap();
        // lambda_1 = 1.5: { -1.5 w_1 + w_2 = -2.25 }.
        assert!((h.normal()[0] - c(-1.5, 0.0)).norm() < 1e-9);
        assert!((h.normal()[1] - c(1.0, 0.0)).norm() < 1e-9);
        assert!((h.offset() - c(-2.25, 0.0)).norm() < 1e-9);
        assert!(h.contains(z.coords(), &TOL));
        // The whole curve pi_2(1.5, mu) stays on the hyperplane.
        for k in 0..20 {
            let mu = C64::from_polar(0.7, 0.3 * k as f64);
            let w = sym(&[c(1.5, 0.0), mu]).unwrap();
            assert!(h.contains(w.coords(), &TOL));
        }
    }

    #[test]
    fn hyperplane_example_dimension_three() {
        let z = SymPoint::new(vec![c(3.0, 0.0), c(3.0, 0.0), c(1.0, 0.0)]).unwrap();
        let h = separating_hyperplane(&z, &TOL).unwrap();
        // The witness root of the triple-root polynomial carries
        // cluster-level accuracy only.
        let want = [c(-1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)];
        for (got, want) in h.normal().iter().zip(want) {
            assert!((got - want).norm() < 2e-3, "normal {got} vs {want}");
        }
        assert!((h.offset() - c(-1.0, 0.0)).norm() < 2e-3);
        assert!(h.contains(z.coords(), &TOL));
    }

    #[test]
    fn hyperplane_rejects_interior_points() {
        let z = SymPoint::new(vec![c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(
            separating_hyperplane(&z, &TOL),
            Err(LineError::InsidePoint)
        ));
    }

    #[test]
    fn hyperplane_membership_tests() {
        let h = ComplexHyperplane::new(vec![c(1.0, 0.0), c(0.0, 0.0)], c(0.0, 0.0)).unwrap();
        assert!(h.contains(&[c(0.0, 0.0), c(5.0, 0.0)], &TOL));
        assert!(!h.contains(&[c(1.0, 0.0), c(0.0, 0.0)], &TOL));
    }

    #[test]
    fn hyperplane_completion_solves_incidence() {
        let z = sym(&[c(1.8, 0.3), c(-0.4, 0.1), c(0.2, -0.6)]).unwrap();
        let h = separating_hyperplane(&z, &TOL).unwrap();
        let w = h.complete(&[c(0.7, -0.2), c(-1.1, 0.5)]).unwrap();
        assert!(h.contains(&w, &TOL));
        assert_ne!(membership_of(&w, &TOL), Membership::Inside);
    }
}
