//! The symmetrized polydisc `G_n = pi_n(D^n)`: the symmetrization map,
//! membership, boundary classification in dimension two, the radial
//! homeomorphism onto `C^n`, and the explicit line constructions used
//! by the slice experiments.
//!
//! A point `z = (z_1, ..., z_n)` is identified with the monic
//! polynomial `p_z(w) = w^n - z_1 w^(n-1) + z_2 w^(n-2) - ...` whose
//! Vieta coefficients are the coordinates with alternating signs;
//! `z` lies in `G_n` exactly when all roots of `p_z` lie in the open
//! unit disc.

use alloc::vec::Vec;
use arrayvec::ArrayVec;
use core::fmt;

use crate::poly::{MonicPolynomial, PolyError};
use crate::schur::{self, RootLocationVerdict};
use crate::{C64, Tolerances, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymError {
    /// Operation needs a different dimension than the point carries.
    DimensionMismatch { expected: usize, got: usize },
    /// A scalar parameter is outside its admissible range.
    ParameterOutOfRange,
    /// A root modulus sits exactly on a classification band edge;
    /// tighten the boundary tolerance and retry.
    AmbiguousBoundary,
    /// The radial homeomorphism is only defined on the open domain.
    NotInDomain,
    Poly(PolyError),
}

impl fmt::Display for SymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            SymError::ParameterOutOfRange => write!(f, "parameter outside admissible range"),
            SymError::AmbiguousBoundary => {
                write!(f, "root modulus sits exactly on a band edge")
            }
            SymError::NotInDomain => {
                write!(f, "point is not in the open symmetrized polydisc")
            }
            SymError::Poly(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SymError {}

impl From<PolyError> for SymError {
    fn from(e: PolyError) -> Self {
        SymError::Poly(e)
    }
}

/// Tri-state membership in the open domain `G_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

impl From<RootLocationVerdict> for Membership {
    fn from(v: RootLocationVerdict) -> Self {
        match v {
            RootLocationVerdict::AllInsideOpenDisc => Membership::Inside,
            RootLocationVerdict::SomeOnUnitCircleWithinTolerance => Membership::Boundary,
            RootLocationVerdict::SomeOutsideClosedDisc => Membership::Outside,
        }
    }
}

/// Classification of a point of `C^2` relative to the boundary of
/// `G_2`, with root witnesses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryClass {
    Interior,
    /// Exactly one root modulus on the unit circle, the other strictly
    /// inside.
    Regular { unimodular: C64, inner: C64 },
    /// Both root moduli on the unit circle.
    NonRegular { first: C64, second: C64 },
    Exterior,
}

/// A point of `C^n` in symmetrized coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPoint {
    coords: Vec<C64>,
}

impl SymPoint {
    pub fn new(coords: Vec<C64>) -> Result<Self, SymError> {
        if coords.is_empty() || coords.len() > MAX_DEGREE {
            return Err(SymError::DimensionMismatch {
                expected: MAX_DEGREE,
                got: coords.len(),
            });
        }
        Ok(SymPoint { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[C64] {
        &self.coords
    }

    /// The monic polynomial whose Vieta coefficients carry the
    /// coordinates: `c_k = (-1)^k z_k`.
    pub fn associated_poly(&self) -> MonicPolynomial {
        let coeffs = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, &z)| if i % 2 == 0 { -z } else { z })
            .collect();
        MonicPolynomial::new(coeffs).expect("dimension checked at construction")
    }

    /// Roots of the associated polynomial.
    pub fn witness_roots(&self) -> Result<Vec<C64>, SymError> {
        Ok(self.associated_poly().roots()?)
    }

    pub fn membership(&self, tol: &Tolerances) -> Membership {
        membership_of(&self.coords, tol)
    }

    /// Largest witness-root modulus; `< 1` exactly on `G_n`.
    pub fn h(&self) -> Result<f64, SymError> {
        Ok(self.associated_poly().max_root_modulus()?)
    }

    /// The radial gauge `1 / (1 - h)`.
    pub fn g(&self) -> Result<f64, SymError> {
        Ok(1.0 / (1.0 - self.h()?))
    }

    /// Root-weighted scaling: coordinate `k` is multiplied by
    /// `lambda^k`, which on symmetrized points corresponds to scaling
    /// every witness root by `lambda`.
    pub fn rho(&self, lambda: C64) -> SymPoint {
        let mut factor = C64::new(1.0, 0.0);
        let coords = self
            .coords
            .iter()
            .map(|&z| {
                factor *= lambda;
                z * factor
            })
            .collect();
        SymPoint { coords }
    }

    /// Plain scalar scaling `s * z` (coordinate-wise, no root weights).
    pub fn scaled(&self, s: f64) -> SymPoint {
        SymPoint {
            coords: self.coords.iter().map(|&z| z * s).collect(),
        }
    }

    /// The homeomorphism `G_n -> C^n`: `rho_{g(z)}(z)`.
    pub fn homeo(&self, tol: &Tolerances) -> Result<SymPoint, SymError> {
        let h = self.h()?;
        if h >= 1.0 - tol.boundary {
            return Err(SymError::NotInDomain);
        }
        Ok(self.rho(C64::new(1.0 / (1.0 - h), 0.0)))
    }

    /// Closed-form inverse of [`SymPoint::homeo`], defined on all of
    /// `C^n`: `rho_{1/(1+h(w))}(w)`. Follows from the homogeneity
    /// `h(rho_lambda(z)) = |lambda| h(z)`.
    pub fn homeo_inv(&self) -> Result<SymPoint, SymError> {
        let h = self.h()?;
        Ok(self.rho(C64::new(1.0 / (1.0 + h), 0.0)))
    }

    /// Membership verdicts along the segment `s * z`, `s = k/(m-1)`.
    pub fn starlike_profile(
        &self,
        m: usize,
        tol: &Tolerances,
    ) -> Result<Vec<Membership>, SymError> {
        if m < 2 {
            return Err(SymError::ParameterOutOfRange);
        }
        Ok((0..m)
            .map(|k| self.scaled(k as f64 / (m - 1) as f64).membership(tol))
            .collect())
    }

    /// Classifies a point of `C^2` against the boundary of `G_2` by
    /// counting witness-root moduli inside the boundary band.
    pub fn classify_boundary_g2(&self, tol: &Tolerances) -> Result<BoundaryClass, SymError> {
        if self.dim() != 2 {
            return Err(SymError::DimensionMismatch {
                expected: 2,
                got: self.dim(),
            });
        }
        let roots = self.witness_roots()?;
        for &r in &roots {
            if ((r.norm() - 1.0).abs() - tol.boundary).abs() == 0.0 {
                return Err(SymError::AmbiguousBoundary);
            }
        }
        let on = |r: C64| (r.norm() - 1.0).abs() <= tol.boundary;
        let inside = |r: C64| r.norm() < 1.0 - tol.boundary;
        match (on(roots[0]), on(roots[1])) {
            (true, true) => Ok(BoundaryClass::NonRegular {
                first: roots[0],
                second: roots[1],
            }),
            (true, false) if inside(roots[1]) => Ok(BoundaryClass::Regular {
                unimodular: roots[0],
                inner: roots[1],
            }),
            (false, true) if inside(roots[0]) => Ok(BoundaryClass::Regular {
                unimodular: roots[1],
                inner: roots[0],
            }),
            _ if inside(roots[0]) && inside(roots[1]) => Ok(BoundaryClass::Interior),
            _ => Ok(BoundaryClass::Exterior),
        }
    }
}

/// Elementary symmetric functions of `mu`, by the incremental product
/// recurrence (expanding `prod_j (w - mu_j)` and flipping Vieta signs).
pub fn sym(mu: &[C64]) -> Result<SymPoint, SymError> {
    if mu.is_empty() || mu.len() > MAX_DEGREE {
        return Err(SymError::DimensionMismatch {
            expected: MAX_DEGREE,
            got: mu.len(),
        });
    }
    let mut e: Vec<C64> = Vec::with_capacity(mu.len());
    for &m in mu {
        e.push(C64::new(0.0, 0.0));
        for k in (0..e.len()).rev() {
            let lower = if k == 0 { C64::new(1.0, 0.0) } else { e[k - 1] };
            e[k] += m * lower;
        }
    }
    Ok(SymPoint { coords: e })
}

/// Allocation-free membership test on a coordinate slice; this is the
/// raster hot path.
pub fn membership_of(coords: &[C64], tol: &Tolerances) -> Membership {
    let mut coeffs: ArrayVec<C64, MAX_DEGREE> = ArrayVec::new();
    for (i, &z) in coords.iter().enumerate() {
        coeffs.push(if i % 2 == 0 { -z } else { z });
    }
    schur::unit_disc_location(&coeffs, tol).verdict.into()
}

/// The pair `a_t = pi_n(t,t,t,0,..) = (3t, 3t^2, t^3, 0, ..., 0)` and
/// its mirror `b_t` with odd coordinates negated; both interior points
/// of `G_n` for `t` in `(0, 1)`.
pub fn counterexample_points(t: f64, n: usize) -> Result<(SymPoint, SymPoint), SymError> {
    if !(0.0 < t && t < 1.0) {
        return Err(SymError::ParameterOutOfRange);
    }
    if !(3..=MAX_DEGREE).contains(&n) {
        return Err(SymError::DimensionMismatch { expected: 3, got: n });
    }
    let mut a = alloc::vec![C64::new(0.0, 0.0); n];
    let mut b = alloc::vec![C64::new(0.0, 0.0); n];
    a[0] = C64::new(3.0 * t, 0.0);
    a[1] = C64::new(3.0 * t * t, 0.0);
    a[2] = C64::new(t * t * t, 0.0);
    b[0] = -a[0];
    b[1] = a[1];
    b[2] = -a[2];
    Ok((SymPoint { coords: a }, SymPoint { coords: b }))
}

/// Parameterization of the complex line through `a_t` and `b_t`:
/// `c_{t,lambda} = (3t(1-2lambda), 3t^2, t^3(1-2lambda), 0, ..., 0)`,
/// with `c_{t,0} = a_t` and `c_{t,1} = b_t`.
pub fn c_t_lambda(t: f64, lambda: C64, n: usize) -> Result<SymPoint, SymError> {
    if !(0.0 < t && t < 1.0) {
        return Err(SymError::ParameterOutOfRange);
    }
    if !(3..=MAX_DEGREE).contains(&n) {
        return Err(SymError::DimensionMismatch { expected: 3, got: n });
    }
    let shift = C64::new(1.0, 0.0) - lambda * 2.0;
    let mut coords = alloc::vec![C64::new(0.0, 0.0); n];
    coords[0] = shift * (3.0 * t);
    coords[1] = C64::new(3.0 * t * t, 0.0);
    coords[2] = shift * (t * t * t);
    Ok(SymPoint { coords })
}

/// Verdict for a point on the midline `Re lambda = 1/2` of the
/// `a_t`/`b_t` line, together with the closed-form exclusion: such a
/// point can only lie in `G_n` when `t^2 < 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MidlineVerdict {
    pub membership: Membership,
    /// True when `t^2 >= 1/2`, in which case membership can never be
    /// `Inside` for any `tau`.
    pub analytically_excluded: bool,
}

/// Membership of `c_{t, 1/2 + i tau}` plus the analytic bound.
pub fn midline_exclusion(
    t: f64,
    tau: f64,
    n: usize,
    tol: &Tolerances,
) -> Result<MidlineVerdict, SymError> {
    let point = c_t_lambda(t, C64::new(0.5, tau), n)?;
    Ok(MidlineVerdict {
        membership: point.membership(tol),
        analytically_excluded: t * t >= 0.5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerances = Tolerances::DEFAULT;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn reals(values: &[f64]) -> Vec<C64> {
        values.iter().map(|&v| c(v, 0.0)).collect()
    }

    #[test]
    fn sym_of_triple() {
        let z = sym(&reals(&[0.75, 0.75, 0.75])).unwrap();
        let want = [2.25, 1.6875, 0.421875];
        for (got, want) in z.coords().iter().zip(want) {
            assert!((got - c(want, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn sym_fixed_points() {
        assert_eq!(
            sym(&reals(&[0.0, 0.0, 0.0])).unwrap().coords(),
            reals(&[0.0, 0.0, 0.0]).as_slice()
        );
        let z = sym(&reals(&[1.0, 1.0, 1.0])).unwrap();
        for (got, want) in z.coords().iter().zip([3.0, 3.0, 1.0]) {
            assert!((got - c(want, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn membership_examples() {
        let origin = SymPoint::new(reals(&[0.0, 0.0])).unwrap();
        assert_eq!(origin.membership(&TOL), Membership::Inside);

        let out = SymPoint::new(reals(&[2.5, 1.0])).unwrap();
        assert_eq!(out.membership(&TOL), Membership::Outside);

        let corner = SymPoint::new(reals(&[3.0, 3.0, 1.0])).unwrap();
        assert_eq!(corner.membership(&TOL), Membership::Boundary);
    }

    #[test]
    fn classify_regular_point() {
        let z = sym(&reals(&[1.0, 0.5])).unwrap();
        match z.classify_boundary_g2(&TOL).unwrap() {
            BoundaryClass::Regular { unimodular, inner } => {
                assert!((unimodular - c(1.0, 0.0)).norm() < 1e-8);
                assert!((inner - c(0.5, 0.0)).norm() < 1e-8);
            }
            other => panic!("expected regular point, got {other:?}"),
        }
    }

    #[test]
    fn classify_nonregular_point() {
        // Conjugate pair on the circle: pi_2 = (1, 1).
        let z = SymPoint::new(reals(&[1.0, 1.0])).unwrap();
        match z.classify_boundary_g2(&TOL).unwrap() {
            BoundaryClass::NonRegular { first, second } => {
                assert!((first.norm() - 1.0).abs() < 1e-10);
                assert!((second.norm() - 1.0).abs() < 1e-10);
                // pi_2 consistency of the witnesses.
                assert!((first + second - c(1.0, 0.0)).norm() < 1e-8);
                assert!((first * second - c(1.0, 0.0)).norm() < 1e-8);
            }
            other => panic!("expected non-regular point, got {other:?}"),
        }
    }

    #[test]
    fn classify_interior_and_exterior() {
        let origin = SymPoint::new(reals(&[0.0, 0.0])).unwrap();
        assert_eq!(
            origin.classify_boundary_g2(&TOL).unwrap(),
            BoundaryClass::Interior
        );
        let out = SymPoint::new(reals(&[2.5, 1.0])).unwrap();
        assert_eq!(
            out.classify_boundary_g2(&TOL).unwrap(),
            BoundaryClass::Exterior
        );
    }

    #[test]
    fn rho_identity_and_zero() {
        let z = SymPoint::new(vec![c(0.3, 0.1), c(-0.2, 0.4), c(0.05, 0.0)]).unwrap();
        assert_eq!(z.rho(c(1.0, 0.0)), z);
        for w in z.rho(c(0.0, 0.0)).coords() {
            assert_eq!(*w, c(0.0, 0.0));
        }
    }

    #[test]
    fn homeo_explicit_values() {
        let zero = SymPoint::new(reals(&[0.0, 0.0, 0.0])).unwrap();
        assert_eq!(zero.h().unwrap(), 0.0);
        assert_eq!(zero.g().unwrap(), 1.0);
        assert_eq!(zero.homeo(&TOL).unwrap(), zero);

        let z = sym(&reals(&[0.5, 0.0])).unwrap();
        assert!((z.h().unwrap() - 0.5).abs() < 1e-12);
        assert!((z.g().unwrap() - 2.0).abs() < 1e-12);
        let image = z.homeo(&TOL).unwrap();
        assert!((image.coords()[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!(image.coords()[1].norm() < 1e-12);
        let back = image.homeo_inv().unwrap();
        assert!((back.coords()[0] - c(0.5, 0.0)).norm() < 1e-10);
        assert!(back.coords()[1].norm() < 1e-10);
    }

    #[test]
    fn homeo_rejects_boundary() {
        let corner = SymPoint::new(reals(&[3.0, 3.0, 1.0])).unwrap();
        assert!(matches!(corner.homeo(&TOL), Err(SymError::NotInDomain)));
    }

    #[test]
    fn starlike_profile_at_origin() {
        let z = SymPoint::new(reals(&[0.0, 0.0])).unwrap();
        let profile = z.starlike_profile(11, &TOL).unwrap();
        assert!(profile.iter().all(|m| *m == Membership::Inside));
    }

    #[test]
    fn starlike_gap_in_dimension_three() {
        // The segment to sym(0.995, 0.995, 0.995) leaves G_3.
        let z = sym(&reals(&[0.995, 0.995, 0.995])).unwrap();
        let profile = z.starlike_profile(201, &TOL).unwrap();
        assert_eq!(*profile.last().unwrap(), Membership::Inside);
        assert!(
            profile[1..200].iter().any(|m| *m == Membership::Outside),
            "expected an exterior gap along the segment"
        );
    }

    #[test]
    fn counterexample_point_values() {
        let (a, b) = counterexample_points(0.75, 3).unwrap();
        for (got, want) in a.coords().iter().zip([2.25, 1.6875, 0.421875]) {
            assert!((got - c(want, 0.0)).norm() < 1e-14);
        }
        for (got, want) in b.coords().iter().zip([-2.25, 1.6875, -0.421875]) {
            assert!((got - c(want, 0.0)).norm() < 1e-14);
        }
        assert_eq!(a.membership(&TOL), Membership::Inside);
        assert_eq!(b.membership(&TOL), Membership::Inside);
    }

    #[test]
    fn line_parameterization_endpoints() {
        let (a, b) = counterexample_points(0.6, 4).unwrap();
        let at0 = c_t_lambda(0.6, c(0.0, 0.0), 4).unwrap();
        let at1 = c_t_lambda(0.6, c(1.0, 0.0), 4).unwrap();
        assert_eq!(at0, a);
        assert_eq!(at1, b);
    }

    #[test]
    fn midline_point_value() {
        // lambda = 1/2 + 0.3 i, t = 0.75: (-6 i tau t, 3 t^2, -2 i tau t^3, 0...).
        let p = c_t_lambda(0.75, c(0.5, 0.3), 3).unwrap();
        let tau = 0.3;
        let t: f64 = 0.75;
        assert!((p.coords()[0] - c(0.0, -6.0 * tau * t)).norm() < 1e-14);
        assert!((p.coords()[1] - c(3.0 * t * t, 0.0)).norm() < 1e-14);
        assert!((p.coords()[2] - c(0.0, -2.0 * tau * t.powi(3))).norm() < 1e-14);
    }

    #[test]
    fn midline_exclusion_above_threshold() {
        for tau in [0.0, 0.5, -0.5, 2.0, -2.0] {
            let v = midline_exclusion(0.8, tau, 3, &TOL).unwrap();
            assert!(v.analytically_excluded);
            assert_eq!(v.membership, Membership::Outside);
        }
        let v = midline_exclusion(0.71, 0.0, 3, &TOL).unwrap();
        assert!(v.analytically_excluded);
        assert_eq!(v.membership, Membership::Outside);
    }

    #[test]
    fn midline_small_t_recorded_verdict() {
        // Below the exclusion threshold the oracle decides; for
        // t = 0.3, tau = 0 the midline point is (0, 0.27, 0) with roots
        // {0, +-i sqrt(0.27)}, all inside.
        let v = midline_exclusion(0.3, 0.0, 3, &TOL).unwrap();
        assert!(!v.analytically_excluded);
        assert_eq!(v.membership, Membership::Inside);
    }
}
