//! Separating-hyperplane certificates for random exterior points: the
//! certificate hyperplane must contain the point, every sampled
//! hyperplane point must carry the witness root (up to scaled
//! residual), and no sampled hyperplane point may be interior.

use anyhow::ensure;
use ccx_core::lines::separating_hyperplane_with_witness;
use ccx_core::symdisc::{membership_of, Membership, SymPoint};
use ccx_core::C64;

use crate::report::ClaimReport;
use crate::{sampling, RunConfig};

pub const CLAIM: &str = "linconvex-certify";

/// Hyperplane points checked per certificate.
const POINTS_PER_CERTIFICATE: usize = 100;

/// Residual bound for the root identity, relative to the coefficient
/// scale of the hyperplane point's polynomial.
const RESIDUAL_BOUND: f64 = 1e-9;

pub fn run(cfg: &RunConfig, n: usize, samples: usize) -> anyhow::Result<ClaimReport> {
    ensure!(n >= 2, "--n must be at least 2");
    ensure!(samples >= 1, "--samples must be at least 1");
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    report.config_value("n", n as u64);
    report.config_value("samples", samples as u64);

    let mut failures = 0usize;
    let mut worst_residual = 0.0f64;

    for index in 0..samples {
        let mut rng = sampling::rng(cfg.seed, 0x3000 + index as u64);
        let (z, _) = sampling::exterior_point(&mut rng, n);
        let (plane, witness) = separating_hyperplane_with_witness(&z, &tol)
            .map_err(|e| anyhow::anyhow!("certificate failed: {e}"))?;
        let mut ok = plane.contains(z.coords(), &tol);
        for _ in 0..POINTS_PER_CERTIFICATE {
            let free: Vec<C64> = (0..n - 1).map(|_| sampling::disc(&mut rng, 2.0)).collect();
            let w = plane
                .complete(&free)
                .ok_or_else(|| anyhow::anyhow!("hyperplane completion failed"))?;
            if !plane.contains(&w, &tol) {
                ok = false;
                continue;
            }
            let poly = SymPoint::new(w.clone())
                .map_err(|e| anyhow::anyhow!("{e}"))?
                .associated_poly();
            let residual = poly.eval(witness).norm();
            worst_residual = worst_residual.max(residual / poly.scale());
            if residual > RESIDUAL_BOUND * poly.scale() {
                ok = false;
            }
            if membership_of(&w, &tol) == Membership::Inside {
                ok = false;
            }
        }
        if !ok {
            failures += 1;
        }
    }

    report.metric("samples", samples as f64);
    report.metric("points_per_certificate", POINTS_PER_CERTIFICATE as f64);
    report.metric("failures", failures as f64);
    report.metric("worst_scaled_residual", worst_residual);
    report.pass = failures == 0;
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
