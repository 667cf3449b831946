//! Starlikeness dichotomy: in dimension two every interior point's
//! whole segment to the origin stays interior; from dimension three on
//! the segment search near the triple-root corner must exhibit an
//! exterior gap.

use anyhow::ensure;
use ccx_core::symdisc::{sym, Membership};
use ccx_core::C64;

use crate::report::ClaimReport;
use crate::{sampling, RunConfig};

/// Claim id prefix; the ambient dimension is appended since the two
/// sides of the dichotomy are separate claims.
pub const CLAIM_PREFIX: &str = "starlike";

const SEGMENT_GRID_DIM2: usize = 101;
const SEGMENT_GRID_HIGH: usize = 201;
const WITNESS_RADII: [f64; 3] = [0.9, 0.99, 0.999];

pub fn run(cfg: &RunConfig, n: usize, samples: usize) -> anyhow::Result<ClaimReport> {
    ensure!(n >= 2, "--n must be at least 2");
    ensure!(samples >= 1, "--samples must be at least 1");
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(&format!("{CLAIM_PREFIX}-n{n}"), cfg);
    report.config_value("n", n as u64);
    report.config_value("samples", samples as u64);

    if n == 2 {
        let mut rng = sampling::rng(cfg.seed, 0x5000);
        let mut violations = 0usize;
        let mut checked = 0usize;
        while checked < samples {
            let z = sampling::interior_point(&mut rng, 2);
            if z.membership(&tol) != Membership::Inside {
                continue;
            }
            checked += 1;
            let profile = z
                .starlike_profile(SEGMENT_GRID_DIM2, &tol)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            if profile.iter().any(|m| *m == Membership::Outside) {
                violations += 1;
            }
        }
        report.metric("samples", checked as f64);
        report.metric("violations", violations as f64);
        report.pass = violations == 0;
    } else {
        // Probe segments toward the corner point (3, 3, 1, 0, ...): a
        // violation (exterior point on the segment of an interior
        // point) refutes starlikeness.
        let mut witness: Option<(f64, f64)> = None;
        for &r in &WITNESS_RADII {
            let mut mu = vec![C64::new(0.0, 0.0); n];
            for slot in mu.iter_mut().take(3) {
                *slot = C64::new(r, 0.0);
            }
            let z = sym(&mu).map_err(|e| anyhow::anyhow!("{e}"))?;
            if z.membership(&tol) != Membership::Inside {
                continue;
            }
            let profile = z
                .starlike_profile(SEGMENT_GRID_HIGH, &tol)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let gap = profile
                .iter()
                .enumerate()
                .find(|(_, m)| **m == Membership::Outside)
                .map(|(k, _)| k as f64 / (SEGMENT_GRID_HIGH - 1) as f64);
            if let Some(s) = gap {
                witness = Some((r, s));
                break;
            }
        }
        match witness {
            Some((r, s)) => {
                report.metric("witness_r", r);
                report.metric("witness_s", s);
                report.pass = true;
            }
            None => report.pass = false,
        }
    }

    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
