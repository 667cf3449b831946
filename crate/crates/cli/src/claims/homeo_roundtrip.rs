//! Round trip of the radial homeomorphism onto `C^n`: applying the map
//! and its closed-form inverse must reproduce interior samples within
//! `1e-8`.

use anyhow::ensure;
use ccx_core::symdisc::Membership;

use crate::report::ClaimReport;
use crate::{sampling, RunConfig};

pub const CLAIM: &str = "homeo-roundtrip";

const ERROR_BOUND: f64 = 1e-8;

pub fn run(cfg: &RunConfig, n: usize, samples: usize) -> anyhow::Result<ClaimReport> {
    ensure!(n >= 2, "--n must be at least 2");
    ensure!(samples >= 1, "--samples must be at least 1");
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    report.config_value("n", n as u64);
    report.config_value("samples", samples as u64);

    let mut rng = sampling::rng(cfg.seed, 0x6000);
    let mut max_error = 0.0f64;
    let mut checked = 0usize;
    while checked < samples {
        let z = sampling::interior_point(&mut rng, n);
        if z.membership(&tol) != Membership::Inside {
            continue;
        }
        checked += 1;
        let back = z
            .homeo(&tol)
            .and_then(|w| w.homeo_inv())
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        let err = z
            .coords()
            .iter()
            .zip(back.coords())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        max_error = max_error.max(err);
    }

    report.metric("samples", checked as f64);
    report.metric("max_roundtrip_error", max_error);
    report.pass = max_error <= ERROR_BOUND;
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
