//! Duality suite over the catalog of balanced domains: support
//! homogeneity and subadditivity, convexity of the dual complement,
//! bidual fixed points for the convex instances, and the bidual gap
//! witness for the non-convex quasi-norm ball.

use ccx_core::duals::{convexity_probe, BalancedDomain, BidualVerdict, ProbeSide};
use ccx_core::C64;
use rand::Rng;

use crate::report::ClaimReport;
use crate::{sampling, RunConfig};

pub const CLAIM: &str = "dual-convexity";

const SEMINORM_SAMPLES: usize = 10_000;
const PROBE_SAMPLES: usize = 10_000;
const BIDUAL_SAMPLES: usize = 1_000;
const CROSS_CHECK_SAMPLES: usize = 50;

pub fn run(cfg: &RunConfig) -> anyhow::Result<ClaimReport> {
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    let mut pass = true;

    let catalog = [
        BalancedDomain::polydisc(2),
        BalancedDomain::euclidean_ball(2),
        BalancedDomain::p_quasiball(2, 0.5).map_err(|e| anyhow::anyhow!("{e}"))?,
    ];

    for (d_idx, domain) in catalog.iter().enumerate() {
        let mut rng = sampling::rng(cfg.seed, 0x7000 + d_idx as u64);
        let s = |v: &[C64]| -> anyhow::Result<f64> {
            Ok(domain.support(v).map_err(|e| anyhow::anyhow!("{e}"))?.s)
        };

        let mut seminorm_violations = 0usize;
        for _ in 0..SEMINORM_SAMPLES {
            let w = [sampling::disc(&mut rng, 2.0), sampling::disc(&mut rng, 2.0)];
            let v = [sampling::disc(&mut rng, 2.0), sampling::disc(&mut rng, 2.0)];
            let lambda = rng.gen_range(0.0..2.0f64);
            let t = rng.gen_range(0.0..1.0f64);
            let scaled = [w[0] * lambda, w[1] * lambda];
            if (s(&scaled)? - lambda * s(&w)?).abs() > 1e-8 * (1.0 + s(&w)?) {
                seminorm_violations += 1;
            }
            let mix = [w[0] * t + v[0] * (1.0 - t), w[1] * t + v[1] * (1.0 - t)];
            if s(&mix)? > t * s(&w)? + (1.0 - t) * s(&v)? + 1e-6 {
                seminorm_violations += 1;
            }
        }
        report.metric(
            &format!("{}_seminorm_violations", domain.tag()),
            seminorm_violations as f64,
        );
        pass &= seminorm_violations == 0;

        let probe = convexity_probe(domain, ProbeSide::Dual, PROBE_SAMPLES, cfg.seed)
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        report.metric(
            &format!("{}_dual_probe_violations", domain.tag()),
            probe.violations.len() as f64,
        );
        pass &= probe.violations.is_empty();

        let mut numeric_mismatch = 0usize;
        for i in 0..CROSS_CHECK_SAMPLES {
            let w = [sampling::disc(&mut rng, 2.0), sampling::disc(&mut rng, 2.0)];
            let exact = s(&w)?;
            let numeric = domain
                .support_numeric(&w, cfg.seed ^ i as u64)
                .map_err(|e| anyhow::anyhow!("{e}"))?
                .s;
            if (exact - numeric).abs() > 1e-6 * exact.max(1.0) {
                numeric_mismatch += 1;
            }
        }
        report.metric(
            &format!("{}_numeric_mismatches", domain.tag()),
            numeric_mismatch as f64,
        );
        pass &= numeric_mismatch == 0;
    }

    // Convex catalog instances reproduce themselves as a bidual
    // component: bidual membership matches the gauge verdict away from
    // the boundary band.
    for domain in &catalog[..2] {
        let mut rng = sampling::rng(cfg.seed, 0x7100);
        let mut mismatches = 0usize;
        let mut checked = 0usize;
        while checked < BIDUAL_SAMPLES {
            let z = [sampling::disc(&mut rng, 1.5), sampling::disc(&mut rng, 1.5)];
            let q = domain.minkowski(&z);
            if (q - 1.0).abs() <= 1e-6 {
                continue;
            }
            checked += 1;
            let verdict = domain
                .bidual_membership(&z, &tol)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            let expect = if q < 1.0 {
                BidualVerdict::InBidual
            } else {
                BidualVerdict::NotInBidual
            };
            if verdict != expect {
                mismatches += 1;
            }
        }
        report.metric(
            &format!("{}_bidual_mismatches", domain.tag()),
            mismatches as f64,
        );
        pass &= mismatches == 0;
    }

    // The quasi-norm ball sits strictly inside its bidual component:
    // the witness is in the bidual but far outside the domain, and the
    // gauge itself fails the convexity probe.
    let quasiball = &catalog[2];
    let witness = [C64::new(0.4, 0.0), C64::new(0.4, 0.0)];
    let in_bidual = quasiball
        .bidual_membership(&witness, &tol)
        .map_err(|e| anyhow::anyhow!("{e}"))?
        == BidualVerdict::InBidual;
    let gauge_value = quasiball.minkowski(&witness);
    report.metric("gap_witness_re", witness[0].re);
    report.metric("gap_witness_gauge", gauge_value);
    report.metric("gap_witness_in_bidual", in_bidual as u8 as f64);
    pass &= in_bidual && gauge_value > 1.0 + 0.1;

    let direct = convexity_probe(quasiball, ProbeSide::Domain, PROBE_SAMPLES, cfg.seed)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    report.metric(
        "p_quasiball_direct_violations",
        direct.violations.len() as f64,
    );
    pass &= !direct.violations.is_empty();

    report.pass = pass;
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
