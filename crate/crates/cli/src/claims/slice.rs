//! Generic slice inspector: rasterize the symmetrized polydisc along
//! an arbitrary complex line and report the raster topology without
//! asserting anything. Features thinner than one raster cell can be
//! misreported; rerun at higher resolution when in doubt.

use anyhow::ensure;
use ccx_core::lines::line_through;
use ccx_core::raster::{analyze, rasterize, slice_window};
use ccx_core::symdisc::{membership_of, Membership};
use ccx_core::C64;

use crate::report::ClaimReport;
use crate::RunConfig;

pub const CLAIM: &str = "slice";

pub fn run(cfg: &RunConfig, n: usize, base: &[C64], dir: &[C64]) -> anyhow::Result<ClaimReport> {
    ensure!(n >= 2, "--n must be at least 2");
    ensure!(
        base.len() == n && dir.len() == n,
        "--base and --dir must carry exactly n components"
    );
    let through: Vec<C64> = base.iter().zip(dir).map(|(&b, &d)| b + d).collect();
    let line = line_through(base, &through)
        .map_err(|e| anyhow::anyhow!("invalid line: {e}"))?;
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    report.config_value("n", n as u64);
    report.config_value(
        "base",
        serde_json::Value::Array(
            base.iter().flat_map(|c| [c.re, c.im]).map(serde_json::Value::from).collect(),
        ),
    );
    report.config_value(
        "dir",
        serde_json::Value::Array(
            dir.iter().flat_map(|c| [c.re, c.im]).map(serde_json::Value::from).collect(),
        ),
    );

    let window = slice_window(&line, n)?;
    let grid = rasterize(
        |lambda| {
            let mut buf = [C64::new(0.0, 0.0); ccx_core::MAX_DEGREE];
            let buf = &mut buf[..n];
            line.at_into(lambda, buf);
            membership_of(buf, &tol) == Membership::Inside
        },
        window,
        cfg.resolution,
        cfg.resolution,
    )?;
    let topo = analyze(&grid);
    super::emit_images(cfg, &mut report, &grid, &topo, "slice")?;

    report.metric("components", topo.component_count as f64);
    report.metric("holes", topo.hole_count as f64);
    report.metric("occupancy", grid.occupancy());
    report.pass = true;
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
