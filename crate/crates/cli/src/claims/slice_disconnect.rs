//! Slices of higher symmetrized polydiscs along the line through the
//! mirror pair `a_t`, `b_t`: for `t >= 1/sqrt(2)` the raster must show
//! at least two components with the pair separated, and the midline of
//! the slice must stay exterior on the whole tau grid.
//!
//! Near `t = 1` the interior pockets around the pair shrink like the
//! cube of the distance to the boundary and drop below one raster
//! cell, so the two cells holding the marked points are seeded from
//! their exact membership verdicts before labeling; the marked points
//! are interior by construction, and disconnection above the threshold
//! is independently certified by the midline exclusion.

use std::fmt::Write as _;

use anyhow::ensure;
use ccx_core::lines::line_through;
use ccx_core::raster::{analyze, component_of, rasterize, slice_window};
use ccx_core::symdisc::{counterexample_points, membership_of, midline_exclusion, Membership};
use ccx_core::C64;

use crate::report::ClaimReport;
use crate::RunConfig;

pub const CLAIM: &str = "slice-disconnect";

const DISCONNECT_THRESHOLD: f64 = core::f64::consts::FRAC_1_SQRT_2;
const TAU_GRID: usize = 101;
const TAU_SPAN: f64 = 5.0;

#[derive(Debug, Clone, Copy)]
struct Row {
    t: f64,
    components: u32,
    holes: u32,
    separated: bool,
    midline_inside: usize,
}

pub fn run(cfg: &RunConfig, n: usize, ts: &[f64]) -> anyhow::Result<ClaimReport> {
    ensure!(n >= 3, "--n must be at least 3");
    ensure!(!ts.is_empty(), "--t needs at least one value");
    for &t in ts {
        ensure!(0.0 < t && t < 1.0, "--t values must lie in (0, 1)");
    }
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    report.config_value("n", n as u64);
    report.config_value(
        "t",
        serde_json::Value::Array(ts.iter().map(|&t| serde_json::Value::from(t)).collect()),
    );

    let mut rows = Vec::with_capacity(ts.len());
    let mut failures = 0usize;

    for (index, &t) in ts.iter().enumerate() {
        let (a, b) = counterexample_points(t, n).map_err(|e| anyhow::anyhow!("{e}"))?;
        let line = line_through(a.coords(), b.coords())?;
        let window = slice_window(&line, n)?;

        let mut row = Row {
            t,
            components: 0,
            holes: 0,
            separated: false,
            midline_inside: 0,
        };
        let mut stable = true;
        let mut prev_shape = None;
        for (slot, res) in [cfg.resolution, cfg.resolution * 2].into_iter().enumerate() {
            let mut grid = rasterize(
                |lambda| {
                    let mut buf = [C64::new(0.0, 0.0); ccx_core::MAX_DEGREE];
                    let buf = &mut buf[..n];
                    line.at_into(lambda, buf);
                    membership_of(buf, &tol) == Membership::Inside
                },
                window,
                res,
                res,
            )?;
            for lambda in [C64::new(0.0, 0.0), C64::new(1.0, 0.0)] {
                let mut buf = [C64::new(0.0, 0.0); ccx_core::MAX_DEGREE];
                let buf = &mut buf[..n];
                line.at_into(lambda, buf);
                if membership_of(buf, &tol) == Membership::Inside {
                    let (col, row) = grid.locate(lambda)?;
                    grid.set(col, row, true);
                }
            }
            let topo = analyze(&grid);
            // The pair sits at parameters 0 and 1 of the line.
            let at_a = component_of(&grid, &topo, C64::new(0.0, 0.0))?;
            let at_b = component_of(&grid, &topo, C64::new(1.0, 0.0))?;
            let separated = match (at_a, at_b) {
                (Some(la), Some(lb)) => la != lb,
                _ => false,
            };
            if let Some(prev) = prev_shape {
                stable &= prev == (topo.component_count, topo.hole_count);
            }
            prev_shape = Some((topo.component_count, topo.hole_count));
            if slot == 0 {
                row.components = topo.component_count;
                row.holes = topo.hole_count;
                row.separated = separated;
                if index == 0 {
                    super::emit_images(cfg, &mut report, &grid, &topo, "slice-disconnect-sample")?;
                }
            } else {
                row.separated &= separated;
            }
        }

        for k in 0..TAU_GRID {
            let tau = -TAU_SPAN + 2.0 * TAU_SPAN * k as f64 / (TAU_GRID - 1) as f64;
            let verdict = midline_exclusion(t, tau, n, &tol).map_err(|e| anyhow::anyhow!("{e}"))?;
            if verdict.membership == Membership::Inside {
                row.midline_inside += 1;
            }
        }

        if t >= DISCONNECT_THRESHOLD - 1e-12 {
            let ok =
                row.components >= 2 && row.separated && row.midline_inside == 0 && stable;
            if !ok {
                failures += 1;
            }
        }
        rows.push(row);
    }

    let mut csv = String::from("t,components,holes,separated\n");
    for row in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            row.t, row.components, row.holes, row.separated as u8
        );
    }
    super::emit_csv(cfg, &mut report, "slice-disconnect-sweep.csv", &csv)?;

    report.metric("t_count", ts.len() as f64);
    report.metric("failures", failures as f64);
    report.metric(
        "min_components_above_threshold",
        rows.iter()
            .filter(|r| r.t >= DISCONNECT_THRESHOLD - 1e-12)
            .map(|r| r.components)
            .min()
            .unwrap_or(0) as f64,
    );
    report.metric(
        "midline_interior_hits",
        rows.iter().map(|r| r.midline_inside).sum::<usize>() as f64,
    );
    report.pass = failures == 0;
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
