//! Random complex-line slices of the symmetrized bidisc must be
//! contractible at raster scale (one component, no holes), at the
//! configured resolution and at twice that resolution.

use anyhow::ensure;
use ccx_core::lines::line_through;
use ccx_core::raster::{analyze, rasterize, slice_window};
use ccx_core::symdisc::{membership_of, Membership};
use ccx_core::C64;

use crate::report::ClaimReport;
use crate::{sampling, RunConfig};

pub const CLAIM: &str = "g2-slices";

pub fn run(cfg: &RunConfig, lines: usize) -> anyhow::Result<ClaimReport> {
    ensure!(lines >= 1, "--lines must be at least 1");
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    report.config_value("lines", lines as u64);
    report.config_value("n", 2u64);

    let mut empty = 0usize;
    let mut checked = 0usize;
    let mut failures = 0usize;

    for index in 0..lines {
        let mut rng = sampling::rng(cfg.seed, 0x1000 + index as u64);
        let (p, q) = loop {
            let p = sampling::interior_point(&mut rng, 2);
            let q = sampling::interior_point(&mut rng, 2);
            let dist: f64 = p
                .coords()
                .iter()
                .zip(q.coords())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if dist > 1e-9 {
                break (p, q);
            }
        };
        let line = line_through(p.coords(), q.coords())?;
        let window = slice_window(&line, 2)?;

        let mut shapes = [(0u32, 0u32); 2];
        let mut occupied = [false; 2];
        for (slot, res) in [cfg.resolution, cfg.resolution * 2].into_iter().enumerate() {
            let grid = rasterize(
                |lambda| {
                    let mut buf = [C64::new(0.0, 0.0); 2];
                    line.at_into(lambda, &mut buf);
                    membership_of(&buf, &tol) == Membership::Inside
                },
                window,
                res,
                res,
            )?;
            occupied[slot] = grid.cells().iter().any(|&c| c);
            let topo = analyze(&grid);
            shapes[slot] = (topo.component_count, topo.hole_count);
            if index == 0 && slot == 0 {
                super::emit_images(cfg, &mut report, &grid, &topo, "g2-slice-sample")?;
            }
        }

        if !occupied[0] && !occupied[1] {
            empty += 1;
            continue;
        }
        checked += 1;
        if shapes[0] != (1, 0) || shapes[1] != (1, 0) {
            failures += 1;
        }
    }

    report.metric("lines_total", lines as f64);
    report.metric("slices_checked", checked as f64);
    report.metric("empty_slices", empty as f64);
    report.metric("non_contractible", failures as f64);
    report.pass = failures == 0;
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
