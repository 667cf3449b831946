//! The union of the slope discs over a polar grid of inner parameters
//! must rasterize to a single component with no holes: the complement
//! of the tangent-slope set at a non-regular boundary point is
//! connected at raster scale.

use anyhow::ensure;
use ccx_core::lines::slope_disc;
use ccx_core::raster::{analyze, RasterGrid, Window};
use ccx_core::C64;

use crate::report::ClaimReport;
use crate::RunConfig;

pub const CLAIM: &str = "slope-union";

/// Window comfortably containing the anchor disc (center `2x`, radius
/// one) together with the portions of the large near-rim discs that
/// matter for connectivity.
const WINDOW_HALF: f64 = 8.0;

pub fn run(cfg: &RunConfig, x: f64, grid_size: usize) -> anyhow::Result<ClaimReport> {
    ensure!((-1.0..=1.0).contains(&x), "--x must lie in [-1, 1]");
    ensure!(grid_size >= 16, "--samples (polar grid size) must be at least 16");
    super::ensure_out_dir(cfg)?;
    let tol = cfg.tolerances();
    let mut report = ClaimReport::new(CLAIM, cfg);
    report.config_value("x", x);
    report.config_value("grid_size", grid_size as u64);

    let m = grid_size;
    let max_radius = 1.0 - 1.0 / m as f64;
    let mut shapes = [(0u32, 0u32); 2];
    for (slot, res) in [cfg.resolution, cfg.resolution * 2].into_iter().enumerate() {
        let window = Window::new(-WINDOW_HALF, WINDOW_HALF, -WINDOW_HALF, WINDOW_HALF)?;
        let mut grid = RasterGrid::new(window, res, res)?;
        for j in 0..m {
            let r = max_radius * j as f64 / (m - 1) as f64;
            let angles = if j == 0 { 1 } else { m };
            for k in 0..angles {
                let theta = core::f64::consts::TAU * k as f64 / m as f64;
                let disc = slope_disc(C64::from_polar(r, theta), x, &tol)?;
                grid.fill_disc(&disc);
            }
        }
        let topo = analyze(&grid);
        shapes[slot] = (topo.component_count, topo.hole_count);
        if slot == 0 {
            super::emit_images(cfg, &mut report, &grid, &topo, "slope-union")?;
        }
    }

    report.metric("components", shapes[0].0 as f64);
    report.metric("holes", shapes[0].1 as f64);
    report.metric("components_2x", shapes[1].0 as f64);
    report.metric("holes_2x", shapes[1].1 as f64);
    report.pass = shapes[0] == (1, 0) && shapes[1] == (1, 0);
    report.write_json(&cfg.out_dir)?;
    Ok(report)
}
