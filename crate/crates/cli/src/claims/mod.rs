//! One runner per verified claim. Each returns a [`ClaimReport`] and
//! leaves its artifacts (JSON report, sweeps, images) under the
//! configured output directory.

pub mod dual_demo;
pub mod g2_slices;
pub mod homeo_roundtrip;
pub mod linconvex;
pub mod slice;
pub mod slice_disconnect;
pub mod slope_union;
pub mod starlike;

use std::path::Path;

use ccx_core::raster::{RasterGrid, TopologyReport};

use crate::report::ClaimReport;
use crate::{render, RunConfig};

/// Renders the SVG/PGM pair for a grid and records both artifacts.
fn emit_images(
    cfg: &RunConfig,
    report: &mut ClaimReport,
    grid: &RasterGrid,
    topo: &TopologyReport,
    stem: &str,
) -> anyhow::Result<()> {
    let svg_name = format!("{stem}.svg");
    let pgm_name = format!("{stem}.pgm");
    render::render_svg(grid, topo, &cfg.out_dir.join(&svg_name))?;
    render::render_pgm(grid, topo, &cfg.out_dir.join(&pgm_name))?;
    report.artifact(&svg_name);
    report.artifact(&pgm_name);
    Ok(())
}

/// Writes a small CSV sweep atomically and records it.
fn emit_csv(
    cfg: &RunConfig,
    report: &mut ClaimReport,
    name: &str,
    contents: &str,
) -> anyhow::Result<()> {
    crate::report::write_atomic(&cfg.out_dir.join(name), contents.as_bytes())?;
    report.artifact(name);
    Ok(())
}

fn ensure_out_dir(cfg: &RunConfig) -> anyhow::Result<()> {
    std::fs::create_dir_all(&cfg.out_dir)?;
    Ok(())
}

#[allow(dead_code)]
fn exists_nonempty(path: &Path) -> bool {
    std::fs::metadata(path).map(|m| m.len() > 0).unwrap_or(false)
}
