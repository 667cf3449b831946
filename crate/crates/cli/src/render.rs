//! SVG and binary PGM renderers for raster grids.
//!
//! SVG: one filled path per labeled component (horizontal-run
//! subpaths) and one outlined path per hole, with a fixed palette
//! keyed by label index. PGM (P5): one byte per cell, 0 for empty and
//! `255 * label / max` otherwise. Rows are written top-down (largest
//! imaginary part first).

use std::fmt::Write as _;
use std::path::Path;

use ccx_core::raster::{hole_labels, RasterGrid, TopologyReport};

use crate::report::write_atomic;

const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

/// Collects maximal horizontal runs of cells carrying `label` into one
/// SVG path string (grid rows are bottom-up, SVG rows top-down).
fn runs_path(labels: &[u32], cols: usize, rows: usize, label: u32) -> String {
    let mut d = String::new();
    for row in 0..rows {
        let y = rows - 1 - row;
        let mut col = 0;
        while col < cols {
            if labels[row * cols + col] == label {
                let start = col;
                while col < cols && labels[row * cols + col] == label {
                    col += 1;
                }
                let _ = write!(d, "M{start} {y}h{}v1h-{}z", col - start, col - start);
            } else {
                col += 1;
            }
        }
    }
    d
}

pub fn render_svg(grid: &RasterGrid, report: &TopologyReport, path: &Path) -> anyhow::Result<()> {
    let (cols, rows) = (grid.cols(), grid.rows());
    let mut svg = String::new();
    let _ = write!(
        svg,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" \
         viewBox=\"0 0 {cols} {rows}\" width=\"{cols}\" height=\"{rows}\">\n"
    );
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");
    for label in 1..=report.component_count {
        let d = runs_path(&report.labels, cols, rows, label);
        let color = PALETTE[(label as usize - 1) % PALETTE.len()];
        let _ = write!(svg, "<path fill=\"{color}\" d=\"{d}\"/>\n");
    }
    let (hole_count, holes) = hole_labels(grid);
    for label in 1..=hole_count {
        let d = runs_path(&holes, cols, rows, label);
        let _ = write!(
            svg,
            "<path fill=\"none\" stroke=\"#333333\" stroke-width=\"1\" d=\"{d}\"/>\n"
        );
    }
    svg.push_str("</svg>\n");
    write_atomic(path, svg.as_bytes())
}

pub fn render_pgm(grid: &RasterGrid, report: &TopologyReport, path: &Path) -> anyhow::Result<()> {
    let (cols, rows) = (grid.cols(), grid.rows());
    let max = report.component_count.max(1);
    let mut bytes = format!("P5\n{cols} {rows}\n255\n").into_bytes();
    bytes.reserve(cols * rows);
    for row in (0..rows).rev() {
        for col in 0..cols {
            let label = report.labels[row * cols + col];
            bytes.push(((255 * label) / max) as u8);
        }
    }
    write_atomic(path, &bytes)
}
