//! Desk-scale topology of planar sets: rasterize a predicate over a
//! rectangle in the plane, label connected components with union-find,
//! and count holes. One 4-connected component with zero holes is the
//! raster proxy for "connected and simply connected".
//!
//! Foreground cells use 4-connectivity and background cells use
//! 8-connectivity — the Jordan-consistent pairing that avoids spurious
//! holes along diagonal boundaries.

use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::lines::{ComplexLine, Disc};
use crate::C64;

/// Smallest accepted raster resolution per axis.
pub const MIN_RESOLUTION: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub enum RasterError {
    ResolutionTooSmall { cols: usize, rows: usize },
    EmptyWindow,
    /// Point query outside the raster window.
    OutsideWindow { point: C64 },
    /// No coordinate constrains the line parameter (zero direction).
    UnboundedWindow,
}

impl fmt::Display for RasterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RasterError::ResolutionTooSmall { cols, rows } => {
                write!(f, "resolution {cols}x{rows} below minimum {MIN_RESOLUTION}")
            }
            RasterError::EmptyWindow => write!(f, "window has no area"),
            RasterError::OutsideWindow { point } => {
                write!(f, "point {point} outside the raster window")
            }
            RasterError::UnboundedWindow => {
                write!(f, "line direction constrains no coordinate")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RasterError {}

/// Axis-aligned rectangle in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self, RasterError> {
        if !(re_min < re_max && im_min < im_max) {
            return Err(RasterError::EmptyWindow);
        }
        Ok(Window {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    pub fn square(half: f64) -> Self {
        Window {
            re_min: -half,
            re_max: half,
            im_min: -half,
            im_max: half,
        }
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn contains(&self, p: C64) -> bool {
        self.re_min <= p.re && p.re <= self.re_max && self.im_min <= p.im && p.im <= self.im_max
    }
}

/// Boolean occupancy grid over a window; `true` means the predicate
/// held at the cell center.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterGrid {
    window: Window,
    cols: usize,
    rows: usize,
    cells: Vec<bool>,
}

impl RasterGrid {
    pub fn new(window: Window, cols: usize, rows: usize) -> Result<Self, RasterError> {
        if cols < MIN_RESOLUTION || rows < MIN_RESOLUTION {
            return Err(RasterError::ResolutionTooSmall { cols, rows });
        }
        Ok(RasterGrid {
            window,
            cols,
            rows,
            cells: alloc::vec![false; cols * rows],
        })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, col: usize, row: usize) -> bool {
        self.cells[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, col: usize, row: usize, value: bool) {
        self.cells[row * self.cols + col] = value;
    }

    /// Center of cell `(col, row)`; row 0 sits at the bottom of the
    /// window (smallest imaginary part).
    #[inline]
    pub fn cell_center(&self, col: usize, row: usize) -> C64 {
        C64::new(
            self.window.re_min + (col as f64 + 0.5) * self.window.width() / self.cols as f64,
            self.window.im_min + (row as f64 + 0.5) * self.window.height() / self.rows as f64,
        )
    }

    /// Cell containing a point, if it lies in the window.
    pub fn locate(&self, p: C64) -> Result<(usize, usize), RasterError> {
        if !self.window.contains(p) {
            return Err(RasterError::OutsideWindow { point: p });
        }
        let col = (((p.re - self.window.re_min) / self.window.width()) * self.cols as f64)
            .floor() as usize;
        let row = (((p.im - self.window.im_min) / self.window.height()) * self.rows as f64)
            .floor() as usize;
        Ok((col.min(self.cols - 1), row.min(self.rows - 1)))
    }

    /// Evaluates the predicate at every cell center.
    pub fn fill_where(&mut self, pred: impl Fn(C64) -> bool) {
        for row in 0..self.rows {
            for col in 0..self.cols {
                let v = pred(self.cell_center(col, row));
                self.set(col, row, v);
            }
        }
    }

    /// Marks every cell whose center lies in the disc; cheaper than
    /// [`RasterGrid::fill_where`] when painting unions of many discs.
    pub fn fill_disc(&mut self, disc: &Disc) {
        let cw = self.window.width() / self.cols as f64;
        let ch = self.window.height() / self.rows as f64;
        let col_lo = ((disc.center.re - disc.radius - self.window.re_min) / cw).floor() as i64;
        let col_hi = ((disc.center.re + disc.radius - self.window.re_min) / cw).ceil() as i64;
        let row_lo = ((disc.center.im - disc.radius - self.window.im_min) / ch).floor() as i64;
        let row_hi = ((disc.center.im + disc.radius - self.window.im_min) / ch).ceil() as i64;
        for row in row_lo.max(0)..=row_hi.min(self.rows as i64 - 1).max(-1) {
            for col in col_lo.max(0)..=col_hi.min(self.cols as i64 - 1).max(-1) {
                let (col, row) = (col as usize, row as usize);
                if !self.get(col, row) && disc.contains(self.cell_center(col, row)) {
                    self.set(col, row, true);
                }
            }
        }
    }

    /// Fraction of occupied cells.
    pub fn occupancy(&self) -> f64 {
        let on = self.cells.iter().filter(|&&c| c).count();
        on as f64 / self.cells.len() as f64
    }
}

/// Rasterizes a predicate over a window.
pub fn rasterize(
    pred: impl Fn(C64) -> bool,
    window: Window,
    cols: usize,
    rows: usize,
) -> Result<RasterGrid, RasterError> {
    let mut grid = RasterGrid::new(window, cols, rows)?;
    grid.fill_where(pred);
    Ok(grid)
}

/// Component/hole summary of a raster. `labels` assigns a component id
/// to every cell (0 for background).
#[derive(Debug, Clone, PartialEq)]
pub struct TopologyReport {
    pub component_count: u32,
    pub hole_count: u32,
    pub labels: Vec<u32>,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
        }
    }

    fn find(&mut self, mut i: u32) -> u32 {
        while self.parent[i as usize] != i {
            self.parent[i as usize] = self.parent[self.parent[i as usize] as usize];
            i = self.parent[i as usize];
        }
        i
    }

    fn union(&mut self, i: u32, j: u32) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            // Smaller root wins, keeping labels scan-ordered.
            if ri < rj {
                self.parent[rj as usize] = ri;
            } else {
                self.parent[ri as usize] = rj;
            }
        }
    }
}

/// Labels foreground components (4-connectivity) and counts holes:
/// background components (8-connectivity) that do not touch the window
/// border.
pub fn analyze(grid: &RasterGrid) -> TopologyReport {
    let (cols, rows) = (grid.cols(), grid.rows());
    let idx = |col: usize, row: usize| (row * cols + col) as u32;

    let mut fg = UnionFind::new(cols * rows);
    // Background forest carries a virtual border node at the end.
    let border = (cols * rows) as u32;
    let mut bg = UnionFind::new(cols * rows + 1);

    for row in 0..rows {
        for col in 0..cols {
            let here = idx(col, row);
            if grid.get(col, row) {
                if col > 0 && grid.get(col - 1, row) {
                    fg.union(here, idx(col - 1, row));
                }
                if row > 0 && grid.get(col, row - 1) {
                    fg.union(here, idx(col, row - 1));
                }
            } else {
                if col == 0 || col == cols - 1 || row == 0 || row == rows - 1 {
                    bg.union(here, border);
                }
                if col > 0 && !grid.get(col - 1, row) {
                    bg.union(here, idx(col - 1, row));
                }
                if row > 0 {
                    if !grid.get(col, row - 1) {
                        bg.union(here, idx(col, row - 1));
                    }
                    if col > 0 && !grid.get(col - 1, row - 1) {
                        bg.union(here, idx(col - 1, row - 1));
                    }
                    if col + 1 < cols && !grid.get(col + 1, row - 1) {
                        bg.union(here, idx(col + 1, row - 1));
                    }
                }
            }
        }
    }

    let mut labels = alloc::vec![0u32; cols * rows];
    let mut label_of_root = alloc::vec![0u32; cols * rows];
    let mut next_label = 0u32;
    let mut hole_of_root = alloc::vec![false; cols * rows];
    let mut holes = 0u32;
    let border_root = bg.find(border);

    for row in 0..rows {
        for col in 0..cols {
            let here = idx(col, row);
            if grid.get(col, row) {
                let root = fg.find(here) as usize;
                if label_of_root[root] == 0 {
                    next_label += 1;
                    label_of_root[root] = next_label;
                }
                labels[here as usize] = label_of_root[root];
            } else {
                let root = bg.find(here);
                if root != border_root && !hole_of_root[root as usize] {
                    hole_of_root[root as usize] = true;
                    holes += 1;
                }
            }
        }
    }

    TopologyReport {
        component_count: next_label,
        hole_count: holes,
        labels,
    }
}

/// Per-cell hole ids (0 for non-hole cells), in scan order of first
/// appearance; used by renderers that outline holes.
pub fn hole_labels(grid: &RasterGrid) -> (u32, Vec<u32>) {
    let (cols, rows) = (grid.cols(), grid.rows());
    let idx = |col: usize, row: usize| (row * cols + col) as u32;
    let border = (cols * rows) as u32;
    let mut bg = UnionFind::new(cols * rows + 1);

    for row in 0..rows {
        for col in 0..cols {
            if grid.get(col, row) {
                continue;
            }
            let here = idx(col, row);
            if col == 0 || col == cols - 1 || row == 0 || row == rows - 1 {
                bg.union(here, border);
            }
            if col > 0 && !grid.get(col - 1, row) {
                bg.union(here, idx(col - 1, row));
            }
            if row > 0 {
                if !grid.get(col, row - 1) {
                    bg.union(here, idx(col, row - 1));
                }
                if col > 0 && !grid.get(col - 1, row - 1) {
                    bg.union(here, idx(col - 1, row - 1));
                }
                if col + 1 < cols && !grid.get(col + 1, row - 1) {
                    bg.union(here, idx(col + 1, row - 1));
                }
            }
        }
    }

    let border_root = bg.find(border);
    let mut labels = alloc::vec![0u32; cols * rows];
    let mut label_of_root = alloc::vec![0u32; cols * rows];
    let mut next = 0u32;
    for i in 0..cols * rows {
        if grid.cells()[i] {
            continue;
        }
        let root = bg.find(i as u32);
        if root == border_root {
            continue;
        }
        if label_of_root[root as usize] == 0 {
            next += 1;
            label_of_root[root as usize] = next;
        }
        labels[i] = label_of_root[root as usize];
    }
    (next, labels)
}

/// Component label of the cell containing `point` (None on empty
/// cells).
pub fn component_of(
    grid: &RasterGrid,
    report: &TopologyReport,
    point: C64,
) -> Result<Option<u32>, RasterError> {
    let (col, row) = grid.locate(point)?;
    let label = report.labels[row * grid.cols() + col];
    Ok(if label == 0 { None } else { Some(label) })
}

/// Binomial coefficient as a float (arguments stay tiny here).
fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0_f64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// A parameter window guaranteed to contain every `lambda` with
/// `base + lambda * dir` in the closure of `G_n`.
///
/// On the closure every coordinate obeys `|z_k| <= C(n, k)` (Vieta with
/// all root moduli at most one), so each coordinate with `dir_k != 0`
/// confines `lambda` to a disc; the window is the padded bounding box
/// of the intersection of those discs.
pub fn slice_window(line: &ComplexLine, n: usize) -> Result<Window, RasterError> {
    let mut best: Option<(C64, f64)> = None;
    let mut re_lo = f64::NEG_INFINITY;
    let mut re_hi = f64::INFINITY;
    let mut im_lo = f64::NEG_INFINITY;
    let mut im_hi = f64::INFINITY;
    for (k, (&b, &d)) in line.base().iter().zip(line.dir()).enumerate() {
        if d.norm() <= 1e-12 {
            continue;
        }
        let center = -b / d;
        let radius = binomial(n, k + 1) / d.norm();
        re_lo = re_lo.max(center.re - radius);
        re_hi = re_hi.min(center.re + radius);
        im_lo = im_lo.max(center.im - radius);
        im_hi = im_hi.min(center.im + radius);
        if best.map_or(true, |(_, r)| radius < r) {
            best = Some((center, radius));
        }
    }
    let (center, radius) = best.ok_or(RasterError::UnboundedWindow)?;
    if !(re_lo < re_hi && im_lo < im_hi) {
        // The coordinate discs are disjoint: the line misses the
        // closure entirely. Return the tightest single-coordinate
        // window so rasterization yields an empty grid.
        re_lo = center.re - radius;
        re_hi = center.re + radius;
        im_lo = center.im - radius;
        im_hi = center.im + radius;
    }
    let pad_re = 0.05 * (re_hi - re_lo).max(1e-6);
    let pad_im = 0.05 * (im_hi - im_lo).max(1e-6);
    Window::new(
        re_lo - pad_re,
        re_hi + pad_re,
        im_lo - pad_im,
        im_hi + pad_im,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::line_through;
    use crate::symdisc::{counterexample_points, membership_of, Membership};
    use crate::Tolerances;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn rasterize_full_and_fraction() {
        let w = Window::square(1.0);
        let grid = rasterize(|_| true, w, 64, 64).unwrap();
        assert_eq!(grid.occupancy(), 1.0);

        let grid = rasterize(|z| z.norm() < 0.5, w, 256, 256).unwrap();
        let expect = core::f64::consts::PI * 0.25 / 4.0;
        assert!((grid.occupancy() - expect).abs() < 0.02 * expect.max(1.0));
    }

    #[test]
    fn resolution_floor_enforced() {
        assert!(matches!(
            RasterGrid::new(Window::square(1.0), 8, 64),
            Err(RasterError::ResolutionTooSmall { .. })
        ));
    }

    #[test]
    fn analyze_full_grid() {
        let grid = rasterize(|_| true, Window::square(1.0), 32, 32).unwrap();
        let report = analyze(&grid);
        assert_eq!(report.component_count, 1);
        assert_eq!(report.hole_count, 0);
    }

    #[test]
    fn analyze_annulus() {
        let grid = rasterize(
            |z| {
                let r = z.norm();
                0.4 < r && r < 0.9
            },
            Window::square(1.0),
            512,
            512,
        )
        .unwrap();
        let report = analyze(&grid);
        assert_eq!(report.component_count, 1);
        assert_eq!(report.hole_count, 1);
    }

    #[test]
    fn analyze_two_discs() {
        let grid = rasterize(
            |z| (z - c(0.5, 0.0)).norm() < 0.2 || (z + c(0.5, 0.0)).norm() < 0.2,
            Window::square(1.0),
            256,
            256,
        )
        .unwrap();
        let report = analyze(&grid);
        assert_eq!(report.component_count, 2);
        assert_eq!(report.hole_count, 0);

        let left = component_of(&grid, &report, c(-0.5, 0.0)).unwrap();
        let right = component_of(&grid, &report, c(0.5, 0.0)).unwrap();
        assert!(left.is_some() && right.is_some());
        assert_ne!(left, right);
    }

    #[test]
    fn component_queries() {
        let grid = rasterize(|_| true, Window::square(1.0), 32, 32).unwrap();
        let report = analyze(&grid);
        assert_eq!(component_of(&grid, &report, c(0.1, -0.3)).unwrap(), Some(1));
        assert!(matches!(
            component_of(&grid, &report, c(5.0, 0.0)),
            Err(RasterError::OutsideWindow { .. })
        ));

        let annulus = rasterize(
            |z| {
                let r = z.norm();
                0.4 < r && r < 0.9
            },
            Window::square(1.0),
            128,
            128,
        )
        .unwrap();
        let report = analyze(&annulus);
        assert_eq!(component_of(&annulus, &report, c(0.0, 0.0)).unwrap(), None);
    }

    #[test]
    fn fill_disc_matches_predicate() {
        let w = Window::square(2.0);
        let disc = Disc {
            center: c(0.3, -0.4),
            radius: 0.8,
            open: true,
        };
        let mut painted = RasterGrid::new(w, 128, 128).unwrap();
        painted.fill_disc(&disc);
        let direct = rasterize(|z| disc.contains(z), w, 128, 128).unwrap();
        assert_eq!(painted, direct);
    }

    #[test]
    fn slice_window_axis_line() {
        let line = line_through(
            &[c(0.0, 0.0), c(0.0, 0.0)],
            &[c(1.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let w = slice_window(&line, 2).unwrap();
        // |lambda| <= C(2,1) = 2, padded.
        assert!(w.re_min <= -2.0 && w.re_min >= -2.4);
        assert!(w.re_max >= 2.0 && w.re_max <= 2.4);
        assert!(w.im_min <= -2.0 && w.im_max >= 2.0);
    }

    #[test]
    fn slice_window_contains_counterexample_segment() {
        let (a, b) = counterexample_points(0.75, 3).unwrap();
        let line = line_through(a.coords(), b.coords()).unwrap();
        let w = slice_window(&line, 3).unwrap();
        assert!(w.contains(c(0.0, 0.0)));
        assert!(w.contains(c(1.0, 0.0)));
    }

    #[test]
    fn slice_window_covers_all_interior_cells() {
        // Refinement oracle: every Inside parameter found on a fine
        // probe of a larger window already lies in the computed one.
        let tol = Tolerances::DEFAULT;
        let lines = [
            line_through(
                &[c(0.2, 0.1), c(0.1, -0.3), c(0.0, 0.05)],
                &[c(-0.4, 0.2), c(0.3, 0.3), c(0.1, 0.0)],
            )
            .unwrap(),
            line_through(
                &[c(0.5, 0.0), c(0.2, 0.0), c(0.1, 0.0)],
                &[c(0.0, 0.4), c(-0.1, 0.2), c(0.0, -0.2)],
            )
            .unwrap(),
        ];
        for line in &lines {
            let w = slice_window(line, 3).unwrap();
            let big = Window::new(
                2.0 * w.re_min - 1.0,
                2.0 * w.re_max + 1.0,
                2.0 * w.im_min - 1.0,
                2.0 * w.im_max + 1.0,
            )
            .unwrap();
            let mut buf = [c(0.0, 0.0); 3];
            for row in 0..128 {
                for col in 0..128 {
                    let lambda = C64::new(
                        big.re_min + (col as f64 + 0.5) * big.width() / 128.0,
                        big.im_min + (row as f64 + 0.5) * big.height() / 128.0,
                    );
                    line.at_into(lambda, &mut buf);
                    if membership_of(&buf, &tol) == Membership::Inside {
                        assert!(w.contains(lambda), "interior lambda {lambda} escapes window");
                    }
                }
            }
        }
    }
}
