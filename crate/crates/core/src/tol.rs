/// Global numeric tolerances.
///
/// All membership tri-states share one boundary band: a root modulus in
/// `[1 - boundary, 1 + boundary]` is reported as a boundary verdict
/// rather than inside/outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Half-width of the tri-state band around the unit circle.
    pub boundary: f64,
    /// Residual target for the simultaneous root iteration, relative to
    /// the coefficient scale.
    pub residual: f64,
    /// Smallest reflection-recursion pivot treated as nonzero.
    pub pivot: f64,
    /// Relative tolerance for hyperplane incidence tests.
    pub plane: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        boundary: 1e-9,
        residual: 1e-12,
        pivot: 1e-12,
        plane: 1e-9,
    };

    /// Same tolerances with a different boundary band.
    pub fn with_boundary(boundary: f64) -> Tolerances {
        Tolerances {
            boundary,
            ..Tolerances::DEFAULT
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::DEFAULT
    }
}
