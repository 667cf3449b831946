use std::path::PathBuf;

use ccx_core::Tolerances;

/// Default RNG seed; fixed so reports reproduce byte-for-byte.
pub const DEFAULT_SEED: u64 = 0x5D15_C0DE;

/// Smallest accepted raster resolution for the driver.
pub const MIN_DRIVER_RESOLUTION: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Shared run parameters for every claim runner.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub resolution: usize,
    pub out_dir: PathBuf,
    pub format: OutputFormat,
    pub no_timestamp: bool,
    /// Optional override of the membership boundary band.
    pub eps_boundary: Option<f64>,
}

impl RunConfig {
    pub fn new(out_dir: PathBuf) -> RunConfig {
        RunConfig {
            seed: DEFAULT_SEED,
            resolution: 512,
            out_dir,
            format: OutputFormat::Json,
            no_timestamp: false,
            eps_boundary: None,
        }
    }

    pub fn tolerances(&self) -> Tolerances {
        match self.eps_boundary {
            Some(eps) => Tolerances::with_boundary(eps),
            None => Tolerances::DEFAULT,
        }
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.resolution < MIN_DRIVER_RESOLUTION {
            anyhow::bail!(
                "resolution {} below minimum {MIN_DRIVER_RESOLUTION}",
                self.resolution
            );
        }
        if let Some(eps) = self.eps_boundary {
            if !(eps > 0.0 && eps < 0.1) {
                anyhow::bail!("eps-boundary {eps} outside (0, 0.1)");
            }
        }
        Ok(())
    }
}
