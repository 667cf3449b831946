use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ccx::claims;
use ccx::{ClaimReport, OutputFormat, RunConfig, DEFAULT_SEED};
use ccx_core::C64;

/// Numerical experiments on the geometry of symmetrized polydiscs:
/// slice topology, separating-hyperplane certificates, starlikeness,
/// and balanced-domain duality.
///
/// Exit codes: 0 all claims pass, 2 a claim fails, 1 usage or internal
/// error.
#[derive(Parser)]
#[command(name = "ccx", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    /// Raster resolution per axis (doubled internally for stability
    /// checks).
    #[arg(long, default_value_t = 512)]
    resolution: usize,
    /// RNG seed; identical seeds reproduce reports byte-for-byte.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output directory for reports and artifacts.
    #[arg(long, default_value = "ccx-out")]
    out: PathBuf,
    /// Stdout format for the report body.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Omit the timestamp field (byte-identical reruns).
    #[arg(long)]
    no_timestamp: bool,
    /// Override the membership boundary band.
    #[arg(long)]
    eps_boundary: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check random complex-line slices of the symmetrized bidisc for
    /// contractibility.
    G2Slices {
        /// Number of random lines.
        #[arg(long, default_value_t = 200)]
        lines: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rasterize the union of slope discs at a non-regular boundary
    /// point and check it is one component without holes.
    SlopeUnion {
        /// Real part parameter of the boundary point, in [-1, 1].
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        x: f64,
        /// Polar grid size for the inner parameter.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Build and validate separating-hyperplane certificates for
    /// random exterior points.
    LinconvexCertify {
        /// Ambient dimension.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of exterior points.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rasterize the slices through the mirror pair a_t/b_t and check
    /// disconnection above the threshold.
    SliceDisconnect {
        /// Ambient dimension (at least 3).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Comma-separated t values in (0, 1).
        #[arg(long, value_delimiter = ',', default_value = "0.71,0.75,0.8,0.9")]
        t: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Probe segments to the origin: no exits in dimension 2, an
    /// explicit exit witness in dimension >= 3.
    Starlike {
        /// Ambient dimension.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of interior samples (dimension 2 only).
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Round-trip the radial homeomorphism onto C^n on interior
    /// samples.
    HomeoRoundtrip {
        /// Ambient dimension.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of interior samples.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the balanced-domain duality suite on the catalog domains.
    DualDemo {
        #[command(flatten)]
        common: Common,
    },
    /// Rasterize one slice of the symmetrized polydisc along a given
    /// line and report its topology (no assertion).
    Slice {
        /// Ambient dimension.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated complex components of the base point, e.g.
        /// "0,0" or "1+0.5i,0.2".
        #[arg(long)]
        base: String,
        /// Comma-separated complex components of the direction.
        #[arg(long)]
        dir: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run every claim with its defaults (scaled by --lines/--samples).
    All {
        #[arg(long, default_value_t = 200)]
        lines: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 2,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    }
}

fn config_from(common: &Common) -> anyhow::Result<RunConfig> {
    let cfg = RunConfig {
        seed: common.seed,
        resolution: common.resolution,
        out_dir: common.out.clone(),
        format: match common.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        },
        no_timestamp: common.no_timestamp,
        eps_boundary: common.eps_boundary,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn parse_vector(text: &str) -> anyhow::Result<Vec<C64>> {
    text.split(',')
        .map(|part| {
            C64::from_str(part.trim())
                .map_err(|e| anyhow::anyhow!("bad complex component {part:?}: {e:?}"))
        })
        .collect()
}

fn emit(cfg: &RunConfig, report: &ClaimReport) -> anyhow::Result<()> {
    eprintln!("{}", report.summary_line());
    match cfg.format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(report)?),
        OutputFormat::Csv => print!("{}", report.csv_lines()),
    }
    Ok(())
}

fn dispatch(cli: Cli) -> anyhow::Result<bool> {
    match cli.cmd {
        Cmd::G2Slices { lines, common } => {
            let cfg = config_from(&common)?;
            let report = claims::g2_slices::run(&cfg, lines)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::SlopeUnion { x, samples, common } => {
            let cfg = config_from(&common)?;
            let report = claims::slope_union::run(&cfg, x, samples)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::LinconvexCertify { n, samples, common } => {
            let cfg = config_from(&common)?;
            let report = claims::linconvex::run(&cfg, n, samples)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::SliceDisconnect { n, t, common } => {
            let cfg = config_from(&common)?;
            let report = claims::slice_disconnect::run(&cfg, n, &t)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::Starlike { n, samples, common } => {
            let cfg = config_from(&common)?;
            let report = claims::starlike::run(&cfg, n, samples)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::HomeoRoundtrip { n, samples, common } => {
            let cfg = config_from(&common)?;
            let report = claims::homeo_roundtrip::run(&cfg, n, samples)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::DualDemo { common } => {
            let cfg = config_from(&common)?;
            let report = claims::dual_demo::run(&cfg)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::Slice {
            n,
            base,
            dir,
            common,
        } => {
            let cfg = config_from(&common)?;
            let base = parse_vector(&base)?;
            let dir = parse_vector(&dir)?;
            let report = claims::slice::run(&cfg, n, &base, &dir)?;
            emit(&cfg, &report)?;
            Ok(report.pass)
        }
        Cmd::All {
            lines,
            samples,
            common,
        } => {
            let cfg = config_from(&common)?;
            let mut all_pass = true;
            let reports = vec![
                claims::g2_slices::run(&cfg, lines)?,
                claims::slope_union::run(&cfg, 0.5, 64)?,
                claims::linconvex::run(&cfg, 3, samples)?,
                claims::slice_disconnect::run(&cfg, 3, &[0.71, 0.75, 0.8, 0.9])?,
                claims::starlike::run(&cfg, 2, samples)?,
                claims::starlike::run(&cfg, 3, samples)?,
                claims::homeo_roundtrip::run(&cfg, 3, samples)?,
                claims::dual_demo::run(&cfg)?,
            ];
            for report in &reports {
                emit(&cfg, report)?;
                all_pass &= report.pass;
            }
            Ok(all_pass)
        }
    }
}
