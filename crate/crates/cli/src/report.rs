use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use serde::Serialize;

use crate::config::RunConfig;

/// Result of one claim run. Serialized as flat JSON; map fields are
/// ordered so identical runs produce identical bytes. Artifact paths
/// are stored relative to the output directory for the same reason.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub pass: bool,
    pub metrics: BTreeMap<String, f64>,
    pub artifacts: Vec<String>,
    pub config: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl ClaimReport {
    pub fn new(claim: &str, cfg: &RunConfig) -> ClaimReport {
        let mut config = BTreeMap::new();
        config.insert("seed".into(), serde_json::Value::from(cfg.seed));
        config.insert("resolution".into(), serde_json::Value::from(cfg.resolution));
        if let Some(eps) = cfg.eps_boundary {
            config.insert("eps_boundary".into(), serde_json::Value::from(eps));
        }
        let timestamp = if cfg.no_timestamp {
            None
        } else {
            Some(
                SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            )
        };
        ClaimReport {
            claim: claim.to_string(),
            pass: false,
            metrics: BTreeMap::new(),
            artifacts: Vec::new(),
            config,
            timestamp,
        }
    }

    pub fn metric(&mut self, name: &str, value: f64) {
        self.metrics.insert(name.to_string(), value);
    }

    pub fn config_value(&mut self, name: &str, value: impl Into<serde_json::Value>) {
        self.config.insert(name.to_string(), value.into());
    }

    pub fn artifact(&mut self, rel_path: &str) {
        self.artifacts.push(rel_path.to_string());
    }

    /// Writes `<claim>.json` under the output directory (atomically)
    /// and returns the path.
    pub fn write_json(&self, out_dir: &Path) -> anyhow::Result<PathBuf> {
        let path = out_dir.join(format!("{}.json", self.claim));
        let mut bytes = serde_json::to_vec_pretty(self)?;
        bytes.push(b'\n');
        write_atomic(&path, &bytes)?;
        Ok(path)
    }

    /// One human-readable line: `PASS claim (k=v, ...)`.
    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let metrics: Vec<String> = self
            .metrics
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{status} {} ({})", self.claim, metrics.join(", "))
    }

    /// CSV lines `claim,metric,value` for sweep-style consumption.
    pub fn csv_lines(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{},pass,{}\n", self.claim, self.pass as u8));
        for (k, v) in &self.metrics {
            out.push_str(&format!("{},{k},{v}\n", self.claim));
        }
        out
    }
}

/// Write-then-rename so readers never observe a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}
