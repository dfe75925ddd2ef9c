//! Artifact writers: CSV and JSON data files plus the run manifest.
//!
//! Data files are deterministic given the resolved configuration — floats are
//! written with Rust's shortest round-trip formatting and timestamps live
//! only in the manifest.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::Serialize;
use tornado_core::experiments::{ConvergenceCurve, DimensionCell, ExecutionMode, SweepPoint};
use tornado_core::{ParticleSnapshot, RunTrace};

/// Where artifacts go and how trials execute; shared by every subcommand.
pub struct OutputContext {
    dir: PathBuf,
    pub mode: ExecutionMode,
}

impl OutputContext {
    pub fn new(flag: Option<PathBuf>, mode: ExecutionMode) -> Result<Self> {
        let dir = flag
            .or_else(|| std::env::var_os("TORNADO_OUT").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("."));
        fs::create_dir_all(&dir)
            .with_context(|| format!("cannot create output directory {}", dir.display()))?;
        Ok(Self { dir, mode })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    pub fn write_json(&self, name: &str, value: &impl Serialize) -> Result<PathBuf> {
        let path = self.path(name);
        let file = File::create(&path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        let mut w = BufWriter::new(file);
        serde_json::to_writer_pretty(&mut w, value)?;
        w.write_all(b"\n")?;
        w.flush()?;
        println!("wrote {}", path.display());
        Ok(path)
    }

    fn create_csv(&self, name: &str) -> Result<(BufWriter<File>, PathBuf)> {
        let path = self.path(name);
        let file = File::create(&path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        Ok((BufWriter::new(file), path))
    }

    /// Best cost after each iteration of a single run.
    pub fn write_best_cost_trace(&self, name: &str, trace: &RunTrace) -> Result<PathBuf> {
        let (mut w, path) = self.create_csv(name)?;
        writeln!(w, "iteration,best_cost")?;
        for (t, cost) in trace.best_cost_per_iteration.iter().enumerate() {
            writeln!(w, "{},{}", t + 1, cost)?;
        }
        w.flush()?;
        println!("wrote {}", path.display());
        Ok(path)
    }

    /// Particle snapshots as flat rows, one block per recorded iteration.
    pub fn write_trajectory(
        &self,
        name: &str,
        snapshots: &[ParticleSnapshot],
        dimension: usize,
    ) -> Result<PathBuf> {
        let (mut w, path) = self.create_csv(name)?;
        write!(w, "iteration,particle,current_type")?;
        for d in 1..=dimension {
            write!(w, ",x{d}")?;
        }
        writeln!(w, ",cost")?;
        for row in snapshots {
            write!(w, "{},{},{}", row.iteration, row.particle, row.current.label())?;
            for v in &row.position {
                write!(w, ",{v}")?;
            }
            writeln!(w, ",{}", row.cost)?;
        }
        w.flush()?;
        println!("wrote {}", path.display());
        Ok(path)
    }

    pub fn write_sweep(&self, name: &str, points: &[SweepPoint]) -> Result<PathBuf> {
        let (mut w, path) = self.create_csv(name)?;
        writeln!(w, "k1,success_probability")?;
        for p in points {
            writeln!(w, "{},{}", p.k1, p.success_probability)?;
        }
        w.flush()?;
        println!("wrote {}", path.display());
        Ok(path)
    }

    pub fn write_dims(&self, name: &str, cells: &[DimensionCell]) -> Result<PathBuf> {
        let (mut w, path) = self.create_csv(name)?;
        writeln!(w, "dim,algorithm,success_probability")?;
        for c in cells {
            writeln!(w, "{},{},{}", c.dimension, c.algorithm, c.success_probability)?;
        }
        w.flush()?;
        println!("wrote {}", path.display());
        Ok(path)
    }

    /// Long-format curves: one row per (iteration, algorithm).
    pub fn write_curves(&self, name: &str, curves: &[ConvergenceCurve]) -> Result<PathBuf> {
        let (mut w, path) = self.create_csv(name)?;
        writeln!(w, "iteration,algorithm,mean_best_cost")?;
        for curve in curves {
            for (t, cost) in curve.mean_best_cost.iter().enumerate() {
                writeln!(w, "{},{},{}", t + 1, curve.algorithm, cost)?;
            }
        }
        w.flush()?;
        println!("wrote {}", path.display());
        Ok(path)
    }

    /// Echo of the resolved configuration plus the files it produced. The
    /// timestamp lives here and only here.
    pub fn write_manifest(
        &self,
        command: &str,
        resolved: &impl Serialize,
        outputs: &[PathBuf],
    ) -> Result<()> {
        #[derive(Serialize)]
        struct Manifest<'a> {
            command: &'a str,
            argv: Vec<String>,
            execution_mode: ExecutionMode,
            resolved: serde_json::Value,
            outputs: Vec<String>,
            timestamp_unix: u64,
        }
        let manifest = Manifest {
            command,
            argv: std::env::args().collect(),
            execution_mode: self.mode,
            resolved: serde_json::to_value(resolved)?,
            outputs: outputs.iter().map(|p| file_name(p)).collect(),
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        self.write_json("manifest.json", &manifest)?;
        Ok(())
    }
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}
