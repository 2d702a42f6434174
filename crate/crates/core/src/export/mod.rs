//! File encoders: PNG from a raster, EPS from a draw list.

mod eps;
mod png;

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

pub use eps::{eps_string, export_eps, num, ps_string, HEADER as EPS_HEADER, PROLOG as EPS_PROLOG};
pub use png::{encode_png, export_png};

use crate::render::{DrawList, Raster};

#[derive(Debug, thiserror::Error)]
#[error("cannot write {}: {source}", path.display())]
pub struct ExportError {
    pub path: PathBuf,
    pub source: std::io::Error,
}

impl ExportError {
    pub fn code(&self) -> &'static str {
        "IO_FAILURE"
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, ExportError> {
    File::create(path).map(BufWriter::new).map_err(|source| ExportError {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_png(r: &Raster, path: &Path) -> Result<(), ExportError> {
    export_png(r, &mut create(path)?).map_err(|source| ExportError {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_eps(dl: &DrawList, width: u32, height: u32, path: &Path) -> Result<(), ExportError> {
    export_eps(dl, width, height, &mut create(path)?).map_err(|source| ExportError {
        path: path.to_path_buf(),
        source,
    })
}
