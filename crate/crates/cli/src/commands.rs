use std::fmt;
use std::path::Path;

use plotforge::export::{write_eps, write_png};
use plotforge::render::{emit_drawlist, render_scene};
use plotforge::{load_spec, Scene, SpecError};

use crate::{Format, EXIT_INVALID, EXIT_IO, EXIT_OK};

#[derive(Debug)]
pub enum CliError {
    /// Bad spec or flags; exit 2.
    Invalid(String),
    /// Filesystem or network failure; exit 3.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Io { .. } => CliError::Io(e.to_string()),
            SpecError::Invalid(_) => CliError::Invalid(e.to_string()),
        }
    }
}

pub fn load(spec: &Path) -> Result<Scene, CliError> {
    Ok(load_spec(spec)?)
}

/// Writes exactly one output file, or none on error.
pub fn render(spec: &Path, out: &Path, width: u32, height: u32, format: Format) -> Result<(), CliError> {
    let scene = load(spec)?;
    let invalid = |e: plotforge::layout::LayoutError| CliError::Invalid(format!("{}: {e}", e.code()));
    let io = |e: plotforge::export::ExportError| CliError::Io(e.to_string());
    match format {
        Format::Png => {
            let (raster, _) = render_scene(&scene, width, height, None).map_err(invalid)?;
            write_png(&raster, out).map_err(io)
        }
        Format::Eps => {
            let dl = emit_drawlist(&scene, width, height).map_err(invalid)?;
            write_eps(&dl, width, height, out).map_err(io)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub exit_code: i32,
    /// One issue per line: `path: CODE: message`.
    pub lines: Vec<String>,
}

pub fn validate(spec: &Path) -> Report {
    match load_spec(spec) {
        Ok(_) => Report {
            exit_code: EXIT_OK,
            lines: Vec::new(),
        },
        Err(e @ SpecError::Io { .. }) => Report {
            exit_code: EXIT_IO,
            lines: vec![e.to_string()],
        },
        Err(e) => Report {
            exit_code: EXIT_INVALID,
            lines: e.issues().iter().map(|i| i.to_string()).collect(),
        },
    }
}
