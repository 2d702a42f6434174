//! Fixtures shared by the benchmarks.

use std::path::PathBuf;

use plotforge::Scene;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/golden")
}

/// Loads a golden spec by file stem, e.g. `"08_grid_heat"`.
pub fn golden(stem: &str) -> Scene {
    let path = corpus_dir().join(format!("{stem}.json"));
    plotforge::load_spec(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_load() {
        assert_eq!(super::golden("01_line_linear").root().id, "main");
    }
}
