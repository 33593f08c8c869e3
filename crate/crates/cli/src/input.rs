use std::path::Path;

use anyhow::{Context, Result};
use snark_core::{blanusa1, blanusa2, k33, k4, petersen, CubicGraph};

/// Resolves a graph argument: a built-in name, or a path to an
/// adjacency-list or graph6 file (picked by extension).
pub fn load(spec: &str) -> Result<(String, CubicGraph)> {
    let named = match spec {
        "petersen" => Some(petersen()),
        "k4" => Some(k4()),
        "k33" => Some(k33()),
        "blanusa1" => Some(blanusa1()),
        "blanusa2" => Some(blanusa2()),
        _ => None,
    };
    if let Some(g) = named {
        return Ok((spec.to_string(), g));
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
    let g = if is_graph6(path) {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        CubicGraph::from_graph6(line.trim()).with_context(|| format!("parsing {spec} as graph6"))?
    } else {
        CubicGraph::parse_adjacency_list(&text)
            .with_context(|| format!("parsing {spec} as an adjacency list"))?
    };
    let label = path.file_stem().map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((label, g))
}

pub fn write_graph(g: &CubicGraph, path: &Path) -> Result<()> {
    let text = if is_graph6(path) { g.to_graph6() + "\n" } else { g.to_adjacency_list() };
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn is_graph6(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6") | Some("graph6")
    )
}
