use std::fs;
use std::io::Read;

use arbor::generators::GeneratorSpec;
use arbor::Graph;

use crate::error::CliError;

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

/// A graph from an edge-list file, `-` for stdin, or a `gen:<family>:<params>` spec.
pub fn load_graph(input: &str) -> Result<Graph, CliError> {
    if input.starts_with("gen:") {
        let spec: GeneratorSpec = input
            .parse()
            .map_err(|e: arbor::generators::GeneratorError| CliError::Usage(e.to_string()))?;
        return spec.generate().map_err(|e| CliError::Usage(e.to_string()));
    }
    let text = read_text(input)?;
    Graph::parse_edge_list(&text).map_err(|e| CliError::Parse(format!("{input}: {e}")))
}

/// Accepts `family:params`, `gen:family:params`, or a family with its
/// parameters as a separate argument.
pub fn generator_spec(family: &str, params: Option<&str>) -> Result<GeneratorSpec, CliError> {
    let text = match params {
        Some(p) => format!("{}:{p}", family.trim_start_matches("gen:")),
        None => family.to_string(),
    };
    text.parse()
        .map_err(|e: arbor::generators::GeneratorError| CliError::Usage(e.to_string()))
}
