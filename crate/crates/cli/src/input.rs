//! Matrix input: inline JSON, JSON files, and CSV files.

use std::fs;
use std::path::Path;

use semiwedge_core::{Endomorphism, Semiring};

/// Loads a matrix from the `--matrix` argument.
///
/// A value whose first non-whitespace character is `[` or `{` is parsed as
/// inline JSON; anything else is treated as a file path. File contents are
/// sniffed the same way: JSON if they start with `[` or `{`, CSV otherwise.
pub fn load_matrix<S: Semiring>(source: &str) -> Result<Endomorphism<S>, String> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        parse_json_matrix(source, "inline matrix")
    } else {
        let path = Path::new(source);
        let text = fs::read_to_string(path)
            .map_err(|err| format!("cannot read matrix file `{source}`: {err}"))?;
        let body = text.trim_start();
        if body.starts_with('[') || body.starts_with('{') {
            parse_json_matrix(&text, source)
        } else {
            Endomorphism::from_csv(&text).map_err(|err| format!("matrix file `{source}`: {err}"))
        }
    }
}

fn parse_json_matrix<S: Semiring>(text: &str, label: &str) -> Result<Endomorphism<S>, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|err| format!("{label} is not valid JSON: {err}"))?;
    Endomorphism::from_json(&value).map_err(|err| format!("{label}: {err}"))
}
