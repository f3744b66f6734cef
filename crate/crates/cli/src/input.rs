use std::io::Read;
use std::path::Path;

use mixlens::{Error, LensFamilySpec, MixedPoly};
use serde_json::Value;

/// A polynomial read from the command line, with the family it came from when
/// the input records one.
pub struct Input {
    pub source: String,
    pub poly: MixedPoly,
    pub family: Option<LensFamilySpec>,
}

/// Reads a file, or standard input for `None` and `-`.
pub fn read_source(path: Option<&Path>) -> Result<(String, String), Error> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map(|text| (p.display().to_string(), text))
            .map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            Ok(("stdin".into(), text))
        }
    }
}

/// Accepts a bare polynomial JSON, a report carrying a `polynomial` field, or
/// the text form `(re,im) z^nu zb^mu + ...`.
pub fn parse_input(source: String, text: &str) -> Result<Input, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse(format!("{source}: empty input")));
    }
    if !trimmed.starts_with('{') {
        let poly = trimmed.parse()?;
        return Ok(Input { source, poly, family: None });
    }
    let value: Value = serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    let family = value
        .get("family")
        .filter(|v| !v.is_null())
        .map(|v| serde_json::from_value::<LensFamilySpec>(v.clone()))
        .transpose()
        .map_err(|e| Error::Parse(format!("{source}: family: {e}")))?;
    let poly_value = if value.get("terms").is_some() {
        value
    } else if let Some(p) = value.get("polynomial") {
        p.clone()
    } else {
        return Err(Error::Parse(format!("{source}: expected `terms` or `polynomial`")));
    };
    let poly = serde_json::from_value(poly_value).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    Ok(Input { source, poly, family })
}

pub fn read_input(path: Option<&Path>) -> Result<Input, Error> {
    let (source, text) = read_source(path)?;
    parse_input(source, &text)
}
