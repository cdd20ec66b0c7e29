//! Reading code inputs: preset names, function files and matrix files.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use minicode_core::code::{self, DefiningSet};
use minicode_core::families::{self, FunctionSpec, PRESET_NAMES};
use minicode_core::{Error, Matrix};

pub enum Input {
    Function { name: String, spec: FunctionSpec },
    /// A defining set read from a matrix file.
    Set { name: String, d: DefiningSet },
}

impl Input {
    /// A preset name, a function file (`q m variant` header) or a matrix
    /// file (`q columns rows` header). Matrix files hold the vectors of D as
    /// rows unless `generator` is set, in which case they hold a k x n
    /// generator matrix.
    pub fn load(input: &str, generator: bool) -> Result<Input> {
        if PRESET_NAMES.contains(&input) && !Path::new(input).exists() {
            let p = families::preset(input)?;
            return Ok(Input::Function {
                name: p.name.to_string(),
                spec: p.spec,
            });
        }
        let path = Path::new(input);
        let text = fs::read_to_string(path).with_context(|| {
            format!("`{input}` is neither a preset nor a readable file (presets: {})", PRESET_NAMES.join(", "))
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "code".to_string());
        if is_matrix(&text) {
            let (field, m) = Matrix::parse_text(&text).with_context(|| format!("reading {input}"))?;
            let d = if generator {
                DefiningSet::from_generator(field, &m)?
            } else {
                DefiningSet::from_matrix(field, m)?
            };
            Ok(Input::Set { name, d })
        } else {
            if generator {
                bail!("--generator applies to matrix files, `{input}` holds a function");
            }
            let spec = FunctionSpec::parse_text(&text).with_context(|| format!("reading {input}"))?;
            Ok(Input::Function { name, spec })
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Input::Function { name, .. } | Input::Set { name, .. } => name,
        }
    }

    pub fn function(&self) -> Option<&FunctionSpec> {
        match self {
            Input::Function { spec, .. } => Some(spec),
            Input::Set { .. } => None,
        }
    }

    /// D_f for a function, refusing linear f since C_f then loses a dimension.
    pub fn defining_set(&self) -> Result<DefiningSet> {
        match self {
            Input::Function { spec, .. } => {
                if let Some(omega) = code::linearity_check(spec)? {
                    return Err(Error::LinearFunction(omega.values()).into());
                }
                Ok(code::defining_set(spec)?)
            }
            Input::Set { d, .. } => Ok(d.clone()),
        }
    }
}

/// Matrix headers are three integers; function headers end in a variant name.
fn is_matrix(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|h| h.split_whitespace().all(|t| t.parse::<u32>().is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_detection() {
        assert!(is_matrix("# comment\n3 5 2\n1 0 0 0 0\n0 1 0 0 0\n"));
        assert!(!is_matrix("2 3 table\n0 1 1 0 1 0 0 1\n"));
        assert!(!is_matrix(""));
    }

    #[test]
    fn presets_load_by_name() {
        let input = Input::load("sec5_f2", false).unwrap();
        assert_eq!(input.name(), "sec5_f2");
        let d = input.defining_set().unwrap();
        assert_eq!((d.n(), d.k()), (31, 6));
    }
}
