//! JSON element files.
//!
//! A file describes a list of symbol-algebra elements over one prime:
//!
//! ```json
//! {
//!   "p": 5,
//!   "elements": [
//!     {"terms": [{"x": 1, "y": 0, "alpha": 0, "beta": 0, "coeff": [1, 0, 0, 0]}]}
//!   ]
//! }
//! ```
//!
//! Each term contributes `coeff · x^x y^y α^alpha β^beta`, where `coeff`
//! lists the `p − 1` coordinates of a cyclotomic integer. Coordinates may
//! be JSON integers or decimal strings, so values of any magnitude
//! round-trip exactly.

use kummer_core::{AlgElement, CycInt, PrimeCtx};
use num_bigint::BigInt;
use serde::Deserialize;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Why an element file was rejected. Every variant is a data error
/// (exit code 65), never a usage error.
#[derive(Debug, Error)]
pub enum ElementFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid element file {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("element file declares p = {file_p} but the command requested p = {expected_p}")]
    PrimeMismatch { file_p: u32, expected_p: u32 },
    #[error(
        "element {element}, term {term}: coefficient array has length {found} \
         but must have length p - 1 = {expected}"
    )]
    CoefficientLength {
        element: usize,
        term: usize,
        found: usize,
        expected: usize,
    },
    #[error("element {element}, term {term}, coordinate {coordinate}: not a decimal integer")]
    CoefficientValue {
        element: usize,
        term: usize,
        coordinate: usize,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementFile {
    p: u32,
    elements: Vec<ElementSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementSpec {
    terms: Vec<TermSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermSpec {
    x: u32,
    y: u32,
    alpha: u32,
    beta: u32,
    coeff: Vec<CoeffEntry>,
}

/// One cyclotomic coordinate: a JSON integer for small values, or a
/// decimal string for values beyond the range of JSON numbers.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum CoeffEntry {
    Small(i64),
    Big(String),
}

impl CoeffEntry {
    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            CoeffEntry::Small(n) => Some(BigInt::from(*n)),
            CoeffEntry::Big(text) => BigInt::parse_bytes(text.trim().as_bytes(), 10),
        }
    }
}

/// Reads a list of algebra elements from `path`, validating the schema
/// against the expected prime context.
pub fn load_elements(path: &Path, ctx: PrimeCtx) -> Result<Vec<AlgElement>, ElementFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| ElementFileError::Io {
        path: path.to_owned(),
        source,
    })?;
    let file: ElementFile =
        serde_json::from_str(&text).map_err(|source| ElementFileError::Json {
            path: path.to_owned(),
            source,
        })?;
    if file.p != ctx.p() {
        return Err(ElementFileError::PrimeMismatch {
            file_p: file.p,
            expected_p: ctx.p(),
        });
    }
    let width = (ctx.p() - 1) as usize;
    let mut elements = Vec::with_capacity(file.elements.len());
    for (element, spec) in file.elements.iter().enumerate() {
        let mut value = AlgElement::zero(ctx);
        for (term, term_spec) in spec.terms.iter().enumerate() {
            if term_spec.coeff.len() != width {
                return Err(ElementFileError::CoefficientLength {
                    element,
                    term,
                    found: term_spec.coeff.len(),
                    expected: width,
                });
            }
            let mut coords = Vec::with_capacity(width);
            for (coordinate, entry) in term_spec.coeff.iter().enumerate() {
                coords.push(
                    entry
                        .to_bigint()
                        .ok_or(ElementFileError::CoefficientValue {
                            element,
                            term,
                            coordinate,
                        })?,
                );
            }
            value.add_raw_term(
                term_spec.x,
                term_spec.y,
                term_spec.alpha,
                term_spec.beta,
                CycInt::from_coords(ctx, coords),
            );
        }
        elements.push(value);
    }
    Ok(elements)
}
