//! Comma-separated sequence and set arguments.

use mirrorgraph::{DegreeSequence, DegreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("token {position} ({token:?}) is not a nonnegative integer")]
    NotInteger { position: usize, token: String },
    #[error("token {position} is 0; set elements must be positive")]
    Zero { position: usize },
    #[error("token {position} repeats the value {value}; set elements must be distinct")]
    Duplicate { position: usize, value: usize },
    #[error("a degree set needs at least one element")]
    EmptySet,
}

/// A parsed sequence, plus a warning when the input was not non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSequence {
    pub sequence: DegreeSequence,
    pub warning: Option<String>,
}

fn tokens(text: &str) -> Result<Vec<usize>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            tok.parse().map_err(|_| ParseError::NotInteger {
                position: i + 1,
                token: tok.to_string(),
            })
        })
        .collect()
}

/// Parses `"4,3,2,1"`. Out-of-order input is sorted non-increasing and a
/// warning is returned. Empty text is the empty sequence.
pub fn parse_sequence(text: &str) -> Result<ParsedSequence, ParseError> {
    let values = tokens(text)?;
    let sequence = DegreeSequence::sorted(values.clone());
    let warning =
        (sequence.as_slice() != values.as_slice()).then(|| format!("input sequence reordered to {sequence}"));
    Ok(ParsedSequence { sequence, warning })
}

/// Parses `"3,1"` into a degree set. Order is free; zeros and repeats are
/// rejected.
pub fn parse_set(text: &str) -> Result<DegreeSet, ParseError> {
    let values = tokens(text)?;
    if values.is_empty() {
        return Err(ParseError::EmptySet);
    }
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            return Err(ParseError::Zero { position: i + 1 });
        }
        if values[..i].contains(&v) {
            return Err(ParseError::Duplicate {
                position: i + 1,
                value: v,
            });
        }
    }
    Ok(DegreeSet::from_unsorted(values).expect("validated above"))
}
