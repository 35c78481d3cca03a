use std::fs;
use std::io::{self, Read};
use std::path::Path;

use sylvester::{parse_form, parse_matrix, SymMatrix};

/// One input item as given by the user, before parsing.
#[derive(Clone, Debug)]
pub enum Source {
    Matrix(String),
    Form(String),
    /// File or stdin contents; a form if it contains any letter, else a matrix.
    Auto(String),
}

impl Source {
    pub fn text(&self) -> &str {
        match self {
            Source::Matrix(t) | Source::Form(t) | Source::Auto(t) => t,
        }
    }

    pub fn parse(&self) -> sylvester::Result<SymMatrix> {
        match self {
            Source::Matrix(t) => parse_matrix(t),
            Source::Form(t) => parse_form(t),
            Source::Auto(t) if t.chars().any(|c| c.is_ascii_alphabetic()) => parse_form(t),
            Source::Auto(t) => parse_matrix(t),
        }
    }
}

pub fn read_path(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        read_stdin()
    } else {
        fs::read_to_string(path)
    }
}

pub fn read_stdin() -> io::Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

/// Batch files hold one input per line; blank lines and `#` comments are
/// skipped. Matrices use `;` between rows.
pub fn batch_items(text: &str) -> Vec<Source> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Source::Auto(l.to_string()))
        .collect()
}
