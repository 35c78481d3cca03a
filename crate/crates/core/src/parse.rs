//! Text formats: quadratic-form expressions, matrices, and rendering.
//!
//! Form grammar:
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := [coeff ['*']] var ('^2' | ['*'] var) | coeff
//! var   := 'x' | 'y' | 'z' | 'x' digits
//! coeff := integer | integer '/' positive-integer | decimal
//! ```
//!
//! A cross term `k·xᵢxⱼ` contributes `k/2` to both `aᵢⱼ` and `aⱼᵢ`, so
//! `ax² + 2bxy + cy²` parses to `[[a, b], [b, c]]`. The dimension is the
//! highest variable mentioned: `-y^2` is a binary form with `a = b = 0`.

use std::collections::BTreeMap;

use crate::certificates::SquareTerm;
use crate::error::{Error, ParseError, Result};
use crate::matrix::{RVector, SymMatrix};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Alphabet {
    Xyz,
    Indexed,
}

/// Variable names used when rendering an n-variable form: `x, y, z` up to
/// three variables, `x1 … xn` beyond.
pub fn variable_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

struct FormParser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    alphabet: Option<Alphabet>,
    /// (i, j) with i <= j, 0-based → full monomial coefficient
    monomials: BTreeMap<(usize, usize), Rational>,
    max_var: Option<usize>,
}

impl<'a> FormParser<'a> {
    fn new(src: &'a str) -> Self {
        FormParser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            alphabet: None,
            monomials: BTreeMap::new(),
            max_var: None,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn found(&self) -> String {
        match self.src[self.pos..].chars().next() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        }
    }

    fn syntax(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            expected: expected.to_string(),
            found: self.found(),
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn starts_coeff(c: u8) -> bool {
        c.is_ascii_digit() || c == b'.'
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let int = self.digits();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b'/' {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() || den.bytes().all(|b| b == b'0') {
                return Err(self.syntax("positive integer denominator"));
            }
        } else if self.pos < self.bytes.len() && self.bytes[self.pos] == b'.' {
            self.pos += 1;
            let frac = self.digits();
            if int.is_empty() && frac.is_empty() {
                return Err(self.syntax("digits"));
            }
        } else if int.is_empty() {
            return Err(self.syntax("coefficient"));
        }
        self.src[start..self.pos].parse()
    }

    fn var(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.bytes.get(self.pos) else {
            return Err(self.syntax("variable"));
        };
        if !c.is_ascii_alphabetic() {
            return Err(self.syntax("variable"));
        }
        self.pos += 1;
        let (alphabet, index) = match c {
            b'x' if self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) => {
                let d = self.digits();
                let name = format!("x{d}");
                match d.parse::<usize>() {
                    Ok(i) if i >= 1 => (Alphabet::Indexed, i - 1),
                    _ => return Err(ParseError::UnknownVariable { name, pos: start }),
                }
            }
            b'x' => (Alphabet::Xyz, 0),
            b'y' => (Alphabet::Xyz, 1),
            b'z' => (Alphabet::Xyz, 2),
            other => {
                return Err(ParseError::UnknownVariable {
                    name: (other as char).to_string(),
                    pos: start,
                })
            }
        };
        match self.alphabet {
            None => self.alphabet = Some(alphabet),
            Some(a) if a != alphabet => {
                return Err(ParseError::MixedAlphabet {
                    name: self.src[start..self.pos].to_string(),
                    pos: start,
                })
            }
            _ => {}
        }
        self.max_var = Some(self.max_var.map_or(index, |m| m.max(index)));
        Ok(index)
    }

    fn non_quadratic(&self, pos: usize, reason: &str) -> ParseError {
        ParseError::NonQuadraticTerm {
            pos,
            reason: reason.to_string(),
        }
    }

    /// Whether the next token continues a product (another factor).
    fn continues_product(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'*' || c == b'^' || c.is_ascii_alphabetic())
    }

    fn term(&mut self, sign: Rational) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff = Rational::one();
        match self.peek() {
            Some(c) if Self::starts_coeff(c) => {
                coeff = self.coeff()?;
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                    }
                    Some(c) if c.is_ascii_alphabetic() => {}
                    Some(b'^') => return Err(self.non_quadratic(start, "power of a constant")),
                    _ => return Err(self.non_quadratic(start, "constant term")),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.syntax("coefficient or variable")),
        }

        let first = self.var()?;
        let second = match self.peek() {
            Some(b'^') => {
                self.pos += 1;
                self.skip_ws();
                let exp_pos = self.pos;
                let exp = self.digits();
                if exp.is_empty() {
                    return Err(self.syntax("exponent"));
                }
                if exp != "2" {
                    return Err(self.non_quadratic(exp_pos, &format!("exponent {exp}")));
                }
                first
            }
            Some(b'*') => {
                self.pos += 1;
                self.var()?
            }
            Some(c) if c.is_ascii_alphabetic() => self.var()?,
            _ => return Err(self.non_quadratic(start, "linear term")),
        };
        if self.continues_product() {
            return Err(self.non_quadratic(start, "degree exceeds 2"));
        }

        let key = (first.min(second), first.max(second));
        *self.monomials.entry(key).or_insert_with(Rational::zero) += sign * coeff;
        Ok(())
    }

    fn expr(mut self) -> Result<SymMatrix, ParseError> {
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.syntax("a quadratic term")),
            _ => {}
        }
        self.term(sign)?;
        loop {
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    self.term(Rational::one())?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.term(-Rational::one())?;
                }
                Some(_) => return Err(self.syntax("`+` or `-`")),
            }
        }
        let n = self.max_var.expect("at least one term parsed") + 1;
        let half = Rational::new(1, 2);
        Ok(SymMatrix::from_fn(n, |i, j| match self.monomials.get(&(i, j)) {
            Some(c) if i == j => c.clone(),
            Some(c) => c * &half,
            None => Rational::zero(),
        }))
    }
}

/// Parses a quadratic-form expression into its symmetric matrix.
pub fn parse_form(text: &str) -> Result<SymMatrix> {
    Ok(FormParser::new(text).expr()?)
}

/// Parses rows separated by newlines or `;`, entries separated by
/// whitespace or `,`. Entries are integers, fractions or exact decimals.
pub fn parse_matrix(text: &str) -> Result<SymMatrix> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut row: Vec<Rational> = Vec::new();
    let mut token_start: Option<usize> = None;

    let flush = |start: &mut Option<usize>, end: usize, row: &mut Vec<Rational>| -> Result<()> {
        if let Some(s) = start.take() {
            let tok = &text[s..end];
            let v = tok.parse::<Rational>().map_err(|_| ParseError::Syntax {
                pos: s,
                expected: "number".into(),
                found: format!("`{tok}`"),
            })?;
            row.push(v);
        }
        Ok(())
    };

    for (i, c) in text.char_indices() {
        match c {
            '\n' | ';' => {
                flush(&mut token_start, i, &mut row)?;
                if !row.is_empty() {
                    rows.push(std::mem::take(&mut row));
                }
            }
            ',' => {
                flush(&mut token_start, i, &mut row)?;
            }
            c if c.is_whitespace() => flush(&mut token_start, i, &mut row)?,
            _ => {
                if token_start.is_none() {
                    token_start = Some(i);
                }
            }
        }
    }
    flush(&mut token_start, text.len(), &mut row)?;
    if !row.is_empty() {
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Syntax {
            pos: 0,
            expected: "matrix rows".into(),
            found: "end of input".into(),
        }
        .into());
    }
    match SymMatrix::new(rows) {
        Err(Error::EmptyMatrix) => unreachable!("rows checked nonempty"),
        other => other,
    }
}

/// Appends the sign separator for `c` and returns `|c|`.
fn push_signed(out: &mut String, c: &Rational) -> Rational {
    let first = out.is_empty();
    if c.is_negative() {
        out.push_str(if first { "-" } else { " - " });
    } else if !first {
        out.push_str(" + ");
    }
    c.abs()
}

/// Renders `x A xᵀ` with full cross coefficients (`2*x*y` for `a₁₂ = 1`).
/// The output parses back to the same matrix, including its dimension.
pub fn render_form(a: &SymMatrix) -> String {
    let n = a.dim();
    let names = variable_names(n);
    let two = Rational::from(2);
    let mut out = String::new();
    let mut last_seen = false;
    for i in 0..n {
        for j in i..n {
            let c = if i == j { a.get(i, i).clone() } else { a.get(i, j) * &two };
            if c.is_zero() {
                continue;
            }
            let mag = push_signed(&mut out, &c);
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            if i == j {
                out.push_str(&format!("{}^2", names[i]));
            } else {
                out.push_str(&format!("{}*{}", names[i], names[j]));
            }
            last_seen |= j == n - 1;
        }
    }
    if !last_seen {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&format!("0*{}^2", names[n - 1]));
    }
    out
}

/// Renders a linear form as `x + 1/2 y`.
pub fn render_linear_form(form: &RVector, names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in form.components().iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = push_signed(&mut out, c);
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders weighted squares as `2*(x + 1/2 y)^2 + 3/2*(y)^2`.
pub fn render_squares(terms: &[SquareTerm], n: usize) -> String {
    let names = variable_names(n);
    let mut out = String::new();
    for t in terms {
        let mag = push_signed(&mut out, &t.weight);
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&format!("({})^2", render_linear_form(&t.form, &names)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
