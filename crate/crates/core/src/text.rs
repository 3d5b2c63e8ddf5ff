//! The plain-text matrix format shared by every command:
//!
//! ```text
//! q k n
//! a11 a12 ... a1n
//! ...
//! ak1 ak2 ... akn
//! ```
//!
//! `q` is written `p^m` or as a plain integer. Entries are canonical integer
//! encodings of field elements. Text after `#` is a comment; blank lines are
//! ignored.

use thiserror::Error;

use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

// (1-based column, token)
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_matrix(input: &str) -> Result<Matrix, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let htoks = tokens(header);
    if htoks.len() != 3 {
        return Err(err(
            hline,
            1,
            format!("header must be `q k n`, found {} fields", htoks.len()),
        ));
    }
    let field = Field::parse(htoks[0].1).map_err(|e| err(hline, htoks[0].0, e.to_string()))?;
    let parse_dim = |(col, tok): (usize, &str)| {
        tok.parse::<usize>()
            .map_err(|_| err(hline, col, format!("`{tok}` is not a dimension")))
    };
    let k = parse_dim(htoks[1])?;
    let n = parse_dim(htoks[2])?;

    if n == 0 {
        // rows of a length-zero code are empty lines
        if let Some((lno, _)) = lines.next() {
            return Err(err(lno, 1, "expected no entries for n = 0"));
        }
        return Ok(Matrix::zeros(&field, k, 0));
    }
    let mut rows = Vec::with_capacity(k);
    let mut last_line = hline;
    for (lno, line) in lines {
        last_line = lno;
        if rows.len() == k {
            return Err(err(lno, 1, format!("expected {k} rows, found more")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            return Err(err(lno, 1, format!("expected {n} entries, found {}", toks.len())));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            let v: u64 = tok
                .parse()
                .map_err(|_| err(lno, col, format!("`{tok}` is not a field element")))?;
            row.push(field.elem(v).map_err(|e| err(lno, col, e.to_string()))?);
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(err(
            last_line + 1,
            1,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    Matrix::from_rows(&field, n, rows).map_err(|e| err(hline, 1, e.to_string()))
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {} {}\n", m.field(), m.rows(), m.cols());
    for row in m.iter_rows() {
        let vals: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&vals.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use proptest::prelude::*;

    #[test]
    fn parses_extension_header() {
        let m = parse_matrix("2^2 1 3\n0 1 3\n").unwrap();
        assert_eq!(m.field(), &make_field(2, 2).unwrap());
        assert_eq!(m.to_values(), vec![vec![0, 1, 3]]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let m = parse_matrix("# repetition code\n\n2 1 2\n1 1\n").unwrap();
        assert_eq!(m.to_values(), vec![vec![1, 1]]);
        let m = parse_matrix("2 1 2 # q k n\n1 1#\n  # trailing\n").unwrap();
        assert_eq!(m.to_values(), vec![vec![1, 1]]);
    }

    #[test]
    fn reports_positions() {
        let e = parse_matrix("3 1 3\n0 1 7\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_matrix("6 1 1\n1\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_matrix("2 2 2\n1 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_matrix("2 1 2\n1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_matrix("2 1 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(parse_matrix("").is_err());
    }

    proptest! {
        #[test]
        fn write_then_parse(q in prop_oneof![Just(2u64), Just(9), Just(7)], rows in 0usize..5, cols in 0usize..7, seed in any::<u64>()) {
            let f = Field::with_order(q).unwrap();
            let vals: Vec<Vec<u32>> = (0..rows)
                .map(|r| (0..cols).map(|c| ((seed >> ((r * 7 + c) % 60)) % q) as u32).collect())
                .collect();
            let m = if rows == 0 { Matrix::zeros(&f, 0, cols) } else { Matrix::from_values(&f, &vals).unwrap() };
            prop_assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
        }
    }
}
