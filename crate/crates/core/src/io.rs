//! Text formats for matrices and graphs.
//!
//! Both formats start with a size line. Blank lines and lines whose first
//! non-space character is `#` are skipped everywhere.

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::matrix::SymmetricMatrix;

// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_token<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("malformed {what} '{tok}'"),
    })
}

fn parse_size<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, usize)> {
    let (line, text) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing size line".into(),
    })?;
    let mut toks = text.split_whitespace();
    let n: usize = parse_token(line, toks.next().unwrap_or(""), "size")?;
    if let Some(extra) = toks.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected token '{extra}' after size"),
        });
    }
    Ok((line, n))
}

/// `n`, then `n` rows of `n` decimals. Symmetry must hold exactly.
pub fn parse_matrix(text: &str) -> Result<SymmetricMatrix> {
    let mut lines = content_lines(text);
    let (size_line, n) = parse_size(&mut lines)?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = size_line;
    for (line, text) in lines.by_ref().take(n) {
        let row = text
            .split_whitespace()
            .map(|t| parse_token::<f64>(line, t, "number"))
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                message: format!("expected {n} entries, got {}", row.len()),
            });
        }
        rows.push(row);
        last = line;
    }
    if rows.len() != n {
        return Err(Error::Parse {
            line: last,
            message: format!("expected {n} rows, got {}", rows.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected content after {n} rows"),
        });
    }
    SymmetricMatrix::from_rows_exact(&rows)
}

/// `n`, then one `u v` edge per line with `0 <= u < v < n`.
pub fn parse_graph(text: &str) -> Result<UndirectedGraph> {
    let mut lines = content_lines(text);
    let (_, n) = parse_size(&mut lines)?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut g = UndirectedGraph::new(n);
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected 'u v', got '{text}'"),
            });
        }
        let u: usize = parse_token(line, toks[0], "vertex")?;
        let v: usize = parse_token(line, toks[1], "vertex")?;
        if u > v {
            return Err(Error::Parse {
                line,
                message: format!("edge endpoints must satisfy u < v, got {u} {v}"),
            });
        }
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}

/// Significant digits of every number written by [`format_number`].
pub const SIGNIFICANT_DIGITS: usize = 12;

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `v` rounded to 12 significant digits, in the shortest of fixed or
/// exponent notation (like C's `%.12g`).
pub fn format_number(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.into();
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(10.0 / 3.0), "3.33333333333");
        assert_eq!(format_number(-2.5), "-2.5");
        assert_eq!(format_number(1234567.0), "1234567");
        assert_eq!(format_number(1e15), "1e15");
        assert_eq!(format_number(1.5e-7), "1.5e-7");
        assert_eq!(format_number(0.000123), "0.000123");
        assert_eq!(format_number(999999999999.9), "1e12");
        assert_eq!(format_number(f64::NEG_INFINITY), "-inf");
        assert_eq!(format_number(2f64.sqrt()), "1.41421356237");
    }

    #[test]
    fn matrix_examples() {
        let a = parse_matrix("3\n6 5 5\n5 6 5\n5 5 6\n").unwrap();
        assert_eq!(a, SymmetricMatrix::from_rows(&[[6.0, 5.0, 5.0], [5.0, 6.0, 5.0], [5.0, 5.0, 6.0]]).unwrap());
        let one = parse_matrix("1\n7\n").unwrap();
        assert_eq!((one.dim(), one.get(0, 0)), (1, 7.0));
        assert!(matches!(parse_matrix("2\n1 2\n3 1\n"), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn matrix_comments_and_blanks() {
        let a = parse_matrix("# header\n2\n\n  # row comment\n1 -0.5\n-0.5 2e0\n").unwrap();
        assert_eq!(a.get(0, 1), -0.5);
    }

    #[test]
    fn matrix_errors() {
        assert!(matches!(parse_matrix(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix("2\n1 2\n2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("2\n1 2\n2 abc\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("2\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("1\n1\n2\n"), Err(Error::Parse { line: 3, .. })));
        assert_eq!(parse_matrix("0\n"), Err(Error::EmptyMatrix));
        assert!(parse_matrix("1\nnan\n").is_err());
    }

    #[test]
    fn graph_examples() {
        let g = parse_graph("3\n0 1\n# c\n1 2\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_graph("2\n").unwrap().edge_count(), 0);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3\n0 1\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3\n2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3\n0 -1\n"), Err(Error::Parse { line: 2, .. })));
    }
}
