//! Text formats: element tokens, dense matrices and edge lists.
//!
//! Matrix files start with a `rows cols` header followed by one line per
//! row. Edge lists start with `nodes arcs` followed by `i j w` lines using
//! 1-based node indices. Blank lines and lines starting with `#` are
//! ignored by both readers.

use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::matrix::Matrix;
use crate::semiring::Semiring;

pub(crate) fn parse_f64_token(token: &str) -> Result<f64> {
    let x = match token {
        "inf" | "+inf" | "infinity" | "+infinity" => f64::INFINITY,
        "-inf" | "-infinity" => f64::NEG_INFINITY,
        _ => token.parse::<f64>().map_err(|_| Error::Parse(format!("bad number `{token}`")))?,
    };
    if x.is_nan() {
        return Err(Error::Parse(format!("bad number `{token}`")));
    }
    Ok(x)
}

/// Shortest decimal that round-trips, with `inf`/`-inf` tokens.
pub fn format_shortest(x: f64) -> String {
    format!("{x}")
}

/// `%.17g`: 17 significant digits, trailing zeros removed.
pub fn format_g17(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if !(-4..17).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: Option<(usize, &str)>, what: &str) -> Result<(usize, usize)> {
    let (lineno, line) = line.ok_or_else(|| Error::Parse(format!("empty {what} file")))?;
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse(format!("line {lineno}: expected `<count> <count>` header"));
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}

pub fn parse_matrix<S: Semiring>(s: &S, text: &str) -> Result<Matrix<S::Elem>> {
    let mut lines = content_lines(text);
    let (rows, cols) = parse_header(lines.next(), "matrix")?;
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (lineno, line) = lines.next().ok_or_else(|| Error::Parse(format!("expected {rows} rows, found {r}")))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(Error::Parse(format!("line {lineno}: expected {cols} entries, found {}", tokens.len())));
        }
        for t in tokens {
            data.push(s.parse_elem(t)?);
        }
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse(format!("line {lineno}: trailing content after matrix")));
    }
    Matrix::from_vec(rows, cols, data)
}

pub fn format_matrix<S: Semiring>(s: &S, m: &Matrix<S::Elem>) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| s.format_elem(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads a vector stored as an `n × 1` or `1 × n` matrix.
pub fn parse_vector<S: Semiring>(s: &S, text: &str) -> Result<Vec<S::Elem>> {
    let m = parse_matrix(s, text)?;
    if m.cols() == 1 || m.rows() == 1 {
        Ok(m.into_vec())
    } else {
        Err(Error::ShapeMismatch(format!("expected a vector, found a {}x{} matrix", m.rows(), m.cols())))
    }
}

/// Writes a vector as an `n × 1` matrix.
pub fn format_vector<S: Semiring>(s: &S, v: &[S::Elem]) -> String {
    format_matrix(s, &Matrix::column(v.to_vec()))
}

pub fn parse_edge_list<S: Semiring + Clone>(s: &S, text: &str) -> Result<WeightedDigraph<S>> {
    let mut lines = content_lines(text);
    let (n, m) = parse_header(lines.next(), "edge list")?;
    let mut g = WeightedDigraph::new(s.clone(), n);
    for k in 0..m {
        let (lineno, line) = lines.next().ok_or_else(|| Error::Parse(format!("expected {m} arcs, found {k}")))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!("line {lineno}: expected `i j w`")));
        }
        let index = |f: &str| -> Result<usize> {
            let i: usize = f.parse().map_err(|_| Error::Parse(format!("line {lineno}: bad node index `{f}`")))?;
            if i == 0 || i > n {
                return Err(Error::Parse(format!("line {lineno}: node {i} outside 1..={n}")));
            }
            Ok(i - 1)
        };
        let (i, j) = (index(fields[0])?, index(fields[1])?);
        g.add_arc(i, j, s.parse_elem(fields[2])?);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse(format!("line {lineno}: trailing content after arcs")));
    }
    Ok(g)
}

pub fn format_edge_list<S: Semiring>(g: &WeightedDigraph<S>) -> String {
    let mut out = format!("{} {}\n", g.node_count(), g.arcs().len());
    for arc in g.arcs() {
        out.push_str(&format!("{} {} {}\n", arc.source + 1, arc.target + 1, g.semiring().format_elem(&arc.weight)));
    }
    out
}
