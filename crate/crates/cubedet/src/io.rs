//! Text and JSON serialization of cubic matrices.
//!
//! # Text format
//!
//! ```text
//! document   := order-line block{n}
//! order-line := "order" WS natural EOL
//! block      := row{n}            ; block t holds vertical layer k = t
//! row        := scalar (WS scalar){n-1} EOL   ; row r holds horizontal layer i = r
//! ```
//!
//! `#` starts a comment running to end of line. Blank lines are decoration:
//! canonical output separates blocks with exactly one, but any number is
//! accepted anywhere. Column `c` of a row holds vertical page `j = c`.
//!
//! Scalar literals depend on the active tower: integers like `-7` (int),
//! fractions like `3/4` or integers (rational), standard decimal notation
//! (f64). A numeric-looking token that the active tower cannot represent is
//! a [`ParseError::TowerMismatch`], not a syntax error.
//!
//! Canonical emission uses single spaces, one blank line between blocks, LF
//! line endings and a trailing newline, so emitted documents are byte-stable
//! across platforms and `parse(emit(a)) == a` in the exact towers.
//!
//! # JSON format
//!
//! ```text
//! {"order": n, "layers": [grid_1, ..., grid_n]}
//! ```
//!
//! where `grid_t` is the n x n row-major grid for vertical layer `k = t`
//! (`grid[i-1][j-1]`). Int entries are JSON integers, f64 entries JSON
//! numbers; rationals are JSON integers when whole and strings `"p/q"`
//! otherwise. Emission is the compact serde_json encoding plus a trailing
//! newline.

use std::fmt;

use crate::matrix::CubicMatrix;
use crate::scalar::{LiteralError, Scalar};

/// Parsing failures, with 1-based positions for text input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed token or structure at a known position.
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    /// Counts do not match the declared order.
    Shape { detail: String },
    /// A numeric literal the active tower cannot represent.
    TowerMismatch {
        position: String,
        literal: String,
        tower: &'static str,
    },
    /// The input is not well-formed JSON.
    Json { detail: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                line,
                column,
                expected,
            } => write!(f, "line {line}, column {column}: expected {expected}"),
            ParseError::Shape { detail } => write!(f, "shape error: {detail}"),
            ParseError::TowerMismatch {
                position,
                literal,
                tower,
            } => write!(
                f,
                "{position}: literal '{literal}' is not representable in the {tower} tower"
            ),
            ParseError::Json { detail } => write!(f, "invalid JSON: {detail}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Splits one line into `(1-based char column, token)` pairs, honoring `#`
/// comments.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut col = 0usize;
    let mut start: Option<(usize, usize)> = None;
    for (byte_idx, ch) in line.char_indices() {
        col += 1;
        if ch == '#' {
            if let Some((c0, b0)) = start.take() {
                out.push((c0, &line[b0..byte_idx]));
            }
            return out;
        }
        if ch.is_whitespace() {
            if let Some((c0, b0)) = start.take() {
                out.push((c0, &line[b0..byte_idx]));
            }
        } else if start.is_none() {
            start = Some((col, byte_idx));
        }
    }
    if let Some((c0, b0)) = start {
        out.push((c0, &line[b0..]));
    }
    out
}

fn parse_entry<S: Scalar>(token: &str, line: usize, column: usize) -> Result<S, ParseError> {
    S::parse_literal(token).map_err(|e| match e {
        LiteralError::Malformed => ParseError::Syntax {
            line,
            column,
            expected: format!("a {} scalar literal", S::TOWER),
        },
        LiteralError::TowerMismatch => ParseError::TowerMismatch {
            position: format!("line {line}, column {column}"),
            literal: token.to_string(),
            tower: S::TOWER,
        },
    })
}

/// Parses the text format into a matrix over the requested tower.
pub fn parse_text<S: Scalar>(input: &str) -> Result<CubicMatrix<S>, ParseError> {
    let mut rows: Vec<(usize, Vec<(usize, &str)>)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let tokens = tokenize(raw);
        if !tokens.is_empty() {
            rows.push((idx + 1, tokens));
        }
    }

    let Some((header_line, header)) = rows.first() else {
        return Err(ParseError::Syntax {
            line: 1,
            column: 1,
            expected: "'order <n>' header".into(),
        });
    };
    let (kw_col, kw) = header[0];
    if kw != "order" {
        return Err(ParseError::Syntax {
            line: *header_line,
            column: kw_col,
            expected: "keyword 'order'".into(),
        });
    }
    let Some(&(ord_col, ord_tok)) = header.get(1) else {
        return Err(ParseError::Syntax {
            line: *header_line,
            column: kw_col + kw.chars().count() + 1,
            expected: "matrix order after 'order'".into(),
        });
    };
    let order: usize = ord_tok.parse().map_err(|_| ParseError::Syntax {
        line: *header_line,
        column: ord_col,
        expected: "a positive integer order".into(),
    })?;
    if order == 0 {
        return Err(ParseError::Shape {
            detail: "order must be at least 1".into(),
        });
    }
    if let Some(&(extra_col, _)) = header.get(2) {
        return Err(ParseError::Syntax {
            line: *header_line,
            column: extra_col,
            expected: "end of line after the order".into(),
        });
    }

    let data = &rows[1..];
    let expected_rows = order * order;
    if data.len() != expected_rows {
        return Err(ParseError::Shape {
            detail: format!(
                "order {order} needs {expected_rows} rows ({order} blocks of {order}), found {}",
                data.len()
            ),
        });
    }

    let mut entries = Vec::with_capacity(order * order * order);
    for (line_no, tokens) in data {
        if tokens.len() != order {
            return Err(ParseError::Shape {
                detail: format!(
                    "line {line_no}: expected {order} entries in the row, found {}",
                    tokens.len()
                ),
            });
        }
        for &(col, tok) in tokens {
            entries.push(parse_entry::<S>(tok, *line_no, col)?);
        }
    }

    CubicMatrix::new(order, entries).map_err(|e| ParseError::Shape {
        detail: e.to_string(),
    })
}

/// Canonical text form; see the module docs for the exact byte layout.
pub fn emit_text<S: Scalar>(a: &CubicMatrix<S>) -> String {
    let n = a.order();
    let mut out = format!("order {n}\n");
    for k in 1..=n {
        if k > 1 {
            out.push('\n');
        }
        for i in 1..=n {
            for j in 1..=n {
                if j > 1 {
                    out.push(' ');
                }
                out.push_str(&a.entry(i, j, k).to_string());
            }
            out.push('\n');
        }
    }
    out
}

/// Parses the JSON format into a matrix over the requested tower.
pub fn parse_json<S: Scalar>(input: &str) -> Result<CubicMatrix<S>, ParseError> {
    let value: serde_json::Value = serde_json::from_str(input).map_err(|e| ParseError::Json {
        detail: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| ParseError::Shape {
        detail: "top level must be an object".into(),
    })?;
    let order = obj
        .get("order")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| ParseError::Shape {
            detail: "missing or non-integer \"order\"".into(),
        })? as usize;
    if order == 0 {
        return Err(ParseError::Shape {
            detail: "order must be at least 1".into(),
        });
    }
    let layers = obj
        .get("layers")
        .and_then(|v| v.as_array())
        .ok_or_else(|| ParseError::Shape {
            detail: "missing \"layers\" array".into(),
        })?;
    if layers.len() != order {
        return Err(ParseError::Shape {
            detail: format!("expected {order} layers, found {}", layers.len()),
        });
    }

    let mut entries = Vec::with_capacity(order * order * order);
    for (kz, layer) in layers.iter().enumerate() {
        let grid = layer.as_array().ok_or_else(|| ParseError::Shape {
            detail: format!("layers[{kz}] must be an array of rows"),
        })?;
        if grid.len() != order {
            return Err(ParseError::Shape {
                detail: format!("layers[{kz}]: expected {order} rows, found {}", grid.len()),
            });
        }
        for (iz, row) in grid.iter().enumerate() {
            let cells = row.as_array().ok_or_else(|| ParseError::Shape {
                detail: format!("layers[{kz}][{iz}] must be an array of scalars"),
            })?;
            if cells.len() != order {
                return Err(ParseError::Shape {
                    detail: format!(
                        "layers[{kz}][{iz}]: expected {order} entries, found {}",
                        cells.len()
                    ),
                });
            }
            for (jz, cell) in cells.iter().enumerate() {
                let v = S::from_json_value(cell).map_err(|e| match e {
                    LiteralError::Malformed => ParseError::Shape {
                        detail: format!(
                            "layers[{kz}][{iz}][{jz}]: expected a {} scalar, found {cell}",
                            S::TOWER
                        ),
                    },
                    LiteralError::TowerMismatch => ParseError::TowerMismatch {
                        position: format!("layers[{kz}][{iz}][{jz}]"),
                        literal: cell.to_string(),
                        tower: S::TOWER,
                    },
                })?;
                entries.push(v);
            }
        }
    }

    CubicMatrix::new(order, entries).map_err(|e| ParseError::Shape {
        detail: e.to_string(),
    })
}

/// Canonical JSON form: compact encoding plus a trailing newline.
pub fn emit_json<S: Scalar>(a: &CubicMatrix<S>) -> String {
    let n = a.order();
    let layers: Vec<serde_json::Value> = (1..=n)
        .map(|k| {
            let grid: Vec<serde_json::Value> = (1..=n)
                .map(|i| {
                    let row: Vec<serde_json::Value> =
                        (1..=n).map(|j| a.entry(i, j, k).to_json_value()).collect();
                    serde_json::Value::from(row)
                })
                .collect();
            serde_json::Value::from(grid)
        })
        .collect();
    let doc = serde_json::json!({ "order": n, "layers": layers });
    let mut out = doc.to_string();
    out.push('\n');
    out
}
