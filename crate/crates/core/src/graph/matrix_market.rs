use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::{Graph, RawEdge};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Pattern,
    Integer,
    Real,
}

/// Loads a MatrixMarket coordinate file as an undirected graph.
///
/// Indices are 1-based in the file. Both `general` and `symmetric` inputs are
/// symmetrized; `pattern` entries get weight 1.0. Vertices declared by the size
/// line but absent from every entry are kept as isolated vertices.
pub fn load_matrix_market(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_matrix_market(BufReader::new(file))
}

pub fn parse_matrix_market<R: BufRead>(reader: R) -> Result<Graph> {
    let mut lines = reader.lines().enumerate();

    let header = match lines.next() {
        Some((_, line)) => line?,
        None => return Err(Error::MalformedHeader("empty input".into())),
    };
    let field = parse_header(&header)?;

    let mut size = None;
    let mut raw = Vec::new();
    for (k, line) in lines {
        let line = line?;
        let line_no = k + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('%') {
            continue;
        }
        let mut tokens = text.split_ascii_whitespace();
        let Some((n, nnz)) = size else {
            let mut dims = [0usize; 3];
            for d in &mut dims {
                *d = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::MalformedHeader(format!("bad size line `{text}`")))?;
            }
            let n = dims[0].max(dims[1]);
            if n == 0 {
                return Err(Error::EmptyGraph);
            }
            if n > u32::MAX as usize {
                return Err(Error::MalformedHeader(format!(
                    "{n} vertices exceed 32-bit ids"
                )));
            }
            size = Some((n, dims[2]));
            raw.reserve(dims[2]);
            continue;
        };

        let parse_index = |token: Option<&str>| -> Result<u32> {
            let token = token.ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected `row col [value]`".into(),
            })?;
            let index: i64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid index `{token}`"),
            })?;
            if index < 1 || index as usize > n {
                return Err(Error::IndexOutOfRange {
                    line: line_no,
                    index,
                    max: n,
                });
            }
            Ok((index - 1) as u32)
        };
        let u = parse_index(tokens.next())?;
        let v = parse_index(tokens.next())?;
        let w = match field {
            Field::Pattern => 1.0,
            Field::Integer | Field::Real => {
                let token = tokens.next().ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "missing value".into(),
                })?;
                token.parse::<f64>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid value `{token}`"),
                })?
            }
        };
        if raw.len() == nnz {
            return Err(Error::Parse {
                line: line_no,
                message: format!("more than the declared {nnz} entries"),
            });
        }
        raw.push(RawEdge {
            u,
            v,
            w,
            line: line_no,
        });
    }

    let (n, nnz) = size.ok_or_else(|| Error::MalformedHeader("missing size line".into()))?;
    if raw.len() != nnz {
        return Err(Error::Parse {
            line: 0,
            message: format!("declared {nnz} entries, found {}", raw.len()),
        });
    }
    Graph::symmetrize(n, raw)
}

fn parse_header(header: &str) -> Result<Field> {
    let tokens: Vec<String> = header
        .split_ascii_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    let malformed = || Error::MalformedHeader(header.to_string());
    if tokens.len() != 5
        || tokens[0] != "%%matrixmarket"
        || tokens[1] != "matrix"
        || tokens[2] != "coordinate"
    {
        return Err(malformed());
    }
    let field = match tokens[3].as_str() {
        "pattern" => Field::Pattern,
        "integer" => Field::Integer,
        "real" | "double" => Field::Real,
        _ => return Err(malformed()),
    };
    match tokens[4].as_str() {
        "general" | "symmetric" => Ok(field),
        _ => Err(malformed()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Graph> {
        parse_matrix_market(text.as_bytes())
    }

    #[test]
    fn path_graph_pattern() {
        let g = parse("%%MatrixMarket matrix coordinate pattern symmetric\n4 4 3\n1 2\n2 3\n3 4\n")
            .unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_arcs(), 6);
        assert!(g.weights().iter().all(|&w| w == 1.0));
        assert_eq!(g.total_weight(), 6.0);
    }

    #[test]
    fn general_reciprocal_pair_is_not_doubled() {
        let g = parse(
            "%%MatrixMarket matrix coordinate real general\n% comment\n2 2 2\n1 2 5.0\n2 1 5.0\n",
        )
        .unwrap();
        assert_eq!(g.num_arcs(), 2);
        assert_eq!(g.weights(), &[5.0, 5.0]);
    }

    #[test]
    fn triangle_total_weight() {
        let g =
            parse("%%MatrixMarket matrix coordinate integer general\n3 3 3\n1 2 1\n2 3 1\n3 1 1\n")
                .unwrap();
        assert_eq!(g.total_weight(), 6.0);
        assert_eq!(g.m(), 3.0);
    }

    #[test]
    fn isolated_and_self_loops_survive() {
        let g = parse("%%MatrixMarket matrix coordinate real symmetric\n5 5 2\n1 1 2.5\n3 2 1\n")
            .unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(g.vertex_weights(), vec![2.5, 1.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn header_errors() {
        for bad in [
            "",
            "%%MatrixMarket matrix array real general\n2 2\n",
            "%%MatrixMarket matrix coordinate complex general\n1 1 0\n",
            "%%MatrixMarket matrix coordinate real hermitian\n1 1 0\n",
            "1 2\n",
        ] {
            assert!(
                matches!(parse(bad), Err(Error::MalformedHeader(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn entry_errors() {
        let head = "%%MatrixMarket matrix coordinate real general\n";
        assert!(matches!(
            parse(&format!("{head}3 3 1\n1 4 1.0\n")),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse(&format!("{head}3 3 1\n0 1 1.0\n")),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse(&format!("{head}3 3 1\n1 2 -1.0\n")),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            parse(&format!("{head}3 3 1\n1 2\n")),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse(&format!("{head}3 3 2\n1 2 1\n")),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse(&format!("{head}0 0 0\n")),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn unequal_reciprocal_weights_are_rejected() {
        let text = "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 1.0\n2 1 3.0\n";
        assert!(matches!(parse(text), Err(Error::AsymmetricWeights { .. })));
    }
}
