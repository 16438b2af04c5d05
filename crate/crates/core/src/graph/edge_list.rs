use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::{Graph, RawEdge};
use crate::error::{Error, Result};

/// Loads a whitespace-separated `u v [w]` edge list with 0-based ids.
///
/// Lines starting with `#` are comments. When `weighted` is false any third
/// column is ignored and every edge gets weight 1.0.
pub fn load_edge_list(path: impl AsRef<Path>, weighted: bool) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(BufReader::new(file), weighted)
}

pub fn parse_edge_list<R: BufRead>(reader: R, weighted: bool) -> Result<Graph> {
    let mut raw = Vec::new();
    let mut max_id: Option<u32> = None;
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = k + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut tokens = text.split_ascii_whitespace();
        let mut id = || -> Result<u32> {
            let token = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected `u v [w]`".into(),
            })?;
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex id `{token}`"),
            })?;
            if value < 0 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("negative vertex id {value}"),
                });
            }
            u32::try_from(value)
                .ok()
                .filter(|&v| v < u32::MAX)
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: format!("vertex id {value} exceeds 32-bit range"),
                })
        };
        let u = id()?;
        let v = id()?;
        let w = match tokens.next() {
            Some(token) if weighted => token.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid weight `{token}`"),
            })?,
            _ => 1.0,
        };
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        raw.push(RawEdge {
            u,
            v,
            w,
            line: line_no,
        });
    }
    let n = max_id.map_or(0, |m| m as usize + 1);
    Graph::symmetrize(n, raw)
}
