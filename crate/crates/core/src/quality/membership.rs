use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::ops::Deref;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Community label of every vertex. Labels always lie in `[0, len)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Membership(Vec<VertexId>);

impl Membership {
    pub fn new(labels: Vec<VertexId>) -> Result<Self> {
        let n = labels.len();
        if let Some((index, &label)) = labels.iter().enumerate().find(|(_, &l)| l as usize >= n) {
            return Err(Error::LabelOutOfRange {
                index,
                label: label as u64,
                limit: n,
            });
        }
        Ok(Membership(labels))
    }

    /// Every vertex in its own community.
    pub fn singletons(n: usize) -> Self {
        Membership((0..n as VertexId).collect())
    }

    pub(crate) fn from_vec_unchecked(labels: Vec<VertexId>) -> Self {
        debug_assert!(labels.iter().all(|&l| (l as usize) < labels.len()));
        Membership(labels)
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    /// Number of distinct labels in use.
    pub fn num_communities(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut count = 0;
        for &c in &self.0 {
            if !std::mem::replace(&mut seen[c as usize], true) {
                count += 1;
            }
        }
        count
    }

    /// Whether the labels form exactly `[0, num_communities)`.
    pub fn is_contiguous(&self) -> bool {
        let k = self.num_communities();
        self.0.iter().all(|&c| (c as usize) < k)
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        for &c in &self.0 {
            writeln!(out, "{c}")?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn write_to_path(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = File::create(path.as_ref())?;
        self.write(BufWriter::new(file))
    }

    /// Reads one label per line. When `expected_len` is given the file must
    /// contain exactly that many labels.
    pub fn read<R: BufRead>(reader: R, expected_len: Option<usize>) -> Result<Self> {
        let mut labels = Vec::with_capacity(expected_len.unwrap_or(0));
        for (k, line) in reader.lines().enumerate() {
            let line = line?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            let label: u64 = text.parse().map_err(|_| Error::Parse {
                line: k + 1,
                message: format!("invalid label `{text}`"),
            })?;
            let label = u32::try_from(label).map_err(|_| Error::LabelOutOfRange {
                index: labels.len(),
                label,
                limit: u32::MAX as usize,
            })?;
            labels.push(label);
        }
        if let Some(expected) = expected_len {
            if labels.len() != expected {
                return Err(Error::LengthMismatch {
                    expected,
                    found: labels.len(),
                });
            }
        }
        Membership::new(labels)
    }

    pub fn read_from_path(path: impl AsRef<Path>, expected_len: Option<usize>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::read(BufReader::new(file), expected_len)
    }
}

impl Deref for Membership {
    type Target = [VertexId];

    fn deref(&self) -> &[VertexId] {
        &self.0
    }
}

impl TryFrom<Vec<VertexId>> for Membership {
    type Error = Error;

    fn try_from(labels: Vec<VertexId>) -> Result<Self> {
        Membership::new(labels)
    }
}
