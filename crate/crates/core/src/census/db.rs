//! Fixed-width binary order-type databases.
//!
//! A file is a sequence of records of `n` points; each point is `x` then `y`,
//! unsigned little-endian integers of `coord_bytes` bytes.

use std::fs::File;
use std::io::{BufReader, Read};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::Configuration;

/// Streams configurations out of a database file.
pub struct DbReader<R> {
    src: R,
    n: usize,
    coord_bytes: usize,
    records: usize,
    next: usize,
}

impl<R: Read> DbReader<R> {
    pub fn new(src: R, byte_len: u64, n: usize, coord_bytes: usize) -> Result<Self> {
        if !(1..=2).contains(&coord_bytes) {
            return Err(Error::InvalidArgument("coord_bytes must be 1 or 2".into()));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("records need at least one point".into()));
        }
        let rec = (2 * n * coord_bytes) as u64;
        if !byte_len.is_multiple_of(rec) {
            return Err(Error::MalformedFile(format!(
                "length {byte_len} is not a multiple of the {rec}-byte record size"
            )));
        }
        Ok(DbReader {
            src,
            n,
            coord_bytes,
            records: (byte_len / rec) as usize,
            next: 0,
        })
    }

    pub fn record_count(&self) -> usize {
        self.records
    }
}

impl<R: Read> Iterator for DbReader<R> {
    type Item = Result<Configuration>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.records {
            return None;
        }
        let idx = self.next;
        self.next += 1;
        let mut buf = vec![0u8; 2 * self.n * self.coord_bytes];
        if let Err(e) = self.src.read_exact(&mut buf) {
            self.next = self.records;
            return Some(Err(Error::MalformedFile(format!("record {idx}: {e}"))));
        }
        let coords: Vec<i64> = buf
            .chunks(self.coord_bytes)
            .map(|c| c.iter().rev().fold(0i64, |acc, &b| (acc << 8) | b as i64))
            .collect();
        let pts: Vec<(i64, i64)> = coords.chunks(2).map(|c| (c[0], c[1])).collect();
        let conf = Configuration::from_ints(&pts).expect("n >= 1");
        Some(match conf.require_generic() {
            Ok(()) => Ok(conf),
            Err(Error::NonGeneric { indices }) => Err(Error::NonGenericRecord { record: idx, indices }),
            Err(e) => Err(e),
        })
    }
}

pub fn ingest_db(path: &Path, n: usize, coord_bytes: usize) -> Result<DbReader<BufReader<File>>> {
    let f = File::open(path).map_err(|e| Error::MalformedFile(format!("{}: {e}", path.display())))?;
    let len = f
        .metadata()
        .map_err(|e| Error::MalformedFile(format!("{}: {e}", path.display())))?
        .len();
    DbReader::new(BufReader::new(f), len, n, coord_bytes)
}

/// Serializes configurations with nonnegative integer coordinates.
pub fn write_db<'a>(configs: impl IntoIterator<Item = &'a Configuration>, coord_bytes: usize) -> Result<Vec<u8>> {
    if !(1..=2).contains(&coord_bytes) {
        return Err(Error::InvalidArgument("coord_bytes must be 1 or 2".into()));
    }
    let limit = 1u64 << (8 * coord_bytes);
    let mut out = Vec::new();
    let mut n = None;
    for c in configs {
        if *n.get_or_insert(c.len()) != c.len() {
            return Err(Error::InvalidArgument("all records must have the same point count".into()));
        }
        for p in c.points() {
            for v in [&p.x, &p.y] {
                let int: Option<&BigInt> = v.is_integer().then(|| v.numer());
                let val = int
                    .filter(|i| !i.is_negative())
                    .and_then(|i| i.to_u64())
                    .filter(|&u| u < limit)
                    .ok_or_else(|| Error::InvalidArgument(format!("coordinate {v} does not fit {coord_bytes} byte(s)")))?;
                out.extend_from_slice(&val.to_le_bytes()[..coord_bytes]);
            }
        }
    }
    Ok(out)
}
