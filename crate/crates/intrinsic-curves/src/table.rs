//! Generator tables for weighted projective planes: CSV with header
//! `d,m,c2,pa`, `#` comments allowed. `c2` and `pa` may be empty.

use std::path::Path;

use intrinsic_core::wpp::ClassEntry;
use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
struct Row {
    d: i64,
    m: i64,
    c2: Option<i64>,
    pa: Option<i64>,
}

pub fn parse_table<R: std::io::Read>(reader: R) -> Result<Vec<ClassEntry>> {
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| csv_error(&e))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["d", "m", "c2", "pa"] {
        return Err(Error::Parse { line: 1, msg: format!("expected header d,m,c2,pa, got {:?}", headers) });
    }
    let mut out = Vec::new();
    for rec in rdr.deserialize::<Row>() {
        let row = rec.map_err(|e| csv_error(&e))?;
        if row.d < 1 || row.m < 1 {
            return Err(Error::Parse { line: out.len() + 2, msg: "d and m must be positive".into() });
        }
        out.push(ClassEntry { d: row.d, m: row.m, intrinsic_c2: row.c2, intrinsic_genus: row.pa });
    }
    Ok(out)
}

fn csv_error(e: &csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Parse { line, msg: e.to_string() }
}

pub fn ingest_table(path: impl AsRef<Path>) -> Result<Vec<ClassEntry>> {
    let path = path.as_ref();
    let f = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    parse_table(f)
}
