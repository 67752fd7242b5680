//! Polygon dataset line format.
//!
//! One polygon per line, given as whitespace-separated `x,y` points; the
//! polygon is their convex hull. Blank lines and everything after `#` are
//! ignored. Points on one line produce a segment (or point), which is kept
//! and flagged degenerate.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use intrinsic_core::polygon::convex_hull;
use intrinsic_core::{LatticePoint, LatticePolygon};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatasetEntry {
    pub line: usize,
    pub polygon: LatticePolygon,
    pub degenerate: bool,
}

pub fn parse_points(s: &str) -> std::result::Result<Vec<LatticePoint>, String> {
    s.split_whitespace()
        .map(|tok| {
            let (x, y) = tok.split_once(',').ok_or_else(|| format!("expected x,y, got {:?}", tok))?;
            let x = x.trim().parse::<i64>().map_err(|e| format!("{:?}: {}", tok, e))?;
            let y = y.trim().parse::<i64>().map_err(|e| format!("{:?}: {}", tok, e))?;
            Ok(LatticePoint::new(x, y))
        })
        .collect()
}

/// Parses one line; `Ok(None)` for blanks and comments.
pub fn parse_line(line_no: usize, line: &str) -> Result<Option<DatasetEntry>> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let pts = parse_points(body).map_err(|msg| Error::Parse { line: line_no, msg })?;
    let polygon = convex_hull(&pts).map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?;
    Ok(Some(DatasetEntry { line: line_no, degenerate: polygon.is_degenerate(), polygon }))
}

/// Streams entries in file order.
pub struct PolygonReader<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> PolygonReader<R> {
    pub fn new(reader: R) -> Self {
        PolygonReader { lines: reader.lines(), line_no: 0 }
    }
}

impl<R: BufRead> Iterator for PolygonReader<R> {
    type Item = Result<DatasetEntry>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = self.lines.next()?;
            self.line_no += 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => return Some(Err(Error::Parse { line: self.line_no, msg: e.to_string() })),
            };
            match parse_line(self.line_no, &line) {
                Ok(None) => continue,
                Ok(Some(e)) => return Some(Ok(e)),
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

pub fn open_dataset(path: impl AsRef<Path>) -> Result<PolygonReader<BufReader<File>>> {
    let path = path.as_ref();
    let f = File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(PolygonReader::new(BufReader::new(f)))
}

pub fn ingest_polygon_dataset(path: impl AsRef<Path>) -> Result<Vec<DatasetEntry>> {
    open_dataset(path)?.collect()
}

pub fn format_line(p: &LatticePolygon) -> String {
    p.vertices().iter().map(|v| format!("{},{}", v.x, v.y)).collect::<Vec<_>>().join(" ")
}
