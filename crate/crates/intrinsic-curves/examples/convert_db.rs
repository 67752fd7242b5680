//! Converter stub for external small-volume polygon databases.
//!
//! External databases come in their own formats, which this crate does not
//! guess at. To convert one, adapt `parse_record` to return the vertex list
//! of one record (or `None` to skip it); everything else is handled here.
//! Output is the dataset line format read by `classify --dataset`:
//! one polygon per line as `x,y` points, `#` starts a comment.
//!
//!     cargo run --example convert_db -- input.txt > data/external.txt
//!
//! As shipped, `parse_record` accepts whitespace-separated integer lists
//! `x1 y1 x2 y2 ...`, one polygon per record line.

use std::io::{BufRead, BufReader};

use intrinsic_core::polygon::convex_hull;
use intrinsic_core::LatticePoint;
use intrinsic_curves::dataset::format_line;

fn parse_record(line: &str) -> Option<Vec<(i64, i64)>> {
    let nums: Vec<i64> = line.split_whitespace().map(|t| t.parse().ok()).collect::<Option<_>>()?;
    if nums.is_empty() || nums.len() % 2 != 0 {
        return None;
    }
    Some(nums.chunks(2).map(|c| (c[0], c[1])).collect())
}

fn main() {
    let path = std::env::args().nth(1).expect("usage: convert_db <input>");
    let input = BufReader::new(std::fs::File::open(&path).expect("open input"));
    println!("# converted from {}", path);
    let (mut kept, mut skipped) = (0, 0);
    for (i, line) in input.lines().enumerate() {
        let line = line.expect("read input");
        match parse_record(&line) {
            Some(pts) => {
                let pts: Vec<LatticePoint> = pts.into_iter().map(|(x, y)| LatticePoint::new(x, y)).collect();
                println!("{}", format_line(&convex_hull(&pts).expect("nonempty")));
                kept += 1;
            }
            None => {
                eprintln!("skipping input line {}", i + 1);
                skipped += 1;
            }
        }
    }
    eprintln!("{} polygons written, {} lines skipped", kept, skipped);
}
