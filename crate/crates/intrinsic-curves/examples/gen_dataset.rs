//! Writes the shipped polygon dataset to stdout: the displayed intrinsic
//! polygons followed by one representative of every lattice polygon class
//! with vertices in [0, SIDE]^2 and normalized volume at most 6.
//!
//!     cargo run --example gen_dataset > data/polygons.txt

use intrinsic_core::polygon::enumerate_small_polygons;
use intrinsic_core::LatticePolygon;
use intrinsic_curves::dataset::format_line;

const SIDE: i64 = 6;
const MAX_VOLUME: i64 = 6;

const DISPLAYED: &[&[(i64, i64)]] = &[
    &[(0, 0), (1, 0)],
    &[(0, 0), (2, 1), (1, 2)],
    &[(0, 0), (3, 1), (1, 3)],
    &[(0, 0), (3, 1), (3, 2), (2, 3)],
    &[(0, 0), (1, 0), (4, 1), (2, 4)],
    &[(0, 0), (4, 2), (3, 4), (1, 3)],
    &[(0, 0), (3, 2), (4, 3), (2, 4), (1, 4)],
    &[(0, 0), (4, 1), (1, 4)],
    &[(0, 0), (4, 2), (3, 3), (1, 4)],
    &[(0, 0), (4, 3), (1, 4), (0, 2)],
    &[(0, 0), (4, 1), (2, 4), (1, 3)],
];

fn main() {
    println!("# Lattice polygons, one per line as x,y points; the polygon is their hull.");
    println!("# Displayed intrinsic polygons with m <= 4:");
    for v in DISPLAYED {
        println!("{}", format_line(&LatticePolygon::from_coords(v)));
    }
    let all = enumerate_small_polygons(SIDE, MAX_VOLUME);
    println!("# All {} classes in [0,{}]^2 with normalized volume <= {}, in normal form:", all.len(), SIDE, MAX_VOLUME);
    for p in &all {
        println!("{}", format_line(p));
    }
}
