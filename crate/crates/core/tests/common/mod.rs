#![allow(dead_code)]

use intrinsic_core::{LatticePolygon, LaurentPolynomial, Q, Z};

/// Parses strings such as `-4u^6v^3 + 3u^2v - 1`.
pub fn poly(s: &str) -> LaurentPolynomial {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut i = 0;
    let b = s.as_bytes();
    while i < b.len() {
        let mut sign = 1i64;
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if start == i { 1 } else { s[start..i].parse().unwrap() };
        let (mut p, mut q) = (0i64, 0i64);
        while i < b.len() && (b[i] == b'u' || b[i] == b'v' || b[i] == b'*') {
            if b[i] == b'*' {
                i += 1;
                continue;
            }
            let var = b[i];
            i += 1;
            let mut e = 1i64;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let st = i;
                if b[i] == b'-' {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                e = s[st..i].parse().unwrap();
            }
            if var == b'u' {
                p += e;
            } else {
                q += e;
            }
        }
        terms.push(((p, q), Q::from_integer(Z::from(sign * coeff))));
    }
    LaurentPolynomial::from_terms(terms)
}

pub fn polygon(c: &[(i64, i64)]) -> LatticePolygon {
    LatticePolygon::from_coords(c)
}

/// The eleven polygons of the classification for m <= 4, with their m.
pub fn classification_polygons() -> Vec<(u32, LatticePolygon)> {
    vec![
        (1, polygon(&[(0, 0), (1, 0)])),
        (2, polygon(&[(0, 0), (2, 1), (1, 2)])),
        (3, polygon(&[(0, 0), (3, 1), (1, 3)])),
        (3, polygon(&[(0, 0), (3, 1), (3, 2), (2, 3)])),
        (4, polygon(&[(0, 0), (1, 0), (4, 1), (2, 4)])),
        (4, polygon(&[(0, 0), (4, 2), (3, 4), (1, 3)])),
        (4, polygon(&[(0, 0), (3, 2), (4, 3), (2, 4), (1, 4)])),
        (4, polygon(&[(0, 0), (4, 1), (1, 4)])),
        (4, polygon(&[(0, 0), (4, 2), (3, 3), (1, 4)])),
        (4, polygon(&[(0, 0), (4, 3), (1, 4), (0, 2)])),
        (4, polygon(&[(0, 0), (4, 1), (2, 4), (1, 3)])),
    ]
}

pub const EX_RED_F1: &str = "u^2v + uv^2 - 3uv + 1";
pub const EX_RED_F2: &str = "u^5v^3 - 2u^5v^2 - 6u^4v^3 + 11u^4v^2 - 2u^3v^4 + 17u^3v^3 \
    - 24u^3v^2 - u^3v - u^2v^5 + 7u^2v^4 - 22u^2v^3 + 21u^2v^2 + 5u^2v + 4uv^2 - 9uv + 1";

pub const EX_MINUS_ONE_TWO: &str = "-4u^6v^3 + 3u^6v^2 - 6u^5v^4 + 30u^5v^3 - 18u^5v^2 \
    - u^4v^6 + 2u^4v^5 + 17u^4v^4 - 62u^4v^3 + 25u^4v^2 + 4u^4v + 4u^3v^5 - 26u^3v^4 \
    + 50u^3v^3 + 2u^3v^2 - 10u^3v + 6u^2v^3 - 27u^2v^2 + 6u^2v + 6uv - 1";

pub const UNEXPECTED_M5: &str = "1 - 8uv + 3uv^2 + 6u^2v^4 - u^2v^5 + 3u^2v + 20u^2v^2 \
    - 18u^2v^3 - 18u^3v^2 + 8u^3v^3 + 6u^4v^2 - u^4v^4 - u^5v^2";

pub const HEXAGON_CURVE: &str = "-1 + 2v + 7uv - 3u^2v - 23uv^2 + 6u^2v^2 + 2u^3v^2 + 18uv^3 \
    + 20u^2v^3 - 26u^3v^3 + 10u^4v^3 - 2u^5v^3 - 12uv^4 - 11u^2v^4 + 6u^3v^4 + 5u^4v^4 \
    - 4u^5v^4 + u^6v^4 + 5uv^5 + 3u^2v^5 - 2u^3v^5 - uv^6";

pub fn ex_red_polygons() -> (LatticePolygon, LatticePolygon, LatticePolygon) {
    (
        polygon(&[(0, 0), (3, 1), (7, 3), (7, 4), (6, 5), (3, 7), (2, 5)]),
        polygon(&[(0, 0), (2, 1), (1, 2)]),
        polygon(&[(0, 0), (3, 1), (5, 2), (5, 3), (2, 5)]),
    )
}

pub fn ex_minus_one_two_polygon() -> LatticePolygon {
    polygon(&[(0, 0), (1, 0), (4, 1), (6, 2), (6, 3), (4, 6), (3, 5)])
}

pub fn ex_empty_polygon() -> LatticePolygon {
    polygon(&[(0, 0), (1, 4), (2, 4), (4, 3)])
}

pub fn unexpected_m5_polygon() -> LatticePolygon {
    polygon(&[(0, 0), (2, 5), (4, 4), (5, 2)])
}

pub fn hexagon() -> LatticePolygon {
    polygon(&[(0, 0), (2, 1), (5, 3), (6, 4), (1, 6), (0, 1)])
}
