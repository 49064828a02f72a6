//! The fundamental polygon, the Newton polygon, widths, and serialization.
//!
//! The fundamental polygon B is the ball of radius s0 of the norm-curve
//! norm: a convex, centrally symmetric rational hexagon whose vertices sit
//! on the active boundary-slope directions. The Newton polygon N is built
//! constructively as a zonotope, the Minkowski sum of a_j copies of the
//! segment from (0,0) to (p_j, q_j) over the norm-curve terms, anchored in
//! the first quadrant with min i = min j = 0. Widths measured on N are half
//! the corresponding norms on B, which is the duality the construction is
//! checked against.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::seminorm::SeminormSystem;
use crate::slopes::Slope;

/// Output formats for polygon serialization. Identical input produces
/// byte-identical output in every format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Svg,
    Csv,
    Json,
}

/// A convex polygon with rational vertices, stored counterclockwise starting
/// from the lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolygon {
    vertices: Vec<(BigRational, BigRational)>,
}

/// A convex lattice polygon in the first quadrant with min i = min j = 0,
/// stored counterclockwise starting from the lexicographically smallest
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<(BigInt, BigInt)>,
}

/// Exact counterclockwise comparison of nonzero direction vectors around the
/// origin, starting just above the positive x-axis.
fn angular_cmp(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> Ordering {
    fn half(v: &(BigRational, BigRational)) -> u8 {
        // 0 for the closed upper half (y > 0, or y = 0 with x > 0), 1 below.
        if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        // cross > 0 means b lies counterclockwise of a within the half-plane.
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn lex_min_rotation<T: Ord>(vertices: &mut [T]) {
    if let Some(min_idx) = vertices
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
    {
        vertices.rotate_left(min_idx);
    }
}

impl RationalPolygon {
    pub fn vertices(&self) -> &[(BigRational, BigRational)] {
        &self.vertices
    }

    /// Vertex-wise scaling; `factor` must be positive.
    pub fn scale(&self, factor: &BigRational) -> RationalPolygon {
        assert!(factor.is_positive(), "polygon scale must be positive");
        let mut vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|(x, y)| (x * factor, y * factor))
            .collect();
        lex_min_rotation(&mut vertices);
        RationalPolygon { vertices }
    }

    /// Closed convex containment test: the point lies on or inside every
    /// edge's left half-plane.
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let (ax, ay) = &self.vertices[i];
            let (bx, by) = &self.vertices[(i + 1) % n];
            let cross = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
            !cross.is_negative()
        })
    }

    pub fn emit(&self, format: EmitFormat) -> String {
        let coords: Vec<(String, String)> = self
            .vertices
            .iter()
            .map(|(x, y)| (format_rational(x), format_rational(y)))
            .collect();
        match format {
            EmitFormat::Csv => emit_csv(&coords),
            EmitFormat::Json => emit_json(&coords),
            EmitFormat::Svg => {
                // Clear all denominators so the SVG path lives on an integer
                // grid; the scale factor is recorded in the header.
                let mut denom = BigInt::one();
                for (x, y) in &self.vertices {
                    denom = denom.lcm(x.denom()).lcm(y.denom());
                }
                let points: Vec<(BigInt, BigInt)> = self
                    .vertices
                    .iter()
                    .map(|(x, y)| {
                        let sx = (x * BigRational::from(denom.clone())).to_integer();
                        let sy = (y * BigRational::from(denom.clone())).to_integer();
                        (sx, sy)
                    })
                    .collect();
                emit_svg(&points, &denom)
            }
        }
    }
}

impl LatticePolygon {
    pub fn vertices(&self) -> &[(BigInt, BigInt)] {
        &self.vertices
    }

    pub fn emit(&self, format: EmitFormat) -> String {
        let coords: Vec<(String, String)> = self
            .vertices
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        match format {
            EmitFormat::Csv => emit_csv(&coords),
            EmitFormat::Json => emit_json(&coords),
            EmitFormat::Svg => emit_svg(&self.vertices, &BigInt::one()),
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "NUM" or "NUM/DEN" (DEN > 0 after reduction) as produced by
/// `format_rational`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    use std::str::FromStr;
    let err = || crate::error::Error::RationalParse(text.to_string());
    match text.split_once('/') {
        None => {
            let n = BigInt::from_str(text.trim()).map_err(|_| err())?;
            Ok(BigRational::from(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn emit_csv(coords: &[(String, String)]) -> String {
    let mut out = String::new();
    for (x, y) in coords {
        let _ = writeln!(out, "{x},{y}");
    }
    out
}

fn emit_json(coords: &[(String, String)]) -> String {
    let vertices: Vec<Vec<&String>> = coords.iter().map(|(x, y)| vec![x, y]).collect();
    let value = serde_json::json!({ "vertices": vertices });
    let mut out = serde_json::to_string_pretty(&value).expect("static JSON shape");
    out.push('\n');
    out
}

fn emit_svg(points: &[(BigInt, BigInt)], grid_scale: &BigInt) -> String {
    // Flip y so the mathematical orientation renders upright.
    let flipped: Vec<(BigInt, BigInt)> = points.iter().map(|(x, y)| (x.clone(), -y)).collect();
    let min_x = flipped.iter().map(|(x, _)| x).min().unwrap().clone();
    let max_x = flipped.iter().map(|(x, _)| x).max().unwrap().clone();
    let min_y = flipped.iter().map(|(_, y)| y).min().unwrap().clone();
    let max_y = flipped.iter().map(|(_, y)| y).max().unwrap().clone();
    let pad = BigInt::one().max(grid_scale.clone());
    let view_x = &min_x - &pad;
    let view_y = &min_y - &pad;
    let view_w = &max_x - &min_x + BigInt::from(2) * &pad;
    let view_h = &max_y - &min_y + BigInt::from(2) * &pad;
    let mut path = String::new();
    for (i, (x, y)) in flipped.iter().enumerate() {
        let _ = write!(path, "{}{} {}", if i == 0 { "M" } else { " L" }, x, y);
    }
    path.push_str(" Z");
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<!-- integer grid: one lattice unit = {grid_scale} user units; y axis flipped -->"
    );
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view_x} {view_y} {view_w} {view_h}\" data-grid-scale=\"{grid_scale}\">"
    );
    let _ = writeln!(
        out,
        "  <path d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"{pad}\" stroke-linejoin=\"round\"/>"
    );
    let _ = writeln!(out, "</svg>");
    out
}

/// The fundamental polygon B = {v : norm-curve norm of v <= s0}. The vertex
/// on each active boundary-slope direction beta_j = p_j/q_j is
/// (s0 / ||(p_j, q_j)||) * (p_j, q_j); both signs are included.
pub fn fundamental_polygon(system: &SeminormSystem) -> Result<RationalPolygon> {
    let curve = system.norm_curve();
    let s0 = curve.minimal_norm();
    let mut vertices: Vec<(BigRational, BigRational)> = Vec::new();
    for (slope, coeff) in curve.terms() {
        if coeff.is_zero() {
            continue;
        }
        let w = curve.norm(&slope.class())?;
        let factor = BigRational::new(s0.clone(), w);
        let vx = &factor * BigRational::from(slope.numerator().clone());
        let vy = &factor * BigRational::from(slope.denominator().clone());
        vertices.push((-&vx, -&vy));
        vertices.push((vx, vy));
    }
    vertices.sort_by(angular_cmp);
    lex_min_rotation(&mut vertices);
    Ok(RationalPolygon { vertices })
}

/// The Newton polygon as a zonotope: the Minkowski sum of a_j copies of the
/// segment (0,0)-(p_j, q_j) over active norm-curve terms, translated so that
/// min i = min j = 0.
pub fn newton_polygon(system: &SeminormSystem) -> Result<LatticePolygon> {
    let curve = system.norm_curve();
    // Merge parallel directions; every boundary slope has q_j >= 1, so the
    // segment vectors all point into the upper half-plane.
    let mut segments: Vec<(BigInt, BigInt, BigInt)> = Vec::new();
    for (slope, coeff) in curve.terms() {
        if coeff.is_zero() {
            continue;
        }
        let (p, q) = (slope.numerator().clone(), slope.denominator().clone());
        if let Some(existing) = segments.iter_mut().find(|(sp, sq, _)| *sp == p && *sq == q) {
            existing.2 += coeff;
        } else {
            segments.push((p, q, coeff.clone()));
        }
    }
    segments.sort_by(|a, b| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    let mut vertices: Vec<(BigInt, BigInt)> = Vec::new();
    let mut cursor = (BigInt::zero(), BigInt::zero());
    for (p, q, a) in &segments {
        vertices.push(cursor.clone());
        cursor.0 += a * p;
        cursor.1 += a * q;
    }
    for (p, q, a) in &segments {
        vertices.push(cursor.clone());
        cursor.0 -= a * p;
        cursor.1 -= a * q;
    }
    debug_assert!(cursor.0.is_zero() && cursor.1.is_zero());
    let min_i = vertices.iter().map(|(i, _)| i).min().unwrap().clone();
    let min_j = vertices.iter().map(|(_, j)| j).min().unwrap().clone();
    for (i, j) in &mut vertices {
        *i -= &min_i;
        *j -= &min_j;
    }
    lex_min_rotation(&mut vertices);
    Ok(LatticePolygon { vertices })
}

/// The lattice width of N in the direction p/q: the number of lines of slope
/// p/q through lattice points that meet N, minus one. Computed as the spread
/// of the functional p*i - q*j over the vertices.
pub fn width(polygon: &LatticePolygon, direction: &Slope) -> BigInt {
    let p = direction.numerator();
    let q = direction.denominator();
    let values = polygon.vertices.iter().map(|(i, j)| p * i - q * j);
    let max = values.clone().max().expect("polygon has vertices");
    let min = values.min().expect("polygon has vertices");
    max - min
}
