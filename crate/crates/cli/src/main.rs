//! pretzel: exact surgery-norm data for the (-2,3,n) pretzel knots.
//!
//! Subcommands expose the library over stdout with deterministic output:
//! identical invocations produce byte-identical bytes. Validation failures
//! exit with code 2 and a one-line diagnostic on stderr.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use serde_json::Number;

use pretzel_core::alexander;
use pretzel_core::polygon::{self, EmitFormat};
use pretzel_core::seminorm::{KnotIndex, SeminormSystem};
use pretzel_core::slopes::Slope;
use pretzel_core::surgery::{self, SurgeryStatus, SurgeryVerdict};
use pretzel_core::triangle::TriangleSignature;

#[derive(Parser)]
#[command(
    name = "pretzel",
    version,
    about = "Exact Culler-Shalen norms, Alexander data, polygons, and surgery tables for (-2,3,n) pretzel knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary slopes, character-variety curves, and minimal norms
    System {
        /// Odd hyperbolic index n (not 1, 3, or 5)
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Norms of one slope under every curve
    Norm {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Slope as "P/Q" (meridian is 1/0); a bare integer means P/1
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        /// Include the per-curve breakdown
        #[arg(long)]
        per_curve: bool,
    },
    /// Alexander polynomial, dihedral count, and cyclotomic root indices
    Alexander {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Also accept the torus members n = 1, 3, 5 for inspection
        #[arg(long)]
        allow_torus: bool,
        #[arg(long, value_enum, default_value_t = AlexanderFormat::Json)]
        format: AlexanderFormat,
    },
    /// PSL2(C) character counts of a triangle group
    Characters {
        /// Signature as "P,Q,R"
        #[arg(long)]
        triangle: String,
    },
    /// The fundamental polygon B or the Newton polygon N
    Polygon {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum)]
        kind: PolygonKind,
        #[arg(long, value_enum, default_value_t = PolygonFormat::Json)]
        format: PolygonFormat,
        /// Scale factor for the fundamental polygon (e.g. 2 emits 2B)
        #[arg(long)]
        scale: Option<String>,
    },
    /// Classified surgery candidates inside the finite-norm region
    Surgeries {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Summary table over a range of n (odd non-torus indices only)
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        n_start: i64,
        #[arg(long, allow_negative_numbers = true)]
        n_end: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlexanderFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolygonKind {
    Fundamental,
    Newton,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolygonFormat {
    Svg,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, String> {
    match command {
        Command::System { n } => cmd_system(n),
        Command::Norm {
            n,
            slope,
            per_curve,
        } => cmd_norm(n, &slope, per_curve),
        Command::Alexander {
            n,
            allow_torus,
            format,
        } => cmd_alexander(n, allow_torus, format),
        Command::Characters { triangle } => cmd_characters(&triangle),
        Command::Polygon {
            n,
            kind,
            format,
            scale,
        } => cmd_polygon(n, kind, format, scale.as_deref()),
        Command::Surgeries { n, format } => cmd_surgeries(n, format),
        Command::Sweep {
            n_start,
            n_end,
            format,
        } => cmd_sweep(n_start, n_end, format),
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn hyperbolic_system(n: i64) -> Result<SeminormSystem, String> {
    let knot = KnotIndex::hyperbolic(n).map_err(fail)?;
    SeminormSystem::new(&knot).map_err(fail)
}

fn number(v: &BigInt) -> Number {
    Number::from_string_unchecked(v.to_string())
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("output structs serialize");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct TermOut {
    boundary: String,
    coeff: Number,
}

#[derive(Serialize)]
struct CurveOut {
    kind: &'static str,
    terms: Vec<TermOut>,
    s: Number,
}

#[derive(Serialize)]
struct SystemOut {
    n: i64,
    boundary_slopes: Vec<String>,
    curves: Vec<CurveOut>,
    #[serde(rename = "S")]
    total_minimum: Number,
}

fn curve_out(curve: &pretzel_core::seminorm::CurveSpec) -> CurveOut {
    CurveOut {
        kind: curve.kind().as_str(),
        terms: curve
            .terms()
            .iter()
            .map(|(slope, coeff)| TermOut {
                boundary: slope.to_string(),
                coeff: number(coeff),
            })
            .collect(),
        s: number(curve.minimal_norm()),
    }
}

fn cmd_system(n: i64) -> Result<String, String> {
    let system = hyperbolic_system(n)?;
    Ok(pretty(&SystemOut {
        n,
        boundary_slopes: system
            .boundary_slopes()
            .iter()
            .map(Slope::to_string)
            .collect(),
        curves: system.curves().iter().map(curve_out).collect(),
        total_minimum: number(system.minimal_total_norm()),
    }))
}

#[derive(Serialize)]
struct PerCurveOut {
    kind: &'static str,
    s: Number,
    norm: Number,
}

#[derive(Serialize)]
struct NormOut {
    n: i64,
    slope: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_curve: Option<Vec<PerCurveOut>>,
    total: Number,
}

fn cmd_norm(n: i64, slope_text: &str, per_curve: bool) -> Result<String, String> {
    let system = hyperbolic_system(n)?;
    let slope: Slope = slope_text.parse().map_err(fail)?;
    let class = slope.class();
    let norms = system.per_curve_norms(&class).map_err(fail)?;
    let total: BigInt = norms.iter().sum();
    let breakdown = per_curve.then(|| {
        system
            .curves()
            .iter()
            .zip(&norms)
            .map(|(curve, norm)| PerCurveOut {
                kind: curve.kind().as_str(),
                s: number(curve.minimal_norm()),
                norm: number(norm),
            })
            .collect()
    });
    Ok(pretty(&NormOut {
        n,
        slope: slope.to_string(),
        per_curve: breakdown,
        total: number(&total),
    }))
}

#[derive(Serialize)]
struct AlexanderOut {
    n: i64,
    polynomial: String,
    low_exponent: i64,
    degree: i64,
    coefficients: Vec<Number>,
    value_at_minus_one: Number,
    #[serde(skip_serializing_if = "Option::is_none")]
    dihedral_characters: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cyclotomic_roots: Option<Vec<u64>>,
}

fn cmd_alexander(n: i64, allow_torus: bool, format: AlexanderFormat) -> Result<String, String> {
    let knot = if allow_torus {
        KnotIndex::new(n).map_err(fail)?
    } else {
        KnotIndex::hyperbolic(n).map_err(fail)?
    };
    let delta = alexander::alexander_polynomial_allowing_torus(&knot).map_err(fail)?;
    if format == AlexanderFormat::Text {
        return Ok(format!("{delta}\n"));
    }
    let (dihedral, roots) = if knot.is_hyperbolic() {
        (
            Some(number(
                &alexander::dihedral_character_count(&knot).map_err(fail)?,
            )),
            Some(alexander::cyclotomic_roots(&knot).map_err(fail)?),
        )
    } else {
        (None, None)
    };
    Ok(pretty(&AlexanderOut {
        n,
        polynomial: delta.to_string(),
        low_exponent: delta.low_exponent(),
        degree: delta.span(),
        coefficients: delta.coefficients().iter().map(number).collect(),
        value_at_minus_one: number(&delta.evaluate(&BigInt::from(-1))),
        dihedral_characters: dihedral,
        cyclotomic_roots: roots,
    }))
}

#[derive(Serialize)]
struct CharactersOut {
    triangle: [i64; 3],
    total: Number,
    reducible: Number,
    irreducible: Number,
}

fn cmd_characters(triangle: &str) -> Result<String, String> {
    let entries: Vec<i64> = triangle
        .split(',')
        .map(|part| part.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("cannot parse triangle {triangle:?}; expected \"P,Q,R\""))?;
    let [p, q, r]: [i64; 3] = entries
        .try_into()
        .map_err(|_| format!("cannot parse triangle {triangle:?}; expected \"P,Q,R\""))?;
    let signature = TriangleSignature::new(p, q, r).map_err(fail)?;
    Ok(pretty(&CharactersOut {
        triangle: [p, q, r],
        total: number(&signature.total_psl2_characters()),
        reducible: number(&signature.reducible_psl2_characters()),
        irreducible: number(&signature.irreducible_psl2_characters()),
    }))
}

fn cmd_polygon(
    n: i64,
    kind: PolygonKind,
    format: PolygonFormat,
    scale: Option<&str>,
) -> Result<String, String> {
    let system = hyperbolic_system(n)?;
    let emit_format = match format {
        PolygonFormat::Svg => EmitFormat::Svg,
        PolygonFormat::Csv => EmitFormat::Csv,
        PolygonFormat::Json => EmitFormat::Json,
    };
    match kind {
        PolygonKind::Fundamental => {
            let mut poly = polygon::fundamental_polygon(&system).map_err(fail)?;
            if let Some(text) = scale {
                let factor = polygon::parse_rational(text).map_err(fail)?;
                if !factor.is_positive() {
                    return Err(format!("scale must be positive (got {text})"));
                }
                poly = poly.scale(&factor);
            }
            Ok(poly.emit(emit_format))
        }
        PolygonKind::Newton => {
            if scale.is_some() {
                return Err("--scale applies only to the fundamental polygon".to_string());
            }
            Ok(polygon::newton_polygon(&system)
                .map_err(fail)?
                .emit(emit_format))
        }
    }
}

#[derive(Serialize)]
struct VerdictOut {
    slope: String,
    norms: Vec<Number>,
    total: Number,
    status: &'static str,
    reason: &'static str,
}

#[derive(Serialize)]
struct SurgeriesOut {
    n: i64,
    #[serde(rename = "S")]
    total_minimum: Number,
    verdicts: Vec<VerdictOut>,
}

fn verdict_out(verdict: &SurgeryVerdict) -> VerdictOut {
    VerdictOut {
        slope: verdict.slope.to_string(),
        norms: verdict.per_curve_norms.iter().map(number).collect(),
        total: number(&verdict.total_norm),
        status: verdict.status.as_str(),
        reason: verdict.reason.as_str(),
    }
}

fn cmd_surgeries(n: i64, format: TableFormat) -> Result<String, String> {
    let system = hyperbolic_system(n)?;
    let verdicts = surgery::enumerate_candidates(&system);
    match format {
        TableFormat::Json => Ok(pretty(&SurgeriesOut {
            n,
            total_minimum: number(system.minimal_total_norm()),
            verdicts: verdicts.iter().map(verdict_out).collect(),
        })),
        TableFormat::Csv => {
            let mut out = String::new();
            if system.r_curve().is_some() {
                out.push_str("slope,norm_curve,r_curve,total,status,reason\n");
            } else {
                out.push_str("slope,norm_curve,total,status,reason\n");
            }
            for v in &verdicts {
                let norms: Vec<String> = v.per_curve_norms.iter().map(BigInt::to_string).collect();
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    v.slope,
                    norms.join(","),
                    v.total_norm,
                    v.status.as_str(),
                    v.reason.as_str()
                ));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct SweepSurgeryOut {
    slope: String,
    status: &'static str,
}

#[derive(Serialize)]
struct SweepRow {
    n: i64,
    #[serde(rename = "S")]
    total_minimum: Number,
    s0: Number,
    #[serde(skip_serializing_if = "Option::is_none")]
    s1: Option<Number>,
    surgeries: Vec<SweepSurgeryOut>,
}

fn sweep_row(n: i64) -> Result<SweepRow, String> {
    let system = hyperbolic_system(n)?;
    let surgeries = surgery::enumerate_candidates(&system)
        .into_iter()
        .filter(|v| {
            matches!(
                v.status,
                SurgeryStatus::CyclicCandidate
                    | SurgeryStatus::FiniteCandidate
                    | SurgeryStatus::RealizedCyclic
                    | SurgeryStatus::RealizedFinite
            )
        })
        .map(|v| SweepSurgeryOut {
            slope: v.slope.to_string(),
            status: v.status.as_str(),
        })
        .collect();
    Ok(SweepRow {
        n,
        total_minimum: number(system.minimal_total_norm()),
        s0: number(system.norm_curve().minimal_norm()),
        s1: system.r_curve().map(|c| number(c.minimal_norm())),
        surgeries,
    })
}

fn cmd_sweep(n_start: i64, n_end: i64, format: TableFormat) -> Result<String, String> {
    use rayon::prelude::*;
    if n_start > n_end {
        return Err(format!("empty range: {n_start} > {n_end}"));
    }
    let indices: Vec<i64> = (n_start..=n_end)
        .filter(|n| n % 2 != 0 && ![1, 3, 5].contains(n))
        .collect();
    // Rows are computed in parallel but collected in index order, so output
    // does not depend on the thread count.
    let rows: Vec<SweepRow> = indices
        .par_iter()
        .map(|&n| sweep_row(n))
        .collect::<Result<_, _>>()?;
    match format {
        TableFormat::Json => Ok(pretty(&rows)),
        TableFormat::Csv => {
            let mut out = String::from("n,S,s0,s1,surgeries\n");
            for row in &rows {
                let s1 = row.s1.as_ref().map(Number::to_string).unwrap_or_default();
                let surgeries = row
                    .surgeries
                    .iter()
                    .map(|s| format!("{}={}", s.slope, s.status))
                    .collect::<Vec<_>>()
                    .join(";");
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.n, row.total_minimum, row.s0, s1, surgeries
                ));
            }
            Ok(out)
        }
    }
}
