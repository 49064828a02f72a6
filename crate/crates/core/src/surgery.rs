//! Enumeration and classification of cyclic/finite Dehn-surgery candidates.
//!
//! Cyclic fillings attain the minimal norm on every curve; finite fillings
//! obey the per-curve bound max(2s_i, s_i + 8). The search enumerates every
//! primitive class (p, q), q >= 0, whose norm-curve norm is within the finite
//! bound (the scaled fundamental polygon), then excludes boundary slopes,
//! classes failing a per-curve bound, the two Seifert slopes when their base
//! orbifold is not spherical, and odd integral slopes pinned at exactly 2s0
//! (such a filling would have to be dihedral). The realized table is the
//! externally known list of fillings; the tool claims candidacy, not proofs
//! of finiteness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::seminorm::{CurveSpec, SeminormSystem};
use crate::slopes::{PeripheralClass, Slope};
use crate::triangle::{TriangleFamily, TriangleSignature};

/// True iff the triangle orbifold S^2(p,q,r) is spherical: 1/p + 1/q + 1/r > 1.
pub fn is_spherical_triple(p: i64, q: i64, r: i64) -> bool {
    TriangleSignature::new(p, q, r)
        .expect("entries must be at least 1")
        .is_spherical()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurgeryStatus {
    Trivial,
    CyclicCandidate,
    FiniteCandidate,
    RealizedCyclic,
    RealizedFinite,
    Excluded,
}

impl SurgeryStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SurgeryStatus::Trivial => "trivial",
            SurgeryStatus::CyclicCandidate => "cyclic_candidate",
            SurgeryStatus::FiniteCandidate => "finite_candidate",
            SurgeryStatus::RealizedCyclic => "realized_cyclic",
            SurgeryStatus::RealizedFinite => "realized_finite",
            SurgeryStatus::Excluded => "excluded",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExclusionReason {
    BoundarySlope,
    NormExceedsBound,
    OddDihedralExclusion,
    NonsphericalSeifertBase,
    None,
}

impl ExclusionReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExclusionReason::BoundarySlope => "boundary_slope",
            ExclusionReason::NormExceedsBound => "norm_exceeds_bound",
            ExclusionReason::OddDihedralExclusion => "odd_dihedral_exclusion",
            ExclusionReason::NonsphericalSeifertBase => "nonspherical_seifert_base",
            ExclusionReason::None => "none",
        }
    }
}

/// One classified slope: its per-curve norms, total, and verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryVerdict {
    pub slope: Slope,
    pub per_curve_norms: Vec<BigInt>,
    pub total_norm: BigInt,
    pub status: SurgeryStatus,
    pub reason: ExclusionReason,
}

/// Realized non-trivial cyclic/finite fillings of the family (external
/// input; the norms alone prove candidacy, not realization).
const REALIZED: [(i64, i64, SurgeryStatus); 5] = [
    (7, 17, SurgeryStatus::RealizedFinite),
    (7, 18, SurgeryStatus::RealizedCyclic),
    (7, 19, SurgeryStatus::RealizedCyclic),
    (9, 22, SurgeryStatus::RealizedFinite),
    (9, 23, SurgeryStatus::RealizedFinite),
];

/// Bounding box of the lattice search: |p| < x_abs and 0 <= q < q_max cover
/// the whole region, with every boundary-slope vector strictly inside too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundingBox {
    pub x_abs: BigInt,
    pub q_max: BigInt,
}

fn ceil_div(num: &BigInt, den: &BigInt) -> BigInt {
    // num >= 0, den > 0.
    (num + den - 1) / den
}

/// Box around the region {norm-curve norm <= bound} (the (bound/s0)-scaling
/// of the fundamental polygon), enlarged to contain the boundary-slope
/// vectors strictly.
pub fn search_bounding_box(system: &SeminormSystem, bound: &BigInt) -> BoundingBox {
    let curve = system.norm_curve();
    let mut x_abs = BigInt::one();
    let mut q_max = BigInt::zero();
    for (slope, coeff) in curve.terms() {
        if coeff.is_zero() {
            continue;
        }
        let w = curve
            .norm(&slope.class())
            .expect("boundary slopes are nonzero classes");
        x_abs = x_abs.max(ceil_div(&(bound * slope.numerator().abs()), &w));
        q_max = q_max.max(ceil_div(&(bound * slope.denominator()), &w));
    }
    for slope in system.boundary_slopes() {
        x_abs = x_abs.max(slope.numerator().abs());
        q_max = q_max.max(slope.denominator().clone());
    }
    BoundingBox {
        x_abs: x_abs + 1,
        q_max: q_max + 1,
    }
}

/// The x-interval where the norm-curve norm is <= bound on the line y = q,
/// or None when the line misses the region. The restriction is convex and
/// piecewise linear with kinks at x = q p_j / q_j and outer slopes -+s0, so
/// the endpoints come from exact linear interpolation.
fn line_interval(
    curve: &CurveSpec,
    q: &BigInt,
    bound: &BigInt,
) -> Option<(BigRational, BigRational)> {
    let norm_at = |x: &BigRational| -> BigRational {
        let mut sum = BigRational::zero();
        for (slope, coeff) in curve.terms() {
            if coeff.is_zero() {
                continue;
            }
            let term = x * BigRational::from(slope.denominator().clone())
                - BigRational::from(q * slope.numerator());
            sum += BigRational::from(coeff.clone()) * term.abs();
        }
        BigRational::from(BigInt::from(2)) * sum
    };
    let mut breaks: Vec<BigRational> = curve
        .terms()
        .iter()
        .filter(|(_, a)| !a.is_zero())
        .map(|(slope, _)| BigRational::new(q * slope.numerator(), slope.denominator().clone()))
        .collect();
    breaks.sort();
    breaks.dedup();
    let values: Vec<BigRational> = breaks.iter().map(norm_at).collect();
    let bound = BigRational::from(bound.clone());
    if values.iter().min().unwrap() > &bound {
        return None;
    }
    let s0 = BigRational::from(curve.minimal_norm().clone());
    let x_lo = if values[0] <= bound {
        // Left of every kink the norm falls with rate s0.
        &breaks[0] - (&bound - &values[0]) / &s0
    } else {
        let i = values.iter().position(|v| *v <= bound).unwrap();
        &breaks[i - 1]
            + (&values[i - 1] - &bound) * (&breaks[i] - &breaks[i - 1])
                / (&values[i - 1] - &values[i])
    };
    let last = breaks.len() - 1;
    let x_hi = if values[last] <= bound {
        &breaks[last] + (&bound - &values[last]) / &s0
    } else {
        let i = values.iter().rposition(|v| *v <= bound).unwrap();
        &breaks[i + 1]
            - (&values[i + 1] - &bound) * (&breaks[i + 1] - &breaks[i])
                / (&values[i + 1] - &values[i])
    };
    Some((x_lo, x_hi))
}

/// All primitive classes (p, q) with q >= 0 and norm-curve norm <= bound,
/// sorted by (q, p). The scan walks each lattice line inside the bounding
/// box and solves the convex norm restriction exactly, so it provably covers
/// the region.
pub fn primitive_classes_within(system: &SeminormSystem, bound: &BigInt) -> Vec<(BigInt, BigInt)> {
    let curve = system.norm_curve();
    let bbox = search_bounding_box(system, bound);
    let mut classes = Vec::new();
    if curve.minimal_norm() <= bound {
        classes.push((BigInt::one(), BigInt::zero()));
    }
    let q_end = bbox
        .q_max
        .to_u64()
        .expect("search height fits in a machine word");
    for q in 1..=q_end {
        let q = BigInt::from(q);
        let Some((x_lo, x_hi)) = line_interval(curve, &q, bound) else {
            continue;
        };
        let mut p = x_lo.ceil().to_integer();
        let p_end = x_hi.floor().to_integer();
        while p <= p_end {
            if p.gcd(&q).is_one() {
                classes.push((p.clone(), q.clone()));
            }
            p += 1;
        }
    }
    classes
}

fn classify(system: &SeminormSystem, p: BigInt, q: BigInt) -> SurgeryVerdict {
    let n = system.knot().n();
    let class = PeripheralClass::new(p, q);
    let slope = Slope::new(class.x.clone(), class.y.clone()).expect("classes are primitive");
    let per_curve_norms = system
        .per_curve_norms(&class)
        .expect("enumerated classes are nonzero");
    let total_norm: BigInt = per_curve_norms.iter().sum();

    let (status, reason) = if slope.is_meridian() {
        (SurgeryStatus::Trivial, ExclusionReason::None)
    } else if system.boundary_slopes().contains(&slope) {
        (SurgeryStatus::Excluded, ExclusionReason::BoundarySlope)
    } else if system
        .curves()
        .iter()
        .zip(&per_curve_norms)
        .any(|(curve, norm)| {
            let s = curve.minimal_norm();
            let finite_bound = (s + s).max(s + 8);
            *norm > finite_bound
        })
    {
        (SurgeryStatus::Excluded, ExclusionReason::NormExceedsBound)
    } else if let Some(family) = seifert_family(n, &slope) {
        let signature = family
            .signature(system.knot())
            .expect("hyperbolic signatures are valid");
        if signature.is_spherical() {
            candidate_status(system, &slope, &per_curve_norms)
        } else {
            (
                SurgeryStatus::Excluded,
                ExclusionReason::NonsphericalSeifertBase,
            )
        }
    } else if dihedral_parity_excluded(system, &slope, &per_curve_norms) {
        (
            SurgeryStatus::Excluded,
            ExclusionReason::OddDihedralExclusion,
        )
    } else {
        candidate_status(system, &slope, &per_curve_norms)
    };

    SurgeryVerdict {
        slope,
        per_curve_norms,
        total_norm,
        status,
        reason,
    }
}

/// The Seifert fibred slopes 2n+4 and 2n+5 with their base-orbifold families.
fn seifert_family(n: i64, slope: &Slope) -> Option<TriangleFamily> {
    if !slope.is_integral() {
        return None;
    }
    if slope.numerator() == &BigInt::from(2 * n + 4) {
        Some(TriangleFamily::TwoFour)
    } else if slope.numerator() == &BigInt::from(2 * n + 5) {
        Some(TriangleFamily::ThreeFive)
    } else {
        None
    }
}

/// An integral slope with odd numerator whose norm-curve norm is exactly 2s0
/// (with s0 >= 8) would have to be a dihedral filling, impossible for an odd
/// slope.
fn dihedral_parity_excluded(
    system: &SeminormSystem,
    slope: &Slope,
    per_curve_norms: &[BigInt],
) -> bool {
    let s0 = system.norm_curve().minimal_norm();
    slope.is_integral()
        && slope.numerator().is_odd()
        && per_curve_norms[0] == s0 + s0
        && *s0 >= BigInt::from(8)
}

fn candidate_status(
    system: &SeminormSystem,
    slope: &Slope,
    per_curve_norms: &[BigInt],
) -> (SurgeryStatus, ExclusionReason) {
    let minimal_everywhere = system
        .curves()
        .iter()
        .zip(per_curve_norms)
        .all(|(curve, norm)| norm == curve.minimal_norm());
    let realized = slope.is_integral().then(|| {
        let n = system.knot().n();
        REALIZED
            .iter()
            .find(|(rn, rp, _)| *rn == n && slope.numerator() == &BigInt::from(*rp))
            .map(|(_, _, status)| *status)
    });
    match realized.flatten() {
        Some(status) => (status, ExclusionReason::None),
        None if minimal_everywhere => (SurgeryStatus::CyclicCandidate, ExclusionReason::None),
        None => (SurgeryStatus::FiniteCandidate, ExclusionReason::None),
    }
}

/// Enumerates every primitive class inside the finite-surgery region
/// {norm-curve norm <= max(2s0, s0 + 8)} and classifies it. Output is sorted
/// by (q, p).
pub fn enumerate_candidates(system: &SeminormSystem) -> Vec<SurgeryVerdict> {
    let s0 = system.norm_curve().minimal_norm();
    let bound = (s0 + s0).max(s0 + 8);
    primitive_classes_within(system, &bound)
        .into_iter()
        .map(|(p, q)| classify(system, p, q))
        .collect()
}
