//! Boundary slopes and Culler-Shalen seminorms of the (-2,3,n) pretzel knots.
//!
//! Every seminorm here is of the form 2 * sum_j a_j * dist(gamma, beta_j)
//! over the four boundary slopes beta_j, with fixed nonnegative integer
//! coefficients a_j. The character variety carries one norm curve for every
//! hyperbolic n, plus one r-curve at the integral boundary slope 2n+6 exactly
//! when 3 | n. The minimal total norm S = 3(|n-2| - 1) is attained at the
//! meridian.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::slopes::{PeripheralClass, Slope};

/// A validated member of the family: n odd, classified as hyperbolic or
/// torus (n in {1, 3, 5}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnotIndex {
    n: i64,
    class: KnotClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnotClass {
    Hyperbolic,
    Torus,
}

impl KnotIndex {
    /// Accepts any odd n; even n is a link and is rejected.
    pub fn new(n: i64) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::EvenN(n));
        }
        let class = if matches!(n, 1 | 3 | 5) {
            KnotClass::Torus
        } else {
            KnotClass::Hyperbolic
        };
        Ok(KnotIndex { n, class })
    }

    /// Accepts only hyperbolic n (odd, not 1, 3, or 5).
    pub fn hyperbolic(n: i64) -> Result<Self> {
        let knot = Self::new(n)?;
        knot.require_hyperbolic()?;
        Ok(knot)
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn class(&self) -> KnotClass {
        self.class
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.class == KnotClass::Hyperbolic
    }

    pub fn require_hyperbolic(&self) -> Result<()> {
        match self.class {
            KnotClass::Hyperbolic => Ok(()),
            KnotClass::Torus => Err(Error::TorusN(self.n)),
        }
    }
}

/// The four boundary slopes [0, 2n+6, beta3, beta4], in the fixed order used
/// throughout. Coincidences (n = -1 has beta4 = beta1 = 0/1; n = -3 has
/// beta2 = beta1) are kept as distinct list positions.
pub fn boundary_slopes(knot: &KnotIndex) -> Result<[Slope; 4]> {
    knot.require_hyperbolic()?;
    let n = BigInt::from(knot.n());
    let beta2 = Slope::new(2 * knot.n() + 6, 1)?;
    if knot.n() >= 7 {
        let beta3 = Slope::integral(16);
        let beta4 = Slope::new(&n * &n - &n - 5, (knot.n() - 3) / 2)?;
        Ok([Slope::integral(0), beta2, beta3, beta4])
    } else {
        let beta3 = Slope::integral(10);
        let n_plus_1 = &n + 1;
        let beta4 = Slope::new(2 * &n_plus_1 * &n_plus_1, n)?;
        Ok([Slope::integral(0), beta2, beta3, beta4])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// A curve whose seminorm is a genuine norm (at least two active
    /// boundary-slope coefficients).
    Norm,
    /// A curve whose seminorm is a multiple of the distance to one integral
    /// boundary slope r; it vanishes on classes parallel to r.
    R,
}

impl CurveKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveKind::Norm => "norm_curve",
            CurveKind::R => "r_curve",
        }
    }
}

/// One character-variety curve: its seminorm coefficients over the boundary
/// slopes and the minimal nonzero norm s (always even, attained at the
/// meridian).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    kind: CurveKind,
    terms: Vec<(Slope, BigInt)>,
    s: BigInt,
}

impl CurveSpec {
    fn build(kind: CurveKind, terms: Vec<(Slope, BigInt)>) -> Self {
        let mut spec = CurveSpec {
            kind,
            terms,
            s: BigInt::zero(),
        };
        spec.s = spec
            .norm(&PeripheralClass::new(1, 0))
            .expect("meridian is nonzero");
        debug_assert!(spec.s.is_even());
        spec
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn terms(&self) -> &[(Slope, BigInt)] {
        &self.terms
    }

    /// Minimal nonzero norm of the curve, equal to the norm of the meridian.
    pub fn minimal_norm(&self) -> &BigInt {
        &self.s
    }

    /// The seminorm 2 * sum_j a_j * |x q_j - y p_j| of a nonzero class.
    /// On an r-curve this is 0 for classes parallel to r; that is the
    /// seminorm's genuine zero locus, not an error.
    pub fn norm(&self, class: &PeripheralClass) -> Result<BigInt> {
        if class.is_zero() {
            return Err(Error::ZeroClass);
        }
        let mut sum = BigInt::zero();
        for (slope, coeff) in &self.terms {
            if coeff.is_zero() {
                continue;
            }
            sum += coeff * class.distance_to_slope(slope);
        }
        Ok(2 * sum)
    }
}

/// All curves of the character variety of K_n, with the minimal total norm S.
#[derive(Debug, Clone)]
pub struct SeminormSystem {
    knot: KnotIndex,
    boundary_slopes: [Slope; 4],
    curves: Vec<CurveSpec>,
    total_minimum: BigInt,
}

impl SeminormSystem {
    /// Builds the curve system for a hyperbolic member of the family.
    ///
    /// Norm-curve coefficients (a1, a2, a3, a4) over [0, 2n+6, beta3, beta4]:
    /// a1 = 0 always; for n >= 7, a3 = 1, a4 = 2 and a2 = (n-5)/2 or (n-7)/2
    /// as 3 does not or does divide n; for n <= -1, a3 = a4 = 1 and
    /// a2 = (1-n)/2 or -(n+1)/2. The r-curve [2n+6 with coefficient 1, s = 2]
    /// is present exactly when 3 | n.
    pub fn new(knot: &KnotIndex) -> Result<Self> {
        let slopes = boundary_slopes(knot)?;
        let n = knot.n();
        let divisible_by_3 = n % 3 == 0;
        let a2 = if n >= 7 {
            if divisible_by_3 {
                (n - 7) / 2
            } else {
                (n - 5) / 2
            }
        } else if divisible_by_3 {
            -(n + 1) / 2
        } else {
            (1 - n) / 2
        };
        let a4 = if n >= 7 { 2 } else { 1 };
        let terms = vec![
            (slopes[0].clone(), BigInt::zero()),
            (slopes[1].clone(), BigInt::from(a2)),
            (slopes[2].clone(), BigInt::from(1)),
            (slopes[3].clone(), BigInt::from(a4)),
        ];
        let norm_curve = CurveSpec::build(CurveKind::Norm, terms);
        let s0 = if divisible_by_3 {
            3 * (n - 2).abs() - 5
        } else {
            3 * ((n - 2).abs() - 1)
        };
        debug_assert_eq!(norm_curve.s, BigInt::from(s0));

        let mut curves = vec![norm_curve];
        if divisible_by_3 {
            let r_curve =
                CurveSpec::build(CurveKind::R, vec![(slopes[1].clone(), BigInt::from(1))]);
            debug_assert_eq!(r_curve.s, BigInt::from(2));
            curves.push(r_curve);
        }
        let total_minimum: BigInt = curves.iter().map(|c| &c.s).sum();
        debug_assert_eq!(total_minimum, BigInt::from(3 * ((n - 2).abs() - 1)));
        Ok(SeminormSystem {
            knot: *knot,
            boundary_slopes: slopes,
            curves,
            total_minimum,
        })
    }

    pub fn for_n(n: i64) -> Result<Self> {
        Self::new(&KnotIndex::new(n)?)
    }

    pub fn knot(&self) -> &KnotIndex {
        &self.knot
    }

    pub fn boundary_slopes(&self) -> &[Slope; 4] {
        &self.boundary_slopes
    }

    pub fn curves(&self) -> &[CurveSpec] {
        &self.curves
    }

    pub fn norm_curve(&self) -> &CurveSpec {
        &self.curves[0]
    }

    pub fn r_curve(&self) -> Option<&CurveSpec> {
        self.curves.get(1)
    }

    /// S, the sum of the minimal norms s_i; the total norm of the meridian.
    pub fn minimal_total_norm(&self) -> &BigInt {
        &self.total_minimum
    }

    /// Per-curve norms of a class, in curve order.
    pub fn per_curve_norms(&self, class: &PeripheralClass) -> Result<Vec<BigInt>> {
        self.curves.iter().map(|c| c.norm(class)).collect()
    }

    /// The total norm: the sum over all curves.
    pub fn total_norm(&self, class: &PeripheralClass) -> Result<BigInt> {
        Ok(self.per_curve_norms(class)?.into_iter().sum())
    }
}

/// The scalar minimal total norm of a general (-2,p,q) pretzel knot:
/// |pq| - (|p| + |q|) + |pq - 2(p+q)|. Informational; only p = 3 has a full
/// curve system here.
pub fn general_pretzel_total_minimum(p: i64, q: i64) -> i128 {
    let (p, q) = (p as i128, q as i128);
    (p * q).abs() - (p.abs() + q.abs()) + (p * q - 2 * (p + q)).abs()
}
