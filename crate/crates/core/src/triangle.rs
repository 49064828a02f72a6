//! Character counts for triangle groups and the SL2 jumping-point census.
//!
//! The three triangle groups that matter for K_n are the base orbifold
//! groups of the two-fold branched cover and of the two Seifert fibred
//! surgeries: (2,3,|n|), (2,4,|n-6|), and (3,5,|n-5|/2). Degenerate entries
//! (like r = 1 at n = 7) go through the same formulas without special-casing.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::alexander::dihedral_character_count;
use crate::error::{Error, Result};
use crate::seminorm::KnotIndex;

/// The signature (p, q, r) of a triangle group; every entry is at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleSignature {
    p: i64,
    q: i64,
    r: i64,
}

impl TriangleSignature {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        if p < 1 || q < 1 || r < 1 {
            return Err(Error::InvalidSignature(p, q, r));
        }
        Ok(TriangleSignature { p, q, r })
    }

    pub fn entries(&self) -> (i64, i64, i64) {
        (self.p, self.q, self.r)
    }

    /// Total number of PSL2(C)-characters:
    /// (p - floor(p/2) - 1)(q - floor(q/2) - 1)(r - floor(r/2) - 1)
    ///   + floor(p/2) floor(q/2) floor(r/2)
    ///   + floor(gcd(p,q)/2) + floor(gcd(p,r)/2) + floor(gcd(q,r)/2) + 1.
    pub fn total_psl2_characters(&self) -> BigInt {
        let (p, q, r) = (
            BigInt::from(self.p),
            BigInt::from(self.q),
            BigInt::from(self.r),
        );
        let (hp, hq, hr) = (&p / 2, &q / 2, &r / 2);
        (&p - &hp - 1) * (&q - &hq - 1) * (&r - &hr - 1)
            + &hp * &hq * &hr
            + self.p.gcd(&self.q) / 2
            + self.p.gcd(&self.r) / 2
            + self.q.gcd(&self.r) / 2
            + 1
    }

    /// Number of reducible PSL2(C)-characters: with a = gcd(p,q,r) and
    /// b = gcd(pq, pr, qr), floor(b/2) + 1 for odd a and floor(b/2) + 2
    /// for even a.
    pub fn reducible_psl2_characters(&self) -> BigInt {
        let a = self.p.gcd(&self.q).gcd(&self.r);
        let (bp, bq, br) = (
            BigInt::from(self.p) * self.q,
            BigInt::from(self.p) * self.r,
            BigInt::from(self.q) * self.r,
        );
        let b = bp.gcd(&bq).gcd(&br);
        let extra = if a % 2 == 0 { 2 } else { 1 };
        b / 2 + extra
    }

    pub fn irreducible_psl2_characters(&self) -> BigInt {
        self.total_psl2_characters() - self.reducible_psl2_characters()
    }

    /// Spherical iff 1/p + 1/q + 1/r > 1, i.e. qr + pr + pq > pqr.
    pub fn is_spherical(&self) -> bool {
        let (p, q, r) = (self.p as i128, self.q as i128, self.r as i128);
        q * r + p * r + p * q > p * q * r
    }
}

/// The three jumping-point families, named by the triangle group the
/// relevant representations factor through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleFamily {
    /// (2, 3, |n|): the two-fold branched cover's base orbifold.
    TwoThree,
    /// (2, 4, |n-6|): the base orbifold of 2n+4 surgery.
    TwoFour,
    /// (3, 5, |n-5|/2): the base orbifold of 2n+5 surgery.
    ThreeFive,
}

impl TriangleFamily {
    pub fn signature(&self, knot: &KnotIndex) -> Result<TriangleSignature> {
        let n = knot.n();
        match self {
            TriangleFamily::TwoThree => TriangleSignature::new(2, 3, n.abs()),
            TriangleFamily::TwoFour => TriangleSignature::new(2, 4, (n - 6).abs()),
            TriangleFamily::ThreeFive => TriangleSignature::new(3, 5, (n - 5).abs() / 2),
        }
    }
}

/// The SL2(C) jumping-point count for one family, with its breakdown.
///
/// PSL2 irreducibles lift to two SL2 characters each, except dihedral ones
/// which lift once; the ThreeFive family gains 8 reducible jumping characters
/// when n = 5 (mod 30), where the Alexander polynomial has primitive 15th
/// roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingCount {
    pub family: TriangleFamily,
    pub signature: TriangleSignature,
    pub psl2_irreducible: BigInt,
    pub dihedral: BigInt,
    pub reducible_jumping: BigInt,
    pub total: BigInt,
}

pub fn sl2_jumping_count(family: TriangleFamily, knot: &KnotIndex) -> Result<JumpingCount> {
    knot.require_hyperbolic()?;
    let signature = family.signature(knot)?;
    let irr = signature.irreducible_psl2_characters();
    let (dihedral, reducible_jumping) = match family {
        TriangleFamily::TwoThree => (BigInt::from(0), BigInt::from(0)),
        TriangleFamily::TwoFour => (dihedral_character_count(knot)?, BigInt::from(0)),
        TriangleFamily::ThreeFive => {
            let extra = if knot.n().rem_euclid(30) == 5 { 8 } else { 0 };
            (BigInt::from(0), BigInt::from(extra))
        }
    };
    let total = &irr + &irr - &dihedral + &reducible_jumping;
    Ok(JumpingCount {
        family,
        signature,
        psl2_irreducible: irr,
        dihedral,
        reducible_jumping,
        total,
    })
}
