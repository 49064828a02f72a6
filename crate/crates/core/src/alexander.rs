//! Integer Laurent polynomials and the Alexander data of the (-2,3,n)
//! pretzel knots.
//!
//! The Alexander polynomial of K_n has the closed form
//!
//! ```text
//! (t - 1)(t^(n+3) - 1)/(t + 1)  +  t(t^3 + 1)(t^n + 1)/(t + 1)^2
//! ```
//!
//! up to units. Both divisions are exact in the Laurent ring because n is odd,
//! so everything here stays over the integers: evaluation happens on the fully
//! divided polynomial (the rational form is 0/0 at t = -1), and root-of-unity
//! detection is exact cyclotomic divisibility, never numerical root finding.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::seminorm::KnotIndex;

/// An integer-coefficient Laurent polynomial in t.
///
/// `coeffs[i]` is the coefficient of `t^(low + i)`; the vector is empty for
/// zero and otherwise starts and ends with a nonzero coefficient. The
/// canonical (unit-normalized) form has `low = 0` and positive leading
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The single term c * t^exp (zero if c = 0).
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPolynomial {
                low: exp,
                coeffs: vec![c],
            }
        }
    }

    /// Builds from an ascending coefficient slice starting at exponent `low`,
    /// trimming zero ends.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial { low, coeffs };
        p.trim();
        p
    }

    /// t^m - 1: a Laurent binomial for m != 0, and zero for m = 0 (which the
    /// Alexander formula hits at n = -3).
    pub fn t_power_minus_one(m: i64) -> Self {
        Self::monomial(1, m) + Self::monomial(-1, 0)
    }

    /// t^m + 1 for any m.
    pub fn t_power_plus_one(m: i64) -> Self {
        Self::monomial(1, m) + Self::monomial(1, 0)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the lowest term (0 for the zero polynomial).
    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    /// Exponent of the highest term (0 for the zero polynomial).
    pub fn high_exponent(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    /// high - low; the degree of the canonical form.
    pub fn span(&self) -> i64 {
        self.high_exponent() - self.low_exponent()
    }

    /// Ascending coefficients from the lowest exponent.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The unit-normalized representative: low exponent 0, positive leading
    /// coefficient. This is the canonical form modulo multiplication by
    /// units +-t^k.
    pub fn canonicalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs.last().unwrap().is_negative() {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        LaurentPolynomial { low: 0, coeffs }
    }

    /// Coefficient sequence equal to its reverse (Alexander symmetry).
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Evaluates at an integer point. Negative exponents are only meaningful
    /// at units, so `x` must be +-1 whenever the low exponent is negative.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        if self.low >= 0 {
            let mut acc = BigInt::zero();
            for c in self.coeffs.iter().rev() {
                acc = acc * x + c;
            }
            for _ in 0..self.low {
                acc *= x;
            }
            return acc;
        }
        assert!(
            x.magnitude().is_one(),
            "evaluation with negative exponents requires x = +-1"
        );
        let negative = x.is_negative();
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let exp = self.low + i as i64;
            if negative && exp.rem_euclid(2) == 1 {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    /// Exact division in the Laurent ring; fails if any coefficient division
    /// or the final remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let lead = &divisor.coeffs[m - 1];
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = std::mem::take(&mut rem[k + m - 1]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, d) in divisor.coeffs.iter().enumerate().take(m - 1) {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(self.low - divisor.low, quot))
    }

    /// Whether `self` divides `other` exactly over the integers.
    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_ok()
    }
}

impl std::ops::Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl std::ops::Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exponent().max(rhs.high_exponent());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPolynomial::from_coeffs(low, coeffs)
    }
}

impl std::ops::Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl std::ops::Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.low + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mag.is_one(), exp) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "t")?,
                (false, 1) => write!(f, "{mag}*t")?,
                (true, e) => write!(f, "t^{e}")?,
                (false, e) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// The two exactly-divided summands of the Alexander formula, before
/// unit normalization. Exposed so callers can check exactness directly.
pub fn alexander_summands(knot: &KnotIndex) -> Result<(LaurentPolynomial, LaurentPolynomial)> {
    let n = knot.n();
    let t_plus_1 = LaurentPolynomial::t_power_plus_one(1);
    // (t - 1)(t^(n+3) - 1) / (t + 1): n + 3 is even, so the division is exact.
    let first = (LaurentPolynomial::t_power_minus_one(1)
        * LaurentPolynomial::t_power_minus_one(n + 3))
    .exact_div(&t_plus_1)?;
    // t(t^3 + 1)(t^n + 1) / (t + 1)^2: both factors carry one (t + 1) each.
    let second = (LaurentPolynomial::monomial(1, 1)
        * LaurentPolynomial::t_power_plus_one(3)
        * LaurentPolynomial::t_power_plus_one(n))
    .exact_div(&t_plus_1)?
    .exact_div(&t_plus_1)?;
    Ok((first, second))
}

/// The Alexander polynomial of K_n in canonical unit-normalized form.
/// Torus n (1, 3, 5) is rejected; see `alexander_polynomial_allowing_torus`
/// for the inspection override.
pub fn alexander_polynomial(knot: &KnotIndex) -> Result<LaurentPolynomial> {
    knot.require_hyperbolic()?;
    alexander_polynomial_allowing_torus(knot)
}

/// As `alexander_polynomial` but also accepts the torus members of the
/// family; the closed form is defined for every odd n.
pub fn alexander_polynomial_allowing_torus(knot: &KnotIndex) -> Result<LaurentPolynomial> {
    let (first, second) = alexander_summands(knot)?;
    Ok((first + second).canonicalized())
}

/// Number of irreducible dihedral characters, (|Delta(-1)| - 1) / 2, computed
/// from the polynomial itself.
pub fn dihedral_character_count(knot: &KnotIndex) -> Result<BigInt> {
    let delta = alexander_polynomial(knot)?;
    let v = delta.evaluate(&BigInt::from(-1)).abs();
    Ok((v - 1) / 2)
}

fn divisors(m: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m.is_multiple_of(i) {
            divs.push(i);
            if i != m / i {
                divs.push(m / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The m-th cyclotomic polynomial, by iterated exact division of t^m - 1 by
/// Phi_d over the proper divisors d, built bottom-up over the divisor lattice.
pub fn cyclotomic_polynomial(m: u64) -> LaurentPolynomial {
    assert!(m >= 1, "cyclotomic polynomials are indexed from 1");
    let mut computed: Vec<(u64, LaurentPolynomial)> = Vec::new();
    for d in divisors(m) {
        let mut phi = LaurentPolynomial::t_power_minus_one(d as i64);
        for (e, phi_e) in &computed {
            if d % e == 0 {
                phi = phi
                    .exact_div(phi_e)
                    .expect("cyclotomic division is exact by construction");
            }
        }
        computed.push((d, phi));
    }
    computed.pop().unwrap().1
}

/// Euler phi for 0..=limit by sieve; phi(m) is the degree of Phi_m.
fn phi_sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut phi: Vec<u64> = (0..=limit).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

/// Indices m such that Phi_m divides the Alexander polynomial of K_n, bounded
/// by deg Phi_m <= deg Delta. Sorted ascending.
pub fn cyclotomic_roots(knot: &KnotIndex) -> Result<Vec<u64>> {
    let delta = alexander_polynomial(knot)?;
    let deg = delta.span() as u64;
    // phi(m) > sqrt(m) for m > 6, so every m with phi(m) <= deg lies in
    // 1..=max(6, deg^2).
    let limit = (deg * deg).max(6);
    let phi = phi_sieve(limit);
    let delta_at_two = delta.evaluate(&BigInt::from(2));
    // The candidate set is divisor-closed (d | m implies phi(d) <= phi(m)),
    // so each Phi is computed once, bottom-up over the whole scan.
    let mut table: Vec<(u64, LaurentPolynomial)> = Vec::new();
    let mut roots = Vec::new();
    for m in 1..=limit {
        if phi[m as usize] > deg {
            continue;
        }
        let mut candidate = LaurentPolynomial::t_power_minus_one(m as i64);
        for (d, phi_d) in &table {
            if m % d == 0 {
                candidate = candidate
                    .exact_div(phi_d)
                    .expect("cyclotomic division is exact by construction");
            }
        }
        // Phi_m | Delta forces Phi_m(2) | Delta(2); cheap filter first.
        let value = candidate.evaluate(&BigInt::from(2));
        if (&delta_at_two % &value).is_zero() && candidate.divides(&delta) {
            roots.push(m);
        }
        table.push((m, candidate));
    }
    Ok(roots)
}
