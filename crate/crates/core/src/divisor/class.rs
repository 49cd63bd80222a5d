use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// A symmetric divisor class on M̄₀,ₙ written in the boundary basis
/// `B_2, ..., B_{⌊n/2⌋}`.
///
/// `B_i` and `B_{n-i}` are the same class; indices are folded when the divisor
/// is built, so each class has exactly one coefficient slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricDivisor {
    n: usize,
    /// `coeffs[k]` is the coefficient of `B_{k+2}`.
    coeffs: Vec<Rational>,
}

/// Canonical representative of `B_i` for `i` in `1..n`; `None` for `i = 1` and
/// `i = n - 1`, which are not boundary divisors.
pub(crate) fn fold_index(n: usize, i: usize) -> Option<usize> {
    if i == 0 || i >= n {
        return None;
    }
    let folded = i.min(n - i);
    (folded >= 2).then_some(folded)
}

impl SymmetricDivisor {
    pub fn zero(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooFewPoints(n));
        }
        Ok(SymmetricDivisor {
            n,
            coeffs: vec![Rational::zero(); n / 2 - 1],
        })
    }

    /// Builds `Σ c_i B_i` from `(i, c_i)` pairs; any `i` in `2..=n-2` is
    /// accepted and folded, repeated classes add up.
    pub fn from_terms(n: usize, terms: &[(usize, Rational)]) -> Result<Self> {
        let mut d = Self::zero(n)?;
        for (i, c) in terms {
            let k = fold_index(n, *i).ok_or(Error::IndexOutOfRange {
                index: *i,
                lo: 2,
                hi: n - 2,
            })?;
            d.coeffs[k - 2] += c;
        }
        Ok(d)
    }

    /// Coefficients of `B_2, ..., B_{⌊n/2⌋}` in order.
    pub fn from_coeffs(n: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let zero = Self::zero(n)?;
        if coeffs.len() != zero.coeffs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for n = {n}, expected {}",
                coeffs.len(),
                zero.coeffs.len()
            )));
        }
        Ok(SymmetricDivisor { n, coeffs })
    }

    pub fn boundary(n: usize, i: usize) -> Result<Self> {
        Self::from_terms(n, &[(i, Rational::one())])
    }

    /// The total boundary `B = Σ B_i`.
    pub fn total_boundary(n: usize) -> Result<Self> {
        let d = Self::zero(n)?;
        let coeffs = vec![Rational::one(); d.coeffs.len()];
        Ok(SymmetricDivisor { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `B_i`, folding `i`; `r_1 = 0` by convention.
    pub fn coeff(&self, i: usize) -> Rational {
        match fold_index(self.n, i) {
            Some(k) => self.coeffs[k - 2].clone(),
            None => Rational::zero(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        SymmetricDivisor {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        Ok(SymmetricDivisor {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Membership in the symmetric effective cone, which is spanned by the
    /// boundary classes: every coefficient is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "divisors on n = {} and n = {}",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

impl Add for &SymmetricDivisor {
    type Output = SymmetricDivisor;
    /// Panics when the two divisors live on different `n`.
    fn add(self, rhs: &SymmetricDivisor) -> SymmetricDivisor {
        self.checked_add(rhs).expect("divisors on the same n")
    }
}

impl Sub for &SymmetricDivisor {
    type Output = SymmetricDivisor;
    fn sub(self, rhs: &SymmetricDivisor) -> SymmetricDivisor {
        self.checked_sub(rhs).expect("divisors on the same n")
    }
}

impl Neg for &SymmetricDivisor {
    type Output = SymmetricDivisor;
    fn neg(self) -> SymmetricDivisor {
        self.scale(&Rational::from(-1))
    }
}

impl fmt::Display for SymmetricDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = k + 2;
            if wrote {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "B{i}")?;
            } else {
                write!(f, "{a}*B{i}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `K = Σ (i(n-i)/(n-1) - 2) B_i`.
pub fn canonical_divisor(n: usize) -> Result<SymmetricDivisor> {
    let mut d = SymmetricDivisor::zero(n)?;
    for i in 2..=n / 2 {
        d.coeffs[i - 2] = Rational::frac((i * (n - i)) as i64, (n - 1) as i64) - Rational::from(2);
    }
    Ok(d)
}

/// `ψ = K + 2B`.
pub fn psi_divisor(n: usize) -> Result<SymmetricDivisor> {
    let k = canonical_divisor(n)?;
    let b = SymmetricDivisor::total_boundary(n)?;
    Ok(&k + &b.scale(&Rational::from(2)))
}

/// `aK + bψ` in the boundary basis.
#[allow(non_snake_case)]
pub fn from_K_psi(n: usize, a: &Rational, b: &Rational) -> Result<SymmetricDivisor> {
    Ok(&canonical_divisor(n)?.scale(a) + &psi_divisor(n)?.scale(b))
}

/// Inverse of [`from_K_psi`]: the unique `(a, b)` with `D = aK + bψ`, or `None`
/// when `D` is outside the span of `K` and `ψ`.
///
/// For `n < 6` the two classes are proportional and no unique pair exists;
/// `None` is returned there as well.
#[allow(non_snake_case)]
pub fn to_K_psi(d: &SymmetricDivisor) -> Result<Option<(Rational, Rational)>> {
    let n = d.n();
    let k = canonical_divisor(n)?;
    let psi = psi_divisor(n)?;
    let cols: Vec<Vec<Rational>> = (0..k.coeffs.len())
        .map(|r| vec![k.coeffs[r].clone(), psi.coeffs[r].clone()])
        .collect();
    let m = RationalMatrix::from_rows(&cols)?;
    if m.rank() < 2 {
        return Ok(None);
    }
    Ok(m.solve(d.coeffs())?.map(|x| (x[0].clone(), x[1].clone())))
}

/// Pull-back of the canonical polarization of the symmetric Veronese quotient
/// in `(P²)⁶`: `D_A = -K/2 = B_2/5 + B_3/10`. Only defined on n = 6.
pub fn canonical_polarization() -> SymmetricDivisor {
    SymmetricDivisor::from_coeffs(6, vec![Rational::frac(1, 5), Rational::frac(1, 10)])
        .expect("two coefficients for n = 6")
}
