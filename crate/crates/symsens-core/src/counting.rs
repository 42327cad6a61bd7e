//! Exact counts of symmetric Boolean functions by sensitivity class.
//!
//! Everything here is integer arithmetic over arbitrary-precision naturals,
//! so `n` is unbounded (unlike the enumeration caps elsewhere). Three
//! sequences are tracked:
//!
//! * `T_n = 2^(n+1)` — all symmetric functions of `n` variables,
//! * `N_n` — those whose composition has no part equal to 1,
//! * `a_n = T_n - N_n` — those with maximum sensitivity `s = n`.
//!
//! `N_n` satisfies `N_1 = N_2 = 2` and `N_n = N_(n-1) + N_(n-2)`: a
//! composition of `n + 1` with every part at least 2 is built either by
//! growing the last part of such a composition of `n`, or by appending a
//! new part 2 to one of `n - 1`. (The same count can be derived by doubling
//! the first case to also cover appending a part 1 and then removing those
//! forbidden appended 1s again; the tests check that this uncollapsed form
//! agrees.) Halved, `N_n / 2` is the Fibonacci sequence, which is what
//! makes `a_n / T_n -> 1`: the exceptional class shrinks like `(phi/2)^n`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

fn check_n(n: usize) -> Result<(), Error> {
    if n == 0 {
        Err(Error::Domain("counts are defined for n >= 1"))
    } else {
        Ok(())
    }
}

/// Total number of symmetric Boolean functions of `n` variables: `2^(n+1)`.
pub fn total_count(n: usize) -> Result<BigUint, Error> {
    check_n(n)?;
    Ok(BigUint::one() << (n + 1))
}

/// Number of `n`-variable symmetric functions whose composition contains no
/// part equal to 1 (equivalently, sensitivity below `n`).
pub fn no_ones_count(n: usize) -> Result<BigUint, Error> {
    check_n(n)?;
    let two = BigUint::from(2u32);
    let (mut prev, mut cur) = (two.clone(), two);
    // prev = N_1, cur = N_2; slide up to N_n
    for _ in 2..n.max(2) {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    Ok(if n == 1 { prev } else { cur })
}

/// Number of `n`-variable symmetric functions with maximum sensitivity
/// `s = n`: `2^(n+1) - N_n`.
pub fn max_sensitivity_count(n: usize) -> Result<BigUint, Error> {
    Ok(total_count(n)? - no_ones_count(n)?)
}

/// The exact fraction `a_n / 2^(n+1)` of symmetric functions with maximum
/// sensitivity. Non-decreasing for `n >= 2` and converging to 1.
pub fn asymptotic_ratio(n: usize) -> Result<BigRational, Error> {
    let a = BigInt::from(max_sensitivity_count(n)?);
    let t = BigInt::from(total_count(n)?);
    Ok(BigRational::new(a, t))
}

/// Renders a non-negative rational as a decimal with exactly `places`
/// fractional digits, rounding half away from zero.
pub fn decimal_string(ratio: &BigRational, places: usize) -> String {
    debug_assert!(!ratio.is_negative());
    let scale = BigInt::from(10u32).pow(places as u32);
    let two = BigInt::from(2u32);
    let scaled = (ratio.numer() * &scale * &two + ratio.denom()) / (ratio.denom() * &two);
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let mut frac = frac_part.to_string();
    while frac.len() < places {
        frac.insert(0, '0');
    }
    if places == 0 {
        int_part.to_string()
    } else {
        alloc::format!("{int_part}.{frac}")
    }
}

/// One row of the count table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub total: BigUint,
    pub no_ones: BigUint,
    pub max_sens: BigUint,
    pub ratio: BigRational,
}

/// The three sequences for `n = 1 ..= max_n`, computed in one linear pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    rows: Vec<CountRow>,
}

impl CountSeries {
    pub fn compute(max_n: usize) -> Result<CountSeries, Error> {
        check_n(max_n)?;
        let mut rows = Vec::with_capacity(max_n);
        let mut total = BigUint::from(4u32);
        let two = BigUint::from(2u32);
        let (mut no_prev, mut no_cur) = (two.clone(), two);
        for n in 1..=max_n {
            let no_ones = if n == 1 { &no_prev } else { &no_cur }.clone();
            let max_sens = &total - &no_ones;
            let ratio = BigRational::new(
                BigInt::from(max_sens.clone()),
                BigInt::from(total.clone()),
            );
            rows.push(CountRow {
                n,
                total: total.clone(),
                no_ones,
                max_sens,
                ratio,
            });
            total *= 2u32;
            if n >= 2 {
                let next = &no_prev + &no_cur;
                no_prev = no_cur;
                no_cur = next;
            }
        }
        Ok(CountSeries { rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[CountRow] {
        &self.rows
    }

    /// Row for a given `n` in `1 ..= max_n`.
    pub fn get(&self, n: usize) -> Option<&CountRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }
}

/// A rational generating function `P(z) / Q(z)` with integer coefficients,
/// stored as coefficient vectors indexed by power of `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    numer: Vec<BigInt>,
    denom: Vec<BigInt>,
}

impl RationalGf {
    /// Requires a nonzero constant term in the denominator; otherwise the
    /// power-series expansion does not exist.
    pub fn new(numer: Vec<BigInt>, denom: Vec<BigInt>) -> Result<RationalGf, Error> {
        match denom.first() {
            Some(q0) if !q0.is_zero() => Ok(RationalGf { numer, denom }),
            _ => Err(Error::SingularDenominator),
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(numer: &[i64], denom: &[i64]) -> Result<RationalGf, Error> {
        RationalGf::new(
            numer.iter().map(|&c| BigInt::from(c)).collect(),
            denom.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn numer(&self) -> &[BigInt] {
        &self.numer
    }

    pub fn denom(&self) -> &[BigInt] {
        &self.denom
    }

    /// The difference `self - other` over the common denominator.
    pub fn sub(&self, other: &RationalGf) -> Result<RationalGf, Error> {
        let numer = poly_sub(
            &poly_mul(&self.numer, &other.denom),
            &poly_mul(&other.numer, &self.denom),
        );
        RationalGf::new(numer, poly_mul(&self.denom, &other.denom))
    }

    /// First `k` power-series coefficients of `P(z) / Q(z)`, exact.
    ///
    /// Writing `Q(z) * A(z) = P(z)` and comparing coefficients gives the
    /// linear recurrence `q_0 a_j = p_j - sum_(i>=1) q_i a_(j-i)`, which is
    /// evaluated here with exact integer division. If some coefficient is
    /// not an integer (possible when `q_0` is not a unit) the expansion
    /// fails rather than round.
    pub fn expand_series(&self, k: usize) -> Result<Vec<BigInt>, Error> {
        if k == 0 {
            return Err(Error::Domain("series expansion needs at least one term"));
        }
        let q0 = &self.denom[0];
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(k);
        for j in 0..k {
            let mut acc = self.numer.get(j).cloned().unwrap_or_else(BigInt::zero);
            for i in 1..self.denom.len().min(j + 1) {
                acc -= &self.denom[i] * &coeffs[j - i];
            }
            if (&acc % q0).is_zero() {
                coeffs.push(acc / q0);
            } else {
                return Err(Error::NonIntegerSeries);
            }
        }
        Ok(coeffs)
    }
}

/// `T(z) = 4z / (1 - 2z)`, the generating function of `T_n = 2^(n+1)`.
pub fn total_gf() -> RationalGf {
    RationalGf::from_i64(&[0, 4], &[1, -2]).expect("constant term 1")
}

/// `2z / (1 - z - z^2)`, the generating function of `N_n`.
pub fn no_ones_gf() -> RationalGf {
    RationalGf::from_i64(&[0, 2], &[1, -1, -1]).expect("constant term 1")
}

/// The difference of the two, generating `a_n`.
pub fn max_sensitivity_gf() -> RationalGf {
    total_gf()
        .sub(&no_ones_gf())
        .expect("product constant term 1")
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    out
}
