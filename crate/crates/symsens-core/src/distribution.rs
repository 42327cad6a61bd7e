//! Exhaustive census of sensitivities across all `2^(n+1)` symmetric
//! functions of `n` variables.
//!
//! Compact tables are enumerated as the integers `0 .. 2^(n+1)` with the
//! least significant bit as `v_0`, which makes splitting the range into
//! contiguous chunks trivial: [`census_range`] produces the partial
//! histogram of any sub-range, and partial histograms merge by pointwise
//! addition, so any chunking and any merge order give the same result.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;
use crate::symmetric::{CompactTruthTable, Composition};

/// Default cap for census scans: 2^25 tables at `n = 24`, a few seconds of
/// single-threaded work.
pub const ENUMERATION_CAP: usize = 24;

/// Hard limit so that `2^(n+1)` table indices fit in a `u64`.
pub const SCAN_VARS_LIMIT: usize = 62;

/// Full listings are only printable for tiny `n` (`2^(n+1)` rows).
pub const TABLE_LISTING_CAP: usize = 6;

/// How many functions of each sensitivity `s in 0 ..= n` exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SensitivityHistogram {
    n: usize,
    counts: Vec<BigUint>,
    total: BigUint,
}

impl SensitivityHistogram {
    /// Rebuilds a histogram from explicit per-sensitivity counts
    /// (`counts[s]` for `s in 0 ..= n`); the total is their sum.
    pub fn from_counts(n: usize, counts: Vec<BigUint>) -> Result<SensitivityHistogram, Error> {
        if n == 0 {
            return Err(Error::Domain("histograms are defined for n >= 1"));
        }
        if counts.len() != n + 1 {
            return Err(Error::Domain("histogram needs exactly n + 1 counts"));
        }
        let total = counts.iter().sum();
        Ok(SensitivityHistogram { n, counts, total })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of functions tallied; `2^(n+1)` for a full census.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Count for every sensitivity value, indexed by `s`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Count of functions with sensitivity exactly `s`. Panics if `s > n`.
    pub fn count(&self, s: usize) -> &BigUint {
        &self.counts[s]
    }

    /// The `(s, count)` pairs with nonzero count, ascending in `s`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    /// Pointwise addition of another partial histogram over the same `n`.
    pub fn merge(&mut self, other: &SensitivityHistogram) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::Domain("cannot merge histograms of different n"));
        }
        for (mine, theirs) in self.counts.iter_mut().zip(&other.counts) {
            *mine += theirs;
        }
        self.total += &other.total;
        Ok(())
    }
}

/// Maximum per-weight sensitivity of the compact table encoded in `word`,
/// same formula as [`CompactTruthTable::sensitivity_profile`] but with no
/// allocation. `diffs` bit `k` records whether `v_k != v_(k+1)`.
fn word_profile_max(word: u64, n: usize) -> usize {
    let diffs = word ^ (word >> 1);
    let mut max = 0;
    for k in 0..=n {
        let mut s = 0;
        if k > 0 && (diffs >> (k - 1)) & 1 == 1 {
            s += k;
        }
        if k < n && (diffs >> k) & 1 == 1 {
            s += n - k;
        }
        if s > max {
            max = s;
        }
    }
    max
}

/// Whether the encoded table has a run of length exactly 1, i.e. a weight
/// whose value differs from both neighbors (table ends count as borders).
fn word_has_unit_part(word: u64, n: usize) -> bool {
    let diffs = word ^ (word >> 1);
    (0..=n).any(|k| {
        (k == 0 || (diffs >> (k - 1)) & 1 == 1) && (k == n || (diffs >> k) & 1 == 1)
    })
}

/// Validates census arguments and returns the number of tables a full scan
/// would visit, `2^(n+1)`.
pub fn census_size(n: usize, cap: usize) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::Domain("the census is defined for n >= 1"));
    }
    if n > cap {
        return Err(Error::Size { n, cap });
    }
    if n > SCAN_VARS_LIMIT {
        return Err(Error::Size {
            n,
            cap: SCAN_VARS_LIMIT,
        });
    }
    Ok(1u64 << (n + 1))
}

/// Sensitivity histogram over all `2^(n+1)` compact tables, under the
/// default cap.
pub fn census(n: usize) -> Result<SensitivityHistogram, Error> {
    census_with_cap(n, ENUMERATION_CAP)
}

/// Same as [`census`] with an explicit cap acknowledging the O(n * 2^n)
/// cost.
pub fn census_with_cap(n: usize, cap: usize) -> Result<SensitivityHistogram, Error> {
    let end = census_size(n, cap)?;
    census_range(n, 0, end)
}

/// Partial histogram over the enumeration sub-range `start .. end`. The
/// building block for parallel scans; no cap applies beyond the `u64`
/// representation limit, callers bound the work themselves.
pub fn census_range(n: usize, start: u64, end: u64) -> Result<SensitivityHistogram, Error> {
    if n == 0 || n > SCAN_VARS_LIMIT {
        return Err(Error::Domain("census ranges need 1 <= n <= 62"));
    }
    let limit = 1u64 << (n + 1);
    if start > end || end > limit {
        return Err(Error::Bounds {
            index: end,
            len: limit,
        });
    }
    let mut tallies = vec![0u64; n + 1];
    for word in start..end {
        tallies[word_profile_max(word, n)] += 1;
    }
    let counts: Vec<BigUint> = tallies.into_iter().map(BigUint::from).collect();
    SensitivityHistogram::from_counts(n, counts)
}

/// Outcome of checking, for every table, that maximum sensitivity `s = n`
/// holds exactly when the composition contains a part equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitPartReport {
    /// No counterexample among all `2^(n+1)` tables.
    pub holds: bool,
    /// How many tables have `s = n`; cross-checks the counting module.
    pub max_sensitivity_count: BigUint,
}

pub fn verify_unit_part_criterion(n: usize) -> Result<UnitPartReport, Error> {
    verify_unit_part_criterion_with_cap(n, ENUMERATION_CAP)
}

pub fn verify_unit_part_criterion_with_cap(n: usize, cap: usize) -> Result<UnitPartReport, Error> {
    let end = census_size(n, cap)?;
    let mut holds = true;
    let mut count = 0u64;
    for word in 0..end {
        let unit_part = word_has_unit_part(word, n);
        let full_sensitivity = word_profile_max(word, n) == n;
        if unit_part != full_sensitivity {
            holds = false;
        }
        if full_sensitivity {
            count += 1;
        }
    }
    Ok(UnitPartReport {
        holds,
        max_sensitivity_count: BigUint::from(count),
    })
}

/// Outcome of checking the lower bound on the sensitivity of non-trivial
/// symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranReport {
    /// Every non-trivial function reaches the bound.
    pub holds: bool,
    /// The bound `ceil((n+1)/2)`.
    pub bound: usize,
    /// Smallest sensitivity observed among non-trivial functions.
    pub min_nontrivial: usize,
    /// A table achieving that minimum, for inspection.
    pub witness: CompactTruthTable,
}

pub fn verify_turan(n: usize) -> Result<TuranReport, Error> {
    verify_turan_with_cap(n, ENUMERATION_CAP)
}

pub fn verify_turan_with_cap(n: usize, cap: usize) -> Result<TuranReport, Error> {
    let end = census_size(n, cap)?;
    let all_ones = end - 1;
    let bound = (n + 2) / 2;
    let mut min_nontrivial = usize::MAX;
    let mut witness_word = 0u64;
    for word in 0..end {
        if word == 0 || word == all_ones {
            continue;
        }
        let s = word_profile_max(word, n);
        if s < min_nontrivial {
            min_nontrivial = s;
            witness_word = word;
        }
    }
    Ok(TuranReport {
        holds: min_nontrivial >= bound,
        bound,
        min_nontrivial,
        witness: CompactTruthTable::from_word(n, witness_word)?,
    })
}

/// One row of the full function listing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub table: CompactTruthTable,
    pub composition: Composition,
    pub sensitivity: usize,
}

/// All `2^(n+1)` functions of `n <= 6` variables, ordered with the all-ones
/// table first and the printed bit string `v_0 .. v_n` descending as a
/// binary number (`v_0` most significant).
pub fn table_listing(n: usize) -> Result<Vec<TableRow>, Error> {
    if n == 0 {
        return Err(Error::Domain("listings are defined for n >= 1"));
    }
    if n > TABLE_LISTING_CAP {
        return Err(Error::Size {
            n,
            cap: TABLE_LISTING_CAP,
        });
    }
    let count = 1u64 << (n + 1);
    let mut rows = Vec::with_capacity(count as usize);
    for printed in (0..count).rev() {
        let table = CompactTruthTable::from_fn(n, |k| (printed >> (n - k)) & 1 == 1)?;
        let composition = table.to_composition();
        let sensitivity = table.sensitivity_profile().max();
        rows.push(TableRow {
            table,
            composition,
            sensitivity,
        });
    }
    Ok(rows)
}
