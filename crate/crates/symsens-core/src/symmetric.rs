//! Compact truth tables for symmetric Boolean functions, their run-length
//! compositions, and O(n) sensitivity computation.
//!
//! A symmetric function of `n` variables takes the same value on all inputs
//! of equal Hamming weight, so it is fully described by the `n + 1` values
//! `v_0 .. v_n` it takes on weights `0 .. n`. That vector is the *compact
//! truth table*, written as a bit string such as `"1110"` with `v_0`
//! leftmost. The maximal runs of equal values, read left to right, form a
//! composition of `n + 1`; conversely a composition plus the value of the
//! first run determines the table, so the `2^(n+1)` compact tables map
//! one-to-one onto pairs (composition of `n + 1`, first value).
//!
//! Sensitivity comes straight off the compact table: an input of weight `k`
//! has `k` neighbors of weight `k - 1` and `n - k` neighbors of weight
//! `k + 1`, so
//!
//! ```text
//! s(f, x) = k * [v_(k-1) != v_k] + (n - k) * [v_(k+1) != v_k]
//! ```
//!
//! for any `x` of weight `k`, with both terms vanishing at the boundaries
//! because their multipliers do. This is what [`CompactTruthTable::sensitivity_profile`]
//! evaluates; the brute-force oracle in [`crate::brute`] exists to check it.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bits::BitBuf;
use crate::brute::{TruthTable, FULL_TABLE_CAP};
use crate::error::Error;

/// Compact-table operations are O(n), so they accept far larger `n` than
/// anything that touches a full `2^n` table.
pub const MAX_COMPACT_VARS: usize = 1_000_000;

/// The weight-indexed truth table `v_0 .. v_n` of a symmetric function of
/// `n >= 1` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactTruthTable {
    n: usize,
    values: BitBuf,
}

impl CompactTruthTable {
    /// Builds a table from the weight values `v_0 .. v_n`; the slice length
    /// is `n + 1` and must be at least 2.
    pub fn from_values(values: &[bool]) -> Result<CompactTruthTable, Error> {
        if values.len() < 2 {
            return Err(Error::Format(alloc::format!(
                "a compact truth table needs n + 1 >= 2 values, got {}",
                values.len()
            )));
        }
        let n = values.len() - 1;
        if n > MAX_COMPACT_VARS {
            return Err(Error::Size {
                n,
                cap: MAX_COMPACT_VARS,
            });
        }
        Ok(CompactTruthTable {
            n,
            values: BitBuf::from_bools(values),
        })
    }

    /// Builds a table by evaluating `f` at each weight `0 ..= n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<CompactTruthTable, Error> {
        if n == 0 {
            return Err(Error::Domain("symmetric functions need n >= 1 variables"));
        }
        if n > MAX_COMPACT_VARS {
            return Err(Error::Size {
                n,
                cap: MAX_COMPACT_VARS,
            });
        }
        let mut values = BitBuf::zeros(n + 1);
        for k in 0..=n {
            values.set(k, f(k));
        }
        Ok(CompactTruthTable { n, values })
    }

    /// Decodes bit `k` of `word` as `v_k`, for `n <= 63`. This is the
    /// enumeration encoding used by the census scan: compact tables are the
    /// integers `0 .. 2^(n+1)` with the LSB as `v_0`.
    pub fn from_word(n: usize, word: u64) -> Result<CompactTruthTable, Error> {
        if n > 63 {
            return Err(Error::Size { n, cap: 63 });
        }
        CompactTruthTable::from_fn(n, |k| (word >> k) & 1 == 1)
    }

    /// The constant-`value` function of `n` variables.
    pub fn constant(n: usize, value: bool) -> Result<CompactTruthTable, Error> {
        CompactTruthTable::from_fn(n, |_| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Function value on inputs of Hamming weight `k`. Panics if `k > n`.
    pub fn value_at(&self, k: usize) -> bool {
        self.values.get(k)
    }

    /// The values `v_0 .. v_n` in weight order.
    pub fn values(&self) -> impl Iterator<Item = bool> + '_ {
        self.values.iter()
    }

    /// The complement function `!f`.
    pub fn complement(&self) -> CompactTruthTable {
        CompactTruthTable {
            n: self.n,
            values: self.values.complemented(),
        }
    }

    /// The reversed table `v_k -> v_(n-k)`, i.e. the function applied to
    /// inputs with all bits flipped.
    pub fn reversed(&self) -> CompactTruthTable {
        let n = self.n;
        CompactTruthTable::from_fn(n, |k| self.value_at(n - k)).expect("same n is valid")
    }

    /// True for the two constant functions; their composition is the single
    /// part `n + 1` and their sensitivity is 0.
    pub fn is_trivial(&self) -> bool {
        let first = self.value_at(0);
        self.values.iter().all(|v| v == first)
    }

    /// The run lengths of equal consecutive values, left to right. Always a
    /// composition of `n + 1`.
    pub fn to_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 1usize;
        for k in 1..=self.n {
            if self.value_at(k) == self.value_at(k - 1) {
                run += 1;
            } else {
                parts.push(run);
                run = 1;
            }
        }
        parts.push(run);
        Composition { parts }
    }

    /// Rebuilds the table whose runs are `comp`, with the first run holding
    /// `first_value`. Inverse of [`CompactTruthTable::to_composition`]; the
    /// map `(composition, first value) <-> compact table` is a bijection.
    pub fn from_composition(
        comp: &Composition,
        first_value: bool,
    ) -> Result<CompactTruthTable, Error> {
        let total = comp.total();
        if total < 2 {
            return Err(Error::Domain(
                "a compact table needs a composition of n + 1 >= 2",
            ));
        }
        let n = total - 1;
        if n > MAX_COMPACT_VARS {
            return Err(Error::Size {
                n,
                cap: MAX_COMPACT_VARS,
            });
        }
        let mut values = BitBuf::zeros(n + 1);
        let mut value = first_value;
        let mut k = 0;
        for &part in comp.parts() {
            for _ in 0..part {
                values.set(k, value);
                k += 1;
            }
            value = !value;
        }
        Ok(CompactTruthTable { n, values })
    }

    /// Per-weight sensitivities and their maximum, in O(n) time and without
    /// materializing the `2^n`-entry table.
    pub fn sensitivity_profile(&self) -> SensitivityProfile {
        let n = self.n;
        let mut per_weight = Vec::with_capacity(n + 1);
        let mut max = 0;
        for k in 0..=n {
            let v = self.value_at(k);
            let mut s = 0;
            if k > 0 && self.value_at(k - 1) != v {
                s += k;
            }
            if k < n && self.value_at(k + 1) != v {
                s += n - k;
            }
            if s > max {
                max = s;
            }
            per_weight.push(s);
        }
        SensitivityProfile {
            n,
            per_weight,
            max,
        }
    }

    /// True iff the function has the largest possible sensitivity `s = n`,
    /// decided purely from the run structure: some part of the composition
    /// equals 1.
    pub fn has_max_sensitivity(&self) -> bool {
        self.to_composition().min_part() == 1
    }

    /// Materializes the full `2^n`-entry truth table, under the default cap
    /// of [`FULL_TABLE_CAP`] variables.
    pub fn expand(&self) -> Result<TruthTable, Error> {
        self.expand_with_cap(FULL_TABLE_CAP)
    }

    /// Same as [`CompactTruthTable::expand`] with an explicit cap.
    pub fn expand_with_cap(&self, cap: usize) -> Result<TruthTable, Error> {
        TruthTable::from_fn_with_cap(self.n, cap, |x| self.value_at(x.count_ones() as usize))
    }
}

/// Serializes as the bit string `v_0 .. v_n`, leftmost first: `"1110"`.
impl fmt::Display for CompactTruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.values.iter() {
            f.write_str(if v { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CompactTruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<CompactTruthTable, Error> {
        let mut values = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => values.push(false),
                '1' => values.push(true),
                _ => {
                    return Err(Error::Format(alloc::format!(
                        "compact truth tables contain only 0 and 1, found {c:?}"
                    )))
                }
            }
        }
        CompactTruthTable::from_values(&values)
    }
}

/// An ordered list of positive parts; here always the run lengths of a
/// compact truth table, summing to `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Parts must be non-empty and all positive.
    pub fn new(parts: Vec<usize>) -> Result<Composition, Error> {
        if parts.is_empty() {
            return Err(Error::Domain("a composition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("composition parts must be positive"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn min_part(&self) -> usize {
        *self.parts.iter().min().expect("parts are non-empty")
    }

    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }
}

/// Serializes as `+`-joined parts: `"3+1"`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition, Error> {
        let mut parts = Vec::new();
        for piece in s.split('+') {
            let part: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::Format(alloc::format!("bad composition part {piece:?}")))?;
            parts.push(part);
        }
        Composition::new(parts)
    }
}

/// Sensitivities of one symmetric function: `per_weight[k]` is `s(f, x)`
/// for any input `x` of Hamming weight `k` (well defined by symmetry), and
/// `max` is `s(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SensitivityProfile {
    n: usize,
    per_weight: Vec<usize>,
    max: usize,
}

impl SensitivityProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn per_weight(&self) -> &[usize] {
        &self.per_weight
    }

    /// The function sensitivity `s(f)`.
    pub fn max(&self) -> usize {
        self.max
    }
}

/// Result of trying to compress a full truth table to a compact one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompressOutcome {
    Symmetric(CompactTruthTable),
    /// The table is not symmetric: two inputs of equal Hamming weight
    /// disagree. Not an error, a verdict.
    NotSymmetric(NotSymmetricWitness),
}

/// Two equal-weight inputs on which the function takes different values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotSymmetricWitness {
    /// Smallest input index of the offending weight class.
    pub first: u64,
    /// First index of that weight whose value differs from `first`'s.
    pub second: u64,
    pub weight: usize,
}

/// Compresses a full truth table to its weight-indexed form, or reports a
/// witness pair if some weight class carries mixed values. Round-trips with
/// [`CompactTruthTable::expand`].
pub fn compress(table: &TruthTable) -> CompressOutcome {
    let n = table.n();
    let mut first_seen: Vec<Option<u64>> = alloc::vec![None; n + 1];
    let mut values = alloc::vec![false; n + 1];
    for x in 0..table.len() {
        let weight = x.count_ones() as usize;
        let value = table.get(x);
        match first_seen[weight] {
            None => {
                first_seen[weight] = Some(x);
                values[weight] = value;
            }
            Some(first) => {
                if value != values[weight] {
                    return CompressOutcome::NotSymmetric(NotSymmetricWitness {
                        first,
                        second: x,
                        weight,
                    });
                }
            }
        }
    }
    CompressOutcome::Symmetric(
        CompactTruthTable::from_values(&values).expect("n + 1 >= 2 values"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn table(s: &str) -> CompactTruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn expand_threshold_1100() {
        let t = table("1100").expand().unwrap();
        // weights 0 and 1 map to 1, weights 2 and 3 map to 0
        for x in 0..t.len() {
            assert_eq!(t.get(x), x.count_ones() < 2, "input {x:03b}");
        }
    }

    #[test]
    fn expand_001_is_and() {
        let t = table("001").expand().unwrap();
        let values: Vec<bool> = (0..4).map(|x| t.get(x)).collect();
        assert_eq!(values, alloc::vec![false, false, false, true]);
    }

    #[test]
    fn expand_constant_one() {
        let t = table("11").expand().unwrap();
        assert!(t.get(0) && t.get(1));
    }

    #[test]
    fn expand_respects_cap() {
        let c = CompactTruthTable::constant(21, false).unwrap();
        assert_eq!(c.expand(), Err(Error::Size { n: 21, cap: 20 }));
        assert!(c.expand_with_cap(21).is_ok());
    }

    #[test]
    fn compress_and_table() {
        let and = TruthTable::from_values(&[false, false, false, true]).unwrap();
        match compress(&and) {
            CompressOutcome::Symmetric(c) => assert_eq!(c.to_string(), "001"),
            other => panic!("expected symmetric, got {other:?}"),
        }
    }

    #[test]
    fn compress_xor_table() {
        let xor = TruthTable::from_values(&[false, true, true, false]).unwrap();
        match compress(&xor) {
            CompressOutcome::Symmetric(c) => assert_eq!(c.to_string(), "010"),
            other => panic!("expected symmetric, got {other:?}"),
        }
    }

    #[test]
    fn compress_detects_asymmetry_with_witness() {
        // f = !x1 & x2: value 1 only at index 2, so weight-1 inputs disagree
        let t = TruthTable::from_values(&[false, true, false, false]).unwrap();
        match compress(&t) {
            CompressOutcome::NotSymmetric(w) => {
                assert_eq!(w.weight, 1);
                assert_eq!((w.first, w.second), (1, 2));
                assert_eq!(w.first.count_ones(), w.second.count_ones());
                assert_ne!(t.get(w.first), t.get(w.second));
            }
            other => panic!("expected not-symmetric, got {other:?}"),
        }
    }

    #[test]
    fn composition_examples() {
        assert_eq!(table("1110").to_composition().to_string(), "3+1");
        assert_eq!(table("1010").to_composition().to_string(), "1+1+1+1");
        assert_eq!(table("1111").to_composition().to_string(), "4");
    }

    #[test]
    fn from_composition_examples() {
        let c31: Composition = "3+1".parse().unwrap();
        assert_eq!(
            CompactTruthTable::from_composition(&c31, true)
                .unwrap()
                .to_string(),
            "1110"
        );
        assert_eq!(
            CompactTruthTable::from_composition(&c31, false)
                .unwrap()
                .to_string(),
            "0001"
        );
        let c4: Composition = "4".parse().unwrap();
        assert_eq!(
            CompactTruthTable::from_composition(&c4, false)
                .unwrap()
                .to_string(),
            "0000"
        );
    }

    #[test]
    fn profile_examples() {
        assert_eq!(table("001").sensitivity_profile().max(), 2);
        assert_eq!(table("1100").sensitivity_profile().max(), 2);
        assert_eq!(table("1111").sensitivity_profile().max(), 0);
        let p = table("1010").sensitivity_profile();
        assert_eq!(p.per_weight(), &[3, 3, 3, 3]);
        assert_eq!(p.max(), 3);
    }

    #[test]
    fn max_sensitivity_predicate() {
        assert!(table("1110").has_max_sensitivity());
        assert!(!table("1100").has_max_sensitivity());
        assert!(!table("0000").has_max_sensitivity());
    }

    #[test]
    fn trivial_predicate() {
        assert!(table("1111").is_trivial());
        assert!(!table("1110").is_trivial());
        assert!(!table("0101").is_trivial());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            "11a0".parse::<CompactTruthTable>(),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            "1".parse::<CompactTruthTable>(),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn composition_validation() {
        assert!(Composition::new(alloc::vec![]).is_err());
        assert!(Composition::new(alloc::vec![2, 0, 1]).is_err());
        let c = Composition::new(alloc::vec![2, 1, 1]).unwrap();
        assert_eq!(c.total(), 4);
        assert_eq!(c.min_part(), 1);
        assert_eq!(c.reversed().parts(), &[1, 1, 2]);
    }

    #[test]
    fn round_trip_exhaustive_small_n() {
        for n in 1..=8 {
            for word in 0u64..1 << (n + 1) {
                let c = CompactTruthTable::from_word(n, word).unwrap();
                let t = c.expand().unwrap();
                assert_eq!(compress(&t), CompressOutcome::Symmetric(c));
            }
        }
    }

    #[test]
    fn bijection_counts_small_n() {
        use std::collections::BTreeSet;
        for n in 1..=8usize {
            let mut pairs = BTreeSet::new();
            for word in 0u64..1 << (n + 1) {
                let c = CompactTruthTable::from_word(n, word).unwrap();
                pairs.insert((c.to_composition().to_string(), c.value_at(0)));
            }
            assert_eq!(pairs.len(), 1 << (n + 1));
        }
    }

    #[test]
    fn compact_operations_scale_to_a_million_variables() {
        let n = 1_000_000;
        // alternating values: every part is 1, sensitivity is n
        let c = CompactTruthTable::from_fn(n, |k| k % 2 == 0).unwrap();
        let profile = c.sensitivity_profile();
        assert_eq!(profile.max(), n);
        assert!(c.has_max_sensitivity());
        assert_eq!(c.to_composition().parts().len(), n + 1);
        assert!(matches!(
            CompactTruthTable::from_fn(n + 1, |_| false),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["1110", "01", "110010"] {
            assert_eq!(table(s).to_string(), s);
        }
        let comp: Composition = "2+2+1+1".parse().unwrap();
        assert_eq!(comp.to_string(), "2+2+1+1");
    }
}
