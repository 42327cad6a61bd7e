//! Brute-force sensitivity over explicit truth tables.
//!
//! This is the ground-truth oracle: it applies the definition of sensitivity
//! literally to a full `2^n`-entry table, with no symmetry assumptions. Cost
//! is O(n * 2^n) table reads per [`TruthTable::sensitivity`] call, so tables
//! are capped at [`FULL_TABLE_CAP`] variables unless a caller explicitly
//! raises the cap and accepts the cost.

use crate::bits::BitBuf;
use crate::error::Error;

/// Default cap on the number of variables of a materialized truth table
/// (2^20 bits = 128 KiB per table).
pub const FULL_TABLE_CAP: usize = 20;

/// A Boolean function of `n >= 1` variables given by its full truth table.
///
/// Entry `i` is the function value on the input vector encoded by `i` with
/// `x_1` as the least significant bit: `i = sum x_j * 2^(j-1)`. The Hamming
/// weight of an input is therefore `i.count_ones()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    bits: BitBuf,
}

impl TruthTable {
    /// Builds the table of `f` over all `2^n` inputs, under the default cap.
    pub fn from_fn(n: usize, f: impl FnMut(u64) -> bool) -> Result<TruthTable, Error> {
        TruthTable::from_fn_with_cap(n, FULL_TABLE_CAP, f)
    }

    /// Same as [`TruthTable::from_fn`] with an explicit cap. Memory is
    /// `2^n` bits and every sensitivity query costs O(n * 2^n) time, so
    /// raising the cap gets expensive quickly.
    pub fn from_fn_with_cap(
        n: usize,
        cap: usize,
        mut f: impl FnMut(u64) -> bool,
    ) -> Result<TruthTable, Error> {
        if n == 0 {
            return Err(Error::Domain("truth tables need at least one variable"));
        }
        if n > cap {
            return Err(Error::Size { n, cap });
        }
        let len = 1usize << n;
        let mut bits = BitBuf::zeros(len);
        for i in 0..len {
            bits.set(i, f(i as u64));
        }
        Ok(TruthTable { n, bits })
    }

    /// Builds a table from explicit values; the length must be a power of
    /// two `2^n` with `n >= 1`.
    pub fn from_values(values: &[bool]) -> Result<TruthTable, Error> {
        if values.len() < 2 || !values.len().is_power_of_two() {
            return Err(Error::Format(alloc::format!(
                "truth table length must be 2^n with n >= 1, got {}",
                values.len()
            )));
        }
        let n = values.len().trailing_zeros() as usize;
        if n > FULL_TABLE_CAP {
            return Err(Error::Size {
                n,
                cap: FULL_TABLE_CAP,
            });
        }
        Ok(TruthTable {
            n,
            bits: BitBuf::from_bools(values),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> u64 {
        1u64 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Function value at input index `x`. Panics if `x >= 2^n`.
    pub fn get(&self, x: u64) -> bool {
        self.bits.get(x as usize)
    }

    pub fn is_constant(&self) -> bool {
        let first = self.get(0);
        self.bits.iter().all(|b| b == first)
    }

    /// The same function with every output bit flipped.
    pub fn complement(&self) -> TruthTable {
        TruthTable {
            n: self.n,
            bits: self.bits.complemented(),
        }
    }

    /// Number of neighbors of `x` (single-bit flips) on which the function
    /// value differs from `f(x)`.
    pub fn sensitivity_at(&self, x: u64) -> Result<usize, Error> {
        if x >= self.len() {
            return Err(Error::Bounds {
                index: x,
                len: self.len(),
            });
        }
        let fx = self.get(x);
        let mut count = 0;
        for i in 0..self.n {
            if self.get(x ^ (1u64 << i)) != fx {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Maximum of [`TruthTable::sensitivity_at`] over all inputs.
    ///
    /// The scan stops early once the running maximum reaches `n`, which is
    /// the global upper bound for any Boolean function.
    pub fn sensitivity(&self) -> usize {
        let mut best = 0;
        for x in 0..self.len() {
            let fx = self.get(x);
            let mut s = 0;
            for i in 0..self.n {
                if self.get(x ^ (1u64 << i)) != fx {
                    s += 1;
                }
            }
            if s > best {
                best = s;
                if best == self.n {
                    return best;
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and2() -> TruthTable {
        // f(x1, x2) = x1 & x2 with x1 as the least significant index bit
        TruthTable::from_values(&[false, false, false, true]).unwrap()
    }

    #[test]
    fn and_sensitivity_at_examples() {
        let t = and2();
        assert_eq!(t.sensitivity_at(0b11).unwrap(), 2);
        assert_eq!(t.sensitivity_at(0b00).unwrap(), 0);
        assert_eq!(t.sensitivity_at(0b01).unwrap(), 1);
    }

    #[test]
    fn and_sensitivity_is_two() {
        assert_eq!(and2().sensitivity(), 2);
    }

    #[test]
    fn constant_tables_have_zero_sensitivity() {
        let zero = TruthTable::from_fn(3, |_| false).unwrap();
        for x in 0..zero.len() {
            assert_eq!(zero.sensitivity_at(x).unwrap(), 0);
        }
        assert_eq!(zero.sensitivity(), 0);
        assert!(zero.is_constant());
    }

    #[test]
    fn parity3_has_full_sensitivity() {
        let parity = TruthTable::from_fn(3, |x| x.count_ones() % 2 == 1).unwrap();
        assert_eq!(parity.sensitivity(), 3);
    }

    #[test]
    fn threshold_1100_has_sensitivity_two() {
        // symmetric function with weight values 1,1,0,0
        let t = TruthTable::from_fn(3, |x| x.count_ones() < 2).unwrap();
        assert_eq!(t.sensitivity(), 2);
    }

    #[test]
    fn out_of_range_index_is_a_bounds_error() {
        assert_eq!(
            and2().sensitivity_at(4),
            Err(Error::Bounds { index: 4, len: 4 })
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            TruthTable::from_fn(21, |_| false),
            Err(Error::Size { n: 21, cap: 20 })
        );
        assert!(TruthTable::from_fn_with_cap(21, 21, |x| x == 0).is_ok());
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(matches!(
            TruthTable::from_values(&[true, false, true]),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            TruthTable::from_values(&[true]),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn complement_preserves_pointwise_sensitivity() {
        let t = TruthTable::from_fn(4, |x| x % 3 == 1).unwrap();
        let c = t.complement();
        for x in 0..t.len() {
            assert_eq!(t.sensitivity_at(x).unwrap(), c.sensitivity_at(x).unwrap());
        }
    }

    #[test]
    fn zero_sensitivity_iff_constant_exhaustive_n2() {
        for word in 0u8..16 {
            let values: alloc::vec::Vec<bool> = (0..4).map(|i| (word >> i) & 1 == 1).collect();
            let t = TruthTable::from_values(&values).unwrap();
            assert_eq!(t.sensitivity() == 0, t.is_constant());
        }
    }
}
