//! Packed bit buffer used by both table representations.

use alloc::vec;
use alloc::vec::Vec;

/// Fixed-length bit sequence packed into `u64` words, LSB-first within a
/// word. Bits past `len` in the last word are kept zero so that derived
/// `Eq`/`Hash` see only the logical contents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitBuf {
    len: usize,
    words: Vec<u64>,
}

impl BitBuf {
    pub fn zeros(len: usize) -> Self {
        BitBuf {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bools: &[bool]) -> Self {
        let mut buf = BitBuf::zeros(bools.len());
        for (i, &b) in bools.iter().enumerate() {
            buf.set(i, b);
        }
        buf
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// All bits flipped.
    pub fn complemented(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if let Some(last) = words.last_mut() {
            let used = self.len % 64;
            if used != 0 {
                *last &= (1u64 << used) - 1;
            }
        }
        BitBuf {
            len: self.len,
            words,
        }
    }
}
