//! The truth-table file format.
//!
//! A table file is line-oriented: blank lines and lines starting with `#`
//! are ignored, the rest are `key=value` pairs. `n=<int>` gives the number
//! of variables and exactly one of
//!
//! * `bits=<2^n binary digits>` — entry `i` of the table is the i-th digit,
//!   leftmost digit first (`i = 0`);
//! * `hex=<ceil(2^n / 4) hex digits>` — the table packed into a hexadecimal
//!   number whose bit `i` is entry `i` (so the rightmost hex digit holds
//!   entries 0-3).
//!
//! Entry `i` is the function value on the input vector encoded by `i` with
//! `x_1` as the least significant bit: `i = sum x_j * 2^(j-1)`.

use symsens_core::{Error, TruthTable};

/// Parses the text of a truth-table file.
pub fn parse_truth_table(text: &str) -> Result<TruthTable, Error> {
    let mut n: Option<usize> = None;
    let mut bits: Option<String> = None;
    let mut hex: Option<String> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Format(format!("line {}: expected key=value", lineno + 1)))?;
        match key.trim() {
            "n" => {
                let parsed = value.trim().parse().map_err(|_| {
                    Error::Format(format!("line {}: bad variable count {value:?}", lineno + 1))
                })?;
                n = Some(parsed);
            }
            "bits" => bits = Some(value.trim().to_string()),
            "hex" => hex = Some(value.trim().to_string()),
            other => {
                return Err(Error::Format(format!(
                    "line {}: unknown key {other:?}",
                    lineno + 1
                )))
            }
        }
    }
    let n = n.ok_or_else(|| Error::Format("missing n= header".to_string()))?;
    if n == 0 {
        return Err(Error::Format("n must be at least 1".to_string()));
    }
    if n > symsens_core::FULL_TABLE_CAP {
        return Err(Error::Size {
            n,
            cap: symsens_core::FULL_TABLE_CAP,
        });
    }
    let len = 1usize << n;
    match (bits, hex) {
        (Some(s), None) => {
            if s.len() != len {
                return Err(Error::Format(format!(
                    "bits= needs exactly 2^{n} = {len} digits, got {}",
                    s.len()
                )));
            }
            let mut values = vec![false; len];
            for (i, c) in s.chars().enumerate() {
                values[i] = match c {
                    '0' => false,
                    '1' => true,
                    _ => return Err(Error::Format(format!("bits= contains {c:?}"))),
                };
            }
            TruthTable::from_values(&values)
        }
        (None, Some(s)) => {
            let digits = len.div_ceil(4);
            if s.len() != digits {
                return Err(Error::Format(format!(
                    "hex= needs exactly {digits} digits for n = {n}, got {}",
                    s.len()
                )));
            }
            let mut values = vec![false; len];
            for (pos, c) in s.chars().rev().enumerate() {
                let nibble = c.to_digit(16).ok_or_else(|| {
                    Error::Format(format!("hex= contains {c:?}"))
                })?;
                for bit in 0..4 {
                    let index = pos * 4 + bit;
                    let set = (nibble >> bit) & 1 == 1;
                    if index < len {
                        values[index] = set;
                    } else if set {
                        return Err(Error::Format(format!(
                            "hex= sets bit {index}, beyond the 2^{n}-entry table"
                        )));
                    }
                }
            }
            TruthTable::from_values(&values)
        }
        (Some(_), Some(_)) => Err(Error::Format(
            "give either bits= or hex=, not both".to_string(),
        )),
        (None, None) => Err(Error::Format("missing bits= or hex= line".to_string())),
    }
}

/// Renders a table in the binary form accepted by [`parse_truth_table`].
pub fn to_binary_format(table: &TruthTable) -> String {
    let mut bits = String::with_capacity(table.len() as usize);
    for i in 0..table.len() {
        bits.push(if table.get(i) { '1' } else { '0' });
    }
    format!("n={}\nbits={}\n", table.n(), bits)
}

/// Renders a table in the hexadecimal form accepted by [`parse_truth_table`].
pub fn to_hex_format(table: &TruthTable) -> String {
    let len = table.len() as usize;
    let digits = len.div_ceil(4);
    let mut hex = String::with_capacity(digits);
    for d in (0..digits).rev() {
        let mut nibble = 0u32;
        for bit in 0..4 {
            let index = d * 4 + bit;
            if index < len && table.get(index as u64) {
                nibble |= 1 << bit;
            }
        }
        hex.push(char::from_digit(nibble, 16).unwrap());
    }
    format!("n={}\nhex={}\n", table.n(), hex)
}
