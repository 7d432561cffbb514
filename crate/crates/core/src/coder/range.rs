//! 64-bit range coder with byte-wise renormalization.
//!
//! The encoder keeps the low end of the current interval in a `u64`; bytes
//! that leave the top of `low` are final except for carries, which are
//! applied directly to the bytes already written. `range` is kept in
//! `[2^56, 2^64)` between symbols, so the interval width after coding a
//! symbol is never below `2^40`.

use super::{CoderError, QuantizedCdf, PRECISION_BITS, PRECISION_TOTAL};
use crate::estimators::Symbol;

const TOP: u64 = 1 << 56;

#[derive(Debug, Clone)]
pub struct RangeEncoder {
    low: u64,
    range: u64,
    out: Vec<u8>,
}

impl Default for RangeEncoder {
    fn default() -> Self {
        Self::new()
    }
}

impl RangeEncoder {
    pub fn new() -> Self {
        RangeEncoder {
            low: 0,
            range: u64::MAX,
            out: Vec::new(),
        }
    }

    /// Narrows the interval to `[start, start + freq)` out of the total.
    pub fn encode(&mut self, start: u32, freq: u32) {
        debug_assert!(freq > 0 && start + freq <= PRECISION_TOTAL);
        let r = self.range >> PRECISION_BITS;
        let (low, carry) = self.low.overflowing_add(r * start as u64);
        self.low = low;
        if carry {
            self.propagate_carry();
        }
        self.range = r * freq as u64;
        while self.range < TOP {
            self.out.push((self.low >> 56) as u8);
            self.low <<= 8;
            self.range <<= 8;
        }
    }

    pub fn encode_symbol(&mut self, cdf: &QuantizedCdf, s: Symbol) {
        self.encode(cdf.start(s), cdf.freq(s));
    }

    fn propagate_carry(&mut self) {
        for b in self.out.iter_mut().rev() {
            let (v, overflow) = b.overflowing_add(1);
            *b = v;
            if !overflow {
                return;
            }
        }
        unreachable!("carry past the start of the coded interval");
    }

    /// Writes all eight bytes of `low`, which lies inside the final interval.
    /// The decoder therefore never reads past the end of the payload.
    pub fn finish(mut self) -> Vec<u8> {
        self.out.extend_from_slice(&self.low.to_be_bytes());
        self.out
    }
}

#[derive(Debug, Clone)]
pub struct RangeDecoder<'a> {
    code: u64,
    range: u64,
    input: &'a [u8],
    pos: usize,
}

impl<'a> RangeDecoder<'a> {
    pub fn new(input: &'a [u8]) -> Result<Self, CoderError> {
        let head: [u8; 8] = input
            .get(..8)
            .ok_or(CoderError::Truncated)?
            .try_into()
            .expect("eight bytes");
        Ok(RangeDecoder {
            code: u64::from_be_bytes(head),
            range: u64::MAX,
            input,
            pos: 8,
        })
    }

    pub fn decode(&mut self, cdf: &QuantizedCdf) -> Result<Symbol, CoderError> {
        let r = self.range >> PRECISION_BITS;
        let target = (self.code / r).min(PRECISION_TOTAL as u64 - 1) as u32;
        let s = cdf.find(target);
        self.code -= r * cdf.start(s) as u64;
        self.range = r * cdf.freq(s) as u64;
        while self.range < TOP {
            let b = *self.input.get(self.pos).ok_or(CoderError::Truncated)?;
            self.pos += 1;
            self.code = (self.code << 8) | b as u64;
            self.range <<= 8;
        }
        Ok(s)
    }

    /// Fails if the payload holds bytes the encoder could not have written.
    pub fn finish(self) -> Result<(), CoderError> {
        match self.input.len() - self.pos {
            0 => Ok(()),
            extra => Err(CoderError::TrailingBytes(extra)),
        }
    }
}
