//! Byte-oriented range coder with 64-bit state.
//!
//! The encoder keeps `low` and `range` in 64 bits and renormalizes whenever
//! `range` drops below 2^56, so with totals up to 2^30 the per-symbol
//! division loses at most 2^-26 of the range. Carries out of `low` ripple
//! back into the bytes already written.

use super::model::AdaptiveModel;

const TOP: u64 = 1 << 56;

#[derive(Debug)]
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
        Self {
            low: 0,
            range: u64::MAX,
            out: Vec::new(),
        }
    }

    /// Narrows the interval to `[cum, cum + freq)` out of `total`.
    pub fn encode(&mut self, cum: u32, freq: u32, total: u32) {
        debug_assert!(freq > 0 && cum + freq <= total);
        let r = self.range / total as u64;
        let (low, carry) = self.low.overflowing_add(r * cum as u64);
        if carry {
            self.propagate_carry();
        }
        self.low = low;
        self.range = r * freq as u64;
        while self.range < TOP {
            self.out.push((self.low >> 56) as u8);
            self.low <<= 8;
            self.range <<= 8;
        }
    }

    /// Codes `value` with `model` and adapts the model.
    ///
    /// Panics if `value` is outside the model's alphabet.
    pub fn encode_symbol(&mut self, model: &mut AdaptiveModel, value: i64) {
        let index = model
            .index_of(value)
            .unwrap_or_else(|| panic!("symbol {value} outside alphabet {:?}", model.range()));
        let (cum, freq) = model.interval(index);
        self.encode(cum, freq, model.total());
        model.update(index);
    }

    /// Bytes written so far, excluding the final flush.
    pub fn bytes_written(&self) -> usize {
        self.out.len()
    }

    /// Emits the shortest tail that pins a value inside the final interval.
    ///
    /// The decoder reads zeros past the end, so trailing zero bytes are
    /// dropped.
    pub fn finish(mut self) -> Vec<u8> {
        // Round `low` up to a multiple of 2^56; `range ≥ 2^56` keeps it inside.
        let v = (self.low as u128 + (TOP as u128 - 1)) & !(TOP as u128 - 1);
        if v > u64::MAX as u128 {
            self.propagate_carry();
        }
        self.out.push((v >> 56) as u8);
        while self.out.last() == Some(&0) {
            self.out.pop();
        }
        self.out
    }

    fn propagate_carry(&mut self) {
        for b in self.out.iter_mut().rev() {
            if *b == 0xFF {
                *b = 0;
            } else {
                *b += 1;
                return;
            }
        }
        unreachable!("carry past the start of the stream");
    }
}

#[derive(Debug)]
pub struct RangeDecoder<'a> {
    code: u64,
    range: u64,
    step: u64,
    input: &'a [u8],
    pos: usize,
}

impl<'a> RangeDecoder<'a> {
    pub fn new(input: &'a [u8]) -> Self {
        let mut dec = Self {
            code: 0,
            range: u64::MAX,
            step: 0,
            input,
            pos: 0,
        };
        for _ in 0..8 {
            dec.code = (dec.code << 8) | dec.next_byte() as u64;
        }
        dec
    }

    /// Target cumulative count for the next symbol; follow with [`consume`].
    ///
    /// [`consume`]: RangeDecoder::consume
    pub fn target(&mut self, total: u32) -> u32 {
        self.step = self.range / total as u64;
        (self.code / self.step).min(total as u64 - 1) as u32
    }

    pub fn consume(&mut self, cum: u32, freq: u32) {
        self.code -= self.step * cum as u64;
        self.range = self.step * freq as u64;
        while self.range < TOP {
            self.code = (self.code << 8) | self.next_byte() as u64;
            self.range <<= 8;
        }
    }

    pub fn decode_symbol(&mut self, model: &mut AdaptiveModel) -> i64 {
        let target = self.target(model.total());
        let (index, cum, freq) = model.find(target);
        self.consume(cum, freq);
        model.update(index);
        model.value_of(index)
    }

    /// Bytes pulled past the end of the input (read as zeros).
    pub fn overrun(&self) -> usize {
        self.pos.saturating_sub(self.input.len())
    }

    fn next_byte(&mut self) -> u8 {
        let b = self.input.get(self.pos).copied().unwrap_or(0);
        self.pos += 1;
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::SymbolRange;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn round_trip(values: &[i64], range: SymbolRange) -> Vec<u8> {
        let mut enc = RangeEncoder::new();
        let mut model = AdaptiveModel::new(range).unwrap();
        for &v in values {
            enc.encode_symbol(&mut model, v);
        }
        let bytes = enc.finish();
        let mut dec = RangeDecoder::new(&bytes);
        let mut model = AdaptiveModel::new(range).unwrap();
        for (i, &v) in values.iter().enumerate() {
            assert_eq!(dec.decode_symbol(&mut model), v, "symbol {i}");
        }
        bytes
    }

    #[test]
    fn empty_stream() {
        assert!(RangeEncoder::new().finish().is_empty());
    }

    #[test]
    fn single_symbols() {
        round_trip(&[0], SymbolRange::new(0, 0));
        round_trip(&[5], SymbolRange::new(-9, 9));
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let lo = rng.random_range(-600..-2);
            let hi = rng.random_range(2..600);
            let n = rng.random_range(0..3000);
            // skewed toward a few symbols so intervals vary widely
            let values: Vec<i64> = (0..n)
                .map(|_| {
                    if rng.random_bool(0.8) {
                        rng.random_range(-2..=2)
                    } else {
                        rng.random_range(lo..=hi)
                    }
                })
                .collect();
            round_trip(&values, SymbolRange::new(lo, hi));
        }
    }

    #[test]
    fn long_runs_trigger_carries() {
        // A dominant symbol at the top of the alphabet keeps `low` near the
        // top of its window, which is where carries happen.
        let mut values = vec![255i64; 600_000];
        values.extend((0..256).map(|v| v as i64));
        values.extend(std::iter::repeat_n(254, 1000));
        let bytes = round_trip(&values, SymbolRange::new(0, 255));
        assert!(bytes.len() < 4_000, "{} bytes", bytes.len());
    }

    #[test]
    fn survives_repeated_rescales() {
        // a wide alphabet gets the largest increment and rescales every few
        // thousand symbols
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let hi = (1i64 << 20) - 1;
        let values: Vec<i64> = (0..100_000)
            .map(|_| {
                if rng.random_bool(0.9) {
                    hi - rng.random_range(0..4)
                } else {
                    rng.random_range(0..=hi)
                }
            })
            .collect();
        round_trip(&values, SymbolRange::new(0, hi));
    }

    #[test]
    fn constant_stream_is_nearly_free() {
        let bytes = round_trip(&vec![0; 512 * 512], SymbolRange::new(-255, 255));
        assert!(bytes.len() < 200, "{} bytes", bytes.len());
    }
}
