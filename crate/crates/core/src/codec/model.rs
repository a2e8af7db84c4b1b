use super::CodecError;
use crate::transform::SymbolRange;

/// Smallest amount added to a symbol's count each time it is coded.
pub const MIN_INCREMENT: u32 = 32;

/// Largest per-symbol increment, reached by alphabets of 2^18 symbols.
pub const MAX_INCREMENT: u32 = 1 << 16;

/// Counts are halved before the total would exceed this.
pub const RESCALE_LIMIT: u32 = 1 << 30;

/// Largest alphabet a model accepts.
pub const MAX_ALPHABET: u64 = 1 << 24;

/// Increment for an alphabet of `size` symbols: `size / 4` clamped to
/// [`MIN_INCREMENT`]..=[`MAX_INCREMENT`].
///
/// Each symbol starts with a count of 1, so the initial flat prior weighs as
/// much as `size / increment` coded symbols. Scaling the increment keeps that
/// weight near 4 even for the wide alphabets of deep subbands.
pub fn increment_for(size: u64) -> u32 {
    (size / 4).clamp(MIN_INCREMENT as u64, MAX_INCREMENT as u64) as u32
}

/// Adaptive order-0 frequency model over a contiguous integer alphabet.
///
/// Every count starts at 1 and grows by [`increment_for`] the alphabet size
/// per coded symbol; when
/// the total would pass [`RESCALE_LIMIT`] all counts are halved (floor, but
/// never below 1). Cumulative frequencies live in a Fenwick tree so lookups
/// stay logarithmic for the wide alphabets of deep subbands.
#[derive(Debug, Clone)]
pub struct AdaptiveModel {
    range: SymbolRange,
    counts: Vec<u32>,
    tree: Vec<u32>,
    total: u32,
    increment: u32,
}

impl AdaptiveModel {
    pub fn new(range: SymbolRange) -> Result<Self, CodecError> {
        let size = range.size();
        if size > MAX_ALPHABET {
            return Err(CodecError::AlphabetTooLarge(size));
        }
        let mut model = Self {
            range,
            counts: vec![1; size as usize],
            tree: Vec::new(),
            total: 0,
            increment: increment_for(size),
        };
        model.rebuild();
        Ok(model)
    }

    pub fn range(&self) -> SymbolRange {
        self.range
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn increment(&self) -> u32 {
        self.increment
    }

    pub fn count(&self, value: i64) -> Option<u32> {
        self.index_of(value).map(|i| self.counts[i])
    }

    pub(crate) fn index_of(&self, value: i64) -> Option<usize> {
        self.range
            .contains(value)
            .then(|| (value - self.range.lo) as usize)
    }

    pub(crate) fn value_of(&self, index: usize) -> i64 {
        self.range.lo + index as i64
    }

    /// `(cumulative count below, count)` of symbol `index`.
    pub(crate) fn interval(&self, index: usize) -> (u32, u32) {
        (self.prefix(index), self.counts[index])
    }

    /// Symbol whose interval contains `target < total`, with that interval.
    pub(crate) fn find(&self, target: u32) -> (usize, u32, u32) {
        debug_assert!(target < self.total);
        let mut pos = 0usize;
        let mut rest = target;
        let mut step = self.tree.len().next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && self.tree[next] <= rest {
                pos = next;
                rest -= self.tree[next];
            }
            step >>= 1;
        }
        // `pos` is the 1-based count of symbols whose cumulative total ≤ target
        (pos, target - rest, self.counts[pos])
    }

    pub(crate) fn update(&mut self, index: usize) {
        let inc = self.increment;
        if self.total + inc > RESCALE_LIMIT {
            for c in &mut self.counts {
                *c = (*c / 2).max(1);
            }
            self.rebuild();
        }
        self.counts[index] += inc;
        self.total += inc;
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] += inc;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum of counts of symbols `0..index`.
    fn prefix(&self, index: usize) -> u32 {
        let mut sum = 0;
        let mut i = index;
        while i > 0 {
            sum += self.tree[i];
            i &= i - 1;
        }
        sum
    }

    fn rebuild(&mut self) {
        let n = self.counts.len();
        self.tree = vec![0; n + 1];
        for (i, &c) in self.counts.iter().enumerate() {
            self.tree[i + 1] = c;
        }
        for i in 1..=n {
            let parent = i + (i & i.wrapping_neg());
            if parent <= n {
                self.tree[parent] += self.tree[i];
            }
        }
        self.total = self.counts.iter().sum();
    }
}
