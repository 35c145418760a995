//! Offset-indexed bit table over a closed integer interval.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitTable {
    words: Vec<u64>,
    bits: usize,
    /// Value stored at bit 0.
    low: i64,
}

impl BitTable {
    /// Empty table covering `[low, high]`.
    pub fn new(low: i64, high: i64) -> Self {
        assert!(low <= high);
        let bits = (high - low) as usize + 1;
        BitTable {
            words: vec![0; bits.div_ceil(64)],
            bits,
            low,
        }
    }

    pub fn insert(&mut self, value: i64) {
        let i = (value - self.low) as usize;
        assert!(i < self.bits, "value {value} outside table");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, value: i64) -> bool {
        if value < self.low {
            return false;
        }
        let i = (value - self.low) as usize;
        i < self.bits && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= src + shift`, dropping anything that falls outside the table.
    pub fn or_shifted(&mut self, src: &BitTable, shift: i64) {
        debug_assert_eq!(self.bits, src.bits);
        debug_assert_eq!(self.low, src.low);
        let n = self.words.len() as i64;
        let ws = shift.div_euclid(64);
        let bs = shift.rem_euclid(64) as u32;
        for (w, &word) in src.words.iter().enumerate() {
            if word == 0 {
                continue;
            }
            let lo = w as i64 + ws;
            if (0..n).contains(&lo) {
                self.words[lo as usize] |= word << bs;
            }
            if bs > 0 && (0..n).contains(&(lo + 1)) {
                self.words[(lo + 1) as usize] |= word >> (64 - bs);
            }
        }
        self.mask_tail();
    }

    pub fn union_with(&mut self, other: &BitTable) {
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d |= s;
        }
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Set values in increasing order.
    pub fn values(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.count());
        for (w, &word) in self.words.iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                out.push(self.low + (w * 64 + b) as i64);
                rest &= rest - 1;
            }
        }
        out
    }

    fn mask_tail(&mut self) {
        let extra = self.words.len() * 64 - self.bits;
        if extra > 0 {
            let last = self.words.len() - 1;
            self.words[last] &= u64::MAX >> extra;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::BitTable;

    #[test]
    fn shifts_cross_word_boundaries() {
        let mut t = BitTable::new(-100, 100);
        t.insert(-100);
        t.insert(0);
        t.insert(63);
        let mut u = BitTable::new(-100, 100);
        u.or_shifted(&t, 37);
        assert_eq!(u.values(), vec![-63, 37, 100]);
        let mut v = BitTable::new(-100, 100);
        v.or_shifted(&t, -65);
        assert_eq!(v.values(), vec![-65, -2]);
    }

    #[test]
    fn out_of_range_bits_are_dropped() {
        let mut t = BitTable::new(0, 10);
        t.insert(10);
        let mut u = BitTable::new(0, 10);
        u.or_shifted(&t, 1);
        assert!(u.is_empty());
        assert!(!u.contains(11));
        assert!(!u.contains(-1));
    }
}
