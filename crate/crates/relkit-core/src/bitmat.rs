//! Packed Boolean matrix. Rows are contiguous u64 spans; bits past the
//! column count in the last word of a row are always zero, so word-wise
//! equality and lattice operations are exact.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitMat {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMat {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row],
        }
    }

    fn tail_mask(&self) -> u64 {
        match self.cols % 64 {
            0 => !0,
            r => (1u64 << r) - 1,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let w = self.words[r * self.words_per_row + c / 64];
        w >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.words_per_row + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.words[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Column indices of the set bits in row `r`, ascending.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn count_row(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &BitMat) -> BitMat {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn intersect(&self, other: &BitMat) -> BitMat {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    pub fn negate(&self) -> BitMat {
        let mut out = self.clone();
        let tail = self.tail_mask();
        let wpr = self.words_per_row.max(1);
        for (i, w) in out.words.iter_mut().enumerate() {
            *w = !*w;
            if i % wpr == wpr - 1 {
                *w &= tail;
            }
        }
        out
    }

    /// Whether every bit of `other` is also set in `self`.
    pub fn includes(&self, other: &BitMat) -> bool {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.words
            .iter()
            .zip(&other.words)
            .all(|(s, o)| o & !s == 0)
    }

    pub fn transpose(&self) -> BitMat {
        let mut out = BitMat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                out.set(c, r, true);
            }
        }
        out
    }

    /// Boolean matrix product, accumulating target rows by word-wise OR.
    pub fn compose(&self, other: &BitMat) -> BitMat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = BitMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            let mid: Vec<usize> = self.row_ones(r).collect();
            let row = out.row_mut(r);
            for m in mid {
                for (w, o) in row.iter_mut().zip(other.row(m)) {
                    *w |= o;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_bits_stay_zero_after_negate() {
        let m = BitMat::zero(2, 3);
        let n = m.negate();
        assert_eq!(n.row(0)[0], 0b111);
        assert!(n.negate().is_zero());
    }

    #[test]
    fn compose_matches_naive() {
        let mut a = BitMat::zero(2, 70);
        let mut b = BitMat::zero(70, 3);
        a.set(0, 5, true);
        a.set(0, 69, true);
        a.set(1, 68, true);
        b.set(5, 0, true);
        b.set(69, 2, true);
        b.set(68, 1, true);
        let c = a.compose(&b);
        assert!(c.get(0, 0) && c.get(0, 2) && c.get(1, 1));
        assert!(!c.get(0, 1) && !c.get(1, 0) && !c.get(1, 2));
    }

    #[test]
    fn row_ones_crosses_word_boundaries() {
        let mut m = BitMat::zero(1, 130);
        for c in [0, 63, 64, 129] {
            m.set(0, c, true);
        }
        assert_eq!(m.row_ones(0).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
    }
}
