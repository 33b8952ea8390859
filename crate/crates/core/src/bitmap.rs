//! Fixed-size bitmap with the stride, run, and iteration primitives the
//! sieves need. Bits above `len` are never set; callers that write raw
//! words must call [`Bitmap::mask_tail`] afterwards.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitmap {
    len: u64,
    words: Vec<u64>,
}

impl Bitmap {
    pub fn new(len: u64) -> Self {
        let words = vec![0u64; len.div_ceil(64) as usize];
        Bitmap { len, words }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, i: u64) {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn clear(&mut self, i: u64) {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Set `start, start + step, ...` while below `len`.
    pub fn mark_stride(&mut self, start: u64, step: u64) {
        debug_assert!(step > 0);
        let mut i = start;
        while i < self.len {
            self.set(i);
            i += step;
        }
    }

    pub fn or_assign(&mut self, other: &Bitmap) {
        assert_eq!(self.len, other.len, "bitmap length mismatch");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// Clear any bits at positions ≥ `len`; required after raw word writes.
    pub fn mask_tail(&mut self) {
        let tail = self.len & 63;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            next_word: 0,
            cur: 0,
        }
    }

    /// Longest run of set bits without wraparound: `(length, start)`.
    /// Ties go to the smallest start; `(0, None)` when no bit is set.
    pub fn longest_run(&self) -> (u64, Option<u64>) {
        let mut best_len = 0u64;
        let mut best_start = None;
        let mut run_start: Option<u64> = None;
        let mut i = 0u64;
        while i < self.len {
            // word fast paths
            if i & 63 == 0 && self.len - i >= 64 {
                let w = self.words[(i >> 6) as usize];
                if w == u64::MAX {
                    run_start.get_or_insert(i);
                    i += 64;
                    continue;
                }
                if w == 0 {
                    if let Some(s) = run_start.take() {
                        if i - s > best_len {
                            best_len = i - s;
                            best_start = Some(s);
                        }
                    }
                    i += 64;
                    continue;
                }
            }
            if self.get(i) {
                run_start.get_or_insert(i);
            } else if let Some(s) = run_start.take() {
                if i - s > best_len {
                    best_len = i - s;
                    best_start = Some(s);
                }
            }
            i += 1;
        }
        if let Some(s) = run_start {
            if self.len - s > best_len {
                best_len = self.len - s;
                best_start = Some(s);
            }
        }
        (best_len, best_start)
    }

    /// Longest run of set bits on the cycle `0..len`: `(length, start)` with
    /// the start canonical in `[0, len)`. Ties go to the smallest canonical
    /// start; an all-ones map reports `(len, Some(0))`.
    pub fn longest_cyclic_run(&self) -> (u64, Option<u64>) {
        if self.len == 0 {
            return (0, None);
        }
        if self.count_ones() == self.len {
            return (self.len, Some(0));
        }
        // rotate the scan to begin just after some unset bit, then every run
        // is seen in full
        let zero = (0..self.len)
            .find(|&i| !self.get(i))
            .expect("an unset bit exists");
        let mut best_len = 0u64;
        let mut best_start: Option<u64> = None;
        let mut run_start: Option<u64> = None;
        for off in 1..=self.len {
            let i = (zero + off) % self.len;
            if self.get(i) {
                run_start.get_or_insert(i);
            } else if let Some(s) = run_start.take() {
                let l = if i >= s { i - s } else { i + self.len - s };
                if l > best_len || (l == best_len && best_start.is_none_or(|bs| s < bs)) {
                    best_len = l;
                    best_start = Some(s);
                }
            }
        }
        (best_len, best_start)
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    next_word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as u64;
                self.cur &= self.cur - 1;
                return Some((self.next_word as u64 - 1) * 64 + b);
            }
            if self.next_word == self.words.len() {
                return None;
            }
            self.cur = self.words[self.next_word];
            self.next_word += 1;
        }
    }
}
