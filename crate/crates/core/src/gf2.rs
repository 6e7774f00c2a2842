//! Bit-packed linear algebra over GF(2).

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(WORD)], len }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut r = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            r.set(i, b);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        let mask = 1u64 << (i % WORD);
        if v {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
            .filter(|&i| i < self.len)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Augmented system `A x = b` with one packed row per equation. The constant
/// lives in the extra column `cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2System {
    cols: usize,
    rows: Vec<BitRow>,
}

/// Outcome of elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<bool>),
    Underdetermined { free: Vec<usize> },
    Inconsistent,
}

impl Gf2System {
    pub fn new(cols: usize) -> Self {
        Gf2System { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    /// Adds `sum(vars) = rhs`. Repeated variables cancel.
    pub fn push(&mut self, vars: &[usize], rhs: bool) {
        let mut row = BitRow::zeros(self.cols + 1);
        for &v in vars {
            row.flip(v);
        }
        row.set(self.cols, rhs);
        self.rows.push(row);
    }

    pub fn push_row(&mut self, row: BitRow) {
        assert_eq!(row.len(), self.cols + 1);
        self.rows.push(row);
    }

    /// Reduced row echelon form; pivots chosen by ascending column.
    /// Returns the reduced rows (zero rows dropped, an inconsistent row kept)
    /// and the pivot columns.
    pub fn reduce(&self) -> (Vec<BitRow>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else { continue };
            rows.swap(rank, found);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.retain(|r| !r.is_zero());
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.reduce().1.len()
    }

    pub fn solve(&self) -> Solution {
        let (rows, pivots) = self.reduce();
        if rows.len() > pivots.len() {
            return Solution::Inconsistent;
        }
        if pivots.len() < self.cols {
            let free = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
            return Solution::Underdetermined { free };
        }
        let mut x = vec![false; self.cols];
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row.get(self.cols);
        }
        Solution::Unique(x)
    }

    /// Basis of the solution space of the homogeneous part.
    pub fn kernel(&self) -> Vec<BitRow> {
        let (rows, pivots) = self.reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = BitRow::zeros(self.cols);
                v.set(f, true);
                for (row, &p) in rows.iter().zip(&pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    pub fn satisfied_by(&self, x: &[bool]) -> bool {
        self.rows.iter().all(|row| {
            let lhs = row.ones().filter(|&i| i < self.cols).fold(false, |acc, i| acc ^ x[i]);
            lhs == row.get(self.cols)
        })
    }
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
pub fn span_basis(vectors: &[BitRow], len: usize) -> Vec<BitRow> {
    let mut sys = Gf2System::new(len);
    for v in vectors {
        let mut row = BitRow::zeros(len + 1);
        for i in v.ones() {
            row.set(i, true);
        }
        sys.push_row(row);
    }
    let (rows, _) = sys.reduce();
    rows.into_iter()
        .map(|r| {
            let mut out = BitRow::zeros(len);
            for i in r.ones().filter(|&i| i < len) {
                out.set(i, true);
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unique_solution() {
        let mut s = Gf2System::new(3);
        s.push(&[0], true);
        s.push(&[0, 1], false);
        s.push(&[1, 2], true);
        assert_eq!(s.solve(), Solution::Unique(vec![true, true, false]));
    }

    #[test]
    fn inconsistent_and_free() {
        let mut s = Gf2System::new(2);
        s.push(&[0, 1], true);
        assert_eq!(s.solve(), Solution::Underdetermined { free: vec![1] });
        s.push(&[0, 1], false);
        assert_eq!(s.solve(), Solution::Inconsistent);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let n = 150;
        let mut s = Gf2System::new(n);
        s.push(&[0], true);
        for i in 1..n {
            s.push(&[i - 1, i], false);
        }
        assert_eq!(s.solve(), Solution::Unique(vec![true; n]));
    }

    proptest! {
        #[test]
        fn kernel_vectors_satisfy_homogeneous_system(
            rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 7), 0..9)
        ) {
            let mut s = Gf2System::new(7);
            for r in &rows {
                let vars: Vec<usize> = (0..7).filter(|&i| r[i]).collect();
                s.push(&vars, false);
            }
            let kernel = s.kernel();
            prop_assert_eq!(kernel.len(), 7 - s.rank());
            for v in &kernel {
                prop_assert!(s.satisfied_by(&v.to_bits()));
            }
            // brute force: solution count is 2^dim
            let count = (0u32..128).filter(|m| {
                let x: Vec<bool> = (0..7).map(|i| m >> i & 1 == 1).collect();
                s.satisfied_by(&x)
            }).count();
            prop_assert_eq!(count, 1usize << kernel.len());
        }
    }
}
