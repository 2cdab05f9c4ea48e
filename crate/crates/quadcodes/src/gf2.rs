//! Bit-packed linear algebra over GF(2).
//!
//! Vectors are [`BitWord`]s: up to 64 coordinates packed in a `u64`.
//! Coordinate `i` lives in bit `i`, so the *first* symbol of a 0/1 string is
//! bit 0 — `"1111000000000000"` has bits 0..=3 set. Matrices are row lists of
//! equal width. Rank, nullspace bases, and span membership all flow through
//! reduced row echelon form.

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

/// Longest supported vector. Longer inputs are rejected rather than chunked.
pub const MAX_LEN: usize = 64;

/// A vector in GF(2)^len, 1 <= len <= 64.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    bits: u64,
    len: usize,
}

impl BitWord {
    /// The zero vector of the given length.
    pub fn zero(len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::LengthOutOfRange(len));
        }
        Ok(Self { bits: 0, len })
    }

    /// The all-ones vector of the given length.
    pub fn all_ones(len: usize) -> Result<Self> {
        let mut w = Self::zero(len)?;
        w.bits = mask(len);
        Ok(w)
    }

    /// Builds a word from a raw bit pattern. Bits at positions `len..` must be zero.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::LengthOutOfRange(len));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::BitsOutOfRange { len });
        }
        Ok(Self { bits, len })
    }

    /// Word with ones exactly at the given coordinates.
    pub fn from_support(support: &[usize], len: usize) -> Result<Self> {
        let mut w = Self::zero(len)?;
        for &i in support {
            if i >= len {
                return Err(Error::PositionOutOfRange { pos: i, len });
            }
            w.bits |= 1 << i;
        }
        Ok(w)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // length is always at least 1
    }

    /// Number of ones.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `i`.
    ///
    /// # Panics
    /// Panics if `i >= self.len()`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range (len={})", self.len);
        self.bits >> i & 1 == 1
    }

    /// Sets coordinate `i`.
    ///
    /// # Panics
    /// Panics if `i >= self.len()`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range (len={})", self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    /// Index of the first nonzero coordinate, if any.
    pub fn pivot(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.bits >> i & 1 == 1)
    }

    /// Dot product over GF(2): parity of the overlap.
    ///
    /// # Panics
    /// Panics if the lengths differ.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot product of different lengths");
        (self.bits & other.bits).count_ones() % 2 == 1
    }
}

impl BitXor for BitWord {
    type Output = BitWord;

    fn bitxor(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.len, rhs.len, "xor of different lengths");
        BitWord { bits: self.bits ^ rhs.bits, len: self.len }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = BitWord::zero(s.len())?;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                _ => return Err(Error::Parse(format!("invalid symbol {c:?} in 0/1 string"))),
            }
        }
        Ok(w)
    }
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1 << len) - 1
    }
}

/// A matrix over GF(2), stored as packed rows of equal width.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<u64>,
    cols: usize,
}

impl BitMatrix {
    /// An empty matrix (zero rows) of the given width.
    pub fn new(cols: usize) -> Result<Self> {
        if cols == 0 || cols > MAX_LEN {
            return Err(Error::LengthOutOfRange(cols));
        }
        Ok(Self { rows: Vec::new(), cols })
    }

    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = BitWord>) -> Result<Self> {
        let mut m = Self::new(cols)?;
        for row in rows {
            m.push_row(row)?;
        }
        Ok(m)
    }

    /// Parses one 0/1 string per row.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let first = rows.first().ok_or_else(|| Error::Parse("empty matrix".into()))?;
        let mut m = Self::new(first.len())?;
        for s in rows {
            m.push_row(s.parse()?)?;
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::new(n)?;
        for i in 0..n {
            m.rows.push(1 << i);
        }
        Ok(m)
    }

    pub fn push_row(&mut self, row: BitWord) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::RowLengthMismatch { expected: self.cols, found: row.len() });
        }
        self.rows.push(row.bits());
        Ok(())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> BitWord {
        BitWord { bits: self.rows[i], len: self.cols }
    }

    pub fn rows(&self) -> impl Iterator<Item = BitWord> + '_ {
        self.rows.iter().map(|&bits| BitWord { bits, len: self.cols })
    }

    pub(crate) fn row_bits(&self) -> &[u64] {
        &self.rows
    }

    /// Reduced row echelon form with zero rows dropped.
    ///
    /// Pivot columns are strictly increasing, each pivot column contains a
    /// single one, and the row span is unchanged.
    pub fn rref(&self) -> BitMatrix {
        let mut rows = self.rows.clone();
        let mut placed = 0;
        for col in 0..self.cols {
            let Some(r) = (placed..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(placed, r);
            let pivot_row = rows[placed];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != placed && *row >> col & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
            placed += 1;
        }
        rows.truncate(placed);
        BitMatrix { rows, cols: self.cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().n_rows()
    }

    /// A basis of `{x : M x = 0}`, one word per free column, free columns ascending.
    pub fn nullspace_basis(&self) -> Vec<BitWord> {
        let r = self.rref();
        let pivots: Vec<usize> = r.rows.iter().map(|row| row.trailing_zeros() as usize).collect();
        let mut pivot_mask = 0u64;
        for &p in &pivots {
            pivot_mask |= 1 << p;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivot_mask >> free & 1 == 1 {
                continue;
            }
            let mut x = 1u64 << free;
            for (i, &p) in pivots.iter().enumerate() {
                if r.rows[i] >> free & 1 == 1 {
                    x |= 1 << p;
                }
            }
            debug_assert!(self.rows.iter().all(|row| (row & x).count_ones() % 2 == 0));
            basis.push(BitWord { bits: x, len: self.cols });
        }
        basis
    }

    /// Whether `v` is a GF(2) combination of the rows.
    pub fn in_span(&self, v: &BitWord) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::VectorLengthMismatch { expected: self.cols, found: v.len() });
        }
        let r = self.rref();
        let mut x = v.bits();
        for row in &r.rows {
            if x >> row.trailing_zeros() & 1 == 1 {
                x ^= row;
            }
        }
        Ok(x == 0)
    }

    /// Matrix-vector product: `y_i = row_i . v`.
    pub fn mul_vec(&self, v: &BitWord) -> Result<BitWord> {
        if v.len() != self.cols {
            return Err(Error::VectorLengthMismatch { expected: self.cols, found: v.len() });
        }
        let mut bits = 0u64;
        for (i, row) in self.rows.iter().enumerate() {
            bits |= u64::from((row & v.bits()).count_ones() % 2) << i;
        }
        BitWord::from_bits(bits, self.rows.len().max(1))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut rows = vec![0u64; self.cols];
        for (i, &row) in self.rows.iter().enumerate() {
            for (j, out) in rows.iter_mut().enumerate() {
                *out |= (row >> j & 1) << i;
            }
        }
        BitMatrix { rows, cols: self.rows.len().max(1) }
    }

    /// A uniformly seeded invertible n-by-n matrix; identical output for
    /// identical seeds.
    pub fn random_invertible(n: usize, seed: u64) -> Result<BitMatrix> {
        if n == 0 || n > 30 {
            return Err(Error::MatrixDimOutOfRange(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rows: Vec<u64> = (0..n).map(|_| rng.random::<u64>() & mask(n)).collect();
            let m = BitMatrix { rows, cols: n };
            if m.rank() == n {
                return Ok(m);
            }
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows(), self.cols)?;
        for row in self.rows() {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&str]) -> BitMatrix {
        BitMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn word_string_orientation() {
        // The first symbol of the string is coordinate 0.
        let w: BitWord = "1111000000000000".parse().unwrap();
        assert_eq!(w.bits(), 0b1111);
        assert_eq!(w.weight(), 4);
        assert_eq!(w.support().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(w.to_string(), "1111000000000000");
    }

    #[test]
    fn word_rejects_out_of_range() {
        assert!(BitWord::zero(0).is_err());
        assert!(BitWord::zero(65).is_err());
        assert!(BitWord::from_bits(0b100, 2).is_err());
        assert!(BitWord::from_bits(u64::MAX, 64).is_ok());
    }

    #[test]
    fn rref_invertible_2x2() {
        assert_eq!(m(&["11", "01"]).rref(), m(&["10", "01"]));
    }

    #[test]
    fn rref_collapses_duplicate_rows() {
        assert_eq!(m(&["110", "110"]).rref(), m(&["110"]));
    }

    #[test]
    fn rref_of_card_matrix_has_rank_3() {
        // Columns are the cards 0, 21, 42, 63 of the deck of dimension 6,
        // with an all-ones row appended: rank 3, nullspace {1111}.
        let a = augmented(&[0, 21, 42, 63], 6);
        assert_eq!(a.rank(), 3);
        let basis = a.nullspace_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].to_string(), "1111");
    }

    fn augmented(cards: &[u32], dim: u32) -> BitMatrix {
        let mut rows = Vec::new();
        for i in 0..dim {
            let mut w = BitWord::zero(cards.len()).unwrap();
            for (j, &c) in cards.iter().enumerate() {
                w.set(j, c >> i & 1 == 1);
            }
            rows.push(w);
        }
        rows.push(BitWord::all_ones(cards.len()).unwrap());
        BitMatrix::from_rows(cards.len(), rows).unwrap()
    }

    #[test]
    fn rank_edge_cases() {
        let zero = BitMatrix::from_rows(4, [BitWord::zero(4).unwrap()]).unwrap();
        assert_eq!(zero.rank(), 0);
        assert_eq!(BitMatrix::identity(4).unwrap().rank(), 4);
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(BitMatrix::identity(3).unwrap().nullspace_basis().is_empty());
    }

    #[test]
    fn nullspace_of_parity_check_row() {
        // One all-ones row of width 4: the even-weight space, 3 basis words.
        let m = BitMatrix::from_rows(4, [BitWord::all_ones(4).unwrap()]).unwrap();
        let basis = m.nullspace_basis();
        assert_eq!(basis.len(), 3);
        for b in &basis {
            assert_eq!(b.weight() % 2, 0);
            assert!(!m.row(0).dot(b));
        }
    }

    #[test]
    fn in_span_basics() {
        let a = m(&["1100", "0011"]);
        assert!(a.in_span(&BitWord::zero(4).unwrap()).unwrap());
        assert!(a.in_span(&"1100".parse().unwrap()).unwrap());
        assert!(a.in_span(&"1111".parse().unwrap()).unwrap());
        // A one in a non-pivot position unreachable from the span.
        assert!(!a.in_span(&"1000".parse().unwrap()).unwrap());
        assert!(a.in_span(&BitWord::zero(3).unwrap()).is_err());
    }

    #[test]
    fn random_invertible_is_seed_stable() {
        for n in [1, 2, 5, 17, 30] {
            let a = BitMatrix::random_invertible(n, 42).unwrap();
            let b = BitMatrix::random_invertible(n, 42).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.rank(), n);
        }
        assert_ne!(
            BitMatrix::random_invertible(8, 1).unwrap(),
            BitMatrix::random_invertible(8, 2).unwrap()
        );
        assert_eq!(BitMatrix::random_invertible(1, 7).unwrap(), m(&["1"]));
        assert!(BitMatrix::random_invertible(0, 0).is_err());
        assert!(BitMatrix::random_invertible(31, 0).is_err());
    }

    proptest! {
        #[test]
        fn rref_is_a_projection(rows in proptest::collection::vec(0u64..1 << 12, 1..8)) {
            let m = BitMatrix { rows, cols: 12 };
            let r = m.rref();
            prop_assert_eq!(r.rref(), r);
        }

        #[test]
        fn rank_equals_transpose_rank(rows in proptest::collection::vec(0u64..1 << 10, 1..12)) {
            let m = BitMatrix { rows, cols: 10 };
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(rows in proptest::collection::vec(0u64..1 << 14, 1..10)) {
            let m = BitMatrix { rows, cols: 14 };
            let basis = m.nullspace_basis();
            prop_assert_eq!(m.rank() + basis.len(), 14);
            for b in &basis {
                for row in m.rows() {
                    prop_assert!(!row.dot(b));
                }
            }
        }
    }
}
