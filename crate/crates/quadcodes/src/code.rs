//! Binary linear codes built from card sequences.
//!
//! A [`LinearCode`] is a subspace of GF(2)^len held as a canonical generator
//! matrix (reduced row echelon form, zero rows dropped), so two values are
//! equal exactly when they are the same code. A [`QuadCode`] is a validated
//! refinement: every codeword has even weight and the minimum nonzero weight
//! is at least 4. The code of a card sequence is the nullspace of the card
//! matrix with an all-ones row appended; its weight-4 codewords are exactly
//! the quads of the sequence.

use crate::deck::CardSequence;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitWord, MAX_LEN};
use num::{BigInt, Integer, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Deref;

/// Codeword enumeration is capped at 2^24 words; larger dimensions error out.
pub const MAX_ENUM_DIM: usize = 24;

/// A binary linear code of length 1..=64 in canonical generator form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    length: usize,
    gens: BitMatrix,
}

impl LinearCode {
    /// Builds the code spanned by `words` (not necessarily independent).
    pub fn from_generators(length: usize, words: impl IntoIterator<Item = BitWord>) -> Result<Self> {
        if length == 0 || length > MAX_LEN {
            return Err(Error::LengthOutOfRange(length));
        }
        let gens = BitMatrix::from_rows(length, words)?.rref();
        Ok(Self { length, gens })
    }

    /// Builds a code from 0/1 generator strings.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let m = BitMatrix::from_strs(rows)?;
        Self::from_generators(m.n_cols(), m.rows())
    }

    /// The code containing only the zero word.
    pub fn zero(length: usize) -> Result<Self> {
        Self::from_generators(length, [])
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.gens.n_rows()
    }

    /// Canonical generator matrix (rref, no zero rows).
    pub fn generators(&self) -> &BitMatrix {
        &self.gens
    }

    pub fn contains(&self, w: &BitWord) -> Result<bool> {
        self.gens.in_span(w)
    }

    pub(crate) fn contains_bits(&self, word: u64) -> bool {
        let mut x = word;
        for &g in self.gens.row_bits() {
            if x >> g.trailing_zeros() & 1 == 1 {
                x ^= g;
            }
        }
        x == 0
    }

    /// Iterates over all 2^k codewords (Gray order, zero word first).
    pub fn codewords(&self) -> impl Iterator<Item = BitWord> + '_ {
        let k = self.dimension();
        let mut current = 0u64;
        (0u64..1 << k).map(move |i| {
            if i > 0 {
                current ^= self.gens.row_bits()[i.trailing_zeros() as usize];
            }
            BitWord::from_bits(current, self.length).expect("codeword in range")
        })
    }

    /// Counts codewords by weight; exact over all 2^k words.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let k = self.dimension();
        if k > MAX_ENUM_DIM {
            return Err(Error::EnumerationBudget { dim: k, max: MAX_ENUM_DIM });
        }
        let mut counts = vec![0u64; self.length + 1];
        let mut current = 0u64;
        counts[0] += 1;
        for i in 1u64..1 << k {
            current ^= self.gens.row_bits()[i.trailing_zeros() as usize];
            counts[current.count_ones() as usize] += 1;
        }
        WeightDistribution::new(counts)
    }

    /// Smallest weight of a nonzero codeword.
    pub fn min_weight(&self) -> Result<u32> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        if k > MAX_ENUM_DIM {
            return Err(Error::EnumerationBudget { dim: k, max: MAX_ENUM_DIM });
        }
        let mut min = u32::MAX;
        let mut current = 0u64;
        for i in 1u64..1 << k {
            current ^= self.gens.row_bits()[i.trailing_zeros() as usize];
            min = min.min(current.count_ones());
        }
        Ok(min)
    }

    /// The dual code: all words orthogonal to every codeword. Its dimension is
    /// `length - dimension`, and the dual of the dual is the original code.
    pub fn dual(&self) -> LinearCode {
        let basis = self.gens.nullspace_basis();
        LinearCode::from_generators(self.length, basis).expect("dual of a valid code")
    }

    /// Drops coordinate `pos` from every codeword.
    pub fn puncture(&self, pos: usize) -> Result<LinearCode> {
        if pos >= self.length {
            return Err(Error::PositionOutOfRange { pos, len: self.length });
        }
        if self.length == 1 {
            return Err(Error::PunctureTooShort);
        }
        let low = (1u64 << pos) - 1;
        let rows = self.gens.row_bits().iter().map(|&bits| {
            let shortened = (bits & low) | (bits >> (pos + 1)) << pos;
            BitWord::from_bits(shortened, self.length - 1).expect("punctured row in range")
        });
        LinearCode::from_generators(self.length - 1, rows.collect::<Vec<_>>())
    }

    /// The shortened code: the codewords that are zero at `pos`, with that
    /// coordinate deleted. The dimension drops by one when some codeword is
    /// nonzero there and is unchanged otherwise.
    pub fn shorten(&self, pos: usize) -> Result<LinearCode> {
        if pos >= self.length {
            return Err(Error::PositionOutOfRange { pos, len: self.length });
        }
        if self.length == 1 {
            return Err(Error::PunctureTooShort);
        }
        let mut pivot: Option<u64> = None;
        let mut rows = Vec::with_capacity(self.gens.n_rows());
        for &r in self.gens.row_bits() {
            if r >> pos & 1 == 1 {
                match pivot {
                    Some(p) => rows.push(r ^ p),
                    None => pivot = Some(r),
                }
            } else {
                rows.push(r);
            }
        }
        let low = (1u64 << pos) - 1;
        let words = rows
            .iter()
            .map(|&bits| {
                let shortened = (bits & low) | (bits >> (pos + 1)) << pos;
                BitWord::from_bits(shortened, self.length - 1).expect("shortened row in range")
            })
            .collect::<Vec<_>>();
        LinearCode::from_generators(self.length - 1, words)
    }

    /// Appends an even-parity coordinate to every codeword.
    pub fn extend_parity(&self) -> Result<LinearCode> {
        if self.length + 1 > MAX_LEN {
            return Err(Error::LengthOutOfRange(self.length + 1));
        }
        let rows = self.gens.row_bits().iter().map(|&bits| {
            let parity = u64::from(bits.count_ones() % 2);
            BitWord::from_bits(bits | parity << self.length, self.length + 1)
                .expect("extended row in range")
        });
        LinearCode::from_generators(self.length + 1, rows.collect::<Vec<_>>())
    }

    /// Serializes in the code file format: one generator row per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.gens.rows() {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the code file format: one 0/1 generator row per line, blank
    /// lines and lines starting with `#` ignored.
    pub fn parse_text(text: &str) -> Result<LinearCode> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if rows.is_empty() {
            return Err(Error::Parse("code file has no generator rows".into()));
        }
        let length = rows[0].len();
        for r in &rows {
            if r.len() != length {
                return Err(Error::RowLengthMismatch { expected: length, found: r.len() });
            }
        }
        let words = rows.iter().map(|r| r.parse()).collect::<Result<Vec<BitWord>>>()?;
        Self::from_generators(length, words)
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}; ", self.length, self.dimension())?;
        let rows: Vec<String> = self.gens.rows().map(|r| r.to_string()).collect();
        write!(f, "{}]", rows.join(" "))
    }
}

/// A linear code in which every codeword has even weight and every nonzero
/// codeword has weight at least 4. This is exactly the class of codes realized
/// by card sequences.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadCode {
    inner: LinearCode,
}

impl QuadCode {
    /// Validates the quad-code invariants.
    ///
    /// Evenness is checked on the generators (weights add mod 2), and the
    /// absence of weight-2 codewords is checked directly, which together rule
    /// out every weight below 4 without enumerating the code.
    pub fn try_new(code: LinearCode) -> Result<Self> {
        for g in code.gens.rows() {
            if g.weight() % 2 != 0 {
                return Err(Error::NotAQuadCode(format!("odd-weight generator {g}")));
            }
        }
        for i in 0..code.length {
            for j in i + 1..code.length {
                if code.contains_bits(1 << i | 1 << j) {
                    return Err(Error::NotAQuadCode(format!(
                        "contains the weight-2 codeword with ones at {i} and {j}"
                    )));
                }
            }
        }
        Ok(Self { inner: code })
    }

    pub fn as_linear(&self) -> &LinearCode {
        &self.inner
    }

    pub fn into_linear(self) -> LinearCode {
        self.inner
    }

    /// Number of quads: the count of weight-4 codewords.
    ///
    /// Costs 2^k word visits for small dimensions and falls back to testing
    /// each of the C(len,4) weight-4 words for membership otherwise, so it
    /// never exceeds the enumeration budget.
    pub fn quad_count(&self) -> u64 {
        let k = self.dimension();
        if k <= 20 {
            let mut current = 0u64;
            let mut count = 0;
            for i in 1u64..1 << k {
                current ^= self.inner.gens.row_bits()[i.trailing_zeros() as usize];
                count += u64::from(current.count_ones() == 4);
            }
            return count;
        }
        let l = self.length();
        let mut count = 0;
        for i in 0..l {
            for j in i + 1..l {
                for m in j + 1..l {
                    for n in m + 1..l {
                        let word = 1u64 << i | 1 << j | 1 << m | 1 << n;
                        count += u64::from(self.inner.contains_bits(word));
                    }
                }
            }
        }
        count
    }

    /// Smallest deck dimension in which the code is realizable: `len - k - 1`.
    ///
    /// Internally asserts the sphere-packing inequality for distance-4 codes,
    /// `k <= len - 1 - ceil(log2 len)`, which every valid quad code satisfies.
    pub fn min_realizing_dimension(&self) -> Result<u32> {
        let l = self.length();
        let k = self.dimension();
        let ceil_log2 = (l as u64).next_power_of_two().trailing_zeros();
        if k as u32 + 1 + ceil_log2 > l as u32 {
            return Err(Error::NotAQuadCode(format!(
                "dimension {k} exceeds the distance-4 bound for length {l}"
            )));
        }
        Ok((l - k - 1) as u32)
    }

    /// Produces a card sequence in the deck of dimension `n` whose code is
    /// exactly `self`. Fails when `n` is below `min_realizing_dimension`.
    ///
    /// Deterministic: the dual's canonical basis is re-expressed so that the
    /// all-ones word is one of its rows (appending it and dropping the first
    /// row it depends on), the all-ones row is placed last, the rest is padded
    /// with zero rows to `n` rows, and the columns are read off as cards.
    pub fn realize_cards(&self, n: u32) -> Result<CardSequence> {
        let l = self.length();
        let k = self.dimension();
        let needed = self.min_realizing_dimension()?;
        if n < needed {
            return Err(Error::NotRealizable { len: l, dim: k, needed, given: n });
        }
        if n > crate::deck::MAX_DECK_DIM {
            return Err(Error::DeckDimOutOfRange(n));
        }

        let dual = self.inner.dual();
        let ones = if l == 64 { u64::MAX } else { (1u64 << l) - 1 };
        let mut rows: Vec<u64> = dual.gens.row_bits().to_vec();
        if let Some(at) = rows.iter().position(|&r| r == ones) {
            rows.remove(at);
        } else {
            // Reduce the all-ones word against the basis; the rows it uses are
            // its unique representation, and dropping the first of them keeps
            // the rest independent alongside all-ones.
            let mut x = ones;
            let mut first_used = None;
            for (i, &r) in rows.iter().enumerate() {
                if x >> r.trailing_zeros() & 1 == 1 {
                    x ^= r;
                    if first_used.is_none() {
                        first_used = Some(i);
                    }
                }
            }
            debug_assert_eq!(x, 0, "all-ones is orthogonal to every even-weight code");
            rows.remove(first_used.expect("all-ones word is nonzero"));
        }
        debug_assert_eq!(rows.len(), needed as usize);

        let cards = (0..l)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, &r)| acc | ((r >> j & 1) as u32) << i)
            })
            .collect();
        let seq = CardSequence::new(n, cards)
            .expect("distinct columns: the code has no weight-2 codeword");
        debug_assert_eq!(&code_from_cards(&seq).inner, &self.inner);
        Ok(seq)
    }
}

impl Deref for QuadCode {
    type Target = LinearCode;

    fn deref(&self) -> &LinearCode {
        &self.inner
    }
}

impl From<QuadCode> for LinearCode {
    fn from(code: QuadCode) -> LinearCode {
        code.inner
    }
}

impl fmt::Debug for QuadCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quad{:?}", self.inner)
    }
}

/// The quad code of a card sequence: the nullspace of the matrix whose columns
/// are the cards with an appended all-ones row. Dimension is `len - rank`.
pub fn code_from_cards(s: &CardSequence) -> QuadCode {
    let l = s.len();
    let dim = s.dim();
    let mut rows = Vec::with_capacity(dim as usize + 1);
    for i in 0..dim {
        let mut bits = 0u64;
        for (j, &card) in s.values().iter().enumerate() {
            bits |= u64::from(card >> i & 1) << j;
        }
        rows.push(BitWord::from_bits(bits, l).expect("row in range"));
    }
    rows.push(BitWord::all_ones(l).expect("sequence is nonempty"));
    let augmented = BitMatrix::from_rows(l, rows).expect("consistent row lengths");
    let code = LinearCode::from_generators(l, augmented.nullspace_basis())
        .expect("valid length");
    QuadCode::try_new(code).expect("the nullspace of a distinct-card matrix is a quad code")
}

/// Codeword counts by weight: `counts[w]` is the number of codewords of
/// weight `w`, for `w` in `0..=len`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() || counts.len() > MAX_LEN + 1 {
            return Err(Error::LengthOutOfRange(counts.len().saturating_sub(1)));
        }
        Ok(Self { counts })
    }

    /// Length of the underlying code.
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| u128::from(c)).sum()
    }

    /// Whether `counts[w] == counts[len - w]` for all `w`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.counts.len();
        (0..n).all(|w| self.counts[w] == self.counts[n - 1 - w])
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution{:?}", self.counts)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

fn krawtchouk(j: usize, w: usize, len: usize) -> i128 {
    let mut acc: i128 = 0;
    for i in 0..=j.min(w) {
        let term = binomial(w as u64, i as u64) * binomial((len - w) as u64, (j - i) as u64);
        if i % 2 == 0 {
            acc += term as i128;
        } else {
            acc -= term as i128;
        }
    }
    acc
}

/// The dual weight distribution: the coefficient vector of
/// `W(x+y, x-y) / 2^k`.
///
/// For the distribution of an actual code this equals the dual code's
/// distribution. A negative or fractional output coefficient proves that no
/// code has the input distribution; the error reports the offending
/// coefficient before division by `2^k`.
pub fn macwilliams_transform(dist: &WeightDistribution, k: u32) -> Result<WeightDistribution> {
    let len = dist.length();
    if u32::from(k > 63) == 1 || dist.total() != 1u128 << k {
        return Err(Error::InconsistentDistribution { found: dist.total(), dim: k });
    }
    let order = BigInt::from(1u128 << k);
    let mut counts = vec![0u64; len + 1];
    for (j, slot) in counts.iter_mut().enumerate() {
        let mut numerator = BigInt::zero();
        for (w, &a) in dist.counts.iter().enumerate() {
            if a != 0 {
                numerator += BigInt::from(a) * BigInt::from(krawtchouk(j, w, len));
            }
        }
        if numerator.is_negative() {
            return Err(Error::NotACodeDistribution {
                index: j,
                value: numerator.to_string(),
                dim: k,
            });
        }
        let (quotient, remainder) = numerator.div_rem(&order);
        if !remainder.is_zero() {
            return Err(Error::NotACodeDistribution {
                index: j,
                value: numerator.to_string(),
                dim: k,
            });
        }
        *slot = u64::try_from(quotient).map_err(|_| Error::NotACodeDistribution {
            index: j,
            value: numerator.to_string(),
            dim: k,
        })?;
    }
    WeightDistribution::new(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck;
    use proptest::prelude::*;

    fn seq(dim: u32, cards: &[u32]) -> CardSequence {
        CardSequence::new(dim, cards.to_vec()).unwrap()
    }

    #[test]
    fn single_quad_code() {
        let code = code_from_cards(&seq(6, &[0, 21, 42, 63]));
        assert_eq!(code.length(), 4);
        assert_eq!(code.dimension(), 1);
        assert_eq!(code.generators().row(0).to_string(), "1111");
        assert_eq!(code.quad_count(), 1);
        assert_eq!(code.min_weight().unwrap(), 4);
    }

    #[test]
    fn no_quads_sequence_gives_zero_code() {
        let code = code_from_cards(&seq(4, &[0, 1, 2, 4, 8]));
        assert_eq!(code.dimension(), 0);
        assert_eq!(code.quad_count(), 0);
        assert!(code.min_weight().is_err());
    }

    #[test]
    fn three_quad_code_from_quaternary_row() {
        let s = CardSequence::parse(4, "q:00,q:01,q:02,q:10,q:13,q:03").unwrap();
        let code = code_from_cards(&s);
        assert_eq!(code.dimension(), 2);
        assert_eq!(code.quad_count(), 3);
        let dist = code.weight_distribution().unwrap();
        assert_eq!(dist.counts(), &[1, 0, 0, 0, 3, 0, 0]);
    }

    #[test]
    fn weight_distribution_examples() {
        let quad = LinearCode::from_strs(&["1111"]).unwrap();
        assert_eq!(quad.weight_distribution().unwrap().counts(), &[1, 0, 0, 0, 1]);
        let zero = LinearCode::zero(5).unwrap();
        assert_eq!(zero.weight_distribution().unwrap().counts(), &[1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn min_weight_examples() {
        assert_eq!(LinearCode::from_strs(&["1111"]).unwrap().min_weight().unwrap(), 4);
        let repetition = LinearCode::from_strs(&["111111"]).unwrap();
        assert_eq!(repetition.min_weight().unwrap(), 6);
    }

    #[test]
    fn dual_code_examples() {
        let zero = LinearCode::zero(4).unwrap();
        assert_eq!(zero.dual().dimension(), 4);

        let even = LinearCode::from_strs(&["1001", "0101", "0011"]).unwrap();
        let dual = even.dual();
        assert_eq!(dual.dimension(), 1);
        assert_eq!(dual.generators().row(0).to_string(), "1111");

        // The dual of a card-sequence code is the row space of the augmented
        // card matrix.
        let s = seq(6, &[0, 21, 42, 63]);
        let code = code_from_cards(&s);
        let dual = code.as_linear().dual();
        for i in 0..s.dim() {
            let mut bits = 0u64;
            for (j, &c) in s.values().iter().enumerate() {
                bits |= u64::from(c >> i & 1) << j;
            }
            let row = BitWord::from_bits(bits, s.len()).unwrap();
            assert!(dual.contains(&row).unwrap());
        }
        assert!(dual.contains(&BitWord::all_ones(4).unwrap()).unwrap());
    }

    #[test]
    fn dual_of_dual_round_trips() {
        for seed in 0..200u64 {
            let s = CardSequence::random(5, 3 + (seed % 9) as usize, seed).unwrap();
            let code = code_from_cards(&s).into_linear();
            assert_eq!(code.dual().dual(), code);
            assert_eq!(code.dual().dimension(), code.length() - code.dimension());
        }
    }

    #[test]
    fn macwilliams_single_quad() {
        let w = WeightDistribution::new(vec![1, 0, 0, 0, 1]).unwrap();
        let dual = macwilliams_transform(&w, 1).unwrap();
        assert_eq!(dual.counts(), &[1, 0, 6, 0, 1]);
    }

    #[test]
    fn macwilliams_parity_repetition_swap() {
        // Full even-weight code of length 4 and the repetition code swap
        // under the transform.
        let even = LinearCode::from_strs(&["1001", "0101", "0011"]).unwrap();
        let rep = LinearCode::from_strs(&["1111"]).unwrap();
        let even_dist = even.weight_distribution().unwrap();
        let rep_dist = rep.weight_distribution().unwrap();
        assert_eq!(macwilliams_transform(&even_dist, 3).unwrap(), rep_dist);
        assert_eq!(macwilliams_transform(&rep_dist, 1).unwrap(), even_dist);
    }

    #[test]
    fn macwilliams_rejects_impossible_seven_card_distribution() {
        // x^7 + 5 x^3 y^4 + 2 x y^6: the transform coefficient of x^6 y is
        // 4q - 28 = -8 at q = 5, so no such code exists.
        let w = WeightDistribution::new(vec![1, 0, 0, 0, 5, 0, 2, 0]).unwrap();
        match macwilliams_transform(&w, 3) {
            Err(Error::NotACodeDistribution { index, value, .. }) => {
                assert_eq!(index, 1);
                assert_eq!(value, "-8");
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn macwilliams_checks_total() {
        let w = WeightDistribution::new(vec![1, 0, 0, 0, 1]).unwrap();
        assert!(matches!(
            macwilliams_transform(&w, 3),
            Err(Error::InconsistentDistribution { .. })
        ));
    }

    #[test]
    fn min_realizing_dimension_examples() {
        let single = code_from_cards(&seq(6, &[0, 21, 42, 63]));
        assert_eq!(single.min_realizing_dimension().unwrap(), 2);

        let seven = QuadCode::try_new(
            LinearCode::from_strs(&["1111000", "1100110", "1010011"]).unwrap(),
        )
        .unwrap();
        assert_eq!(seven.length(), 7);
        assert_eq!(seven.dimension(), 3);
        assert_eq!(seven.quad_count(), 7);
        assert_eq!(seven.min_realizing_dimension().unwrap(), 3);

        let zero = QuadCode::try_new(LinearCode::zero(5).unwrap()).unwrap();
        assert_eq!(zero.min_realizing_dimension().unwrap(), 4);
    }

    #[test]
    fn realize_single_quad_in_smallest_deck() {
        let code = code_from_cards(&seq(6, &[0, 21, 42, 63]));
        let cards = code.realize_cards(2).unwrap();
        assert_eq!(cards.values(), &[0, 1, 2, 3]);
        assert!(matches!(code.realize_cards(1), Err(Error::NotRealizable { needed: 2, .. })));
    }

    #[test]
    fn realize_zero_code_gives_powers_of_two() {
        let zero = QuadCode::try_new(LinearCode::zero(5).unwrap()).unwrap();
        let cards = zero.realize_cards(4).unwrap();
        assert_eq!(cards.values(), &[0, 1, 2, 4, 8]);
        assert!(deck::enumerate_quads(&cards).is_empty());
    }

    #[test]
    fn realize_round_trips() {
        for seed in 0..300u64 {
            let s = CardSequence::random(6, 4 + (seed % 9) as usize, seed).unwrap();
            let code = code_from_cards(&s);
            let n = code.min_realizing_dimension().unwrap();
            let cards = code.realize_cards(n).unwrap();
            assert_eq!(code_from_cards(&cards), code, "seed {seed}");
            // Realizing in a roomier deck gives the same code too.
            let cards = code.realize_cards(n + 1).unwrap();
            assert_eq!(code_from_cards(&cards), code, "seed {seed} padded");
        }
    }

    #[test]
    fn quad_code_validation() {
        assert!(QuadCode::try_new(LinearCode::from_strs(&["111"]).unwrap()).is_err());
        assert!(QuadCode::try_new(LinearCode::from_strs(&["1100"]).unwrap()).is_err());
        assert!(QuadCode::try_new(LinearCode::from_strs(&["1111", "0011"]).unwrap()).is_err());
        assert!(QuadCode::try_new(LinearCode::from_strs(&["1111"]).unwrap()).is_ok());
    }

    #[test]
    fn puncture_and_extend() {
        let rep5 = LinearCode::from_strs(&["11111"]).unwrap();
        let extended = rep5.extend_parity().unwrap();
        assert_eq!(extended, LinearCode::from_strs(&["111111"]).unwrap());

        let punctured = extended.puncture(5).unwrap();
        assert_eq!(punctured, rep5);
        assert!(extended.puncture(6).is_err());
    }

    #[test]
    fn code_text_round_trip() {
        let code = LinearCode::from_strs(&["1111000", "1100110", "1010011"]).unwrap();
        let text = format!("# generators\n\n{}", code.to_text());
        assert_eq!(LinearCode::parse_text(&text).unwrap(), code);
        assert!(LinearCode::parse_text("# only comments\n").is_err());
        assert!(LinearCode::parse_text("101\n10\n").is_err());
    }

    #[test]
    fn canonical_equality() {
        // Different spanning sets of the same subspace compare equal.
        let a = LinearCode::from_strs(&["001111", "110011"]).unwrap();
        let b = LinearCode::from_strs(&["111100", "110011", "001111"]).unwrap();
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn macwilliams_matches_dual_distribution(seed in 0u64..400) {
            let len = 4 + (seed % 9) as usize;
            let s = CardSequence::random(6, len, seed).unwrap();
            let code = code_from_cards(&s).into_linear();
            let dual = code.dual();
            let transformed =
                macwilliams_transform(&code.weight_distribution().unwrap(), code.dimension() as u32)
                    .unwrap();
            prop_assert_eq!(transformed, dual.weight_distribution().unwrap());
        }

        #[test]
        fn quad_codes_satisfy_distance4_bound(seed in 0u64..400) {
            let len = 4 + (seed % 9) as usize;
            let s = CardSequence::random(7, len, seed).unwrap();
            let code = code_from_cards(&s);
            let l = code.length() as u32;
            let k = code.dimension() as u32;
            // 2^k <= 2^(l-1) / l.
            prop_assert!(u128::from(l) * (1u128 << k) <= 1u128 << (l - 1));
            prop_assert!(code.min_realizing_dimension().is_ok());
        }
    }
}
