//! Cards as vectors over GF(2): the quad predicate, quad completion and
//! enumeration, quaternary notation, affine symmetries, and counting formulas.
//!
//! A deck of dimension `n` holds the cards `0..2^n`, each identified with a
//! vector in GF(2)^n (bit `j` of the value is coordinate `j`). Four distinct
//! cards form a *quad* when their values XOR to zero.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitWord};
use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Largest supported deck dimension (deck size 2^30).
pub const MAX_DECK_DIM: u32 = 30;

/// One card from the deck of dimension `dim`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Card {
    value: u32,
    dim: u32,
}

impl Card {
    pub fn new(value: u32, dim: u32) -> Result<Self> {
        if dim > MAX_DECK_DIM {
            return Err(Error::DeckDimOutOfRange(dim));
        }
        if u64::from(value) >= 1u64 << dim {
            return Err(Error::CardOutOfRange { value: value.into(), dim });
        }
        Ok(Self { value, dim })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn require_same_deck(cards: &[Card]) -> Result<u32> {
    let dim = cards[0].dim;
    for c in cards {
        if c.dim != dim {
            return Err(Error::MixedDecks(dim, c.dim));
        }
    }
    for (i, a) in cards.iter().enumerate() {
        for b in &cards[i + 1..] {
            if a.value == b.value {
                return Err(Error::DuplicateCard(a.value));
            }
        }
    }
    Ok(dim)
}

/// Whether four pairwise-distinct cards from one deck form a quad.
pub fn is_quad(a: Card, b: Card, c: Card, d: Card) -> Result<bool> {
    require_same_deck(&[a, b, c, d])?;
    Ok(a.value ^ b.value ^ c.value ^ d.value == 0)
}

/// The unique fourth card completing three distinct cards to a quad.
///
/// The result is always distinct from all three inputs.
pub fn complete_quad(a: Card, b: Card, c: Card) -> Result<Card> {
    let dim = require_same_deck(&[a, b, c])?;
    Card::new(a.value ^ b.value ^ c.value, dim)
}

/// An ordered sequence of distinct cards from one deck.
///
/// Order matters: codeword coordinate `i` corresponds to card `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CardSequence {
    dim: u32,
    cards: Vec<u32>,
}

impl CardSequence {
    /// At most 64 cards, pairwise distinct, all within the deck.
    pub fn new(dim: u32, cards: Vec<u32>) -> Result<Self> {
        if dim > MAX_DECK_DIM {
            return Err(Error::DeckDimOutOfRange(dim));
        }
        if cards.is_empty() {
            return Err(Error::EmptyCardSequence);
        }
        if cards.len() > crate::gf2::MAX_LEN {
            return Err(Error::TooManyCards(cards.len()));
        }
        let mut seen = std::collections::HashSet::with_capacity(cards.len());
        for &c in &cards {
            if u64::from(c) >= 1u64 << dim {
                return Err(Error::CardOutOfRange { value: c.into(), dim });
            }
            if !seen.insert(c) {
                return Err(Error::DuplicateCard(c));
            }
        }
        Ok(Self { dim, cards })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.cards
    }

    pub fn card(&self, i: usize) -> Card {
        Card { value: self.cards[i], dim: self.dim }
    }

    /// Parses a comma-separated list of card tokens.
    pub fn parse(dim: u32, text: &str) -> Result<Self> {
        let cards = text
            .split(',')
            .map(|tok| parse_card_token(tok.trim(), dim).map(|c| c.value))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, cards)
    }

    /// Uniformly random sequence of `len` distinct cards; seed-stable.
    pub fn random(dim: u32, len: usize, seed: u64) -> Result<Self> {
        if dim > MAX_DECK_DIM {
            return Err(Error::DeckDimOutOfRange(dim));
        }
        if u64::from(dim) < 7 && len as u64 > 1 << dim {
            return Err(Error::TooManyCards(len));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cards = Vec::with_capacity(len);
        let mut seen = std::collections::HashSet::new();
        while cards.len() < len {
            let c = rng.random_range(0..1u64 << dim) as u32;
            if seen.insert(c) {
                cards.push(c);
            }
        }
        Self::new(dim, cards)
    }
}

/// All 4-subsets of positions whose cards XOR to zero, in lexicographic order.
///
/// Deliberately naive: this is the brute-force oracle that validates every
/// cleverer code path, so it must stay free of shortcuts.
pub fn enumerate_quads(s: &CardSequence) -> Vec<[usize; 4]> {
    let v = &s.cards;
    let mut quads = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            for k in j + 1..v.len() {
                for l in k + 1..v.len() {
                    if v[i] ^ v[j] ^ v[k] ^ v[l] == 0 {
                        quads.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    quads
}

/// Number of quads in the whole deck of dimension `dim`: C(2^n, 3) / 4.
pub fn total_quads(dim: u32) -> Result<BigUint> {
    if dim == 0 || dim > MAX_DECK_DIM {
        return Err(Error::DeckDimOutOfRange(dim));
    }
    let size = BigUint::from(1u64 << dim);
    let product = &size * (&size - 1u32) * (&size - 2u32);
    Ok(product / 24u32)
}

/// Expected number of quads among `m` uniformly drawn cards: C(m,4) / (2^n - 3).
pub fn expected_quads(m: u64, dim: u32) -> Result<BigRational> {
    if dim < 2 || dim > MAX_DECK_DIM {
        return Err(Error::DeckDimOutOfRange(dim));
    }
    if m < 4 {
        return Ok(BigRational::zero());
    }
    let mut numer = BigInt::one();
    for i in 0..4u64 {
        numer *= BigInt::from(m - i);
    }
    numer /= 24;
    let denom = BigInt::from((1u64 << dim) - 3);
    Ok(BigRational::new(numer, denom))
}

/// An invertible affine transformation of the deck: `y = M a + t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    matrix: BitMatrix,
    translation: BitWord,
}

impl AffineMap {
    /// `matrix` must be square and invertible, `translation` of matching length.
    pub fn new(matrix: BitMatrix, translation: BitWord) -> Result<Self> {
        let n = matrix.n_cols();
        if matrix.n_rows() != n || n > MAX_DECK_DIM as usize {
            return Err(Error::MatrixDimOutOfRange(matrix.n_rows()));
        }
        if translation.len() != n {
            return Err(Error::VectorLengthMismatch { expected: n, found: translation.len() });
        }
        if matrix.rank() != n {
            return Err(Error::NotAQuadCode("affine map matrix is singular".into()));
        }
        Ok(Self { matrix, translation })
    }

    pub fn identity(dim: u32) -> Result<Self> {
        Self::new(BitMatrix::identity(dim as usize)?, BitWord::zero(dim as usize)?)
    }

    /// Uniformly random invertible map; seed-stable.
    pub fn random(dim: u32, seed: u64) -> Result<Self> {
        let matrix = BitMatrix::random_invertible(dim as usize, seed)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let t = rng.random_range(0..1u64 << dim);
        Self::new(matrix, BitWord::from_bits(t, dim as usize)?)
    }

    pub fn dim(&self) -> u32 {
        self.matrix.n_cols() as u32
    }

    pub fn apply(&self, card: Card) -> Result<Card> {
        if card.dim != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: card.dim });
        }
        let a = BitWord::from_bits(card.value.into(), card.dim as usize)?;
        let y = self.matrix.mul_vec(&a)? ^ self.translation;
        Card::new(y.bits() as u32, card.dim)
    }
}

/// Elementwise image of a card sequence; distinctness is preserved because the
/// matrix is invertible.
pub fn apply_affine(map: &AffineMap, s: &CardSequence) -> Result<CardSequence> {
    if s.dim != map.dim() {
        return Err(Error::DimensionMismatch { expected: map.dim(), found: s.dim });
    }
    let cards = s
        .cards
        .iter()
        .map(|&v| map.apply(Card { value: v, dim: s.dim }).map(|c| c.value))
        .collect::<Result<Vec<_>>>()?;
    CardSequence::new(s.dim, cards)
}

fn quaternary_digits(dim: u32) -> usize {
    (dim as usize).div_ceil(2).max(1)
}

/// Parses a quaternary card string, most significant digit first.
///
/// The string must have exactly ceil(n/2) digits in 0..=3, and when `n` is odd
/// the leading digit can only be 0 or 1.
pub fn parse_quaternary(s: &str, dim: u32) -> Result<Card> {
    if dim == 0 || dim > MAX_DECK_DIM {
        return Err(Error::DeckDimOutOfRange(dim));
    }
    let bad = |reason: &str| Error::BadQuaternary {
        string: s.to_string(),
        dim,
        reason: reason.to_string(),
    };
    let expected = quaternary_digits(dim);
    if s.chars().count() != expected {
        return Err(bad(&format!("expected {expected} digits")));
    }
    let mut value: u64 = 0;
    for (i, c) in s.chars().enumerate() {
        let digit = match c {
            '0'..='3' => c as u64 - '0' as u64,
            _ => return Err(bad("digits must be 0..=3")),
        };
        if i == 0 && dim % 2 == 1 && digit >= 2 {
            return Err(bad("leading digit must be 0 or 1 for odd deck dimensions"));
        }
        value = value * 4 + digit;
    }
    Card::new(value as u32, dim)
}

/// Formats a card in quaternary, most significant digit first, zero-padded.
pub fn format_quaternary(c: Card) -> String {
    let digits = quaternary_digits(c.dim);
    let mut out = vec![b'0'; digits];
    let mut v = c.value;
    for slot in out.iter_mut().rev() {
        *slot = b'0' + (v % 4) as u8;
        v /= 4;
    }
    String::from_utf8(out).expect("ascii digits")
}

/// Parses a card token: a decimal integer, or `q:` followed by quaternary digits.
pub fn parse_card_token(tok: &str, dim: u32) -> Result<Card> {
    if let Some(q) = tok.strip_prefix("q:") {
        return parse_quaternary(q, dim);
    }
    let value: u32 = tok.parse().map_err(|_| Error::BadCardToken(tok.to_string()))?;
    Card::new(value, dim)
}
