//! Binary quad codes for EvenQuads card sets.
//!
//! A deck of dimension `n` holds the cards `0..2^n`, viewed as vectors over
//! GF(2); four distinct cards whose values XOR to zero form a *quad*. An
//! ordered sequence of cards induces a binary linear code — the nullspace of
//! the card matrix with an all-ones row appended — whose weight-4 codewords
//! are exactly the quads of the sequence. This crate provides:
//!
//! - bit-packed GF(2) linear algebra ([`gf2`]);
//! - decks, quads, quaternary notation, and affine symmetries ([`deck`]);
//! - the cards-to-codes bridge: quad codes, duals, weight distributions, the
//!   MacWilliams transform, and card realizations ([`code`]);
//! - exhaustive classification searches and coding bounds ([`search`]);
//! - the codes of semimagic, magic, and strongly magic quad squares
//!   ([`squares`]).
//!
//! The `quads` binary exposes the same functionality on the command line.

pub mod cli;
pub mod code;
pub mod deck;
pub mod error;
pub mod gf2;
pub mod reference;
pub mod search;
pub mod squares;

pub use code::{code_from_cards, macwilliams_transform, LinearCode, QuadCode, WeightDistribution};
pub use deck::{
    apply_affine, complete_quad, enumerate_quads, expected_quads, is_quad, total_quads, AffineMap,
    Card, CardSequence,
};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitWord};
pub use search::{
    compute_b, compute_d_table, compute_f, enumerate_quad_codes, find_noquads_set, hamming_bound,
    lazy_caterer_bound, probabilistic_threshold, DTable, SearchBudget,
};
pub use squares::{
    count_squares, is_square_of_kind, predicted_count, square_code, square_weight_enumerator,
    verify_hamming_15_11, QuadSquare, SquareKind,
};
