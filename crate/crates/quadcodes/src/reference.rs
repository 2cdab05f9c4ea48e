//! Published reference values embedded for the `--check` mode and the
//! acceptance suite.
//!
//! A `--check` run recomputes the requested table and compares it cell by
//! cell against these values; a mismatch is reported as a failure, never
//! patched over.

/// Reference smallest-deck sizes `(cards, [(quads, deck_size)])` for up to
/// 7 cards. Quad counts absent from a row are unattainable.
pub const D_TABLE: [(usize, &[(u64, u64)]); 7] = [
    (1, &[(0, 1)]),
    (2, &[(0, 2)]),
    (3, &[(0, 4)]),
    (4, &[(0, 8), (1, 4)]),
    (5, &[(0, 16), (1, 8)]),
    (6, &[(0, 16), (1, 16), (3, 8)]),
    (7, &[(0, 32), (1, 32), (2, 16), (3, 16), (7, 8)]),
];

/// Reference classification for 8 cards: attainable quad counts and their
/// minimal deck sizes.
pub const EIGHT_CARDS: [(u64, u64); 8] =
    [(0, 64), (1, 32), (2, 32), (3, 32), (5, 16), (6, 16), (7, 16), (14, 8)];

/// Reference distance-6 maxima `B(len)` for lengths 1..=12.
pub const B_TABLE: [u64; 12] = [1, 1, 1, 1, 1, 2, 2, 2, 4, 4, 4, 8];

/// Reference no-quads maxima `F(n)` for deck dimensions 1..=8.
pub const F_TABLE: [usize; 8] = [2, 3, 4, 6, 7, 9, 10, 12];

/// Reference deck-dimension floors from the lazy-caterer bound, for no-quads
/// set sizes 4..=15.
pub const LOWER_BOUND_DIMS: [(u64, u32); 12] = [
    (4, 3),
    (5, 4),
    (6, 4),
    (7, 5),
    (8, 5),
    (9, 6),
    (10, 6),
    (11, 6),
    (12, 7),
    (13, 7),
    (14, 7),
    (15, 7),
];

/// Reference first-moment thresholds: the largest guaranteed no-quads set
/// size for deck dimensions 3..=10.
pub const UPPER_BOUND_CARDS: [(u32, u64); 8] =
    [(3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 10), (9, 12), (10, 14)];

/// Reference whole-deck quad counts for deck dimensions 2..=9.
pub const TOTAL_QUADS: [u64; 8] = [1, 14, 140, 1240, 10416, 85344, 690880, 5559680];
