//! Codes of semimagic, magic, and strongly magic quad squares.
//!
//! A 4-by-4 grid of distinct cards is *semimagic* when every row and column
//! forms a quad, *magic* when both diagonals do too, and *strongly magic* when
//! every four positions that form a quad as deck-16 cards hold cards forming a
//! quad. Each kind corresponds to a fixed code on the 16 grid positions
//! (dimensions 7, 8, and 11); a grid is of the kind exactly when its own code
//! contains the kind's code.
//!
//! Positions are indexed left-to-right, top-to-bottom: `p = 4*row + col`.

use crate::code::{LinearCode, QuadCode, WeightDistribution};
use crate::deck::{parse_card_token, AffineMap, Card};
use crate::error::{Error, Result};
use crate::gf2::BitWord;
use num::{BigInt, BigUint, One};
use std::fmt;
use std::sync::OnceLock;

/// The three nested square kinds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SquareKind {
    Semimagic,
    Magic,
    StronglyMagic,
}

impl SquareKind {
    pub const ALL: [SquareKind; 3] = [Self::Semimagic, Self::Magic, Self::StronglyMagic];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Semimagic => "semimagic",
            Self::Magic => "magic",
            Self::StronglyMagic => "strongly-magic",
        }
    }
}

impl fmt::Display for SquareKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A 4-by-4 grid of distinct cards from one deck.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadSquare {
    dim: u32,
    cells: [u32; 16],
}

impl QuadSquare {
    pub fn new(dim: u32, cells: [u32; 16]) -> Result<Self> {
        if dim > crate::deck::MAX_DECK_DIM {
            return Err(Error::DeckDimOutOfRange(dim));
        }
        let mut seen = 0u64;
        for &c in &cells {
            if u64::from(c) >= 1u64 << dim {
                return Err(Error::CardOutOfRange { value: c.into(), dim });
            }
            if dim <= 6 {
                if seen >> c & 1 == 1 {
                    return Err(Error::DuplicateCard(c));
                }
                seen |= 1 << c;
            }
        }
        if dim > 6 {
            let mut sorted = cells;
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateCard(w[0]));
            }
        }
        Ok(Self { dim, cells })
    }

    /// The grid whose card at position p is p itself, in the deck of
    /// dimension `dim >= 4`. It is strongly magic by definition.
    pub fn base_grid(dim: u32) -> Result<Self> {
        let mut cells = [0u32; 16];
        for (p, c) in cells.iter_mut().enumerate() {
            *c = p as u32;
        }
        Self::new(dim, cells)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn cells(&self) -> &[u32; 16] {
        &self.cells
    }

    pub fn cell(&self, row: usize, col: usize) -> Card {
        Card::new(self.cells[4 * row + col], self.dim).expect("validated cell")
    }

    pub fn apply_affine(&self, map: &AffineMap) -> Result<QuadSquare> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: map.dim() });
        }
        let mut cells = [0u32; 16];
        for (out, &c) in cells.iter_mut().zip(&self.cells) {
            *out = map.apply(Card::new(c, self.dim)?)?.value();
        }
        Self::new(self.dim, cells)
    }

    /// Parses four lines of four whitespace-separated card tokens.
    pub fn parse(text: &str, dim: u32) -> Result<Self> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if rows.len() != 4 {
            return Err(Error::Parse(format!("expected 4 grid rows, got {}", rows.len())));
        }
        let mut cells = [0u32; 16];
        for (r, line) in rows.iter().enumerate() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 4 {
                return Err(Error::Parse(format!(
                    "expected 4 cards in row {}, got {}",
                    r + 1,
                    tokens.len()
                )));
            }
            for (c, tok) in tokens.iter().enumerate() {
                cells[4 * r + c] = parse_card_token(tok, dim)?.value();
            }
        }
        Self::new(dim, cells)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..4 {
            let row: Vec<String> =
                (0..4).map(|c| self.cells[4 * r + c].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn word_from_positions(positions: [usize; 4]) -> BitWord {
    BitWord::from_support(&positions, 16).expect("grid positions")
}

fn row_words() -> [BitWord; 4] {
    [0, 1, 2, 3].map(|r| word_from_positions([4 * r, 4 * r + 1, 4 * r + 2, 4 * r + 3]))
}

fn col_words() -> [BitWord; 4] {
    [0, 1, 2, 3].map(|c| word_from_positions([c, c + 4, c + 8, c + 12]))
}

/// The code of the kind on the 16 grid positions: dimension 7 (semimagic,
/// rows and columns), 8 (magic, plus diagonals), or 11 (strongly magic,
/// spanned by every four positions forming a quad as deck-16 cards).
pub fn square_code(kind: SquareKind) -> &'static QuadCode {
    static SEMIMAGIC: OnceLock<QuadCode> = OnceLock::new();
    static MAGIC: OnceLock<QuadCode> = OnceLock::new();
    static STRONGLY: OnceLock<QuadCode> = OnceLock::new();
    match kind {
        SquareKind::Semimagic => SEMIMAGIC.get_or_init(|| {
            let gens = row_words().into_iter().chain(col_words());
            let code = LinearCode::from_generators(16, gens).expect("length 16");
            assert_eq!(code.dimension(), 7);
            QuadCode::try_new(code).expect("rows and columns span a quad code")
        }),
        SquareKind::Magic => MAGIC.get_or_init(|| {
            let diagonals =
                [word_from_positions([0, 5, 10, 15]), word_from_positions([3, 6, 9, 12])];
            let gens = row_words().into_iter().chain(col_words()).chain(diagonals);
            let code = LinearCode::from_generators(16, gens).expect("length 16");
            assert_eq!(code.dimension(), 8);
            QuadCode::try_new(code).expect("rows, columns, and diagonals span a quad code")
        }),
        SquareKind::StronglyMagic => STRONGLY.get_or_init(|| {
            let mut gens = Vec::new();
            for i in 0..16usize {
                for j in i + 1..16 {
                    for k in j + 1..16 {
                        let l = i ^ j ^ k;
                        if l > k {
                            gens.push(word_from_positions([i, j, k, l]));
                        }
                    }
                }
            }
            let code = LinearCode::from_generators(16, gens).expect("length 16");
            assert_eq!(code.dimension(), 11);
            QuadCode::try_new(code).expect("position quads span a quad code")
        }),
    }
}

/// Exact weight distribution of the kind's code.
pub fn square_weight_enumerator(kind: SquareKind) -> WeightDistribution {
    square_code(kind).weight_distribution().expect("dimension at most 11")
}

/// Whether the grid is of the kind: every generator of the kind's code must
/// mark four cells whose cards XOR to zero (linearity extends this to every
/// codeword, in particular to all its weight-4 words).
pub fn is_square_of_kind(square: &QuadSquare, kind: SquareKind) -> bool {
    square_code(kind).generators().rows().all(|g| {
        let mut acc = 0u32;
        for p in g.support() {
            acc ^= square.cells[p];
        }
        acc == 0
    })
}

/// Closed-form count of grids of the kind in the deck of dimension `n`.
/// Zero for `n < 4` (no 16 distinct cards exist).
pub fn predicted_count(n: u32, kind: SquareKind) -> Result<BigUint> {
    if n > crate::deck::MAX_DECK_DIM {
        return Err(Error::DeckDimOutOfRange(n));
    }
    if n < 4 {
        return Ok(BigUint::ZERO);
    }
    let s = BigInt::from(1u64 << n);
    let base: BigInt =
        &s * (&s - 1) * (&s - 2) * (&s - 4) * (&s - 8);
    let x = &s - 16;
    let y = &s - 32;
    let z = &s - 64;
    let factor: BigInt = match kind {
        SquareKind::StronglyMagic => BigInt::one(),
        SquareKind::Magic => 10 + 85 * &x + 43 * &x * &y + &x * &y * &z,
        SquareKind::Semimagic => {
            112 + 2823 * &x + 2531 * &x * &y + 159 * &x * &y * &z + &x * &y * &z * (&s - 128)
        }
    };
    (base * factor)
        .to_biguint()
        .ok_or_else(|| Error::InvalidArgument("negative count".into()))
}

/// Exact count of grids of the kind by backtracking enumeration.
///
/// Grids are position-sensitive (reflections and rotations counted
/// separately). Supported exactly for `n = 4` (semimagic is slow there:
/// around a minute) and for `n = 5` with the magic and strongly magic kinds
/// (magic at `n = 5` takes many minutes).
pub fn count_squares(n: u32, kind: SquareKind) -> Result<BigUint> {
    if n < 4 {
        return Ok(BigUint::ZERO);
    }
    let supported = n == 4 || (n == 5 && kind != SquareKind::Semimagic);
    if !supported {
        return Err(Error::BudgetExceeded(format!(
            "counting {kind} squares is supported for deck dimension 4 (and 5 for the magic kinds), got {n}"
        )));
    }
    let count = match kind {
        SquareKind::Semimagic => count_checked(n, kind),
        SquareKind::Magic => count_magic(n),
        SquareKind::StronglyMagic => count_strongly_magic(n),
    };
    Ok(BigUint::from(count))
}

/// Weight-4 codewords of the kind's code that are not rows or columns,
/// binned by the first grid row that completes them. Rows and columns are
/// enforced by construction in every counter, so only these need checking.
fn extra_checks_by_row(kind: SquareKind) -> [Vec<u16>; 4] {
    let skip: Vec<u64> = row_words()
        .into_iter()
        .chain(col_words())
        .map(|w| w.bits())
        .collect();
    let mut bins: [Vec<u16>; 4] = Default::default();
    for w in square_code(kind).codewords() {
        if w.weight() == 4 && !skip.contains(&w.bits()) {
            let top = w.support().max().expect("nonzero word");
            bins[top / 4].push(w.bits() as u16);
        }
    }
    bins
}

fn passes(cells: &[u32; 16], mask: u16) -> bool {
    let mut acc = 0u32;
    let mut m = mask;
    while m != 0 {
        acc ^= cells[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    acc == 0
}

/// Reference counter: enumerates quad rows 1..3, forces row 4 from the
/// columns, and checks the kind's remaining weight-4 words as soon as their
/// cells are placed. Used directly for semimagic and as the validation
/// oracle for the specialized counters.
fn count_checked(n: u32, kind: SquareKind) -> u64 {
    let deck = 1u32 << n;
    let checks = extra_checks_by_row(kind);
    let mut cells = [0u32; 16];
    let mut count = 0u64;
    let mut free = Vec::with_capacity(deck as usize);

    fn rec(
        row: usize,
        used: u32,
        deck: u32,
        cells: &mut [u32; 16],
        checks: &[Vec<u16>; 4],
        count: &mut u64,
        free_stack: &mut Vec<u32>,
    ) {
        if row == 3 {
            let mut used = used;
            for j in 0..4 {
                let forced = cells[j] ^ cells[4 + j] ^ cells[8 + j];
                if used >> forced & 1 == 1 {
                    return;
                }
                used |= 1 << forced;
                cells[12 + j] = forced;
            }
            if checks[3].iter().all(|&m| passes(cells, m)) {
                *count += 1;
            }
            return;
        }
        let base = free_stack.len();
        for v in 0..deck {
            if used >> v & 1 == 0 {
                free_stack.push(v);
            }
        }
        let free_len = free_stack.len();
        for ai in base..free_len {
            let a = free_stack[ai];
            for bi in base..free_len {
                if bi == ai {
                    continue;
                }
                let b = free_stack[bi];
                for ci in base..free_len {
                    if ci == ai || ci == bi {
                        continue;
                    }
                    let c = free_stack[ci];
                    let d = a ^ b ^ c;
                    if used >> d & 1 == 1 || d == a || d == b || d == c {
                        continue;
                    }
                    cells[4 * row] = a;
                    cells[4 * row + 1] = b;
                    cells[4 * row + 2] = c;
                    cells[4 * row + 3] = d;
                    if !checks[row].iter().all(|&m| passes(cells, m)) {
                        continue;
                    }
                    let used = used | 1 << a | 1 << b | 1 << c | 1 << d;
                    rec(row + 1, used, deck, cells, checks, count, free_stack);
                }
            }
        }
        free_stack.truncate(base);
    }

    rec(0, 0, deck, &mut cells, &checks, &mut count, &mut free);
    count
}

/// Magic counter with constraint propagation. After two free quad rows, the
/// anti-diagonal (through the forced fourth row) pins cell 9 and the main
/// diagonal pins cell 11, so the third row has only two free cells; the
/// remaining diagonal identities hold automatically because the rows are
/// quads.
fn count_magic(n: u32) -> u64 {
    let deck = 1u32 << n;
    let mut count = 0u64;
    let mut row0 = Vec::new();
    for a in 0..deck {
        for b in 0..deck {
            if b == a {
                continue;
            }
            for c in 0..deck {
                if c == a || c == b {
                    continue;
                }
                let d = a ^ b ^ c;
                if d == a || d == b || d == c {
                    continue;
                }
                row0.push([a, b, c, d]);
            }
        }
    }
    for &[c0, c1, c2, c3] in &row0 {
        let used0 = 1u32 << c0 | 1 << c1 | 1 << c2 | 1 << c3;
        for c4 in 0..deck {
            if used0 >> c4 & 1 == 1 {
                continue;
            }
            for c5 in 0..deck {
                if (used0 >> c5 & 1 == 1) || c5 == c4 {
                    continue;
                }
                for c6 in 0..deck {
                    if (used0 >> c6 & 1 == 1) || c6 == c4 || c6 == c5 {
                        continue;
                    }
                    let c7 = c4 ^ c5 ^ c6;
                    if (used0 >> c7 & 1 == 1) || c7 == c4 || c7 == c5 || c7 == c6 {
                        continue;
                    }
                    let used1 = used0 | 1 << c4 | 1 << c5 | 1 << c6 | 1 << c7;
                    // Anti-diagonal through the column-forced last row:
                    // c9 = c3 ^ c6 ^ c12 with c12 = c0 ^ c4 ^ c8.
                    let h9 = c0 ^ c3 ^ c4 ^ c6;
                    // Main diagonal through row closure and column closure:
                    // c11' appears via c15; net effect c11 = c8 ^ c9 ^ c10.
                    for c8 in 0..deck {
                        if used1 >> c8 & 1 == 1 {
                            continue;
                        }
                        let c9 = h9 ^ c8;
                        if (used1 >> c9 & 1 == 1) || c9 == c8 {
                            continue;
                        }
                        for c10 in 0..deck {
                            if (used1 >> c10 & 1 == 1) || c10 == c8 || c10 == c9 {
                                continue;
                            }
                            let c11 = c8 ^ c9 ^ c10;
                            if (used1 >> c11 & 1 == 1) || c11 == c8 || c11 == c9 || c11 == c10 {
                                continue;
                            }
                            let mut used = used1 | 1 << c8 | 1 << c9 | 1 << c10 | 1 << c11;
                            let forced = [
                                c0 ^ c4 ^ c8,
                                c1 ^ c5 ^ c9,
                                c2 ^ c6 ^ c10,
                                c3 ^ c7 ^ c11,
                            ];
                            let mut ok = true;
                            for &f in &forced {
                                if used >> f & 1 == 1 {
                                    ok = false;
                                    break;
                                }
                                used |= 1 << f;
                            }
                            count += u64::from(ok);
                        }
                    }
                }
            }
        }
    }
    count
}

/// Strongly magic counter: the code has dimension 11, so cells 0, 1, 2, 4,
/// and 8 determine the grid. Each forcing word below is a position quad.
fn count_strongly_magic(n: u32) -> u64 {
    let deck = 1u32 << n;
    let mut count = 0u64;
    for c0 in 0..deck {
        for c1 in 0..deck {
            if c1 == c0 {
                continue;
            }
            for c2 in 0..deck {
                if c2 == c0 || c2 == c1 {
                    continue;
                }
                let c3 = c0 ^ c1 ^ c2;
                if c3 == c0 || c3 == c1 || c3 == c2 {
                    continue;
                }
                let used0 = 1u32 << c0 | 1 << c1 | 1 << c2 | 1 << c3;
                for c4 in 0..deck {
                    if used0 >> c4 & 1 == 1 {
                        continue;
                    }
                    // Position quads {0,1,4,5}, {0,2,4,6}, {0,3,4,7}.
                    let row1 = [c4, c0 ^ c1 ^ c4, c0 ^ c2 ^ c4, c0 ^ c3 ^ c4];
                    let Some(used1) = place(used0, &row1) else { continue };
                    for c8 in 0..deck {
                        if used1 >> c8 & 1 == 1 {
                            continue;
                        }
                        // Position quads {0,1,8,9}, {0,2,8,10}, {0,3,8,11}.
                        let row2 = [c8, c0 ^ c1 ^ c8, c0 ^ c2 ^ c8, c0 ^ c3 ^ c8];
                        let Some(used2) = place(used1, &row2) else { continue };
                        // Columns force the last row.
                        let row3 = [
                            c0 ^ row1[0] ^ row2[0],
                            c1 ^ row1[1] ^ row2[1],
                            c2 ^ row1[2] ^ row2[2],
                            c3 ^ row1[3] ^ row2[3],
                        ];
                        if place(used2, &row3).is_some() {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

fn place(used: u32, cards: &[u32; 4]) -> Option<u32> {
    let mut used = used;
    for &c in cards {
        if used >> c & 1 == 1 {
            return None;
        }
        used |= 1 << c;
    }
    Some(used)
}

/// One row of the codes-per-dimension reference table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionTableRow {
    pub dimension: usize,
    pub semimagic: Option<u64>,
    pub magic: Option<u64>,
    pub strongly_magic: Option<u64>,
    /// Smallest deck size realizing a length-16 code of this dimension,
    /// recomputed as `2^(15 - dimension)`.
    pub deck_size: u64,
}

/// Codes of each kind per dimension, with the minimal deck-size row
/// recomputed from the realizability bound. The per-dimension class counts
/// for deck sizes above 16 are published reference data, not recomputed here.
pub fn dimension_table() -> Vec<DimensionTableRow> {
    let counts: [(usize, Option<u64>, Option<u64>, Option<u64>); 5] = [
        (7, Some(1), None, None),
        (8, Some(159), Some(1), None),
        (9, Some(2531), Some(43), None),
        (10, Some(2823), Some(85), None),
        (11, Some(112), Some(10), Some(1)),
    ];
    // Anchor the deck-size formula on the three concrete codes.
    for kind in SquareKind::ALL {
        let code = square_code(kind);
        let n = code.min_realizing_dimension().expect("square codes are quad codes");
        assert_eq!(u32::from(15 - code.dimension() as u8), n);
    }
    counts
        .into_iter()
        .map(|(dimension, semimagic, magic, strongly_magic)| DimensionTableRow {
            dimension,
            semimagic,
            magic,
            strongly_magic,
            deck_size: 1 << (15 - dimension),
        })
        .collect()
}

/// Whether radius-1 balls around the codewords tile the whole space exactly.
pub fn is_perfect_radius1(code: &LinearCode) -> Result<bool> {
    let len = code.length();
    let k = code.dimension();
    if len > 24 {
        return Err(Error::BudgetExceeded(format!(
            "perfect-code check supports lengths up to 24, got {len}"
        )));
    }
    // Sphere-packing equality is necessary: 2^k * (1 + len) = 2^len.
    if (1u128 << k) * (1 + len as u128) != 1u128 << len {
        return Ok(false);
    }
    let mut covered = vec![false; 1 << len];
    for w in code.codewords() {
        let center = w.bits() as usize;
        for shift in std::iter::once(0u64).chain((0..len).map(|i| 1 << i)) {
            let point = center ^ shift as usize;
            if covered[point] {
                return Ok(false);
            }
            covered[point] = true;
        }
    }
    Ok(covered.iter().all(|&c| c))
}

/// A failed puncture position with the reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectCodeFailure {
    pub position: usize,
    pub reason: String,
}

/// Punctures the strongly magic code at every coordinate and checks that each
/// result is a perfect code of length 15, dimension 11, and minimum weight 3.
pub fn verify_hamming_15_11() -> std::result::Result<(), PerfectCodeFailure> {
    let code = square_code(SquareKind::StronglyMagic).as_linear();
    for pos in 0..16 {
        let fail = |reason: String| PerfectCodeFailure { position: pos, reason };
        let punctured = code.puncture(pos).map_err(|e| fail(e.to_string()))?;
        if punctured.length() != 15 {
            return Err(fail(format!("length {}", punctured.length())));
        }
        if punctured.dimension() != 11 {
            return Err(fail(format!("dimension {}", punctured.dimension())));
        }
        let min = punctured.min_weight().map_err(|e| fail(e.to_string()))?;
        if min != 3 {
            return Err(fail(format!("minimum weight {min}")));
        }
        match is_perfect_radius1(&punctured) {
            Ok(true) => {}
            Ok(false) => return Err(fail("radius-1 balls do not tile the space".into())),
            Err(e) => return Err(fail(e.to_string())),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::enumerate_quads;
    use crate::deck::CardSequence;

    #[test]
    fn code_dimensions() {
        assert_eq!(square_code(SquareKind::Semimagic).dimension(), 7);
        assert_eq!(square_code(SquareKind::Magic).dimension(), 8);
        assert_eq!(square_code(SquareKind::StronglyMagic).dimension(), 11);
    }

    #[test]
    fn weight_enumerators_exact() {
        let cases = [
            (SquareKind::Semimagic, [8u64, 16, 78, 16, 8, 1]),
            (SquareKind::Magic, [12, 64, 102, 64, 12, 1]),
            (SquareKind::StronglyMagic, [140, 448, 870, 448, 140, 1]),
        ];
        for (kind, [a4, a6, a8, a10, a12, a16]) in cases {
            let dist = square_weight_enumerator(kind);
            let mut expected = vec![0u64; 17];
            expected[0] = 1;
            expected[4] = a4;
            expected[6] = a6;
            expected[8] = a8;
            expected[10] = a10;
            expected[12] = a12;
            expected[16] = a16;
            assert_eq!(dist.counts(), &expected[..], "{kind}");
            assert!(dist.is_palindromic(), "{kind}");
        }
    }

    #[test]
    fn code_containment_chain() {
        let semi = square_code(SquareKind::Semimagic);
        let magic = square_code(SquareKind::Magic);
        let strong = square_code(SquareKind::StronglyMagic);
        for g in semi.generators().rows() {
            assert!(magic.contains(&g).unwrap());
        }
        for g in magic.generators().rows() {
            assert!(strong.contains(&g).unwrap());
        }
        assert!(semi.dimension() < magic.dimension());
        assert!(magic.dimension() < strong.dimension());
    }

    #[test]
    fn row_column_dependency() {
        // The four row words XOR to the same value as the four column words;
        // that is the single dependency keeping the semimagic code at
        // dimension 7.
        let rows = row_words().into_iter().fold(0u64, |acc, w| acc ^ w.bits());
        let cols = col_words().into_iter().fold(0u64, |acc, w| acc ^ w.bits());
        assert_eq!(rows, cols);
    }

    #[test]
    fn magic_dependency() {
        // Rows 1 and 4, columns 2 and 3, and both diagonals XOR to zero.
        let words = [
            word_from_positions([0, 1, 2, 3]),
            word_from_positions([12, 13, 14, 15]),
            word_from_positions([1, 5, 9, 13]),
            word_from_positions([2, 6, 10, 14]),
            word_from_positions([0, 5, 10, 15]),
            word_from_positions([3, 6, 9, 12]),
        ];
        assert_eq!(words.into_iter().fold(0u64, |acc, w| acc ^ w.bits()), 0);
    }

    #[test]
    fn broken_diagonals_are_magic_codewords() {
        let magic = square_code(SquareKind::Magic);
        let x = word_from_positions([1, 4, 11, 14]);
        let y = word_from_positions([2, 7, 8, 13]);
        assert!(magic.contains(&x).unwrap());
        assert!(magic.contains(&y).unwrap());
        assert_eq!(magic.quad_count(), 12);
    }

    #[test]
    fn base_grid_is_strongly_magic() {
        let grid = QuadSquare::base_grid(4).unwrap();
        for kind in SquareKind::ALL {
            assert!(is_square_of_kind(&grid, kind), "{kind}");
        }
    }

    #[test]
    fn swapping_cards_breaks_the_square() {
        let mut cells = *QuadSquare::base_grid(4).unwrap().cells();
        cells.swap(0, 1);
        let swapped = QuadSquare::new(4, cells).unwrap();
        assert!(!is_square_of_kind(&swapped, SquareKind::Semimagic));
    }

    #[test]
    fn affine_images_stay_strongly_magic() {
        let grid = QuadSquare::base_grid(4).unwrap();
        for seed in 0..100 {
            let map = AffineMap::random(4, seed).unwrap();
            let image = grid.apply_affine(&map).unwrap();
            for kind in SquareKind::ALL {
                assert!(is_square_of_kind(&image, kind), "seed {seed} {kind}");
            }
        }
    }

    #[test]
    fn square_rows_really_are_quads() {
        // A strongly magic square's rows are quads of its deck.
        let grid = QuadSquare::base_grid(5).unwrap();
        let map = AffineMap::random(5, 7).unwrap();
        let image = grid.apply_affine(&map).unwrap();
        let flat = CardSequence::new(5, image.cells().to_vec()).unwrap();
        let quads = enumerate_quads(&flat);
        for r in 0..4 {
            assert!(quads.contains(&[4 * r, 4 * r + 1, 4 * r + 2, 4 * r + 3]));
        }
    }

    #[test]
    fn strongly_magic_count_matches_formula_and_reference_counter() {
        let fast = count_strongly_magic(4);
        assert_eq!(BigUint::from(fast), predicted_count(4, SquareKind::StronglyMagic).unwrap());
        assert_eq!(fast, 322_560);
        let checked = count_checked(4, SquareKind::StronglyMagic);
        assert_eq!(checked, fast);
    }

    #[test]
    fn predicted_counts() {
        assert_eq!(predicted_count(4, SquareKind::StronglyMagic).unwrap(), 322_560u64.into());
        assert_eq!(predicted_count(4, SquareKind::Magic).unwrap(), 3_225_600u64.into());
        assert_eq!(predicted_count(4, SquareKind::Semimagic).unwrap(), 36_126_720u64.into());
        assert_eq!(
            predicted_count(5, SquareKind::StronglyMagic).unwrap(),
            19_998_720u64.into()
        );
        assert_eq!(
            predicted_count(5, SquareKind::Magic).unwrap(),
            (19_998_720u64 * 1370).into()
        );
        assert_eq!(predicted_count(3, SquareKind::Semimagic).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn count_budget_gate() {
        assert!(count_squares(6, SquareKind::StronglyMagic).is_err());
        assert!(count_squares(5, SquareKind::Semimagic).is_err());
        assert_eq!(count_squares(3, SquareKind::Magic).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn dimension_table_values() {
        let table = dimension_table();
        assert_eq!(table.len(), 5);
        assert_eq!(table[0].deck_size, 256);
        assert_eq!(table[4].deck_size, 16);
        assert_eq!(table[4].strongly_magic, Some(1));
        assert_eq!(table[1].magic, Some(1));
        assert!(table[0].magic.is_none());
    }

    #[test]
    fn punctured_magic_code_is_not_perfect() {
        let punctured = square_code(SquareKind::Magic).as_linear().puncture(0).unwrap();
        assert!(!is_perfect_radius1(&punctured).unwrap());
    }

    #[test]
    fn hamming_check_single_position() {
        let code = square_code(SquareKind::StronglyMagic).as_linear();
        let punctured = code.puncture(15).unwrap();
        assert_eq!(punctured.dimension(), 11);
        assert_eq!(punctured.min_weight().unwrap(), 3);
        assert!(is_perfect_radius1(&punctured).unwrap());
        // Ball-size arithmetic: 2048 * 16 = 32768.
        assert_eq!(2048 * 16, 1 << 15);
    }

    #[test]
    fn square_text_round_trip() {
        let grid = QuadSquare::base_grid(4).unwrap();
        let parsed = QuadSquare::parse(&grid.to_text(), 4).unwrap();
        assert_eq!(parsed, grid);
        let quaternary = "q:00 q:01 q:02 q:03\nq:10 q:11 q:12 q:13\n\
                          q:20 q:21 q:22 q:23\nq:30 q:31 q:32 q:33\n";
        assert_eq!(QuadSquare::parse(quaternary, 4).unwrap(), grid);
        assert!(QuadSquare::parse("1 2 3\n4 5 6\n", 4).is_err());
    }

    #[test]
    fn duplicate_cells_rejected() {
        let mut cells = *QuadSquare::base_grid(4).unwrap().cells();
        cells[15] = cells[0];
        assert_eq!(QuadSquare::new(4, cells), Err(Error::DuplicateCard(0)));
    }
}
