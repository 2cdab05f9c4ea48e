//! Exhaustive and bounded searches over quad codes.
//!
//! The engine enumerates canonical generator matrices (reduced row echelon
//! form) of even-weight codes with a minimum-weight floor, growing one row per
//! pivot column and cutting a branch as soon as any word in the partial span
//! falls below the floor. Spans only grow, so the pruning is sound, and rref
//! canonicity means every code is visited exactly once. On top of the engine
//! sit the smallest-deck table `D(cards, quads)`, the distance-6 maxima
//! `B(len)`, the no-quads maxima `F(n)` with witness realization, and the
//! closed-form bounds.

use crate::code::{binomial, LinearCode, QuadCode};
use crate::deck::{enumerate_quads, CardSequence};
use crate::error::{Error, Result};
use crate::gf2::BitWord;
use num::BigUint;
use num::pow::Pow;
use std::collections::BTreeMap;

/// Caps for one exhaustive search.
///
/// `max_nodes` counts candidate generator rows inspected, which keeps runs
/// deterministic across machines; a search that runs out reports its result
/// as best-effort instead of exact.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_length: usize,
    pub max_dimension: usize,
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_length: 18, max_dimension: 14, max_nodes: 4_000_000_000 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Flow {
    Continue,
    Stop,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum RunOutcome {
    Exhausted,
    Stopped,
    OutOfBudget,
}

struct RunState {
    nodes_left: u64,
    stopped: bool,
    truncated: bool,
}

/// Enumerates even-weight codes with all nonzero weights >= `min_weight` via
/// canonical rref generator matrices.
struct Enumerator {
    len: usize,
    min_weight: u32,
    buckets: Vec<Vec<u64>>,
}

impl Enumerator {
    fn new(len: usize, min_weight: u32, budget: &SearchBudget) -> Result<Self> {
        if len == 0 || len > budget.max_length || len > 24 {
            return Err(Error::BudgetExceeded(format!(
                "code enumeration supports lengths 1..={}, got {len}",
                budget.max_length.min(24)
            )));
        }
        let mut buckets = vec![Vec::new(); len];
        for w in 1u64..1 << len {
            let wt = w.count_ones();
            if wt % 2 == 0 && wt >= min_weight {
                buckets[w.trailing_zeros() as usize].push(w);
            }
        }
        Ok(Self { len, min_weight, buckets })
    }

    /// Runs the enumeration. With `target = Some(k)` the callback fires once
    /// per dimension-k code; with `None` it fires at every node (dimension >= 1)
    /// and the search explores all dimensions.
    fn run(
        &self,
        target: Option<usize>,
        max_nodes: u64,
        on_node: &mut impl FnMut(&[u64], &[u64]) -> Flow,
    ) -> RunOutcome {
        if let Some(k) = target {
            if k == 0 || k > self.len {
                return RunOutcome::Exhausted;
            }
        }
        let mut st = RunState { nodes_left: max_nodes, stopped: false, truncated: false };
        let mut rows = Vec::new();
        let mut span = vec![0u64];
        self.dfs(&mut rows, &mut span, 0, target, &mut st, on_node);
        if st.stopped {
            RunOutcome::Stopped
        } else if st.truncated {
            RunOutcome::OutOfBudget
        } else {
            RunOutcome::Exhausted
        }
    }

    fn dfs(
        &self,
        rows: &mut Vec<u64>,
        span: &mut Vec<u64>,
        min_pivot: usize,
        target: Option<usize>,
        st: &mut RunState,
        on_node: &mut impl FnMut(&[u64], &[u64]) -> Flow,
    ) {
        // Leave room for the pivots still to be placed.
        let max_pivot_excl = match target {
            Some(k) => self.len - (k - rows.len()) + 1,
            None => self.len,
        };
        for p in min_pivot..max_pivot_excl {
            // Earlier rows must be zero in a later pivot column.
            if rows.iter().any(|&r| r >> p & 1 == 1) {
                continue;
            }
            for &w in &self.buckets[p] {
                if st.nodes_left == 0 {
                    st.truncated = true;
                    return;
                }
                st.nodes_left -= 1;
                if !span[1..].iter().all(|&s| (s ^ w).count_ones() >= self.min_weight) {
                    continue;
                }
                rows.push(w);
                let old_len = span.len();
                for i in 0..old_len {
                    let x = span[i] ^ w;
                    span.push(x);
                }
                if target.is_none_or(|k| rows.len() == k) {
                    if on_node(rows, span) == Flow::Stop {
                        st.stopped = true;
                    }
                }
                if !st.stopped && target.is_none_or(|k| rows.len() < k) {
                    self.dfs(rows, span, p + 1, target, st, on_node);
                }
                span.truncate(old_len);
                rows.pop();
                if st.stopped || st.truncated {
                    return;
                }
            }
        }
    }
}

fn quad_code_from_rows(len: usize, rows: &[u64]) -> QuadCode {
    let words = rows
        .iter()
        .map(|&bits| BitWord::from_bits(bits, len).expect("row in range"))
        .collect::<Vec<_>>();
    let code = LinearCode::from_generators(len, words).expect("valid length");
    QuadCode::try_new(code).expect("enumerated span satisfies the quad invariants")
}

fn ceil_log2(v: u64) -> u32 {
    if v <= 1 {
        0
    } else {
        64 - (v - 1).leading_zeros()
    }
}

/// Largest dimension the distance-4 bound allows at this length.
pub fn max_quad_dimension(len: usize) -> usize {
    (len as u32).saturating_sub(1 + ceil_log2(len as u64)) as usize
}

/// Every quad code of the given length and dimension, as canonical generator
/// matrices, each exactly once. Supports lengths up to 10.
pub fn enumerate_quad_codes(len: usize, dim: usize) -> Result<Vec<QuadCode>> {
    if len == 0 || len > 10 {
        return Err(Error::BudgetExceeded(format!(
            "quad-code enumeration supports lengths 1..=10, got {len}"
        )));
    }
    if dim == 0 {
        return Ok(vec![zero_quad_code(len)]);
    }
    if dim > max_quad_dimension(len) {
        return Ok(Vec::new());
    }
    let budget = SearchBudget::default();
    let enumerator = Enumerator::new(len, 4, &budget)?;
    let mut codes = Vec::new();
    let outcome = enumerator.run(Some(dim), budget.max_nodes, &mut |rows, _span| {
        codes.push(quad_code_from_rows(len, rows));
        Flow::Continue
    });
    debug_assert_eq!(outcome, RunOutcome::Exhausted);
    Ok(codes)
}

fn zero_quad_code(len: usize) -> QuadCode {
    QuadCode::try_new(LinearCode::zero(len).expect("valid length")).expect("zero code")
}

/// Every quad code of length 1..=max_len across all dimensions.
pub fn quad_code_corpus(max_len: usize) -> Result<Vec<QuadCode>> {
    let mut corpus = Vec::new();
    for len in 1..=max_len {
        for dim in 0..=max_quad_dimension(len) {
            corpus.extend(enumerate_quad_codes(len, dim)?);
        }
    }
    Ok(corpus)
}

/// One cell of the smallest-deck table: the minimal deck size hosting exactly
/// `quads` quads among `cards` cards, with a maximal-dimension witness code.
#[derive(Clone, Debug)]
pub struct DTableEntry {
    pub deck_size: u64,
    pub code_dimension: usize,
    pub witness: QuadCode,
}

/// One row of the table, keyed by attainable quad count.
#[derive(Clone, Debug)]
pub struct DTableRow {
    pub cards: usize,
    pub entries: BTreeMap<u64, DTableEntry>,
}

/// The smallest-deck table: `deck_size(cards, quads)` is the least `2^n`
/// admitting `cards` cards with exactly `quads` quads, or `None` when that
/// quad count is unattainable.
#[derive(Clone, Debug)]
pub struct DTable {
    max_cards: usize,
    rows: Vec<DTableRow>,
    exact: bool,
}

impl DTable {
    pub fn max_cards(&self) -> usize {
        self.max_cards
    }

    pub fn rows(&self) -> &[DTableRow] {
        &self.rows
    }

    pub fn exact(&self) -> bool {
        self.exact
    }

    pub fn deck_size(&self, cards: usize, quads: u64) -> Option<u64> {
        self.rows
            .iter()
            .find(|r| r.cards == cards)
            .and_then(|r| r.entries.get(&quads))
            .map(|e| e.deck_size)
    }

    pub fn attainable_quads(&self, cards: usize) -> Vec<u64> {
        self.rows
            .iter()
            .find(|r| r.cards == cards)
            .map(|r| r.entries.keys().copied().collect())
            .unwrap_or_default()
    }
}

/// Builds the smallest-deck table for all card counts up to `max_cards`.
///
/// For each length and dimension, every quad code is enumerated and the
/// maximal dimension per quad count is kept; the minimal deck size is then
/// `2^(cards - dim - 1)`. Exact through `max_cards = 10`.
pub fn compute_d_table(max_cards: usize) -> Result<DTable> {
    if max_cards == 0 || max_cards > 10 {
        return Err(Error::BudgetExceeded(format!(
            "the smallest-deck table supports 1..=10 cards, got {max_cards}"
        )));
    }
    let budget = SearchBudget::default();
    let mut rows = Vec::new();
    let mut exact = true;
    for len in 1..=max_cards {
        let mut best: BTreeMap<u64, (usize, Vec<u64>)> = BTreeMap::new();
        best.insert(0, (0, Vec::new()));
        for dim in 1..=max_quad_dimension(len) {
            let enumerator = Enumerator::new(len, 4, &budget)?;
            let outcome = enumerator.run(Some(dim), budget.max_nodes, &mut |rows, span| {
                let quads = span[1..].iter().filter(|s| s.count_ones() == 4).count() as u64;
                let entry = best.entry(quads).or_insert((dim, rows.to_vec()));
                if entry.0 < dim {
                    *entry = (dim, rows.to_vec());
                }
                Flow::Continue
            });
            if outcome == RunOutcome::OutOfBudget {
                exact = false;
            }
        }
        let entries = best
            .into_iter()
            .map(|(quads, (dim, gens))| {
                let witness = if dim == 0 {
                    zero_quad_code(len)
                } else {
                    quad_code_from_rows(len, &gens)
                };
                (quads, DTableEntry {
                    deck_size: 1 << (len - dim - 1),
                    code_dimension: dim,
                    witness,
                })
            })
            .collect();
        rows.push(DTableRow { cards: len, entries });
    }
    Ok(DTable { max_cards, rows, exact })
}

/// Result of the distance-6 maximum search at one length.
#[derive(Clone, Debug)]
pub struct BOutcome {
    pub length: usize,
    pub max_codewords: u64,
    pub max_dimension: usize,
    pub witness: Option<QuadCode>,
    pub exact: bool,
}

/// Largest number of codewords in an even binary linear code of this length
/// with all nonzero weights >= 6. Exhaustive (exact) through length 13 or so
/// under the default budget; beyond that the outcome may be flagged
/// best-effort and is a lower bound.
pub fn compute_b(len: usize) -> Result<BOutcome> {
    compute_b_with_budget(len, &SearchBudget::default())
}

pub fn compute_b_with_budget(len: usize, budget: &SearchBudget) -> Result<BOutcome> {
    if len == 0 || len > 16 {
        return Err(Error::BudgetExceeded(format!(
            "the distance-6 maximum supports lengths 1..=16, got {len}"
        )));
    }
    let enumerator = Enumerator::new(len, 6, budget)?;
    let mut max_dim = 0usize;
    let mut witness_rows: Vec<u64> = Vec::new();
    let outcome = enumerator.run(None, budget.max_nodes, &mut |rows, _span| {
        if rows.len() > max_dim {
            max_dim = rows.len();
            witness_rows = rows.to_vec();
        }
        Flow::Continue
    });
    let mut exact = outcome == RunOutcome::Exhausted;
    let mut witness =
        (max_dim > 0).then(|| quad_code_from_rows(len, &witness_rows));
    if !exact {
        // The search gave up; known constructions may still raise the floor.
        if let Some(code) = constructions::best_even_distance6(len, max_dim + 1) {
            max_dim = code.dimension();
            witness = Some(code);
        }
        exact = false;
    }
    Ok(BOutcome {
        length: len,
        max_codewords: 1 << max_dim,
        max_dimension: max_dim,
        witness,
        exact,
    })
}

enum FindOutcome {
    Found(QuadCode),
    None { exact: bool },
}

/// Looks for an even code of the given length with all nonzero weights >= 6
/// and dimension >= `min_dim`. Any higher-dimensional code contains a
/// dimension-`min_dim` subcode with the same floor, so searching exactly at
/// `min_dim` decides existence.
fn find_even_distance6(len: usize, min_dim: usize, budget: &SearchBudget) -> FindOutcome {
    if min_dim == 0 {
        return FindOutcome::Found(zero_quad_code(len));
    }
    if let Some(code) = constructions::best_even_distance6(len, min_dim) {
        return FindOutcome::Found(code);
    }
    if len > budget.max_length || min_dim > budget.max_dimension {
        return FindOutcome::None { exact: false };
    }
    let Ok(enumerator) = Enumerator::new(len, 6, budget) else {
        return FindOutcome::None { exact: false };
    };
    let mut found: Option<Vec<u64>> = None;
    let outcome = enumerator.run(Some(min_dim), budget.max_nodes, &mut |rows, _span| {
        found = Some(rows.to_vec());
        Flow::Stop
    });
    match (found, outcome) {
        (Some(rows), _) => FindOutcome::Found(quad_code_from_rows(len, &rows)),
        (None, RunOutcome::Exhausted) => FindOutcome::None { exact: true },
        (None, _) => FindOutcome::None { exact: false },
    }
}

/// Result of the no-quads maximum search for one deck dimension.
#[derive(Clone, Debug)]
pub struct FOutcome {
    pub deck_dim: u32,
    pub max_cards: usize,
    pub witness: CardSequence,
    pub witness_code: QuadCode,
    pub exact: bool,
}

/// Largest number of cards in the deck of dimension `n` containing no quad,
/// with a concrete witness verified against the naive oracle.
///
/// A no-quads set of `len` cards exists exactly when an even code of length
/// `len`, all nonzero weights >= 6, and dimension >= `len - n - 1` exists, so
/// the search walks `len` upward until that fails. Feasibility is monotone
/// (shortening a witness code steps it down), so the first failure ends the
/// walk. When a nonexistence decision cannot be exhausted within budget, the
/// result so far is returned flagged best-effort.
pub fn compute_f(n: u32) -> Result<FOutcome> {
    compute_f_with_budget(n, &SearchBudget::default())
}

pub fn compute_f_with_budget(n: u32, budget: &SearchBudget) -> Result<FOutcome> {
    if n == 0 || n > 8 {
        return Err(Error::BudgetExceeded(format!(
            "the no-quads maximum supports deck dimensions 1..=8, got {n}"
        )));
    }
    // The zero code of length n+1 always realizes a quad-free set.
    let mut best_len = n as usize + 1;
    let mut best_code = zero_quad_code(best_len);
    let mut exact = true;
    loop {
        let len = best_len + 1;
        if len > 64 {
            break;
        }
        let min_dim = len - n as usize - 1;
        match find_even_distance6(len, min_dim, budget) {
            FindOutcome::Found(code) => {
                best_len = len;
                best_code = code;
            }
            FindOutcome::None { exact: decided } => {
                exact = decided;
                break;
            }
        }
    }
    let witness = best_code.realize_cards(n)?;
    assert!(
        enumerate_quads(&witness).is_empty(),
        "witness must be quad-free by construction"
    );
    Ok(FOutcome { deck_dim: n, max_cards: best_len, witness, witness_code: best_code, exact })
}

/// A witness search for one specific set size.
#[derive(Clone, Debug)]
pub struct NoQuadsOutcome {
    pub witness: Option<CardSequence>,
    pub exact: bool,
}

/// A concrete `size`-card quad-free set in the deck of dimension `n`, or
/// `None` when none exists (exact) or none was found within budget.
pub fn find_noquads_set(n: u32, size: usize) -> Result<NoQuadsOutcome> {
    find_noquads_set_with_budget(n, size, &SearchBudget::default())
}

pub fn find_noquads_set_with_budget(
    n: u32,
    size: usize,
    budget: &SearchBudget,
) -> Result<NoQuadsOutcome> {
    if n == 0 || n > 8 {
        return Err(Error::BudgetExceeded(format!(
            "the no-quads search supports deck dimensions 1..=8, got {n}"
        )));
    }
    if size == 0 || size > 64 {
        return Err(Error::InvalidArgument(format!("set size {size} outside 1..=64")));
    }
    if u64::from(n) < 6 && size as u64 > 1 << n {
        return Ok(NoQuadsOutcome { witness: None, exact: true });
    }
    let min_dim = (size as i64 - i64::from(n) - 1).max(0) as usize;
    let outcome = find_even_distance6(size, min_dim, budget);
    match outcome {
        FindOutcome::Found(code) => {
            let witness = code.realize_cards(n)?;
            assert!(enumerate_quads(&witness).is_empty());
            Ok(NoQuadsOutcome { witness: Some(witness), exact: true })
        }
        FindOutcome::None { exact } => Ok(NoQuadsOutcome { witness: None, exact }),
    }
}

/// The sphere-packing bound on the size of a q-ary block code of the given
/// length and minimum distance: `q^len / sum_{i<=t} C(len,i)(q-1)^i` with
/// `t = floor((d-1)/2)`, rounded down. Exact integer arithmetic.
pub fn hamming_bound(q: u64, len: u32, d: u32) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("alphabet size {q} must be at least 2")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("minimum distance must be at least 1".into()));
    }
    let t = (d - 1) / 2;
    let numerator = BigUint::from(q).pow(len);
    let mut denominator = BigUint::ZERO;
    for i in 0..=t.min(len) {
        denominator +=
            BigUint::from(binomial(len.into(), i.into())) * BigUint::from(q - 1).pow(i);
    }
    Ok(numerator / denominator)
}

/// The smallest deck that can host an `len`-card no-quads set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LazyCatererBound {
    /// `(len^2 - len + 2) / 2` cards.
    pub min_deck_cards: u64,
    /// Deck dimension floor: ceil(log2) of the card bound.
    pub min_deck_dim: u32,
}

pub fn lazy_caterer_bound(len: u64) -> Result<LazyCatererBound> {
    if len == 0 || len > 1 << 31 {
        return Err(Error::InvalidArgument(format!("set size {len} outside 1..=2^31")));
    }
    let cards = (len * len - len + 2) / 2;
    Ok(LazyCatererBound { min_deck_cards: cards, min_deck_dim: ceil_log2(cards) })
}

/// Largest set size whose existence the first-moment argument guarantees:
/// the biggest `len` with `C(len,4) + 3 < 2^n`.
pub fn probabilistic_threshold(n: u32) -> Result<u64> {
    if !(2..=63).contains(&n) {
        return Err(Error::InvalidArgument(format!("deck dimension {n} outside 2..=63")));
    }
    let limit = 1u128 << n;
    let mut len = 3u64;
    while binomial(len + 1, 4) + 3 < limit {
        len += 1;
    }
    Ok(len)
}

/// Known code families used to decide existence quickly. Every construction
/// is verified at runtime before use.
pub mod constructions {
    use super::*;

    /// Remainder of polynomial division over GF(2); bit i is the coefficient
    /// of x^i.
    fn poly_rem(mut a: u64, b: u64) -> u64 {
        let db = 63 - b.leading_zeros();
        while a != 0 {
            let da = 63 - a.leading_zeros();
            if da < db {
                break;
            }
            a ^= b << (da - db);
        }
        a
    }

    fn poly_mul(a: u64, b: u64) -> u64 {
        let mut out = 0;
        for i in 0..64 {
            if a >> i & 1 == 1 {
                out ^= b << i;
            }
        }
        out
    }

    /// The cyclic code of the given length generated by `g`, as a linear code.
    fn cyclic_code(len: usize, g: u64) -> LinearCode {
        let deg = (63 - g.leading_zeros()) as usize;
        let rows = (0..len - deg)
            .map(|i| BitWord::from_bits(g << i, len).expect("shift within length"))
            .collect::<Vec<_>>();
        LinearCode::from_generators(len, rows).expect("valid length")
    }

    /// An even [12, 4] code with all nonzero weights in {6, 8}: the simplex
    /// code of dimension 4 punctured on a line of its point set.
    pub fn punctured_simplex_12_4() -> LinearCode {
        let mut rows = Vec::new();
        for i in 0..4 {
            let mut bits = 0u64;
            for (j, v) in (4u64..16).enumerate() {
                bits |= (v >> i & 1) << j;
            }
            rows.push(BitWord::from_bits(bits, 12).expect("12 columns"));
        }
        LinearCode::from_generators(12, rows).expect("valid length")
    }

    /// The two-error-correcting BCH code of length 15, extended by a parity
    /// bit: an even [16, 7] code with minimum weight 6.
    pub fn extended_bch_16_7() -> LinearCode {
        // (x^4 + x + 1)(x^4 + x^3 + x^2 + x + 1)
        let g = poly_mul(0b10011, 0b11111);
        cyclic_code(15, g).extend_parity().expect("length 16")
    }

    /// The length-17 cyclic code whose generator is a degree-8 factor of
    /// x^17 + 1, extended by a parity bit: an even [18, 9] code with minimum
    /// weight 6.
    pub fn extended_cyclic_18_9() -> LinearCode {
        let modulus = (1u64 << 17) | 1;
        let g = (0x100u64..0x200)
            .find(|&g| g & 1 == 1 && poly_rem(modulus, g) == 0)
            .expect("x^17 + 1 has a degree-8 factor");
        cyclic_code(17, g).extend_parity().expect("length 18")
    }

    fn verified(code: LinearCode, min_dim: usize) -> Option<QuadCode> {
        if code.dimension() < min_dim {
            return None;
        }
        if code.dimension() > 0 && code.min_weight().ok()? < 6 {
            return None;
        }
        QuadCode::try_new(code).ok()
    }

    /// A verified even code of the given length with all nonzero weights >= 6
    /// and dimension >= `min_dim`, from the known families (shortened to
    /// shrink, zero-padded to grow), or `None` when the families cannot reach
    /// that dimension.
    pub fn best_even_distance6(len: usize, min_dim: usize) -> Option<QuadCode> {
        if len == 0 || len > 64 {
            return None;
        }
        let bases = [
            punctured_simplex_12_4(),
            extended_bch_16_7(),
            extended_cyclic_18_9(),
        ];
        let mut best: Option<QuadCode> = None;
        for base in bases {
            let candidate = if len >= base.length() {
                pad_to(&base, len)
            } else {
                let mut code = base;
                while code.length() > len {
                    let last = code.length() - 1;
                    code = code.shorten(last).ok()?;
                }
                code
            };
            if let Some(code) = verified(candidate, min_dim) {
                if best.as_ref().is_none_or(|b| code.dimension() > b.dimension()) {
                    best = Some(code);
                }
            }
        }
        best
    }

    fn pad_to(code: &LinearCode, len: usize) -> LinearCode {
        let rows = code
            .generators()
            .rows()
            .map(|r| BitWord::from_bits(r.bits(), len).expect("padded row"))
            .collect::<Vec<_>>();
        LinearCode::from_generators(len, rows).expect("valid length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::code_from_cards;

    #[test]
    fn enumerate_single_quad_length4() {
        let codes = enumerate_quad_codes(4, 1).unwrap();
        assert_eq!(codes.len(), 1);
        assert_eq!(codes[0].generators().row(0).to_string(), "1111");
        assert!(enumerate_quad_codes(4, 2).unwrap().is_empty());
    }

    #[test]
    fn enumerate_length6_dim2_includes_three_quad_code() {
        let codes = enumerate_quad_codes(6, 2).unwrap();
        let target = LinearCode::from_strs(&["001111", "110011"]).unwrap();
        assert!(codes.iter().any(|c| c.as_linear() == &target));
    }

    #[test]
    fn enumerate_length7_dim3_all_have_seven_quads() {
        let codes = enumerate_quad_codes(7, 3).unwrap();
        assert!(!codes.is_empty());
        for code in &codes {
            assert_eq!(code.quad_count(), 7);
        }
    }

    #[test]
    fn enumeration_matches_bruteforce_subspace_counts() {
        // Independent oracle: build every small subspace directly from word
        // combinations and dedupe by canonical form.
        for len in 4..=8usize {
            let valid: Vec<u64> = (1..1u64 << len)
                .filter(|w| w.count_ones() % 2 == 0 && w.count_ones() >= 4)
                .collect();
            let dim1 = valid.len();
            assert_eq!(enumerate_quad_codes(len, 1).unwrap().len(), dim1, "len {len} dim 1");

            let mut dim2 = std::collections::HashSet::new();
            for (i, &a) in valid.iter().enumerate() {
                for &b in &valid[i + 1..] {
                    let c = a ^ b;
                    if c.count_ones() >= 4 && c.count_ones() % 2 == 0 {
                        let mut triple = [a, b, c];
                        triple.sort_unstable();
                        dim2.insert(triple);
                    }
                }
            }
            assert_eq!(
                enumerate_quad_codes(len, 2).unwrap().len(),
                dim2.len(),
                "len {len} dim 2"
            );
        }
    }

    #[test]
    fn d_table_matches_hand_rows() {
        let table = compute_d_table(7).unwrap();
        assert!(table.exact());
        assert_eq!(table.deck_size(6, 3), Some(8));
        assert_eq!(table.deck_size(6, 2), None);
        assert_eq!(table.deck_size(7, 4), None);
        assert_eq!(table.deck_size(7, 7), Some(8));
        assert_eq!(table.deck_size(5, 0), Some(16));
        assert_eq!(table.deck_size(1, 0), Some(1));
        assert_eq!(table.attainable_quads(7), vec![0, 1, 2, 3, 7]);
    }

    #[test]
    fn d_table_monotone_in_cards() {
        // If deck_size(cards, q) = 2^n then deck_size(cards+1, q) <= 2^(n+1).
        let table = compute_d_table(8).unwrap();
        for row in table.rows() {
            for (&q, entry) in &row.entries {
                if let Some(next) = table.deck_size(row.cards + 1, q) {
                    assert!(next <= entry.deck_size * 2, "cards {} quads {q}", row.cards);
                } else {
                    assert_eq!(row.cards, table.max_cards(), "cards {} quads {q}", row.cards);
                }
            }
        }
    }

    #[test]
    fn d_table_witnesses_realize_their_quad_counts() {
        let table = compute_d_table(7).unwrap();
        for row in table.rows() {
            for (&q, entry) in &row.entries {
                let n = entry.witness.min_realizing_dimension().unwrap();
                assert_eq!(1u64 << n, entry.deck_size);
                let cards = entry.witness.realize_cards(n).unwrap();
                assert_eq!(enumerate_quads(&cards).len() as u64, q);
                assert_eq!(&code_from_cards(&cards), &entry.witness);
            }
        }
    }

    #[test]
    fn max_quad_code_sizes_match_distance4_maxima() {
        // Largest 2^k over quad codes for lengths 4..=8: 2, 2, 4, 8, 16.
        let expected = [2u64, 2, 4, 8, 16];
        for (i, &want) in expected.iter().enumerate() {
            let len = i + 4;
            let mut max_dim = 0;
            for dim in 1..=max_quad_dimension(len) {
                if !enumerate_quad_codes(len, dim).unwrap().is_empty() {
                    max_dim = max_dim.max(dim);
                }
            }
            assert_eq!(1u64 << max_dim, want, "len {len}");
        }
    }

    #[test]
    fn b_small_lengths() {
        let expected = [1u64, 1, 1, 1, 1, 2, 2, 2, 4, 4];
        for (i, &want) in expected.iter().enumerate() {
            let out = compute_b(i + 1).unwrap();
            assert!(out.exact, "len {}", i + 1);
            assert_eq!(out.max_codewords, want, "len {}", i + 1);
        }
    }

    // Independent oracle for upper bounds: a [len, k, d] binary linear code
    // requires len >= sum_{i<k} ceil(d / 2^i).
    fn griesmer_allows(len: usize, k: usize, d: usize) -> bool {
        let sum: usize = (0..k).map(|i| d.div_ceil(1 << i)).sum();
        sum <= len
    }

    #[test]
    fn b_length11_is_eight() {
        // Witness: shortening of the punctured simplex code, frozen here and
        // verified from scratch.
        let witness =
            LinearCode::from_strs(&["01100110011", "10100101101", "01011010101"]).unwrap();
        assert_eq!(witness.dimension(), 3);
        assert_eq!(witness.min_weight().unwrap(), 6);
        // Dimension 4 is impossible at length 11 by the Griesmer bound.
        assert!(!griesmer_allows(11, 4, 6));
        let out = compute_b(11).unwrap();
        assert!(out.exact);
        assert_eq!(out.max_codewords, 8);
    }

    #[test]
    fn b_length12_is_sixteen() {
        let witness = constructions::punctured_simplex_12_4();
        assert_eq!(witness.dimension(), 4);
        assert_eq!(witness.min_weight().unwrap(), 6);
        assert!(!griesmer_allows(12, 5, 6));
        let out = compute_b(12).unwrap();
        assert!(out.exact);
        assert_eq!(out.max_codewords, 16);
    }

    #[test]
    fn constructions_verify() {
        let simplex = constructions::punctured_simplex_12_4();
        assert_eq!((simplex.length(), simplex.dimension()), (12, 4));
        assert_eq!(simplex.min_weight().unwrap(), 6);

        let bch = constructions::extended_bch_16_7();
        assert_eq!((bch.length(), bch.dimension()), (16, 7));
        assert_eq!(bch.min_weight().unwrap(), 6);

        let cyclic = constructions::extended_cyclic_18_9();
        assert_eq!((cyclic.length(), cyclic.dimension()), (18, 9));
        assert_eq!(cyclic.min_weight().unwrap(), 6);
    }

    #[test]
    fn f_small_decks() {
        let expected = [(1u32, 2usize), (2, 3), (3, 4), (4, 6), (5, 7), (6, 9)];
        for (n, want) in expected {
            let out = compute_f(n).unwrap();
            assert!(out.exact, "deck dimension {n}");
            assert_eq!(out.max_cards, want, "deck dimension {n}");
            assert_eq!(out.witness.len(), want);
            assert!(enumerate_quads(&out.witness).is_empty());
        }
    }

    #[test]
    fn noquads_witness_and_refusal() {
        let out = find_noquads_set(4, 5).unwrap();
        let witness = out.witness.unwrap();
        assert_eq!(witness.len(), 5);
        assert!(enumerate_quads(&witness).is_empty());

        let none = find_noquads_set(4, 7).unwrap();
        assert!(none.exact);
        assert!(none.witness.is_none());

        let tiny = find_noquads_set(3, 4).unwrap();
        assert!(enumerate_quads(&tiny.witness.unwrap()).is_empty());

        let over = find_noquads_set(6, 10).unwrap();
        assert!(over.exact);
        assert!(over.witness.is_none());
    }

    #[test]
    fn hamming_bound_examples() {
        assert_eq!(hamming_bound(2, 8, 5).unwrap(), BigUint::from(6u32));
        assert_eq!(hamming_bound(2, 10, 1).unwrap(), BigUint::from(1024u32));
        // For d = 5 at length len-1 the bound simplifies to
        // 2^len / (len^2 - len + 2).
        for len in 6u32..=20 {
            let simplified = BigUint::from(1u128 << len)
                / BigUint::from(u128::from(len) * u128::from(len) - u128::from(len) + 2);
            assert_eq!(hamming_bound(2, len - 1, 5).unwrap(), simplified, "len {len}");
        }
        assert!(hamming_bound(1, 4, 3).is_err());
        assert!(hamming_bound(2, 4, 0).is_err());
    }

    #[test]
    fn lazy_caterer_examples() {
        assert_eq!(
            lazy_caterer_bound(4).unwrap(),
            LazyCatererBound { min_deck_cards: 7, min_deck_dim: 3 }
        );
        assert_eq!(
            lazy_caterer_bound(9).unwrap(),
            LazyCatererBound { min_deck_cards: 37, min_deck_dim: 6 }
        );
        assert_eq!(
            lazy_caterer_bound(1).unwrap(),
            LazyCatererBound { min_deck_cards: 1, min_deck_dim: 0 }
        );
        let first: Vec<u64> =
            (1..=10).map(|l| lazy_caterer_bound(l).unwrap().min_deck_cards).collect();
        assert_eq!(first, vec![1, 2, 4, 7, 11, 16, 22, 29, 37, 46]);
    }

    #[test]
    fn probabilistic_threshold_examples() {
        assert_eq!(probabilistic_threshold(8).unwrap(), 10);
        assert_eq!(probabilistic_threshold(3).unwrap(), 4);
        assert_eq!(probabilistic_threshold(10).unwrap(), 14);
        assert!(probabilistic_threshold(1).is_err());
    }
}
