//! State model of the 2×2×2 Varikon Box.
//!
//! Cell `i` sits at coordinates `(x, y, z)` with `i = x + 2y + 4z`. Each move
//! swaps the blank with its neighbour along one axis, toggling one bit of the
//! blank's cell index: `R` toggles `x`, `B` toggles `y` and `U` toggles `z`.
//! Every move is total and an involution. In the solved state piece `k` sits
//! in cell `k - 1` and the blank in cell 7.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::error::{ConfigError, WordError};
use crate::lehmer::{parity_rank, parity_unrank};
use crate::perm::{Parity, Perm};
use crate::word::{format_word, invert_word, parse_word, MoveLetter};

pub const CELLS: usize = 8;
pub const PIECES: usize = 7;
/// Internal symbol for the blank; pieces `1..=7` are stored as `0..=6`.
pub const BLANK: u8 = 7;
pub const HOME_BLANK: usize = 7;
/// Even (or odd) permutations of the seven pieces.
pub const HALF_PIECE_PERMS: usize = 2520;
pub const REACHABLE: usize = CELLS * HALF_PIECE_PERMS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Move {
    R,
    U,
    B,
}

impl Move {
    pub const ALL: [Move; 3] = [Move::R, Move::U, Move::B];

    /// The cell-index bit this move toggles.
    pub fn axis_bit(self) -> u8 {
        match self {
            Move::R => 1,
            Move::B => 2,
            Move::U => 4,
        }
    }

    pub fn from_axis_bit(bit: u8) -> Move {
        match bit {
            1 => Move::R,
            2 => Move::B,
            4 => Move::U,
            _ => panic!("not an axis bit: {bit}"),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::R => "R",
            Move::U => "U",
            Move::B => "B",
        })
    }
}

impl MoveLetter for Move {
    fn from_char(c: char) -> Option<Move> {
        match c {
            'R' => Some(Move::R),
            'U' => Some(Move::U),
            'B' => Some(Move::B),
            _ => None,
        }
    }

    fn inverse(self) -> Vec<Move> {
        vec![self]
    }
}

pub type Word = Vec<Move>;

pub fn parse_moves(text: &str) -> Result<Word, WordError> {
    parse_word(text)
}

pub fn format_moves(word: &[Move]) -> String {
    format_word(word)
}

/// Letter counts of a word modulo 2, in `(R, U, B)` order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ParityVector {
    pub r: u8,
    pub u: u8,
    pub b: u8,
}

impl ParityVector {
    pub fn of_word(word: &[Move]) -> ParityVector {
        word.iter().fold(ParityVector::default(), |acc, &m| {
            acc + ParityVector::of_move(m)
        })
    }

    pub fn of_move(m: Move) -> ParityVector {
        match m {
            Move::R => ParityVector { r: 1, u: 0, b: 0 },
            Move::U => ParityVector { r: 0, u: 1, b: 0 },
            Move::B => ParityVector { r: 0, u: 0, b: 1 },
        }
    }

    /// The coordinate displacement between two cells.
    pub fn between_cells(from: usize, to: usize) -> ParityVector {
        let d = (from ^ to) as u8;
        ParityVector {
            r: u8::from(d & Move::R.axis_bit() != 0),
            u: u8::from(d & Move::U.axis_bit() != 0),
            b: u8::from(d & Move::B.axis_bit() != 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == ParityVector::default()
    }
}

impl Add for ParityVector {
    type Output = ParityVector;

    fn add(self, rhs: ParityVector) -> ParityVector {
        ParityVector {
            r: self.r ^ rhs.r,
            u: self.u ^ rhs.u,
            b: self.b ^ rhs.b,
        }
    }
}

impl fmt::Display for ParityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.u, self.b)
    }
}

/// The homomorphism from words to `(Z₂)³`.
pub fn phi(word: &[Move]) -> ParityVector {
    ParityVector::of_word(word)
}

pub fn phi_text(text: &str) -> Result<ParityVector, WordError> {
    Ok(phi(&parse_moves(text)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarikonConfig {
    cells: [u8; CELLS],
    blank: u8,
}

impl VarikonConfig {
    pub fn solved() -> VarikonConfig {
        VarikonConfig {
            cells: [0, 1, 2, 3, 4, 5, 6, BLANK],
            blank: HOME_BLANK as u8,
        }
    }

    /// Cells hold `0..=6` for pieces `1..=7` and [`BLANK`].
    pub fn from_cells(cells: [u8; CELLS]) -> Result<VarikonConfig, ConfigError> {
        let mut seen = [false; CELLS];
        for &c in &cells {
            let slot = seen
                .get_mut(c as usize)
                .ok_or_else(|| ConfigError::BadToken(c.to_string()))?;
            if std::mem::replace(slot, true) {
                return Err(ConfigError::DuplicatePiece(label_text(c)));
            }
        }
        let blank = cells.iter().position(|&c| c == BLANK).unwrap() as u8;
        Ok(VarikonConfig { cells, blank })
    }

    /// Cell `i` receives label `p(i)`; the blank is point 8.
    pub fn from_perm(p: &Perm) -> VarikonConfig {
        assert_eq!(p.degree(), CELLS);
        let mut cells = [0u8; CELLS];
        for (i, c) in cells.iter_mut().enumerate() {
            *c = p.apply(i) as u8;
        }
        VarikonConfig::from_cells(cells).unwrap()
    }

    pub fn cells(&self) -> &[u8; CELLS] {
        &self.cells
    }

    pub fn blank_cell(&self) -> usize {
        self.blank as usize
    }

    /// The cell holding piece `label` (1-indexed).
    pub fn cell_of(&self, label: u8) -> usize {
        self.cells.iter().position(|&c| c == label - 1).unwrap()
    }

    #[inline]
    pub fn apply_move(&self, m: Move) -> VarikonConfig {
        let b = self.blank as usize;
        let n = b ^ m.axis_bit() as usize;
        let mut cells = self.cells;
        cells.swap(b, n);
        VarikonConfig {
            cells,
            blank: n as u8,
        }
    }

    pub fn apply_word(&self, word: &[Move]) -> VarikonConfig {
        word.iter().fold(*self, |c, &m| c.apply_move(m))
    }

    /// 8-point permutation relative to the solved state: cell `i` holds
    /// label `p(i)`, the blank counted as point 8.
    pub fn permutation(&self) -> Perm {
        let images: Vec<usize> = self.cells.iter().map(|&c| c as usize).collect();
        Perm::from_images(&images).unwrap()
    }

    /// 7-point piece permutation; only meaningful with the blank at home.
    pub fn piece_permutation(&self) -> Option<Perm> {
        (self.blank as usize == HOME_BLANK).then(|| {
            let images: Vec<usize> = self.cells[..PIECES].iter().map(|&c| c as usize).collect();
            Perm::from_images(&images).unwrap()
        })
    }

    pub fn blank_distance(&self) -> usize {
        (self.blank as usize ^ HOME_BLANK).count_ones() as usize
    }

    /// Reachable exactly when the 8-point permutation parity equals the
    /// parity of the blank's Hamming distance from cell 7.
    pub fn is_reachable(&self) -> bool {
        self.permutation().parity() == Parity::from_count(self.blank_distance())
    }

    fn pieces_in_cell_order(&self) -> [u8; PIECES] {
        let mut seq = [0u8; PIECES];
        let mut k = 0;
        for &c in &self.cells {
            if c != BLANK {
                seq[k] = c;
                k += 1;
            }
        }
        seq
    }

    /// Parity that the cell-order piece sequence must have for a reachable
    /// configuration with the blank in `blank`.
    fn piece_sequence_parity(blank: usize) -> Parity {
        // Moving the blank (largest symbol) from the end to `blank` costs
        // `7 - blank` adjacent swaps.
        let hamming = (blank ^ HOME_BLANK).count_ones() as usize;
        Parity::from_count(hamming) ^ Parity::from_count(CELLS - 1 - blank)
    }

    /// Perfect hash of a reachable configuration into `0..20160`:
    /// `blank × 2520 + parity-class Lehmer index of the pieces`.
    pub fn rank(&self) -> usize {
        debug_assert!(self.is_reachable(), "rank of unreachable {self}");
        self.blank as usize * HALF_PIECE_PERMS + parity_rank(&self.pieces_in_cell_order())
    }

    pub fn unrank(rank: usize) -> VarikonConfig {
        assert!(rank < REACHABLE, "rank {rank} out of range");
        let blank = rank / HALF_PIECE_PERMS;
        let seq = parity_unrank(
            PIECES,
            rank % HALF_PIECE_PERMS,
            VarikonConfig::piece_sequence_parity(blank),
        );
        let mut cells = [BLANK; CELLS];
        let mut k = 0;
        for (i, cell) in cells.iter_mut().enumerate() {
            if i != blank {
                *cell = seq[k];
                k += 1;
            }
        }
        VarikonConfig {
            cells,
            blank: blank as u8,
        }
    }

    /// Carries every cell's content along `rotation`.
    pub fn rotate(&self, rotation: &Rotation) -> VarikonConfig {
        let mut cells = [0u8; CELLS];
        for (p, &c) in self.cells.iter().enumerate() {
            cells[rotation.cell(p)] = c;
        }
        VarikonConfig::from_cells(cells).unwrap()
    }

    /// Renames pieces through `relabel` (indexed by internal label, blank
    /// fixed).
    pub fn relabel(&self, relabel: &[u8; CELLS]) -> VarikonConfig {
        let mut cells = self.cells;
        for c in cells.iter_mut() {
            *c = relabel[*c as usize];
        }
        VarikonConfig::from_cells(cells).unwrap()
    }
}

fn label_text(c: u8) -> String {
    if c == BLANK {
        "_".to_string()
    } else {
        (c + 1).to_string()
    }
}

impl fmt::Display for VarikonConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.cells.iter().map(|&c| label_text(c)).collect();
        f.write_str(&tokens.join(","))
    }
}

impl fmt::Debug for VarikonConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarikonConfig({self})")
    }
}

impl FromStr for VarikonConfig {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<VarikonConfig, ConfigError> {
        let tokens: Vec<&str> = s.trim().split(',').map(str::trim).collect();
        if tokens.len() != CELLS {
            return Err(ConfigError::WrongLength {
                expected: CELLS,
                found: tokens.len(),
            });
        }
        let mut cells = [0u8; CELLS];
        for (slot, token) in cells.iter_mut().zip(&tokens) {
            *slot = match *token {
                "_" => BLANK,
                t => match t.parse::<u8>() {
                    Ok(v) if (1..=7).contains(&v) => v - 1,
                    _ => return Err(ConfigError::BadToken(t.to_string())),
                },
            };
        }
        VarikonConfig::from_cells(cells)
    }
}

/// A rotation of the box: `cell ↦ P·cell ⊕ flip`, where `P` permutes the
/// three coordinate bits. Only the 24 orientation-preserving ones exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    /// `axis_perm[i]` is the bit index that coordinate bit `i` moves to.
    axis_perm: [u8; 3],
    flip: u8,
    cells: [u8; CELLS],
}

impl Rotation {
    fn new(axis_perm: [u8; 3], flip: u8) -> Rotation {
        let mut cells = [0u8; CELLS];
        for (v, cell) in cells.iter_mut().enumerate() {
            let mut out = 0u8;
            for (i, &target) in axis_perm.iter().enumerate() {
                if v >> i & 1 == 1 {
                    out |= 1 << target;
                }
            }
            *cell = out ^ flip;
        }
        Rotation {
            axis_perm,
            flip,
            cells,
        }
    }

    pub fn identity() -> Rotation {
        Rotation::new([0, 1, 2], 0)
    }

    /// All 24 rotations, identity first.
    pub fn all() -> Vec<Rotation> {
        let perms: [[u8; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out = Vec::with_capacity(24);
        for perm in perms {
            let perm_odd = matches!(perm, [0, 2, 1] | [1, 0, 2] | [2, 1, 0]);
            for flip in 0..8u8 {
                let flips_odd = flip.count_ones() % 2 == 1;
                // det = sign(perm) * (-1)^{#flips}
                if perm_odd == flips_odd {
                    out.push(Rotation::new(perm, flip));
                }
            }
        }
        out
    }

    /// The half-turn about the axis of `m`: flips the other two coordinates.
    pub fn half_turn(m: Move) -> Rotation {
        Rotation::new([0, 1, 2], 7 ^ m.axis_bit())
    }

    pub fn cell(&self, p: usize) -> usize {
        self.cells[p] as usize
    }

    pub fn inverse(&self) -> Rotation {
        let mut inv_perm = [0u8; 3];
        for (i, &t) in self.axis_perm.iter().enumerate() {
            inv_perm[t as usize] = i as u8;
        }
        // v = P⁻¹(w ⊕ flip) = P⁻¹w ⊕ P⁻¹flip
        let probe = Rotation::new(inv_perm, 0);
        Rotation::new(inv_perm, probe.cells[self.flip as usize])
    }

    /// The move along the image of `m`'s axis.
    pub fn map_move(&self, m: Move) -> Move {
        let bit = m.axis_bit().trailing_zeros() as usize;
        Move::from_axis_bit(1 << self.axis_perm[bit])
    }

    pub fn map_word(&self, word: &[Move]) -> Word {
        word.iter().map(|&m| self.map_move(m)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Rotation::identity()
    }

    pub fn cell_map(&self) -> [u8; CELLS] {
        self.cells
    }
}

/// Every reachable configuration, in breadth-first order from the solved
/// state.
pub fn enumerate_reachable() -> Vec<VarikonConfig> {
    let mut seen = vec![false; REACHABLE];
    let start = VarikonConfig::solved();
    seen[start.rank()] = true;
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for m in Move::ALL {
            let next = c.apply_move(m);
            let r = next.rank();
            if !seen[r] {
                seen[r] = true;
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    order
}

/// All configurations satisfying the parity predicate, by brute force over
/// the 8! arrangements.
pub fn parity_predicted() -> Vec<VarikonConfig> {
    crate::perm::all_permutations(CELLS)
        .iter()
        .map(VarikonConfig::from_perm)
        .filter(VarikonConfig::is_reachable)
        .collect()
}

/// Uniform sampler over reachable configurations.
pub struct ReachableSampler {
    rng: ChaCha8Rng,
}

impl ReachableSampler {
    pub fn new(seed: u64) -> ReachableSampler {
        ReachableSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> VarikonConfig {
        let blank = self.rng.gen_range(0..CELLS);
        let index = self.rng.gen_range(0..HALF_PIECE_PERMS);
        VarikonConfig::unrank(blank * HALF_PIECE_PERMS + index)
    }
}

pub fn random_reachable(seed: u64) -> VarikonConfig {
    ReachableSampler::new(seed).sample()
}

/// Uniform random move word of length `len`.
pub fn random_word(rng: &mut impl Rng, len: usize) -> Word {
    (0..len).map(|_| Move::ALL[rng.gen_range(0..3)]).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeCycleAtom {
    pub first: Move,
    pub second: Move,
    pub word: String,
    /// Piece permutation of `ι·XYXY`, 1-indexed cycle notation on 7 points.
    pub cycle: String,
    #[serde(skip)]
    pub perm: Perm,
}

#[derive(Clone, Debug, Serialize)]
pub struct AtomReport {
    pub atoms: Vec<ThreeCycleAtom>,
    pub all_three_cycles: bool,
    pub reversal_inverts: bool,
    pub matches_named_cycles: bool,
}

impl AtomReport {
    pub fn pass(&self) -> bool {
        self.all_three_cycles && self.reversal_inverts && self.matches_named_cycles
    }

    pub fn atom(&self, first: Move, second: Move) -> Option<&ThreeCycleAtom> {
        self.atoms
            .iter()
            .find(|a| a.first == first && a.second == second)
    }
}

pub fn atom_word(first: Move, second: Move) -> Word {
    vec![first, second, first, second]
}

/// The 3-cycles obtained by alternating two letters four times from the
/// solved state.
pub fn three_cycle_atoms() -> AtomReport {
    let solved = VarikonConfig::solved();
    let mut atoms = Vec::new();
    for x in Move::ALL {
        for y in Move::ALL {
            if x == y {
                continue;
            }
            let word = atom_word(x, y);
            let c = solved.apply_word(&word);
            let perm = c
                .piece_permutation()
                .unwrap_or_else(|| Perm::identity(PIECES));
            atoms.push(ThreeCycleAtom {
                first: x,
                second: y,
                word: format_moves(&word),
                cycle: perm.to_string(),
                perm,
            });
        }
    }
    let all_three_cycles = atoms.iter().all(|a| a.perm.cycle_type() == [3]);
    let reversal_inverts = atoms.iter().all(|a| {
        atoms
            .iter()
            .find(|b| b.first == a.second && b.second == a.first)
            .is_some_and(|b| b.perm == a.perm.inverse())
    });
    let named: HashSet<Vec<usize>> = ["(3,4,7)", "(2,4,6)", "(5,6,7)"]
        .iter()
        .map(|t| {
            let mut s = Perm::parse_cycles(t, PIECES).unwrap().support();
            s.sort();
            s
        })
        .collect();
    let supports: HashSet<Vec<usize>> = atoms.iter().map(|a| a.perm.support()).collect();
    let canonical_ok = atoms.iter().all(|a| {
        let named_cycle = match a.perm.support().as_slice() {
            [2, 3, 6] => "(3,4,7)",
            [1, 3, 5] => "(2,4,6)",
            [4, 5, 6] => "(5,6,7)",
            _ => return false,
        };
        let p = Perm::parse_cycles(named_cycle, PIECES).unwrap();
        a.perm == p || a.perm == p.inverse()
    });
    AtomReport {
        atoms,
        all_three_cycles,
        reversal_inverts,
        matches_named_cycles: supports == named && canonical_ok,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("letters of a dihedral pair must differ")]
pub struct SameLetterError;

#[derive(Clone, Debug, Serialize)]
pub struct DihedralReport {
    pub pair: String,
    pub involution: bool,
    pub product_order_six: bool,
    pub reflection_relation: bool,
    pub order: usize,
}

impl DihedralReport {
    pub fn pass(&self) -> bool {
        self.involution && self.product_order_six && self.reflection_relation && self.order == 12
    }
}

/// Checks `X² = e`, `(XY)⁶ = e` and `(XY)·X = X·(XY)⁻¹` as maps on every
/// configuration in `states`, and measures `|⟨X, Y⟩|` as the orbit of the
/// solved state (the action is regular).
pub fn dihedral_check(
    x: Move,
    y: Move,
    states: &[VarikonConfig],
) -> Result<DihedralReport, SameLetterError> {
    if x == y {
        return Err(SameLetterError);
    }
    let xy = vec![x, y];
    let six: Word = xy.iter().copied().cycle().take(12).collect();
    let lhs: Word = vec![x, y, x];
    let mut rhs = vec![x];
    rhs.extend(invert_word(&xy));
    let involution = states.iter().all(|c| c.apply_word(&[x, x]) == *c);
    let product_order_six = states.iter().all(|c| c.apply_word(&six) == *c);
    let reflection_relation = states
        .iter()
        .all(|c| c.apply_word(&lhs) == c.apply_word(&rhs));

    let start = VarikonConfig::solved();
    let mut orbit = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for m in [x, y] {
            let n = c.apply_move(m);
            if orbit.insert(n) {
                queue.push_back(n);
            }
        }
    }
    Ok(DihedralReport {
        pair: format!("{x}{y}"),
        involution,
        product_order_six,
        reflection_relation,
        order: orbit.len(),
    })
}
