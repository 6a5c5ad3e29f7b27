//! The 4×4 15-Puzzle with wrap-around moves.
//!
//! `R` slides the piece left of the blank into it; with the blank in the
//! leftmost column the whole row shifts one column left and the blank lands
//! in the rightmost column. `U` slides the piece below the blank up; with the
//! blank in the bottom row the whole column shifts one row down and the blank
//! lands in the top row. Both moves have order 4.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{ConfigError, WordError};
use crate::perm::{Parity, Perm};
use crate::word::{invert_word, parse_word, MoveLetter};

pub const SIDE: usize = 4;
pub const CELLS: usize = SIDE * SIDE;
/// Internal symbol for the blank; pieces `1..=15` are stored as `0..=14`.
pub const BLANK: u8 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FifteenMove {
    R,
    U,
}

impl fmt::Display for FifteenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FifteenMove::R => "R",
            FifteenMove::U => "U",
        })
    }
}

impl MoveLetter for FifteenMove {
    fn from_char(c: char) -> Option<FifteenMove> {
        match c {
            'R' => Some(FifteenMove::R),
            'U' => Some(FifteenMove::U),
            _ => None,
        }
    }

    fn inverse(self) -> Vec<FifteenMove> {
        vec![self; 3]
    }
}

pub type FifteenWord = Vec<FifteenMove>;

pub fn parse_fifteen_word(text: &str) -> Result<FifteenWord, WordError> {
    parse_word(text)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FifteenConfig {
    cells: [u8; CELLS],
}

impl FifteenConfig {
    pub fn solved() -> FifteenConfig {
        let mut cells = [0u8; CELLS];
        for (i, c) in cells.iter_mut().enumerate() {
            *c = i as u8;
        }
        FifteenConfig { cells }
    }

    /// Cells hold `0..=14` for pieces `1..=15` and [`BLANK`].
    pub fn from_cells(cells: [u8; CELLS]) -> Result<FifteenConfig, ConfigError> {
        let mut seen = [false; CELLS];
        for &c in &cells {
            let slot = seen
                .get_mut(c as usize)
                .ok_or_else(|| ConfigError::BadToken(c.to_string()))?;
            if std::mem::replace(slot, true) {
                return Err(ConfigError::DuplicatePiece(label_text(c)));
            }
        }
        Ok(FifteenConfig { cells })
    }

    /// The configuration reached from the solved state by permuting pieces:
    /// cell `i` receives the label `p(i)` (blank is point 16).
    pub fn from_perm(p: &Perm) -> FifteenConfig {
        assert_eq!(p.degree(), CELLS);
        let mut cells = [0u8; CELLS];
        for (i, c) in cells.iter_mut().enumerate() {
            *c = p.apply(i) as u8;
        }
        FifteenConfig { cells }
    }

    pub fn cells(&self) -> &[u8; CELLS] {
        &self.cells
    }

    pub fn blank_cell(&self) -> usize {
        self.cells.iter().position(|&c| c == BLANK).unwrap()
    }

    /// `(row, col)` of the blank.
    pub fn blank_position(&self) -> (usize, usize) {
        let b = self.blank_cell();
        (b / SIDE, b % SIDE)
    }

    pub fn apply_move(&self, m: FifteenMove) -> FifteenConfig {
        let (row, col) = self.blank_position();
        let mut cells = self.cells;
        match m {
            FifteenMove::R if col > 0 => cells.swap(row * SIDE + col, row * SIDE + col - 1),
            FifteenMove::R => {
                let start = row * SIDE;
                cells[start..start + SIDE].rotate_left(1);
            }
            FifteenMove::U if row < SIDE - 1 => {
                cells.swap(row * SIDE + col, (row + 1) * SIDE + col)
            }
            FifteenMove::U => {
                let mut column: Vec<u8> = (0..SIDE).map(|r| cells[r * SIDE + col]).collect();
                column.rotate_right(1);
                for (r, v) in column.into_iter().enumerate() {
                    cells[r * SIDE + col] = v;
                }
            }
        }
        FifteenConfig { cells }
    }

    pub fn apply_word(&self, word: &[FifteenMove]) -> FifteenConfig {
        word.iter().fold(*self, |c, &m| c.apply_move(m))
    }

    /// Cell `i` holds label `p(i)`, blank counted as point 16.
    pub fn permutation(&self) -> Perm {
        let images: Vec<usize> = self.cells.iter().map(|&c| c as usize).collect();
        Perm::from_images(&images).expect("configuration is a bijection")
    }

    /// Taxicab distance from the blank to the bottom-right corner.
    pub fn blank_distance(&self) -> usize {
        let (row, col) = self.blank_position();
        (SIDE - 1 - row) + (SIDE - 1 - col)
    }

    /// Reachable exactly when the 16-point permutation parity matches the
    /// parity of the blank's distance from its home corner.
    pub fn is_solvable(&self) -> bool {
        self.permutation().parity() == Parity::from_count(self.blank_distance())
    }

    pub fn rows(&self) -> Vec<Vec<String>> {
        self.cells
            .chunks(SIDE)
            .map(|r| r.iter().map(|&c| label_text(c)).collect())
            .collect()
    }
}

fn label_text(c: u8) -> String {
    if c == BLANK {
        "_".to_string()
    } else {
        (c + 1).to_string()
    }
}

impl fmt::Display for FifteenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.cells.iter().map(|&c| label_text(c)).collect();
        f.write_str(&tokens.join(","))
    }
}

impl fmt::Debug for FifteenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FifteenConfig({self})")
    }
}

impl FromStr for FifteenConfig {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<FifteenConfig, ConfigError> {
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
                    Ok(v) if (1..=15).contains(&v) => v - 1,
                    _ => return Err(ConfigError::BadToken(t.to_string())),
                },
            };
        }
        FifteenConfig::from_cells(cells)
    }
}

/// The set-up sequence `U³R`.
pub fn setup_word() -> FifteenWord {
    parse_fifteen_word("U3R").unwrap()
}

/// The corner 3-cycle `RU³R³U`, which realises `(11,12,15)` from the solved
/// state.
pub fn corner_cycle_word() -> FifteenWord {
    parse_fifteen_word("RU3R3U").unwrap()
}

/// The blank tour repeated `n` times inside the set-up conjugation:
/// `(U³R)(U³R³U³R³UR³URUR²U³)ⁿ(U³R)⁻¹`, with inverses written out as cubes.
pub fn sigma_word(n: usize) -> FifteenWord {
    let setup = setup_word();
    let tour = parse_fifteen_word("U3R3U3R3UR3URUR2U3").unwrap();
    let mut word = setup.clone();
    for _ in 0..n {
        word.extend_from_slice(&tour);
    }
    word.extend(invert_word(&setup));
    word
}

/// `σₙ (RU³R³U) σₙ⁻¹`.
pub fn conjugated_cycle_word(n: usize) -> FifteenWord {
    let sigma = sigma_word(n);
    let mut word = sigma.clone();
    word.extend(corner_cycle_word());
    word.extend(invert_word(&sigma));
    word
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleFamilyRow {
    pub n: usize,
    pub permutation: String,
    /// The third point `i` of `(11,12,i)`, 1-indexed; `None` if the result is
    /// not of that shape.
    pub third_point: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleFamilyReport {
    pub rows: Vec<CycleFamilyRow>,
    pub all_three_cycles: bool,
    pub distinct: bool,
    pub covers_all: bool,
}

impl CycleFamilyReport {
    pub fn pass(&self) -> bool {
        self.all_three_cycles && self.distinct && self.covers_all
    }
}

/// Returns `i` when `p` is exactly the 3-cycle `(11,12,i)`.
fn corner_third_point(p: &Perm) -> Option<usize> {
    let cycles = p.cycles();
    if cycles.len() != 1 || cycles[0].len() != 3 {
        return None;
    }
    // 0-indexed 10 -> 11 -> i -> 10
    let i = p.apply(11);
    (p.apply(10) == 11 && p.apply(i) == 10).then_some(i + 1)
}

/// Applies `σₙ (RU³R³U) σₙ⁻¹` to the solved state for `n = 0..=12` and checks
/// that the results are the 13 distinct 3-cycles `(11,12,i)`, `i ∉ {11,12}`.
pub fn verify_three_cycle_family() -> CycleFamilyReport {
    let solved = FifteenConfig::solved();
    let rows: Vec<CycleFamilyRow> = (0..=12)
        .map(|n| {
            let p = solved.apply_word(&conjugated_cycle_word(n)).permutation();
            CycleFamilyRow {
                n,
                permutation: p.to_string(),
                third_point: corner_third_point(&p),
            }
        })
        .collect();
    let points: Vec<usize> = rows.iter().filter_map(|r| r.third_point).collect();
    let unique: BTreeSet<usize> = points.iter().copied().collect();
    let expected: BTreeSet<usize> = (1..=15).filter(|&i| i != 11 && i != 12).collect();
    CycleFamilyReport {
        all_three_cycles: points.len() == rows.len(),
        distinct: unique.len() == points.len(),
        covers_all: unique == expected,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> FifteenConfig {
        s.parse().unwrap()
    }

    fn word(s: &str) -> FifteenWord {
        parse_fifteen_word(s).unwrap()
    }

    #[test]
    fn r_move_cycles_through_four_configs() {
        let iota = FifteenConfig::solved();
        let one = iota.apply_move(FifteenMove::R);
        assert_eq!(one, cfg("1,2,3,4,5,6,7,8,9,10,11,12,13,14,_,15"));
        let two = one.apply_move(FifteenMove::R);
        assert_eq!(two, cfg("1,2,3,4,5,6,7,8,9,10,11,12,13,_,14,15"));
        let three = two.apply_move(FifteenMove::R);
        assert_eq!(three, cfg("1,2,3,4,5,6,7,8,9,10,11,12,_,13,14,15"));
        assert_eq!(three.apply_move(FifteenMove::R), iota);
    }

    #[test]
    fn corner_cycle_and_setup_words() {
        let iota = FifteenConfig::solved();
        assert_eq!(
            iota.apply_word(&word("RU3R3U")),
            cfg("1,2,3,4,5,6,7,8,9,10,12,15,13,14,11,_")
        );
        assert_eq!(
            iota.apply_word(&word("U3R")),
            cfg("1,2,3,4,5,6,7,8,9,10,_,11,13,14,15,12")
        );
        assert_eq!(
            iota.apply_word(&word("RU3R3U")).permutation(),
            Perm::parse_cycles("(11,12,15)", 16).unwrap()
        );
    }

    #[test]
    fn solvability() {
        assert!(FifteenConfig::solved().is_solvable());
        assert!(!cfg("1,2,3,4,5,6,7,8,9,10,11,12,13,15,14,_").is_solvable());
        assert!(FifteenConfig::solved()
            .apply_move(FifteenMove::R)
            .is_solvable());
        assert!(FifteenConfig::solved()
            .apply_move(FifteenMove::U)
            .is_solvable());
    }

    #[test]
    fn sigma_zero_is_identity_on_solved() {
        let iota = FifteenConfig::solved();
        assert_eq!(iota.apply_word(&sigma_word(0)), iota);
        assert_eq!(sigma_word(0).len(), 4 + 12);
    }

    #[test]
    fn cycle_family_examples() {
        let report = verify_three_cycle_family();
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.rows[0].permutation, "(11,12,15)");
        assert_eq!(report.rows[1].third_point, Some(7));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "1,2".parse::<FifteenConfig>(),
            Err(ConfigError::WrongLength { .. })
        ));
        assert!(matches!(
            "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16".parse::<FifteenConfig>(),
            Err(ConfigError::BadToken(_))
        ));
        assert!(matches!(
            "1,1,3,4,5,6,7,8,9,10,11,12,13,14,15,_".parse::<FifteenConfig>(),
            Err(ConfigError::DuplicatePiece(_))
        ));
        assert!(parse_fifteen_word("RX").is_err());
    }

    #[test]
    fn display_round_trip() {
        let c = FifteenConfig::solved().apply_word(&word("U3RUR"));
        assert_eq!(c.to_string().parse::<FifteenConfig>().unwrap(), c);
    }
}
