//! Solvers: optimal descent through the distance table, and the 3-cycle
//! heuristic (set up piece 1 opposite the blank, then spell the remaining
//! even permutation of six pieces as a shortest word in three 3-cycles).
//!
//! Every returned [`Solution`] has been replayed against its start state.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ConfigError, SolveError};
use crate::group::DistanceTable;
use crate::perm::Perm;
use crate::varikon::{
    atom_word, format_moves, three_cycle_atoms, Move, Rotation, VarikonConfig, Word, CELLS,
    HOME_BLANK, REACHABLE,
};
use crate::words::{a5_generators, a6_generators, Letter, WordTable};

/// Which solved states count as finished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetMode {
    /// Only ι.
    Strict,
    /// ι or one of its three half-turn images (the orbit of ι under the
    /// center).
    Center,
}

impl TargetMode {
    pub fn rotations(self) -> Vec<Rotation> {
        match self {
            TargetMode::Strict => vec![Rotation::identity()],
            TargetMode::Center => std::iter::once(Rotation::identity())
                .chain(Move::ALL.iter().map(|&m| Rotation::half_turn(m)))
                .collect(),
        }
    }

    pub fn targets(self) -> Vec<VarikonConfig> {
        let solved = VarikonConfig::solved();
        self.rotations().iter().map(|r| solved.rotate(r)).collect()
    }
}

impl FromStr for TargetMode {
    type Err = String;

    fn from_str(s: &str) -> Result<TargetMode, String> {
        match s {
            "strict" => Ok(TargetMode::Strict),
            "center" => Ok(TargetMode::Center),
            _ => Err(format!(
                "unknown target mode {s:?} (expected strict|center)"
            )),
        }
    }
}

/// How the heuristic picks among setups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetupPolicy {
    /// The globally shortest setup; ties broken by the word phase.
    Shortest,
    /// For every target orientation take its shortest setups, then keep the
    /// combination with the fewest total moves.
    BestOrientation,
}

impl FromStr for SetupPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<SetupPolicy, String> {
        match s {
            "shortest" => Ok(SetupPolicy::Shortest),
            "best-orientation" => Ok(SetupPolicy::BestOrientation),
            _ => Err(format!(
                "unknown setup policy {s:?} (expected shortest|best-orientation)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Optimal,
    HeuristicA6,
    HeuristicA5,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Method, String> {
        match s {
            "optimal" => Ok(Method::Optimal),
            "a6" | "heuristic-a6" => Ok(Method::HeuristicA6),
            "a5" | "heuristic-a5" => Ok(Method::HeuristicA5),
            _ => Err(format!("unknown method {s:?} (expected optimal|a6|a5)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhaseKind {
    Setup,
    /// Places the sixth relabelled piece before the A5 word (A5 path only).
    PieceSix,
    WordExpansion,
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Phase {
    pub kind: PhaseKind,
    #[serde(serialize_with = "serialize_word")]
    pub moves: Word,
    /// Abstract 3-cycle letters behind a word phase, e.g. `(1,2,3)^-1`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub letters: Vec<String>,
}

fn serialize_word<S: serde::Serializer>(word: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_moves(word))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub method: Method,
    #[serde(serialize_with = "serialize_display")]
    pub start: VarikonConfig,
    #[serde(serialize_with = "serialize_display")]
    pub target: VarikonConfig,
    #[serde(serialize_with = "serialize_word")]
    pub moves: Word,
    pub length: usize,
    pub phases: Vec<Phase>,
}

fn serialize_display<S: serde::Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Solution {
    fn assemble(
        method: Method,
        start: VarikonConfig,
        target: VarikonConfig,
        phases: Vec<Phase>,
    ) -> Result<Solution, SolveError> {
        let phases: Vec<Phase> = phases.into_iter().filter(|p| !p.moves.is_empty()).collect();
        let moves: Word = phases
            .iter()
            .flat_map(|p| p.moves.iter().copied())
            .collect();
        if start.apply_word(&moves) != target {
            return Err(SolveError::VerificationFailed {
                start: start.to_string(),
                moves: format_moves(&moves),
            });
        }
        Ok(Solution {
            method,
            start,
            target,
            length: moves.len(),
            moves,
            phases,
        })
    }

    pub fn phase_len(&self, kind: PhaseKind) -> usize {
        self.phases
            .iter()
            .filter(|p| p.kind == kind)
            .map(|p| p.moves.len())
            .sum()
    }

    pub fn setup_len(&self) -> usize {
        self.phase_len(PhaseKind::Setup)
    }

    /// Moves spent expanding abstract 3-cycles (piece-six step included).
    pub fn word_phase_len(&self) -> usize {
        self.phase_len(PhaseKind::PieceSix) + self.phase_len(PhaseKind::WordExpansion)
    }

    pub fn verify(&self) -> bool {
        self.start.apply_word(&self.moves) == self.target
    }
}

/// Bijection between physical pieces 2..7 and abstract points 1..6 under
/// which the three physical 3-cycles become `(1,2,3)`, `(3,4,5)`, `(5,6,1)`
/// up to inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    /// Indexed by internal piece label (`1..=6` for pieces 2..7); entry is
    /// the abstract point, 0-indexed.
    to_abstract: [u8; 7],
    /// Abstract point (0-indexed) to internal piece label.
    to_physical: [u8; 6],
    /// Ordered letter pair whose alternation realises each abstract letter,
    /// indexed `2·generator + inverse`.
    letter_moves: [(Move, Move); 6],
}

impl Relabel {
    /// Searches assignments of physical pieces to abstract points 1..6 in
    /// lexicographic order and returns the first that carries every
    /// physical 3-cycle onto a distinct abstract generator or its inverse.
    pub fn search() -> Result<Relabel, SolveError> {
        Relabel::all_valid()
            .into_iter()
            .next()
            .ok_or(SolveError::NoRelabel)
    }

    /// Every valid relabelling, in search order.
    pub fn all_valid() -> Vec<Relabel> {
        let atoms = three_cycle_atoms();
        let abstract_gens = a6_generators();
        let mut out = Vec::new();
        for assignment in itertools::Itertools::permutations(1u8..=6, 6) {
            let mut to_physical = [0u8; 6];
            to_physical.copy_from_slice(&assignment);
            let mut to_abstract = [u8::MAX; 7];
            for (a, &p) in to_physical.iter().enumerate() {
                to_abstract[p as usize] = a as u8;
            }
            let mut letter_moves = [(Move::R, Move::R); 6];
            let mut filled = [false; 6];
            let mut ok = true;
            for atom in &atoms.atoms {
                let image = conjugate_to_abstract(&atom.perm, &to_abstract);
                let hit = abstract_gens.iter().enumerate().find_map(|(j, g)| {
                    if image == *g {
                        Some(2 * j)
                    } else if image == g.inverse() {
                        Some(2 * j + 1)
                    } else {
                        None
                    }
                });
                match hit {
                    Some(slot) if !filled[slot] => {
                        filled[slot] = true;
                        letter_moves[slot] = (atom.first, atom.second);
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && filled.iter().all(|&f| f) {
                out.push(Relabel {
                    to_abstract,
                    to_physical,
                    letter_moves,
                });
            }
        }
        out
    }

    /// Physical piece number (2..=7) of abstract point `a` (1..=6).
    pub fn physical_piece(&self, a: usize) -> usize {
        self.to_physical[a - 1] as usize + 1
    }

    /// Abstract point (1..=6) of physical piece `p` (2..=7).
    pub fn abstract_point(&self, p: usize) -> usize {
        self.to_abstract[p - 1] as usize + 1
    }

    /// The four moves realising an abstract letter.
    pub fn letter_word(&self, letter: Letter) -> Word {
        let (x, y) = self.letter_moves[2 * letter.generator + usize::from(letter.inverse)];
        atom_word(x, y)
    }

    /// Abstract residual of a configuration with the blank in cell 7 and
    /// piece 1 in cell 0: abstract position `f(q)` holds `f(label at q)`.
    pub fn residual(&self, c: &VarikonConfig) -> Perm {
        debug_assert_eq!(c.blank_cell(), HOME_BLANK);
        debug_assert_eq!(c.cells()[0], 0);
        let mut images = vec![0usize; 6];
        for q in 1..7 {
            images[self.to_abstract[q] as usize] = self.to_abstract[c.cells()[q] as usize] as usize;
        }
        Perm::from_images(&images).expect("residual is a bijection")
    }

    pub fn mapping(&self) -> Vec<(usize, usize)> {
        (2..=7).map(|p| (p, self.abstract_point(p))).collect()
    }
}

/// `f ∘ π ∘ f⁻¹` for a 7-point piece permutation fixing piece 1.
fn conjugate_to_abstract(piece_perm: &Perm, to_abstract: &[u8; 7]) -> Perm {
    let mut images = vec![0usize; 6];
    for q in 1..7 {
        let a = to_abstract[q] as usize;
        images[a] = to_abstract[piece_perm.apply(q)] as usize;
    }
    Perm::from_images(&images).expect("relabelled 3-cycle")
}

/// Result of the setup phase: the moves, the target orientation they aim
/// at, and the abstract residual left for the word phase.
#[derive(Clone, Debug)]
pub struct Setup {
    pub moves: Word,
    pub rotation: Rotation,
    /// `(c·moves)` carried back so the blank sits in cell 7 and piece 1 in
    /// cell 0.
    pub normalized: VarikonConfig,
    pub residual: Perm,
}

/// Shortest distances in the (blank cell, piece-1 cell) quotient, towards
/// one target orientation.
struct SetupMap {
    rotation: Rotation,
    dist: [[u8; CELLS]; CELLS],
}

impl SetupMap {
    fn new(rotation: Rotation) -> SetupMap {
        let mut dist = [[u8::MAX; CELLS]; CELLS];
        let goal = (rotation.cell(HOME_BLANK), rotation.cell(0));
        dist[goal.0][goal.1] = 0;
        let mut queue = VecDeque::from([goal]);
        while let Some((b, p)) = queue.pop_front() {
            let d = dist[b][p];
            for m in Move::ALL {
                let nb = b ^ m.axis_bit() as usize;
                let np = if nb == p { b } else { p };
                if dist[nb][np] == u8::MAX {
                    dist[nb][np] = d + 1;
                    queue.push_back((nb, np));
                }
            }
        }
        SetupMap { rotation, dist }
    }

    fn distance(&self, c: &VarikonConfig) -> usize {
        self.dist[c.blank_cell()][c.cell_of(1)] as usize
    }

    /// All shortest setup words, in lexicographic order of `R < U < B`.
    fn shortest_words(&self, c: &VarikonConfig) -> Vec<Word> {
        let mut out = Vec::new();
        let mut word = Vec::new();
        self.descend(c, &mut word, &mut out);
        out
    }

    fn descend(&self, c: &VarikonConfig, word: &mut Word, out: &mut Vec<Word>) {
        let d = self.distance(c);
        if d == 0 {
            out.push(word.clone());
            return;
        }
        for m in Move::ALL {
            let n = c.apply_move(m);
            if self.distance(&n) + 1 == d {
                word.push(m);
                self.descend(&n, word, out);
                word.pop();
            }
        }
    }
}

/// Abstract-word plan for one setup candidate.
struct Plan {
    setup: Setup,
    piece_six: Vec<Letter>,
    word: Vec<Letter>,
}

impl Plan {
    fn total(&self) -> usize {
        self.setup.moves.len() + 4 * (self.piece_six.len() + self.word.len())
    }
}

pub struct Solver {
    table: DistanceTable,
    a6: WordTable,
    a5: WordTable,
    relabel: Relabel,
    mode: TargetMode,
    policy: SetupPolicy,
    setup_maps: Vec<SetupMap>,
}

impl Solver {
    pub fn new(mode: TargetMode, policy: SetupPolicy) -> Result<Solver, SolveError> {
        Ok(Solver {
            table: DistanceTable::build(),
            a6: WordTable::build(&a6_generators()),
            a5: WordTable::build(&a5_generators()),
            relabel: Relabel::search()?,
            mode,
            policy,
            setup_maps: mode.rotations().into_iter().map(SetupMap::new).collect(),
        })
    }

    pub fn mode(&self) -> TargetMode {
        self.mode
    }

    pub fn policy(&self) -> SetupPolicy {
        self.policy
    }

    pub fn table(&self) -> &DistanceTable {
        &self.table
    }

    pub fn relabel(&self) -> &Relabel {
        &self.relabel
    }

    pub fn a6_table(&self) -> &WordTable {
        &self.a6
    }

    pub fn a5_table(&self) -> &WordTable {
        &self.a5
    }

    /// Longest shortest setup over every (blank, piece 1) placement.
    pub fn setup_bound(&self) -> usize {
        self.setup_bound_where(|_, _| true)
    }

    /// Longest shortest setup over placements with piece 1 next to the blank.
    pub fn setup_bound_adjacent(&self) -> usize {
        self.setup_bound_where(|b, p| (b ^ p).count_ones() == 1)
    }

    fn setup_bound_where(&self, keep: impl Fn(usize, usize) -> bool) -> usize {
        (0..CELLS)
            .flat_map(|b| (0..CELLS).map(move |p| (b, p)))
            .filter(|&(b, p)| b != p && keep(b, p))
            .map(|(b, p)| {
                self.setup_maps
                    .iter()
                    .map(|m| m.dist[b][p] as usize)
                    .min()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    fn check_reachable(c: &VarikonConfig) -> Result<(), SolveError> {
        if c.is_reachable() {
            Ok(())
        } else {
            Err(ConfigError::Unreachable.into())
        }
    }

    /// Shortest move word to ι by descending the distance table.
    pub fn solve_optimal(&self, c: &VarikonConfig) -> Result<Solution, SolveError> {
        Solver::check_reachable(c)?;
        let mut moves = Vec::new();
        let mut cur = *c;
        while self.table.depth(&cur) > 0 {
            let d = self.table.depth(&cur);
            let m = Move::ALL
                .into_iter()
                .find(|&m| self.table.depth(&cur.apply_move(m)) + 1 == d)
                .expect("a neighbour one step closer exists");
            moves.push(m);
            cur = cur.apply_move(m);
        }
        Solution::assemble(
            Method::Optimal,
            *c,
            VarikonConfig::solved(),
            vec![Phase {
                kind: PhaseKind::Optimal,
                moves,
                letters: Vec::new(),
            }],
        )
    }

    fn setup_candidates(&self, c: &VarikonConfig) -> Vec<Setup> {
        let mut out = Vec::new();
        for map in &self.setup_maps {
            let inverse = map.rotation.inverse();
            for moves in map.shortest_words(c) {
                let normalized = c.apply_word(&moves).rotate(&inverse);
                let residual = self.relabel.residual(&normalized);
                out.push(Setup {
                    moves,
                    rotation: map.rotation,
                    normalized,
                    residual,
                });
            }
        }
        out
    }

    /// The shortest setup over all allowed target orientations; ties go to
    /// the smaller A6 residual, then orientation order, then word order.
    pub fn setup_phase(&self, c: &VarikonConfig) -> Result<Setup, SolveError> {
        Solver::check_reachable(c)?;
        self.setup_candidates(c)
            .into_iter()
            .enumerate()
            .min_by_key(|(i, s)| {
                (
                    s.moves.len(),
                    self.a6.length(&s.residual).unwrap_or(usize::MAX),
                    *i,
                )
            })
            .map(|(_, s)| s)
            .ok_or(SolveError::SetupNotFound(usize::MAX))
    }

    fn a6_plan(&self, setup: Setup) -> Result<Plan, SolveError> {
        let entry = self
            .a6
            .get(&setup.residual)
            .ok_or_else(|| SolveError::MissingWord(setup.residual.to_string()))?;
        Ok(Plan {
            word: entry.word.clone(),
            piece_six: Vec::new(),
            setup,
        })
    }

    /// Up to two abstract letters that bring point 6 home, then the A5 word
    /// for what is left; the pair minimising the letter count wins.
    fn a5_plan(&self, setup: Setup) -> Result<Plan, SolveError> {
        let letters: Vec<Letter> = (0..3)
            .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
            .collect();
        let mut prefixes: Vec<Vec<Letter>> = vec![Vec::new()];
        prefixes.extend(letters.iter().map(|&l| vec![l]));
        for &a in &letters {
            for &b in &letters {
                prefixes.push(vec![a, b]);
            }
        }
        let mut best: Option<(usize, Vec<Letter>, Vec<Letter>)> = None;
        for prefix in prefixes {
            // Applying letter ℓ turns residual ρ into g_ℓ·ρ.
            let after = prefix.iter().fold(setup.residual.clone(), |acc, &l| {
                self.a6.letter_perm(l).then(&acc)
            });
            if after.apply(5) != 5 {
                continue;
            }
            let restricted = Perm::from_images(&after.images()[..5]).expect("fixes point 6");
            let Some(entry) = self.a5.get(&restricted) else {
                continue;
            };
            let cost = prefix.len() + entry.length;
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, prefix, entry.word.clone()));
            }
        }
        let (_, piece_six, word) =
            best.ok_or_else(|| SolveError::MissingWord(setup.residual.to_string()))?;
        Ok(Plan {
            setup,
            piece_six,
            word,
        })
    }

    fn best_plan(
        &self,
        c: &VarikonConfig,
        plan: impl Fn(&Solver, Setup) -> Result<Plan, SolveError>,
    ) -> Result<Plan, SolveError> {
        Solver::check_reachable(c)?;
        match self.policy {
            SetupPolicy::Shortest => {
                let shortest = self.setup_candidates(c).iter().map(|s| s.moves.len()).min();
                let mut best: Option<Plan> = None;
                for s in self.setup_candidates(c) {
                    if Some(s.moves.len()) != shortest {
                        continue;
                    }
                    let p = plan(self, s)?;
                    if best.as_ref().is_none_or(|b| p.total() < b.total()) {
                        best = Some(p);
                    }
                }
                best.ok_or(SolveError::SetupNotFound(usize::MAX))
            }
            SetupPolicy::BestOrientation => {
                let mut best: Option<Plan> = None;
                for s in self.setup_candidates(c) {
                    let p = plan(self, s)?;
                    let better = best.as_ref().is_none_or(|b| {
                        (p.total(), p.setup.moves.len()) < (b.total(), b.setup.moves.len())
                    });
                    if better {
                        best = Some(p);
                    }
                }
                best.ok_or(SolveError::SetupNotFound(usize::MAX))
            }
        }
    }

    /// Expands a plan into physical moves in the original frame.
    fn realise(
        &self,
        method: Method,
        start: &VarikonConfig,
        plan: Plan,
    ) -> Result<Solution, SolveError> {
        let rotation = plan.setup.rotation;
        let expand = |letters: &[Letter]| -> (Word, Vec<String>) {
            // ρ = g_ℓ1·…·g_ℓk is undone by applying ℓ1⁻¹, …, ℓk⁻¹ in order.
            let physical: Word = letters
                .iter()
                .flat_map(|&l| self.relabel.letter_word(l.inverted()))
                .collect();
            let names = letters
                .iter()
                .map(|&l| physical_letter_name(&self.a6, l.inverted()))
                .collect();
            (rotation.map_word(&physical), names)
        };
        let piece_six_moves: Word = plan
            .piece_six
            .iter()
            .flat_map(|&l| self.relabel.letter_word(l))
            .collect();
        let piece_six_names = plan
            .piece_six
            .iter()
            .map(|&l| physical_letter_name(&self.a6, l))
            .collect();
        let (word_moves, word_names) = expand(&plan.word);
        let target = VarikonConfig::solved().rotate(&rotation);
        Solution::assemble(
            method,
            *start,
            target,
            vec![
                Phase {
                    kind: PhaseKind::Setup,
                    moves: plan.setup.moves,
                    letters: Vec::new(),
                },
                Phase {
                    kind: PhaseKind::PieceSix,
                    moves: rotation.map_word(&piece_six_moves),
                    letters: piece_six_names,
                },
                Phase {
                    kind: PhaseKind::WordExpansion,
                    moves: word_moves,
                    letters: word_names,
                },
            ],
        )
    }

    pub fn solve_heuristic_a6(&self, c: &VarikonConfig) -> Result<Solution, SolveError> {
        let plan = self.best_plan(c, Solver::a6_plan)?;
        self.realise(Method::HeuristicA6, c, plan)
    }

    pub fn solve_heuristic_a5(&self, c: &VarikonConfig) -> Result<Solution, SolveError> {
        let plan = self.best_plan(c, Solver::a5_plan)?;
        self.realise(Method::HeuristicA5, c, plan)
    }

    pub fn solve(&self, c: &VarikonConfig, method: Method) -> Result<Solution, SolveError> {
        match method {
            Method::Optimal => self.solve_optimal(c),
            Method::HeuristicA6 => self.solve_heuristic_a6(c),
            Method::HeuristicA5 => self.solve_heuristic_a5(c),
        }
    }

    /// Optimal move count from `c` to `target`, one of the allowed targets.
    ///
    /// Rotating the whole box is an automorphism of the move graph, so the
    /// distance to a rotated ι is a depth in the ι-rooted table.
    pub fn distance_to(&self, c: &VarikonConfig, target: &VarikonConfig) -> usize {
        let solved = VarikonConfig::solved();
        let rotation = self
            .setup_maps
            .iter()
            .map(|m| m.rotation)
            .find(|r| solved.rotate(r) == *target)
            .expect("target is one of the mode's targets");
        self.table.depth(&c.rotate(&rotation.inverse()))
    }

    /// Runs all three solvers on every reachable configuration.
    pub fn compare_all(&self) -> Result<Comparison, SolveError> {
        let rows: Vec<ComparisonRow> = (0..REACHABLE)
            .into_par_iter()
            .map(|rank| {
                let c = VarikonConfig::unrank(rank);
                let optimal = self.solve_optimal(&c)?;
                let a6 = self.solve_heuristic_a6(&c)?;
                let a5 = self.solve_heuristic_a5(&c)?;
                Ok(ComparisonRow {
                    a6_target_optimal: self.distance_to(&c, &a6.target),
                    rank,
                    config: c.to_string(),
                    optimal: optimal.length,
                    a6: a6.length,
                    a6_setup: a6.setup_len(),
                    a5: a5.length,
                    a5_setup: a5.setup_len(),
                    verified: optimal.verify() && a6.verify() && a5.verify(),
                })
            })
            .collect::<Result<_, SolveError>>()?;
        Ok(Comparison {
            mode: self.mode,
            policy: self.policy,
            rows,
        })
    }
}

fn physical_letter_name(table: &WordTable, l: Letter) -> String {
    table.format_letter(l)
}

#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct ComparisonRow {
    pub rank: usize,
    pub config: String,
    pub optimal: usize,
    pub a6: usize,
    pub a6_setup: usize,
    /// Optimal length to the target the A6 heuristic reached.
    pub a6_target_optimal: usize,
    pub a5: usize,
    pub a5_setup: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MethodStats {
    pub max: usize,
    pub mean: f64,
    pub histogram: Vec<usize>,
}

impl MethodStats {
    fn from_lengths(lengths: impl Iterator<Item = usize> + Clone) -> MethodStats {
        let max = lengths.clone().max().unwrap_or(0);
        let mut histogram = vec![0; max + 1];
        let mut total = 0usize;
        let mut count = 0usize;
        for l in lengths {
            histogram[l] += 1;
            total += l;
            count += 1;
        }
        MethodStats {
            max,
            mean: total as f64 / count.max(1) as f64,
            histogram,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonSummary {
    pub mode: TargetMode,
    pub policy: SetupPolicy,
    pub configs: usize,
    pub all_verified: bool,
    pub optimal: MethodStats,
    pub a6: MethodStats,
    pub a5: MethodStats,
    pub a6_setup_max: usize,
    pub max_gap_a6: usize,
    pub mean_gap_a6: f64,
    pub worst_a6: Vec<String>,
}

pub struct Comparison {
    pub mode: TargetMode,
    pub policy: SetupPolicy,
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    pub fn summary(&self) -> ComparisonSummary {
        let a6 = MethodStats::from_lengths(self.rows.iter().map(|r| r.a6));
        let gaps = self
            .rows
            .iter()
            .map(|r| r.a6 - r.a6_target_optimal.min(r.a6));
        ComparisonSummary {
            mode: self.mode,
            policy: self.policy,
            configs: self.rows.len(),
            all_verified: self.rows.iter().all(|r| r.verified),
            optimal: MethodStats::from_lengths(self.rows.iter().map(|r| r.optimal)),
            a5: MethodStats::from_lengths(self.rows.iter().map(|r| r.a5)),
            a6_setup_max: self.rows.iter().map(|r| r.a6_setup).max().unwrap_or(0),
            max_gap_a6: gaps.clone().max().unwrap_or(0),
            mean_gap_a6: gaps.sum::<usize>() as f64 / self.rows.len().max(1) as f64,
            worst_a6: self
                .rows
                .iter()
                .filter(|r| r.a6 == a6.max)
                .map(|r| r.config.clone())
                .collect(),
            a6,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            writer.serialize(row).expect("in-memory CSV write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn strict() -> &'static Solver {
        static S: OnceLock<Solver> = OnceLock::new();
        S.get_or_init(|| Solver::new(TargetMode::Strict, SetupPolicy::Shortest).unwrap())
    }

    fn cfg(s: &str) -> VarikonConfig {
        s.parse().unwrap()
    }

    #[test]
    fn relabel_maps_cycles_onto_generators() {
        let r = Relabel::search().unwrap();
        let gens = a6_generators();
        let atoms = three_cycle_atoms();
        for atom in &atoms.atoms {
            let image = conjugate_to_abstract(&atom.perm, &r.to_abstract);
            assert!(gens.iter().any(|g| *g == image || g.inverse() == image));
        }
        for p in 2..=7 {
            assert_eq!(r.physical_piece(r.abstract_point(p)), p);
        }
        assert!(!Relabel::all_valid().is_empty());
    }

    #[test]
    fn optimal_examples() {
        let s = strict();
        assert!(s
            .solve_optimal(&VarikonConfig::solved())
            .unwrap()
            .moves
            .is_empty());
        let c = VarikonConfig::solved().apply_word(&crate::varikon::parse_moves("RBRB").unwrap());
        let sol = s.solve_optimal(&c).unwrap();
        assert!(sol.length <= 4);
        assert!(sol.verify());
        assert!(matches!(
            s.solve_optimal(&cfg("1,2,3,4,5,7,6,_")),
            Err(SolveError::Config(ConfigError::Unreachable))
        ));
    }

    #[test]
    fn solved_needs_nothing() {
        let s = strict();
        let iota = VarikonConfig::solved();
        assert_eq!(s.solve_heuristic_a6(&iota).unwrap().length, 0);
        assert_eq!(s.solve_heuristic_a5(&iota).unwrap().length, 0);
        let setup = s.setup_phase(&iota).unwrap();
        assert!(setup.moves.is_empty());
        assert!(setup.residual.is_identity());
    }

    #[test]
    fn piece_one_adjacent_to_blank() {
        let s = strict();
        let center = Solver::new(TargetMode::Center, SetupPolicy::Shortest).unwrap();
        // piece 1 in cell 6, next to the blank in cell 7
        let c = cfg("7,2,3,4,6,5,1,_");
        assert!(c.is_reachable());
        let setup = center.setup_phase(&c).unwrap();
        assert_eq!(setup.normalized.cells()[0], 0);
        assert_eq!(setup.normalized.blank_cell(), HOME_BLANK);
        assert!(setup.residual.parity().is_even());
        assert!(s.setup_phase(&c).is_ok());
    }

    #[test]
    fn word_phase_is_multiple_of_four() {
        let s = strict();
        let mut sampler = crate::varikon::ReachableSampler::new(3);
        for _ in 0..200 {
            let c = sampler.sample();
            let a6 = s.solve_heuristic_a6(&c).unwrap();
            let a5 = s.solve_heuristic_a5(&c).unwrap();
            assert_eq!(a6.word_phase_len() % 4, 0);
            assert_eq!(a5.word_phase_len() % 4, 0);
            assert!(a6.verify() && a5.verify());
            assert!(a6.length >= s.solve_optimal(&c).unwrap().length);
        }
    }
}
