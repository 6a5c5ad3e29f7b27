//! The move group of the Varikon Box, handled through its regular action.
//!
//! The stabilizer of the solved state ι is trivial and the action is
//! transitive, so a group element `g` is determined by the configuration
//! `ι·g`. Elements carry that configuration (`canon`) plus a word realising
//! it; products concatenate words and equality compares canons.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::perm::{even_permutations, Perm};
use crate::report::{Check, Report};
use crate::varikon::{
    format_moves, parse_moves, random_word, Move, Rotation, VarikonConfig, Word, HOME_BLANK,
    REACHABLE,
};
use crate::word::invert_word;

/// Words for the three non-trivial central elements.
pub const CENTER_WORDS: [&str; 3] = [
    "(RU)2(RB)2UB(RB)2UBRB",
    "(RU)2RB(RU)2(BU)2RURB",
    "(RU)2BUBR(BU)2BR(BU)2",
];

#[derive(Clone)]
pub struct GroupElement {
    canon: VarikonConfig,
    witness: Word,
}

impl GroupElement {
    pub fn identity() -> GroupElement {
        GroupElement {
            canon: VarikonConfig::solved(),
            witness: Vec::new(),
        }
    }

    pub fn from_word(word: &[Move]) -> GroupElement {
        GroupElement {
            canon: VarikonConfig::solved().apply_word(word),
            witness: word.to_vec(),
        }
    }

    pub fn generator(m: Move) -> GroupElement {
        GroupElement::from_word(&[m])
    }

    pub fn canon(&self) -> VarikonConfig {
        self.canon
    }

    pub fn witness(&self) -> &[Move] {
        &self.witness
    }

    /// `self` followed by `other`.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        let mut witness = self.witness.clone();
        witness.extend_from_slice(&other.witness);
        GroupElement {
            canon: self.canon.apply_word(&other.witness),
            witness,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement::from_word(&invert_word(&self.witness))
    }

    pub fn is_identity(&self) -> bool {
        self.canon == VarikonConfig::solved()
    }

    pub fn order(&self) -> usize {
        let solved = VarikonConfig::solved();
        let mut c = self.canon;
        let mut k = 1;
        while c != solved {
            c = c.apply_word(&self.witness);
            k += 1;
        }
        k
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.canon.apply_word(&other.witness) == other.canon.apply_word(&self.witness)
    }

    /// Acts on an arbitrary configuration.
    pub fn act(&self, c: &VarikonConfig) -> VarikonConfig {
        c.apply_word(&self.witness)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &GroupElement) -> bool {
        self.canon == other.canon
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canon.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] via {}", self.canon, format_moves(&self.witness))
    }
}

/// God's algorithm output: BFS depth and last move of a shortest word for
/// every reachable configuration, indexed by rank.
pub struct DistanceTable {
    depth: Vec<u8>,
    parent_move: Vec<Option<Move>>,
}

impl DistanceTable {
    pub fn build() -> DistanceTable {
        let mut depth = vec![u8::MAX; REACHABLE];
        let mut parent_move = vec![None; REACHABLE];
        let start = VarikonConfig::solved();
        depth[start.rank()] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let d = depth[c.rank()];
            for m in Move::ALL {
                let n = c.apply_move(m);
                let r = n.rank();
                if depth[r] == u8::MAX {
                    depth[r] = d + 1;
                    parent_move[r] = Some(m);
                    queue.push_back(n);
                }
            }
        }
        DistanceTable { depth, parent_move }
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

    pub fn depth(&self, c: &VarikonConfig) -> usize {
        self.depth[c.rank()] as usize
    }

    pub fn depth_of_rank(&self, rank: usize) -> usize {
        self.depth[rank] as usize
    }

    pub fn parent_move(&self, c: &VarikonConfig) -> Option<Move> {
        self.parent_move[c.rank()]
    }

    pub fn all_finite(&self) -> bool {
        self.depth.iter().all(|&d| d != u8::MAX)
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0) as usize
    }

    /// Number of configurations at each depth, index = depth.
    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_depth() + 1];
        for &d in &self.depth {
            hist[d as usize] += 1;
        }
        hist
    }

    pub fn mean_depth(&self) -> f64 {
        self.depth.iter().map(|&d| d as f64).sum::<f64>() / self.len() as f64
    }

    /// A shortest word `w` with `ι·w = c`, recovered from parent moves.
    pub fn witness(&self, c: &VarikonConfig) -> Word {
        let mut word = Vec::with_capacity(self.depth(c));
        let mut cur = *c;
        while let Some(m) = self.parent_move(&cur) {
            word.push(m);
            cur = cur.apply_move(m);
        }
        word.reverse();
        word
    }

    pub fn element(&self, c: &VarikonConfig) -> GroupElement {
        GroupElement {
            canon: *c,
            witness: self.witness(c),
        }
    }

    pub fn element_of_rank(&self, rank: usize) -> GroupElement {
        self.element(&VarikonConfig::unrank(rank))
    }

    /// Every element, ordered by rank.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.len()).map(|r| self.element_of_rank(r))
    }

    /// Depths of neighbouring configurations differ by exactly one.
    pub fn adjacent_depths_consistent(&self) -> bool {
        (0..self.len()).all(|r| {
            let c = VarikonConfig::unrank(r);
            let d = self.depth[r] as i32;
            Move::ALL
                .iter()
                .all(|&m| (self.depth(&c.apply_move(m)) as i32 - d).abs() == 1)
        })
    }
}

/// The full group with its distance table; all structural checks hang off
/// this.
pub struct VarikonGroup {
    table: DistanceTable,
}

impl Default for VarikonGroup {
    fn default() -> Self {
        Self::new()
    }
}

impl VarikonGroup {
    pub fn new() -> VarikonGroup {
        VarikonGroup {
            table: DistanceTable::build(),
        }
    }

    pub fn table(&self) -> &DistanceTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn generators() -> Vec<GroupElement> {
        Move::ALL
            .iter()
            .map(|&m| GroupElement::generator(m))
            .collect()
    }

    /// Elements commuting with `R`, `U` and `B` (enough, since they
    /// generate the group).
    pub fn center(&self) -> Vec<GroupElement> {
        let gens = VarikonGroup::generators();
        self.table
            .elements()
            .filter(|z| gens.iter().all(|x| z.commutes_with(x)))
            .collect()
    }

    /// `ker φ`: the elements that return the blank to its home cell.
    pub fn kernel(&self) -> Vec<GroupElement> {
        self.table
            .elements()
            .filter(|k| k.canon().blank_cell() == HOME_BLANK)
            .collect()
    }

    /// Four 3-cycles that generate the kernel: the three alternating pairs
    /// plus one conjugate reaching the corner opposite the blank.
    pub fn kernel_generators() -> Vec<GroupElement> {
        ["RBRB", "RURU", "UBUB", "URBRBU"]
            .iter()
            .map(|w| GroupElement::from_word(&parse_moves(w).unwrap()))
            .collect()
    }

    pub fn verify_center(&self) -> Report {
        let mut report = Report::new("center");
        let center = self.center();
        report.push(Check::equal("|Z|", 4, center.len()));
        report.push(Check::holds(
            "identity is central",
            center.iter().any(GroupElement::is_identity),
        ));
        report.push(Check::holds(
            "non-trivial central elements have order 2",
            center
                .iter()
                .filter(|z| !z.is_identity())
                .all(|z| z.order() == 2 && z.multiply(z).is_identity()),
        ));
        report.push(Check::holds(
            "Z is closed under multiplication",
            center
                .iter()
                .all(|a| center.iter().all(|b| center.contains(&a.multiply(b)))),
        ));
        report
    }

    /// Checks the explicit central words against the computed center and the
    /// half-turn images of ι.
    pub fn verify_center_words(&self) -> Report {
        let mut report = Report::new("center words");
        let center: HashSet<GroupElement> = self.center().into_iter().collect();
        let solved = VarikonConfig::solved();
        let gens = VarikonGroup::generators();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let sample: Vec<GroupElement> = (0..100)
            .map(|_| GroupElement::from_word(&random_word(&mut rng, 24)))
            .collect();

        let mut from_words: HashSet<GroupElement> = HashSet::from([GroupElement::identity()]);
        for (i, text) in CENTER_WORDS.iter().enumerate() {
            let z = GroupElement::from_word(&parse_moves(text).unwrap());
            let tag = format!("word {}", i + 1);
            report.push(Check::holds(
                format!("{tag} commutes with R, U, B"),
                gens.iter().all(|x| z.commutes_with(x)),
            ));
            report.push(Check::holds(
                format!("{tag} lies in computed Z"),
                center.contains(&z),
            ));
            report.push(Check::equal(format!("{tag} order"), 2, z.order()));
            report.push(Check::holds(
                format!("{tag} commutes with 100 random words"),
                sample.iter().all(|g| z.commutes_with(g)),
            ));
            report.push(Check::info(format!("{tag} length"), z.witness().len()));
            report.push(Check::info(
                format!("{tag} shortest length"),
                self.table.depth(&z.canon()),
            ));
            from_words.insert(z);
        }
        report.push(Check::holds(
            "words with identity exhaust Z",
            from_words == center,
        ));

        let images: HashSet<VarikonConfig> = center.iter().map(GroupElement::canon).collect();
        let rotations: HashSet<VarikonConfig> = std::iter::once(solved)
            .chain(
                Move::ALL
                    .iter()
                    .map(|&m| solved.rotate(&Rotation::half_turn(m))),
            )
            .collect();
        report.push(Check::holds(
            "images of ι are ι and its three half-turns",
            images == rotations,
        ));
        let mut listed: Vec<String> = images.iter().map(ToString::to_string).collect();
        listed.sort();
        report.push(Check::info("center images", listed));
        report
    }

    pub fn verify_kernel(&self) -> Report {
        let mut report = Report::new("kernel");
        let kernel = self.kernel();
        report.push(Check::equal("|K|", 2520, kernel.len()));
        report.push(Check::holds(
            "φ vanishes on K",
            kernel
                .iter()
                .all(|k| crate::varikon::phi(k.witness()).is_zero()),
        ));
        let perms: HashSet<Perm> = kernel
            .iter()
            .filter_map(|k| k.canon().piece_permutation())
            .collect();
        report.push(Check::holds(
            "every k has an even piece permutation",
            perms.iter().all(|p| p.parity().is_even()),
        ));
        let brute: HashSet<Perm> = even_permutations(7).into_iter().collect();
        report.push(Check::holds(
            "piece permutations of K = A7 (brute force)",
            perms == brute,
        ));
        let rbrb = GroupElement::from_word(&parse_moves("RBRB").unwrap());
        report.push(Check::holds("RBRB ∈ K", kernel.contains(&rbrb)));
        let normal = kernel.iter().step_by(7).all(|k| {
            Move::ALL.iter().all(|&m| {
                let x = GroupElement::generator(m);
                x.multiply(k).multiply(&x.inverse()).canon().blank_cell() == HOME_BLANK
            })
        });
        report.push(Check::holds("x·k·x⁻¹ ∈ K for sampled k", normal));
        let closure = closure_orbit(&VarikonGroup::kernel_generators());
        report.push(Check::equal(
            "kernel generators span K",
            2520,
            closure.len(),
        ));
        report
    }

    /// The direct-product decomposition `G = K⟨R⟩ × Z` and `K⟨R⟩ ≅ S₇`.
    pub fn verify_structure(&self) -> Report {
        let mut report = Report::new("structure");
        let kernel = self.kernel();
        let center = self.center();
        let kernel_set: HashSet<VarikonConfig> = kernel.iter().map(GroupElement::canon).collect();
        let center_set: HashSet<VarikonConfig> = center.iter().map(GroupElement::canon).collect();
        let solved = VarikonConfig::solved();
        let r_group = [solved, solved.apply_move(Move::R)];

        let k_meet_r = r_group.iter().filter(|c| kernel_set.contains(c)).count();
        report.push(Check::equal("|K ∩ ⟨R⟩|", 1, k_meet_r));

        let kr: Vec<VarikonConfig> = kernel
            .iter()
            .flat_map(|k| [k.canon(), k.canon().apply_move(Move::R)])
            .collect();
        let kr_set: HashSet<VarikonConfig> = kr.iter().copied().collect();
        report.push(Check::equal("|K⟨R⟩|", 5040, kr_set.len()));

        let kr_meet_z = center_set.intersection(&kr_set).count();
        report.push(Check::equal("|K⟨R⟩ ∩ Z|", 1, kr_meet_z));

        let product_order = kr_set.len() * center.len() / kr_meet_z.max(1);
        report.push(Check::equal(
            "|K⟨R⟩|·|Z| / |K⟨R⟩ ∩ Z|",
            20160,
            product_order,
        ));
        let product_set: HashSet<VarikonConfig> = kr_set
            .iter()
            .flat_map(|y| center.iter().map(move |z| y.apply_word(z.witness())))
            .collect();
        report.push(Check::equal(
            "|K⟨R⟩·Z| by enumeration",
            self.order(),
            product_set.len(),
        ));
        report.push(Check::equal("|G|", 20160, self.order()));

        let mut kr_gens = VarikonGroup::kernel_generators();
        kr_gens.push(GroupElement::generator(Move::R));
        let kr_center = kr_set
            .iter()
            .map(|c| self.table.element(c))
            .filter(|y| kr_gens.iter().all(|x| y.commutes_with(x)))
            .count();
        report.push(Check::equal("|center of K⟨R⟩|", 1, kr_center));

        report.push(Check::equal("|Z|", 4, center.len()));
        report.push(Check::holds(
            "Z ≅ (Z2)^2: every non-trivial element has order 2",
            center
                .iter()
                .filter(|z| !z.is_identity())
                .all(|z| z.order() == 2),
        ));
        let conclusion = report.pass();
        report.push(Check::holds("G ≅ S7 × (Z2)^2", conclusion));
        report
    }
}

/// Orbit of ι under the subgroup generated by `gens`; its size is the
/// subgroup order because the action is regular.
pub fn closure_orbit(gens: &[GroupElement]) -> HashSet<VarikonConfig> {
    let start = VarikonConfig::solved();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for g in gens {
            let n = g.act(&c);
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen
}

#[derive(Clone, Debug, Serialize)]
pub struct HistogramRow {
    pub depth: usize,
    pub count: usize,
}

pub fn histogram_rows(table: &DistanceTable) -> Vec<HistogramRow> {
    table
        .histogram()
        .into_iter()
        .enumerate()
        .map(|(depth, count)| HistogramRow { depth, count })
        .collect()
}

pub fn histogram_csv(table: &DistanceTable) -> String {
    let mut out = String::from("depth,count\n");
    for row in histogram_rows(table) {
        out.push_str(&format!("{},{}\n", row.depth, row.count));
    }
    out
}
