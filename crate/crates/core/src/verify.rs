//! Runs every named claim the library can check and gathers the results.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::fifteen::{parse_fifteen_word, verify_three_cycle_family, FifteenConfig};
use crate::group::VarikonGroup;
use crate::report::{Check, Report};
use crate::solver::{SetupPolicy, Solver, TargetMode};
use crate::varikon::{
    dihedral_check, enumerate_reachable, parity_predicted, phi, random_word, three_cycle_atoms,
    Move, ParityVector, VarikonConfig, REACHABLE,
};
use crate::words::{a5_report, a6_report, WordTable};

pub const FIFTEEN_UNSOLVABLE: &str = "1,2,3,4,5,6,7,8,9,10,11,12,13,15,14,_";
pub const A6_WORST_CASE: &str = "1,5,2,4,3,6,7,_";
pub const A5_WORST_CASE: &str = "1,3,2,4,5,7,6,_";

pub fn enumeration_report(group: &VarikonGroup) -> Report {
    let mut report = Report::new("enumeration");
    let reachable = enumerate_reachable();
    let set: HashSet<VarikonConfig> = reachable.iter().copied().collect();
    let predicted: HashSet<VarikonConfig> = parity_predicted().into_iter().collect();
    report.push(Check::equal(
        "reachable configurations",
        REACHABLE,
        set.len(),
    ));
    report.push(Check::holds(
        "reachable set = parity prediction",
        set == predicted,
    ));
    let table = group.table();
    report.push(Check::holds(
        "every state has a finite depth",
        table.all_finite(),
    ));
    report.push(Check::equal("God's number", 19, table.max_depth()));
    report.push(Check::equal(
        "histogram total",
        REACHABLE,
        table.histogram().iter().sum::<usize>(),
    ));
    report.push(Check::holds(
        "neighbouring depths differ by one",
        table.adjacent_depths_consistent(),
    ));
    report.push(Check::info("depth histogram", table.histogram()));
    report.push(Check::info("mean depth", table.mean_depth()));
    report
}

pub fn dihedral_report() -> Report {
    let mut report = Report::new("dihedral subgroups");
    let states = enumerate_reachable();
    for (x, y) in [(Move::R, Move::U), (Move::R, Move::B), (Move::U, Move::B)] {
        let d = dihedral_check(x, y, &states).expect("distinct letters");
        report.push(Check::equal(format!("|⟨{x},{y}⟩|"), 12, d.order));
        report.push(Check::holds(format!("{x}² = e"), d.involution));
        report.push(Check::holds(format!("({x}{y})⁶ = e"), d.product_order_six));
        report.push(Check::holds(
            format!("{x}{y}{x} = {x}·({x}{y})⁻¹"),
            d.reflection_relation,
        ));
    }
    report
}

pub fn atom_report() -> Report {
    let mut report = Report::new("3-cycle atoms");
    let atoms = three_cycle_atoms();
    report.push(Check::holds(
        "XYXY is a 3-cycle for X ≠ Y",
        atoms.all_three_cycles,
    ));
    report.push(Check::holds("YXYX inverts XYXY", atoms.reversal_inverts));
    report.push(Check::holds(
        "atoms are (3,4,7), (2,4,6), (5,6,7)",
        atoms.matches_named_cycles,
    ));
    for atom in &atoms.atoms {
        report.push(Check::info(atom.word.clone(), atom.cycle.clone()));
    }
    report
}

/// Letter counts mod 2 against blank displacement, and additivity, on
/// `samples` seeded random word pairs.
pub fn phi_report(samples: usize, seed: u64) -> Report {
    let mut report = Report::new("φ homomorphism");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let solved = VarikonConfig::solved();
    let mut displacement = true;
    let mut additive = true;
    for _ in 0..samples {
        let v = random_word(&mut rng, 40);
        let w = random_word(&mut rng, 40);
        let end = solved.apply_word(&v);
        displacement &=
            phi(&v) == ParityVector::between_cells(solved.blank_cell(), end.blank_cell());
        let vw: Vec<Move> = v.iter().chain(&w).copied().collect();
        additive &= phi(&vw) == phi(&v) + phi(&w);
    }
    report.push(Check::holds("φ(w) = blank displacement", displacement));
    report.push(Check::holds("φ(vw) = φ(v) + φ(w)", additive));
    report.push(Check::info("samples", samples));
    report
}

pub fn fifteen_report() -> Report {
    let mut report = Report::new("15-Puzzle");
    let fig2: FifteenConfig = FIFTEEN_UNSOLVABLE.parse().expect("valid config text");
    report.push(Check::equal(
        "(14,15) swap solvable",
        false,
        fig2.is_solvable(),
    ));
    report.push(Check::equal(
        "ι solvable",
        true,
        FifteenConfig::solved().is_solvable(),
    ));
    let solved = FifteenConfig::solved();
    for (word, expected) in [
        ("RU3R3U", "1,2,3,4,5,6,7,8,9,10,12,15,13,14,11,_"),
        ("U3R", "1,2,3,4,5,6,7,8,9,10,_,11,13,14,15,12"),
    ] {
        let w = parse_fifteen_word(word).expect("valid word");
        report.push(Check::equal(
            format!("ι·{word}"),
            expected.to_string(),
            solved.apply_word(&w).to_string(),
        ));
    }
    let family = verify_three_cycle_family();
    report.push(Check::equal("conjugated cycles", 13, family.rows.len()));
    report.push(Check::holds(
        "each is a 3-cycle (11,12,i)",
        family.all_three_cycles,
    ));
    report.push(Check::holds("third points are distinct", family.distinct));
    report.push(Check::holds(
        "third points cover all i ≠ 11,12",
        family.covers_all,
    ));
    report
}

/// Exhaustive heuristic sweep under `mode`/`policy`, plus the two worst-case
/// sub-problems solved against ι.
pub fn heuristic_report(mode: TargetMode, policy: SetupPolicy) -> Report {
    let mut report = Report::new("heuristic solver");
    let solver = match Solver::new(mode, policy) {
        Ok(s) => s,
        Err(e) => {
            report.push(Check::equal(
                "solver builds",
                "ok".to_string(),
                e.to_string(),
            ));
            return report;
        }
    };
    report.push(Check::info("target mode", mode));
    report.push(Check::info("setup policy", policy));
    match solver.compare_all() {
        Ok(cmp) => {
            let s = cmp.summary();
            report.push(Check::holds("every solution verified", s.all_verified));
            report.push(Check::equal("optimal max", 19, s.optimal.max));
            report.push(Check::holds(
                "heuristic-A6 ≥ optimal to the same target",
                cmp.rows.iter().all(|r| r.a6 >= r.a6_target_optimal),
            ));
            let over: Vec<String> = cmp
                .rows
                .iter()
                .filter(|r| r.a6 > 22)
                .map(|r| format!("{} ({})", r.config, r.a6))
                .collect();
            report.push(Check::equal(
                "configs with A6 total > 22",
                Vec::<String>::new(),
                over,
            ));
            report.push(Check::info("heuristic-A6 max", s.a6.max));
            report.push(Check::info("heuristic-A6 mean", s.a6.mean));
            report.push(Check::info("heuristic-A5 max", s.a5.max));
            report.push(Check::info("heuristic-A5 mean", s.a5.mean));
            report.push(Check::info("optimal mean", s.optimal.mean));
            report.push(Check::info("setup max", s.a6_setup_max));
        }
        Err(e) => {
            report.push(Check::equal("sweep", "ok".to_string(), e.to_string()));
        }
    }
    report.push(Check::info("shortest setup bound", solver.setup_bound()));
    report.push(Check::info(
        "shortest setup bound, piece 1 next to blank",
        solver.setup_bound_adjacent(),
    ));
    report.extend(worst_case_report());
    report
}

/// Word-phase lengths of the two worst-case sub-problems, solved to ι.
pub fn worst_case_report() -> Report {
    let mut report = Report::new("worst-case sub-problems");
    let solver = match Solver::new(TargetMode::Strict, SetupPolicy::Shortest) {
        Ok(s) => s,
        Err(e) => {
            report.push(Check::equal(
                "solver builds",
                "ok".to_string(),
                e.to_string(),
            ));
            return report;
        }
    };
    let cases = [(A6_WORST_CASE, 20, true), (A5_WORST_CASE, 24, false)];
    for (text, expected, a6) in cases {
        let c: VarikonConfig = text.parse().expect("valid config text");
        let (name, result) = if a6 {
            ("A6", solver.solve_heuristic_a6(&c))
        } else {
            ("A5", solver.solve_heuristic_a5(&c))
        };
        let computed = result.map(|s| s.word_phase_len()).ok();
        report.push(Check::equal(
            format!("{text} {name} word phase"),
            Some(expected),
            computed,
        ));
    }
    report
}

/// Every report, in a fixed order.
pub fn verify_all() -> Vec<Report> {
    let group = VarikonGroup::new();
    vec![
        enumeration_report(&group),
        group.verify_center(),
        group.verify_center_words(),
        group.verify_kernel(),
        group.verify_structure(),
        dihedral_report(),
        atom_report(),
        phi_report(10_000, 11),
        fifteen_report(),
        a5_report(&WordTable::a5()),
        a6_report(&WordTable::a6()),
        heuristic_report(TargetMode::Center, SetupPolicy::BestOrientation),
    ]
}
