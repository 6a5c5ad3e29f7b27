use std::sync::OnceLock;

use proptest::prelude::*;
use varikon::fifteen::{FifteenConfig, FifteenMove};
use varikon::lehmer::{lex_rank, lex_unrank, parity_rank, parity_unrank, seq_parity};
use varikon::perm::Perm;
use varikon::solver::{SetupPolicy, Solver, TargetMode};
use varikon::varikon::{phi, Move, ParityVector, Rotation, VarikonConfig, REACHABLE};
use varikon::words::WordTable;
use varikon::DistanceTable;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn reachable() -> impl Strategy<Value = VarikonConfig> {
    (0..REACHABLE).prop_map(VarikonConfig::unrank)
}

fn moves(max: usize) -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec(prop::sample::select(Move::ALL.to_vec()), 0..max)
}

fn table() -> &'static DistanceTable {
    static T: OnceLock<DistanceTable> = OnceLock::new();
    T.get_or_init(DistanceTable::build)
}

fn a6() -> &'static WordTable {
    static T: OnceLock<WordTable> = OnceLock::new();
    T.get_or_init(WordTable::a6)
}

fn solver() -> &'static Solver {
    static S: OnceLock<Solver> = OnceLock::new();
    S.get_or_init(|| Solver::new(TargetMode::Strict, SetupPolicy::Shortest).unwrap())
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(p in perm(9)) {
        let text = p.to_string();
        prop_assert_eq!(Perm::parse_cycles(&text, 9).unwrap(), p);
    }

    #[test]
    fn parity_is_a_homomorphism(p in perm(8), q in perm(8)) {
        prop_assert_eq!(p.compose(&q).unwrap().parity(), p.parity() ^ q.parity());
    }

    #[test]
    fn composition_is_associative(p in perm(7), q in perm(7), r in perm(7)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in perm(10)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.pow(p.order()), Perm::identity(10));
    }

    #[test]
    fn lehmer_round_trips(p in perm(7)) {
        let seq: Vec<u8> = p.images().iter().map(|&x| x as u8).collect();
        prop_assert_eq!(lex_unrank(7, lex_rank(&seq)), seq.clone());
        let parity = seq_parity(&seq);
        prop_assert_eq!(parity_unrank(7, parity_rank(&seq), parity), seq);
    }

    #[test]
    fn rank_round_trips(rank in 0..REACHABLE) {
        prop_assert_eq!(VarikonConfig::unrank(rank).rank(), rank);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fifteen_moves_have_order_four(p in perm(16)) {
        let c = FifteenConfig::from_perm(&p);
        prop_assert_eq!(c.apply_word(&[FifteenMove::R; 4]), c);
        prop_assert_eq!(c.apply_word(&[FifteenMove::U; 4]), c);
    }

    #[test]
    fn fifteen_solvability_is_move_invariant(p in perm(16), m in prop::bool::ANY) {
        let c = FifteenConfig::from_perm(&p);
        let step = if m { FifteenMove::R } else { FifteenMove::U };
        prop_assert_eq!(c.apply_move(step).is_solvable(), c.is_solvable());
    }
}

proptest! {
    #[test]
    fn action_is_compatible_with_concatenation(c in reachable(), v in moves(20), w in moves(20)) {
        let vw: Vec<Move> = v.iter().chain(&w).copied().collect();
        prop_assert_eq!(c.apply_word(&vw), c.apply_word(&v).apply_word(&w));
        prop_assert_eq!(c.apply_word(&[]), c);
    }

    #[test]
    fn moves_are_involutions_and_preserve_reachability(c in reachable()) {
        for m in Move::ALL {
            prop_assert_eq!(c.apply_move(m).apply_move(m), c);
            prop_assert!(c.apply_move(m).is_reachable());
        }
    }

    #[test]
    fn phi_tracks_the_blank(c in reachable(), w in moves(60)) {
        let end = c.apply_word(&w);
        prop_assert_eq!(phi(&w), ParityVector::between_cells(c.blank_cell(), end.blank_cell()));
    }

    #[test]
    fn rotation_commutes_with_moves(c in reachable(), r in 0usize..24, m in prop::sample::select(Move::ALL.to_vec())) {
        let rot = Rotation::all()[r];
        prop_assert_eq!(c.apply_move(m).rotate(&rot), c.rotate(&rot).apply_move(rot.map_move(m)));
    }

    #[test]
    fn neighbouring_depths_differ_by_one(c in reachable()) {
        let d = table().depth(&c) as i64;
        for m in Move::ALL {
            prop_assert_eq!((table().depth(&c.apply_move(m)) as i64 - d).abs(), 1);
        }
    }

    #[test]
    fn word_length_is_inverse_invariant(i in 0usize..360) {
        let p = &a6().elements()[i];
        prop_assert_eq!(a6().length(p), a6().length(&p.inverse()));
    }

    #[test]
    fn word_length_triangle_inequality(i in 0usize..360, j in 0usize..360) {
        let p = &a6().elements()[i];
        let q = &a6().elements()[j];
        let pq = p.compose(q).unwrap();
        prop_assert!(a6().length(&pq).unwrap() <= a6().length(p).unwrap() + a6().length(q).unwrap());
    }

    #[test]
    fn heuristic_solutions_reach_solved(c in reachable()) {
        let s = solver();
        let optimal = s.solve_optimal(&c).unwrap();
        for sol in [s.solve_heuristic_a6(&c).unwrap(), s.solve_heuristic_a5(&c).unwrap()] {
            prop_assert_eq!(c.apply_word(&sol.moves), VarikonConfig::solved());
            prop_assert_eq!(sol.word_phase_len() % 4, 0);
            prop_assert!(sol.length >= optimal.length);
        }
        prop_assert_eq!(optimal.length, table().depth(&c));
    }
}
