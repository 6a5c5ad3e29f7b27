//! One line per acceptance criterion, PASS or FAIL, with the failing claims
//! listed underneath. Exact criteria; wall-clock limits as stated.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use varikon::fifteen::{FifteenConfig, FifteenMove};
use varikon::group::{histogram_csv, VarikonGroup};
use varikon::report::{Check, Report};
use varikon::solver::{SetupPolicy, TargetMode};
use varikon::varikon::{enumerate_reachable, parity_predicted, VarikonConfig};
use varikon::verify;
use varikon::words::{a5_report, a6_report, WordTable};
use varikon::DistanceTable;

const GOLDEN_HISTOGRAM: &str = include_str!("golden/depth_histogram.csv");

struct Outcome {
    id: usize,
    title: &'static str,
    report: Report,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Outcome {
    fn pass(&self) -> bool {
        self.report.pass() && self.limit.is_none_or(|l| self.elapsed <= l)
    }

    fn print(&self) {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        let limit = self
            .limit
            .map(|l| format!(" (limit {:.0?})", l))
            .unwrap_or_default();
        println!(
            "[{status}] criterion {:>2}: {} [{:.2?}{limit}]",
            self.id, self.title, self.elapsed
        );
        for c in self.report.failures() {
            println!(
                "         failed: {}: expected {} computed {}",
                c.claim, c.expected, c.computed
            );
        }
        if let Some(l) = self.limit {
            if self.elapsed > l {
                println!("         failed: over time limit");
            }
        }
    }
}

fn run(
    id: usize,
    title: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Report,
) -> Outcome {
    let start = Instant::now();
    let report = f();
    Outcome {
        id,
        title,
        report,
        elapsed: start.elapsed(),
        limit,
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn acceptance() {
    let group = VarikonGroup::new();
    let mut outcomes = Vec::new();

    outcomes.push(run(
        1,
        "20,160 reachable states = parity predicate",
        secs(1),
        || {
            let mut r = Report::new("reachable");
            let states = enumerate_reachable();
            let set: HashSet<VarikonConfig> = states.iter().copied().collect();
            r.push(Check::equal("states", 20160, states.len()));
            r.push(Check::equal("distinct", 20160, set.len()));
            r.push(Check::holds(
                "set equals parity predicate",
                set == parity_predicted().into_iter().collect(),
            ));
            r
        },
    ));

    outcomes.push(run(
        2,
        "God's number 19, golden depth histogram",
        secs(5),
        || {
            let mut r = Report::new("god");
            let table = DistanceTable::build();
            r.push(Check::equal("max depth", 19, table.max_depth()));
            r.push(Check::equal(
                "depth histogram",
                GOLDEN_HISTOGRAM.to_string(),
                histogram_csv(&table),
            ));
            r
        },
    ));

    outcomes.push(run(
        3,
        "|Z| = 4, Klein four, central words, half-turn images",
        None,
        || {
            let mut r = group.verify_center();
            r.extend(group.verify_center_words());
            let images: HashSet<String> = group
                .center()
                .iter()
                .map(|z| z.canon().to_string())
                .collect();
            let expected: HashSet<String> = [
                "1,2,3,4,5,6,7,_",
                "4,3,2,1,_,7,6,5",
                "6,5,_,7,2,1,4,3",
                "7,_,5,6,3,4,1,2",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            r.push(Check::holds("center images are ι and its half-turns", images == expected));
            r
        },
    ));

    outcomes.push(run(4, "|K| = 2,520 and K acts as A7", None, || {
        group.verify_kernel()
    }));

    outcomes.push(run(
        5,
        "G = K⟨R⟩ × Z with K⟨R⟩ ≅ S7",
        secs(60),
        || group.verify_structure(),
    ));

    outcomes.push(run(
        6,
        "dihedral subgroups of order 12",
        None,
        verify::dihedral_report,
    ));

    outcomes.push(run(
        7,
        "A5 word table",
        None,
        || a5_report(&WordTable::a5()),
    ));

    outcomes.push(run(
        8,
        "A6 word table",
        None,
        || a6_report(&WordTable::a6()),
    ));

    outcomes.push(run(
        9,
        "heuristic solver ≤ 22 moves, all verified",
        secs(60),
        || verify::heuristic_report(TargetMode::Center, SetupPolicy::BestOrientation),
    ));

    outcomes.push(run(
        10,
        "15-Puzzle parity, setup and corner words, 3-cycle family",
        None,
        || {
            let mut r = verify::fifteen_report();
            let mut rng = ChaCha8Rng::seed_from_u64(15);
            let mut cells: Vec<u8> = (0..16).collect();
            let mut ok = true;
            for _ in 0..1000 {
                cells.shuffle(&mut rng);
                let c = FifteenConfig::from_cells(cells.clone().try_into().unwrap()).unwrap();
                ok &= c.apply_word(&[FifteenMove::R; 4]) == c
                    && c.apply_word(&[FifteenMove::U; 4]) == c;
            }
            r.push(Check::holds("R⁴ = U⁴ = e on 1,000 random configs", ok));
            r
        },
    ));

    outcomes.push(run(
        11,
        "φ homomorphism on 10,000 random words",
        None,
        || verify::phi_report(10_000, 11),
    ));

    println!();
    for o in &outcomes {
        o.print();
    }
    let failed: Vec<usize> = outcomes
        .iter()
        .filter(|o| !o.pass())
        .map(|o| o.id)
        .collect();
    println!(
        "\n{} of {} criteria pass",
        outcomes.len() - failed.len(),
        outcomes.len()
    );
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
